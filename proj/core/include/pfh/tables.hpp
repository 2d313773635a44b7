#ifndef PFH_TABLES_HPP
#define PFH_TABLES_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "pfh/sympoly.hpp"

namespace pfh {

enum class TableKind { kOmega, kVarpi, kOmegaSmall };
enum class TableFormat { kJson, kLatex };

TableKind parse_table_kind(const std::string& name);
TableFormat parse_table_format(const std::string& name);

// Rows 0..ell_max of the coefficient table for one kind. JSON carries the
// canonical polynomial (the varpi / omega_small rows are the M = 0 / L = 0
// specializations); LaTeX renders the grouped-bracket layout the reference
// tables use, one bracket product per partition.
std::string emit_table(TableKind kind, unsigned ell_max, TableFormat format);

// Coefficient polynomial of one table row, specialized per kind.
SymPoly table_row_poly(TableKind kind, unsigned ell);

// Comparison of the computed rows against the transcribed reference tables,
// carried out structurally on polynomials in the harmonic symbols
// H_k^(i), H_{n-k}^(i), H_{n+k}^(i) (never on strings). A mismatch is
// reported with both forms and their difference rather than silently fixed.
struct TableEntryCheck {
  TableKind kind = TableKind::kOmega;
  unsigned ell = 0;
  bool match = false;
  nlohmann::json computed;
  nlohmann::json printed;
  nlohmann::json difference;
};

struct TableCheck {
  std::vector<TableEntryCheck> entries;
  bool all_match = true;
};

TableCheck check_reference_tables();
nlohmann::json table_check_json(const TableCheck& check);

}  // namespace pfh

#endif  // PFH_TABLES_HPP
