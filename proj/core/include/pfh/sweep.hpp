#ifndef PFH_SWEEP_HPP
#define PFH_SWEEP_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace pfh {

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SweepReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = true;
};

// Runs the full verification sweep: theorem-vs-oracle equivalence, the
// printed low-order specializations, every harmonic-number identity family,
// the symbolic proof-core equalities, the reference-table comparison, the
// evaluation certificates with injected-fault detection, and a byte-level
// determinism check of the report itself (which reruns the whole batch).
SweepReport run_acceptance_sweep(unsigned workers = 0);

nlohmann::json sweep_report_json(const SweepReport& report);

// One line per criterion, "PASS  3  corollary-vanishing  (detail)" style.
std::string sweep_report_text(const SweepReport& report);

}  // namespace pfh

#endif  // PFH_SWEEP_HPP
