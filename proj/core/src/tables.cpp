#include "pfh/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "pfh/json_io.hpp"
#include "pfh/partitions.hpp"

namespace pfh {

namespace {

using nlohmann::json;

// Variable ids for polynomials in the harmonic symbols themselves:
// lambda < mu < H_k^(1) < H_{n-k}^(1) < H_{n+k}^(1) < H_k^(2) < ...
// Used only for the structural comparison against the reference tables.
namespace hvars {
constexpr unsigned kLambda = 0;
constexpr unsigned kMu = 1;
unsigned hk(unsigned i) { return 3 * i - 1; }
unsigned hnk(unsigned i) { return 3 * i; }
unsigned hpk(unsigned i) { return 3 * i + 1; }
}  // namespace hvars

SymPoly hp_lambda() { return SymPoly::variable(hvars::kLambda); }
SymPoly hp_mu() { return SymPoly::variable(hvars::kMu); }
SymPoly hp_hk(unsigned i) { return SymPoly::variable(hvars::hk(i)); }
SymPoly hp_hnk(unsigned i) { return SymPoly::variable(hvars::hnk(i)); }
SymPoly hp_hpk(unsigned i) { return SymPoly::variable(hvars::hpk(i)); }
SymPoly hp_const(long c) { return SymPoly::constant(Rational(c)); }

// Transliteration of the computed coefficient ring into harmonic symbols:
// g_i carries H_{n-k}^(i) + (-1)^i H_k^(i), h_i carries H_{n+k}^(i) - H_k^(i).
SymPoly to_harmonic_symbols(const SymPoly& p) {
  std::map<unsigned, SymPoly> replacements;
  replacements.emplace(omega_vars::kL, hp_lambda());
  replacements.emplace(omega_vars::kM, hp_mu());
  for (unsigned var : p.variables_used()) {
    if (omega_vars::is_g(var)) {
      const unsigned i = omega_vars::depth(var);
      const SymPoly hk_part =
          (i % 2 == 0) ? hp_hk(i) : hp_hk(i).scaled(Rational(-1));
      replacements.emplace(var, hp_hnk(i) + hk_part);
    } else if (omega_vars::is_h(var)) {
      const unsigned i = omega_vars::depth(var);
      replacements.emplace(var, hp_hpk(i) - hp_hk(i));
    }
  }
  return p.substitute(replacements);
}

// --- transcription of the printed tables, sign for sign -------------------

// {lambda (H_k^(i) -+ H_{n-k}^(i)) + mu (H_k^(i) - H_{n+k}^(i))}
SymPoly printed_full_bracket(unsigned i) {
  const SymPoly nk_part =
      (i % 2 == 0) ? hp_hk(i) + hp_hnk(i) : hp_hk(i) - hp_hnk(i);
  return hp_lambda() * nk_part + hp_mu() * (hp_hk(i) - hp_hpk(i));
}

// {H_k^(i) -+ H_{n-k}^(i)}
SymPoly printed_nk_bracket(unsigned i) {
  return (i % 2 == 0) ? hp_hk(i) + hp_hnk(i) : hp_hk(i) - hp_hnk(i);
}

// {H_k^(i) - H_{n+k}^(i)}
SymPoly printed_pk_bracket(unsigned i) { return hp_hk(i) - hp_hpk(i); }

SymPoly printed_omega_entry(unsigned ell) {
  const SymPoly b1 = printed_full_bracket(1);
  const SymPoly b2 = printed_full_bracket(2);
  const SymPoly b3 = printed_full_bracket(3);
  const SymPoly b4 = printed_full_bracket(4);
  const SymPoly b5 = printed_full_bracket(5);
  switch (ell) {
    case 0:
      return hp_const(1);
    case 1:
      return b1;
    case 2:
      return b1.pow(2) + hp_lambda() * (hp_hk(2) + hp_hnk(2)) +
             hp_mu() * (hp_hk(2) - hp_hpk(2));
    case 3:
      return b1.pow(3) + hp_const(2) * b3 + hp_const(3) * b1 * b2;
    case 4:
      return b1.pow(4) + hp_const(6) * b4 + hp_const(8) * b1 * b3 +
             hp_const(6) * b1.pow(2) * b2 + hp_const(3) * b2.pow(2);
    case 5:
      return b1.pow(5) + hp_const(24) * b5 + hp_const(10) * b1.pow(3) * b2 +
             hp_const(20) * b1.pow(2) * b3 + hp_const(15) * b1 * b2.pow(2) +
             hp_const(30) * b1 * b4 + hp_const(20) * b2 * b3;
    default:
      throw std::invalid_argument("printed_omega_entry: tables stop at ell = 5");
  }
}

SymPoly printed_varpi_entry(unsigned ell) {
  const SymPoly lam = hp_lambda();
  const SymPoly a1 = printed_nk_bracket(1);
  const SymPoly a2 = printed_nk_bracket(2);
  const SymPoly a3 = printed_nk_bracket(3);
  const SymPoly a4 = printed_nk_bracket(4);
  const SymPoly a5 = printed_nk_bracket(5);
  switch (ell) {
    case 0:
      return hp_const(1);
    case 1:
      return lam * a1;
    case 2:
      return lam.pow(2) * a1.pow(2) + lam * a2;
    case 3:
      return lam.pow(3) * a1.pow(3) + hp_const(2) * lam * a3 +
             hp_const(3) * lam.pow(2) * a1 * a2;
    case 4:
      return lam.pow(4) * a1.pow(4) + hp_const(6) * lam * a4 +
             hp_const(8) * lam.pow(2) * a1 * a3 + hp_const(6) * lam.pow(3) * a1.pow(2) * a2 +
             hp_const(3) * lam.pow(2) * a2.pow(2);
    case 5:
      return lam.pow(5) * a1.pow(5) + hp_const(24) * lam * a5 +
             hp_const(10) * lam.pow(4) * a1.pow(3) * a2 +
             hp_const(20) * lam.pow(3) * a1.pow(2) * a3 +
             hp_const(15) * lam.pow(3) * a1 * a2.pow(2) + hp_const(30) * lam.pow(2) * a1 * a4 +
             hp_const(20) * lam.pow(2) * a2 * a3;
    default:
      throw std::invalid_argument("printed_varpi_entry: tables stop at ell = 5");
  }
}

SymPoly printed_omega_small_entry(unsigned ell) {
  const SymPoly mu = hp_mu();
  const SymPoly c1 = printed_pk_bracket(1);
  const SymPoly c2 = printed_pk_bracket(2);
  const SymPoly c3 = printed_pk_bracket(3);
  const SymPoly c4 = printed_pk_bracket(4);
  const SymPoly c5 = printed_pk_bracket(5);
  switch (ell) {
    case 0:
      return hp_const(1);
    case 1:
      return mu * c1;
    case 2:
      return mu.pow(2) * c1.pow(2) + mu * c2;
    case 3:
      return mu.pow(3) * c1.pow(3) + hp_const(2) * mu * c3 + hp_const(3) * mu.pow(2) * c1 * c2;
    case 4:
      return mu.pow(4) * c1.pow(4) + hp_const(6) * mu * c4 + hp_const(8) * mu.pow(2) * c1 * c3 +
             hp_const(6) * mu.pow(3) * c1.pow(2) * c2 + hp_const(3) * mu.pow(2) * c2.pow(2);
    case 5:
      return mu.pow(5) * c1.pow(5) + hp_const(24) * mu * c5 +
             hp_const(10) * mu.pow(4) * c1.pow(3) * c2 +
             hp_const(20) * mu.pow(3) * c1.pow(2) * c3 +
             hp_const(15) * mu.pow(3) * c1 * c2.pow(2) + hp_const(30) * mu.pow(2) * c1 * c4 +
             hp_const(20) * mu.pow(2) * c2 * c3;
    default:
      throw std::invalid_argument("printed_omega_small_entry: tables stop at ell = 5");
  }
}

SymPoly printed_entry(TableKind kind, unsigned ell) {
  switch (kind) {
    case TableKind::kOmega:
      return printed_omega_entry(ell);
    case TableKind::kVarpi:
      return printed_varpi_entry(ell);
    case TableKind::kOmegaSmall:
      return printed_omega_small_entry(ell);
  }
  throw std::invalid_argument("printed_entry: unknown table kind");
}

json hpoly_terms_json(const SymPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    unsigned lambda_exp = 0;
    unsigned mu_exp = 0;
    unsigned max_depth = 0;
    for (const auto& [var, exp] : mono) {
      if (var == hvars::kLambda) {
        lambda_exp = exp;
      } else if (var == hvars::kMu) {
        mu_exp = exp;
      } else {
        max_depth = std::max(max_depth, (var + 1) / 3);
      }
    }
    std::vector<unsigned> hk(max_depth, 0);
    std::vector<unsigned> hnk(max_depth, 0);
    std::vector<unsigned> hpk(max_depth, 0);
    for (const auto& [var, exp] : mono) {
      if (var < 2) {
        continue;
      }
      const unsigned i = (var + 1) / 3;
      if (var == hvars::hk(i)) {
        hk[i - 1] = exp;
      } else if (var == hvars::hnk(i)) {
        hnk[i - 1] = exp;
      } else {
        hpk[i - 1] = exp;
      }
    }
    terms.push_back({{"coefficient", rational_json(coeff)},
                     {"monomial",
                      {{"lambda", lambda_exp},
                       {"mu", mu_exp},
                       {"Hk", hk},
                       {"Hnk", hnk},
                       {"Hpk", hpk}}}});
  }
  return terms;
}

// --- LaTeX rendering -------------------------------------------------------

std::string latex_harmonic(const char* subscript, unsigned i) {
  std::ostringstream os;
  os << "H";
  if (i > 1) {
    os << "^{\\langle " << i << "\\rangle}";
  }
  os << "_{" << subscript << "}";
  return os.str();
}

std::string latex_bracket(TableKind kind, unsigned i) {
  const char* nk_sign = (i % 2 == 0) ? "+" : "-";
  std::ostringstream os;
  switch (kind) {
    case TableKind::kOmega:
      os << "\\lambda\\big(" << latex_harmonic("k", i) << nk_sign << latex_harmonic("n-k", i)
         << "\\big)+\\mu\\big(" << latex_harmonic("k", i) << "-" << latex_harmonic("n+k", i)
         << "\\big)";
      break;
    case TableKind::kVarpi:
      os << latex_harmonic("k", i) << nk_sign << latex_harmonic("n-k", i);
      break;
    case TableKind::kOmegaSmall:
      os << latex_harmonic("k", i) << "-" << latex_harmonic("n+k", i);
      break;
  }
  return os.str();
}

std::string latex_row_label(TableKind kind, unsigned ell) {
  std::ostringstream os;
  switch (kind) {
    case TableKind::kOmega:
      os << "\\Omega_{" << ell << "}(\\lambda,\\mu,-k)";
      break;
    case TableKind::kVarpi:
      os << "\\varpi_{" << ell << "}(\\lambda,-k)";
      break;
    case TableKind::kOmegaSmall:
      os << "\\omega_{" << ell << "}(\\mu,-k)";
      break;
  }
  return os.str();
}

std::string latex_row(TableKind kind, unsigned ell) {
  std::ostringstream os;
  os << latex_row_label(kind, ell) << " = ";
  if (ell == 0) {
    os << "1";
    return os.str();
  }
  bool first = true;
  for (const Partition& p : enumerate_partitions(ell)) {
    Rational coeff(factorial(ell));
    for (unsigned i = 1; i <= ell; ++i) {
      const unsigned m = p.multiplicity[i - 1];
      if (m != 0) {
        coeff /= Rational(factorial(m)) * Rational(static_cast<long>(i)).pow(m);
      }
    }
    if (!first) {
      os << " + ";
    }
    first = false;
    if (!(coeff == Rational(1))) {
      os << coeff.to_string() << "\\,";
    }
    if (kind == TableKind::kVarpi && p.parts > 0) {
      os << "\\lambda" << (p.parts > 1 ? "^{" + std::to_string(p.parts) + "}" : "");
    } else if (kind == TableKind::kOmegaSmall && p.parts > 0) {
      os << "\\mu" << (p.parts > 1 ? "^{" + std::to_string(p.parts) + "}" : "");
    }
    bool first_factor = true;
    for (unsigned i = 1; i <= ell; ++i) {
      const unsigned m = p.multiplicity[i - 1];
      if (m == 0) {
        continue;
      }
      if (!first_factor || kind != TableKind::kOmega) {
        os << "\\,";
      }
      first_factor = false;
      os << "\\Big\\{" << latex_bracket(kind, i) << "\\Big\\}";
      if (m > 1) {
        os << "^{" << m << "}";
      }
    }
  }
  return os.str();
}

}  // namespace

TableKind parse_table_kind(const std::string& name) {
  if (name == "omega") {
    return TableKind::kOmega;
  }
  if (name == "varpi") {
    return TableKind::kVarpi;
  }
  if (name == "omega_small") {
    return TableKind::kOmegaSmall;
  }
  throw std::invalid_argument("unknown table kind '" + name + "'");
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "json") {
    return TableFormat::kJson;
  }
  if (name == "latex") {
    return TableFormat::kLatex;
  }
  throw std::invalid_argument("unknown table format '" + name + "'");
}

SymPoly table_row_poly(TableKind kind, unsigned ell) {
  SymPoly omega = omega_symbolic(ell, OmegaMethod::kPartitionSum);
  switch (kind) {
    case TableKind::kOmega:
      return omega;
    case TableKind::kVarpi:
      return omega.substitute({{omega_vars::kM, SymPoly()}});
    case TableKind::kOmegaSmall:
      return omega.substitute({{omega_vars::kL, SymPoly()}});
  }
  throw std::invalid_argument("table_row_poly: unknown table kind");
}

std::string emit_table(TableKind kind, unsigned ell_max, TableFormat format) {
  if (format == TableFormat::kJson) {
    json rows = json::array();
    for (unsigned ell = 0; ell <= ell_max; ++ell) {
      rows.push_back({{"ell", ell}, {"terms", sympoly_terms_json(table_row_poly(kind, ell))}});
    }
    return rows.dump(2) + "\n";
  }
  std::ostringstream os;
  for (unsigned ell = 0; ell <= ell_max; ++ell) {
    os << latex_row(kind, ell) << "\n";
  }
  return os.str();
}

TableCheck check_reference_tables() {
  TableCheck check;
  for (const TableKind kind :
       {TableKind::kOmega, TableKind::kVarpi, TableKind::kOmegaSmall}) {
    for (unsigned ell = 0; ell <= 5; ++ell) {
      TableEntryCheck entry;
      entry.kind = kind;
      entry.ell = ell;
      const SymPoly computed = to_harmonic_symbols(table_row_poly(kind, ell));
      const SymPoly printed = printed_entry(kind, ell);
      entry.match = computed == printed;
      entry.computed = hpoly_terms_json(computed);
      entry.printed = hpoly_terms_json(printed);
      entry.difference = hpoly_terms_json(computed - printed);
      check.all_match = check.all_match && entry.match;
      check.entries.push_back(std::move(entry));
    }
  }
  return check;
}

nlohmann::json table_check_json(const TableCheck& check) {
  json entries = json::array();
  for (const auto& entry : check.entries) {
    const char* kind_name = entry.kind == TableKind::kOmega        ? "omega"
                            : entry.kind == TableKind::kVarpi      ? "varpi"
                                                                   : "omega_small";
    json item = {{"kind", kind_name}, {"ell", entry.ell}, {"match", entry.match}};
    if (!entry.match) {
      item["computed"] = entry.computed;
      item["printed"] = entry.printed;
      item["difference"] = entry.difference;
    }
    entries.push_back(std::move(item));
  }
  return {{"entries", entries}, {"all_match", check.all_match}};
}

}  // namespace pfh
