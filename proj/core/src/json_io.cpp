#include "pfh/json_io.hpp"

namespace pfh {

using nlohmann::json;

json rational_json(const Rational& value) { return value.to_string(); }

json polynomial_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coefficients()) {
    coeffs.push_back(rational_json(c));
  }
  return coeffs;
}

json spec_json(const RationalFunctionSpec& spec) {
  json poles = json::array();
  for (const auto& p : spec.poles) {
    poles.push_back({{"root", rational_json(p.root)}, {"mult", p.multiplicity}});
  }
  return {{"scalar", rational_json(spec.scalar)},
          {"numerator", polynomial_json(spec.numerator)},
          {"poles", poles}};
}

json pfd_json(const PFDResult& pfd) {
  json terms = json::array();
  for (const auto& [root, coeffs] : pfd.terms) {
    json c = json::array();
    for (const Rational& value : coeffs) {
      c.push_back(rational_json(value));
    }
    terms.push_back({{"root", rational_json(root)}, {"coeffs", c}});
  }
  return {{"polynomial_part", polynomial_json(pfd.polynomial_part)}, {"terms", terms}};
}

json identity_report_json(const IdentityReport& report) {
  json params = json::object();
  for (const auto& [name, value] : report.params) {
    params[name] = value;
  }
  return {{"id", report.id},
          {"params", params},
          {"computed", rational_json(report.computed)},
          {"expected", rational_json(report.expected)},
          {"verdict", report.pass ? "pass" : "fail"}};
}

json suite_result_json(const SuiteResult& result) {
  json reports = json::array();
  for (const auto& report : result.reports) {
    reports.push_back(identity_report_json(report));
  }
  return {{"reports", reports}, {"all_pass", result.all_pass}};
}

json sympoly_terms_json(const SymPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    unsigned l_exp = 0;
    unsigned m_exp = 0;
    unsigned max_depth = 0;
    for (const auto& [var, exp] : mono) {
      if (var == omega_vars::kL) {
        l_exp = exp;
      } else if (var == omega_vars::kM) {
        m_exp = exp;
      } else {
        max_depth = std::max(max_depth, omega_vars::depth(var));
      }
    }
    std::vector<unsigned> g_exp(max_depth, 0);
    std::vector<unsigned> h_exp(max_depth, 0);
    for (const auto& [var, exp] : mono) {
      if (omega_vars::is_g(var)) {
        g_exp[omega_vars::depth(var) - 1] = exp;
      } else if (omega_vars::is_h(var)) {
        h_exp[omega_vars::depth(var) - 1] = exp;
      }
    }
    terms.push_back({{"coefficient", rational_json(coeff)},
                     {"monomial", {{"L", l_exp}, {"M", m_exp}, {"g", g_exp}, {"h", h_exp}}}});
  }
  return terms;
}

}  // namespace pfh
