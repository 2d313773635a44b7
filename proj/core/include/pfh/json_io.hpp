#ifndef PFH_JSON_IO_HPP
#define PFH_JSON_IO_HPP

#include <json.hpp>

#include "pfh/identities.hpp"
#include "pfh/pfd.hpp"
#include "pfh/sympoly.hpp"

namespace pfh {

nlohmann::json rational_json(const Rational& value);
nlohmann::json polynomial_json(const Polynomial& p);
nlohmann::json spec_json(const RationalFunctionSpec& spec);
nlohmann::json pfd_json(const PFDResult& pfd);
nlohmann::json identity_report_json(const IdentityReport& report);
nlohmann::json suite_result_json(const SuiteResult& result);

// Terms of a coefficient-ring polynomial as
// [{coefficient: "p/q", monomial: {L: e, M: e, g: [...], h: [...]}}, ...]
// with the g/h arrays dense from depth 1.
nlohmann::json sympoly_terms_json(const SymPoly& p);

}  // namespace pfh

#endif  // PFH_JSON_IO_HPP
