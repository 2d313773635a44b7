#include <doctest.h>

#include <json.hpp>

#include "pfh/json_io.hpp"
#include "pfh/pfd.hpp"
#include "pfh/sympoly.hpp"

using nlohmann::json;
using pfh::Rational;

TEST_CASE("rational function spec schema") {
  pfh::FamilyParams params;
  params.family = pfh::Family::kBeukers6;
  params.n = 1;
  const json doc = pfh::spec_json(pfh::build_family_spec(params));

  CHECK(doc["scalar"] == "1");
  CHECK(doc["numerator"] == json::array({"0", "1", "-2", "1"}));  // x (1-x)^2
  REQUIRE(doc["poles"].size() == 2);
  CHECK(doc["poles"][0]["root"] == "-1");
  CHECK(doc["poles"][0]["mult"] == 2);
  CHECK(doc["poles"][1]["root"] == "0");
  CHECK(doc["poles"][1]["mult"] == 2);
}

TEST_CASE("decomposition schema") {
  const json doc = pfh::pfd_json(pfh::theorem_decompose(1, 1, 0));
  CHECK(doc["polynomial_part"] == json::array());
  REQUIRE(doc["terms"].size() == 2);
  CHECK(doc["terms"][0] == json({{"root", "-1"}, {"coeffs", {"-1"}}}));
  CHECK(doc["terms"][1] == json({{"root", "0"}, {"coeffs", {"1"}}}));
}

TEST_CASE("identity report schema") {
  pfh::IdentityReport report;
  report.id = "example7";
  report.params = {{"n", 3}};
  report.computed = Rational(12);
  report.expected = Rational(12);
  report.pass = true;
  const json doc = pfh::identity_report_json(report);
  CHECK(doc["id"] == "example7");
  CHECK(doc["params"]["n"] == 3);
  CHECK(doc["computed"] == "12");
  CHECK(doc["expected"] == "12");
  CHECK(doc["verdict"] == "pass");

  report.expected = Rational(0);
  report.pass = false;
  CHECK(pfh::identity_report_json(report)["verdict"] == "fail");
}

TEST_CASE("coefficient-ring term schema") {
  const json terms =
      pfh::sympoly_terms_json(pfh::omega_symbolic(1, pfh::OmegaMethod::kPartitionSum));
  REQUIRE(terms.size() == 2);
  // canonical order puts the M h_1 monomial before L g_1
  CHECK(terms[0]["coefficient"] == "-1");
  CHECK(terms[0]["monomial"] ==
        json({{"L", 0}, {"M", 1}, {"g", {0}}, {"h", {1}}}));
  CHECK(terms[1]["coefficient"] == "-1");
  CHECK(terms[1]["monomial"] ==
        json({{"L", 1}, {"M", 0}, {"g", {1}}, {"h", {0}}}));

  const json constant =
      pfh::sympoly_terms_json(pfh::omega_symbolic(0, pfh::OmegaMethod::kPartitionSum));
  REQUIRE(constant.size() == 1);
  CHECK(constant[0]["monomial"]["g"] == json::array());
  CHECK(constant[0]["monomial"]["h"] == json::array());
}
