#include <doctest.h>

#include <json.hpp>

#include "pfh/tables.hpp"

using pfh::TableCheck;
using pfh::check_reference_tables;
using pfh::emit_table;
using pfh::parse_table_format;
using pfh::parse_table_kind;
using pfh::TableFormat;
using pfh::TableKind;

TEST_CASE("kind and format parsing") {
  CHECK(parse_table_kind("omega") == TableKind::kOmega);
  CHECK(parse_table_kind("varpi") == TableKind::kVarpi);
  CHECK(parse_table_kind("omega_small") == TableKind::kOmegaSmall);
  CHECK_THROWS_AS(parse_table_kind("sigma"), std::invalid_argument);
  CHECK(parse_table_format("json") == TableFormat::kJson);
  CHECK(parse_table_format("latex") == TableFormat::kLatex);
  CHECK_THROWS_AS(parse_table_format("html"), std::invalid_argument);
}

TEST_CASE("json table of the constant row") {
  const auto doc = nlohmann::json::parse(emit_table(TableKind::kOmega, 0, TableFormat::kJson));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["ell"] == 0);
  REQUIRE(doc[0]["terms"].size() == 1);
  CHECK(doc[0]["terms"][0]["coefficient"] == "1");
  CHECK(doc[0]["terms"][0]["monomial"]["L"] == 0);
  CHECK(doc[0]["terms"][0]["monomial"]["M"] == 0);
}

TEST_CASE("latex rendering shows the grouped brackets") {
  const std::string varpi1 = emit_table(TableKind::kVarpi, 1, TableFormat::kLatex);
  CHECK(varpi1.find("\\varpi_{1}(\\lambda,-k)") != std::string::npos);
  CHECK(varpi1.find("\\lambda\\,\\Big\\{H_{k}-H_{n-k}\\Big\\}") != std::string::npos);

  const std::string omega5 = emit_table(TableKind::kOmega, 5, TableFormat::kLatex);
  CHECK(omega5.find("\\Omega_{5}(\\lambda,\\mu,-k)") != std::string::npos);
  CHECK(omega5.find("24\\,") != std::string::npos);

  // byte-stable output
  CHECK(omega5 == emit_table(TableKind::kOmega, 5, TableFormat::kLatex));
  CHECK(emit_table(TableKind::kOmegaSmall, 4, TableFormat::kJson) ==
        emit_table(TableKind::kOmegaSmall, 4, TableFormat::kJson));
}

TEST_CASE("computed tables match the transcribed reference tables") {
  const TableCheck check = check_reference_tables();
  CHECK(check.entries.size() == 18);
  for (const auto& entry : check.entries) {
    CAPTURE(static_cast<int>(entry.kind));
    CAPTURE(entry.ell);
    CHECK(entry.match);
  }
  CHECK(check.all_match);

  const auto report = pfh::table_check_json(check);
  CHECK(report["all_match"] == true);
  CHECK(report["entries"].size() == 18);
}
