#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pfh/cli.hpp"

using pfh::run_command;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decompose emits the verified decomposition as json") {
  const CliRun run = cli({"decompose", "--family", "theorem", "--n", "2", "--lambda", "2",
                          "--mu", "0", "--format", "json"});
  REQUIRE(run.status == 0);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["verified"] == "true");
  const auto& terms = doc["pfd"]["terms"];
  REQUIRE(terms.size() == 3);
  CHECK(terms[0]["root"] == "-2");
  CHECK(terms[0]["coeffs"] == nlohmann::json::array({"3", "1"}));
  CHECK(terms[1]["root"] == "-1");
  CHECK(terms[1]["coeffs"] == nlohmann::json::array({"0", "4"}));
  CHECK(terms[2]["root"] == "0");
  CHECK(terms[2]["coeffs"] == nlohmann::json::array({"-3", "1"}));
}

TEST_CASE("decompose exit codes track verification") {
  CHECK(cli({"decompose", "--family", "beukers6", "--n", "2", "--mode", "printed"}).status == 1);
  CHECK(cli({"decompose", "--family", "beukers6", "--n", "2", "--mode", "corrected"}).status ==
        0);
  CHECK(cli({"decompose", "--family", "beukers6", "--n", "2", "--mode", "printed",
             "--no-verify"})
            .status == 0);
  CHECK(cli({"decompose", "--family", "theta", "--n", "1", "--theta", "9"}).status == 2);
}

TEST_CASE("identities suite runs and reports failures") {
  const CliRun printed =
      cli({"identities", "--suite", "beukers", "--mode", "printed", "--n", "2"});
  CHECK(printed.status == 1);
  CHECK(printed.out.find("216") != std::string::npos);
  CHECK(printed.out.find("FAIL") != std::string::npos);

  const CliRun corrected =
      cli({"identities", "--suite", "beukers", "--mode", "corrected", "--n", "1..6"});
  CHECK(corrected.status == 0);

  const CliRun json_run = cli(
      {"identities", "--suite", "example7", "--n", "0..4", "--format", "json"});
  CHECK(json_run.status == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["reports"].size() == 5);

  const CliRun mixed =
      cli({"identities", "--suite", "mixed", "--family", "ex9", "--n", "1..3"});
  CHECK(mixed.status == 0);
}

TEST_CASE("decompose latex and text formats") {
  const CliRun latex = cli({"decompose", "--family", "theorem", "--n", "1", "--lambda", "1",
                            "--mu", "0", "--format", "latex"});
  CHECK(latex.status == 0);
  CHECK(latex.out == "\\frac{-1}{x+1} + \\frac{1}{x}\n");

  const CliRun text = cli({"decompose", "--family", "ex7", "--n", "1", "--format", "text"});
  CHECK(text.status == 0);
  CHECK(text.out.find("polynomial part: 1") != std::string::npos);
  CHECK(text.out.find("verified against oracle") != std::string::npos);

  const CliRun unknown = cli({"decompose", "--family", "theorem", "--n", "1", "--lambda", "1",
                              "--format", "yaml"});
  CHECK(unknown.status == 2);
}

TEST_CASE("remaining identity suites run from the command line") {
  CHECK(cli({"identities", "--suite", "hardest", "--n", "0..12"}).status == 0);
  CHECK(cli({"identities", "--suite", "corollary", "--n", "1..4", "--lambda", "1..3",
             "--mu", "0..3"})
            .status == 0);
  CHECK(cli({"identities", "--suite", "mixed", "--family", "ex10", "--n", "1..3"}).status == 0);
  CHECK(cli({"identities", "--suite", "theta", "--n", "1", "--theta", "0..3"}).status == 0);
}

TEST_CASE("tables subcommand") {
  const CliRun latex =
      cli({"tables", "--kind", "omega", "--ell-max", "5", "--format", "latex"});
  CHECK(latex.status == 0);
  CHECK(latex.out.find("\\Omega_{5}(\\lambda,\\mu,-k)") != std::string::npos);

  const CliRun json_run =
      cli({"tables", "--kind", "varpi", "--ell-max", "2", "--format", "json"});
  CHECK(json_run.status == 0);
  const auto doc = nlohmann::json::parse(json_run.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[2]["ell"] == 2);

  CHECK(cli({"tables", "--kind", "omega", "--format", "html"}).status == 2);
  CHECK(cli({"tables", "--kind", "nonsense"}).status == 2);
}

TEST_CASE("usage errors exit with 2 and print usage") {
  const CliRun bad = cli({"decompose", "--family", "theorem"});
  CHECK(bad.status == 2);
  CHECK(!bad.err.empty());

  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"identities", "--suite", "nonsense", "--n", "2"}).status == 2);
  CHECK(cli({"identities", "--suite", "corollary", "--n", "x..y"}).status == 2);

  const CliRun help = cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("byte-identical output for identical argv") {
  const std::vector<std::string> args = {"decompose", "--family", "ex9",  "--n",
                                         "3",         "--format", "json"};
  const CliRun first = cli(args);
  const CliRun second = cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);

  const std::vector<std::string> table_args = {"tables", "--kind", "omega_small",
                                               "--ell-max", "4", "--format", "latex"};
  CHECK(cli(table_args).out == cli(table_args).out);

  const std::vector<std::string> suite_args = {"identities", "--suite", "theta", "--n",
                                               "0..2", "--format", "json"};
  CHECK(cli(suite_args).out == cli(suite_args).out);
}

TEST_CASE("output lands in a file when requested") {
  const std::string path = "cli_test_output.json";
  std::remove(path.c_str());
  const CliRun run = cli({"decompose", "--family", "theorem", "--n", "1", "--lambda", "1",
                          "--mu", "0", "--output", path});
  CHECK(run.status == 0);
  CHECK(run.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  const auto doc = nlohmann::json::parse(content.str());
  CHECK(doc["pfd"]["terms"].size() == 2);
  file.close();
  std::remove(path.c_str());
}
