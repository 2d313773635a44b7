#include "pfh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pfh/identities.hpp"
#include "pfh/json_io.hpp"
#include "pfh/parallel.hpp"
#include "pfh/pfd.hpp"
#include "pfh/sweep.hpp"
#include "pfh/tables.hpp"

namespace pfh {

namespace {

Family parse_family(const std::string& name) {
  if (name == "theorem") return Family::kTheorem;
  if (name == "beukers6") return Family::kBeukers6;
  if (name == "ex7") return Family::kExample7;
  if (name == "ex8") return Family::kExample8;
  if (name == "ex9") return Family::kExample9;
  if (name == "ex10") return Family::kExample10;
  if (name == "theta") return Family::kTheta;
  throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

ErratumMode parse_mode(const std::string& name) {
  if (name == "printed") return ErratumMode::kPrinted;
  if (name == "corrected") return ErratumMode::kCorrected;
  throw CLI::ValidationError("--mode", "unknown erratum mode '" + name + "'");
}

// "7" or "2..25"
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "malformed range '" + text + "'");
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw CLI::ValidationError("--output", "cannot open '" + path + "' for writing");
  }
  file << text;
}

std::string root_latex(const Rational& root) {
  if (root.is_zero()) {
    return "x";
  }
  if (root.sign() < 0) {
    return "x+" + (-root).to_string();
  }
  return "x-" + root.to_string();
}

std::string pfd_latex(const PFDResult& pfd) {
  std::ostringstream os;
  bool first = true;
  const auto& poly = pfd.polynomial_part.coefficients();
  for (size_t i = poly.size(); i-- > 0;) {
    if (poly[i].is_zero()) {
      continue;
    }
    if (!first) {
      os << " + ";
    }
    first = false;
    os << poly[i].to_string();
    if (i == 1) {
      os << "x";
    } else if (i > 1) {
      os << "x^{" << i << "}";
    }
  }
  for (const auto& [root, coeffs] : pfd.terms) {
    for (unsigned t = 1; t <= coeffs.size(); ++t) {
      const Rational& c = coeffs[t - 1];
      if (c.is_zero()) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      first = false;
      os << "\\frac{" << c.to_string() << "}{";
      if (t == 1) {
        os << root_latex(root);
      } else {
        os << "(" << root_latex(root) << ")^{" << t << "}";
      }
      os << "}";
    }
  }
  if (first) {
    os << "0";
  }
  return os.str();
}

std::string pfd_text(const PFDResult& pfd) {
  std::ostringstream os;
  if (!pfd.polynomial_part.is_zero()) {
    os << "polynomial part:";
    for (const Rational& c : pfd.polynomial_part.coefficients()) {
      os << " " << c.to_string();
    }
    os << "\n";
  }
  for (const auto& [root, coeffs] : pfd.terms) {
    os << "pole " << root.to_string() << ":";
    for (const Rational& c : coeffs) {
      os << " " << c.to_string();
    }
    os << "\n";
  }
  return os.str();
}

int run_decompose(const std::string& family_name, unsigned n, unsigned lambda, unsigned mu,
                  unsigned theta, const std::string& mode_name, const std::string& format,
                  bool no_verify, const std::string& output_path, std::ostream& out) {
  FamilyParams params;
  params.family = parse_family(family_name);
  params.n = n;
  params.lambda = lambda;
  params.mu = mu;
  params.theta = theta;
  params.erratum_mode = parse_mode(mode_name);

  const RationalFunctionSpec spec = build_family_spec(params);
  const PFDResult pfd = (params.family == Family::kTheorem)
                            ? theorem_decompose(n, lambda, mu)
                            : example_decompose(params);

  bool verified = true;
  if (!no_verify) {
    verified = (pfd == oracle_decompose(spec)) && verify_equal(spec, pfd).equal;
  }

  std::string rendered;
  if (format == "json") {
    nlohmann::json doc = {{"family", family_name},
                          {"n", n},
                          {"spec", spec_json(spec)},
                          {"pfd", pfd_json(pfd)}};
    if (params.family == Family::kTheorem) {
      doc["lambda"] = lambda;
      doc["mu"] = mu;
    }
    if (params.family == Family::kTheta) {
      doc["theta"] = theta;
    }
    if (params.family == Family::kBeukers6) {
      doc["mode"] = mode_name;
    }
    doc["verified"] = no_verify ? "skipped" : (verified ? "true" : "false");
    rendered = doc.dump(2) + "\n";
  } else if (format == "latex") {
    rendered = pfd_latex(pfd) + "\n";
  } else if (format == "text") {
    rendered = pfd_text(pfd);
    if (!no_verify) {
      rendered += verified ? "verified against oracle\n" : "ORACLE MISMATCH\n";
    }
  } else {
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  }
  write_output(rendered, output_path, out);
  return (no_verify || verified) ? 0 : 1;
}

int run_identities(const std::string& suite_name, const std::string& n_range,
                   const std::string& lambda_range, const std::string& mu_range,
                   const std::string& theta_range, const std::string& family_name,
                   const std::string& mode_name, const std::string& format,
                   const std::string& output_path, std::ostream& out) {
  SuiteRequest request;
  if (suite_name == "corollary") {
    request.suite = SuiteId::kCorollary;
  } else if (suite_name == "hardest") {
    request.suite = SuiteId::kHardest;
  } else if (suite_name == "beukers") {
    request.suite = SuiteId::kBeukers;
  } else if (suite_name == "example7") {
    request.suite = SuiteId::kExample7;
  } else if (suite_name == "mixed") {
    request.suite = SuiteId::kMixed;
    request.family = parse_family(family_name);
  } else if (suite_name == "theta") {
    request.suite = SuiteId::kTheta;
  } else {
    throw CLI::ValidationError("--suite", "unknown suite '" + suite_name + "'");
  }
  request.n = parse_range(n_range);
  request.lambda = parse_range(lambda_range);
  request.mu = parse_range(mu_range);
  request.mode = parse_mode(mode_name);
  if (!theta_range.empty()) {
    request.theta_full_range = false;
    request.theta = parse_range(theta_range);
  }

  const SuiteResult result = run_suite(request);

  std::string rendered;
  if (format == "json") {
    rendered = suite_result_json(result).dump(2) + "\n";
  } else if (format == "text") {
    std::ostringstream os;
    for (const auto& report : result.reports) {
      os << (report.pass ? "pass" : "FAIL") << "  " << report.id;
      for (const auto& [key, value] : report.params) {
        os << " " << key << "=" << value;
      }
      os << "  computed=" << report.computed.to_string()
         << "  expected=" << report.expected.to_string() << "\n";
    }
    os << (result.all_pass ? "all identities hold" : "IDENTITY FAILURES") << "\n";
    rendered = os.str();
  } else {
    throw CLI::ValidationError("--format", "unknown format '" + format + "'");
  }
  write_output(rendered, output_path, out);
  return result.all_pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact partial-fraction decompositions and harmonic-number identities"};
  app.name("pfh");
  app.require_subcommand(1);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "decompose one family instance");
  std::string family = "theorem";
  unsigned n = 0;
  unsigned lambda = 1;
  unsigned mu = 0;
  unsigned theta = 0;
  std::string mode = "corrected";
  std::string format = "json";
  std::string output_path;
  bool no_verify = false;
  decompose->add_option("--family", family, "theorem|beukers6|ex7|ex8|ex9|ex10|theta");
  decompose->add_option("--n", n, "row index n")->required();
  decompose->add_option("--lambda", lambda, "denominator exponent (theorem)");
  decompose->add_option("--mu", mu, "numerator exponent (theorem)");
  decompose->add_option("--theta", theta, "numerator power (theta family)");
  decompose->add_option("--mode", mode, "printed|corrected (beukers6)");
  decompose->add_option("--format", format, "json|latex|text");
  decompose->add_option("--output,-o", output_path, "write to file instead of stdout");
  decompose->add_flag("--no-verify", no_verify, "skip the oracle cross-check");

  // identities
  auto* identities = app.add_subcommand("identities", "run an identity suite over ranges");
  std::string suite;
  std::string n_range;
  std::string lambda_range = "1..5";
  std::string mu_range = "0..5";
  std::string theta_range;
  std::string id_family = "ex8";
  std::string id_mode = "corrected";
  std::string id_format = "text";
  std::string id_output;
  identities->add_option("--suite", suite, "corollary|hardest|beukers|example7|mixed|theta")
      ->required();
  identities->add_option("--n", n_range, "n or n_lo..n_hi")->required();
  identities->add_option("--lambda", lambda_range, "lambda range (corollary)");
  identities->add_option("--mu", mu_range, "mu range (corollary)");
  identities->add_option("--theta", theta_range, "theta range (theta; defaults to 0..3+4n)");
  identities->add_option("--family", id_family, "ex8|ex9|ex10 (mixed)");
  identities->add_option("--mode", id_mode, "printed|corrected (beukers)");
  identities->add_option("--format", id_format, "text|json");
  identities->add_option("--output,-o", id_output, "write to file instead of stdout");

  // tables
  auto* tables = app.add_subcommand("tables", "emit a coefficient table");
  std::string kind = "omega";
  unsigned ell_max = 5;
  std::string table_format = "json";
  std::string table_output;
  tables->add_option("--kind", kind, "omega|varpi|omega_small");
  tables->add_option("--ell-max", ell_max, "highest row to emit");
  tables->add_option("--format", table_format, "json|latex");
  tables->add_option("--output,-o", table_output, "write to file instead of stdout");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run the full verification sweep");
  std::string sweep_format = "text";
  std::string sweep_output;
  unsigned workers = 0;
  sweep->add_option("--format", sweep_format, "text|json");
  sweep->add_option("--workers", workers, "worker threads (default: PFH_WORKERS or all cores)");
  sweep->add_option("--output,-o", sweep_output, "write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (decompose->parsed()) {
      return run_decompose(family, n, lambda, mu, theta, mode, format, no_verify, output_path,
                           out);
    }
    if (identities->parsed()) {
      return run_identities(suite, n_range, lambda_range, mu_range, theta_range, id_family,
                            id_mode, id_format, id_output, out);
    }
    if (tables->parsed()) {
      const std::string rendered =
          emit_table(parse_table_kind(kind), ell_max, parse_table_format(table_format));
      write_output(rendered, table_output, out);
      return 0;
    }
    if (sweep->parsed()) {
      const SweepReport report = run_acceptance_sweep(workers);
      std::string rendered;
      if (sweep_format == "json") {
        rendered = sweep_report_json(report).dump(2) + "\n";
      } else if (sweep_format == "text") {
        rendered = sweep_report_text(report);
      } else {
        throw CLI::ValidationError("--format", "unknown format '" + sweep_format + "'");
      }
      write_output(rendered, sweep_output, out);
      return report.all_pass ? 0 : 1;
    }
    err << app.help();
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pfh
