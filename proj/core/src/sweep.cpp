#include "pfh/sweep.hpp"

#include <array>
#include <sstream>

#include "pfh/bell.hpp"
#include "pfh/harmonic.hpp"
#include "pfh/identities.hpp"
#include "pfh/json_io.hpp"
#include "pfh/parallel.hpp"
#include "pfh/pfd.hpp"
#include "pfh/sympoly.hpp"
#include "pfh/tables.hpp"

namespace pfh {

namespace {

struct CaseOutcome {
  bool pass = true;
  std::string note;
};

CriterionResult run_cells(unsigned id, const std::string& name, std::size_t count,
                          const std::function<CaseOutcome(std::size_t)>& cell,
                          unsigned workers) {
  std::vector<CaseOutcome> outcomes(count);
  parallel_for(count, [&](std::size_t i) { outcomes[i] = cell(i); }, workers);
  CriterionResult result{id, name, true, ""};
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& outcome : outcomes) {
    if (outcome.pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = outcome.note;
    }
  }
  result.pass = passed == count;
  std::ostringstream detail;
  if (result.pass) {
    detail << count << " checks";
  } else {
    detail << passed << "/" << count << " checks; first failure: " << first_failure;
  }
  result.detail = detail.str();
  return result;
}

std::vector<BellArgs> theorem_grid(unsigned n_max) {
  std::vector<BellArgs> cells;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned lambda = 1; lambda <= 5; ++lambda) {
      for (unsigned mu = 0; mu <= lambda; ++mu) {
        if (static_cast<long long>(lambda) +
                (static_cast<long long>(lambda) - static_cast<long long>(mu)) * n >
            0) {
          cells.push_back({lambda, mu, n, 0, 0});
        }
      }
    }
  }
  return cells;
}

CriterionResult criterion_theorem_oracle(unsigned workers) {
  const std::vector<BellArgs> cells = theorem_grid(6);
  return run_cells(1, "theorem-oracle-equivalence", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const auto& c = cells[i];
                     FamilyParams params;
                     params.family = Family::kTheorem;
                     params.n = c.n;
                     params.lambda = c.lambda;
                     params.mu = c.mu;
                     const RationalFunctionSpec spec = build_family_spec(params);
                     const bool ok =
                         theorem_decompose(c.n, c.lambda, c.mu) == oracle_decompose(spec);
                     std::ostringstream note;
                     if (!ok) {
                       note << "n=" << c.n << " lambda=" << c.lambda << " mu=" << c.mu;
                     }
                     return {ok, note.str()};
                   },
                   workers);
}

// The three printed low-order expansions, coefficient for coefficient.
PFDResult printed_low_order(unsigned n, unsigned lambda) {
  PFDResult expected;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational c(binomial(n, k));
    const Rational sign((k % 2 == 0) ? 1 : -1);
    const Rational diff = harmonic_number(k, 1) - harmonic_number(n - k, 1);
    std::vector<Rational> coeffs;
    if (lambda == 1) {
      coeffs = {sign * c};
    } else if (lambda == 2) {
      coeffs = {Rational(2) * c * c * diff, c * c};
    } else {
      const Rational c3 = sign * c * c * c;
      const Rational square_bracket =
          Rational(3) * diff * diff + harmonic_number(k, 2) + harmonic_number(n - k, 2);
      coeffs = {c3 * Rational(3, 2) * square_bracket, c3 * Rational(3) * diff, c3};
    }
    expected.terms.emplace(Rational(-static_cast<long>(k)), std::move(coeffs));
  }
  return expected;
}

CriterionResult criterion_low_order(unsigned workers) {
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned lambda = 1; lambda <= 3; ++lambda) {
      cells.emplace_back(n, lambda);
    }
  }
  return run_cells(2, "low-order-specializations", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const auto [n, lambda] = cells[i];
                     const bool ok =
                         theorem_decompose(n, lambda, 0) == printed_low_order(n, lambda);
                     std::ostringstream note;
                     if (!ok) {
                       note << "n=" << n << " lambda=" << lambda;
                     }
                     return {ok, note.str()};
                   },
                   workers);
}

CriterionResult criterion_corollary(unsigned workers) {
  std::vector<BellArgs> cells;
  for (unsigned n = 1; n <= 25; ++n) {
    for (unsigned lambda = 1; lambda <= 5; ++lambda) {
      for (unsigned mu = 0; mu <= lambda; ++mu) {
        cells.push_back({lambda, mu, n, 0, 0});
      }
    }
  }
  cells.push_back({1, 1, 0, 0, 0});  // boundary at n = 0
  return run_cells(3, "corollary-vanishing", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const auto& c = cells[i];
                     const bool ok = corollary_sum(c.n, c.lambda, c.mu) ==
                                     corollary_expected(c.n, c.lambda, c.mu);
                     std::ostringstream note;
                     if (!ok) {
                       note << "n=" << c.n << " lambda=" << c.lambda << " mu=" << c.mu;
                     }
                     return {ok, note.str()};
                   },
                   workers);
}

CriterionResult criterion_cubic_identity(unsigned workers) {
  return run_cells(4, "cubic-binomial-identity", 41,
                   [&](std::size_t i) -> CaseOutcome {
                     const unsigned n = static_cast<unsigned>(i);
                     const bool ok = hardest_challenge_sum(n).is_zero();
                     return {ok, ok ? "" : "n=" + std::to_string(n)};
                   },
                   workers);
}

CriterionResult criterion_proof_core(unsigned workers) {
  bool methods_equal = true;
  std::string method_note;
  for (unsigned ell = 0; ell <= 6; ++ell) {
    if (!(omega_symbolic(ell, OmegaMethod::kPartitionSum) ==
          omega_symbolic(ell, OmegaMethod::kRecurrence))) {
      methods_equal = false;
      method_note = "symbolic methods differ at ell=" + std::to_string(ell);
      break;
    }
  }

  std::vector<std::array<unsigned, 3>> cells;
  for (unsigned lambda = 0; lambda <= 5; ++lambda) {
    for (unsigned mu = 0; mu <= 5; ++mu) {
      for (unsigned n = 0; n <= 10; ++n) {
        cells.push_back({lambda, mu, n});
      }
    }
  }
  CriterionResult numeric = run_cells(
      5, "proof-core-symbolic-equality", cells.size(),
      [&](std::size_t i) -> CaseOutcome {
        const auto [lambda, mu, n] = cells[i];
        for (unsigned k = 0; k <= n; ++k) {
          for (unsigned ell = 0; ell <= 6; ++ell) {
            const BellArgs args{lambda, mu, n, k, ell};
            if (!(convolve_omega(args) == omega_coeff(args))) {
              std::ostringstream note;
              note << "convolution mismatch at lambda=" << lambda << " mu=" << mu
                   << " n=" << n << " k=" << k << " ell=" << ell;
              return {false, note.str()};
            }
          }
        }
        return {true, ""};
      },
      workers);

  numeric.pass = numeric.pass && methods_equal;
  if (!methods_equal) {
    numeric.detail = method_note;
  } else {
    numeric.detail = "7 symbolic rows; " + numeric.detail;
  }
  return numeric;
}

CriterionResult criterion_table_fidelity(unsigned workers) {
  const TableCheck tables = check_reference_tables();

  std::vector<SymPoly> omegas;
  omegas.reserve(7);
  for (unsigned ell = 0; ell <= 6; ++ell) {
    omegas.push_back(omega_symbolic(ell, OmegaMethod::kPartitionSum));
  }

  std::vector<std::array<unsigned, 3>> cells;
  for (unsigned lambda = 0; lambda <= 5; ++lambda) {
    for (unsigned mu = 0; mu <= 5; ++mu) {
      for (unsigned n = 0; n <= 10; ++n) {
        cells.push_back({lambda, mu, n});
      }
    }
  }
  CriterionResult result = run_cells(
      6, "table-fidelity", cells.size(),
      [&](std::size_t i) -> CaseOutcome {
        const auto [lambda, mu, n] = cells[i];
        for (unsigned k = 0; k <= n; ++k) {
          for (unsigned ell = 0; ell <= 6; ++ell) {
            const Rational direct = omega_coeff({lambda, mu, n, k, ell});
            const Rational via_symbols =
                evaluate_sym(omegas[ell], n, k, Rational(static_cast<long>(lambda)),
                             Rational(static_cast<long>(mu)));
            if (!(direct == via_symbols)) {
              std::ostringstream note;
              note << "evaluate_sym mismatch at lambda=" << lambda << " mu=" << mu
                   << " n=" << n << " k=" << k << " ell=" << ell;
              return {false, note.str()};
            }
          }
        }
        return {true, ""};
      },
      workers);

  result.pass = result.pass && tables.all_match;
  if (!tables.all_match) {
    result.detail = "reference-table mismatch: " + table_check_json(tables).dump();
  } else {
    result.detail = "18 table rows match; " + result.detail;
  }
  return result;
}

CaseOutcome compare_example_to_oracle(const FamilyParams& params, const char* label) {
  const RationalFunctionSpec spec = build_family_spec(params);
  const bool ok = example_decompose(params) == oracle_decompose(spec);
  std::ostringstream note;
  if (!ok) {
    note << label << " decomposition mismatch at n=" << params.n;
    if (params.family == Family::kTheta) {
      note << " theta=" << params.theta;
    }
  }
  return {ok, note.str()};
}

CriterionResult criterion_beukers(unsigned workers) {
  struct Cell {
    enum { kSum, kPrintedPin, kDecompose } what;
    unsigned n;
  };
  std::vector<Cell> cells;
  for (unsigned n = 1; n <= 25; ++n) {
    cells.push_back({Cell::kSum, n});
  }
  cells.push_back({Cell::kPrintedPin, 2});
  for (unsigned n = 1; n <= 6; ++n) {
    cells.push_back({Cell::kDecompose, n});
  }
  return run_cells(7, "beukers6-family", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const Cell& c = cells[i];
                     switch (c.what) {
                       case Cell::kSum: {
                         const bool ok = beukers_sum(c.n, ErratumMode::kCorrected).is_zero();
                         return {ok, ok ? "" : "corrected sum nonzero at n=" + std::to_string(c.n)};
                       }
                       case Cell::kPrintedPin: {
                         const bool ok = beukers_sum(2, ErratumMode::kPrinted) == Rational(216);
                         return {ok, ok ? "" : "printed-form regression drifted at n=2"};
                       }
                       case Cell::kDecompose: {
                         FamilyParams params;
                         params.family = Family::kBeukers6;
                         params.n = c.n;
                         params.erratum_mode = ErratumMode::kCorrected;
                         return compare_example_to_oracle(params, "beukers6");
                       }
                     }
                     return {false, "unreachable"};
                   },
                   workers);
}

CriterionResult criterion_example7(unsigned workers) {
  struct Cell {
    bool decompose;
    unsigned n;
  };
  std::vector<Cell> cells;
  for (unsigned n = 0; n <= 25; ++n) {
    cells.push_back({false, n});
  }
  for (unsigned n = 1; n <= 6; ++n) {
    cells.push_back({true, n});
  }
  return run_cells(8, "example7-family", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const Cell& c = cells[i];
                     if (!c.decompose) {
                       const bool ok =
                           example7_sum(c.n) ==
                           Rational(static_cast<long>(c.n)) * Rational(static_cast<long>(c.n + 1));
                       return {ok, ok ? "" : "sum mismatch at n=" + std::to_string(c.n)};
                     }
                     FamilyParams params;
                     params.family = Family::kExample7;
                     params.n = c.n;
                     const PFDResult pfd = example_decompose(params);
                     if (!(pfd.polynomial_part == Polynomial::constant(Rational(1)))) {
                       return {false, "polynomial part is not 1 at n=" + std::to_string(c.n)};
                     }
                     return compare_example_to_oracle(params, "example7");
                   },
                   workers);
}

CriterionResult criterion_mixed(unsigned workers) {
  struct Cell {
    Family family;
    unsigned n;
    bool decompose;
  };
  std::vector<Cell> cells;
  for (const Family family : {Family::kExample8, Family::kExample9, Family::kExample10}) {
    for (unsigned n = 1; n <= 15; ++n) {
      cells.push_back({family, n, false});
    }
    for (unsigned n = 1; n <= 6; ++n) {
      cells.push_back({family, n, true});
    }
  }
  return run_cells(9, "mixed-denominator-families", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const Cell& c = cells[i];
                     const char* label = c.family == Family::kExample8   ? "example8"
                                         : c.family == Family::kExample9 ? "example9"
                                                                         : "example10";
                     if (!c.decompose) {
                       const auto [lhs, rhs] = mixed_identity_check(c.family, c.n);
                       const bool ok = lhs == rhs;
                       std::ostringstream note;
                       if (!ok) {
                         note << label << " sides differ at n=" << c.n;
                       }
                       return {ok, note.str()};
                     }
                     FamilyParams params;
                     params.family = c.family;
                     params.n = c.n;
                     return compare_example_to_oracle(params, label);
                   },
                   workers);
}

CriterionResult criterion_theta(unsigned workers) {
  struct Cell {
    unsigned n;
    unsigned theta;
  };
  std::vector<Cell> cells;
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned theta = 0; theta <= 3 + 4 * n; ++theta) {
      cells.push_back({n, theta});
    }
  }
  return run_cells(10, "theta-family", cells.size(),
                   [&](std::size_t i) -> CaseOutcome {
                     const Cell& c = cells[i];
                     const Rational expected =
                         (c.theta == 3 + 4 * c.n)
                             ? Rational(6) * Rational(factorial(c.n)).pow(4)
                             : Rational(0);
                     if (!(theta_sum(c.n, c.theta) == expected)) {
                       std::ostringstream note;
                       note << "sum mismatch at n=" << c.n << " theta=" << c.theta;
                       return {false, note.str()};
                     }
                     FamilyParams params;
                     params.family = Family::kTheta;
                     params.n = c.n;
                     params.theta = c.theta;
                     return compare_example_to_oracle(params, "theta");
                   },
                   workers);
}

CriterionResult criterion_certificates(unsigned workers) {
  struct Cell {
    FamilyParams params;
  };
  std::vector<Cell> cells;
  for (const BellArgs& c : theorem_grid(6)) {
    FamilyParams params;
    params.family = Family::kTheorem;
    params.n = c.n;
    params.lambda = c.lambda;
    params.mu = c.mu;
    cells.push_back({params});
  }
  for (unsigned n = 1; n <= 6; ++n) {
    for (const Family family : {Family::kBeukers6, Family::kExample7, Family::kExample8,
                                Family::kExample9, Family::kExample10}) {
      FamilyParams params;
      params.family = family;
      params.n = n;
      cells.push_back({params});
    }
  }
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned theta = 0; theta <= 3 + 4 * n; ++theta) {
      FamilyParams params;
      params.family = Family::kTheta;
      params.n = n;
      params.theta = theta;
      cells.push_back({params});
    }
  }
  return run_cells(
      11, "evaluation-certificates", cells.size(),
      [&](std::size_t i) -> CaseOutcome {
        const FamilyParams& params = cells[i].params;
        const RationalFunctionSpec spec = build_family_spec(params);
        const PFDResult pfd = (params.family == Family::kTheorem)
                                  ? theorem_decompose(params.n, params.lambda, params.mu)
                                  : example_decompose(params);
        std::ostringstream note;
        if (!verify_equal(spec, pfd).equal) {
          note << "certificate failed for family cell " << i;
          return {false, note.str()};
        }
        PFDResult perturbed = pfd;
        auto& coeffs = perturbed.terms.begin()->second;
        coeffs.back() += Rational(1);
        if (verify_equal(spec, perturbed).equal) {
          note << "perturbed decomposition not caught for family cell " << i;
          return {false, note.str()};
        }
        return {true, ""};
      },
      workers);
}

std::pair<std::vector<CriterionResult>, std::string> run_batch(unsigned workers) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_theorem_oracle(workers));
  results.push_back(criterion_low_order(workers));
  results.push_back(criterion_corollary(workers));
  results.push_back(criterion_cubic_identity(workers));
  results.push_back(criterion_proof_core(workers));
  results.push_back(criterion_table_fidelity(workers));
  results.push_back(criterion_beukers(workers));
  results.push_back(criterion_example7(workers));
  results.push_back(criterion_mixed(workers));
  results.push_back(criterion_theta(workers));
  results.push_back(criterion_certificates(workers));

  nlohmann::json partial = nlohmann::json::array();
  for (const auto& r : results) {
    partial.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return {std::move(results), partial.dump(2)};
}

}  // namespace

SweepReport run_acceptance_sweep(unsigned workers) {
  auto [results, first_dump] = run_batch(workers);
  const auto second_dump = run_batch(workers).second;

  CriterionResult determinism;
  determinism.id = 12;
  determinism.name = "report-determinism";
  determinism.pass = first_dump == second_dump;
  determinism.detail = determinism.pass ? "two consecutive runs byte-identical"
                                        : "reports differ between consecutive runs";
  results.push_back(determinism);

  SweepReport report;
  report.criteria = std::move(results);
  for (const auto& criterion : report.criteria) {
    report.all_pass = report.all_pass && criterion.pass;
  }
  return report;
}

nlohmann::json sweep_report_json(const SweepReport& report) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& criterion : report.criteria) {
    criteria.push_back({{"id", criterion.id},
                        {"name", criterion.name},
                        {"pass", criterion.pass},
                        {"detail", criterion.detail}});
  }
  return {{"criteria", criteria}, {"all_pass", report.all_pass}};
}

std::string sweep_report_text(const SweepReport& report) {
  std::ostringstream os;
  for (const auto& criterion : report.criteria) {
    os << (criterion.pass ? "PASS" : "FAIL") << "  " << criterion.id << "  " << criterion.name
       << "  (" << criterion.detail << ")\n";
  }
  os << (report.all_pass ? "all criteria passed" : "SWEEP FAILED") << "\n";
  return os.str();
}

}  // namespace pfh
