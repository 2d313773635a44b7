#ifndef PFH_PFD_HPP
#define PFH_PFD_HPP

#include <map>
#include <vector>

#include "pfh/polynomial.hpp"
#include "pfh/rational.hpp"

namespace pfh {

// One denominator factor (x - root)^multiplicity.
struct PoleTerm {
  Rational root;
  unsigned multiplicity = 1;
};

// scalar * numerator(x) / prod (x - root)^multiplicity, pole roots pairwise
// distinct. This is the left-hand side of every decomposition.
struct RationalFunctionSpec {
  Rational scalar{1};
  Polynomial numerator = Polynomial::constant(Rational(1));
  std::vector<PoleTerm> poles;

  unsigned denominator_degree() const;
  Polynomial expanded_denominator() const;
  bool is_pole(const Rational& x) const;
  // Exact value; evaluation at a pole root is a domain error.
  Rational evaluate(const Rational& x) const;
  // Throws std::invalid_argument when pole roots repeat.
  void validate() const;
};

// polynomial_part + sum over roots of coeffs[t-1] / (x - root)^t. The
// per-pole coefficient vectors are dense, so trailing zero coefficients are
// stored explicitly.
struct PFDResult {
  Polynomial polynomial_part;
  std::map<Rational, std::vector<Rational>> terms;

  Rational evaluate(const Rational& x) const;
  // Sum of all simple-pole coefficients.
  Rational residue_sum() const;
  bool operator==(const PFDResult& other) const = default;
};

enum class Family { kTheorem, kBeukers6, kExample7, kExample8, kExample9, kExample10, kTheta };
enum class ErratumMode { kPrinted, kCorrected };

struct FamilyParams {
  Family family = Family::kTheorem;
  unsigned n = 0;
  unsigned lambda = 1;  // kTheorem
  unsigned mu = 0;      // kTheorem
  unsigned theta = 0;   // kTheta, 0 <= theta < 4 + 4n
  ErratumMode erratum_mode = ErratumMode::kCorrected;  // kBeukers6
};

// The rational function each family decomposes. Parameter violations are
// usage errors (std::invalid_argument).
RationalFunctionSpec build_family_spec(const FamilyParams& params);

// Coefficient-formula decomposition of (n!)^(lambda-mu) (1-x)_n^mu / (x)_{n+1}^lambda.
// Requires lambda >= 1 and lambda + (lambda - mu) n > 0 (domain error otherwise).
PFDResult theorem_decompose(unsigned n, unsigned lambda, unsigned mu);

// Decomposition by the printed per-family coefficient formulas. Rejects
// kTheorem (use theorem_decompose).
PFDResult example_decompose(const FamilyParams& params);

// Ground truth: expand the denominator, split off the polynomial part by
// exact division, then solve for the pole coefficients from evaluations at
// distinct half-integer sample points. No harmonic numbers involved.
PFDResult oracle_decompose(const RationalFunctionSpec& spec);

Rational evaluate_at(const RationalFunctionSpec& spec, const Rational& x);
Rational evaluate_at(const PFDResult& pfd, const Rational& x);

struct VerifyResult {
  bool equal = false;
  // Populated on failure: first sample point where the two sides differ.
  Rational witness;
  Rational lhs;
  Rational rhs;
};

// Certifies spec == pfd by evaluating both at D+1 half-integer non-pole
// points, where D bounds the degree of the cleared-denominator difference.
VerifyResult verify_equal(const RationalFunctionSpec& spec, const PFDResult& pfd);

// Limit of x * (spec - polynomial part) at infinity; equals the sum of all
// residues of the proper part.
Rational residue_sum_expected(const RationalFunctionSpec& spec);

}  // namespace pfh

#endif  // PFH_PFD_HPP
