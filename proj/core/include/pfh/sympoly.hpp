#ifndef PFH_SYMPOLY_HPP
#define PFH_SYMPOLY_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

// Sparse multivariate polynomial over Rational. Variables are small integer
// ids; monomials are kept in a canonical graded-lexicographic order and zero
// coefficients are never stored, so equality is plain structural equality.
class SymPoly {
 public:
  // Sorted (variable id, exponent) pairs, exponents > 0.
  using Monomial = std::vector<std::pair<unsigned, unsigned>>;

  struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };

  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  SymPoly() = default;
  static SymPoly constant(const Rational& c);
  static SymPoly variable(unsigned id);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::set<unsigned> variables_used() const;

  void add_term(const Monomial& mono, const Rational& coeff);

  SymPoly operator-() const;
  friend SymPoly operator+(const SymPoly& lhs, const SymPoly& rhs);
  friend SymPoly operator-(const SymPoly& lhs, const SymPoly& rhs);
  friend SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs);
  SymPoly scaled(const Rational& factor) const;
  SymPoly pow(unsigned exponent) const;

  // Replaces each mapped variable with a polynomial; unmapped variables
  // survive unchanged.
  SymPoly substitute(const std::map<unsigned, SymPoly>& replacements) const;

  // Full evaluation; every variable that occurs must be mapped.
  Rational evaluate(const std::map<unsigned, Rational>& values) const;

  bool operator==(const SymPoly& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

// Variable conventions for the coefficient ring: L and M are the two scalar
// indeterminates, g_i / h_i the depth-i harmonic-sum indeterminates, ordered
// L < M < g_1 < h_1 < g_2 < h_2 < ...
namespace omega_vars {
inline constexpr unsigned kL = 0;
inline constexpr unsigned kM = 1;
inline unsigned g(unsigned i) { return 2 * i; }      // i >= 1
inline unsigned h(unsigned i) { return 2 * i + 1; }  // i >= 1
inline bool is_g(unsigned v) { return v >= 2 && v % 2 == 0; }
inline bool is_h(unsigned v) { return v >= 3 && v % 2 == 1; }
inline unsigned depth(unsigned v) { return v / 2; }
}  // namespace omega_vars

// Linear derivation with D(g_i) = -i g_{i+1}, D(h_i) = +i h_{i+1},
// D(L) = D(M) = 0, extended by the product rule. The depth bound grows by
// one automatically.
SymPoly sym_derive(const SymPoly& p);

enum class OmegaMethod { kPartitionSum, kRecurrence };

// The ell-th coefficient polynomial, either as the explicit partition sum
// (-1)^ell ell! sum prod (L g_i - (-1)^i M h_i)^{m_i} / (m_i! i^{m_i})
// or by iterating Omega_{j+1} = sym_derive(Omega_j) - (L g_1 + M h_1) Omega_j
// from Omega_0 = 1. Both methods agree; tests and the acceptance suite pin
// that equality.
SymPoly omega_symbolic(unsigned ell, OmegaMethod method);

// Substitutes L -> lambda, M -> mu, g_i -> H_{n-k}^(i) + (-1)^i H_k^(i),
// h_i -> H_{n+k}^(i) - H_k^(i) and evaluates exactly.
Rational evaluate_sym(const SymPoly& p, unsigned n, unsigned k, const Rational& lambda,
                      const Rational& mu);

}  // namespace pfh

#endif  // PFH_SYMPOLY_HPP
