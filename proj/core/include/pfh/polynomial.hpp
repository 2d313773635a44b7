#ifndef PFH_POLYNOMIAL_HPP
#define PFH_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

// Dense univariate polynomial over Rational, constant term first. The zero
// polynomial is the empty coefficient vector; anything else keeps a nonzero
// leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& c);
  // x^power with the given coefficient.
  static Polynomial monomial(const Rational& coeff, unsigned power);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned power) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial scaled(const Rational& factor) const;

  // Exact Euclidean division: *this == quotient * divisor + remainder with
  // deg(remainder) < deg(divisor). Division by zero is a domain error.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace pfh

#endif  // PFH_POLYNOMIAL_HPP
