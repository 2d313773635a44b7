#ifndef PFH_RATIONAL_HPP
#define PFH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pfh {

// Arbitrary-precision signed integer. GMP does the heavy lifting; the
// helpers below add the domain checks and string forms the rest of the
// library relies on.
using Integer = mpz_class;

Integer factorial(unsigned long n);

// Standard binomial coefficient. Zero when k < 0 or k > n; negative n is
// rejected (the generalized definition is deliberately unsupported).
Integer binomial(long long n, long long k);

Integer parse_integer(const std::string& text);
std::string to_string(const Integer& value);

// Exact fraction, canonical at all times: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. Equality is structural.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  static Rational from_string(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = mpq_cmp(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return c <=> 0;
  }

  Rational inverse() const;

  // Integer exponent; negative exponents invert (0 to a negative power is
  // a domain error).
  Rational pow(long exponent) const;

  std::string to_string() const;

 private:
  mpq_class value_;  // canonical
};

// (c)_n = c (c+1) ... (c+n-1), with the empty product equal to 1.
Rational rising_factorial(const Rational& base, unsigned long n);

std::string to_string(const Rational& value);
std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational reciprocal_power(const Rational& x, unsigned long e) {
  return x.pow(-static_cast<long>(e));
}

}  // namespace pfh

#endif  // PFH_RATIONAL_HPP
