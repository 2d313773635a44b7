#include "pfh/rational.hpp"

#include <ostream>

namespace pfh {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long long n, long long k) {
  if (n < 0) {
    throw std::domain_error("binomial: negative upper index");
  }
  if (k < 0 || k > n) {
    return Integer(0);
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer parse_integer(const std::string& text) {
  Integer r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("parse_integer: malformed integer '" + text + "'");
  }
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Rational: inverse of zero");
  }
  return Rational(denominator(), numerator());
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) {
    return Rational(1);
  }
  const bool negative = exponent < 0;
  if (negative && is_zero()) {
    throw std::domain_error("Rational: zero to a negative power");
  }
  const auto e = static_cast<unsigned long>(negative ? -exponent : exponent);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), e);
  return negative ? Rational(den, num) : Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational rising_factorial(const Rational& base, unsigned long n) {
  Rational product(1);
  Rational term = base;
  for (unsigned long i = 0; i < n; ++i) {
    product *= term;
    term += Rational(1);
  }
  return product;
}

std::string to_string(const Rational& value) { return value.to_string(); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace pfh
