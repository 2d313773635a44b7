#include "pfh/polynomial.hpp"

namespace pfh {

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) {
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::monomial(const Rational& coeff, unsigned power) {
  Polynomial p;
  if (!coeff.is_zero()) {
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_[power] = coeff;
  }
  return p;
}

Rational Polynomial::coefficient(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial r;
  r.coeffs_.resize(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    r.coeffs_[i] += lhs.coeffs_[i];
  }
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    r.coeffs_[i] += rhs.coeffs_[i];
  }
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial r;
  if (lhs.is_zero() || rhs.is_zero()) {
    return r;
  }
  r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) {
      continue;
    }
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial r;
  if (factor.is_zero()) {
    return r;
  }
  r.coeffs_ = coeffs_;
  for (auto& c : r.coeffs_) {
    c *= factor;
  }
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("Polynomial: division by zero polynomial");
  }
  Polynomial remainder = *this;
  Polynomial quotient;
  const int ddeg = divisor.degree();
  if (remainder.degree() >= ddeg) {
    quotient.coeffs_.assign(remainder.coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
  }
  const Rational lead_inv = divisor.leading_coefficient().inverse();
  while (!remainder.is_zero() && remainder.degree() >= ddeg) {
    const unsigned shift = static_cast<unsigned>(remainder.degree() - ddeg);
    const Rational factor = remainder.leading_coefficient() * lead_inv;
    quotient.coeffs_[shift] = factor;
    remainder = remainder - (divisor * Polynomial::monomial(factor, shift));
  }
  quotient.trim();
  return {quotient, remainder};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

}  // namespace pfh
