#include "pfh/harmonic.hpp"

#include <mutex>

namespace pfh {

Rational HarmonicCache::at(unsigned n, unsigned m) const {
  if (m == 0) {
    throw std::domain_error("harmonic_number: order m must be >= 1");
  }
  {
    std::shared_lock lock(mutex_);
    if (m <= rows_.size() && n < rows_[m - 1].size()) {
      return rows_[m - 1][n];
    }
  }
  ensure(n, m);
  std::shared_lock lock(mutex_);
  return rows_[m - 1][n];
}

void HarmonicCache::ensure(unsigned n, unsigned m) const {
  std::unique_lock lock(mutex_);
  if (rows_.size() < m) {
    rows_.resize(m);
  }
  auto& row = rows_[m - 1];
  if (row.empty()) {
    row.push_back(Rational(0));  // H(0, m) = 0
  }
  while (row.size() <= n) {
    const auto k = static_cast<unsigned long>(row.size());
    row.push_back(row.back() + Rational(1, static_cast<long>(k)).pow(static_cast<long>(m)));
  }
}

Rational HarmonicCache::recompute(unsigned n, unsigned m) {
  if (m == 0) {
    throw std::domain_error("harmonic_number: order m must be >= 1");
  }
  Rational sum(0);
  for (unsigned k = 1; k <= n; ++k) {
    sum += Rational(1, static_cast<long>(k)).pow(static_cast<long>(m));
  }
  return sum;
}

Rational harmonic_number(unsigned n, unsigned m) {
  static HarmonicCache cache;
  return cache.at(n, m);
}

Rational shifted_harmonic_sum(unsigned ell, const Rational& x, unsigned n) {
  if (ell == 0) {
    throw std::domain_error("shifted_harmonic_sum: ell must be >= 1");
  }
  Rational sum(0);
  for (unsigned i = 1; i <= n; ++i) {
    const Rational den = Rational(static_cast<long>(i)) - x;
    if (den.is_zero()) {
      throw std::domain_error("shifted_harmonic_sum: x hits pole at " + std::to_string(i));
    }
    sum += den.pow(-static_cast<long>(ell));
  }
  return sum;
}

Rational punctured_harmonic_sum(unsigned ell, const Rational& x, unsigned n,
                                unsigned excluded) {
  if (ell == 0) {
    throw std::domain_error("punctured_harmonic_sum: ell must be >= 1");
  }
  if (excluded > n) {
    throw std::domain_error("punctured_harmonic_sum: excluded index out of range");
  }
  Rational sum(0);
  for (unsigned i = 0; i <= n; ++i) {
    if (i == excluded) {
      continue;
    }
    const Rational den = Rational(static_cast<long>(i)) + x;
    if (den.is_zero()) {
      throw std::domain_error("punctured_harmonic_sum: x hits pole at -" + std::to_string(i));
    }
    sum += den.pow(-static_cast<long>(ell));
  }
  return sum;
}

}  // namespace pfh
