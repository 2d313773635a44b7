#ifndef PFH_HARMONIC_HPP
#define PFH_HARMONIC_HPP

#include <shared_mutex>
#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

// Table of generalized harmonic numbers H(n, m) = sum_{k=1..n} 1/k^m.
// Rows grow on demand and monotonically; readers take a shared lock, the
// fill path an exclusive one, so a single instance can serve concurrent
// sweep workers.
class HarmonicCache {
 public:
  // H(n, m) exactly. m = 0 is a domain error.
  Rational at(unsigned n, unsigned m) const;

  // Recomputes the entry from scratch, bypassing the table.
  static Rational recompute(unsigned n, unsigned m);

 private:
  void ensure(unsigned n, unsigned m) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<Rational>> rows_;  // rows_[m-1][n]
};

// Process-wide cache behind the free function everyone uses.
Rational harmonic_number(unsigned n, unsigned m);

// sum_{i=1..n} 1/(i - x)^ell. x must avoid the poles {1, ..., n}.
Rational shifted_harmonic_sum(unsigned ell, const Rational& x, unsigned n);

// sum_{i=0..n, i != excluded} 1/(i + x)^ell. x must avoid the remaining
// poles {-i : 0 <= i <= n, i != excluded}.
Rational punctured_harmonic_sum(unsigned ell, const Rational& x, unsigned n,
                                unsigned excluded);

}  // namespace pfh

#endif  // PFH_HARMONIC_HPP
