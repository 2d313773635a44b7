#include "pfh/bell.hpp"

#include <stdexcept>

#include "pfh/harmonic.hpp"

namespace pfh {

namespace {

void require_k_in_range(const char* who, unsigned n, unsigned k) {
  if (k > n) {
    throw std::domain_error(std::string(who) + ": k must satisfy k <= n");
  }
}

int parity_sign(unsigned i) { return (i % 2 == 0) ? 1 : -1; }

// H_k^(i) + (-1)^i H_{n-k}^(i)
Rational base_nk(unsigned n, unsigned k, unsigned i) {
  const Rational hk = harmonic_number(k, i);
  const Rational hnk = harmonic_number(n - k, i);
  return (parity_sign(i) > 0) ? hk + hnk : hk - hnk;
}

// H_k^(i) - H_{n+k}^(i)
Rational base_pk(unsigned n, unsigned k, unsigned i) {
  return harmonic_number(k, i) - harmonic_number(n + k, i);
}

}  // namespace

Rational cycle_index_sum(unsigned ell, const std::vector<Rational>& bases,
                         const Rational& scale_base) {
  if (bases.size() < ell) {
    throw std::invalid_argument("cycle_index_sum: not enough base values");
  }
  Rational sum(0);
  for (const Partition& p : enumerate_partitions(ell)) {
    Rational term = scale_base.pow(static_cast<long>(p.parts));
    for (unsigned i = 1; i <= ell; ++i) {
      const unsigned m = p.multiplicity[i - 1];
      if (m == 0) {
        continue;
      }
      term *= bases[i - 1].pow(static_cast<long>(m));
      term /= Rational(factorial(m)) * Rational(static_cast<long>(i)).pow(static_cast<long>(m));
    }
    sum += term;
  }
  return Rational(factorial(ell)) * sum;
}

Rational omega_coeff(const BellArgs& args) {
  require_k_in_range("omega_coeff", args.n, args.k);
  const Rational lambda(static_cast<long>(args.lambda));
  const Rational mu(static_cast<long>(args.mu));
  std::vector<Rational> bases;
  bases.reserve(args.ell);
  for (unsigned i = 1; i <= args.ell; ++i) {
    bases.push_back(lambda * base_nk(args.n, args.k, i) + mu * base_pk(args.n, args.k, i));
  }
  return cycle_index_sum(args.ell, bases, Rational(1));
}

Rational varpi_coeff(unsigned lambda, unsigned n, unsigned k, unsigned ell) {
  require_k_in_range("varpi_coeff", n, k);
  std::vector<Rational> bases;
  bases.reserve(ell);
  for (unsigned i = 1; i <= ell; ++i) {
    bases.push_back(base_nk(n, k, i));
  }
  return cycle_index_sum(ell, bases, Rational(static_cast<long>(lambda)));
}

Rational omega_small_coeff(unsigned mu, unsigned n, unsigned k, unsigned ell) {
  require_k_in_range("omega_small_coeff", n, k);
  std::vector<Rational> bases;
  bases.reserve(ell);
  for (unsigned i = 1; i <= ell; ++i) {
    bases.push_back(base_pk(n, k, i));
  }
  return cycle_index_sum(ell, bases, Rational(static_cast<long>(mu)));
}

Rational convolve_omega(const BellArgs& args) {
  require_k_in_range("convolve_omega", args.n, args.k);
  Rational sum(0);
  for (unsigned i = 0; i <= args.ell; ++i) {
    sum += Rational(binomial(args.ell, i)) * varpi_coeff(args.lambda, args.n, args.k, i) *
           omega_small_coeff(args.mu, args.n, args.k, args.ell - i);
  }
  return sum;
}

}  // namespace pfh
