#ifndef PFH_BELL_HPP
#define PFH_BELL_HPP

#include <vector>

#include "pfh/partitions.hpp"
#include "pfh/rational.hpp"

namespace pfh {

// Parameter bundle for the Bell-polynomial coefficients evaluated at x = -k.
// lambda and mu may be zero, which turns the full coefficient into its two
// one-sided specializations.
struct BellArgs {
  unsigned lambda = 0;
  unsigned mu = 0;
  unsigned n = 0;
  unsigned k = 0;  // 0 <= k <= n
  unsigned ell = 0;
};

// Cycle-indicator sum shared by all three coefficient families:
//   ell! * sum over partitions of ell of
//     part_scale(parts) * prod_i bases[i-1]^{m_i} / (m_i! * i^{m_i}).
// bases must provide at least ell entries; part_scale(parts) supplies the
// lambda^m / mu^m weights where a family needs them.
Rational cycle_index_sum(unsigned ell, const std::vector<Rational>& bases,
                         const Rational& scale_base);

// Omega_ell(lambda, mu, -k): bases are
// lambda*[H_k^(i) + (-1)^i H_{n-k}^(i)] + mu*[H_k^(i) - H_{n+k}^(i)].
Rational omega_coeff(const BellArgs& args);

// varpi_ell(lambda, -k): lambda^parts weight over bases
// H_k^(i) + (-1)^i H_{n-k}^(i).
Rational varpi_coeff(unsigned lambda, unsigned n, unsigned k, unsigned ell);

// omega_ell(mu, -k): mu^parts weight over bases H_k^(i) - H_{n+k}^(i).
Rational omega_small_coeff(unsigned mu, unsigned n, unsigned k, unsigned ell);

// Binomial convolution of varpi and omega_small; contractually equal to
// omega_coeff on the same arguments.
Rational convolve_omega(const BellArgs& args);

}  // namespace pfh

#endif  // PFH_BELL_HPP
