#ifndef PFH_PARTITIONS_HPP
#define PFH_PARTITIONS_HPP

#include <vector>

namespace pfh {

// Partition of ell in multiplicity form: multiplicity[i-1] copies of part i,
// so sum_i i * multiplicity[i-1] == ell. The part count sum_i multiplicity[i-1]
// is kept alongside because the coefficient formulas exponentiate by it.
struct Partition {
  std::vector<unsigned> multiplicity;
  unsigned parts = 0;

  unsigned weight() const {
    unsigned w = 0;
    for (unsigned i = 0; i < multiplicity.size(); ++i) {
      w += (i + 1) * multiplicity[i];
    }
    return w;
  }

  bool operator==(const Partition& other) const = default;
};

// All partitions of ell, each exactly once, in descending lexicographic
// order of the multiplicity vector. ell = 0 yields the single empty
// partition.
std::vector<Partition> enumerate_partitions(unsigned ell);

}  // namespace pfh

#endif  // PFH_PARTITIONS_HPP
