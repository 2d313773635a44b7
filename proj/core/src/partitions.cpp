#include "pfh/partitions.hpp"

namespace pfh {

namespace {

void emit_from(unsigned part, unsigned remaining, std::vector<unsigned>& current,
               std::vector<Partition>& out) {
  const unsigned ell = static_cast<unsigned>(current.size());
  if (remaining == 0) {
    Partition p;
    p.multiplicity = current;
    for (unsigned m : current) {
      p.parts += m;
    }
    out.push_back(std::move(p));
    return;
  }
  if (part > ell) {
    return;
  }
  // Larger multiplicity of the smaller part first keeps the output in
  // descending lexicographic order on the multiplicity vector.
  for (unsigned m = remaining / part; m + 1 > 0; --m) {
    current[part - 1] = m;
    emit_from(part + 1, remaining - part * m, current, out);
    current[part - 1] = 0;
    if (m == 0) {
      break;
    }
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned ell) {
  std::vector<Partition> out;
  std::vector<unsigned> current(ell, 0);
  emit_from(1, ell, current, out);
  return out;
}

}  // namespace pfh
