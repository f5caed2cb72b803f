#include "blowuplab/exterior.hpp"

namespace blowuplab {

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  out.reserve(blade_degree(b));
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

Blade blade_from_indices(const std::vector<int> &indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32)
      throw DomainError("blade index out of range");
    const Blade bit = Blade{1} << i;
    if (b & bit)
      throw DomainError("repeated index in blade");
    b |= bit;
  }
  return b;
}

bool BladeOrder::operator()(Blade a, Blade b) const {
  const int da = blade_degree(a);
  const int db = blade_degree(b);
  if (da != db)
    return da < db;
  // Same degree: compare sorted index lists lexicographically. The first
  // differing lowest index decides; the blade holding the smaller one wins.
  const Blade diff = a ^ b;
  if (diff == 0)
    return false;
  const Blade lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b)
    return 0;
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  int inversions = 0;
  Blade rest = b;
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const Blade above = j == 31 ? 0 : (~Blade{0} << (j + 1));
    inversions += std::popcount(a & above);
  }
  return (inversions & 1) ? -1 : 1;
}

int interior_sign(int j, Blade b) {
  const Blade bit = Blade{1} << j;
  if (!(b & bit))
    return 0;
  const int before = std::popcount(b & (bit - 1));
  return (before & 1) ? -1 : 1;
}

} // namespace blowuplab
