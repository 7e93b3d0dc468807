#include "hypercut/bitcube.hpp"

#include <stdexcept>
#include <string>

namespace hypercut {

BitCube::BitCube(int n) : n_(n) {
  if (n < 1 || n > kMaskMaxDimension)
    throw std::out_of_range("bitmask cube supports 1 <= n <= " +
                            std::to_string(kMaskMaxDimension) + ", got " + std::to_string(n));
  const int count = 1 << n;
  full_ = count == 64 ? ~VertexMask{0} : (VertexMask{1} << count) - 1;
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < count; ++v)
      if (((v >> i) & 1) == 0) low_[i] |= VertexMask{1} << v;
}

VertexMask BitCube::mask_of(std::span<const Vertex> verts) {
  VertexMask m = 0;
  for (Vertex v : verts) m |= bit(v);
  return m;
}

std::vector<int> BitCube::component_sizes(VertexMask removed) const {
  std::vector<int> sizes;
  VertexMask rest = full_ & ~removed;
  while (rest != 0) {
    const VertexMask comp = component_of(rest, rest);
    sizes.push_back(std::popcount(comp));
    rest &= ~comp;
  }
  return sizes;
}

}  // namespace hypercut
