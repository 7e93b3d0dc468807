#pragma once

// Vertex sets of Q_n, n <= 6, packed into one 64-bit word. Neighborhood
// expansion across coordinate i is a shift by 2^i under a column mask, so a
// connectivity test costs O(n · diameter) word operations.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hypercut/cube.hpp"

namespace hypercut {

using VertexMask = std::uint64_t;

inline constexpr int kMaskMaxDimension = 6;

class BitCube {
 public:
  explicit BitCube(int n);

  int dimension() const { return n_; }
  VertexMask full() const { return full_; }

  static VertexMask bit(Vertex v) { return VertexMask{1} << v; }
  static VertexMask mask_of(std::span<const Vertex> verts);

  /// Vertices adjacent to some vertex of `set` (may intersect `set`).
  VertexMask neighborhood(VertexMask set) const {
    VertexMask out = 0;
    for (int i = 0; i < n_; ++i) {
      const int shift = 1 << i;
      out |= ((set & low_[i]) << shift) | ((set >> shift) & low_[i]);
    }
    return out & full_;
  }

  /// Component of `allowed` containing the lowest vertex of `seed & allowed`.
  VertexMask component_of(VertexMask seed, VertexMask allowed) const {
    VertexMask reach = seed & allowed & (~(seed & allowed) + 1);
    for (;;) {
      const VertexMask next = (reach | neighborhood(reach)) & allowed;
      if (next == reach) return reach;
      reach = next;
    }
  }

  /// Q_n minus `removed` has at most one vertex or is disconnected.
  bool is_cut(VertexMask removed) const {
    const VertexMask rest = full_ & ~removed;
    if (std::popcount(rest) <= 1) return true;
    return component_of(rest, rest) != rest;
  }

  /// Component sizes of Q_n minus `removed`, in order of lowest vertex.
  std::vector<int> component_sizes(VertexMask removed) const;

 private:
  int n_;
  VertexMask full_;
  std::array<VertexMask, kMaskMaxDimension> low_{};
};

}  // namespace hypercut
