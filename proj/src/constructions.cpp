#include "hypercut/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercut {
namespace {

constexpr Vertex unit(int i) { return Vertex{1} << i; }
constexpr Vertex pair_of(int i, int j) { return unit(i) | unit(j); }

// (v)^first, ((v)^first)^{first+1}, (v)^{first+1}, ..., (v)^last around v = 0.
std::vector<Vertex> zigzag(int first, int last) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(2 * (last - first) + 1));
  for (int j = first; j <= last; ++j) {
    out.push_back(unit(j));
    if (j < last) out.push_back(pair_of(j, j + 1));
  }
  return out;
}

// Neighbor windows [start, start + width - 1] covering 0..n-1. The last window
// is shifted left to end at n-1 when width does not divide n.
std::vector<int> window_starts(int n, int width) {
  const int count = (n + width - 1) / width;
  std::vector<int> starts;
  for (int i = 0; i < count; ++i) starts.push_back(std::min(i * width, n - width));
  return starts;
}

CubePath long_path(int n, int k) {
  CubePath p{n, zigzag(0, n - 1)};
  const int extra = k - (2 * n - 1);
  if (extra == 0) return p;

  // Hamiltonian cycle of the x^{n-1} = 1 half through ((v)^{n-2})^{n-1} -- (v)^{n-1}.
  const SubcubeEmbedding upper(n, {{n - 1, true}});
  const CubeCycle ham = upper.lift(hamiltonian_through_edge(n - 1, Edge{unit(n - 2), 0}));
  const auto len = static_cast<std::ptrdiff_t>(ham.verts.size());
  const auto at = std::find(ham.verts.begin(), ham.verts.end(), unit(n - 1)) - ham.verts.begin();
  const Vertex behind = ham.verts[static_cast<std::size_t>((at + len - 1) % len)];
  // Walk away from ((v)^{n-2})^{n-1}, which is already on the path.
  const std::ptrdiff_t step = behind == pair_of(n - 2, n - 1) ? 1 : len - 1;
  std::ptrdiff_t pos = at;
  for (int i = 0; i < extra; ++i) {
    pos = (pos + step) % len;
    p.verts.push_back(ham.verts[static_cast<std::size_t>(pos)]);
  }
  return p;
}

}  // namespace

CutFamily build_path_cut(int n, int k) {
  if (n < 3 || n > kMaxDimension - 1)
    throw std::out_of_range("path cut requires n >= 3, got n = " + std::to_string(n));
  if (k < 3 || static_cast<std::uint64_t>(k) > (std::uint64_t{1} << (n - 1)))
    throw std::out_of_range("path cut requires 3 <= k <= 2^(n-1), got k = " + std::to_string(k));

  CutFamily f{n, StructureKind::path(k), CutMode::structure, {}};
  const bool odd = k % 2 == 1;
  if ((odd && k >= 2 * n - 1) || (!odd && k >= 2 * n)) {
    f.elements.emplace_back(long_path(n, k));
    return f;
  }

  const int width = odd ? (k + 1) / 2 : k / 2;
  for (int start : window_starts(n, width)) {
    const int last = start + width - 1;
    CubePath p{n, zigzag(start, last)};
    if (!odd) p.verts.push_back(pair_of(last, (last + 1) % n));
    f.elements.emplace_back(std::move(p));
  }
  return f;
}

CutFamily build_cycle_cut(int n, int k) {
  if (n < 5 || n > kMaxDimension - 1)
    throw std::out_of_range("cycle cut requires n >= 5, got n = " + std::to_string(n));
  if (k % 2 != 0 || k < 6 || static_cast<std::uint64_t>(k) > (std::uint64_t{1} << (n - 2)))
    throw std::out_of_range("cycle cut requires even 6 <= k <= 2^(n-2), got k = " +
                            std::to_string(k));

  CutFamily f{n, StructureKind::cycle(k), CutMode::structure, {}};
  const int width = k / 2;
  if (width <= n) {
    for (int start : window_starts(n, width)) {
      const int last = start + width - 1;
      CubeCycle c{n, zigzag(start, last)};
      c.verts.push_back(pair_of(last, start));
      f.elements.emplace_back(std::move(c));
    }
    return f;
  }

  // One cycle through every neighbor, closed by an odd path inside the
  // subcube x^{n-2} = 0, x^{n-1} = 1 from (u)^{n-1} to ((u)^0)^{n-1}.
  CubeCycle c{n, zigzag(0, n - 1)};
  const SubcubeEmbedding side(n, {{n - 2, false}, {n - 1, true}});
  const CubePath detour = side.lift(odd_path_between_adjacent(n - 2, 0, 1, k - (2 * n - 1)));
  c.verts.insert(c.verts.end(), detour.verts.begin() + 1, detour.verts.end());
  f.elements.emplace_back(std::move(c));
  return f;
}

Vertex canonical_isolating_vertex(const CutFamily& f) {
  if (f.elements.empty()) throw std::invalid_argument("empty family isolates nothing");
  return 0;
}

}  // namespace hypercut
