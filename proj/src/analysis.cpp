#include "hypercut/analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "hypercut/bitcube.hpp"

namespace hypercut {
namespace {

constexpr int kMaxTraversalDimension = 26;

VertexMask next_subset_same_size(VertexMask x) {
  // Gosper's hack.
  const VertexMask low = x & (~x + 1);
  const VertexMask ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

ComplementReport components_after_removal(int n, std::span<const Vertex> removed) {
  if (n < 1 || n > kMaxTraversalDimension)
    throw std::out_of_range("components_after_removal supports 1 <= n <= " +
                            std::to_string(kMaxTraversalDimension));
  const Cube cube(n);
  const auto count = static_cast<std::size_t>(cube.vertex_count());
  // 0 = present, 1 = removed, 2 = visited.
  std::vector<std::uint8_t> state(count, 0);
  for (Vertex v : removed) {
    cube.require_vertex(v);
    state[v] = 1;
  }

  ComplementReport report;
  std::vector<Vertex> component;
  std::vector<Vertex> smallest;
  std::deque<Vertex> queue;
  std::uint64_t remaining = 0;
  for (Vertex start = 0; start < count; ++start) {
    if (state[start] != 0) continue;
    component.clear();
    state[start] = 2;
    queue.push_back(start);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (int i = 0; i < n; ++i) {
        const Vertex w = v ^ (Vertex{1} << i);
        if (state[w] == 0) {
          state[w] = 2;
          queue.push_back(w);
        }
      }
    }
    ++report.component_count;
    report.component_sizes.push_back(component.size());
    remaining += component.size();
    if (smallest.empty() || component.size() < smallest.size()) smallest = component;
  }
  std::sort(smallest.begin(), smallest.end());
  report.smallest_component = std::move(smallest);
  report.is_trivial = remaining <= 1;
  return report;
}

std::string_view to_string(CutVerdict::Kind kind) {
  switch (kind) {
    case CutVerdict::Kind::valid_cut: return "valid-cut";
    case CutVerdict::Kind::not_a_cut: return "elements-ok-but-not-a-cut";
    case CutVerdict::Kind::malformed_element: return "malformed-element";
  }
  return {};
}

CutVerdict validate_cut(const CutFamily& f) {
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const Element& e = f.elements[i];
    if (element_dimension(e) != f.n)
      return {CutVerdict::Kind::malformed_element, i,
              "element lives in Q_" + std::to_string(element_dimension(e)) + ", family in Q_" +
                  std::to_string(f.n)};
    if (auto bad = element_violation(e, f.kind, f.mode))
      return {CutVerdict::Kind::malformed_element, i, *bad};
  }
  const auto removed = f.vertex_union();
  const auto report = components_after_removal(f.n, removed);
  if (!report.is_cut())
    return {CutVerdict::Kind::not_a_cut, 0,
            "complement is connected with " + std::to_string(report.component_sizes.front()) +
                " vertices"};
  return {};
}

int path_neighbor_bound(int k) {
  if (k < 3) throw std::out_of_range("path_neighbor_bound needs k >= 3");
  return 2 * (k / 3) + k % 3;
}

int pair_neighbor_count(int n, Edge pair, std::span<const Vertex> obstacle) {
  const Cube cube(n);
  cube.require_edge(pair);
  int count = 0;
  for (Vertex w : obstacle) {
    cube.require_vertex(w);
    if (w == pair.a || w == pair.b)
      throw std::invalid_argument("pair vertex " + cube.render(w) + " lies on the obstacle");
    if (hamming_distance(w, pair.a) == 1 || hamming_distance(w, pair.b) == 1) ++count;
  }
  return count;
}

int check_pair_neighbor_counts(int n, Edge pair, const CubePath& obstacle) {
  if (auto bad = path_violation(obstacle)) throw std::invalid_argument("obstacle: " + *bad);
  return pair_neighbor_count(n, pair, obstacle.verts);
}

int check_pair_neighbor_counts(int n, Edge pair, const CubeCycle& obstacle) {
  if (auto bad = cycle_violation(obstacle)) throw std::invalid_argument("obstacle: " + *bad);
  return pair_neighbor_count(n, pair, obstacle.verts);
}

std::optional<int> g_extra_connectivity(int n, int g, int ceiling) {
  if (ceiling > kMaskMaxDimension - 1) ceiling = kMaskMaxDimension - 1;
  if (n < 1 || n > ceiling)
    throw std::out_of_range("exhaustive g-extra search supports 1 <= n <= " +
                            std::to_string(ceiling) + ", got n = " + std::to_string(n));
  if (g < 0 || g > n) throw std::out_of_range("g-extra search needs 0 <= g <= n");

  const BitCube cube(n);
  const int vertices = 1 << n;
  const int min_component = g + 1;
  for (int size = 1; size + 2 * min_component <= vertices; ++size) {
    const VertexMask last = ((VertexMask{1} << size) - 1) << (vertices - size);
    for (VertexMask s = (VertexMask{1} << size) - 1;; s = next_subset_same_size(s)) {
      VertexMask rest = cube.full() & ~s;
      int components = 0;
      bool big_enough = true;
      while (rest != 0 && big_enough) {
        const VertexMask comp = cube.component_of(rest, rest);
        big_enough = std::popcount(comp) >= min_component;
        rest &= ~comp;
        ++components;
      }
      if (big_enough && components >= 2) return size;
      if (s == last) break;
    }
  }
  return std::nullopt;
}

}  // namespace hypercut
