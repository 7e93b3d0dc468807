#include "hypercut/properties.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "hypercut/analysis.hpp"

namespace hypercut {
namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Vertex random_vertex(int n, std::mt19937_64& rng) {
  return static_cast<Vertex>(std::uniform_int_distribution<std::uint64_t>(0, (1ull << n) - 1)(rng));
}

std::optional<std::vector<Vertex>> self_avoiding_walk(int n, Vertex start, int count,
                                                      std::mt19937_64& rng) {
  std::vector<Vertex> walk{start};
  std::unordered_set<Vertex> used{start};
  std::vector<Vertex> options;
  while (static_cast<int>(walk.size()) < count) {
    options.clear();
    for (int i = 0; i < n; ++i) {
      const Vertex w = walk.back() ^ (Vertex{1} << i);
      if (!used.contains(w)) options.push_back(w);
    }
    if (options.empty()) return std::nullopt;
    const Vertex next = options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(options.size()) - 1))];
    walk.push_back(next);
    used.insert(next);
  }
  return walk;
}

// An edge uv with both ends off `obstacle`. Half the time u is chosen next to
// the obstacle, so that the neighbor counts are not trivially zero.
std::optional<Edge> pair_off(int n, const std::vector<Vertex>& obstacle, std::mt19937_64& rng) {
  const std::unordered_set<Vertex> on(obstacle.begin(), obstacle.end());
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vertex u;
    if (uniform_int(rng, 0, 1) == 0) {
      const Vertex x = obstacle[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(obstacle.size()) - 1))];
      u = x ^ (Vertex{1} << uniform_int(rng, 0, n - 1));
    } else {
      u = random_vertex(n, rng);
    }
    const Vertex v = u ^ (Vertex{1} << uniform_int(rng, 0, n - 1));
    if (!on.contains(u) && !on.contains(v)) return Edge{u, v};
  }
  return std::nullopt;
}

void note_violation(PropertyReport& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

std::string render_all(const Cube& cube, const std::vector<Vertex>& verts) {
  std::string s = "(";
  for (std::size_t i = 0; i < verts.size(); ++i) s += (i ? "," : "") + cube.render(verts[i]);
  return s + ")";
}

}  // namespace

Automorphism random_automorphism(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Automorphism(std::move(perm), random_vertex(n, rng));
}

CubePath random_embedded_path(int n, int k, std::mt19937_64& rng) {
  if (k < 1 || static_cast<std::uint64_t>(k) > (1ull << n))
    throw std::out_of_range("random path needs 1 <= k <= 2^n");
  for (;;)
    if (auto walk = self_avoiding_walk(n, random_vertex(n, rng), k, rng)) return CubePath{n, *walk};
}

CubeCycle random_embedded_cycle(int n, int k, std::mt19937_64& rng) {
  if (uniform_int(rng, 0, 1) == 0) {
    const Automorphism a = random_automorphism(n, rng);
    CubeCycle c = embed_even_cycle(n, k);
    for (Vertex& v : c.verts) v = a.apply(v);
    return canonicalize(std::move(c));
  }
  for (;;) {
    const auto walk = self_avoiding_walk(n, random_vertex(n, rng), k, rng);
    if (walk && hamming_distance(walk->front(), walk->back()) == 1)
      return canonicalize(CubeCycle{n, *walk});
  }
}

PropertyReport common_neighbor_property(int n_max) {
  PropertyReport r{"common-neighbors-at-distance-2", 0, 0, 0, {}};
  for (int n = 2; n <= n_max; ++n) {
    const Cube cube(n);
    for (Vertex u = 0; u < cube.vertex_count(); ++u)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Vertex v = u ^ (Vertex{1} << i) ^ (Vertex{1} << j);
          if (v < u) continue;
          const auto common = cube.common_neighbors(u, v);
          ++r.trials;
          r.max_observed = std::max(r.max_observed, static_cast<int>(common.size()));
          if (common.size() != 2)
            note_violation(r, cube.render(u) + "," + cube.render(v) + " share " +
                                  std::to_string(common.size()));
        }
  }
  return r;
}

PropertyReport path_pair_bound_property(int n, int k_min, int k_max, std::uint64_t trials,
                                        std::uint64_t seed) {
  PropertyReport r{"path-pair-neighbor-bound", 0, 0, 0, {}};
  std::mt19937_64 rng(seed);
  const Cube cube(n);
  for (int k = k_min; k <= k_max; ++k) {
    const int bound = path_neighbor_bound(k);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const CubePath p = random_embedded_path(n, k, rng);
      const auto pair = pair_off(n, p.verts, rng);
      if (!pair) continue;
      const int count = check_pair_neighbor_counts(n, *pair, p);
      ++r.trials;
      r.max_observed = std::max(r.max_observed, count);
      if (count > bound)
        note_violation(r, "k=" + std::to_string(k) + " pair " + cube.render(pair->a) + "-" +
                              cube.render(pair->b) + " path " + render_all(cube, p.verts) +
                              " count " + std::to_string(count));
    }
  }
  return r;
}

PropertyReport cycle_pair_bound_property(int n, const std::vector<int>& lengths,
                                         std::uint64_t trials, std::uint64_t seed) {
  PropertyReport r{"cycle-pair-neighbor-bound", 0, 0, 0, {}};
  std::mt19937_64 rng(seed);
  const Cube cube(n);
  for (int k : lengths) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      const CubeCycle c = random_embedded_cycle(n, k, rng);
      const auto pair = pair_off(n, c.verts, rng);
      if (!pair) continue;
      const int count = check_pair_neighbor_counts(n, *pair, c);
      ++r.trials;
      r.max_observed = std::max(r.max_observed, count);
      if (count > k - 1)
        note_violation(r, "k=" + std::to_string(k) + " pair " + cube.render(pair->a) + "-" +
                              cube.render(pair->b) + " cycle " + render_all(cube, c.verts) +
                              " count " + std::to_string(count));
    }
  }
  return r;
}

}  // namespace hypercut
