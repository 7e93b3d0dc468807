#pragma once

// Seeded randomized (and one exhaustive) property checks over Q_n.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypercut/cube.hpp"
#include "hypercut/embeddings.hpp"

namespace hypercut {

struct PropertyReport {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// Largest observed statistic (e.g. neighbor count) across trials.
  int max_observed = 0;
  std::string first_violation;

  bool passed() const { return violations == 0; }
};

Automorphism random_automorphism(int n, std::mt19937_64& rng);

/// Self-avoiding random walk on k vertices, restarted until it succeeds.
CubePath random_embedded_path(int n, int k, std::mt19937_64& rng);

/// A random k-cycle: either a random automorphic image of the ladder cycle or
/// a rejection-sampled closed self-avoiding walk.
CubeCycle random_embedded_cycle(int n, int k, std::mt19937_64& rng);

/// Every pair at distance 2 in Q_2..Q_{n_max} has exactly two common neighbors.
PropertyReport common_neighbor_property(int n_max);

/// |N({u,v}) ∩ V(P)| <= 2·floor(k/3) + k mod 3 for random paths P on k
/// vertices, k in [k_min, k_max], and adjacent pairs uv off P. `trials` per k.
PropertyReport path_pair_bound_property(int n, int k_min, int k_max, std::uint64_t trials,
                                        std::uint64_t seed);

/// |N({u,v}) ∩ V(C)| <= k-1 for random k-cycles C, k in `lengths`. `trials` per k.
PropertyReport cycle_pair_bound_property(int n, const std::vector<int>& lengths,
                                         std::uint64_t trials, std::uint64_t seed);

}  // namespace hypercut
