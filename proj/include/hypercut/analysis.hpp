#pragma once

// Complement connectivity, cut validation, the pair-neighborhood bounds and
// brute-force g-extra connectivity.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercut/cube.hpp"
#include "hypercut/family.hpp"

namespace hypercut {

struct ComplementReport {
  int component_count = 0;
  /// Sizes in order of each component's lowest label.
  std::vector<std::uint64_t> component_sizes;
  /// Sorted; empty when nothing remains.
  std::vector<Vertex> smallest_component;
  /// At most one vertex remains.
  bool is_trivial = false;

  /// The removed set is a cut: the remainder is trivial or disconnected.
  bool is_cut() const { return is_trivial || component_count >= 2; }
};

/// Components of Q_n minus `removed`. Duplicates in `removed` are ignored.
ComplementReport components_after_removal(int n, std::span<const Vertex> removed);

struct CutVerdict {
  enum class Kind { valid_cut, not_a_cut, malformed_element };

  Kind kind = Kind::valid_cut;
  /// Offending element for malformed_element.
  std::size_t index = 0;
  std::string reason;

  bool ok() const { return kind == Kind::valid_cut; }
};

std::string_view to_string(CutVerdict::Kind kind);

/// First failure among: element contracts (in order), then the complement test.
CutVerdict validate_cut(const CutFamily& f);

/// 2·floor(k/3) + (k mod 3): the most vertices of a k-vertex path that can
/// neighbor an adjacent pair lying off the path.
int path_neighbor_bound(int k);

/// |N({u, v}) ∩ V(obstacle)| for an edge uv disjoint from the obstacle.
/// N({u, v}) excludes u and v themselves.
int pair_neighbor_count(int n, Edge pair, std::span<const Vertex> obstacle);
int check_pair_neighbor_counts(int n, Edge pair, const CubePath& obstacle);
int check_pair_neighbor_counts(int n, Edge pair, const CubeCycle& obstacle);

inline constexpr int kGExtraDefaultCeiling = 4;

/// Minimum |S| such that Q_n - S is disconnected and every component has at
/// least g+1 vertices, by exhaustive search in increasing |S|. nullopt when no
/// such S exists. Throws std::out_of_range when n exceeds `ceiling`.
std::optional<int> g_extra_connectivity(int n, int g, int ceiling = kGExtraDefaultCeiling);

}  // namespace hypercut
