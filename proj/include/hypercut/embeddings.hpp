#pragma once

// Paths and cycles embedded in Q_n, and the constructive embeddings the cut
// families are built from.
//
// Cycles returned from this module are canonical: smallest label first, then
// the smaller of its two cycle neighbors.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercut/cube.hpp"

namespace hypercut {

struct CubePath {
  int n = 0;
  std::vector<Vertex> verts;

  std::size_t vertex_count() const { return verts.size(); }
  friend bool operator==(const CubePath&, const CubePath&) = default;
};

/// Closing edge implicit: verts.back() is adjacent to verts.front().
struct CubeCycle {
  int n = 0;
  std::vector<Vertex> verts;

  std::size_t length() const { return verts.size(); }
  bool has_edge(Edge e) const;
  friend bool operator==(const CubeCycle&, const CubeCycle&) = default;
};

/// First violated path invariant, or nullopt. An empty path is a violation.
std::optional<std::string> path_violation(const CubePath& p);
/// First violated cycle invariant, or nullopt.
std::optional<std::string> cycle_violation(const CubeCycle& c);

/// Rotate/reflect so the smallest label is first and its smaller cycle
/// neighbor second.
CubeCycle canonicalize(CubeCycle c);

/// Reflected Gray code cycle of Q_n, n >= 2.
CubeCycle gray_hamiltonian(int n);

/// Hamiltonian cycle of Q_n that uses edge e.
CubeCycle hamiltonian_through_edge(int n, Edge e);

/// A cycle on exactly `length` vertices; length even, 4 <= length <= 2^n.
CubeCycle embed_even_cycle(int n, int length);

/// A u–v path of `length` edges (length+1 vertices) for adjacent u, v and odd
/// length in [1, 2^n - 1].
CubePath odd_path_between_adjacent(int n, Vertex u, Vertex v, int length);

/// Embeds a smaller cube into Q_n by pinning some coordinates. Free
/// coordinates, in ascending order, receive the inner label's bits 0, 1, ...
class SubcubeEmbedding {
 public:
  SubcubeEmbedding(int ambient_dimension, std::map<int, bool> fixed);

  int ambient_dimension() const { return ambient_; }
  int inner_dimension() const { return static_cast<int>(free_.size()); }

  Vertex lift(Vertex inner) const;
  bool contains(Vertex ambient) const;

  CubePath lift(const CubePath& inner) const;
  CubeCycle lift(const CubeCycle& inner) const;

 private:
  int ambient_;
  std::vector<int> free_;
  Vertex pinned_ = 0;
  Vertex pinned_mask_ = 0;
};

CubePath restrict_to_subcube(int ambient_dimension, const std::map<int, bool>& fixed,
                             const CubePath& inner);
CubeCycle restrict_to_subcube(int ambient_dimension, const std::map<int, bool>& fixed,
                              const CubeCycle& inner);

}  // namespace hypercut
