#pragma once

// Label-arithmetic model of the n-dimensional hypercube Q_n.
//
// Vertex labels are n-bit integers. Coordinate x^i lives in bit i, so the
// neighbor across coordinate i is a single XOR with (1 << i). Rendered
// strings print x^0 first: in Q_3 the label 1 renders as "100".
//
// Nothing here materializes an adjacency structure.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypercut {

using Vertex = std::uint32_t;

/// Largest dimension supported by the label type.
inline constexpr int kMaxDimension = 30;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

int hamming_distance(Vertex u, Vertex v);

class Cube {
 public:
  explicit Cube(int dimension);

  int dimension() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const {
    return static_cast<std::uint64_t>(n_) << (n_ - 1);
  }
  Vertex all_ones() const { return static_cast<Vertex>(vertex_count() - 1); }

  bool contains(Vertex v) const { return v < vertex_count(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// (v)^i: flips coordinate i. Throws std::out_of_range on a bad index.
  Vertex neighbor(Vertex v, int i) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// N(u) ∩ N(v). Exactly two vertices when u and v are at distance 2.
  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;

  /// Partition by coordinate i: (x^i = 0 side, x^i = 1 side), each in
  /// ascending label order. Each side induces a copy of Q_{n-1}.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> split(int i) const;

  /// Binary string x^0 x^1 ... x^{n-1}.
  std::string render(Vertex v) const;
  /// Inverse of render(); throws std::invalid_argument on malformed input.
  Vertex parse(std::string_view bits) const;

  void require_vertex(Vertex v) const;
  void require_edge(Edge e) const;

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  int n_;
};

/// Coordinate permutation followed by a translation. Coordinate t of the
/// input moves to coordinate perm[t]; the result is XORed with xor_mask.
class Automorphism {
 public:
  Automorphism(std::vector<int> perm, Vertex xor_mask);

  static Automorphism identity(int n);

  int dimension() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  Vertex xor_mask() const { return mask_; }

  Vertex apply(Vertex v) const;
  Automorphism inverse() const;
  /// (this ∘ other)(v) = this->apply(other.apply(v)).
  Automorphism compose(const Automorphism& other) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<int> perm_;
  Vertex mask_;
};

Vertex apply_automorphism(const Automorphism& a, Vertex v);

/// An automorphism sending src.a -> dst.a and src.b -> dst.b.
/// Throws std::invalid_argument when either pair is not an edge.
Automorphism edge_mapping_automorphism(const Cube& cube, Edge src, Edge dst);

/// Every automorphism of Q_n, n!·2^n of them. Only sensible for small n.
std::vector<Automorphism> all_automorphisms(int n);

}  // namespace hypercut
