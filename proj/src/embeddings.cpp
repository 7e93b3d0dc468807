#include "hypercut/embeddings.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hypercut {
namespace {

std::optional<std::string> sequence_violation(int n, const std::vector<Vertex>& verts) {
  if (n < 1 || n > kMaxDimension) return "bad ambient dimension " + std::to_string(n);
  const Cube cube(n);
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!cube.contains(verts[i]))
      return "vertex " + std::to_string(i) + " is outside Q_" + std::to_string(n);
    if (!seen.insert(verts[i]).second)
      return "vertex " + cube.render(verts[i]) + " repeats";
    if (i > 0 && !cube.adjacent(verts[i - 1], verts[i]))
      return "consecutive vertices " + cube.render(verts[i - 1]) + " and " +
             cube.render(verts[i]) + " are not adjacent";
  }
  return std::nullopt;
}

void require_cube_dimension(int n, int minimum, const char* what) {
  if (n < minimum || n > kMaxDimension)
    throw std::out_of_range(std::string(what) + " needs " + std::to_string(minimum) +
                            " <= n <= " + std::to_string(kMaxDimension) + ", got n = " +
                            std::to_string(n));
}

}  // namespace

bool CubeCycle::has_edge(Edge e) const {
  const std::size_t len = verts.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex x = verts[i];
    const Vertex y = verts[(i + 1) % len];
    if ((x == e.a && y == e.b) || (x == e.b && y == e.a)) return true;
  }
  return false;
}

std::optional<std::string> path_violation(const CubePath& p) {
  if (p.verts.empty()) return std::string("path has no vertices");
  return sequence_violation(p.n, p.verts);
}

std::optional<std::string> cycle_violation(const CubeCycle& c) {
  if (c.verts.size() < 4) return "cycle has " + std::to_string(c.verts.size()) + " vertices";
  if (c.verts.size() % 2 != 0) return std::string("cycle length is odd");
  if (auto bad = sequence_violation(c.n, c.verts)) return bad;
  if (hamming_distance(c.verts.back(), c.verts.front()) != 1)
    return std::string("closing pair is not adjacent");
  return std::nullopt;
}

CubeCycle canonicalize(CubeCycle c) {
  auto& v = c.verts;
  if (v.size() < 3) return c;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v.back() < v[1]) std::reverse(v.begin() + 1, v.end());
  return c;
}

CubeCycle gray_hamiltonian(int n) {
  require_cube_dimension(n, 2, "gray_hamiltonian");
  CubeCycle c{n, {}};
  const Vertex count = Vertex{1} << n;
  c.verts.reserve(count);
  for (Vertex i = 0; i < count; ++i) c.verts.push_back(i ^ (i >> 1));
  return c;
}

CubeCycle hamiltonian_through_edge(int n, Edge e) {
  require_cube_dimension(n, 2, "hamiltonian_through_edge");
  const Cube cube(n);
  cube.require_edge(e);
  // The Gray cycle always starts with the edge (0, 1).
  const Automorphism a = edge_mapping_automorphism(cube, Edge{0, 1}, e);
  CubeCycle c = gray_hamiltonian(n);
  for (Vertex& v : c.verts) v = a.apply(v);
  return canonicalize(std::move(c));
}

CubeCycle embed_even_cycle(int n, int length) {
  require_cube_dimension(n, 2, "embed_even_cycle");
  if (length % 2 != 0) throw std::invalid_argument("cycle length must be even");
  if (length < 4 || static_cast<std::uint64_t>(length) > (std::uint64_t{1} << n))
    throw std::out_of_range("cycle length " + std::to_string(length) + " outside [4, 2^" +
                            std::to_string(n) + "]");
  // Two matched columns of a Gray-code prefix of Q_{n-1}, joined at both ends
  // across coordinate n-1.
  const Vertex top = Vertex{1} << (n - 1);
  const Vertex half = static_cast<Vertex>(length / 2);
  CubeCycle c{n, {}};
  c.verts.reserve(static_cast<std::size_t>(length));
  for (Vertex i = 0; i < half; ++i) c.verts.push_back(i ^ (i >> 1));
  for (Vertex i = half; i-- > 0;) c.verts.push_back((i ^ (i >> 1)) | top);
  return canonicalize(std::move(c));
}

CubePath odd_path_between_adjacent(int n, Vertex u, Vertex v, int length) {
  require_cube_dimension(n, 2, "odd_path_between_adjacent");
  const Cube cube(n);
  cube.require_edge(Edge{u, v});
  if (length % 2 == 0) throw std::invalid_argument("path length between adjacent vertices must be odd");
  if (length < 1 || static_cast<std::uint64_t>(length) >= cube.vertex_count())
    throw std::out_of_range("path length " + std::to_string(length) + " outside [1, 2^" +
                            std::to_string(n) + " - 1]");
  if (length == 1) return CubePath{n, {u, v}};

  // A (length+1)-cycle through uv, with uv removed.
  const CubeCycle base = embed_even_cycle(n, length + 1);
  const Automorphism a =
      edge_mapping_automorphism(cube, Edge{base.verts[0], base.verts[1]}, Edge{u, v});
  CubePath p{n, {}};
  p.verts.reserve(base.verts.size());
  // base.verts[0] -> u and base.verts[1] -> v; walk from u away from v.
  p.verts.push_back(a.apply(base.verts[0]));
  for (std::size_t i = base.verts.size() - 1; i >= 1; --i) p.verts.push_back(a.apply(base.verts[i]));
  return p;
}

SubcubeEmbedding::SubcubeEmbedding(int ambient_dimension, std::map<int, bool> fixed)
    : ambient_(ambient_dimension) {
  require_cube_dimension(ambient_dimension, 1, "SubcubeEmbedding");
  for (const auto& [coord, bit] : fixed) {
    if (coord < 0 || coord >= ambient_dimension)
      throw std::out_of_range("fixed coordinate " + std::to_string(coord) + " is not a coordinate of Q_" +
                              std::to_string(ambient_dimension));
    pinned_mask_ |= Vertex{1} << coord;
    if (bit) pinned_ |= Vertex{1} << coord;
  }
  for (int i = 0; i < ambient_dimension; ++i)
    if (!fixed.contains(i)) free_.push_back(i);
  if (free_.empty()) throw std::invalid_argument("subcube must keep at least one free coordinate");
}

Vertex SubcubeEmbedding::lift(Vertex inner) const {
  if ((inner >> free_.size()) != 0)
    throw std::out_of_range("label " + std::to_string(inner) + " is not a vertex of the inner Q_" +
                            std::to_string(free_.size()));
  Vertex out = pinned_;
  for (std::size_t t = 0; t < free_.size(); ++t) out |= ((inner >> t) & 1u) << free_[t];
  return out;
}

bool SubcubeEmbedding::contains(Vertex ambient) const {
  return (ambient >> ambient_) == 0 && (ambient & pinned_mask_) == pinned_;
}

CubePath SubcubeEmbedding::lift(const CubePath& inner) const {
  if (inner.n != inner_dimension())
    throw std::invalid_argument("inner path lives in Q_" + std::to_string(inner.n) +
                                ", subcube has dimension " + std::to_string(inner_dimension()));
  CubePath out{ambient_, {}};
  out.verts.reserve(inner.verts.size());
  for (Vertex v : inner.verts) out.verts.push_back(lift(v));
  return out;
}

CubeCycle SubcubeEmbedding::lift(const CubeCycle& inner) const {
  if (inner.n != inner_dimension())
    throw std::invalid_argument("inner cycle lives in Q_" + std::to_string(inner.n) +
                                ", subcube has dimension " + std::to_string(inner_dimension()));
  CubeCycle out{ambient_, {}};
  out.verts.reserve(inner.verts.size());
  for (Vertex v : inner.verts) out.verts.push_back(lift(v));
  return out;
}

CubePath restrict_to_subcube(int ambient_dimension, const std::map<int, bool>& fixed,
                             const CubePath& inner) {
  return SubcubeEmbedding(ambient_dimension, fixed).lift(inner);
}

CubeCycle restrict_to_subcube(int ambient_dimension, const std::map<int, bool>& fixed,
                              const CubeCycle& inner) {
  return SubcubeEmbedding(ambient_dimension, fixed).lift(inner);
}

}  // namespace hypercut
