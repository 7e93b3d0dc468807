#include "hypercut/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hypercut {

int hamming_distance(Vertex u, Vertex v) { return std::popcount(u ^ v); }

Cube::Cube(int dimension) : n_(dimension) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw std::out_of_range("cube dimension must be in [1, " +
                            std::to_string(kMaxDimension) + "], got " +
                            std::to_string(dimension));
}

bool Cube::adjacent(Vertex u, Vertex v) const {
  return contains(u) && contains(v) && hamming_distance(u, v) == 1;
}

Vertex Cube::neighbor(Vertex v, int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("coordinate index " + std::to_string(i) +
                            " outside [0, " + std::to_string(n_) + ")");
  require_vertex(v);
  return v ^ (Vertex{1} << i);
}

std::vector<Vertex> Cube::neighbors(Vertex v) const {
  require_vertex(v);
  std::vector<Vertex> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(v ^ (Vertex{1} << i));
  return out;
}

std::vector<Vertex> Cube::common_neighbors(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  std::vector<Vertex> out;
  for (int i = 0; i < n_; ++i) {
    const Vertex w = u ^ (Vertex{1} << i);
    if (hamming_distance(w, v) == 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> Cube::split(int i) const {
  if (n_ < 2) throw std::invalid_argument("split needs dimension >= 2");
  if (i < 0 || i >= n_)
    throw std::out_of_range("split coordinate " + std::to_string(i) +
                            " outside [0, " + std::to_string(n_) + ")");
  std::pair<std::vector<Vertex>, std::vector<Vertex>> sides;
  sides.first.reserve(vertex_count() / 2);
  sides.second.reserve(vertex_count() / 2);
  for (Vertex v = 0; v < vertex_count(); ++v)
    ((v >> i) & 1u ? sides.second : sides.first).push_back(v);
  return sides;
}

std::string Cube::render(Vertex v) const {
  require_vertex(v);
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if ((v >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Vertex Cube::parse(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("vertex \"" + std::string(bits) + "\" must have " +
                                std::to_string(n_) + " bits");
  Vertex v = 0;
  for (int i = 0; i < n_; ++i) {
    const char c = bits[static_cast<std::size_t>(i)];
    if (c == '1')
      v |= Vertex{1} << i;
    else if (c != '0')
      throw std::invalid_argument("vertex \"" + std::string(bits) +
                                  "\" contains a non-binary digit");
  }
  return v;
}

void Cube::require_vertex(Vertex v) const {
  if (!contains(v))
    throw std::out_of_range("label " + std::to_string(v) + " is not a vertex of Q_" +
                            std::to_string(n_));
}

void Cube::require_edge(Edge e) const {
  require_vertex(e.a);
  require_vertex(e.b);
  if (hamming_distance(e.a, e.b) != 1)
    throw std::invalid_argument("(" + render(e.a) + ", " + render(e.b) +
                                ") is not an edge of Q_" + std::to_string(n_));
}

Automorphism::Automorphism(std::vector<int> perm, Vertex xor_mask)
    : perm_(std::move(perm)), mask_(xor_mask) {
  const int n = dimension();
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("bad automorphism dimension");
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("automorphism perm is not a permutation");
  if ((mask_ >> n) != 0) throw std::invalid_argument("automorphism mask wider than dimension");
}

Automorphism Automorphism::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return Automorphism(std::move(perm), 0);
}

Vertex Automorphism::apply(Vertex v) const {
  Vertex out = 0;
  for (std::size_t t = 0; t < perm_.size(); ++t)
    out |= ((v >> t) & 1u) << perm_[t];
  return out ^ mask_;
}

Automorphism Automorphism::inverse() const {
  // apply(v) = P v ^ m, so the inverse is P^{-1}(w ^ m) = P^{-1} w ^ P^{-1} m.
  std::vector<int> inv(perm_.size());
  for (std::size_t t = 0; t < perm_.size(); ++t)
    inv[static_cast<std::size_t>(perm_[t])] = static_cast<int>(t);
  Automorphism linear(inv, 0);
  const Vertex mask = linear.apply(mask_);
  return Automorphism(std::move(inv), mask);
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (other.dimension() != dimension())
    throw std::invalid_argument("composing automorphisms of different dimensions");
  std::vector<int> perm(perm_.size());
  for (std::size_t t = 0; t < perm_.size(); ++t)
    perm[t] = perm_[static_cast<std::size_t>(other.perm_[t])];
  const Vertex mask = apply(other.mask_);
  return Automorphism(std::move(perm), mask);
}

Vertex apply_automorphism(const Automorphism& a, Vertex v) { return a.apply(v); }

Automorphism edge_mapping_automorphism(const Cube& cube, Edge src, Edge dst) {
  cube.require_edge(src);
  cube.require_edge(dst);
  const int from = std::countr_zero(src.a ^ src.b);
  const int to = std::countr_zero(dst.a ^ dst.b);
  std::vector<int> perm(static_cast<std::size_t>(cube.dimension()));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<std::size_t>(from)], perm[static_cast<std::size_t>(to)]);
  const Automorphism linear(perm, 0);
  return Automorphism(std::move(perm), linear.apply(src.a) ^ dst.a);
}

std::vector<Automorphism> all_automorphisms(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("all_automorphisms supports 1 <= n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Automorphism> out;
  do {
    for (Vertex mask = 0; mask < (Vertex{1} << n); ++mask) out.emplace_back(perm, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hypercut
