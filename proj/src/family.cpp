#include "hypercut/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercut {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::optional<std::string> path_like_violation(const CubePath& p, int max_vertices,
                                               std::optional<int> exact_vertices) {
  if (auto bad = path_violation(p)) return bad;
  const auto count = static_cast<int>(p.verts.size());
  if (exact_vertices && count != *exact_vertices)
    return "path has " + std::to_string(count) + " vertices, expected " +
           std::to_string(*exact_vertices);
  if (count > max_vertices)
    return "path has " + std::to_string(count) + " vertices, at most " +
           std::to_string(max_vertices) + " allowed";
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CutMode mode) {
  return mode == CutMode::structure ? "structure" : "substructure";
}

CutMode parse_cut_mode(std::string_view text) {
  if (text == "structure") return CutMode::structure;
  if (text == "substructure") return CutMode::substructure;
  throw std::invalid_argument("unknown mode \"" + std::string(text) +
                              "\" (expected structure or substructure)");
}

StructureKind StructureKind::star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  return {Shape::star, leaves};
}

StructureKind StructureKind::path(int vertices) {
  if (vertices < 1) throw std::invalid_argument("path needs k >= 1");
  return {Shape::path, vertices};
}

StructureKind StructureKind::cycle(int length) {
  if (length < 4 || length % 2 != 0)
    throw std::invalid_argument("cycle needs even k >= 4, got " + std::to_string(length));
  return {Shape::cycle, length};
}

int StructureKind::vertex_count() const {
  return shape_ == Shape::star ? size_ + 1 : size_;
}

std::string StructureKind::name() const {
  switch (shape_) {
    case Shape::vertex: return "vertex";
    case Shape::edge: return "edge";
    case Shape::star: return "star(" + std::to_string(size_) + ")";
    case Shape::path: return "path(" + std::to_string(size_) + ")";
    case Shape::cycle: return "cycle(" + std::to_string(size_) + ")";
  }
  return {};
}

std::string_view to_string(StructureKind::Shape shape) {
  switch (shape) {
    case StructureKind::Shape::vertex: return "vertex";
    case StructureKind::Shape::edge: return "edge";
    case StructureKind::Shape::star: return "star";
    case StructureKind::Shape::path: return "path";
    case StructureKind::Shape::cycle: return "cycle";
  }
  return {};
}

StructureKind parse_structure_kind(std::string_view shape, int k) {
  if (shape == "path") return StructureKind::path(k);
  if (shape == "cycle") return StructureKind::cycle(k);
  if (shape == "star") return StructureKind::star(k);
  if (shape == "vertex") return StructureKind::vertex();
  if (shape == "edge") return StructureKind::edge();
  throw std::invalid_argument("unknown kind \"" + std::string(shape) + "\"");
}

std::optional<std::string> star_violation(const CubeStar& s) {
  if (s.n < 1 || s.n > kMaxDimension) return "bad ambient dimension " + std::to_string(s.n);
  const Cube cube(s.n);
  if (!cube.contains(s.center)) return std::string("star center outside the cube");
  std::vector<Vertex> sorted = s.leaves;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::string("star leaves repeat");
  for (Vertex leaf : s.leaves)
    if (!cube.adjacent(s.center, leaf))
      return "leaf " + std::to_string(leaf) + " is not adjacent to the center";
  return std::nullopt;
}

int element_dimension(const Element& e) {
  return std::visit([](const auto& x) { return x.n; }, e);
}

std::vector<Vertex> element_vertices(const Element& e) {
  return std::visit(overloaded{
                        [](const CubePath& p) { return p.verts; },
                        [](const CubeCycle& c) { return c.verts; },
                        [](const CubeStar& s) {
                          std::vector<Vertex> v{s.center};
                          v.insert(v.end(), s.leaves.begin(), s.leaves.end());
                          return v;
                        },
                    },
                    e);
}

std::string_view element_shape_name(const Element& e) {
  return std::visit(overloaded{
                        [](const CubePath&) { return std::string_view("path"); },
                        [](const CubeCycle&) { return std::string_view("cycle"); },
                        [](const CubeStar&) { return std::string_view("star"); },
                    },
                    e);
}

std::optional<std::string> element_violation(const Element& e, const StructureKind& kind,
                                              CutMode mode) {
  using Shape = StructureKind::Shape;
  const bool exact = mode == CutMode::structure;
  const int k = kind.size();

  switch (kind.shape()) {
    case Shape::vertex:
    case Shape::edge:
    case Shape::path: {
      const auto* p = std::get_if<CubePath>(&e);
      if (!p) return "expected a path, got a " + std::string(element_shape_name(e));
      return path_like_violation(*p, k, exact ? std::optional<int>(k) : std::nullopt);
    }
    case Shape::cycle: {
      if (const auto* c = std::get_if<CubeCycle>(&e)) {
        if (auto bad = cycle_violation(*c)) return bad;
        if (static_cast<int>(c->length()) != k)
          return "cycle has length " + std::to_string(c->length()) + ", expected " +
                 std::to_string(k);
        return std::nullopt;
      }
      const auto* p = std::get_if<CubePath>(&e);
      if (!p) return "expected a cycle, got a " + std::string(element_shape_name(e));
      if (exact) return std::string("structure mode needs a full cycle, got a path");
      return path_like_violation(*p, k, std::nullopt);
    }
    case Shape::star: {
      const auto* s = std::get_if<CubeStar>(&e);
      if (!s) return "expected a star, got a " + std::string(element_shape_name(e));
      if (auto bad = star_violation(*s)) return bad;
      const auto leaves = static_cast<int>(s->leaves.size());
      if (exact && leaves != k)
        return "star has " + std::to_string(leaves) + " leaves, expected " + std::to_string(k);
      if (leaves > k)
        return "star has " + std::to_string(leaves) + " leaves, at most " + std::to_string(k) +
               " allowed";
      return std::nullopt;
    }
  }
  return std::string("unknown structure kind");
}

std::vector<Vertex> CutFamily::vertex_union() const {
  std::vector<Vertex> all;
  for (const auto& e : elements) {
    const auto v = element_vertices(e);
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace hypercut
