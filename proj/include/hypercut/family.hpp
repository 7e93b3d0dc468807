#pragma once

// Structure descriptors and families of embedded subgraphs (candidate
// structure / substructure cuts).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypercut/cube.hpp"
#include "hypercut/embeddings.hpp"

namespace hypercut {

enum class CutMode { structure, substructure };

std::string_view to_string(CutMode mode);
CutMode parse_cut_mode(std::string_view text);

/// The structure H. `size` is the path vertex count, the cycle length, or the
/// number of star leaves; it is unused for single vertices and edges.
class StructureKind {
 public:
  enum class Shape { vertex, edge, star, path, cycle };

  static StructureKind vertex() { return {Shape::vertex, 1}; }
  static StructureKind edge() { return {Shape::edge, 2}; }
  static StructureKind star(int leaves);
  static StructureKind path(int vertices);
  static StructureKind cycle(int length);

  Shape shape() const { return shape_; }
  int size() const { return size_; }
  /// Vertex count of H itself.
  int vertex_count() const;

  /// "path(6)", "cycle(4)", "star(3)", "vertex", "edge".
  std::string name() const;

  friend bool operator==(const StructureKind&, const StructureKind&) = default;

 private:
  StructureKind(Shape s, int size) : shape_(s), size_(size) {}
  Shape shape_;
  int size_;
};

std::string_view to_string(StructureKind::Shape shape);
/// Builds a kind from the CLI vocabulary {path, cycle, star, vertex, edge}.
StructureKind parse_structure_kind(std::string_view shape, int k);

/// K_{1,r}: a center and r distinct neighbors of it (r = 0 is a lone vertex).
struct CubeStar {
  int n = 0;
  Vertex center = 0;
  std::vector<Vertex> leaves;

  friend bool operator==(const CubeStar&, const CubeStar&) = default;
};

std::optional<std::string> star_violation(const CubeStar& s);

using Element = std::variant<CubePath, CubeCycle, CubeStar>;

int element_dimension(const Element& e);
std::vector<Vertex> element_vertices(const Element& e);
/// "path", "cycle" or "star".
std::string_view element_shape_name(const Element& e);

/// Why `e` fails the element contract of (kind, mode), or nullopt.
/// Structure mode demands a copy of H. Substructure mode accepts a connected
/// subgraph of H: paths on at most k vertices for path(k) and cycle(k), plus
/// the k-cycle itself for cycle(k), and sub-stars for star(r).
std::optional<std::string> element_violation(const Element& e, const StructureKind& kind,
                                              CutMode mode);

/// Elements may share vertices.
struct CutFamily {
  int n = 0;
  StructureKind kind = StructureKind::vertex();
  CutMode mode = CutMode::structure;
  std::vector<Element> elements;

  std::size_t cardinality() const { return elements.size(); }
  /// Sorted, deduplicated union of element vertex sets.
  std::vector<Vertex> vertex_union() const;
};

}  // namespace hypercut
