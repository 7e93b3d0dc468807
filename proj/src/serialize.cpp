#include "hypercut/serialize.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hypercut {
namespace {

using nlohmann::ordered_json;

ordered_json render_list(const Cube& cube, const std::vector<Vertex>& verts) {
  ordered_json out = ordered_json::array();
  for (Vertex v : verts) out.push_back(cube.render(v));
  return out;
}

constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#fb8072", "#80b1d3", "#fdb462",
                                                 "#b3de69", "#fccde5", "#bc80bd", "#ffed6f"};

}  // namespace

ordered_json element_to_json(const Element& e) {
  const Cube cube(element_dimension(e));
  ordered_json out;
  out["shape"] = std::string(element_shape_name(e));
  if (const auto* s = std::get_if<CubeStar>(&e)) {
    out["center"] = cube.render(s->center);
    out["leaves"] = render_list(cube, s->leaves);
  } else {
    out["vertices"] = render_list(cube, element_vertices(e));
  }
  return out;
}

ordered_json family_to_json(const CutFamily& f) {
  const Cube cube(f.n);
  ordered_json out;
  out["schema"] = kFamilySchema;
  out["n"] = f.n;
  out["kind"] = f.kind.name();
  out["mode"] = std::string(to_string(f.mode));
  out["cardinality"] = f.cardinality();
  ordered_json elements = ordered_json::array();
  for (const Element& e : f.elements) elements.push_back(element_to_json(e));
  out["elements"] = std::move(elements);

  const CutVerdict verdict = validate_cut(f);
  out["verdict"] = std::string(to_string(verdict.kind));
  if (!verdict.reason.empty()) out["reason"] = verdict.reason;

  const auto removed = f.vertex_union();
  out["removed_vertices"] = removed.size();
  if (f.n <= 26) {
    const ComplementReport rep = components_after_removal(f.n, removed);
    out["complement_components"] = rep.component_count;
    if (rep.smallest_component.size() == 1)
      out["isolated_vertex"] = cube.render(rep.smallest_component.front());
    else
      out["isolated_vertex"] = nullptr;
  }
  return out;
}

ordered_json oracle_to_json(int n, const StructureKind& kind, CutMode mode, const OracleResult& r) {
  ordered_json out;
  out["schema"] = kOracleSchema;
  out["n"] = n;
  out["kind"] = kind.name();
  out["mode"] = std::string(to_string(mode));
  out["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
  out["lower_bound"] = r.lower_bound;
  out["upper_bound"] = r.upper_bound ? ordered_json(*r.upper_bound) : ordered_json(nullptr);
  out["exhaustive"] = r.exhaustive;
  if (r.witness) {
    ordered_json elements = ordered_json::array();
    for (const Element& e : r.witness->elements) elements.push_back(element_to_json(e));
    out["witness"] = std::move(elements);
  } else {
    out["witness"] = nullptr;
  }
  out["stats"] = {{"copies", r.stats.copies},
                  {"vertex_sets", r.stats.vertex_sets},
                  {"orbit_representatives", r.stats.orbit_representatives},
                  {"families_evaluated", r.stats.families_evaluated},
                  {"levels_refuted", r.stats.levels_refuted}};
  return out;
}

std::string family_to_csv(const CutFamily& f) {
  const Cube cube(f.n);
  std::ostringstream os;
  os << "element,shape,index,vertex\n";
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const auto verts = element_vertices(f.elements[i]);
    for (std::size_t j = 0; j < verts.size(); ++j)
      os << i << ',' << element_shape_name(f.elements[i]) << ',' << j << ','
         << cube.render(verts[j]) << '\n';
  }
  return os.str();
}

std::string export_dot(int n, std::span<const Vertex> removed) {
  if (n < 1 || n > kMaxDotDimension)
    throw std::out_of_range("DOT export supports 1 <= n <= " + std::to_string(kMaxDotDimension) +
                            ", got n = " + std::to_string(n));
  const Cube cube(n);
  const std::size_t count = cube.vertex_count();
  std::vector<bool> gone(count, false);
  for (Vertex v : removed) {
    cube.require_vertex(v);
    gone[v] = true;
  }

  // Component index per surviving vertex, numbered by lowest label.
  std::vector<int> comp(count, -1);
  int components = 0;
  for (Vertex s = 0; s < count; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    std::deque<Vertex> queue{s};
    comp[s] = components;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : cube.neighbors(u))
        if (!gone[w] && comp[w] < 0) {
          comp[w] = components;
          queue.push_back(w);
        }
    }
    ++components;
  }

  std::ostringstream os;
  os << "graph Q" << n << " {\n";
  os << "  graph [label=\"Q_" << n << ": " << removed.size() << " removed, " << components
     << " component" << (components == 1 ? "" : "s") << "\"];\n";
  os << "  node [shape=circle, style=filled, fontname=\"monospace\"];\n";
  for (Vertex v = 0; v < count; ++v) {
    os << "  \"" << cube.render(v) << "\" [";
    if (gone[v])
      os << "fillcolor=\"#d9d9d9\", style=\"filled,dashed\", fontcolor=\"#737373\"";
    else
      os << "fillcolor=\"" << kPalette[static_cast<std::size_t>(comp[v]) % kPalette.size()]
         << "\", group=" << comp[v];
    os << "];\n";
  }
  for (Vertex u = 0; u < count; ++u)
    for (int i = 0; i < n; ++i) {
      const Vertex w = u ^ (Vertex{1} << i);
      if (w < u) continue;
      os << "  \"" << cube.render(u) << "\" -- \"" << cube.render(w) << '"';
      if (gone[u] || gone[w]) os << " [style=dotted, color=\"#bdbdbd\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hypercut
