#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "hypercut/constructions.hpp"
#include "hypercut/serialize.hpp"

using namespace hypercut;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("family JSON") {
  const auto j = family_to_json(build_path_cut(5, 3));
  CHECK(j["schema"] == kFamilySchema);
  CHECK(j["cardinality"] == 3);
  CHECK(j["kind"] == "path(3)");
  CHECK(j["verdict"] == "valid-cut");
  CHECK(j["isolated_vertex"] == "00000");
  CHECK(j["elements"][0]["vertices"][0] == "10000");
  // Deterministic output.
  CHECK(j.dump() == family_to_json(build_path_cut(5, 3)).dump());
}

TEST_CASE("oracle JSON") {
  const auto r = min_structure_cut(3, StructureKind::cycle(4), CutMode::structure);
  const auto j = oracle_to_json(3, StructureKind::cycle(4), CutMode::structure, r);
  CHECK(j["schema"] == kOracleSchema);
  CHECK(j["value"] == 2);
  CHECK(j["exhaustive"] == true);
  CHECK(j["witness"].size() == 2);
  CHECK(j["stats"]["orbit_representatives"].get<int>() >= 1);
}

TEST_CASE("family CSV") {
  const auto csv = family_to_csv(build_path_cut(4, 7));
  CHECK(csv.rfind("element,shape,index,vertex\n", 0) == 0);
  CHECK(occurrences(csv, "\n") == 8);
  CHECK(csv.find("0,path,0,1000") != std::string::npos);
}

TEST_CASE("DOT export") {
  const auto whole = export_dot(3, {});
  CHECK(occurrences(whole, " -- ") == 12);
  CHECK(occurrences(whole, "fillcolor") == 8);
  CHECK(whole.find("1 component\"") != std::string::npos);

  const std::vector<Vertex> face{0, 1, 3, 2};
  const auto one = export_dot(3, face);
  CHECK(occurrences(one, "dashed") == 4);
  CHECK(occurrences(one, "group=0") == 4);
  CHECK(occurrences(one, "group=1") == 0);

  const auto cut = build_path_cut(4, 3);
  const auto split = export_dot(4, cut.vertex_union());
  CHECK(split.find("\"0000\" [fillcolor=\"#8dd3c7\", group=0]") != std::string::npos);
  CHECK(occurrences(split, "group=0") == 1);
  CHECK(occurrences(split, "group=1") > 0);

  CHECK_THROWS_AS(export_dot(9, {}), std::out_of_range);
  CHECK_THROWS(export_dot(3, std::vector<Vertex>{8}));
}
