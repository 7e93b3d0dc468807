#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hypercut/embeddings.hpp"

using namespace hypercut;

namespace {

std::vector<std::string> rendered(int n, const std::vector<Vertex>& verts) {
  const Cube cube(n);
  std::vector<std::string> out;
  for (Vertex v : verts) out.push_back(cube.render(v));
  return out;
}

}  // namespace

TEST_CASE("invariant checks") {
  CHECK_FALSE(path_violation(CubePath{3, {0, 1, 3}}));
  CHECK(path_violation(CubePath{3, {0, 3}}));
  CHECK(path_violation(CubePath{3, {0, 1, 0}}));
  CHECK(path_violation(CubePath{3, {}}));
  CHECK(path_violation(CubePath{3, {8}}));
  CHECK_FALSE(cycle_violation(CubeCycle{2, {0, 1, 3, 2}}));
  CHECK(cycle_violation(CubeCycle{3, {0, 1, 3, 7}}));
  CHECK(cycle_violation(CubeCycle{3, {0, 1}}));
}

TEST_CASE("gray code hamiltonian cycles") {
  CHECK(rendered(2, gray_hamiltonian(2).verts) == std::vector<std::string>{"00", "10", "11", "01"});
  for (int n : {3, 10}) {
    const auto c = gray_hamiltonian(n);
    CHECK(c.length() == (std::size_t{1} << n));
    CHECK_FALSE(cycle_violation(c));
    CHECK(std::set<Vertex>(c.verts.begin(), c.verts.end()).size() == c.length());
  }
  CHECK_THROWS(gray_hamiltonian(1));
}

TEST_CASE("hamiltonian cycle through an edge") {
  const auto c2 = hamiltonian_through_edge(2, Edge{0, 2});
  CHECK(c2.length() == 4u);
  CHECK(c2.has_edge(Edge{0, 2}));
  const auto c4 = hamiltonian_through_edge(4, Edge{0, 8});
  CHECK(c4.length() == 16u);
  CHECK_FALSE(cycle_violation(c4));
  CHECK(c4.has_edge(Edge{0, 8}));
  for (Vertex u = 0; u < 32; ++u)
    for (int i = 0; i < 5; ++i) {
      const Edge e{u, u ^ (Vertex{1} << i)};
      const auto c = hamiltonian_through_edge(5, e);
      CHECK_FALSE(cycle_violation(c));
      CHECK(c.has_edge(e));
    }
}

TEST_CASE("canonical cycles") {
  const auto c = canonicalize(CubeCycle{2, {3, 2, 0, 1}});
  CHECK(c.verts == std::vector<Vertex>{0, 1, 3, 2});
}

TEST_CASE("even cycle embedding") {
  const auto c36 = embed_even_cycle(3, 6);
  CHECK(c36.length() == 6u);
  CHECK_FALSE(cycle_violation(c36));
  CHECK(embed_even_cycle(4, 16).length() == gray_hamiltonian(4).length());
  for (int n = 2; n <= 7; ++n)
    for (int l = 4; l <= (1 << n); l += 2) {
      const auto c = embed_even_cycle(n, l);
      CHECK(c.length() == static_cast<std::size_t>(l));
      CHECK_FALSE(cycle_violation(c));
    }
  CHECK_THROWS(embed_even_cycle(3, 5));
  CHECK_THROWS(embed_even_cycle(3, 10));
  CHECK_THROWS(embed_even_cycle(3, 2));
}

TEST_CASE("odd paths between adjacent vertices") {
  const Cube q2(2);
  const Vertex a = q2.parse("00"), b = q2.parse("10");
  CHECK(rendered(2, odd_path_between_adjacent(2, a, b, 1).verts) ==
        std::vector<std::string>{"00", "10"});
  CHECK(rendered(2, odd_path_between_adjacent(2, a, b, 3).verts) ==
        std::vector<std::string>{"00", "01", "11", "10"});

  const Cube q4(4);
  const auto p = odd_path_between_adjacent(4, q4.parse("0000"), q4.parse("1000"), 7);
  CHECK(p.vertex_count() == 8u);
  CHECK_FALSE(path_violation(p));
  CHECK(p.verts.front() == q4.parse("0000"));
  CHECK(p.verts.back() == q4.parse("1000"));

  for (Vertex u = 0; u < 16; ++u)
    for (int i = 0; i < 4; ++i)
      for (int q = 1; q < 16; q += 2) {
        const Vertex v = u ^ (Vertex{1} << i);
        const auto path = odd_path_between_adjacent(4, u, v, q);
        CHECK(path.vertex_count() == static_cast<std::size_t>(q + 1));
        CHECK_FALSE(path_violation(path));
        CHECK(path.verts.front() == u);
        CHECK(path.verts.back() == v);
      }
  CHECK_THROWS(odd_path_between_adjacent(4, 0, 1, 2));
  CHECK_THROWS(odd_path_between_adjacent(4, 0, 3, 3));
  CHECK_THROWS(odd_path_between_adjacent(4, 0, 1, 17));
}

TEST_CASE("subcube lifting") {
  const Cube q5(5);
  const auto inner = CubePath{3, {0, 1, 3, 7, 6}};
  const auto lifted = restrict_to_subcube(5, {{3, false}, {4, true}}, inner);
  CHECK_FALSE(path_violation(lifted));
  for (Vertex v : lifted.verts) CHECK(q5.render(v).substr(3) == "01");

  const Cube q4(4);
  const auto cyc = restrict_to_subcube(4, {{2, false}, {3, true}}, CubeCycle{2, {0, 1, 3, 2}});
  CHECK_FALSE(cycle_violation(cyc));
  CHECK(q4.render(cyc.verts.front()) == "0001");
  for (Vertex v : cyc.verts) CHECK(q4.render(v).substr(2) == "01");

  const SubcubeEmbedding emb(5, {{1, true}});
  CHECK(emb.inner_dimension() == 4);
  CHECK(emb.contains(2));
  CHECK_FALSE(emb.contains(0));
  CHECK_THROWS(SubcubeEmbedding(3, {{3, true}}));
}
