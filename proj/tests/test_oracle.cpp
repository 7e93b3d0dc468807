#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "hypercut/analysis.hpp"
#include "hypercut/bitcube.hpp"
#include "hypercut/formulas.hpp"
#include "hypercut/oracle.hpp"

using namespace hypercut;

namespace {

std::size_t count(int n, const StructureKind& kind, CutMode mode = CutMode::structure) {
  return enumerate_copies(n, kind, mode).copies.size();
}

// Reference minimum: every family of up to `s_max` distinct vertex sets,
// no orbit pruning, no seeding, no memoization.
std::optional<int> naive_minimum(int n, const StructureKind& kind, CutMode mode, int s_max) {
  const BitCube bc(n);
  std::set<VertexMask> sets;
  for (const auto& e : enumerate_copies(n, kind, mode).copies)
    sets.insert(BitCube::mask_of(element_vertices(e)));
  const std::vector<VertexMask> all(sets.begin(), sets.end());
  std::vector<std::size_t> idx;
  for (int s = 1; s <= s_max; ++s) {
    idx.assign(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    if (all.size() < static_cast<std::size_t>(s)) return std::nullopt;
    for (;;) {
      VertexMask u = 0;
      for (std::size_t i : idx) u |= all[i];
      if (bc.is_cut(u)) return s;
      int pos = s - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == all.size() - static_cast<std::size_t>(s - pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("copy enumeration counts") {
  CHECK(count(2, StructureKind::cycle(4)) == 1);
  CHECK(count(3, StructureKind::cycle(4)) == 6);
  CHECK(count(3, StructureKind::path(2)) == 12);
  CHECK(count(3, StructureKind::edge()) == 12);
  CHECK(count(3, StructureKind::vertex()) == 8);
  CHECK(count(4, StructureKind::cycle(4)) == 24);
  // Each vertex centers C(n, r) stars.
  CHECK(count(4, StructureKind::star(2)) == 16 * 6);
  // P_3 copies: 2^n centers, C(n,2) leaf pairs.
  CHECK(count(3, StructureKind::path(3)) == 8 * 3);
  // Hamiltonian cycles of Q_3: 6.
  CHECK(count(3, StructureKind::cycle(8)) == 6);
  // Substructure mode adds every shorter path.
  CHECK(count(3, StructureKind::path(3), CutMode::substructure) == 8 + 12 + 24);
  CHECK(count(3, StructureKind::cycle(4), CutMode::substructure) == 8 + 12 + 24 + 48 + 6);
}

TEST_CASE("enumerated copies satisfy their contracts and are distinct") {
  for (const auto& kind : {StructureKind::path(4), StructureKind::cycle(6), StructureKind::star(3)}) {
    const auto copies = enumerate_copies(4, kind, CutMode::structure).copies;
    for (const auto& e : copies) CHECK_FALSE(element_violation(e, kind, CutMode::structure));
    std::set<std::vector<Vertex>> seen;
    for (const auto& e : copies) CHECK(seen.insert(element_vertices(e)).second);
  }
}

TEST_CASE("truncated enumeration") {
  const auto capped = enumerate_copies(4, StructureKind::path(5), CutMode::structure, 10);
  CHECK(capped.truncated);
  CHECK(capped.copies.size() == 10);
  CHECK_THROWS_AS(enumerate_copies(7, StructureKind::vertex(), CutMode::structure), BudgetExceeded);
}

TEST_CASE("small exact minima") {
  const auto p3 = min_structure_cut(3, StructureKind::path(3), CutMode::structure);
  CHECK(p3.value == 2);
  CHECK(p3.exhaustive);
  REQUIRE(p3.witness);
  CHECK(validate_cut(*p3.witness).ok());
  CHECK(p3.witness->cardinality() == 2);

  const auto c4 = min_structure_cut(3, StructureKind::cycle(4), CutMode::structure);
  CHECK(c4.value == 2);
  REQUIRE(c4.witness);
  CHECK(validate_cut(*c4.witness).ok());

  CHECK(min_structure_cut(4, StructureKind::cycle(4), CutMode::structure).value == 2);
  CHECK(min_structure_cut(3, StructureKind::vertex(), CutMode::structure).value == 3);
  CHECK(min_structure_cut(4, StructureKind::edge(), CutMode::structure).value == 3);
}

TEST_CASE("orbit pruning and seeding do not change values on Q_3") {
  SearchBudget plain;
  plain.orbit_pruning = false;
  plain.seeded = false;
  for (CutMode mode : {CutMode::structure, CutMode::substructure})
    for (const auto& kind : {StructureKind::vertex(), StructureKind::edge(), StructureKind::path(3),
                             StructureKind::path(4), StructureKind::cycle(4),
                             StructureKind::cycle(6), StructureKind::star(2), StructureKind::star(3)}) {
      INFO(kind.name(), " ", to_string(mode));
      const auto pruned = min_structure_cut(3, kind, mode);
      const auto unpruned = min_structure_cut(3, kind, mode, plain);
      const auto naive = naive_minimum(3, kind, mode, 6);
      CHECK(pruned.value == naive);
      CHECK(unpruned.value == naive);
      CHECK(pruned.stats.orbit_representatives <= unpruned.stats.orbit_representatives);
    }
}

TEST_CASE("no smaller cut") {
  CHECK(verify_no_smaller_cut(3, StructureKind::path(4), CutMode::structure, 2));
  CHECK(verify_no_smaller_cut(4, StructureKind::path(6), CutMode::structure, 2));
  CHECK(verify_no_smaller_cut(4, StructureKind::cycle(8), CutMode::structure, 1));
  CHECK_FALSE(verify_no_smaller_cut(3, StructureKind::path(4), CutMode::structure, 3));
}

TEST_CASE("budget limits give bounds, not values") {
  SearchBudget b;
  b.max_family_size = 1;
  const auto r = min_structure_cut(4, StructureKind::path(6), CutMode::structure, b);
  CHECK_FALSE(r.value);
  CHECK(r.lower_bound == 2);
  CHECK_FALSE(r.is_exact());

  const auto admitted = admit(SearchBudget{}, 5, StructureKind::cycle(8));
  CHECK(admitted.admitted);
  CHECK(admitted.family_cap == kExtendedFamilyCap);
  CHECK_FALSE(admit(SearchBudget{}, 5, StructureKind::path(6)).admitted);
  CHECK_FALSE(admit(SearchBudget{}, 6, StructureKind::cycle(4)).admitted);
  CHECK_THROWS_AS(min_structure_cut(6, StructureKind::cycle(4), CutMode::structure), BudgetExceeded);
}

TEST_CASE("environment override of the dimension ceiling") {
  setenv("HYPERCUT_MAX_DIM", "3", 1);
  CHECK(SearchBudget::from_environment().max_dimension == 3);
  setenv("HYPERCUT_MAX_DIM", "9", 1);
  CHECK_THROWS_AS(SearchBudget::from_environment(), std::invalid_argument);
  setenv("HYPERCUT_MAX_DIM", "abc", 1);
  CHECK_THROWS_AS(SearchBudget::from_environment(), std::invalid_argument);
  unsetenv("HYPERCUT_MAX_DIM");
  CHECK(SearchBudget::from_environment().max_dimension == 4);
}

TEST_CASE("pruned search matches the naive search on Q_4 and Q_5") {
  for (CutMode mode : {CutMode::structure, CutMode::substructure})
    for (int k = 3; k <= 5; ++k) {
      INFO("path(", k, ") ", to_string(mode));
      CHECK(min_structure_cut(4, StructureKind::path(k), mode).value ==
            naive_minimum(4, StructureKind::path(k), mode, 3));
    }
  CHECK(naive_minimum(4, StructureKind::cycle(4), CutMode::structure, 3) == 2);
  CHECK(naive_minimum(5, StructureKind::cycle(4), CutMode::structure, 3) == 3);
  CHECK(naive_minimum(5, StructureKind::cycle(8), CutMode::structure, 2) == 2);
  CHECK(naive_minimum(4, StructureKind::star(3), CutMode::structure, 3) == 2);
  CHECK(min_structure_cut(4, StructureKind::star(3), CutMode::structure).value ==
        kappa_lin(4, StructureKind::star(3), CutMode::structure).value());
}
