#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypercut/formulas.hpp"

using namespace hypercut;

namespace {
constexpr auto S = CutMode::structure;
constexpr auto SUB = CutMode::substructure;
}  // namespace

TEST_CASE("path connectivity") {
  CHECK(kappa_path(5, 3, S).value() == 3);
  CHECK(kappa_path(4, 8, S).value() == 1);
  CHECK(kappa_path(3, 4, SUB).value() == 2);
  CHECK(kappa_path(4, 3, S).value() == 2);
  CHECK(kappa_path(4, 5, S).value() == 2);
  CHECK(kappa_path(4, 7, S).value() == 1);
  CHECK_THROWS_AS(kappa_path(4, 9, S), NotCovered);
  CHECK_THROWS_AS(kappa_path(4, 2, S), NotCovered);
  CHECK_THROWS_AS(kappa_path(2, 3, S), NotCovered);
  CHECK(kappa_path(64, std::int64_t{1} << 40, S).value() == 1);
  for (int n = 3; n <= 12; ++n)
    for (int k = 3; k <= (1 << (n - 1)); ++k)
      CHECK(kappa_path(n, k, S).value() == kappa_path(n, k, SUB).value());
}

TEST_CASE("cycle connectivity") {
  CHECK(kappa_cycle(3, 4, S).value() == 2);
  CHECK(kappa_cycle(6, 4, S).value() == 4);
  // ceil(12/16) = 1; a single 16-cycle cut of Q_6 exists, so the value cannot be 2.
  CHECK(kappa_cycle(6, 16, S).value() == 1);
  CHECK(kappa_cycle(5, 6, S).value() == 2);

  const auto open = kappa_cycle(6, 18, S);
  CHECK(open.status == KappaStatus::lower_bound);
  CHECK(open.lower == 1);
  CHECK_FALSE(open.upper);
  CHECK_THROWS_AS(open.value(), std::logic_error);

  const auto n4 = kappa_cycle(4, 6, S);
  CHECK(n4.status == KappaStatus::lower_bound);
  CHECK(n4.lower == 2);
  CHECK(kappa_cycle(4, 8, S).status == KappaStatus::lower_bound);

  CHECK_THROWS_AS(kappa_cycle(5, 7, S), NotCovered);
  CHECK_THROWS_AS(kappa_cycle(5, 18, S), NotCovered);
  CHECK_THROWS_AS(kappa_cycle(5, 2, SUB), NotCovered);

  for (int n = 3; n <= 12; ++n)
    for (int k = 3; k <= (1 << (n - 1)); k += 2)
      CHECK(kappa_cycle(n, k, SUB).value() == kappa_path(n, k, SUB).value());
}

TEST_CASE("power-of-two cycles") {
  CHECK(kappa_power_of_two_cycle(5, 3).value() == 2);
  CHECK(kappa_power_of_two_cycle(6, 3).value() == 2);
  CHECK(kappa_power_of_two_cycle(6, 3).value() < 6 - 3);
  CHECK(kappa_power_of_two_cycle(4, 2).value() == 2);
  CHECK(kappa_power_of_two_cycle(5, 2).value() == 3);
  CHECK_THROWS_AS(kappa_power_of_two_cycle(4, 3), NotCovered);
  CHECK_THROWS_AS(kappa_power_of_two_cycle(3, 1), NotCovered);
  for (int n = 4; n <= 40; ++n)
    CHECK(kappa_power_of_two_cycle(n, 2).value() == kappa_cycle(n, 4, S).value());
}

TEST_CASE("small structures") {
  CHECK(kappa_lin(5, StructureKind::vertex(), S).value() == 5);
  CHECK(kappa_lin(5, StructureKind::cycle(4), S).value() == 3);
  CHECK(kappa_lin(5, StructureKind::cycle(4), SUB).value() == 3);
  CHECK(kappa_lin(6, StructureKind::cycle(4), SUB).value() == 3);
  CHECK(kappa_lin(5, StructureKind::edge(), S).value() == 4);
  CHECK(kappa_lin(5, StructureKind::star(1), S).value() == 4);
  CHECK(kappa_lin(7, StructureKind::star(2), S).value() == 4);
  CHECK(kappa_lin(7, StructureKind::star(3), SUB).value() == 4);
  CHECK_THROWS_AS(kappa_lin(3, StructureKind::vertex(), S), NotCovered);
  CHECK_THROWS_AS(kappa_lin(5, StructureKind::star(4), S), NotCovered);
  CHECK_THROWS_AS(kappa_lin(5, StructureKind::path(5), S), NotCovered);
}

TEST_CASE("g-extra formula") {
  CHECK(kappa_g_extra_formula(5, 1) == 8);
  CHECK(kappa_g_extra_formula(6, 2) == 13);
  CHECK(kappa_g_extra_formula(4, 2) == 6);
  CHECK(kappa_g_extra_formula(4, 0) == 4);
  for (int g = 1; g <= 4; ++g) CHECK(kappa_g_extra_formula(4, g) == 6);
  for (int n = 4; n <= 30; ++n) {
    CHECK(kappa_g_extra_formula(n, 0) == n);
    if (n >= 5) CHECK(kappa_g_extra_formula(n, 1) == 2 * n - 2);
  }
  CHECK_THROWS_AS(kappa_g_extra_formula(4, 5), NotCovered);
  CHECK_THROWS_AS(kappa_g_extra_formula(3, 0), NotCovered);
}

TEST_CASE("power-of-two inequality sweep") {
  CHECK(verify_budengs_inequality(6).empty());
  CHECK(verify_budengs_inequality(64).empty());
  CHECK(ceil_div(6, 4) == 2);
  CHECK(ceil_div(6, 8) == 1);
  CHECK_THROWS_AS(verify_budengs_inequality(5), std::out_of_range);
}

TEST_CASE("C_6 lower bound") {
  CHECK(kappa_c6_lower_bound(4) == 2);
  CHECK(kappa_c6_lower_bound(6) == 2);
  CHECK(kappa_c6_lower_bound(7) == 3);
  CHECK_THROWS_AS(kappa_c6_lower_bound(3), NotCovered);
  for (int n = 5; n <= 30; ++n) CHECK(kappa_c6_lower_bound(n) <= kappa_cycle(n, 6, S).value());
}
