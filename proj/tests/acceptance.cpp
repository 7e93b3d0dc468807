// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hypercut/analysis.hpp"
#include "hypercut/constructions.hpp"
#include "hypercut/formulas.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/properties.hpp"

using namespace hypercut;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

int failures = 0;

void run(const char* id, const char* title, double limit_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char budget[64];
  std::snprintf(budget, sizeof budget, "%.3fs (limit %.0fs)", secs, limit_seconds);
  out.expect(secs < limit_seconds, std::string("too slow: ") + budget);
  if (!out.ok) ++failures;
  std::printf("%s %s  %s  [%s]%s%s\n", id, out.ok ? "PASS" : "FAIL", title, budget,
              out.ok ? "" : "  ", out.detail.str().c_str());
  std::fflush(stdout);
}

std::string show(const OracleResult& r) {
  if (r.value) return std::to_string(*r.value);
  return ">=" + std::to_string(r.lower_bound);
}

void expect_oracle(Outcome& out, int n, const StructureKind& kind, CutMode mode, int expected) {
  const auto r = min_structure_cut(n, kind, mode);
  const bool ok = r.is_exact() && r.exhaustive && *r.value == expected && r.witness &&
                  validate_cut(*r.witness).ok() &&
                  static_cast<int>(r.witness->cardinality()) == expected;
  out.expect(ok, "Q_" + std::to_string(n) + " " + kind.name() + " " +
                     std::string(to_string(mode)) + ": got " + show(r) + ", want " +
                     std::to_string(expected));
}

}  // namespace

int main() {
  run("AC1", "path connectivity of Q_3, k = 3, 4, both modes", 1, [](Outcome& out) {
    for (CutMode mode : {CutMode::structure, CutMode::substructure})
      for (int k : {3, 4}) {
        expect_oracle(out, 3, StructureKind::path(k), mode, 2);
        out.expect(kappa_path(3, k, mode).value() == 2, "formula disagrees at n=3");
      }
  });

  run("AC2", "path connectivity of Q_4, k = 3..8, both modes", 300, [](Outcome& out) {
    const int expected[] = {2, 2, 2, 2, 1, 1};
    for (CutMode mode : {CutMode::structure, CutMode::substructure})
      for (int k = 3; k <= 8; ++k) {
        expect_oracle(out, 4, StructureKind::path(k), mode, expected[k - 3]);
        out.expect(kappa_path(4, k, mode).value() == expected[k - 3],
                   "formula disagrees at k=" + std::to_string(k));
      }
  });

  run("AC3", "construction sweep, paths n = 3..11, cycles n = 5..11, k <= 256", 60,
      [](Outcome& out) {
        int checked = 0;
        for (int n = 3; n <= 11; ++n) {
          for (int k = 3; k <= std::min(1 << (n - 1), 256); ++k, ++checked) {
            const auto f = build_path_cut(n, k);
            const auto v = validate_cut(f);
            out.expect(v.ok() && static_cast<int>(f.cardinality()) ==
                                     kappa_path(n, k, CutMode::structure).value(),
                       "path (" + std::to_string(n) + "," + std::to_string(k) + "): " + v.reason);
          }
          if (n < 5) continue;
          for (int k = 6; k <= std::min(1 << (n - 2), 256); k += 2, ++checked) {
            const auto f = build_cycle_cut(n, k);
            const auto v = validate_cut(f);
            out.expect(v.ok() && static_cast<std::int64_t>(f.cardinality()) == ceil_div(2 * n, k),
                       "cycle (" + std::to_string(n) + "," + std::to_string(k) + "): " + v.reason);
          }
        }
        out.expect(checked > 0, "nothing checked");
      });

  run("AC4", "C_4 and C_8 table: Q_4;C_4 = 2, Q_5;C_4 = 3, Q_5;C_8 = 2", 600, [](Outcome& out) {
    expect_oracle(out, 4, StructureKind::cycle(4), CutMode::structure, 2);
    expect_oracle(out, 5, StructureKind::cycle(4), CutMode::structure, 3);
    expect_oracle(out, 5, StructureKind::cycle(8), CutMode::structure, 2);
    out.expect(kappa_power_of_two_cycle(4, 2).value() == 2, "formula (4,2)");
    out.expect(kappa_power_of_two_cycle(5, 2).value() == 3, "formula (5,2)");
    out.expect(kappa_power_of_two_cycle(5, 3).value() == 2, "formula (5,3)");
  });

  run("AC5", "no single P_4 disconnects Q_3, no single P_6 disconnects Q_4", 10,
      [](Outcome& out) {
        for (const auto& [n, k] : {std::pair{3, 4}, std::pair{4, 6}}) {
          const auto kind = StructureKind::path(k);
          const auto copies = enumerate_copies(n, kind, CutMode::structure);
          out.expect(!copies.truncated && !copies.copies.empty(), "enumeration incomplete");
          for (const auto& e : copies.copies)
            out.expect(!components_after_removal(n, element_vertices(e)).is_cut(),
                       "a single " + kind.name() + " disconnects Q_" + std::to_string(n));
          out.expect(verify_no_smaller_cut(n, kind, CutMode::structure, 2),
                     "oracle found a one-element cut");
        }
      });

  run("AC6", "g-extra connectivity of Q_4, g = 0..4", 60, [](Outcome& out) {
    const int expected[] = {4, 6, 6, 6, 6};
    for (int g = 0; g <= 4; ++g) {
      const auto brute = g_extra_connectivity(4, g);
      out.expect(brute && *brute == expected[g] && kappa_g_extra_formula(4, g) == expected[g],
                 "g=" + std::to_string(g));
    }
  });

  run("AC7", "inequality sweep to n = 64", 1, [](Outcome& out) {
    const auto bad = verify_budengs_inequality(64);
    out.expect(bad.empty(), std::to_string(bad.size()) + " violations");
  });

  run("AC8", "property suites (seeded, 10^4 trials per length)", 600, [](Outcome& out) {
    const auto common = common_neighbor_property(10);
    out.expect(common.passed(), common.first_violation);
    const auto paths = path_pair_bound_property(6, 3, 9, 10'000, 20240601);
    out.expect(paths.passed(), paths.first_violation);
    out.expect(paths.trials >= 7 * 9'000, "too few path trials");
    const auto cycles = cycle_pair_bound_property(6, {4, 6, 8}, 10'000, 20240602);
    out.expect(cycles.passed(), cycles.first_violation);
    out.expect(cycles.trials >= 3 * 9'000, "too few cycle trials");
  });

  run("AC9", "power-of-two cycles agree with the general cycle formula, n = 4..20", 10,
      [](Outcome& out) {
        for (int n = 4; n <= 20; ++n)
          for (int m = 2; m <= n - 2; ++m) {
            const auto p = kappa_power_of_two_cycle(n, m);
            const auto c = kappa_cycle(n, std::int64_t{1} << m, CutMode::structure);
            const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            if (c.is_exact()) out.expect(p.value() == c.value(), "disagree at " + at);
            if (n >= 6 && m >= 3) out.expect(p.value() < n - m, "not below n-m at " + at);
          }
      });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
