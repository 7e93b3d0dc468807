#include "hypercut/formulas.hpp"

namespace hypercut {
namespace {

// k <= 2^e without overflowing for e up to 64.
bool at_most_pow2(std::int64_t k, int e) { return e >= 63 || k <= (std::int64_t{1} << e); }
// k >= 2^e + 2.
bool at_least_pow2_plus_two(std::int64_t k, int e) {
  return e < 62 && k >= (std::int64_t{1} << e) + 2;
}

void require_dimension(int n, int minimum, const char* what) {
  if (n < minimum || n > kMaxFormulaDimension)
    throw NotCovered(std::string(what) + " is proven for " + std::to_string(minimum) +
                     " <= n, got n = " + std::to_string(n));
}

std::int64_t window_formula(int n, std::int64_t k) {
  return k % 2 == 1 ? ceil_div(2 * n, k + 1) : ceil_div(2 * n, k);
}

void require_agreement(const KappaValue& a, const KappaValue& b, const std::string& what) {
  if (a.status != b.status || a.lower != b.lower || a.upper != b.upper)
    throw std::logic_error("overlapping results disagree for " + what + ": " +
                           std::to_string(a.lower) + " (" + std::string(to_string(a.source)) +
                           ") vs " + std::to_string(b.lower) + " (" +
                           std::string(to_string(b.source)) + ")");
}

}  // namespace

std::string_view to_string(KappaStatus status) {
  switch (status) {
    case KappaStatus::exact: return "exact";
    case KappaStatus::lower_bound: return "lower-bound";
    case KappaStatus::interval: return "interval";
  }
  return {};
}

std::string_view to_string(KappaSource source) {
  switch (source) {
    case KappaSource::path_connectivity: return "path-connectivity";
    case KappaSource::cycle_substructure: return "cycle-substructure";
    case KappaSource::cycle_small_cube: return "cycle-small-cube";
    case KappaSource::cycle_four: return "cycle-four";
    case KappaSource::cycle_windows: return "cycle-windows";
    case KappaSource::cycle_open_regime: return "cycle-open-regime";
    case KappaSource::power_of_two_small: return "power-of-two-small";
    case KappaSource::power_of_two_large: return "power-of-two-large";
    case KappaSource::star_family: return "star-family";
  }
  return {};
}

int KappaValue::value() const {
  if (!is_exact())
    throw std::logic_error("kappa is only known as a " + std::string(to_string(status)));
  return lower;
}

KappaValue kappa_path(int n, std::int64_t k, CutMode) {
  require_dimension(n, 3, "path connectivity");
  if (k < 3 || !at_most_pow2(k, n - 1))
    throw NotCovered("path connectivity is proven for 3 <= k <= 2^(n-1), got k = " +
                     std::to_string(k));
  return KappaValue::exact(static_cast<int>(window_formula(n, k)), KappaSource::path_connectivity);
}

KappaValue kappa_cycle(int n, std::int64_t k, CutMode mode) {
  require_dimension(n, 3, "cycle connectivity");
  if (mode == CutMode::substructure) {
    if (k < 3 || !at_most_pow2(k, n - 1))
      throw NotCovered("cycle substructure connectivity is proven for 3 <= k <= 2^(n-1), got k = " +
                       std::to_string(k));
    const auto v = KappaValue::exact(static_cast<int>(window_formula(n, k)),
                                     KappaSource::cycle_substructure);
    // Q_n has no odd cycles, so odd-k substructures are exactly paths.
    if (k % 2 == 1) {
      auto as_path = kappa_path(n, k, mode);
      as_path.source = v.source;
      require_agreement(v, as_path, "odd cycle substructure vs path");
    }
    return v;
  }

  if (k % 2 != 0) throw NotCovered("Q_n has no odd cycles; structure mode needs even k");
  if (k < 4 || !at_most_pow2(k, n - 1))
    throw NotCovered("cycle structure connectivity is stated for 4 <= k <= 2^(n-1), got k = " +
                     std::to_string(k));
  if (n == 3) return KappaValue::exact(2, KappaSource::cycle_small_cube);
  if (k == 4) {
    const auto v = KappaValue::exact(n - 2, KappaSource::cycle_four);
    auto lin = kappa_lin(n, StructureKind::cycle(4), CutMode::structure);
    lin.source = v.source;
    require_agreement(v, lin, "C_4 structure connectivity");
    return v;
  }
  const auto ceiling = static_cast<int>(ceil_div(2 * n, k));
  if (n >= 5 && at_most_pow2(k, n - 2)) return KappaValue::exact(ceiling, KappaSource::cycle_windows);
  if (at_least_pow2_plus_two(k, n - 2)) return KappaValue::at_least(ceiling, KappaSource::cycle_open_regime);
  throw NotCovered("kappa(Q_" + std::to_string(n) + "; C_" + std::to_string(k) +
                   ") is not determined");
}

KappaValue kappa_power_of_two_cycle(int n, int m) {
  require_dimension(n, 4, "power-of-two cycle connectivity");
  if (m < 2 || m > n - 2)
    throw NotCovered("power-of-two cycle connectivity is proven for 2 <= m <= n-2, got m = " +
                     std::to_string(m));
  const std::int64_t length = std::int64_t{1} << m;
  const KappaValue general = kappa_cycle(n, length, CutMode::structure);
  KappaValue v = (n == 4 || n == 5 || m == 2)
                     ? KappaValue::exact(n - m, KappaSource::power_of_two_small)
                     : KappaValue::exact(static_cast<int>(ceil_div(n, std::int64_t{1} << (m - 1))),
                                         KappaSource::power_of_two_large);
  KappaValue relabeled = general;
  relabeled.source = v.source;
  require_agreement(v, relabeled, "C_" + std::to_string(length) + " in Q_" + std::to_string(n));
  return v;
}

KappaValue kappa_lin(int n, const StructureKind& kind, CutMode mode) {
  require_dimension(n, 4, "small-structure connectivity");
  using Shape = StructureKind::Shape;
  const int half = static_cast<int>(ceil_div(n, 2));
  switch (kind.shape()) {
    case Shape::vertex: return KappaValue::exact(n, KappaSource::star_family);
    case Shape::edge: return KappaValue::exact(n - 1, KappaSource::star_family);
    case Shape::star:
      if (kind.size() == 1) return KappaValue::exact(n - 1, KappaSource::star_family);
      if (kind.size() == 2 || kind.size() == 3) {
        const auto v = KappaValue::exact(half, KappaSource::star_family);
        if (kind.size() == 2) {
          // K_{1,2} is P_3.
          auto as_path = kappa_path(n, 3, mode);
          as_path.source = v.source;
          require_agreement(v, as_path, "K_{1,2} vs P_3");
        }
        return v;
      }
      break;
    case Shape::cycle:
      if (kind.size() == 4)
        return KappaValue::exact(mode == CutMode::structure ? n - 2 : half, KappaSource::star_family);
      break;
    case Shape::path: break;
  }
  throw NotCovered("no small-structure value for " + kind.name());
}

int kappa_g_extra_formula(int n, int g) {
  require_dimension(n, 4, "g-extra connectivity");
  if (g < 0 || g > n)
    throw NotCovered("g-extra connectivity formula needs 0 <= g <= n, got g = " + std::to_string(g));
  if (g <= n - 4) return (g + 1) * n - 2 * g - g * (g - 1) / 2;
  return n * (n - 1) / 2;
}

std::vector<InequalityViolation> verify_budengs_inequality(int n_max) {
  if (n_max < 6 || n_max > kMaxFormulaDimension)
    throw std::out_of_range("inequality sweep needs 6 <= n_max <= " +
                            std::to_string(kMaxFormulaDimension));
  std::vector<InequalityViolation> bad;
  for (int n = 6; n <= n_max; ++n)
    for (int m = 3; m <= n - 2; ++m) {
      const std::int64_t lhs = ceil_div(n, std::int64_t{1} << (m - 1));
      const std::int64_t rhs = n - m;
      if (!(lhs < rhs)) bad.push_back({n, m, lhs, rhs});
    }
  return bad;
}

int kappa_c6_lower_bound(int n) {
  require_dimension(n, 4, "the C_6 lower bound");
  return static_cast<int>(ceil_div(n, 3));
}

}  // namespace hypercut
