#pragma once

// Closed-form structure and substructure connectivity of Q_n.
//
// Queries outside the proven ranges throw NotCovered instead of
// extrapolating. Where two results overlap, both are evaluated and a
// disagreement throws std::logic_error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypercut/family.hpp"

namespace hypercut {

class NotCovered : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class KappaStatus { exact, lower_bound, interval };

/// Which closed form produced a value.
enum class KappaSource {
  path_connectivity,         // P_k, both modes
  cycle_substructure,        // C_k substructure, odd and even k
  cycle_small_cube,          // C_4 in Q_3
  cycle_four,                // C_4 structure, n >= 4
  cycle_windows,             // C_k structure, n >= 5, 6 <= k <= 2^{n-2}
  cycle_open_regime,         // C_k structure, 2^{n-2}+2 <= k <= 2^{n-1}: lower bound only
  power_of_two_small,        // C_{2^m}, n in {4,5} or m = 2
  power_of_two_large,        // C_{2^m}, n >= 6, 3 <= m <= n-2
  star_family,               // K_1, K_{1,1}, K_{1,2}, K_{1,3}, C_4 for n >= 4
};

std::string_view to_string(KappaStatus status);
std::string_view to_string(KappaSource source);

struct KappaValue {
  KappaStatus status = KappaStatus::exact;
  int lower = 0;
  /// Equal to lower for exact values; absent for a bare lower bound.
  std::optional<int> upper;
  KappaSource source = KappaSource::path_connectivity;

  static KappaValue exact(int v, KappaSource src) { return {KappaStatus::exact, v, v, src}; }
  static KappaValue at_least(int v, KappaSource src) {
    return {KappaStatus::lower_bound, v, std::nullopt, src};
  }

  bool is_exact() const { return status == KappaStatus::exact; }
  /// The exact value; throws std::logic_error for bounds.
  int value() const;
};

/// Formulas accept dimensions up to this value.
inline constexpr int kMaxFormulaDimension = 64;

/// ceil(a / b) for positive b.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// ceil(2n/(k+1)) for odd k, ceil(2n/k) for even k; n >= 3, 3 <= k <= 2^{n-1}.
KappaValue kappa_path(int n, std::int64_t k, CutMode mode);

/// Substructure: exact for 3 <= k <= 2^{n-1}. Structure (even k):
/// exact for (n, k) = (3, 4), for k = 4, and for n >= 5 with
/// 6 <= k <= 2^{n-2}; a lower bound for 2^{n-2}+2 <= k <= 2^{n-1}.
KappaValue kappa_cycle(int n, std::int64_t k, CutMode mode);

/// kappa(Q_n; C_{2^m}) for n >= 4, 2 <= m <= n-2.
KappaValue kappa_power_of_two_cycle(int n, int m);

/// Values for the small structures; `kind` is vertex, edge, star(2), star(3)
/// or cycle(4). n >= 4.
KappaValue kappa_lin(int n, const StructureKind& kind, CutMode mode);

/// g-extra connectivity of Q_n for n >= 4, 0 <= g <= n.
int kappa_g_extra_formula(int n, int g);

struct InequalityViolation {
  int n = 0;
  int m = 0;
  std::int64_t lhs = 0;  // ceil(n / 2^{m-1})
  std::int64_t rhs = 0;  // n - m
};

/// Checks ceil(n / 2^{m-1}) < n - m for 6 <= n <= n_max, 3 <= m <= n-2.
std::vector<InequalityViolation> verify_budengs_inequality(int n_max);

/// ceil(n/3), a lower bound on kappa(Q_n; C_6) for n >= 4.
int kappa_c6_lower_bound(int n);

}  // namespace hypercut
