#pragma once

// Brute-force minimum structure / substructure cuts for small cubes.
//
// Copies of H (or of its connected subgraphs) are enumerated exhaustively and
// reduced to distinct vertex sets; only the union of a family matters for the
// cut test. Family size is deepened one level at a time. At each level the
// first member is restricted to one representative per orbit of Aut(Q_n)
// acting on vertex sets, which is sound because every family can be mapped by
// an automorphism onto one containing a representative.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercut/family.hpp"

namespace hypercut {

/// Thrown when a query is outside the search budget and no bound can be given.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  int max_family_size = 6;
  int max_dimension = 4;
  /// Stop enumerating copies after this many; a truncated enumeration never
  /// yields an exact value or a "no smaller cut" claim. The default keeps
  /// memory near a few hundred MB; nullopt removes the limit.
  std::optional<std::size_t> element_cap = 1'000'000;
  /// Upper limit on families examined at any one level.
  std::uint64_t max_evaluations = 100'000'000;
  bool orbit_pruning = true;
  /// Try vertex- and edge-isolating families before the general search.
  bool seeded = true;

  /// Defaults, with max_dimension taken from HYPERCUT_MAX_DIM when set.
  /// Throws std::invalid_argument for values outside [1, 5].
  static SearchBudget from_environment();
};

inline constexpr int kExtendedDimension = 5;
inline constexpr int kExtendedFamilyCap = 3;

/// Whether the budget admits (n, kind), and the family-size cap that applies.
/// Beyond max_dimension, Q_5 is still admitted for cycle(4), cycle(8) and
/// paths on at most 4 vertices, with families of at most 3 elements.
struct Admission {
  bool admitted = false;
  int family_cap = 0;
  std::string reason;
};

Admission admit(const SearchBudget& budget, int n, const StructureKind& kind);

struct CopyEnumeration {
  std::vector<Element> copies;
  bool truncated = false;
};

/// All embedded copies matching the mode's element contract, in canonical
/// form: paths start at the smaller endpoint, cycles start at their smallest
/// vertex followed by its smaller neighbor, star leaves are sorted. Ordered by
/// vertex count, then by depth-first discovery from ascending start labels.
CopyEnumeration enumerate_copies(int n, const StructureKind& kind, CutMode mode,
                                 std::optional<std::size_t> element_cap = std::nullopt);

struct OracleStats {
  std::size_t copies = 0;
  std::size_t vertex_sets = 0;
  /// Orbit representatives used as first members (== vertex_sets without pruning).
  std::size_t orbit_representatives = 0;
  std::uint64_t families_evaluated = 0;
  /// Levels 1..levels_refuted were searched exhaustively without finding a cut.
  int levels_refuted = 0;
};

struct OracleResult {
  /// The minimum cardinality, when proven.
  std::optional<int> value;
  /// No cut with fewer than lower_bound elements exists.
  int lower_bound = 1;
  /// Cardinality of the witness, when one was found.
  std::optional<int> upper_bound;
  std::optional<CutFamily> witness;
  /// Every level below the reported value was searched over a complete enumeration.
  bool exhaustive = false;
  OracleStats stats;

  bool is_exact() const { return value.has_value(); }
};

/// Minimum H-structure (or substructure) cut of Q_n within budget. Budget
/// exhaustion yields a lower bound, never a guessed value. Throws
/// BudgetExceeded when (n, kind) is not admitted at all.
OracleResult min_structure_cut(int n, const StructureKind& kind, CutMode mode,
                               const SearchBudget& budget = SearchBudget{});

/// True iff no family of fewer than s copies is a cut. Throws BudgetExceeded
/// when that cannot be decided exhaustively within budget.
bool verify_no_smaller_cut(int n, const StructureKind& kind, CutMode mode, int s,
                           const SearchBudget& budget = SearchBudget{});

}  // namespace hypercut
