#include "hypercut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "hypercut/bitcube.hpp"

namespace hypercut {
namespace {

using Shape = StructureKind::Shape;

class CopySink {
 public:
  CopySink(CopyEnumeration& out, std::optional<std::size_t> cap) : out_(out), cap_(cap) {}

  bool full() const { return out_.truncated; }

  void push(Element e) {
    if (cap_ && out_.copies.size() >= *cap_) {
      out_.truncated = true;
      return;
    }
    out_.copies.push_back(std::move(e));
  }

 private:
  CopyEnumeration& out_;
  std::optional<std::size_t> cap_;
};

void enumerate_paths(int n, int count, CopySink& sink) {
  const Vertex vertices = Vertex{1} << n;
  std::vector<Vertex> stack;
  VertexMask used = 0;
  std::function<void(Vertex)> grow = [&](Vertex v) {
    if (sink.full()) return;
    if (static_cast<int>(stack.size()) == count) {
      if (count == 1 || stack.front() < stack.back()) sink.push(CubePath{n, stack});
      return;
    }
    for (int i = 0; i < n; ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (used & BitCube::bit(w)) continue;
      used |= BitCube::bit(w);
      stack.push_back(w);
      grow(w);
      stack.pop_back();
      used &= ~BitCube::bit(w);
    }
  };
  for (Vertex s = 0; s < vertices && !sink.full(); ++s) {
    stack.assign(1, s);
    used = BitCube::bit(s);
    grow(s);
  }
}

void enumerate_cycles(int n, int length, CopySink& sink) {
  const Vertex vertices = Vertex{1} << n;
  std::vector<Vertex> stack;
  VertexMask used = 0;
  Vertex start = 0;
  std::function<void(Vertex)> grow = [&](Vertex v) {
    if (sink.full()) return;
    const int have = static_cast<int>(stack.size());
    if (have == length) {
      if (hamming_distance(v, start) == 1 && stack[1] < stack.back())
        sink.push(CubeCycle{n, stack});
      return;
    }
    for (int i = 0; i < n; ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (w <= start || (used & BitCube::bit(w))) continue;
      // After w there are length - have edges left to return to start.
      if (hamming_distance(w, start) > length - have) continue;
      used |= BitCube::bit(w);
      stack.push_back(w);
      grow(w);
      stack.pop_back();
      used &= ~BitCube::bit(w);
    }
  };
  for (start = 0; start < vertices && !sink.full(); ++start) {
    stack.assign(1, start);
    used = BitCube::bit(start);
    grow(start);
  }
}

void enumerate_stars(int n, int leaves, CopySink& sink) {
  const Vertex vertices = Vertex{1} << n;
  for (Vertex c = 0; c < vertices && !sink.full(); ++c) {
    // Coordinate subsets of size `leaves`, in increasing bit-mask order.
    for (Vertex dims = 0; dims < vertices && !sink.full(); ++dims) {
      if (std::popcount(dims) != leaves) continue;
      CubeStar s{n, c, {}};
      for (int i = 0; i < n; ++i)
        if ((dims >> i) & 1u) s.leaves.push_back(c ^ (Vertex{1} << i));
      std::sort(s.leaves.begin(), s.leaves.end());
      sink.push(std::move(s));
    }
  }
}

VertexMask element_mask(const Element& e) {
  const auto verts = element_vertices(e);
  return BitCube::mask_of(verts);
}

double choose(double n, int r) {
  if (r < 0 || n < r) return 0;
  double out = 1;
  for (int i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

enum class LevelOutcome { found, refuted, over_budget };

class CutSearch {
 public:
  CutSearch(int n, const CopyEnumeration& copies, bool orbit_pruning) : cube_(n) {
    std::unordered_map<VertexMask, int> index;
    for (std::size_t i = 0; i < copies.copies.size(); ++i) {
      const VertexMask m = element_mask(copies.copies[i]);
      if (index.emplace(m, static_cast<int>(masks_.size())).second) {
        masks_.push_back(m);
        copy_of_.push_back(i);
      }
    }
    if (orbit_pruning) {
      compute_orbits(n, index);
    } else {
      reps_.resize(masks_.size());
      for (std::size_t i = 0; i < masks_.size(); ++i) reps_[i] = static_cast<int>(i);
    }
    by_vertex_.resize(static_cast<std::size_t>(1) << n);
    for (std::size_t i = 0; i < masks_.size(); ++i)
      for (VertexMask m = masks_[i]; m; m &= m - 1)
        by_vertex_[static_cast<std::size_t>(std::countr_zero(m))].push_back(static_cast<int>(i));
  }

  std::size_t vertex_sets() const { return masks_.size(); }
  std::size_t representatives() const { return reps_.size(); }
  std::uint64_t evaluations() const { return evaluations_; }
  std::size_t copy_index(int set) const { return copy_of_[static_cast<std::size_t>(set)]; }

  /// Families of `size` sets that cover the boundary of a vertex or an edge.
  LevelOutcome seeded_level(int size, std::uint64_t cap, std::vector<int>& witness) {
    for (const VertexMask target : {BitCube::bit(0), BitCube::bit(0) | BitCube::bit(1)}) {
      const VertexMask boundary = cube_.neighborhood(target) & ~target;
      std::uint64_t spent = 0;
      witness.clear();
      if (cover(size, target, boundary, 0, cap, spent, witness)) return LevelOutcome::found;
    }
    witness.clear();
    return LevelOutcome::refuted;
  }

  /// Every family of `size` distinct sets whose first member is an orbit
  /// representative.
  LevelOutcome search_level(int size, std::uint64_t cap, std::vector<int>& witness) {
    const double work =
        static_cast<double>(reps_.size()) * choose(static_cast<double>(masks_.size()) - 1, size - 1);
    if (work > static_cast<double>(cap)) return LevelOutcome::over_budget;
    seen_.clear();
    for (int rep : reps_) {
      witness.assign(1, rep);
      if (extend(size, rep, 0, masks_[static_cast<std::size_t>(rep)], witness))
        return LevelOutcome::found;
    }
    witness.clear();
    return LevelOutcome::refuted;
  }

 private:
  static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

  void compute_orbits(int n, const std::unordered_map<VertexMask, int>& index) {
    const auto group = all_automorphisms(n);
    const std::size_t count = std::size_t{1} << n;
    std::vector<Vertex> table(group.size() * count);
    for (std::size_t g = 0; g < group.size(); ++g)
      for (Vertex v = 0; v < count; ++v) table[g * count + v] = group[g].apply(v);

    std::vector<bool> assigned(masks_.size(), false);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (assigned[i]) continue;
      reps_.push_back(static_cast<int>(i));
      for (std::size_t g = 0; g < group.size(); ++g) {
        VertexMask image = 0;
        for (VertexMask m = masks_[i]; m; m &= m - 1)
          image |= BitCube::bit(table[g * count + static_cast<std::size_t>(std::countr_zero(m))]);
        const auto it = index.find(image);
        // The copy set is closed under automorphisms when enumeration is complete.
        if (it == index.end()) throw std::logic_error("copy enumeration is not automorphism-closed");
        assigned[static_cast<std::size_t>(it->second)] = true;
      }
    }
  }

  bool evaluate(VertexMask removed) {
    if (seen_.size() < kMemoLimit && !seen_.insert(removed).second) return false;
    ++evaluations_;
    return cube_.is_cut(removed);
  }

  bool extend(int size, int rep, int from, VertexMask acc, std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == size) return evaluate(acc);
    const int total = static_cast<int>(masks_.size());
    for (int j = from; j < total; ++j) {
      if (j == rep) continue;
      chosen.push_back(j);
      if (extend(size, rep, j + 1, acc | masks_[static_cast<std::size_t>(j)], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool cover(int size, VertexMask target, VertexMask uncovered, VertexMask acc, std::uint64_t cap,
             std::uint64_t& spent, std::vector<int>& chosen) {
    if (uncovered == 0) {
      if (++spent > cap) return false;
      ++evaluations_;
      return cube_.is_cut(acc);
    }
    if (static_cast<int>(chosen.size()) == size || spent > cap) return false;
    const auto lowest = static_cast<std::size_t>(std::countr_zero(uncovered));
    for (int j : by_vertex_[lowest]) {
      const VertexMask m = masks_[static_cast<std::size_t>(j)];
      if (m & target) continue;
      chosen.push_back(j);
      if (cover(size, target, uncovered & ~m, acc | m, cap, spent, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  BitCube cube_;
  std::vector<VertexMask> masks_;
  std::vector<std::size_t> copy_of_;
  std::vector<int> reps_;
  std::vector<std::vector<int>> by_vertex_;
  std::unordered_set<VertexMask> seen_;
  std::uint64_t evaluations_ = 0;
};

bool extended_kind(const StructureKind& kind) {
  switch (kind.shape()) {
    case Shape::vertex:
    case Shape::edge: return true;
    case Shape::path: return kind.size() <= 4;
    case Shape::cycle: return kind.size() == 4 || kind.size() == 8;
    case Shape::star: return false;
  }
  return false;
}

}  // namespace

SearchBudget SearchBudget::from_environment() {
  SearchBudget budget;
  if (const char* raw = std::getenv("HYPERCUT_MAX_DIM"); raw && *raw) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > kExtendedDimension)
      throw std::invalid_argument("HYPERCUT_MAX_DIM must be an integer in [1, 5], got \"" +
                                  std::string(raw) + "\"");
    budget.max_dimension = static_cast<int>(value);
  }
  return budget;
}

Admission admit(const SearchBudget& budget, int n, const StructureKind& kind) {
  if (n < 1 || n > kMaskMaxDimension)
    return {false, 0, "oracle supports 1 <= n <= " + std::to_string(kMaskMaxDimension)};
  if (n <= budget.max_dimension) return {true, budget.max_family_size, {}};
  if (n == kExtendedDimension && extended_kind(kind))
    return {true, std::min(budget.max_family_size, kExtendedFamilyCap), {}};
  return {false, 0,
          "Q_" + std::to_string(n) + " with " + kind.name() + " exceeds the oracle dimension ceiling " +
              std::to_string(budget.max_dimension)};
}

CopyEnumeration enumerate_copies(int n, const StructureKind& kind, CutMode mode,
                                 std::optional<std::size_t> element_cap) {
  if (n < 1 || n > kMaskMaxDimension)
    throw BudgetExceeded("copy enumeration supports 1 <= n <= " + std::to_string(kMaskMaxDimension));
  CopyEnumeration out;
  CopySink sink(out, element_cap);
  const bool sub = mode == CutMode::substructure;
  const int vertices = 1 << n;

  switch (kind.shape()) {
    case Shape::vertex:
    case Shape::edge:
    case Shape::path: {
      const int k = std::min(kind.size(), vertices);
      for (int len = sub ? 1 : kind.size(); len <= k; ++len) enumerate_paths(n, len, sink);
      break;
    }
    case Shape::cycle: {
      if (sub)
        for (int len = 1; len <= std::min(kind.size(), vertices); ++len) enumerate_paths(n, len, sink);
      if (kind.size() <= vertices) enumerate_cycles(n, kind.size(), sink);
      break;
    }
    case Shape::star: {
      for (int leaves = sub ? 0 : kind.size(); leaves <= std::min(kind.size(), n); ++leaves)
        enumerate_stars(n, leaves, sink);
      break;
    }
  }
  return out;
}

OracleResult min_structure_cut(int n, const StructureKind& kind, CutMode mode,
                               const SearchBudget& budget) {
  const Admission admission = admit(budget, n, kind);
  if (!admission.admitted) throw BudgetExceeded(admission.reason);

  const CopyEnumeration copies = enumerate_copies(n, kind, mode, budget.element_cap);
  if (copies.copies.empty())
    throw std::invalid_argument(kind.name() + " has no " + std::string(to_string(mode)) +
                                " copies in Q_" + std::to_string(n));

  CutSearch search(n, copies, budget.orbit_pruning && !copies.truncated);
  OracleResult result;
  result.stats.copies = copies.copies.size();
  result.stats.vertex_sets = search.vertex_sets();
  result.stats.orbit_representatives = search.representatives();

  std::vector<int> witness;
  bool found = false;
  for (int size = 1; size <= admission.family_cap && !found; ++size) {
    if (budget.seeded &&
        search.seeded_level(size, budget.max_evaluations, witness) == LevelOutcome::found) {
      found = true;
      break;
    }
    const LevelOutcome outcome = search.search_level(size, budget.max_evaluations, witness);
    if (outcome == LevelOutcome::found) found = true;
    if (outcome != LevelOutcome::refuted) break;
    result.stats.levels_refuted = size;
  }
  result.stats.families_evaluated = search.evaluations();

  result.exhaustive = !copies.truncated;
  result.lower_bound = result.exhaustive ? result.stats.levels_refuted + 1 : 1;
  if (found) {
    CutFamily f{n, kind, mode, {}};
    for (int set : witness) f.elements.push_back(copies.copies[search.copy_index(set)]);
    const int size = static_cast<int>(f.elements.size());
    result.upper_bound = size;
    if (result.exhaustive && result.lower_bound == size) result.value = size;
    result.witness = std::move(f);
  }
  return result;
}

bool verify_no_smaller_cut(int n, const StructureKind& kind, CutMode mode, int s,
                           const SearchBudget& budget) {
  if (s <= 1) return true;
  const Admission admission = admit(budget, n, kind);
  if (!admission.admitted) throw BudgetExceeded(admission.reason);
  if (s - 1 > admission.family_cap)
    throw BudgetExceeded("families of size " + std::to_string(s - 1) + " exceed the cap of " +
                         std::to_string(admission.family_cap));

  const CopyEnumeration copies = enumerate_copies(n, kind, mode, budget.element_cap);
  if (copies.truncated) throw BudgetExceeded("copy enumeration was truncated by element_cap");
  if (copies.copies.empty()) return true;

  CutSearch search(n, copies, budget.orbit_pruning);
  std::vector<int> witness;
  for (int size = 1; size < s; ++size) {
    switch (search.search_level(size, budget.max_evaluations, witness)) {
      case LevelOutcome::found: return false;
      case LevelOutcome::over_budget:
        throw BudgetExceeded("level " + std::to_string(size) + " exceeds max_evaluations");
      case LevelOutcome::refuted: break;
    }
  }
  return true;
}

}  // namespace hypercut
