// hypercut: construct, validate and search structure cuts of hypercubes.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or range error,
// 3 search budget exhausted where an exact answer was demanded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercut/analysis.hpp"
#include "hypercut/constructions.hpp"
#include "hypercut/formulas.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/properties.hpp"
#include "hypercut/serialize.hpp"

using namespace hypercut;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char* kVerifySchema = "hypercut.verify-report/1";
constexpr const char* kPropertySchema = "hypercut.property-report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out;
  int jobs = 1;

  int n = 0;
  std::string kind = "path";
  int k = 0;
  std::string mode = "structure";
  int max_size = 0;
  int nmax = 0;
  std::string scope = "all";
  std::vector<std::string> remove;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10'000;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + opt.out + " for writing");
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Rows of flat objects; header from the first row's keys.
std::string rows_to_csv(const ordered_json& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      os << (first ? "" : ",") << csv_field(value);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

StructureKind kind_of(const Options& opt) {
  if ((opt.kind == "path" || opt.kind == "cycle" || opt.kind == "star") && opt.k == 0)
    throw UsageError("--k is required for --kind " + opt.kind);
  try {
    return parse_structure_kind(opt.kind, opt.k);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

CutMode mode_of(const Options& opt) { return parse_cut_mode(opt.mode); }

SearchBudget budget_of(const Options& opt) {
  SearchBudget b;
  try {
    b = SearchBudget::from_environment();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opt.max_size > 0) b.max_family_size = opt.max_size;
  return b;
}

CutFamily construct(int n, const std::string& kind, int k) {
  if (kind == "path") return build_path_cut(n, k);
  if (kind == "cycle") return build_cycle_cut(n, k);
  throw UsageError("no construction for --kind " + kind + "; use path or cycle");
}

// ---- construct ----------------------------------------------------------

int cmd_construct(const Options& opt) {
  const CutFamily f = construct(opt.n, opt.kind, opt.k);
  if (opt.format == "csv")
    emit(opt, family_to_csv(f));
  else if (opt.format == "dot")
    emit(opt, export_dot(f.n, f.vertex_union()));
  else
    emit(opt, dump(family_to_json(f)));
  return validate_cut(f).ok() ? kExitOk : kExitMismatch;
}

// ---- verify -------------------------------------------------------------

class Report {
 public:
  void add(ordered_json row) {
    const std::string status = row["status"];
    if (status == "pass") ++pass_;
    else if (status == "fail") ++fail_;
    else ++skipped_;
    rows_.push_back(std::move(row));
  }
  bool failed() const { return fail_ > 0; }
  const ordered_json& rows() const { return rows_; }
  ordered_json summary() const {
    return {{"pass", pass_}, {"fail", fail_}, {"skipped", skipped_}};
  }

 private:
  ordered_json rows_ = ordered_json::array();
  int pass_ = 0;
  int fail_ = 0;
  int skipped_ = 0;
};

ordered_json row(const std::string& check, int n, const std::string& param, const ordered_json& expected,
                 const ordered_json& observed, const std::string& status) {
  return {{"check", check},       {"n", n},
          {"param", param},       {"expected", expected},
          {"observed", observed}, {"status", status}};
}

std::string show_formula(const KappaValue& v) {
  return v.is_exact() ? std::to_string(v.lower) : ">=" + std::to_string(v.lower);
}

// Oracle value against a formula value. Exact formulas need equality; lower
// bounds need the oracle value to respect them.
void oracle_row(Report& report, const std::string& check, int n, const StructureKind& kind,
                CutMode mode, const KappaValue& formula, const SearchBudget& budget) {
  const std::string param = kind.name() + "/" + std::string(to_string(mode));
  try {
    const OracleResult r = min_structure_cut(n, kind, mode, budget);
    if (!r.is_exact()) {
      report.add(row(check, n, param, show_formula(formula),
                     ">=" + std::to_string(r.lower_bound), "skipped"));
      return;
    }
    const bool ok = formula.is_exact() ? *r.value == formula.lower : *r.value >= formula.lower;
    report.add(row(check, n, param, show_formula(formula), *r.value, ok ? "pass" : "fail"));
  } catch (const BudgetExceeded& e) {
    report.add(row(check, n, param, show_formula(formula), e.what(), "skipped"));
  }
}

void construction_row(Report& report, const std::string& check, const CutFamily& f, int expected) {
  const CutVerdict v = validate_cut(f);
  const bool ok = v.ok() && static_cast<int>(f.cardinality()) == expected;
  report.add(row(check, f.n, f.kind.name(), expected,
                 v.ok() ? ordered_json(f.cardinality()) : ordered_json(v.reason),
                 ok ? "pass" : "fail"));
}

constexpr int kConstructionMaxDimension = 11;
constexpr int kConstructionMaxLength = 256;

void verify_paths(Report& report, int nmax, const SearchBudget& budget) {
  for (int n = 3; n <= std::min(nmax, kExtendedDimension); ++n)
    for (int k = 3; k <= (1 << (n - 1)); ++k)
      for (CutMode mode : {CutMode::structure, CutMode::substructure}) {
        if (!admit(budget, n, StructureKind::path(k)).admitted) continue;
        oracle_row(report, "path-oracle", n, StructureKind::path(k), mode, kappa_path(n, k, mode), budget);
      }
  for (int n = 3; n <= std::min(nmax, kConstructionMaxDimension); ++n)
    for (int k = 3; k <= std::min(1 << (n - 1), kConstructionMaxLength); ++k)
      construction_row(report, "path-construction", build_path_cut(n, k),
                       kappa_path(n, k, CutMode::structure).value());
}

void verify_cycles(Report& report, int nmax, const SearchBudget& budget) {
  for (int n = 3; n <= std::min(nmax, kExtendedDimension); ++n)
    for (int k = 4; k <= (1 << (n - 1)); k += 2) {
      const StructureKind kind = StructureKind::cycle(k);
      if (!admit(budget, n, kind).admitted) continue;
      for (CutMode mode : {CutMode::structure, CutMode::substructure})
        oracle_row(report, "cycle-oracle", n, kind, mode, kappa_cycle(n, k, mode), budget);
    }
  for (int n = 5; n <= std::min(nmax, kConstructionMaxDimension); ++n)
    for (int k = 6; k <= std::min(1 << (n - 2), kConstructionMaxLength); k += 2)
      construction_row(report, "cycle-construction", build_cycle_cut(n, k),
                       kappa_cycle(n, k, CutMode::structure).value());
}

void verify_power_of_two(Report& report, const SearchBudget& budget) {
  // The small-n table: (n, m) with n in {4, 5}.
  for (const auto& [n, m] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}})
    oracle_row(report, "power-of-two-oracle", n, StructureKind::cycle(1 << m), CutMode::structure,
               kappa_power_of_two_cycle(n, m), budget);
}

void verify_budengs(Report& report, int nmax) {
  const auto bad = verify_budengs_inequality(nmax);
  for (int n = 6; n <= nmax; ++n) {
    int count = 0;
    for (const auto& v : bad) count += v.n == n;
    report.add(row("power-of-two-inequality", n, "3<=m<=" + std::to_string(n - 2), 0, count,
                   count == 0 ? "pass" : "fail"));
  }
}

void verify_g_extra(Report& report) {
  constexpr int n = kGExtraDefaultCeiling;
  for (int g = 0; g <= n; ++g) {
    const int expected = kappa_g_extra_formula(n, g);
    const auto brute = g_extra_connectivity(n, g);
    report.add(row("g-extra", n, "g=" + std::to_string(g), expected,
                   brute ? ordered_json(*brute) : ordered_json(nullptr),
                   brute == expected ? "pass" : "fail"));
  }
}

int cmd_verify(const Options& opt) {
  const SearchBudget budget = budget_of(opt);
  const bool all = opt.scope == "all";
  Report report;
  if (all || opt.scope == "paths") verify_paths(report, opt.nmax ? opt.nmax : 4, budget);
  if (all || opt.scope == "cycles") verify_cycles(report, opt.nmax ? opt.nmax : 4, budget);
  if (all || opt.scope == "power-of-two") verify_power_of_two(report, budget);
  if (all || opt.scope == "budengs") {
    const int nmax = opt.nmax ? opt.nmax : 64;
    if (nmax < 6 || nmax > kMaxFormulaDimension)
      throw UsageError("--nmax for the inequality sweep must be in [6, 64]");
    verify_budengs(report, nmax);
  }
  if (all || opt.scope == "g-extra") verify_g_extra(report);

  if (opt.format == "csv") {
    emit(opt, rows_to_csv(report.rows()));
  } else {
    ordered_json j;
    j["schema"] = kVerifySchema;
    j["command"] = "verify";
    j["parameters"] = {{"scope", opt.scope}, {"nmax", opt.nmax ? ordered_json(opt.nmax) : ordered_json(nullptr)}};
    j["summary"] = report.summary();
    j["rows"] = report.rows();
    emit(opt, dump(j));
  }
  return report.failed() ? kExitMismatch : kExitOk;
}

// ---- oracle -------------------------------------------------------------

int cmd_oracle(const Options& opt) {
  const StructureKind kind = kind_of(opt);
  const CutMode mode = mode_of(opt);
  const SearchBudget budget = budget_of(opt);
  OracleResult r;
  try {
    r = min_structure_cut(opt.n, kind, mode, budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitBudget;
  }

  const Admission adm = admit(budget, opt.n, kind);
  std::string message;
  if (r.value) {
    message = "minimum cut size " + std::to_string(*r.value);
  } else if (r.lower_bound == 2) {
    message = "no cut of size 1";
  } else {
    message = "no cut of size at most " + std::to_string(r.lower_bound - 1);
  }
  // A lower bound is a complete answer when the caller capped the size.
  const bool capped = opt.max_size > 0 && r.lower_bound > adm.family_cap && r.exhaustive;

  if (opt.format == "dot") {
    if (!r.witness) throw UsageError("no witness to draw");
    emit(opt, export_dot(opt.n, r.witness->vertex_union()));
  } else if (opt.format == "csv") {
    ordered_json rows = ordered_json::array();
    rows.push_back({{"n", opt.n},
                    {"kind", kind.name()},
                    {"mode", std::string(to_string(mode))},
                    {"value", r.value ? ordered_json(*r.value) : ordered_json(nullptr)},
                    {"lower_bound", r.lower_bound},
                    {"exhaustive", r.exhaustive},
                    {"orbit_representatives", r.stats.orbit_representatives},
                    {"families_evaluated", r.stats.families_evaluated}});
    emit(opt, rows_to_csv(rows));
  } else {
    ordered_json j = oracle_to_json(opt.n, kind, mode, r);
    j["message"] = message;
    emit(opt, dump(j));
  }
  if (r.is_exact() || capped) return kExitOk;
  return kExitBudget;
}

// ---- export-dot ---------------------------------------------------------

int cmd_export_dot(const Options& opt) {
  std::vector<Vertex> removed;
  if (!opt.remove.empty()) {
    const Cube cube(opt.n);
    for (const std::string& bits : opt.remove) {
      try {
        removed.push_back(cube.parse(bits));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  } else if (opt.k > 0) {
    removed = construct(opt.n, opt.kind, opt.k).vertex_union();
  }
  emit(opt, export_dot(opt.n, removed));
  return kExitOk;
}

// ---- property-test ------------------------------------------------------

int cmd_property_test(const Options& opt) {
  const std::vector<PropertyReport> reports = {
      common_neighbor_property(10),
      path_pair_bound_property(6, 3, 9, opt.trials, opt.seed),
      cycle_pair_bound_property(6, {4, 6, 8}, opt.trials, opt.seed + 1),
  };
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    rows.push_back({{"property", r.name},
                    {"trials", r.trials},
                    {"violations", r.violations},
                    {"max_observed", r.max_observed},
                    {"first_violation", r.first_violation.empty() ? ordered_json(nullptr)
                                                                  : ordered_json(r.first_violation)}});
  }
  if (opt.format == "csv") {
    emit(opt, rows_to_csv(rows));
  } else {
    ordered_json j;
    j["schema"] = kPropertySchema;
    j["seed"] = opt.seed;
    j["trials_per_length"] = opt.trials;
    j["properties"] = rows;
    emit(opt, dump(j));
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure and substructure cuts of hypercubes"};
  app.require_subcommand(1);
  Options opt;

  const auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--out", opt.out, "Write output to FILE instead of stdout");
    sub->add_option("--jobs", opt.jobs, "Worker count (work runs in a fixed order)")
        ->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> kinds = {"path", "cycle", "star", "vertex", "edge"};

  auto* construct_cmd = app.add_subcommand("construct", "Build an explicit path or cycle cut");
  construct_cmd->add_option("--n", opt.n, "Cube dimension")->required();
  construct_cmd->add_option("--kind", opt.kind, "Structure kind")->required()->check(CLI::IsMember(kinds));
  construct_cmd->add_option("--k", opt.k, "Path vertex count or cycle length")->required();
  common(construct_cmd, {"json", "csv", "dot"});

  auto* verify_cmd = app.add_subcommand("verify", "Compare formulas with the oracle and constructions");
  verify_cmd->add_option("--scope", opt.scope, "What to verify")
      ->check(CLI::IsMember({"paths", "cycles", "power-of-two", "budengs", "g-extra", "all"}));
  verify_cmd->add_option("--nmax", opt.nmax, "Largest dimension to sweep")->check(CLI::Range(3, 64));
  verify_cmd->add_option("--max-size", opt.max_size, "Largest family the oracle tries")
      ->check(CLI::PositiveNumber);
  common(verify_cmd, {"json", "csv"});

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum cut search");
  oracle_cmd->add_option("--n", opt.n, "Cube dimension")->required();
  oracle_cmd->add_option("--kind", opt.kind, "Structure kind")->required()->check(CLI::IsMember(kinds));
  oracle_cmd->add_option("--k", opt.k, "Path vertex count, cycle length or star leaves");
  oracle_cmd->add_option("--mode", opt.mode, "Cut mode")
      ->check(CLI::IsMember({"structure", "substructure"}));
  oracle_cmd->add_option("--max-size", opt.max_size, "Largest family to try")
      ->check(CLI::PositiveNumber);
  common(oracle_cmd, {"json", "csv", "dot"});

  auto* dot_cmd = app.add_subcommand("export-dot", "Draw Q_n with removed vertices");
  dot_cmd->add_option("--n", opt.n, "Cube dimension")->required();
  dot_cmd->add_option("--remove", opt.remove, "Vertices to remove, as bit strings")->delimiter(',');
  dot_cmd->add_option("--kind", opt.kind, "Remove a constructed family of this kind")
      ->check(CLI::IsMember({"path", "cycle"}));
  dot_cmd->add_option("--k", opt.k, "Length for --kind");
  common(dot_cmd, {"dot"});

  auto* prop_cmd = app.add_subcommand("property-test", "Seeded randomized invariant checks");
  prop_cmd->add_option("--seed", opt.seed, "Random seed");
  prop_cmd->add_option("--trials", opt.trials, "Trials per length")->check(CLI::PositiveNumber);
  common(prop_cmd, {"json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*construct_cmd) code = cmd_construct(opt);
    else if (*verify_cmd) code = cmd_verify(opt);
    else if (*oracle_cmd) code = cmd_oracle(opt);
    else if (*dot_cmd) code = cmd_export_dot(opt);
    else if (*prop_cmd) code = cmd_property_test(opt);
  } catch (const UsageError& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotCovered& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "hypercut: " << e.what() << '\n';
    return kExitBudget;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "hypercut: done in " << secs << "s, exit " << code << '\n';
  return code;
}
