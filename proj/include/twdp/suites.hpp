#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twdp/engine.hpp"
#include "twdp/generator.hpp"

namespace twdp {

enum class SuiteKind { kConsistency, kCorrectness, kEfficiency, kSporadic };
const char* to_string(SuiteKind kind);
SuiteKind parse_suite_kind(std::string_view name);

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  SuiteKind kind = SuiteKind::kCorrectness;
  std::string problem;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  std::optional<std::string> first_failure;
  std::optional<std::filesystem::path> reproducer;

  bool passed() const;
  /// One line per case plus a verdict line.
  std::string to_text() const;
  /// Machine-readable summary; timing fields included.
  std::string to_json() const;
};

/// The checked-in data directory (overridable per run).
std::filesystem::path default_data_dir();

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<GenConfig> config;            // overrides the suite's default instance config
  std::optional<std::filesystem::path> dump;  // directory for reproducer instances
  std::filesystem::path data_dir = default_data_dir();
  int cases = -1;                              // -1: suite default
};

/// Runs to_nice and the engine; the answer as printed by `solve`.
struct SolveOutcome {
  RunResult result;
  std::string printed;  // "-1" or the residue
  double seconds = 0;
};
SolveOutcome solve_instance(const Instance& inst, const SolverCallbacks& cb);
std::string format_answer(const RunResult& r);

/// One fixed instance, 25 chained perturbations, all answers equal.
SuiteReport run_consistency(std::string_view problem, const SuiteOptions& opt);
/// 200 small instances, solver equals brute force.
SuiteReport run_correctness(std::string_view problem, const SuiteOptions& opt);
/// Sizes 5000..40000 at width 3: time ratio per doubling <= 2.5, plus
/// n = 50000 within 10 s.
SuiteReport run_efficiency(std::string_view problem, const SuiteOptions& opt);
/// Catalog fixtures: brute force where possible, pinned values otherwise.
SuiteReport run_sporadic(std::string_view problem, const SuiteOptions& opt);

SuiteReport run_suite(SuiteKind kind, std::string_view problem, const SuiteOptions& opt);

/// Catalog fixtures with their manifest entries.
struct FixtureEntry {
  std::string name;
  std::filesystem::path file;
  std::optional<std::string> provenance;
  std::vector<std::pair<std::string, std::string>> pinned;  // problem -> printed answer
};
std::vector<FixtureEntry> load_manifest(const std::filesystem::path& data_dir);

/// Writes every catalog fixture and manifest.json into `dir`. Fixtures above
/// the brute-force bound get pinned answers, only if 25 perturbed
/// decompositions agree.
std::vector<FixtureEntry> write_catalog(const std::filesystem::path& dir);

inline constexpr int kConsistencyPerturbations = 25;
inline constexpr int kCorrectnessCases = 200;
inline constexpr double kDoublingRatioLimit = 2.5;
inline constexpr double kLargestSeconds = 10.0;

}  // namespace twdp
