#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twdp/generator.hpp"
#include "twdp/instance_io.hpp"
#include "twdp/oracle.hpp"
#include "twdp/solvers.hpp"
#include "twdp/suites.hpp"

using namespace twdp;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTooLarge = 3;

Instance load(const std::string& path, const std::string& problem) {
  ParseResult parsed = read_instance_file(path);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& w : constraint_warnings(parsed.instance, problem)) std::cerr << "warning: " << w << "\n";
  return std::move(parsed.instance);
}

bool known(const std::vector<std::string>& ids, const std::string& id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

int cmd_solve(const std::string& path, const std::string& problem) {
  const Instance inst = load(path, problem);
  ValidationReport report = validate(inst.td, inst.graph);
  if (!report.ok()) {
    std::cerr << "invalid tree decomposition:\n" << report.to_string();
    return kExitBadInput;
  }
  std::cout << solve_instance(inst, make_solver(problem)).printed << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& problem) {
  const Instance inst = load(path, problem);
  try {
    OracleResult r = wmc_bruteforce(inst.graph, inst.weights, predicate_for(problem));
    std::cout << (r.feasible ? std::to_string(r.value.residue()) : "-1") << "\n";
  } catch (const OracleTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kExitTooLarge;
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const Instance inst = load(path, "");
  ValidationReport report = validate(inst.td, inst.graph);
  if (!report.ok()) {
    std::cout << "invalid\n" << report.to_string();
    return kExitFail;
  }
  NiceDecomposition nd = to_nice(inst.td, inst.graph);
  std::cout << "valid width=" << width_of(inst.td) << " bags=" << inst.td.bags.size()
            << " nice-nodes=" << nd.nodes.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-decomposition DP engine, brute-force oracle and test harness"};
  app.require_subcommand(1);

  std::string problem;
  std::string instance_path;
  std::uint64_t seed = 1;
  std::string suite_config;
  std::string gen_config;
  std::string coverage_config;
  std::string out;

  auto problem_check = CLI::IsMember(oracle_ids());

  auto* solve = app.add_subcommand("solve", "Print the weighted model count of an instance (-1 if infeasible)");
  solve->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--problem", problem, "Problem id")->required()->check(CLI::IsMember(solver_ids()));

  auto* verify = app.add_subcommand("verify", "Print the brute-force answer (n <= 22)");
  verify->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
  verify->add_option("--problem", problem, "Problem id")->required()->check(problem_check);

  std::string suite_kind;
  std::string dump_dir;
  std::string data_dir = default_data_dir().string();
  int cases = -1;
  auto* suite = app.add_subcommand("suite", "Run a test suite; exit status 0 iff every case passes");
  suite->add_option("kind", suite_kind, "consistency | correctness | efficiency | sporadic")
      ->required()
      ->check(CLI::IsMember({"consistency", "correctness", "efficiency", "sporadic"}));
  suite->add_option("--problem", problem, "Problem id, or 'all'")->default_val("all");
  suite->add_option("--seed", seed, "Seed")->default_val(1);
  suite->add_option("--config", suite_config, "Preset name or JSON config for generated instances");
  suite->add_option("--out", out, "Write a JSON summary here");
  suite->add_option("--dump", dump_dir, "Directory for reproducer instances of failing cases");
  suite->add_option("--data", data_dir, "Data directory holding catalog/");
  suite->add_option("--cases", cases, "Override the number of cases (repetitions for efficiency)");

  int count = 1;
  int coverage_count = 1000;
  bool catalog = false;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("--config", gen_config, "Preset (warmup, standard, stress) or JSON file")->default_val("standard");
  gen->add_option("--seed", seed, "Seed")->default_val(1);
  gen->add_option("--out", out, "Output file, or directory when --count > 1 or --catalog")->required();
  gen->add_option("--count", count, "Number of instances (seeds seed, seed+1, ...)")->default_val(1);
  gen->add_flag("--catalog", catalog, "Write the fixture catalog and manifest instead");

  auto* vtd = app.add_subcommand("validate-td", "Check the tree decomposition of an instance");
  vtd->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> files;
  auto* coverage = app.add_subcommand("coverage", "Report 4-vertex induced subgraph coverage");
  coverage->add_option("instances", files, "Instance files (default: generate --count instances)");
  coverage->add_option("--config", coverage_config, "Preset or JSON config")->default_val("standard");
  coverage->add_option("--seed", seed, "Seed")->default_val(1);
  coverage->add_option("--count", coverage_count, "Number of generated instances")->default_val(1000);
  coverage->add_option("--out", out, "Write a JSON summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*solve) return cmd_solve(instance_path, problem);
    if (*verify) return cmd_verify(instance_path, problem);
    if (*vtd) return cmd_validate(instance_path);

    if (*suite) {
      SuiteOptions opt;
      opt.seed = seed;
      if (!suite_config.empty()) opt.config = load_config(suite_config);
      if (!dump_dir.empty()) opt.dump = dump_dir;
      opt.data_dir = data_dir;
      opt.cases = cases;
      std::vector<std::string> problems;
      if (problem == "all") {
        problems = solver_ids();
      } else if (known(solver_ids(), problem)) {
        problems = {problem};
      } else {
        std::cerr << "no DP solver for problem '" << problem << "'\n";
        return kExitBadInput;
      }
      bool all_passed = true;
      nlohmann::json summary = nlohmann::json::array();
      for (const auto& p : problems) {
        SuiteReport report = run_suite(parse_suite_kind(suite_kind), p, opt);
        std::cout << report.to_text();
        all_passed = all_passed && report.passed();
        summary.push_back(nlohmann::json::parse(report.to_json()));
      }
      if (!out.empty()) std::ofstream(out) << summary.dump(2) << "\n";
      return all_passed ? 0 : kExitFail;
    }

    if (*gen) {
      if (catalog) {
        auto entries = write_catalog(out);
        std::cout << "wrote " << entries.size() << " fixtures to " << out << "\n";
        return 0;
      }
      GenConfig cfg = load_config(gen_config);
      if (count == 1) {
        cfg.seed = seed;
        write_instance_file(out, sample_instance(cfg));
        return 0;
      }
      std::filesystem::create_directories(out);
      for (int i = 0; i < count; ++i) {
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        write_instance_file(std::filesystem::path(out) / ("instance-" + std::to_string(cfg.seed) + ".txt"),
                            sample_instance(cfg));
      }
      return 0;
    }

    if (*coverage) {
      CoverageReport report;
      if (!files.empty()) {
        for (const auto& f : files) {
          Instance inst = load(f, "");
          report.add(inst.graph, inst.td);
        }
      } else {
        GenConfig cfg = load_config(coverage_config);
        for (int i = 0; i < coverage_count; ++i) {
          cfg.seed = seed + static_cast<std::uint64_t>(i);
          Instance inst = sample_instance(cfg);
          report.add(inst.graph, inst.td);
        }
      }
      std::cout << report.to_string();
      if (!out.empty()) {
        nlohmann::json j;
        j["instances"] = report.instances;
        for (int g = 0; g < kGadgetCount; ++g) {
          const auto& row = report.counts[g];
          j["classes"][to_string(static_cast<Gadget>(g))] = {
              {"one-bag", row[0]}, {"introduce-split", row[1]}, {"join-split", row[2]}};
        }
        std::ofstream(out) << j.dump(2) << "\n";
      }
      return report.missing().empty() ? 0 : kExitFail;
    }
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
