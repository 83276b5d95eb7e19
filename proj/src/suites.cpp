#include "twdp/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twdp/oracle.hpp"
#include "twdp/solvers.hpp"

namespace twdp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string oracle_answer(const OracleResult& r) {
  return r.feasible ? std::to_string(r.value.residue()) : "-1";
}

class ReportBuilder {
 public:
  ReportBuilder(SuiteKind kind, std::string_view problem, const SuiteOptions& opt) : opt_(opt) {
    report_.kind = kind;
    report_.problem = std::string(problem);
    report_.seed = opt.seed;
  }

  void add(CaseResult c, const Instance* inst = nullptr) {
    if (!c.pass && !report_.first_failure) {
      report_.first_failure = c.name + ": " + c.detail;
      if (inst && opt_.dump) {
        std::filesystem::create_directories(*opt_.dump);
        std::string file = std::string(to_string(report_.kind)) + "-" + report_.problem + "-" + c.name + ".txt";
        std::replace(file.begin(), file.end(), ' ', '_');
        std::replace(file.begin(), file.end(), '/', '_');
        const auto path = *opt_.dump / file;
        write_instance_file(path, *inst);
        report_.reproducer = path;
      }
    }
    report_.cases.push_back(std::move(c));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  const SuiteOptions& opt_;
  SuiteReport report_;
};

void require_solver(std::string_view problem) {
  const auto& ids = solver_ids();
  if (std::find(ids.begin(), ids.end(), problem) == ids.end()) {
    throw std::invalid_argument("no DP solver for problem '" + std::string(problem) + "'");
  }
}

}  // namespace

const char* to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::kConsistency: return "consistency";
    case SuiteKind::kCorrectness: return "correctness";
    case SuiteKind::kEfficiency: return "efficiency";
    case SuiteKind::kSporadic: return "sporadic";
  }
  return "?";
}

SuiteKind parse_suite_kind(std::string_view name) {
  for (auto k : {SuiteKind::kConsistency, SuiteKind::kCorrectness, SuiteKind::kEfficiency,
                 SuiteKind::kSporadic}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::filesystem::path default_data_dir() { return TWDP_DATA_DIR; }

bool SuiteReport::passed() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : cases) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  const auto passing = std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
  os << to_string(kind) << " " << problem << " seed=" << seed << ": " << passing << "/" << cases.size()
     << (passed() ? " passed" : " FAILED") << "\n";
  if (first_failure) os << "first failure: " << *first_failure << "\n";
  if (reproducer) os << "reproducer: " << reproducer->string() << "\n";
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = to_string(kind);
  j["problem"] = problem;
  j["seed"] = seed;
  j["passed"] = passed();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    j["cases"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  j["first_failure"] = first_failure ? nlohmann::json(*first_failure) : nlohmann::json();
  j["reproducer"] = reproducer ? nlohmann::json(reproducer->string()) : nlohmann::json();
  return j.dump(2);
}

std::string format_answer(const RunResult& r) {
  return r.feasible() ? std::to_string(r.answer().residue()) : "-1";
}

SolveOutcome solve_instance(const Instance& inst, const SolverCallbacks& cb) {
  const auto start = Clock::now();
  NiceDecomposition nd = to_nice(inst.td, inst.graph);
  SolveOutcome out;
  out.result = run(nd, inst.graph, inst.weights, cb);
  out.seconds = seconds_since(start);
  out.printed = format_answer(out.result);
  return out;
}

SuiteReport run_consistency(std::string_view problem, const SuiteOptions& opt) {
  require_solver(problem);
  ReportBuilder rb(SuiteKind::kConsistency, problem, opt);
  GenConfig cfg = opt.config.value_or([] {
    GenConfig c = preset("standard");
    c.n = 40;
    return c;
  }());
  cfg.seed = mix_seed(opt.seed, 0);
  const Instance base = sample_instance(cfg);
  const SolverCallbacks cb = make_solver(problem);
  const SolveOutcome reference = solve_instance(base, cb);
  rb.add({"base n=" + std::to_string(cfg.n) + " width=" + std::to_string(width_of(base.td)),
          true, "answer " + reference.printed, reference.seconds});

  const int count = opt.cases > 0 ? opt.cases : kConsistencyPerturbations;
  TreeDecomposition td = base.td;
  for (int i = 0; i < count; ++i) {
    const PerturbationKind kind = kAllPerturbations[i % kAllPerturbations.size()];
    Perturbed p = perturb(td, base.graph, kind, mix_seed(opt.seed, 1000 + i));
    td = p.td;
    Instance inst{base.graph, base.weights, td};
    CaseResult c;
    c.name = "perturbation " + std::to_string(i + 1) + " " + to_string(kind);
    ValidationReport vr = validate(td, base.graph);
    if (!vr.ok()) {
      c.detail = "invalid decomposition: " + vr.to_string();
    } else if (width_of(td) > width_of(base.td)) {
      c.detail = "width grew to " + std::to_string(width_of(td));
    } else {
      SolveOutcome s = solve_instance(inst, cb);
      c.seconds = s.seconds;
      c.pass = s.printed == reference.printed;
      c.detail = "bags=" + std::to_string(td.bags.size()) + (p.identity ? " (identity)" : "") +
                 (c.pass ? "" : " expected " + reference.printed + " got " + s.printed);
    }
    rb.add(std::move(c), &inst);
  }
  return rb.take();
}

SuiteReport run_correctness(std::string_view problem, const SuiteOptions& opt) {
  require_solver(problem);
  ReportBuilder rb(SuiteKind::kCorrectness, problem, opt);
  GenConfig base = opt.config.value_or([] {
    GenConfig c = preset("warmup");
    c.width = 3;
    c.join_cap = 3;
    return c;
  }());
  if (base.n > kOracleMaxVertices) {
    throw OracleTooLarge("correctness instances need n <= " + std::to_string(kOracleMaxVertices));
  }
  const SolverCallbacks cb = make_solver(problem);
  const Predicate pred = predicate_for(problem);
  const int count = opt.cases > 0 ? opt.cases : kCorrectnessCases;
  Rng rng(opt.seed);
  for (int i = 0; i < count; ++i) {
    GenConfig cfg = base;
    cfg.n = static_cast<int>(rng.uniform(std::min(1, base.n), base.n));
    cfg.seed = mix_seed(opt.seed, i);
    const Instance inst = sample_instance(cfg);
    const SolveOutcome s = solve_instance(inst, cb);
    const std::string expected = oracle_answer(wmc_bruteforce(inst.graph, inst.weights, pred));
    CaseResult c;
    c.name = "case " + std::to_string(i) + " n=" + std::to_string(cfg.n) + " width=" +
             std::to_string(width_of(inst.td));
    c.pass = s.printed == expected;
    c.detail = c.pass ? s.printed : "oracle " + expected + " solver " + s.printed;
    c.seconds = s.seconds;
    rb.add(std::move(c), &inst);
  }
  return rb.take();
}

SuiteReport run_efficiency(std::string_view problem, const SuiteOptions& opt) {
  require_solver(problem);
  ReportBuilder rb(SuiteKind::kEfficiency, problem, opt);
  GenConfig base = opt.config.value_or(preset("stress"));
  const SolverCallbacks cb = make_solver(problem);
  const int reps = opt.cases > 0 ? opt.cases : 3;
  auto measure = [&](int n, Instance& inst) {
    GenConfig cfg = base;
    cfg.n = n;
    cfg.seed = mix_seed(opt.seed, static_cast<std::uint64_t>(n));
    inst = sample_instance(cfg);
    double best = 1e300;
    std::string answer;
    for (int r = 0; r < reps; ++r) {
      SolveOutcome s = solve_instance(inst, cb);
      best = std::min(best, s.seconds);
      answer = s.printed;
    }
    return std::pair{best, answer};
  };
  const std::vector<int> ladder = {5000, 10000, 20000, 40000};
  double previous = 0;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    Instance inst;
    auto [t, answer] = measure(ladder[i], inst);
    std::ostringstream detail;
    detail << "seconds=" << t << " width=" << width_of(inst.td) << " answer=" << answer;
    CaseResult c{"n=" + std::to_string(ladder[i]), true, detail.str(), t};
    if (i > 0) {
      const double ratio = t / std::max(previous, 1e-9);
      std::ostringstream r;
      r << " ratio=" << ratio << " (limit " << kDoublingRatioLimit << ")";
      c.detail += r.str();
      c.pass = ratio <= kDoublingRatioLimit;
    }
    previous = t;
    rb.add(std::move(c), &inst);
  }
  Instance inst;
  auto [t, answer] = measure(50000, inst);
  std::ostringstream detail;
  detail << "seconds=" << t << " (limit " << kLargestSeconds << ") answer=" << answer;
  rb.add({"n=50000", t <= kLargestSeconds, detail.str(), t}, &inst);
  return rb.take();
}

std::vector<FixtureEntry> load_manifest(const std::filesystem::path& data_dir) {
  const auto dir = data_dir / "catalog";
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("cannot open " + (dir / "manifest.json").string());
  nlohmann::json j;
  in >> j;
  std::vector<FixtureEntry> out;
  for (const auto& f : j.at("fixtures")) {
    FixtureEntry e;
    e.name = f.at("name").get<std::string>();
    e.file = dir / f.at("file").get<std::string>();
    if (f.contains("provenance")) e.provenance = f["provenance"].get<std::string>();
    if (f.contains("pinned")) {
      for (const auto& [k, v] : f["pinned"].items()) e.pinned.emplace_back(k, v.get<std::string>());
    }
    out.push_back(std::move(e));
  }
  return out;
}

SuiteReport run_sporadic(std::string_view problem, const SuiteOptions& opt) {
  require_solver(problem);
  ReportBuilder rb(SuiteKind::kSporadic, problem, opt);
  const SolverCallbacks cb = make_solver(problem);
  const Predicate pred = predicate_for(problem);
  for (const auto& entry : load_manifest(opt.data_dir)) {
    const Instance inst = read_instance_file(entry.file).instance;
    const SolveOutcome s = solve_instance(inst, cb);
    CaseResult c;
    c.name = entry.name;
    c.seconds = s.seconds;
    if (inst.graph.vertex_count() <= kOracleMaxVertices) {
      const std::string expected = oracle_answer(wmc_bruteforce(inst.graph, inst.weights, pred));
      c.pass = s.printed == expected;
      c.detail = c.pass ? s.printed + " (brute force)" : "oracle " + expected + " solver " + s.printed;
    } else {
      auto it = std::find_if(entry.pinned.begin(), entry.pinned.end(),
                             [&](const auto& p) { return p.first == problem; });
      if (it == entry.pinned.end()) {
        c.detail = "no pinned value for n=" + std::to_string(inst.graph.vertex_count());
      } else {
        c.pass = s.printed == it->second;
        c.detail = (c.pass ? s.printed : "pinned " + it->second + " solver " + s.printed) + " (" +
                   entry.provenance.value_or("pinned") + ")";
      }
    }
    rb.add(std::move(c), &inst);
  }
  return rb.take();
}

SuiteReport run_suite(SuiteKind kind, std::string_view problem, const SuiteOptions& opt) {
  switch (kind) {
    case SuiteKind::kConsistency: return run_consistency(problem, opt);
    case SuiteKind::kCorrectness: return run_correctness(problem, opt);
    case SuiteKind::kEfficiency: return run_efficiency(problem, opt);
    case SuiteKind::kSporadic: return run_sporadic(problem, opt);
  }
  throw std::invalid_argument("unknown suite");
}

std::vector<FixtureEntry> write_catalog(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["fixtures"] = nlohmann::json::array();
  std::vector<FixtureEntry> out;
  for (const auto& entry : build_catalog()) {
    const Instance& inst = entry.instance;
    FixtureEntry fe;
    fe.name = entry.name;
    fe.file = dir / (entry.name + ".txt");
    write_instance_file(fe.file, inst);
    nlohmann::json j = {{"name", entry.name},
                        {"file", entry.name + ".txt"},
                        {"n", inst.graph.vertex_count()},
                        {"width", width_of(inst.td)}};
    if (inst.graph.vertex_count() > kOracleMaxVertices) {
      nlohmann::json pinned = nlohmann::json::object();
      for (const auto& id : solver_ids()) {
        const SolverCallbacks cb = make_solver(id);
        const std::string answer = solve_instance(inst, cb).printed;
        TreeDecomposition td = inst.td;
        for (int i = 0; i < kConsistencyPerturbations; ++i) {
          td = perturb(td, inst.graph, kAllPerturbations[i % kAllPerturbations.size()],
                       mix_seed(42, i)).td;
          const std::string again = solve_instance(Instance{inst.graph, inst.weights, td}, cb).printed;
          if (again != answer) {
            throw std::runtime_error(entry.name + ": " + id + " disagrees across decompositions");
          }
        }
        pinned[id] = answer;
        fe.pinned.emplace_back(id, answer);
      }
      fe.provenance = "pinned, not oracle-verified";
      j["provenance"] = *fe.provenance;
      j["pinned"] = pinned;
    }
    manifest["fixtures"].push_back(j);
    out.push_back(std::move(fe));
  }
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
  return out;
}

}  // namespace twdp
