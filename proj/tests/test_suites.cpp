#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support.hpp"
#include "twdp/oracle.hpp"
#include "twdp/solvers.hpp"
#include "twdp/suites.hpp"

using namespace twdp;
using namespace twdp::testing;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (auto k : {SuiteKind::kConsistency, SuiteKind::kCorrectness, SuiteKind::kEfficiency, SuiteKind::kSporadic}) {
    CHECK(parse_suite_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_suite_kind("fuzz"), std::invalid_argument);
}

TEST_CASE("correctness suite passes for every solver") {
  SuiteOptions opt;
  opt.cases = 25;
  for (const auto& id : solver_ids()) {
    SuiteReport r = run_correctness(id, opt);
    CAPTURE(id);
    CHECK(r.passed());
    CHECK(r.cases.size() == 25);
    CHECK_FALSE(r.first_failure);
  }
}

TEST_CASE("correctness refuses configurations beyond the oracle") {
  SuiteOptions opt;
  opt.config = preset("standard");
  CHECK_THROWS_AS(run_correctness("cograph", opt), OracleTooLarge);
}

TEST_CASE("consistency suite chains perturbations") {
  SuiteOptions opt;
  opt.cases = 12;
  SuiteReport r = run_consistency("maximal-cluster-graph", opt);
  CHECK(r.passed());
  CHECK(r.cases.size() == 13);
}

TEST_CASE("sporadic suite covers the catalog") {
  for (const auto& id : solver_ids()) {
    SuiteReport r = run_sporadic(id, SuiteOptions{});
    CAPTURE(id);
    CHECK(r.passed());
    CHECK(r.cases.size() == 17);
  }
}

TEST_CASE("manifest pins values only above the oracle bound") {
  for (const auto& e : load_manifest(default_data_dir())) {
    const int n = read_instance_file(e.file).instance.graph.vertex_count();
    CAPTURE(e.name);
    CHECK(e.pinned.empty() == (n <= 22));
    CHECK(e.provenance.has_value() == (n > 22));
  }
}

TEST_CASE("a wrong pinned value fails and dumps a reproducer") {
  const auto data = scratch("twdp-suite-data");
  const auto dump = scratch("twdp-suite-dump");
  std::filesystem::create_directories(data / "catalog");
  std::filesystem::copy_file(default_data_dir() / "catalog" / "path-40.txt", data / "catalog" / "path-40.txt");
  nlohmann::json manifest = {{"fixtures",
                              {{{"name", "path-40"},
                                {"file", "path-40.txt"},
                                {"provenance", "pinned, not oracle-verified"},
                                {"pinned", {{"dominating-set", "12345"}}}}}}};
  std::ofstream(data / "catalog" / "manifest.json") << manifest.dump();

  SuiteOptions opt;
  opt.data_dir = data;
  opt.dump = dump;
  SuiteReport r = run_sporadic("dominating-set", opt);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->find("pinned 12345") != std::string::npos);
  REQUIRE(r.reproducer);
  CHECK(std::filesystem::exists(*r.reproducer));
  CHECK(read_instance_file(*r.reproducer).instance.graph.vertex_count() == 40);

  SuiteReport missing = run_sporadic("cograph", opt);
  CHECK_FALSE(missing.passed());

  std::filesystem::remove_all(data);
  std::filesystem::remove_all(dump);
}

TEST_CASE("reports render as text and JSON") {
  SuiteOptions opt;
  opt.cases = 3;
  opt.seed = 9;
  SuiteReport r = run_correctness("dominating-set", opt);
  const std::string text = r.to_text();
  CHECK(text.find("correctness dominating-set seed=9: 3/3 passed") != std::string::npos);
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "correctness");
  CHECK(j["problem"] == "dominating-set");
  CHECK(j["passed"] == true);
  CHECK(j["cases"].size() == 3);
  CHECK(j["first_failure"].is_null());

  SuiteReport empty;
  CHECK_FALSE(empty.passed());
}

TEST_CASE("suites reject problems without a solver") {
  CHECK_THROWS_AS(run_sporadic("induced-c4-free", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("solve_instance formats infeasible answers as -1") {
  Instance k3{complete_graph(3), {1, 1, 1}, single_bag(3)};
  CHECK(solve_instance(k3, make_solver("connected-ge-k")).printed == "-1");
  CHECK(solve_instance(k3, make_solver("maximal-cluster-graph")).printed == "3");
}

TEST_CASE("write_catalog reproduces the checked-in fixtures") {
  const auto dir = scratch("twdp-catalog");
  auto entries = write_catalog(dir / "catalog");
  CHECK(entries.size() == 17);
  for (const auto& e : entries) {
    std::ifstream a(e.file);
    std::ifstream b(default_data_dir() / "catalog" / e.file.filename());
    std::string sa((std::istreambuf_iterator<char>(a)), {});
    std::string sb((std::istreambuf_iterator<char>(b)), {});
    CAPTURE(e.name);
    CHECK(sa == sb);
  }
  auto fresh = load_manifest(dir);
  auto checked_in = load_manifest(default_data_dir());
  REQUIRE(fresh.size() == checked_in.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) CHECK(fresh[i].pinned == checked_in[i].pinned);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic in the seed") {
  SuiteOptions opt;
  opt.cases = 10;
  opt.seed = 77;
  CHECK(run_correctness("cograph", opt).to_text() == run_correctness("cograph", opt).to_text());
  CHECK(run_consistency("connected-ge-k", opt).to_text() == run_consistency("connected-ge-k", opt).to_text());
  SuiteOptions other = opt;
  other.seed = 78;
  CHECK(run_correctness("cograph", opt).to_text() != run_correctness("cograph", other).to_text());
}
