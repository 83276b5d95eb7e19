#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "twdp/generator.hpp"
#include "twdp/instance_io.hpp"

using namespace twdp;
using namespace twdp::testing;

namespace {

int error_line(std::string_view text) {
  try {
    (void)parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("minimal instance round-trips byte for byte") {
  const std::string text = "1\n1\n7\n1\n0\n1\n0\n0\n";
  ParseResult r = parse_instance(text);
  CHECK(r.warnings.empty());
  CHECK(r.instance.graph.vertex_count() == 1);
  CHECK(r.instance.weights == WeightMap{7});
  CHECK(r.instance.td.bags == std::vector<Bag>{{0}});
  CHECK(serialize_instance(r.instance) == text);
}

TEST_CASE("empty instance round-trips") {
  const std::string text = "0\n0\n\n0\n0\n0\n0\n";
  ParseResult r = parse_instance(text);
  CHECK(r.instance.graph.vertex_count() == 0);
  CHECK(serialize_instance(r.instance) == text);
}

TEST_CASE("edge and bag order and orientation are preserved") {
  const std::string text = "3\n3\n1 2 3\n3\n2\n2 1\n1 0\n2\n1\n2 1\n0 1\n1 0\n";
  ParseResult r = parse_instance(text);
  CHECK(r.instance.graph.edges() == std::vector<Edge>{{2, 1}, {1, 0}});
  CHECK(serialize_instance(r.instance) == text);
}

TEST_CASE("CRLF line endings are accepted") {
  ParseResult r = parse_instance("1\r\n1\r\n7\r\n1\r\n0\r\n1\r\n0\r\n0\r\n");
  CHECK(r.instance.weights == WeightMap{7});
}

TEST_CASE("parse errors carry the offending line") {
  CHECK(error_line("") == 1);
  CHECK(error_line("x\n") == 1);
  CHECK(error_line("2\n3\n") == 2);
  CHECK(error_line("2\n2\n1\n") == 3);
  CHECK(error_line("2\n2\n1 1\n3\n") == 4);
  CHECK(error_line("2\n2\n1 1\n2\n1\n0 2\n") == 6);
  CHECK(error_line("2\n2\n1 1\n2\n1\n1 1\n") == 6);
  CHECK(error_line("2\n2\n1 1\n2\n1\n0 1\n1\n0\n0 5\n") == 9);
  CHECK(error_line("2\n2\n1 1\n2\n1\n0 1\n1\n1\n0 1\n0 3\n") == 10);
  CHECK(error_line("2\n2\n1 1\n2\n1\n0 1\n1\n0\n0 1\n") == 0);
  CHECK(error_line("2\n2\n1 1\n2\n1\n0 1\n1\n0\n0 1\nextra\n") == 10);
  CHECK(error_line("1\n1\n1\n1\n-1\n") == 5);
  CHECK_THROWS_AS(parse_instance("x\n"), MalformedInput);
}

TEST_CASE("out-of-range weights and duplicate edges are warnings") {
  ParseResult r = parse_instance("2\n2\n0 100001\n2\n2\n0 1\n1 0\n1\n0\n0 1\n");
  REQUIRE(r.warnings.size() == 3);
  CHECK(r.warnings[0].find("vertex 0") != std::string::npos);
  CHECK(r.warnings[1].find("vertex 1") != std::string::npos);
  CHECK(r.instance.graph.edge_count() == 1);
}

TEST_CASE("problem bounds for the induced C4 problem") {
  Instance small{path_graph(3), {1, 1, 1}, path_decomposition(3)};
  CHECK(constraint_warnings(small, "induced-c4-free").size() == 1);
  CHECK(constraint_warnings(small, "cograph").empty());
  Instance ok{path_graph(4), {1, 1, 1, 1}, path_decomposition(4)};
  CHECK(constraint_warnings(ok, "induced-c4-free").empty());
  Instance big{path_graph(95), WeightMap(95, 1), path_decomposition(95)};
  CHECK(constraint_warnings(big, "induced-c4-free").size() == 1);
}

TEST_CASE("generated instances round-trip through text") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenConfig cfg = preset("standard");
    cfg.seed = seed;
    Instance inst = sample_instance(cfg);
    const std::string text = serialize_instance(inst);
    ParseResult back = parse_instance(text);
    CHECK(back.warnings.empty());
    CHECK(back.instance.graph == inst.graph);
    CHECK(back.instance.weights == inst.weights);
    CHECK(back.instance.td == inst.td);
    CHECK(serialize_instance(back.instance) == text);
  }
}

TEST_CASE("checked-in fixtures parse and round-trip") {
  const std::filesystem::path dir = std::filesystem::path(TWDP_DATA_DIR) / "catalog";
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    ++seen;
    ParseResult r = read_instance_file(entry.path());
    CAPTURE(entry.path().string());
    CHECK(r.warnings.empty());
    CHECK(validate(r.instance.td, r.instance.graph).ok());
    const std::filesystem::path tmp = std::filesystem::temp_directory_path() / "twdp-roundtrip.txt";
    write_instance_file(tmp, r.instance);
    ParseResult again = read_instance_file(tmp);
    CHECK(serialize_instance(again.instance) == serialize_instance(r.instance));
    std::filesystem::remove(tmp);
  }
  CHECK(seen == 17);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS(read_instance_file("/nonexistent/instance.txt"));
}
