#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "twdp/decomposition.hpp"
#include "twdp/graph.hpp"

namespace twdp {

struct Instance {
  Graph graph;
  WeightMap weights;
  TreeDecomposition td;
};

/// Malformed instance text; `line()` is 1-based.
class ParseError : public MalformedInput {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseResult {
  Instance instance;
  std::vector<std::string> warnings;  // e.g. weights outside [1, 100000]
};

/// Layout, one item per line: n; weight count; weights; vertex count; edge
/// count; one "u v" per edge; bag count; decomposition edge count; one line
/// per bag; one "a b" per decomposition edge.
ParseResult parse_instance(std::string_view text);

/// Inverse of parse_instance; always ends with a newline.
std::string serialize_instance(const Instance& inst);

ParseResult read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& inst);

/// Problem-specific input bounds (for "induced-c4-free": 4 <= n <= 94).
std::vector<std::string> constraint_warnings(const Instance& inst, std::string_view problem);

}  // namespace twdp
