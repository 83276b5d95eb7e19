#include "twdp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace twdp {

ParseError::ParseError(int line, const std::string& message)
    : MalformedInput("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      start = end + 1;
    }
  }

  int line_no() const { return static_cast<int>(next_) + 1; }

  std::string_view next(const char* what) {
    if (next_ >= lines_.size()) {
      throw ParseError(line_no(), std::string("unexpected end of input, expected ") + what);
    }
    return lines_[next_++];
  }

  std::vector<std::int64_t> integers(const char* what) {
    const int at = line_no();
    std::string_view line = next(what);
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ParseError(at, std::string("expected integers for ") + what + ", got '" +
                                 std::string(line) + "'");
      }
      out.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
  }

  std::int64_t single(const char* what) {
    const int at = line_no();
    auto v = integers(what);
    if (v.size() != 1) throw ParseError(at, std::string("expected a single integer for ") + what);
    return v[0];
  }

  std::int64_t count(const char* what) {
    const int at = line_no();
    std::int64_t v = single(what);
    if (v < 0) throw ParseError(at, std::string("negative ") + what);
    return v;
  }

  std::pair<std::int64_t, std::int64_t> pair(const char* what) {
    const int at = line_no();
    auto v = integers(what);
    if (v.size() != 2) throw ParseError(at, std::string("expected two integers for ") + what);
    return {v[0], v[1]};
  }

  bool exhausted() const { return next_ >= lines_.size(); }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

void append_line(std::string& out, const std::vector<std::int64_t>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  out += '\n';
}

}  // namespace

ParseResult parse_instance(std::string_view text) {
  LineReader in(text);
  ParseResult result;
  Instance& inst = result.instance;

  const std::int64_t n = in.count("n");
  int at = in.line_no();
  const std::int64_t len = in.count("weight count");
  if (len != n) throw ParseError(at, "weight count " + std::to_string(len) + " differs from n");
  at = in.line_no();
  auto weights = in.integers("weights");
  if (static_cast<std::int64_t>(weights.size()) != len) {
    throw ParseError(at, "declared " + std::to_string(len) + " weights, found " +
                             std::to_string(weights.size()));
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] < kMinWeight || weights[v] > kMaxWeight) {
      result.warnings.push_back("weight of vertex " + std::to_string(v) + " is " +
                                std::to_string(weights[v]) + ", outside [1, 100000]");
    }
  }
  inst.weights = std::move(weights);

  at = in.line_no();
  const std::int64_t vertices = in.count("vertex count");
  if (vertices != n) throw ParseError(at, "graph has " + std::to_string(vertices) + " vertices, n is " + std::to_string(n));
  const std::int64_t m = in.count("edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    at = in.line_no();
    auto [u, v] = in.pair("graph edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(at, "edge endpoint out of range");
    if (u == v) throw ParseError(at, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  inst.graph = build_graph(static_cast<int>(n), edges);
  if (inst.graph.edge_count() != edges.size()) result.warnings.push_back("duplicate graph edges dropped");

  const std::int64_t bag_count = in.count("bag count");
  const std::int64_t td_edges = in.count("decomposition edge count");
  inst.td.bags.reserve(static_cast<std::size_t>(bag_count));
  for (std::int64_t i = 0; i < bag_count; ++i) {
    at = in.line_no();
    auto vs = in.integers("bag");
    Bag bag;
    for (auto v : vs) {
      if (v < 0 || v >= n) throw ParseError(at, "bag vertex " + std::to_string(v) + " out of range");
      bag.push_back(static_cast<Vertex>(v));
    }
    inst.td.bags.push_back(std::move(bag));
  }
  for (std::int64_t i = 0; i < td_edges; ++i) {
    at = in.line_no();
    auto [a, b] = in.pair("decomposition edge");
    if (a < 0 || b < 0 || a >= bag_count || b >= bag_count) {
      throw ParseError(at, "bag index out of range");
    }
    inst.td.tree_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!in.exhausted()) throw ParseError(in.line_no(), "trailing content after the decomposition");
  return result;
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  const auto n = static_cast<std::int64_t>(inst.graph.vertex_count());
  append_line(out, {n});
  append_line(out, {static_cast<std::int64_t>(inst.weights.size())});
  append_line(out, inst.weights);
  append_line(out, {n});
  append_line(out, {static_cast<std::int64_t>(inst.graph.edge_count())});
  for (const auto& [u, v] : inst.graph.edges()) append_line(out, {u, v});
  append_line(out, {static_cast<std::int64_t>(inst.td.bags.size())});
  append_line(out, {static_cast<std::int64_t>(inst.td.tree_edges.size())});
  for (const auto& bag : inst.td.bags) append_line(out, std::vector<std::int64_t>(bag.begin(), bag.end()));
  for (const auto& [a, b] : inst.td.tree_edges) append_line(out, {a, b});
  return out;
}

ParseResult read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_instance(inst);
}

std::vector<std::string> constraint_warnings(const Instance& inst, std::string_view problem) {
  std::vector<std::string> out;
  if (problem == "induced-c4-free") {
    const int n = inst.graph.vertex_count();
    if (n < 4 || n > 94) {
      out.push_back("n = " + std::to_string(n) + " violates the problem bounds 4 <= n <= 94");
    }
  }
  return out;
}

}  // namespace twdp
