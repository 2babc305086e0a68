#include "plethys/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace plethys::graphs {

FormatError::FormatError(const std::string& message, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Row {
  int line;
  std::vector<int> values;
};

// Non-empty lines with comments stripped, parsed as nonnegative integers.
std::vector<Row> integer_rows(std::string_view text) {
  std::vector<Row> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Row row{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || value < 0) throw FormatError("expected a nonnegative integer", line_no);
      const std::size_t next = static_cast<std::size_t>(ptr - line.data());
      if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r') {
        throw FormatError("expected a nonnegative integer", line_no);
      }
      row.values.push_back(value);
      i = next;
    }
    if (!row.values.empty()) rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  return rows;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Row> rows = integer_rows(text);
  if (rows.empty()) throw FormatError("missing vertex count", 1);
  if (rows[0].values.size() != 1) throw FormatError("first line must hold the vertex count", rows[0].line);
  const int n = rows[0].values[0];
  if (n > max_vertices) throw FormatError("at most 32 vertices are supported", rows[0].line);
  Graph g(n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (r.values.size() != 2) throw FormatError("an edge line holds two vertices", r.line);
    if (r.values[0] >= n || r.values[1] >= n) throw FormatError("vertex out of range", r.line);
    if (r.values[0] == r.values[1]) throw FormatError("loops are not allowed", r.line);
    g.add_edge(r.values[0], r.values[1]);
  }
  return g;
}

BicoloredGraph parse_bicolored(std::string_view text) {
  std::vector<Row> rows = integer_rows(text);
  if (rows.empty()) throw FormatError("missing colour class sizes", 1);
  if (rows[0].values.size() != 2) throw FormatError("first line must hold m and n", rows[0].line);
  const int m = rows[0].values[0];
  const int n = rows[0].values[1];
  if (m + n > max_vertices) throw FormatError("at most 32 vertices are supported", rows[0].line);
  BicoloredGraph g(m, n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Row& r = rows[i];
    if (r.values.size() != 2) throw FormatError("an edge line holds a white and a black vertex", r.line);
    if (r.values[0] >= m || r.values[1] >= n) throw FormatError("vertex out of range", r.line);
    g.add_edge(r.values[0], r.values[1]);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

std::string kernel_to_json(const KernelResult& r) {
  nlohmann::json j = {{"kernel", graph_json(r.kernel)}, {"fibers", r.fibers}};
  return j.dump();
}

std::string kernel_to_text(const KernelResult& r) {
  std::ostringstream out;
  out << "kernel: " << r.kernel.size() << " vertices, edges:";
  for (auto [u, v] : r.kernel.edges()) out << ' ' << u << '-' << v;
  out << '\n';
  for (std::size_t i = 0; i < r.fibers.size(); ++i) {
    out << "fiber " << i << ":";
    for (int v : r.fibers[i]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace plethys::graphs
