#include "oegraph/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "oegraph/errors.hpp"

namespace oegraph {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!std::isalnum(c) && c != '_' && c != '-' && c != '.') return false;
  return true;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
  std::ostringstream out;
  out << origin << ":" << line << ": " << what;
  throw IoError(out.str());
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& origin) {
  GraphParts parts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      fail(origin, lineno, "carriage return found; use LF line endings");
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    auto fields = split_fields(line);
    for (const auto& f : fields)
      if (f.empty()) fail(origin, lineno, "fields must be separated by single spaces");
    if (fields[0] == "v") {
      if (fields.size() != 2) fail(origin, lineno, "vertex line needs exactly one name");
      if (!valid_identifier(fields[1]))
        fail(origin, lineno, "bad vertex name '" + fields[1] + "'");
      parts.vertices.push_back(fields[1]);
    } else if (fields[0] == "e") {
      if (fields.size() != 4) fail(origin, lineno, "edge line needs name, source and target");
      for (std::size_t i = 1; i < 4; ++i)
        if (!valid_identifier(fields[i]))
          fail(origin, lineno, "bad identifier '" + fields[i] + "'");
      parts.edges.push_back(Edge{fields[1], fields[2], fields[3]});
    } else {
      fail(origin, lineno, "unknown record '" + fields[0] + "' (expected v, e or #)");
    }
  }
  try {
    return Graph::from_parts(std::move(parts));
  } catch (const GraphError& e) {
    throw IoError(origin + ": " + e.what());
  }
}

Graph parse_graph_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  return parse_graph(in, origin);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_graph(in, path);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "v " << v << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.name << " " << e.src << " " << e.dst << "\n";
  return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << serialize_graph(g);
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n";
  for (const auto& v : g.vertices()) {
    out << "  \"" << v << "\"";
    if (g.is_sink(v)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges())
    out << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.name << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace oegraph
