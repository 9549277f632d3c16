#include "cutlab/edge_list.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cutlab/error.hpp"

namespace cutlab {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t lineno, const std::string& what) {
  fail(ErrorCode::kInvalidArgument, "edge list line " + std::to_string(lineno) + ": " + what);
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

AnyGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(ErrorCode::kInvalidArgument, "empty edge list");
  std::istringstream header(line);
  std::string tag, kind;
  long long n = -1;
  if (!(header >> tag >> n >> kind) || tag != "n" || n < 0)
    parse_error(lineno, "expected `n <count> directed|undirected`");
  if (kind != "directed" && kind != "undirected") parse_error(lineno, "unknown kind " + kind);

  if (kind == "directed") {
    DirectedWeightedGraph g(static_cast<std::size_t>(n));
    while (next_content_line(in, line, lineno)) {
      std::istringstream ls(line);
      long long u, v;
      double w;
      std::string extra;
      if (!(ls >> u >> v >> w) || (ls >> extra)) parse_error(lineno, "expected `u v w`");
      if (u < 0 || v < 0) parse_error(lineno, "negative vertex id");
      try {
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
      } catch (const Error& e) {
        parse_error(lineno, e.what());
      }
    }
    return g;
  }
  UndirectedGraph g(static_cast<std::size_t>(n));
  while (next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) parse_error(lineno, "expected `u v`");
    if (u < 0 || v < 0) parse_error(lineno, "negative vertex id");
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const Error& e) {
      parse_error(lineno, e.what());
    }
  }
  return g;
}

AnyGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

AnyGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedWeightedGraph& g) {
  out << "n " << g.vertex_count() << " directed\n";
  for (const auto& e : g.edges()) out << e.from << ' ' << e.to << ' ' << format_weight(e.weight) << '\n';
}

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  out << "n " << g.vertex_count() << " undirected\n";
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const AnyGraph& g) {
  std::ostringstream out;
  std::visit([&](const auto& x) { write_edge_list(out, x); }, g);
  return out.str();
}

void save_edge_list(const std::string& path, const AnyGraph& g) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::kIo, "cannot write " + path);
  out << to_edge_list(g);
  require(static_cast<bool>(out), ErrorCode::kIo, "write failed for " + path);
}

}  // namespace cutlab
