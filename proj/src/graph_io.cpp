#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ising/error.hpp"
#include "ising/format.hpp"
#include "ising/graph.hpp"

namespace ising {

namespace {

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

double parse_real(const std::string& token, int line) {
  char* end = nullptr;
  const double x = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') {
    throw ParameterError("line " + std::to_string(line) + ": bad number '" + token + "'");
  }
  return x;
}

long parse_int(const std::string& token, int line) {
  long x = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParameterError("line " + std::to_string(line) + ": bad integer '" + token + "'");
  }
  return x;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParameterError("graph file is empty");
  auto header = split(lines[0].second);
  if (header.size() != 2) throw ParameterError("graph header must be 'n m'");
  const long n = parse_int(header[0], lines[0].first);
  const long m = parse_int(header[1], lines[0].first);
  if (n < 0 || m < 0) throw ParameterError("graph header counts must be nonnegative");
  if (static_cast<long>(lines.size()) != 1 + m + n) {
    throw ParameterError("graph file has " + std::to_string(lines.size() - 1) +
                         " data lines, expected m + n = " + std::to_string(m + n));
  }
  WeightedGraph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    const auto& [ln, text] = lines[1 + i];
    auto t = split(text);
    if (t.size() != 3) throw ParameterError("line " + std::to_string(ln) + ": expected 'u v beta'");
    g.add_edge(static_cast<Vertex>(parse_int(t[0], ln)), static_cast<Vertex>(parse_int(t[1], ln)),
               parse_real(t[2], ln));
  }
  std::vector<char> seen(n, 0);
  for (long i = 0; i < n; ++i) {
    const auto& [ln, text] = lines[1 + m + i];
    auto t = split(text);
    if (t.size() != 2) throw ParameterError("line " + std::to_string(ln) + ": expected 'v h'");
    const long v = parse_int(t[0], ln);
    if (v < 0 || v >= n || seen[v]) {
      throw ParameterError("line " + std::to_string(ln) + ": bad or repeated field vertex");
    }
    seen[v] = 1;
    const double h = parse_real(t[1], ln);
    if (std::isnan(h)) throw ParameterError("line " + std::to_string(ln) + ": NaN field");
    if (std::isinf(h)) {
      g.set_field(static_cast<Vertex>(v), VertexField::pinned_to(h > 0 ? 1 : -1));
    } else {
      g.set_h(static_cast<Vertex>(v), h);
    }
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_exact(e.beta) << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const VertexField& f = g.field(v);
    out << v << ' ';
    if (f.pinned()) {
      out << (f.pin == Pin::Plus ? "+inf" : "-inf");
    } else {
      out << format_exact(f.h);
    }
    out << '\n';
  }
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open graph file '" + path + "'");
  try {
    return read_graph(in);
  } catch (const ParameterError& e) {
    throw ParameterError(path + ": " + e.what());
  }
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write graph file '" + path + "'");
  write_graph(out, g);
  if (!out) throw ParameterError("error while writing '" + path + "'");
}

}  // namespace ising
