#include "biclique/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "biclique/error.hpp"

namespace biclique {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value > std::numeric_limits<VertexId>::max() - 1) fail(line, "vertex id too large: " + std::string(token));
  return value;
}

struct ParsedEdge {
  VertexId u;
  VertexId v;
  std::size_t line;
};

Graph assemble(const std::vector<ParsedEdge>& parsed, std::optional<std::size_t> declared_n) {
  std::size_t n = declared_n.value_or(0);
  if (!declared_n) {
    for (const auto& e : parsed) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  }
  std::vector<Edge> edges;
  edges.reserve(parsed.size());
  for (const auto& e : parsed) {
    if (e.u == e.v) fail(e.line, "self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (e.u >= n || e.v >= n) {
      fail(e.line, "vertex id out of range for n=" + std::to_string(n));
    }
    edges.emplace_back(e.u, e.v);
  }
  return Graph::from_edge_list(edges, n);
}

Graph read_edge_list(std::istream& in) {
  std::vector<ParsedEdge> parsed;
  std::optional<std::size_t> declared_n;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto tokens = split(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "n") {
      if (tokens.size() != 2) fail(line, "header must be 'n <count>'");
      if (declared_n) fail(line, "duplicate 'n' header");
      declared_n = parse_number(tokens[1], line);
      continue;
    }
    if (tokens.size() != 2) fail(line, "expected 'u v'");
    parsed.push_back({static_cast<VertexId>(parse_number(tokens[0], line)),
                      static_cast<VertexId>(parse_number(tokens[1], line)), line});
  }
  return assemble(parsed, declared_n);
}

Graph read_dimacs(std::istream& in) {
  std::vector<ParsedEdge> parsed;
  std::optional<std::size_t> declared_n;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto tokens = split(raw);
    if (tokens.empty() || tokens.front() == "c") continue;
    if (tokens.front() == "p") {
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) fail(line, "expected 'p edge <n> <m>'");
      if (declared_n) fail(line, "duplicate problem line");
      declared_n = parse_number(tokens[2], line);
      continue;
    }
    if (tokens.front() == "e") {
      if (!declared_n) fail(line, "edge before the problem line");
      if (tokens.size() != 3) fail(line, "expected 'e <u> <v>'");
      const auto u = parse_number(tokens[1], line);
      const auto v = parse_number(tokens[2], line);
      if (u == 0 || v == 0) fail(line, "DIMACS vertex ids are 1-based");
      parsed.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), line});
      continue;
    }
    fail(line, "unrecognized line type '" + std::string(tokens.front()) + "'");
  }
  if (!declared_n) throw Error(ErrorCode::kParse, "missing 'p edge' problem line");
  return assemble(parsed, declared_n);
}

// Uniform in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

Graph generate_gnp(std::size_t n, std::size_t max_degree, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2 || max_degree == 0) return Graph::from_edge_list(edges, n);
  const double p = std::min(1.0, static_cast<double>(max_degree) / static_cast<double>(n - 1));
  std::vector<std::size_t> degree(n, 0);
  auto propose = [&](std::size_t u, std::size_t v) {
    if (degree[u] < max_degree && degree[v] < max_degree) {
      ++degree[u];
      ++degree[v];
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  };
  if (p >= 1.0) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t u = 0; u < v; ++u) propose(u, v);
    }
    return Graph::from_edge_list(edges, n);
  }
  // Geometric skipping over the pairs (w, v), w < v, in order of v then w.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto vertices = static_cast<std::int64_t>(n);
  while (v < vertices) {
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-unit(rng)) / log_q));
    while (w >= v && v < vertices) {
      w -= v;
      ++v;
    }
    if (v < vertices) propose(static_cast<std::size_t>(w), static_cast<std::size_t>(v));
  }
  return Graph::from_edge_list(edges, n);
}

Graph generate_regular(std::size_t n, std::size_t max_degree, std::mt19937_64& rng) {
  std::vector<VertexId> stubs;
  stubs.reserve(n * max_degree);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), max_degree, static_cast<VertexId>(v));
  for (std::size_t k = stubs.size(); k > 1; --k) std::swap(stubs[k - 1], stubs[below(rng, k)]);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
    if (stubs[k] != stubs[k + 1]) edges.emplace_back(stubs[k], stubs[k + 1]);
  }
  return Graph::from_edge_list(edges, n);
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kDimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return read_graph(in, format);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::ostringstream buffer;
  buffer << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) buffer << u << ' ' << v << '\n';
  out << buffer.str();
}

Graph generate_graph(GeneratorModel model, std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return model == GeneratorModel::kRegular ? generate_regular(n, max_degree, rng) : generate_gnp(n, max_degree, rng);
}

}  // namespace biclique
