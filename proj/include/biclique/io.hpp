#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "biclique/graph.hpp"

namespace biclique {

enum class GraphFormat { kEdgeList, kDimacs };

/// Edge list: one "u v" pair per line, '#' starts a comment line, and an
/// optional "n <count>" header fixes the vertex count (otherwise max id + 1).
/// DIMACS: "c" comments, one "p edge <n> <m>" line, "e <u> <v>" with 1-based
/// ids. Errors throw Error(kParse) with the 1-based line number.
Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);

/// Writes "n <count>" followed by one "u v" line per edge (u < v, ascending).
void write_edge_list(std::ostream& out, const Graph& g);

enum class GeneratorModel { kGnp, kRegular };

/// Seeded random graph with every degree at most `max_degree`.
///  - kGnp: each pair is proposed with probability max_degree / (n - 1) in
///    ascending pair order; a proposal is dropped if either endpoint is full.
///  - kRegular: configuration model on max_degree stubs per vertex; loops and
///    repeated pairs are dropped, so degrees stay at or below max_degree.
/// Output depends only on (model, n, max_degree, seed).
Graph generate_graph(GeneratorModel model, std::size_t n, std::size_t max_degree, std::uint64_t seed);

}  // namespace biclique
