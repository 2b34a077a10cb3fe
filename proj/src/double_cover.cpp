#include "biclique/double_cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "biclique/error.hpp"

namespace biclique {

BipartiteGraph BipartiteGraph::make(Graph graph, std::vector<std::uint8_t> side) {
  if (side.size() != graph.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "side tags do not match the vertex count");
  }
  for (const auto& [u, v] : graph.edges()) {
    if (side[u] == side[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the bipartition");
    }
  }
  return BipartiteGraph{std::move(graph), std::move(side)};
}

std::size_t BipartiteGraph::side_size(std::uint8_t s) const {
  return static_cast<std::size_t>(std::count(side.begin(), side.end(), s));
}

DoubleCover::DoubleCover(const Graph& base) : n_(base.num_vertices()) {
  std::vector<Edge> edges;
  edges.reserve(base.num_edges() * 2);
  for (const auto& [x, y] : base.edges()) {
    edges.emplace_back(x, copy_of(y));
    edges.emplace_back(copy_of(x), y);
  }
  std::vector<std::uint8_t> side(2 * n_, 0);
  std::fill(side.begin() + static_cast<std::ptrdiff_t>(n_), side.end(), std::uint8_t{1});
  cover_ = BipartiteGraph{Graph::from_edge_list(edges, 2 * n_), std::move(side)};
}

VertexSet DoubleCover::project(std::span<const VertexId> s) const {
  VertexSet out;
  out.reserve(s.size());
  for (VertexId u : s) out.push_back(project(u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DoubleCover build_double_cover(const Graph& g) { return DoubleCover(g); }

bool keep_copy(const DoubleCover& dc, const Ordering& ord, const Biclique& k) {
  VertexId best = 0;
  std::size_t best_rank = std::numeric_limits<std::size_t>::max();
  bool original_present = false;
  for (const VertexSet* side : {&k.x, &k.y}) {
    for (VertexId u : *side) {
      const VertexId x = dc.project(u);
      const std::size_t r = ord.rank(x);
      const bool is_original = dc.side(u) == CoverSide::kOriginal;
      if (r < best_rank) {
        best_rank = r;
        best = x;
        original_present = is_original;
      } else if (x == best && is_original) {
        original_present = true;
      }
    }
  }
  return best_rank != std::numeric_limits<std::size_t>::max() && original_present;
}

}  // namespace biclique
