#include "biclique/max_biclique.hpp"

#include <algorithm>
#include <string>

#include "biclique/enumerate.hpp"
#include "biclique/error.hpp"
#include "parallel.hpp"

namespace biclique {

namespace {

VertexSet anchored_vertices(VertexId anchor, std::span<const VertexId> first, std::span<const VertexId> second) {
  VertexSet vertices = set_union(first, second);
  vertices.insert(std::lower_bound(vertices.begin(), vertices.end(), anchor), anchor);
  return vertices;
}

struct BlockBest {
  std::optional<MaxResult> result;
};

}  // namespace

LocalSubgraph build_local_graph(const Graph& g, const Ordering& ord, std::size_t rank) {
  if (rank < 1 || rank > ord.size()) throw Error(ErrorCode::kInvalidArgument, "rank out of range");
  const VertexId v = ord.at(rank);
  return induced_subgraph(g, anchored_vertices(v, neighbors_from(g, ord, v), second_neighbors_from(g, ord, v)));
}

LocalSubgraph build_local_graph(const Graph& g, const Ordering& ord, std::size_t rank, VertexId x) {
  if (rank < 1 || rank > ord.size()) throw Error(ErrorCode::kInvalidArgument, "rank out of range");
  const VertexId v = ord.at(rank);
  const VertexSet first = neighbors_from(g, ord, v);
  if (!set_contains(first, x)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(x) + " is not a later neighbor of the anchor at rank " + std::to_string(rank));
  }
  const VertexSet reach = set_intersection(neighbors_ranked_from(g, ord, x, rank), second_neighbors_from(g, ord, v));
  return induced_subgraph(g, anchored_vertices(v, first, reach));
}

std::optional<Biclique> local_max_biclique(const LocalSubgraph& h, std::size_t at_least) {
  std::optional<Biclique> best;
  EnumerationSink sink;
  sink.set_min_size(at_least);
  sink.set_callback([&](const Biclique& b) {
    if (b.size() < at_least) return;
    if (!best || b.size() > best->size() || (b.size() == best->size() && b < *best)) {
      best = b;
      sink.set_min_size(b.size());
    }
  });
  enumerate_maximal_bicliques(h.graph, Ordering::identity(h.graph.num_vertices()), sink);
  if (!best) return std::nullopt;
  return Biclique{h.lift(best->x), h.lift(best->y)};
}

std::optional<MaxResult> find_maximum_biclique(const Graph& g, const Ordering& ord, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n == 0 || g.num_edges() == 0) return std::nullopt;

  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<BlockBest> per_block(blocks);

  detail::for_rank_blocks(n, threads, [&](std::size_t block, std::size_t first_rank, std::size_t last_rank) {
    std::optional<MaxResult>& best = per_block[block].result;
    for (std::size_t i = first_rank; i <= last_rank; ++i) {
      const VertexId v = ord.at(i);
      const VertexSet first = neighbors_from(g, ord, v);
      if (first.empty()) continue;
      const VertexSet second = second_neighbors_from(g, ord, v);
      for (VertexId x : first) {
        const VertexSet reach = set_intersection(neighbors_ranked_from(g, ord, x, i), second);
        const std::size_t incumbent = best ? best->size : 0;
        // G_{i,x} cannot hold a biclique larger than its vertex count.
        if (1 + first.size() + reach.size() <= incumbent) continue;
        const LocalSubgraph h = induced_subgraph(g, anchored_vertices(v, first, reach));
        auto local = local_max_biclique(h, incumbent + 1);
        if (!local) continue;
        const std::size_t size = local->size();
        best = MaxResult{std::move(*local), size, LocalFamilyIndex{i, x}};
      }
    }
  });

  std::optional<MaxResult> best;
  for (auto& b : per_block) {
    if (b.result && (!best || b.result->size > best->size)) best = std::move(b.result);
  }
  return best;
}

}  // namespace biclique
