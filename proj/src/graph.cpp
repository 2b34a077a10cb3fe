#include "biclique/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "biclique/error.hpp"

namespace biclique {

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [u, v] = edges[k];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge #" + std::to_string(k + 1) + " (" + std::to_string(u) +
                                                   "," + std::to_string(v) + "): endpoint out of range for n=" +
                                                   std::to_string(n));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge #" + std::to_string(k + 1) + " (" + std::to_string(u) + "," + std::to_string(v) + "): self-loop");
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : directed) ++g.offsets_[u + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.reserve(directed.size());
  for (const auto& [u, v] : directed) g.adjacency_.push_back(v);
  for (std::size_t v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return from_sequence(std::move(seq));
}

Ordering Ordering::degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  std::vector<VertexId> seq;
  seq.reserve(n);
  while (!queue.empty()) {
    const VertexId v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = true;
    seq.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  return from_sequence(std::move(seq));
}

Ordering Ordering::from_sequence(std::vector<VertexId> sequence) {
  Ordering ord;
  const std::size_t n = sequence.size();
  ord.rank_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const VertexId v = sequence[p];
    if (v >= n || ord.rank_[v] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "ordering is not a permutation of the vertex set");
    }
    ord.rank_[v] = p + 1;
  }
  ord.order_ = std::move(sequence);
  return ord;
}

VertexSet neighbors_from(const Graph& g, const Ordering& ord, VertexId v) {
  return neighbors_ranked_from(g, ord, v, ord.rank(v));
}

VertexSet neighbors_ranked_from(const Graph& g, const Ordering& ord, VertexId v, std::size_t r) {
  VertexSet out;
  for (VertexId u : g.neighbors(v)) {
    if (ord.rank(u) >= r) out.push_back(u);
  }
  return out;
}

VertexSet second_neighbors_from(const Graph& g, const Ordering& ord, VertexId v) {
  const std::size_t r = ord.rank(v);
  const auto first = g.neighbors(v);
  VertexSet out;
  for (VertexId u : first) {
    for (VertexId w : g.neighbors(u)) {
      if (w != v && ord.rank(w) >= r && !std::binary_search(first.begin(), first.end(), w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexId LocalSubgraph::to_local(VertexId global) const {
  const auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  return static_cast<VertexId>(it - to_global.begin());
}

bool LocalSubgraph::contains(VertexId global) const { return set_contains(to_global, global); }

VertexSet LocalSubgraph::lift(std::span<const VertexId> local) const {
  VertexSet out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(to_global[v]);
  return out;
}

LocalSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  LocalSubgraph h;
  h.to_global.assign(vertices.begin(), vertices.end());
  std::sort(h.to_global.begin(), h.to_global.end());
  h.to_global.erase(std::unique(h.to_global.begin(), h.to_global.end()), h.to_global.end());

  std::vector<Edge> edges;
  for (VertexId lu = 0; lu < h.to_global.size(); ++lu) {
    const auto nbrs = g.neighbors(h.to_global[lu]);
    // Merge walk: both lists are sorted by global id.
    auto it = h.to_global.begin();
    for (VertexId w : nbrs) {
      it = std::lower_bound(it, h.to_global.end(), w);
      if (it == h.to_global.end()) break;
      if (*it == w) {
        const auto lw = static_cast<VertexId>(it - h.to_global.begin());
        if (lu < lw) edges.emplace_back(lu, lw);
      }
    }
  }
  h.graph = Graph::from_edge_list(edges, h.to_global.size());
  return h;
}

Biclique Biclique::make(VertexSet a, VertexSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (!b.empty() && (a.empty() || b.front() < a.front())) std::swap(a, b);
  return Biclique{std::move(a), std::move(b)};
}

VertexSet Biclique::vertices() const { return set_union(x, y); }

bool is_biclique(const Graph& g, std::span<const VertexId> x, std::span<const VertexId> y) {
  if (x.empty() || y.empty()) return false;
  for (VertexId a : x) {
    if (a >= g.num_vertices()) return false;
    for (VertexId b : y) {
      if (b >= g.num_vertices() || a == b || !g.has_edge(a, b)) return false;
    }
  }
  return true;
}

VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const VertexId> s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace biclique
