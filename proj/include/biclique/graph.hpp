#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace biclique {

using VertexId = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph stored as sorted adjacency arrays (CSR).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
  /// collapse; a self-loop or an endpoint >= n throws Error(kInvalidArgument)
  /// naming the offending edge by its 1-based position in `edges`.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  /// Total count of stored vertex ids (offsets plus both adjacency directions).
  std::size_t storage_elements() const noexcept { return offsets_.size() + adjacency_.size(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::size_t max_degree_ = 0;
};

/// A vertex ordering sigma. Ranks are 1-based positions, matching the usual
/// v_1, ..., v_n notation.
class Ordering {
 public:
  Ordering() = default;

  /// Ascending vertex id.
  static Ordering identity(std::size_t n);

  /// Repeatedly removes a minimum-degree vertex (smallest id on ties).
  static Ordering degeneracy(const Graph& g);

  /// `sequence[p]` is the vertex at rank p + 1. Must be a permutation of [0, n).
  static Ordering from_sequence(std::vector<VertexId> sequence);

  std::size_t size() const noexcept { return order_.size(); }

  std::size_t rank(VertexId v) const { return rank_[v]; }
  VertexId at(std::size_t rank) const { return order_[rank - 1]; }

  std::span<const VertexId> sequence() const noexcept { return order_; }

 private:
  std::vector<VertexId> order_;
  std::vector<std::size_t> rank_;
};

/// N_i(v) for i = rank(v): neighbors of v whose rank is at least rank(v).
VertexSet neighbors_from(const Graph& g, const Ordering& ord, VertexId v);

/// V_rank & N(v): neighbors of v whose rank is at least `rank`.
VertexSet neighbors_ranked_from(const Graph& g, const Ordering& ord, VertexId v, std::size_t rank);

/// N^2_i(v) for i = rank(v): vertices at distance exactly two from v in the
/// full graph whose rank is at least rank(v).
VertexSet second_neighbors_from(const Graph& g, const Ordering& ord, VertexId v);

/// Induced subgraph with local ids 0..k-1 assigned in ascending global order,
/// so the local-to-global map is monotone.
struct LocalSubgraph {
  Graph graph;
  VertexSet to_global;

  /// Local id of a global vertex; the vertex must be present.
  VertexId to_local(VertexId global) const;
  bool contains(VertexId global) const;
  VertexSet lift(std::span<const VertexId> local) const;
};

LocalSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Unordered pair of disjoint nonempty vertex sets, complete between sides.
/// Canonical form: the side holding the smallest vertex id is `x`; both sides
/// sorted ascending.
struct Biclique {
  VertexSet x;
  VertexSet y;

  static Biclique make(VertexSet a, VertexSet b);

  std::size_t size() const noexcept { return x.size() + y.size(); }
  VertexSet vertices() const;

  friend auto operator<=>(const Biclique&, const Biclique&) = default;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

/// Non-induced semantics: edges inside a side are allowed.
bool is_biclique(const Graph& g, std::span<const VertexId> x, std::span<const VertexId> y);

// Sorted-set helpers shared by the enumeration and search modules.
VertexSet set_intersection(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
bool set_contains(std::span<const VertexId> s, VertexId v);

}  // namespace biclique
