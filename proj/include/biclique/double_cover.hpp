#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

/// A graph whose vertices carry a side tag (0 or 1) with every edge crossing
/// sides.
struct BipartiteGraph {
  Graph graph;
  std::vector<std::uint8_t> side;

  /// Throws Error(kInvalidArgument) if an edge joins two vertices of one side.
  static BipartiteGraph make(Graph graph, std::vector<std::uint8_t> side);

  std::size_t side_size(std::uint8_t s) const;
};

enum class CoverSide : std::uint8_t { kOriginal = 0, kCopy = 1 };

/// Bipartite double cover on V and a copy V'. Vertex x keeps id x, its copy x'
/// gets id x + n, so the projection back to the base graph is `u mod n`.
class DoubleCover {
 public:
  explicit DoubleCover(const Graph& base);

  const BipartiteGraph& bipartite() const noexcept { return cover_; }
  const Graph& graph() const noexcept { return cover_.graph; }
  std::size_t base_size() const noexcept { return n_; }

  CoverSide side(VertexId u) const noexcept { return u < n_ ? CoverSide::kOriginal : CoverSide::kCopy; }
  VertexId project(VertexId u) const noexcept { return u < n_ ? u : static_cast<VertexId>(u - n_); }
  VertexId copy_of(VertexId x) const noexcept { return static_cast<VertexId>(x + n_); }

  /// { f(u) : u in s }, sorted.
  VertexSet project(std::span<const VertexId> s) const;

 private:
  std::size_t n_ = 0;
  BipartiteGraph cover_;
};

DoubleCover build_double_cover(const Graph& g);

/// Duplicate filter. Projects V(k) onto the base graph, takes the vertex x of
/// smallest rank, and accepts iff the original vertex x (not its copy) is a
/// member of V(k). If both x and x' were present, the original wins.
bool keep_copy(const DoubleCover& dc, const Ordering& ord, const Biclique& k);

}  // namespace biclique
