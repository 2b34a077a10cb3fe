#include "biclique/counting.hpp"

#include <algorithm>
#include <limits>

#include "biclique/error.hpp"
#include "biclique/max_biclique.hpp"
#include "parallel.hpp"

namespace biclique {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "biclique count exceeds 64 bits");
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t t = 1; t <= k; ++t) {
    acc = acc * (n - k + t) / t;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::kOverflow, "biclique count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

// Walks the subsets Y of the anchor's neighbors in ascending order, keeping
// common = Gamma(Y), and adds C(|common| - 1, size - |Y| - 1): the ways to
// complete X around the pinned anchor.
class AnchoredCounter {
 public:
  AnchoredCounter(const Graph& h, VertexId anchor, std::size_t size)
      : h_(h), size_(size), candidates_(h.neighbors(anchor).begin(), h.neighbors(anchor).end()) {}

  std::uint64_t run() {
    extend(0, 0, {});
    return total_;
  }

 private:
  void extend(std::size_t next, std::size_t y_size, const VertexSet& common) {
    for (std::size_t t = next; t < candidates_.size(); ++t) {
      const VertexId y = candidates_[t];
      const auto nbrs = h_.neighbors(y);
      VertexSet grown = y_size == 0 ? VertexSet(nbrs.begin(), nbrs.end()) : set_intersection(common, nbrs);
      const std::size_t grown_y = y_size + 1;
      if (grown_y >= size_) return;  // X needs the anchor at least
      total_ = checked_add(total_, binomial(grown.size() - 1, size_ - grown_y - 1));
      const std::size_t remaining = candidates_.size() - t - 1;
      if (remaining > 0 && grown_y + 1 < size_ && grown_y + remaining + grown.size() >= size_) {
        extend(t + 1, grown_y, grown);
      }
    }
  }

  const Graph& h_;
  std::size_t size_;
  VertexSet candidates_;
  std::uint64_t total_ = 0;
};

CountReport count_all_anchors(const Graph& g, const Ordering& ord, std::size_t size, CountMode mode,
                              unsigned threads) {
  CountReport report;
  report.mode = mode;
  report.size = size;
  report.per_anchor.assign(g.num_vertices(), 0);
  if (g.num_vertices() > 0) {
    detail::for_rank_blocks(g.num_vertices(), threads, [&](std::size_t, std::size_t first, std::size_t last) {
      for (std::size_t i = first; i <= last; ++i) report.per_anchor[i - 1] = count_anchored(g, ord, i, size);
    });
  }
  for (std::uint64_t c : report.per_anchor) report.count = checked_add(report.count, c);
  return report;
}

}  // namespace

std::uint64_t count_anchored(const Graph& g, const Ordering& ord, std::size_t rank, std::size_t size) {
  if (size < 2) throw Error(ErrorCode::kInvalidArgument, "biclique size must be at least 2");
  if (rank < 1 || rank > ord.size()) throw Error(ErrorCode::kInvalidArgument, "rank out of range");
  const VertexId v = ord.at(rank);
  const VertexSet first = neighbors_from(g, ord, v);
  if (first.empty()) return 0;
  const VertexSet second = second_neighbors_from(g, ord, v);
  if (1 + first.size() + second.size() < size) return 0;
  const LocalSubgraph h = build_local_graph(g, ord, rank);
  return AnchoredCounter(h.graph, h.to_local(v), size).run();
}

CountReport count_maximum_bicliques(const Graph& g, const Ordering& ord, unsigned threads) {
  const auto best = find_maximum_biclique(g, ord, threads);
  if (!best) throw Error(ErrorCode::kNoBiclique, "no biclique exists");
  return count_all_anchors(g, ord, best->size, CountMode::kMaximum, threads);
}

CountReport count_bicliques_of_size(const Graph& g, const Ordering& ord, std::size_t size, unsigned threads) {
  if (size < 2) throw Error(ErrorCode::kInvalidArgument, "biclique size must be at least 2");
  return count_all_anchors(g, ord, size, CountMode::kFixedSize, threads);
}

}  // namespace biclique
