#include "biclique/enumerate.hpp"

#include <algorithm>

namespace biclique {

namespace {

// Intersection of the neighbor lists of every vertex in `s` (nonempty).
VertexSet intersect_neighborhoods(const Graph& g, std::span<const VertexId> s) {
  VertexSet acc(g.neighbors(s.front()).begin(), g.neighbors(s.front()).end());
  VertexSet scratch;
  for (std::size_t k = 1; k < s.size() && !acc.empty(); ++k) {
    const auto nbrs = g.neighbors(s[k]);
    scratch.clear();
    std::set_intersection(acc.begin(), acc.end(), nbrs.begin(), nbrs.end(), std::back_inserter(scratch));
    acc.swap(scratch);
  }
  return acc;
}

VertexSet side_members(const BipartiteGraph& bg, std::uint8_t side) {
  VertexSet out;
  for (VertexId v = 0; v < bg.side.size(); ++v) {
    if (bg.side[v] == side) out.push_back(v);
  }
  return out;
}

class ClosureTraversal {
 public:
  ClosureTraversal(const BipartiteGraph& bg, std::uint8_t side, EnumerationSink& sink, EnumerationStats& stats)
      : bg_(bg), g_(bg.graph), side_(side), sink_(sink), stats_(stats) {}

  void run() {
    VertexSet opposite = side_members(bg_, static_cast<std::uint8_t>(1 - side_));
    if (opposite.empty()) return;  // closure of the empty set is the whole side with no partner
    VertexSet top = intersect_neighborhoods(g_, opposite);
    visit(std::move(top), std::move(opposite), kNoGenerator, 1);
  }

 private:
  static constexpr std::int64_t kNoGenerator = -1;

  // Invariant: intent == Gamma(extent) and extent == Gamma(intent), intent nonempty.
  void visit(VertexSet extent, VertexSet intent, std::int64_t generator, std::size_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    // Children only come from vertices adjacent to some intent member; any
    // other extension empties the intent.
    VertexSet candidates;
    for (VertexId b : intent) {
      for (VertexId u : g_.neighbors(b)) {
        if (static_cast<std::int64_t>(u) > generator) candidates.push_back(u);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::erase_if(candidates, [&](VertexId u) { return set_contains(extent, u); });

    const std::size_t bound = extent.size() + intent.size() + candidates.size();
    if (bound < sink_.min_size()) return;

    const std::size_t frame = extent.capacity() + intent.capacity() + candidates.capacity();
    live_ += frame;
    stats_.peak_frame_elements = std::max(stats_.peak_frame_elements, live_);

    if (!extent.empty()) {
      ++stats_.concepts;
      sink_.emit(Biclique::make(extent, intent));
    }

    for (VertexId j : candidates) {
      const auto nbrs = g_.neighbors(j);
      VertexSet child_intent;
      std::set_intersection(intent.begin(), intent.end(), nbrs.begin(), nbrs.end(), std::back_inserter(child_intent));
      VertexSet child_extent = intersect_neighborhoods(g_, child_intent);
      // Canonical iff the closure added nothing below j.
      const auto below_new = std::lower_bound(child_extent.begin(), child_extent.end(), j) - child_extent.begin();
      const auto below_old = std::lower_bound(extent.begin(), extent.end(), j) - extent.begin();
      if (below_new != below_old) continue;
      visit(std::move(child_extent), std::move(child_intent), j, depth + 1);
      if (sink_.min_size() > bound) break;
    }
    live_ -= frame;
  }

  const BipartiteGraph& bg_;
  const Graph& g_;
  std::uint8_t side_;
  EnumerationSink& sink_;
  EnumerationStats& stats_;
  std::size_t live_ = 0;
};

}  // namespace

VertexSet common_neighbors(const BipartiteGraph& bg, std::uint8_t side, std::span<const VertexId> s) {
  if (s.empty()) return side_members(bg, static_cast<std::uint8_t>(1 - side));
  return intersect_neighborhoods(bg.graph, s);
}

VertexSet closure(const BipartiteGraph& bg, std::uint8_t side, std::span<const VertexId> a) {
  const VertexSet gamma = common_neighbors(bg, side, a);
  return common_neighbors(bg, static_cast<std::uint8_t>(1 - side), gamma);
}

std::uint64_t enumerate_bipartite_maximal(const BipartiteGraph& bg, EnumerationSink& sink, EnumerationStats* stats) {
  EnumerationStats local;
  EnumerationStats& s = stats ? *stats : local;
  s.graph_elements = bg.graph.storage_elements() + bg.side.size();
  const std::uint8_t side = bg.side_size(1) < bg.side_size(0) ? 1 : 0;
  const std::uint64_t before = sink.count();
  ClosureTraversal(bg, side, sink, s).run();
  s.emitted = sink.count() - before;
  return s.emitted;
}

std::uint64_t enumerate_maximal_bicliques(const Graph& g, const Ordering& ord, EnumerationSink& sink,
                                          EnumerationStats* stats) {
  const DoubleCover dc = build_double_cover(g);
  const std::uint64_t before = sink.count();
  EnumerationSink cover_sink;
  cover_sink.set_min_size(sink.min_size());
  cover_sink.set_callback([&](const Biclique& k) {
    if (keep_copy(dc, ord, k)) {
      // Cover sides are homogeneous, so the sides project independently.
      sink.emit(Biclique::make(dc.project(k.x), dc.project(k.y)));
      cover_sink.set_min_size(sink.min_size());
    }
  });
  enumerate_bipartite_maximal(dc.bipartite(), cover_sink, stats);
  const std::uint64_t emitted = sink.count() - before;
  if (stats) stats->emitted = emitted;
  return emitted;
}

}  // namespace biclique
