#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "biclique/double_cover.hpp"
#include "biclique/graph.hpp"

namespace biclique {

/// Receives each emitted biclique exactly once and counts emissions. The
/// callback may raise `min_size` while the enumeration runs; branches that
/// cannot reach a biclique of at least that many vertices are then skipped.
class EnumerationSink {
 public:
  using Callback = std::function<void(const Biclique&)>;

  EnumerationSink() = default;
  explicit EnumerationSink(Callback callback) : callback_(std::move(callback)) {}

  void set_callback(Callback callback) { callback_ = std::move(callback); }

  void emit(const Biclique& b) {
    ++count_;
    if (callback_) callback_(b);
  }

  std::uint64_t count() const noexcept { return count_; }

  std::size_t min_size() const noexcept { return min_size_; }
  void set_min_size(std::size_t size) noexcept { min_size_ = size; }

 private:
  Callback callback_;
  std::uint64_t count_ = 0;
  std::size_t min_size_ = 0;
};

/// Instrumentation for the closure traversal. Element counts are in units of
/// one stored vertex id.
struct EnumerationStats {
  std::uint64_t nodes = 0;         // closed sets visited
  std::uint64_t concepts = 0;      // bipartite maximal bicliques reached
  std::uint64_t emitted = 0;       // bicliques handed to the caller's sink
  std::size_t max_depth = 0;
  std::size_t peak_frame_elements = 0;  // live traversal buffers at the high-water mark
  std::size_t graph_elements = 0;       // storage of the traversed bipartite graph

  std::size_t peak_working_elements() const noexcept { return peak_frame_elements + graph_elements; }
};

/// Gamma(s): common neighbors of `s` (a subset of side `side`) on the opposite
/// side. Gamma of the empty set is the whole opposite side.
VertexSet common_neighbors(const BipartiteGraph& bg, std::uint8_t side, std::span<const VertexId> s);

/// h(a) = Gamma(Gamma(a)) for a subset `a` of side `side`.
VertexSet closure(const BipartiteGraph& bg, std::uint8_t side, std::span<const VertexId> a);

/// Emits every maximal biclique of `bg` (both sides nonempty) exactly once.
/// Close-by-one traversal over the smaller side (side 0 on ties): children are
/// generated in ascending vertex order and a child is kept only if its closure
/// adds no vertex below the generating one, so no emitted solution is stored.
std::uint64_t enumerate_bipartite_maximal(const BipartiteGraph& bg, EnumerationSink& sink,
                                          EnumerationStats* stats = nullptr);

/// Every maximal non-induced biclique of `g`, once each, in canonical form.
/// Runs the bipartite enumerator on the double cover and forwards the
/// projection of each cover biclique accepted by `keep_copy`.
std::uint64_t enumerate_maximal_bicliques(const Graph& g, const Ordering& ord, EnumerationSink& sink,
                                          EnumerationStats* stats = nullptr);

}  // namespace biclique
