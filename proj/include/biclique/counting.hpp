#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

enum class CountMode { kMaximum, kFixedSize };

struct CountReport {
  CountMode mode = CountMode::kMaximum;
  std::size_t size = 0;
  std::uint64_t count = 0;
  // per_anchor[i - 1] is the contribution of G_i; sums to `count`.
  std::vector<std::uint64_t> per_anchor;
};

/// Bicliques of G_i with exactly `size` vertices that contain v_i. Every
/// vertex of G_i has rank >= i, so v_i is their minimum-rank vertex and each
/// biclique of the whole graph is counted at exactly one anchor. Pairs (X, Y)
/// are unordered; non-maximal bicliques are included.
std::uint64_t count_anchored(const Graph& g, const Ordering& ord, std::size_t rank, std::size_t size);

/// Size of a maximum biclique and the exact number of bicliques of that size.
/// Throws Error(kNoBiclique) on an edgeless graph.
CountReport count_maximum_bicliques(const Graph& g, const Ordering& ord, unsigned threads = 0);

/// Exact number of bicliques (maximal or not) with `size` vertices. size >= 2.
CountReport count_bicliques_of_size(const Graph& g, const Ordering& ord, std::size_t size, unsigned threads = 0);

}  // namespace biclique
