#pragma once

#include <cstddef>
#include <optional>

#include "biclique/graph.hpp"

namespace biclique {

/// Identifies G_i (no neighbor) or G_{i,x}.
struct LocalFamilyIndex {
  std::size_t rank = 0;
  std::optional<VertexId> neighbor;

  friend bool operator==(const LocalFamilyIndex&, const LocalFamilyIndex&) = default;
};

struct MaxResult {
  Biclique best;
  std::size_t size = 0;
  LocalFamilyIndex anchor;
};

/// G_i: subgraph induced on {v_i} + N_i(v_i) + N^2_i(v_i).
LocalSubgraph build_local_graph(const Graph& g, const Ordering& ord, std::size_t rank);

/// G_{i,x}: subgraph induced on {v_i} + N_i(v_i) + (N_i(x) & N^2_i(v_i)).
/// Throws Error(kInvalidArgument) unless x is in N_i(v_i).
LocalSubgraph build_local_graph(const Graph& g, const Ordering& ord, std::size_t rank, VertexId x);

/// Maximum non-induced biclique of h.graph lifted to global ids, ties broken
/// by the smallest canonical form. Returns nullopt if h has no edges or if no
/// biclique reaches `at_least` vertices.
std::optional<Biclique> local_max_biclique(const LocalSubgraph& h, std::size_t at_least = 0);

/// Scans every G_{i,x} in (rank, x) order and keeps the first strictly largest
/// local maximum. `threads` > 1 splits the ranks into contiguous blocks; the
/// result does not depend on the thread count.
std::optional<MaxResult> find_maximum_biclique(const Graph& g, const Ordering& ord, unsigned threads = 0);

}  // namespace biclique
