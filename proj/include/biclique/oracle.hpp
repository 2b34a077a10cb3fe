#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "biclique/graph.hpp"

// Exhaustive reference implementations. Every vertex is assigned to X, Y or
// neither (3^n assignments), so these only run on tiny graphs and share no
// code with the enumeration and search modules.
namespace biclique::oracle {

inline constexpr std::size_t kMaxVertices = 15;

/// All maximal bicliques, canonical, sorted ascending.
std::vector<Biclique> brute_enumerate(const Graph& g);

struct OracleMax {
  std::size_t size = 0;
  Biclique witness;  // smallest canonical form among the maximum ones
};

std::optional<OracleMax> brute_max(const Graph& g);

/// Bicliques with exactly `size` vertices, optionally only the maximal ones.
std::uint64_t brute_count(const Graph& g, std::size_t size, bool maximal_only);

}  // namespace biclique::oracle
