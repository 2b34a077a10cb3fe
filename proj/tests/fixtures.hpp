#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph::from_edge_list(edges, n); }

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return make_graph(n, edges);
}

// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return make_graph(leaves + 1, edges);
}

// Edges (2t, 2t+1).
inline Graph matching(std::size_t k) {
  std::vector<Edge> edges;
  for (VertexId t = 0; t < k; ++t) edges.emplace_back(2 * t, 2 * t + 1);
  return make_graph(2 * k, edges);
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, static_cast<VertexId>(a + v));
  }
  return make_graph(a + b, edges);
}

// Complete graph on 2t vertices minus the perfect matching (2s, 2s+1).
// Its maximal bicliques are exactly the 2^(t-1) - 1 splits of the pairs.
inline Graph cocktail_party(std::size_t t, VertexId offset = 0, std::vector<Edge>* into = nullptr) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 2 * t; ++u) {
    for (VertexId v = u + 1; v < 2 * t; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  if (into != nullptr) {
    for (const auto& [u, v] : edges) into->emplace_back(offset + u, offset + v);
  }
  return make_graph(2 * t, edges);
}

// Test-only G(n, p); independent of the library's generator.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return make_graph(n, edges);
}

inline Ordering random_ordering(std::size_t n, std::uint64_t seed) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return Ordering::from_sequence(std::move(seq));
}

struct CorpusEntry {
  std::uint64_t seed;
  std::size_t n;
  double p;
  Graph graph;
};

// The shared seeded corpus: n in 4..12, p in {0.2, 0.4, 0.6}.
inline std::vector<CorpusEntry> corpus(std::size_t count = 200) {
  constexpr std::array<double, 3> kProbabilities{0.2, 0.4, 0.6};
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    const std::size_t n = 4 + s % 9;
    const double p = kProbabilities[(s / 9) % 3];
    out.push_back({s, n, p, random_gnp(n, p, 1000 + s)});
  }
  return out;
}

// Smallest-rank vertex of a biclique.
inline VertexId min_rank_vertex(const Biclique& b, const Ordering& ord) {
  const VertexSet all = b.vertices();
  return *std::min_element(all.begin(), all.end(),
                           [&](VertexId a, VertexId c) { return ord.rank(a) < ord.rank(c); });
}

}  // namespace biclique::testing
