#include "biclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "biclique/error.hpp"

namespace biclique::oracle {

namespace {

using Mask = std::uint32_t;

VertexSet members(Mask m) {
  VertexSet out;
  for (VertexId v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1U) out.push_back(v);
  }
  return out;
}

class Scan {
 public:
  explicit Scan(const Graph& g) : n_(g.num_vertices()), adj_(g.num_vertices(), 0) {
    if (n_ > kMaxVertices) {
      throw Error(ErrorCode::kOracleGuard, "oracle refuses graphs with more than " + std::to_string(kMaxVertices) +
                                               " vertices (got " + std::to_string(n_) + ")");
    }
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << u;
    }
  }

  // Calls visit(x, y, maximal) for every biclique with the lowest vertex in x.
  template <class Visit>
  void run(Visit&& visit) const {
    assign(0, 0, 0, visit);
  }

 private:
  template <class Visit>
  void assign(std::size_t v, Mask x, Mask y, Visit& visit) const {
    if (v == n_) {
      if (x == 0 || y == 0) return;
      if (std::countr_zero(x) > std::countr_zero(y)) return;  // count each unordered pair once
      if (!complete(x, y)) return;
      visit(x, y, maximal(x, y));
      return;
    }
    assign(v + 1, x, y, visit);
    assign(v + 1, x | (Mask{1} << v), y, visit);
    assign(v + 1, x, y | (Mask{1} << v), visit);
  }

  bool complete(Mask x, Mask y) const {
    for (std::size_t v = 0; v < n_; ++v) {
      if ((x >> v) & 1U) {
        if ((adj_[v] & y) != y) return false;
      }
    }
    return true;
  }

  bool maximal(Mask x, Mask y) const {
    for (std::size_t z = 0; z < n_; ++z) {
      if (((x | y) >> z) & 1U) continue;
      if ((adj_[z] & y) == y || (adj_[z] & x) == x) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
};

}  // namespace

std::vector<Biclique> brute_enumerate(const Graph& g) {
  std::vector<Biclique> out;
  Scan(g).run([&](Mask x, Mask y, bool maximal) {
    if (maximal) out.push_back(Biclique::make(members(x), members(y)));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<OracleMax> brute_max(const Graph& g) {
  std::optional<OracleMax> best;
  Scan(g).run([&](Mask x, Mask y, bool) {
    const auto size = static_cast<std::size_t>(std::popcount(x) + std::popcount(y));
    if (best && size < best->size) return;
    Biclique b = Biclique::make(members(x), members(y));
    if (!best || size > best->size || b < best->witness) best = OracleMax{size, std::move(b)};
  });
  return best;
}

std::uint64_t brute_count(const Graph& g, std::size_t size, bool maximal_only) {
  std::uint64_t count = 0;
  Scan(g).run([&](Mask x, Mask y, bool maximal) {
    if (maximal_only && !maximal) return;
    if (static_cast<std::size_t>(std::popcount(x) + std::popcount(y)) == size) ++count;
  });
  return count;
}

}  // namespace biclique::oracle
