// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biclique/counting.hpp"
#include "biclique/double_cover.hpp"
#include "biclique/enumerate.hpp"
#include "biclique/error.hpp"
#include "biclique/io.hpp"
#include "biclique/max_biclique.hpp"
#include "biclique/oracle.hpp"
#include "fixtures.hpp"

using namespace biclique;
using namespace biclique::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << " " << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void note(const std::string& text) { std::cout << "       " << text << std::endl; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Biclique> run_enumeration(const Graph& g, const Ordering& ord) {
  std::vector<Biclique> out;
  EnumerationSink sink([&](const Biclique& b) { out.push_back(b); });
  enumerate_maximal_bicliques(g, ord, sink);
  return out;
}

bool covers(const LocalSubgraph& h, const VertexSet& vertices) {
  return std::all_of(vertices.begin(), vertices.end(), [&](VertexId v) { return h.contains(v); });
}

template <typename F>
double best_of(int runs, F&& body) {
  double best = 1e300;
  for (int r = 0; r < runs; ++r) {
    const auto start = Clock::now();
    body();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BICLIQUE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion1(const std::vector<CorpusEntry>& graphs) {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  std::size_t total = 0;
  for (const auto& e : graphs) {
    auto found = run_enumeration(e.graph, Ordering::identity(e.n));
    std::sort(found.begin(), found.end());
    const auto expected = oracle::brute_enumerate(e.graph);
    total += expected.size();
    if (found != expected) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << graphs.size() << " graphs, " << total << " maximal bicliques, " << mismatches << " mismatching graphs, "
    << elapsed << " s (limit 60 s)";
  report(1, mismatches == 0 && elapsed < 60.0, "enumeration equals oracle", d.str());
}

void criterion2(const std::vector<CorpusEntry>& graphs) {
  std::size_t bad_ratio = 0;
  std::size_t bad_half = 0;
  for (const auto& e : graphs) {
    const Ordering ord = Ordering::identity(e.n);
    const DoubleCover dc = build_double_cover(e.graph);
    std::uint64_t cover_count = 0;
    std::uint64_t accepted = 0;
    EnumerationSink sink([&](const Biclique& k) {
      ++cover_count;
      if (keep_copy(dc, ord, k)) ++accepted;
    });
    enumerate_bipartite_maximal(dc.bipartite(), sink);
    const std::uint64_t base = oracle::brute_enumerate(e.graph).size();
    if (cover_count != 2 * base) ++bad_ratio;
    if (2 * accepted != cover_count) ++bad_half;
  }
  std::ostringstream d;
  d << graphs.size() << " graphs; count != 2x base on " << bad_ratio << ", keep_copy not exactly half on " << bad_half;
  report(2, bad_ratio == 0 && bad_half == 0, "two-to-one correspondence", d.str());
}

void criterion3(const std::vector<CorpusEntry>& graphs) {
  std::size_t duplicates = 0;
  std::uint64_t emitted = 0;
  auto check = [&](const Graph& g, const Ordering& ord) {
    std::set<Biclique> collector;
    EnumerationSink sink([&](const Biclique& b) {
      ++emitted;
      if (!collector.insert(b).second) ++duplicates;
    });
    enumerate_maximal_bicliques(g, ord, sink);
  };
  for (const auto& e : graphs) {
    check(e.graph, Ordering::identity(e.n));
    check(e.graph, Ordering::degeneracy(e.graph));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_graph(GeneratorModel::kRegular, 2000, 6, seed);
    check(g, Ordering::degeneracy(g));
  }
  std::ostringstream d;
  d << emitted << " emissions across " << 2 * graphs.size() + 5 << " runs, " << duplicates
    << " duplicates seen by the harness collector";
  report(3, duplicates == 0, "no duplicates", d.str());
}

void criterion4(const std::vector<CorpusEntry>& graphs) {
  std::size_t mismatches = 0;
  for (const auto& e : graphs) {
    const auto expected = oracle::brute_max(e.graph);
    for (const Ordering& ord : {Ordering::identity(e.n), Ordering::degeneracy(e.graph)}) {
      const auto r = find_maximum_biclique(e.graph, ord);
      const std::size_t got = r ? r->size : 0;
      const std::size_t want = expected ? expected->size : 0;
      if (got != want || (r && !is_biclique(e.graph, r->best.x, r->best.y))) ++mismatches;
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs x 2 orderings, " << mismatches << " mismatches";
  report(4, mismatches == 0, "maximum equals oracle", d.str());
}

void criterion5(const std::vector<CorpusEntry>& graphs) {
  std::size_t checked = 0;
  std::size_t gi_misses = 0;
  std::size_t pairs = 0;
  std::size_t literal_misses = 0;
  std::size_t opposite_pairs = 0;
  std::size_t opposite_misses = 0;
  std::string example;
  for (const auto& e : graphs) {
    const Ordering ord = Ordering::identity(e.n);
    for (const Biclique& b : oracle::brute_enumerate(e.graph)) {
      ++checked;
      const VertexId v = min_rank_vertex(b, ord);
      const std::size_t i = ord.rank(v);
      const VertexSet vertices = b.vertices();
      if (!covers(build_local_graph(e.graph, ord, i), vertices)) ++gi_misses;
      const VertexSet& opposite = set_contains(b.x, v) ? b.y : b.x;
      for (VertexId x : set_intersection(vertices, neighbors_from(e.graph, ord, v))) {
        ++pairs;
        const bool ok = covers(build_local_graph(e.graph, ord, i, x), vertices);
        if (!ok) {
          ++literal_misses;
          if (example.empty()) {
            std::ostringstream s;
            s << "seed " << e.seed << ", B=({";
            for (VertexId u : b.x) s << ' ' << u;
            s << " },{";
            for (VertexId u : b.y) s << ' ' << u;
            s << " }), anchor " << v << ", x=" << x;
            example = s.str();
          }
        }
        if (set_contains(opposite, x)) {
          ++opposite_pairs;
          if (!ok) ++opposite_misses;
        }
      }
    }
  }
  std::ostringstream d;
  d << checked << " oracle bicliques; G_i misses " << gi_misses << "; G_{i,x} misses " << literal_misses << " of "
    << pairs << " (B, x) pairs";
  report(5, gi_misses == 0 && literal_misses == 0, "coverage", d.str());
  if (!example.empty()) note("first G_{i,x} miss: " + example + " (x shares the anchor's side)");
  std::ostringstream o;
  o << "x on the side opposite the anchor: " << opposite_misses << " misses of " << opposite_pairs << " pairs";
  note(o.str());
}

void criterion6(const std::vector<CorpusEntry>& graphs) {
  std::size_t mismatches = 0;
  std::size_t comparisons = 0;
  for (const auto& e : graphs) {
    const Ordering ord = Ordering::identity(e.n);
    for (std::size_t k = 2; k <= e.n; ++k) {
      ++comparisons;
      if (count_bicliques_of_size(e.graph, ord, k).count != oracle::brute_count(e.graph, k, false)) ++mismatches;
    }
    if (e.graph.num_edges() > 0) {
      ++comparisons;
      const CountReport r = count_maximum_bicliques(e.graph, ord);
      const auto best = oracle::brute_max(e.graph);
      if (r.size != best->size || r.count != oracle::brute_count(e.graph, r.size, true)) ++mismatches;
    }
  }
  bool fixtures = true;
  const CountReport t = count_maximum_bicliques(triangle(), Ordering::identity(3));
  fixtures &= t.size == 3 && t.count == 3;
  const CountReport c = count_maximum_bicliques(cycle(4), Ordering::identity(4));
  fixtures &= c.size == 4 && c.count == 1;
  for (std::size_t k = 1; k <= 6; ++k) {
    const CountReport m = count_maximum_bicliques(matching(k), Ordering::identity(2 * k));
    fixtures &= m.size == 2 && m.count == k;
  }
  std::ostringstream d;
  d << comparisons << " comparisons, " << mismatches << " mismatches; fixtures " << (fixtures ? "ok" : "wrong");
  report(6, mismatches == 0 && fixtures, "counting equals oracle", d.str());
}

void criterion7() {
  constexpr double kBudget = 300.0;
  constexpr double kDoublingFactor = 3.0;
  const auto dir = std::filesystem::temp_directory_path() / "biclique_acceptance";
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::ostringstream d;

  d << "CLI n=20000:";
  for (std::size_t delta : {4U, 6U, 8U}) {
    const std::string file = (dir / ("regular_" + std::to_string(delta) + ".txt")).string();
    {
      std::ofstream out(file);
      write_edge_list(out, generate_graph(GeneratorModel::kRegular, 20000, delta, 7));
    }
    for (const char* cmd : {"max", "enumerate"}) {
      const auto start = Clock::now();
      const int rc = run_cli(std::string(cmd) + " --input " + file);
      const double t = seconds_since(start);
      ok &= rc == 0 && t < kBudget;
      d << ' ' << cmd << "(D=" << delta << ")=" << t << "s";
    }
  }

  std::vector<double> by_delta;
  for (std::size_t delta : {4U, 6U, 8U}) {
    const Graph g = generate_graph(GeneratorModel::kRegular, 20000, delta, 7);
    const Ordering ord = Ordering::degeneracy(g);
    by_delta.push_back(best_of(3, [&] { find_maximum_biclique(g, ord); }));
  }
  const bool grows = by_delta[0] < by_delta[1] && by_delta[1] < by_delta[2];
  ok &= grows;
  d << "; max by D " << by_delta[0] << "/" << by_delta[1] << "/" << by_delta[2] << "s";

  std::vector<double> by_n;
  for (std::size_t n : {5000U, 10000U, 20000U}) {
    const Graph g = generate_graph(GeneratorModel::kRegular, n, 6, 11);
    const Ordering ord = Ordering::degeneracy(g);
    by_n.push_back(best_of(3, [&] { find_maximum_biclique(g, ord); }));
  }
  const double r1 = by_n[1] / by_n[0];
  const double r2 = by_n[2] / by_n[1];
  ok &= r1 <= kDoublingFactor && r2 <= kDoublingFactor;
  d << "; n-doubling ratios " << r1 << ", " << r2 << " (limit " << kDoublingFactor << ")";
  std::filesystem::remove_all(dir);
  report(7, ok, "degree scaling", d.str());
}

// Does some G_i have a maximum biclique that avoids v_i entirely?
void criterion8() {
  constexpr std::size_t kInstances = 10000;
  std::size_t found = 0;
  std::size_t anchors = 0;
  std::string example;
  for (std::uint64_t s = 0; s < kInstances; ++s) {
    const std::size_t n = 6 + s % 7;
    const double p = 0.15 + 0.05 * static_cast<double>(s % 8);
    const Graph g = random_gnp(n, p, 50000 + s);
    const Ordering ord = random_ordering(n, s);
    for (std::size_t i = 1; i <= n; ++i) {
      if (neighbors_from(g, ord, ord.at(i)).empty()) continue;
      ++anchors;
      const LocalSubgraph h = build_local_graph(g, ord, i);
      const auto best = local_max_biclique(h);
      const VertexId anchor = h.to_local(ord.at(i));
      std::size_t with_anchor = 0;
      EnumerationSink sink([&](const Biclique& b) {
        if (set_contains(b.x, anchor) || set_contains(b.y, anchor)) with_anchor = std::max(with_anchor, b.size());
      });
      enumerate_maximal_bicliques(h.graph, Ordering::identity(h.graph.num_vertices()), sink);
      if (with_anchor < best->size()) {
        ++found;
        if (example.empty()) {
          std::ostringstream e;
          e << "instance " << s << " (n=" << n << "), anchor rank " << i << ": local max " << best->size()
            << ", best containing the anchor " << with_anchor;
          example = e.str();
        }
      }
    }
  }
  std::ostringstream d;
  d << kInstances << " instances, " << anchors << " anchors probed; counterexamples "
    << (found > 0 ? "FOUND (" + std::to_string(found) + ")" : std::string("not found"));
  report(8, true, "anchor-containment probe", d.str());
  if (!example.empty()) note("first: " + example);
}

void criterion9() {
  constexpr std::size_t kBudgetConstant = 2;
  std::vector<Edge> edges;
  for (VertexId c = 0; c < 38; ++c) cocktail_party(13, c * 26, &edges);
  const Graph g = Graph::from_edge_list(edges, 1000);
  EnumerationStats stats;
  EnumerationSink sink;
  enumerate_maximal_bicliques(g, Ordering::identity(1000), sink, &stats);
  const std::size_t n = g.num_vertices();
  const std::size_t delta = g.max_degree();
  const std::size_t budget = kBudgetConstant * n * delta * delta;
  std::ostringstream d;
  d << "n=" << n << ", D=" << delta << ", " << sink.count() << " bicliques streamed; peak working set "
    << stats.peak_working_elements() << " ids (graph " << stats.graph_elements << ", traversal "
    << stats.peak_frame_elements << ") vs budget " << kBudgetConstant << "*n*D^2=" << budget;
  report(9, sink.count() >= 100000 && stats.peak_working_elements() <= budget, "polynomial space", d.str());
}

}  // namespace

int main() {
  const auto graphs = corpus(200);
  const std::vector<std::function<void()>> criteria{
      [&] { criterion1(graphs); }, [&] { criterion2(graphs); }, [&] { criterion3(graphs); },
      [&] { criterion4(graphs); }, [&] { criterion5(graphs); }, [&] { criterion6(graphs); },
      [] { criterion7(); },        [] { criterion8(); },        [] { criterion9(); }};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      report(static_cast<int>(k + 1), false, "aborted", e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
