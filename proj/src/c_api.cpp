#include "biclique/biclique.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "biclique/counting.hpp"
#include "biclique/double_cover.hpp"
#include "biclique/enumerate.hpp"
#include "biclique/error.hpp"
#include "biclique/graph.hpp"
#include "biclique/io.hpp"
#include "biclique/max_biclique.hpp"
#include "biclique/oracle.hpp"

struct bq_graph {
  biclique::Graph graph;
};

struct bq_biclique {
  biclique::Biclique value;
  std::size_t anchor_rank = 0;
};

struct bq_count_report {
  biclique::CountReport report;
};

namespace {

thread_local std::string last_error;

bq_status to_status(biclique::ErrorCode code) {
  switch (code) {
    case biclique::ErrorCode::kInvalidArgument:
      return BQ_ERR_INVALID_ARGUMENT;
    case biclique::ErrorCode::kParse:
      return BQ_ERR_PARSE;
    case biclique::ErrorCode::kIo:
      return BQ_ERR_IO;
    case biclique::ErrorCode::kNoBiclique:
      return BQ_ERR_NO_BICLIQUE;
    case biclique::ErrorCode::kOracleGuard:
      return BQ_ERR_ORACLE_GUARD;
    case biclique::ErrorCode::kOverflow:
      return BQ_ERR_OVERFLOW;
  }
  return BQ_ERR_INTERNAL;
}

bq_status fail(bq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` and converts any exception into a status code.
template <class Body>
bq_status guarded(Body&& body) {
  try {
    return body();
  } catch (const biclique::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BQ_ERR_INTERNAL, e.what());
  }
}

biclique::Ordering make_ordering(const biclique::Graph& g, const bq_options* options) {
  if (options != nullptr && options->order == BQ_ORDER_DEGENERACY) return biclique::Ordering::degeneracy(g);
  return biclique::Ordering::identity(g.num_vertices());
}

unsigned thread_count(const bq_options* options) { return options == nullptr ? 0 : options->threads; }

biclique::GraphFormat to_format(bq_format format) {
  return format == BQ_FORMAT_DIMACS ? biclique::GraphFormat::kDimacs : biclique::GraphFormat::kEdgeList;
}

void forward(bq_biclique_fn callback, void* user, const biclique::Biclique& b) {
  if (callback != nullptr) callback(b.x.data(), b.x.size(), b.y.data(), b.y.size(), user);
}

#define BQ_REQUIRE(cond, what) \
  if (!(cond)) return fail(BQ_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* bq_last_error(void) { return last_error.c_str(); }

const char* bq_status_name(bq_status status) {
  switch (status) {
    case BQ_OK:
      return "ok";
    case BQ_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BQ_ERR_PARSE:
      return "parse error";
    case BQ_ERR_IO:
      return "i/o error";
    case BQ_ERR_NO_BICLIQUE:
      return "no biclique exists";
    case BQ_ERR_ORACLE_GUARD:
      return "graph too large for the oracle";
    case BQ_ERR_OVERFLOW:
      return "count overflow";
    case BQ_ERR_INTERNAL:
      break;
  }
  return "internal error";
}

bq_status bq_graph_create(size_t n, const uint32_t* endpoints, size_t num_edges, bq_graph** out) {
  BQ_REQUIRE(out != nullptr, "null output handle");
  BQ_REQUIRE(endpoints != nullptr || num_edges == 0, "null edge array");
  return guarded([&] {
    std::vector<biclique::Edge> edges(num_edges);
    for (std::size_t k = 0; k < num_edges; ++k) edges[k] = {endpoints[2 * k], endpoints[2 * k + 1]};
    *out = new bq_graph{biclique::Graph::from_edge_list(edges, n)};
    return BQ_OK;
  });
}

bq_status bq_graph_load(const char* path, bq_format format, bq_graph** out) {
  BQ_REQUIRE(out != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    *out = new bq_graph{biclique::read_graph_file(path, to_format(format))};
    return BQ_OK;
  });
}

bq_status bq_graph_parse(const char* text, size_t length, bq_format format, bq_graph** out) {
  BQ_REQUIRE(out != nullptr && (text != nullptr || length == 0), "null argument");
  return guarded([&] {
    std::istringstream in(std::string(text == nullptr ? "" : text, length));
    *out = new bq_graph{biclique::read_graph(in, to_format(format))};
    return BQ_OK;
  });
}

bq_status bq_graph_generate(bq_model model, size_t n, size_t max_degree, uint64_t seed, bq_graph** out) {
  BQ_REQUIRE(out != nullptr, "null output handle");
  return guarded([&] {
    const auto m = model == BQ_MODEL_REGULAR ? biclique::GeneratorModel::kRegular : biclique::GeneratorModel::kGnp;
    *out = new bq_graph{biclique::generate_graph(m, n, max_degree, seed)};
    return BQ_OK;
  });
}

bq_status bq_graph_double_cover(const bq_graph* graph, bq_graph** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new bq_graph{biclique::build_double_cover(graph->graph).graph()};
    return BQ_OK;
  });
}

void bq_graph_free(bq_graph* graph) { delete graph; }

size_t bq_graph_num_vertices(const bq_graph* graph) { return graph ? graph->graph.num_vertices() : 0; }
size_t bq_graph_num_edges(const bq_graph* graph) { return graph ? graph->graph.num_edges() : 0; }
size_t bq_graph_max_degree(const bq_graph* graph) { return graph ? graph->graph.max_degree() : 0; }

size_t bq_graph_edges(const bq_graph* graph, uint32_t* endpoints, size_t capacity) {
  if (graph == nullptr) return 0;
  const auto edges = graph->graph.edges();
  if (endpoints != nullptr) {
    for (std::size_t k = 0; k < edges.size() && k < capacity; ++k) {
      endpoints[2 * k] = edges[k].first;
      endpoints[2 * k + 1] = edges[k].second;
    }
  }
  return edges.size();
}

bq_status bq_graph_to_text(const bq_graph* graph, char** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    std::ostringstream text;
    biclique::write_edge_list(text, graph->graph);
    const std::string s = text.str();
    char* buffer = new char[s.size() + 1];
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    *out = buffer;
    return BQ_OK;
  });
}

void bq_string_free(char* text) { delete[] text; }

bq_status bq_enumerate(const bq_graph* graph, const bq_options* options, bq_biclique_fn callback, void* user,
                       uint64_t* count) {
  BQ_REQUIRE(graph != nullptr, "null graph");
  return guarded([&] {
    const auto ord = make_ordering(graph->graph, options);
    biclique::EnumerationSink sink([&](const biclique::Biclique& b) { forward(callback, user, b); });
    const auto emitted = biclique::enumerate_maximal_bicliques(graph->graph, ord, sink);
    if (count != nullptr) *count = emitted;
    return BQ_OK;
  });
}

bq_status bq_find_max(const bq_graph* graph, const bq_options* options, bq_biclique** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto ord = make_ordering(graph->graph, options);
    auto result = biclique::find_maximum_biclique(graph->graph, ord, thread_count(options));
    if (!result) return fail(BQ_ERR_NO_BICLIQUE, "no biclique exists");
    *out = new bq_biclique{std::move(result->best), result->anchor.rank};
    return BQ_OK;
  });
}

size_t bq_biclique_size(const bq_biclique* biclique) { return biclique ? biclique->value.size() : 0; }

const uint32_t* bq_biclique_side(const bq_biclique* biclique, int side, size_t* length) {
  if (biclique == nullptr || (side != 0 && side != 1)) {
    if (length != nullptr) *length = 0;
    return nullptr;
  }
  const auto& s = side == 0 ? biclique->value.x : biclique->value.y;
  if (length != nullptr) *length = s.size();
  return s.data();
}

size_t bq_biclique_anchor_rank(const bq_biclique* biclique) { return biclique ? biclique->anchor_rank : 0; }

void bq_biclique_free(bq_biclique* biclique) { delete biclique; }

bq_status bq_count_max(const bq_graph* graph, const bq_options* options, bq_count_report** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto ord = make_ordering(graph->graph, options);
    *out = new bq_count_report{biclique::count_maximum_bicliques(graph->graph, ord, thread_count(options))};
    return BQ_OK;
  });
}

bq_status bq_count_size(const bq_graph* graph, const bq_options* options, size_t size, bq_count_report** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto ord = make_ordering(graph->graph, options);
    *out = new bq_count_report{biclique::count_bicliques_of_size(graph->graph, ord, size, thread_count(options))};
    return BQ_OK;
  });
}

size_t bq_count_report_size(const bq_count_report* report) { return report ? report->report.size : 0; }
uint64_t bq_count_report_count(const bq_count_report* report) { return report ? report->report.count : 0; }
size_t bq_count_report_num_anchors(const bq_count_report* report) {
  return report ? report->report.per_anchor.size() : 0;
}

uint64_t bq_count_report_anchor(const bq_count_report* report, size_t rank) {
  if (report == nullptr || rank < 1 || rank > report->report.per_anchor.size()) return 0;
  return report->report.per_anchor[rank - 1];
}

void bq_count_report_free(bq_count_report* report) { delete report; }

size_t bq_oracle_max_vertices(void) { return biclique::oracle::kMaxVertices; }

bq_status bq_oracle_enumerate(const bq_graph* graph, bq_biclique_fn callback, void* user, uint64_t* count) {
  BQ_REQUIRE(graph != nullptr, "null graph");
  return guarded([&] {
    const auto all = biclique::oracle::brute_enumerate(graph->graph);
    for (const auto& b : all) forward(callback, user, b);
    if (count != nullptr) *count = all.size();
    return BQ_OK;
  });
}

bq_status bq_oracle_max(const bq_graph* graph, bq_biclique** out) {
  BQ_REQUIRE(graph != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto best = biclique::oracle::brute_max(graph->graph);
    if (!best) return fail(BQ_ERR_NO_BICLIQUE, "no biclique exists");
    *out = new bq_biclique{std::move(best->witness), 0};
    return BQ_OK;
  });
}

bq_status bq_oracle_count(const bq_graph* graph, size_t size, int maximal_only, uint64_t* count) {
  BQ_REQUIRE(graph != nullptr && count != nullptr, "null argument");
  return guarded([&] {
    *count = biclique::oracle::brute_count(graph->graph, size, maximal_only != 0);
    return BQ_OK;
  });
}

}  // extern "C"
