// Command-line front end. Talks to the library exclusively through the C API.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biclique/biclique.h"
#include "json.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kNoSolution = 2, kOracleMismatch = 3, kInputError = 4 };

struct GraphDeleter {
  void operator()(bq_graph* g) const { bq_graph_free(g); }
};
struct BicliqueDeleter {
  void operator()(bq_biclique* b) const { bq_biclique_free(b); }
};
struct ReportDeleter {
  void operator()(bq_count_report* r) const { bq_count_report_free(r); }
};
using GraphPtr = std::unique_ptr<bq_graph, GraphDeleter>;
using BicliquePtr = std::unique_ptr<bq_biclique, BicliqueDeleter>;
using ReportPtr = std::unique_ptr<bq_count_report, ReportDeleter>;

struct Settings {
  std::string input;
  std::string format = "edges";
  std::string order = "input";
  std::string output = "lines";
  bool oracle = false;
  bool per_anchor = false;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::string model = "gnp";
};

struct Pair {
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> y;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

void check(bq_status status) {
  if (status == BQ_OK) return;
  const int code = status == BQ_ERR_NO_BICLIQUE ? kNoSolution
                   : (status == BQ_ERR_PARSE || status == BQ_ERR_IO) ? kInputError
                   : status == BQ_ERR_INVALID_ARGUMENT ? kUsage
                                                       : kInputError;
  throw CommandError(code, bq_last_error());
}

void append_ids(std::string& out, const std::uint32_t* ids, std::size_t len, char sep) {
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) out.push_back(sep);
    out += std::to_string(ids[k]);
  }
}

using Json = nlohmann::ordered_json;

Json pair_json(const std::uint32_t* x, std::size_t nx, const std::uint32_t* y, std::size_t ny) {
  Json record;
  record["X"] = std::vector<std::uint32_t>(x, x + nx);
  record["Y"] = std::vector<std::uint32_t>(y, y + ny);
  return record;
}

std::string format_pair(const std::uint32_t* x, std::size_t nx, const std::uint32_t* y, std::size_t ny, bool json) {
  std::string line;
  if (json) {
    line = pair_json(x, nx, y, ny).dump();
  } else {
    append_ids(line, x, nx, ' ');
    line += " | ";
    append_ids(line, y, ny, ' ');
  }
  return line;
}

unsigned env_threads() {
  const char* raw = std::getenv("BICLIQUE_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0') throw CommandError(kUsage, "BICLIQUE_THREADS must be a non-negative integer");
  return static_cast<unsigned>(std::min<unsigned long>(value, 256));
}

bq_options make_options(const Settings& s) {
  return bq_options{s.order == "degeneracy" ? BQ_ORDER_DEGENERACY : BQ_ORDER_INPUT, env_threads()};
}

GraphPtr load(const Settings& s) {
  bq_graph* g = nullptr;
  check(bq_graph_load(s.input.c_str(), s.format == "dimacs" ? BQ_FORMAT_DIMACS : BQ_FORMAT_EDGES, &g));
  return GraphPtr(g);
}

bool oracle_applies(const Settings& s, const bq_graph* g) {
  if (!s.oracle) return false;
  if (bq_graph_num_vertices(g) <= bq_oracle_max_vertices()) return true;
  std::cerr << "oracle skipped: n=" << bq_graph_num_vertices(g) << " exceeds " << bq_oracle_max_vertices() << '\n';
  return false;
}

void collect(const std::uint32_t* x, std::size_t nx, const std::uint32_t* y, std::size_t ny, void* user) {
  static_cast<std::vector<Pair>*>(user)->push_back(Pair{{x, x + nx}, {y, y + ny}});
}

struct StreamState {
  std::string buffer;
  bool json = false;
  std::vector<Pair>* keep = nullptr;
};

void stream(const std::uint32_t* x, std::size_t nx, const std::uint32_t* y, std::size_t ny, void* user) {
  auto* state = static_cast<StreamState*>(user);
  state->buffer += format_pair(x, nx, y, ny, state->json);
  state->buffer.push_back('\n');
  if (state->buffer.size() > (1U << 16)) {
    std::fwrite(state->buffer.data(), 1, state->buffer.size(), stdout);
    state->buffer.clear();
  }
  if (state->keep != nullptr) state->keep->push_back(Pair{{x, x + nx}, {y, y + ny}});
}

int run_enumerate(const Settings& s) {
  const GraphPtr g = load(s);
  const bq_options opts = make_options(s);
  const bool oracle = oracle_applies(s, g.get());
  std::vector<Pair> mine;
  StreamState state{{}, s.output == "json", oracle ? &mine : nullptr};
  std::uint64_t count = 0;
  check(bq_enumerate(g.get(), &opts, &stream, &state, &count));
  std::fwrite(state.buffer.data(), 1, state.buffer.size(), stdout);
  std::fflush(stdout);
  if (!oracle) return kOk;

  std::vector<Pair> expected;
  check(bq_oracle_enumerate(g.get(), &collect, &expected, nullptr));
  std::sort(mine.begin(), mine.end());
  std::sort(expected.begin(), expected.end());
  if (mine == expected) return kOk;
  std::cerr << "oracle mismatch: enumerated " << mine.size() << " bicliques, oracle found " << expected.size() << '\n';
  for (const auto& p : expected) {
    std::cerr << "oracle: " << format_pair(p.x.data(), p.x.size(), p.y.data(), p.y.size(), false) << '\n';
  }
  return kOracleMismatch;
}

int run_max(const Settings& s) {
  const GraphPtr g = load(s);
  const bq_options opts = make_options(s);
  bq_biclique* raw = nullptr;
  const bq_status status = bq_find_max(g.get(), &opts, &raw);
  if (status == BQ_ERR_NO_BICLIQUE) {
    std::cout << "no biclique exists\n";
    return kNoSolution;
  }
  check(status);
  const BicliquePtr best(raw);
  std::size_t nx = 0;
  std::size_t ny = 0;
  const std::uint32_t* x = bq_biclique_side(best.get(), 0, &nx);
  const std::uint32_t* y = bq_biclique_side(best.get(), 1, &ny);
  const std::size_t size = bq_biclique_size(best.get());
  if (s.output == "json") {
    Json record;
    record["size"] = size;
    record.update(pair_json(x, nx, y, ny));
    std::cout << record.dump() << '\n';
  } else {
    std::cout << "size=" << size << '\n' << format_pair(x, nx, y, ny, false) << '\n';
  }
  std::cout.flush();
  if (!oracle_applies(s, g.get())) return kOk;

  bq_biclique* oracle_raw = nullptr;
  check(bq_oracle_max(g.get(), &oracle_raw));
  const BicliquePtr expected(oracle_raw);
  if (bq_biclique_size(expected.get()) == size) return kOk;
  std::cerr << "oracle mismatch: size=" << size << " but oracle size=" << bq_biclique_size(expected.get()) << '\n';
  return kOracleMismatch;
}

void print_report(const Settings& s, const bq_count_report* report, const char* size_key) {
  const std::size_t size = bq_count_report_size(report);
  const std::uint64_t count = bq_count_report_count(report);
  const std::size_t anchors = bq_count_report_num_anchors(report);
  std::ostringstream out;
  if (s.output == "json") {
    Json record;
    record[size_key] = size;
    record["count"] = count;
    if (s.per_anchor) {
      Json& table = record["per_anchor"] = Json::array();
      for (std::size_t r = 1; r <= anchors; ++r) table.push_back(bq_count_report_anchor(report, r));
    }
    out << record.dump() << '\n';
  } else {
    out << size_key << '=' << size << " count=" << count << '\n';
    if (s.per_anchor) {
      out << "rank,count\n";
      for (std::size_t r = 1; r <= anchors; ++r) out << r << ',' << bq_count_report_anchor(report, r) << '\n';
    }
  }
  std::cout << out.str();
  std::cout.flush();
}

int run_count(const Settings& s, bool maximum) {
  const GraphPtr g = load(s);
  const bq_options opts = make_options(s);
  bq_count_report* raw = nullptr;
  const bq_status status = maximum ? bq_count_max(g.get(), &opts, &raw) : bq_count_size(g.get(), &opts, s.size, &raw);
  if (status == BQ_ERR_NO_BICLIQUE) {
    std::cout << "no biclique exists\n";
    return kNoSolution;
  }
  check(status);
  const ReportPtr report(raw);
  print_report(s, report.get(), maximum ? "s" : "k");
  if (!oracle_applies(s, g.get())) return kOk;

  std::uint64_t expected = 0;
  const std::size_t size = bq_count_report_size(report.get());
  check(bq_oracle_count(g.get(), size, maximum ? 1 : 0, &expected));
  bool ok = expected == bq_count_report_count(report.get());
  if (maximum) {
    bq_biclique* best = nullptr;
    check(bq_oracle_max(g.get(), &best));
    ok = ok && bq_biclique_size(best) == size;
    bq_biclique_free(best);
  }
  if (ok) return kOk;
  std::cerr << "oracle mismatch: count=" << bq_count_report_count(report.get()) << " but oracle count=" << expected
            << '\n';
  return kOracleMismatch;
}

int run_cover_dump(const Settings& s) {
  const GraphPtr g = load(s);
  bq_graph* raw = nullptr;
  check(bq_graph_double_cover(g.get(), &raw));
  const GraphPtr cover(raw);
  char* text = nullptr;
  check(bq_graph_to_text(cover.get(), &text));
  std::fputs(text, stdout);
  bq_string_free(text);
  return kOk;
}

int run_gen(const Settings& s) {
  bq_graph* raw = nullptr;
  check(bq_graph_generate(s.model == "regular" ? BQ_MODEL_REGULAR : BQ_MODEL_GNP, s.n, s.max_degree, s.seed, &raw));
  const GraphPtr g(raw);
  char* text = nullptr;
  check(bq_graph_to_text(g.get(), &text));
  std::fputs(text, stdout);
  bq_string_free(text);
  return kOk;
}

void add_graph_flags(CLI::App* cmd, Settings& s, bool with_order) {
  cmd->add_option("--input", s.input, "graph file")->required();
  cmd->add_option("--format", s.format, "input format")->check(CLI::IsMember({"edges", "dimacs"}));
  if (with_order) {
    cmd->add_option("--order", s.order, "vertex ordering")->check(CLI::IsMember({"input", "degeneracy"}));
    cmd->add_option("--output", s.output, "output style")->check(CLI::IsMember({"lines", "json"}));
    cmd->add_flag("--oracle", s.oracle, "cross-check against the exhaustive oracle on small graphs");
  }
  cmd->add_option("--seed", s.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal, maximum and counted bicliques of bounded-degree graphs"};
  app.require_subcommand(1);
  Settings s;

  auto* enumerate = app.add_subcommand("enumerate", "stream every maximal non-induced biclique");
  add_graph_flags(enumerate, s, true);
  auto* max = app.add_subcommand("max", "find a maximum biclique");
  add_graph_flags(max, s, true);
  auto* count_max = app.add_subcommand("count-max", "count maximum bicliques");
  add_graph_flags(count_max, s, true);
  count_max->add_flag("--per-anchor", s.per_anchor, "dump per-anchor contributions");
  auto* count_k = app.add_subcommand("count-k", "count bicliques with a given number of vertices");
  add_graph_flags(count_k, s, true);
  count_k->add_option("--size", s.size, "biclique size K (>= 2)")->required()->check(CLI::Range(2, 1 << 30));
  count_k->add_flag("--per-anchor", s.per_anchor, "dump per-anchor contributions");
  auto* cover_dump = app.add_subcommand("cover-dump", "print the bipartite double cover as an edge list");
  add_graph_flags(cover_dump, s, false);
  auto* gen = app.add_subcommand("gen", "emit a seeded random graph with a degree cap");
  gen->add_option("--n", s.n, "vertex count")->required();
  gen->add_option("--max-degree", s.max_degree, "degree cap")->required();
  gen->add_option("--model", s.model, "generator model")->check(CLI::IsMember({"gnp", "regular"}));
  gen->add_option("--seed", s.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(s);
    if (max->parsed()) return run_max(s);
    if (count_max->parsed()) return run_count(s, true);
    if (count_k->parsed()) return run_count(s, false);
    if (cover_dump->parsed()) return run_cover_dump(s);
    if (gen->parsed()) return run_gen(s);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  }
  return kUsage;
}
