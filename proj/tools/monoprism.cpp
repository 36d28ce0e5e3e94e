// monoprism: monophonic convexity invariants of complementary prisms.
//
//   monoprism info [--edge-list|--graph6] FILE [--no-oracle]
//   monoprism sweep --exhaustive N | --random N --samples S --p P --seed SEED
//   monoprism gen FAMILY PARAMS... [--seed SEED] [--count C] [--union CODE]
//
// Records go to stdout as JSON lines, diagnostics to stderr. Exit codes:
// 0 all ok, 1 input error, 2 formula/oracle mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <monoprism/generators.hpp>
#include <monoprism/graph_io.hpp>
#include <monoprism/harness.hpp>

namespace {

using namespace monoprism;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_mismatch = 2;

std::string read_all(const std::string &path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> split_words(const std::string &s) {
  std::istringstream in(s);
  return {std::istream_iterator<std::string>(in), {}};
}

Graph with_unions(Graph g, const std::vector<std::string> &codes) {
  for (const auto &c : codes) g = disjoint_union(g, graph_from_shorthand(c));
  return g;
}

CmVariant parse_variant(const std::string &s) {
  return s == "amended" ? CmVariant::amended : CmVariant::closed_form;
}

struct InfoArgs {
  std::string file;
  bool edge_list = false;
  bool graph6 = false;
  std::string family;
  std::vector<std::string> unions;
  bool no_oracle = false;
  std::size_t oracle_cap = default_oracle_cap;
  std::string cm_variant = "closed-form";
};

int run_info(const InfoArgs &a) {
  std::vector<Graph> graphs;
  if (!a.family.empty()) {
    graphs.push_back(with_unions(graph_from_family_spec(split_words(a.family)), a.unions));
  } else {
    const std::string text = read_all(a.file);
    if (a.edge_list) {
      if (!detail::trim(text).empty()) graphs.push_back(parse_edge_list(text));
    } else {
      graphs = parse_graph6_lines(text);
    }
    for (auto &g : graphs) g = with_unions(std::move(g), a.unions);
  }

  ReportOptions opt;
  opt.run_oracle = !a.no_oracle;
  opt.oracle_cap = a.oracle_cap;
  opt.cm_variant = parse_variant(a.cm_variant);

  // Validate everything before printing so a bad graph yields no partial output.
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() == 0) throw ParseError(0, "graph " + std::to_string(i + 1) + " has no vertices");
    if (graphs[i].order() > max_prism_base)
      throw ParseError(0, "graph " + std::to_string(i + 1) + " exceeds prism capacity (n <= " +
                              std::to_string(max_prism_base) + ")");
  }
  bool mismatch = false;
  for (const auto &g : graphs) {
    const auto rep = make_report(g, opt);
    mismatch = mismatch || rep.status == Status::mismatch;
    std::cout << to_json(rep).dump() << '\n';
  }
  return mismatch ? exit_mismatch : exit_ok;
}

struct SweepArgs {
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  std::size_t samples = 100;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = default_oracle_cap;
  std::string cm_variant = "closed-form";
  unsigned jobs = 1;
};

int run_sweep(const SweepArgs &a) {
  ReportOptions opt;
  opt.oracle_cap = a.oracle_cap;
  opt.cm_variant = parse_variant(a.cm_variant);

  nlohmann::ordered_json head;
  std::vector<Graph> corpus;
  if (a.exhaustive) {
    if (2 * a.exhaustive > a.oracle_cap)
      throw std::invalid_argument("exhaustive sweep needs 2N <= oracle cap (" + std::to_string(a.oracle_cap) + ")");
    head["mode"] = "exhaustive";
    head["n_max"] = a.exhaustive;
    corpus = exhaustive_corpus(a.exhaustive);
  } else {
    if (a.random > max_prism_base) throw std::invalid_argument("random sweep order exceeds prism capacity");
    head["mode"] = "random";
    head["n"] = a.random;
    head["samples"] = a.samples;
    head["p"] = a.p;
    head["seed"] = a.seed;
    corpus = random_corpus({a.random}, {a.p}, a.samples, a.seed);
  }
  head["cm_variant"] = a.cm_variant;
  const auto summary = sweep(corpus, opt, a.jobs);
  const auto body = to_json(summary);
  for (const auto &[key, value] : body.items()) head[key] = value;
  std::cout << head.dump() << '\n';
  for (const auto &id : summary.mismatches) std::cerr << "mismatch: " << id << '\n';
  return summary.mismatch ? exit_mismatch : exit_ok;
}

struct GenArgs {
  std::vector<std::string> spec;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::vector<std::string> unions;
};

int run_gen(const GenArgs &a) {
  if (a.spec.empty()) throw std::invalid_argument("gen needs a family");
  if (a.spec[0] == "gnp") {
    if (a.spec.size() != 3) throw std::invalid_argument("gnp expects: gnp N P");
    const std::size_t n = std::stoul(a.spec[1]);
    const double p = std::stod(a.spec[2]);
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.count; ++i) std::cout << to_graph6(with_unions(random_gnp(n, p, rng), a.unions)) << '\n';
    return exit_ok;
  }
  if (a.count != 1) throw std::invalid_argument("--count only applies to gnp");
  std::cout << to_graph6(with_unions(graph_from_family_spec(a.spec), a.unions)) << '\n';
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Monophonic convexity invariants of complementary prisms"};
  app.require_subcommand(1);

  InfoArgs info;
  auto *info_cmd = app.add_subcommand("info", "Report c_m, m and h_m of the prism of each input graph");
  auto *file_opt = info_cmd->add_option("file", info.file, "Input file ('-' for stdin)");
  auto *el = info_cmd->add_flag("--edge-list", info.edge_list, "Input is an edge list");
  auto *g6 = info_cmd->add_flag("--graph6", info.graph6, "Input is graph6, one graph per line (default)");
  el->excludes(g6);
  auto *fam = info_cmd->add_option("--family", info.family, "Family spec instead of a file, e.g. \"cycle 5\"");
  fam->excludes(file_opt);
  info_cmd->add_option("--union", info.unions, "Add a disjoint component: k<n>, e<n>, p<n>, c<n>, s<n>");
  info_cmd->add_flag("--no-oracle", info.no_oracle, "Skip exhaustive search");
  info_cmd->add_option("--oracle-cap", info.oracle_cap, "Largest prism order given to the oracle")->capture_default_str();
  info_cmd->add_option("--cm-variant", info.cm_variant, "closed-form | amended")
      ->check(CLI::IsMember({"closed-form", "amended"}))
      ->capture_default_str();

  SweepArgs sw;
  auto *sweep_cmd = app.add_subcommand("sweep", "Compare formulas with the oracle over a corpus");
  auto *ex = sweep_cmd->add_option("--exhaustive", sw.exhaustive, "All labelled graphs with 1..N vertices");
  auto *rn = sweep_cmd->add_option("--random", sw.random, "G(N, p) samples");
  ex->excludes(rn);
  sweep_cmd->add_option("--samples", sw.samples, "Number of random graphs")->capture_default_str();
  sweep_cmd->add_option("--p", sw.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep_cmd->add_option("--seed", sw.seed, "Random seed")->capture_default_str();
  sweep_cmd->add_option("--oracle-cap", sw.oracle_cap, "Largest prism order given to the oracle")->capture_default_str();
  sweep_cmd->add_option("--cm-variant", sw.cm_variant, "closed-form | amended")
      ->check(CLI::IsMember({"closed-form", "amended"}))
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "Print graph6 for a family member or random graphs");
  gen_cmd->add_option("spec", gen.spec, "FAMILY PARAMS... (path|cycle|complete|empty|star N, "
                                        "complete_bipartite A B, gnp N P)")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of gnp graphs")->capture_default_str();
  gen_cmd->add_option("--union", gen.unions, "Add a disjoint component: k<n>, e<n>, p<n>, c<n>, s<n>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*info_cmd) {
      if (info.file.empty() && info.family.empty()) throw std::invalid_argument("info needs FILE or --family");
      return run_info(info);
    }
    if (*sweep_cmd) {
      if (!sw.exhaustive && !sw.random) throw std::invalid_argument("sweep needs --exhaustive N or --random N");
      return run_sweep(sw);
    }
    return run_gen(gen);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
