#ifndef MONOPRISM_HARNESS_HPP
#define MONOPRISM_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "monophonic.hpp"
#include "oracle.hpp"
#include "prism_formulas.hpp"

namespace monoprism {

enum class Status { ok, mismatch, oracle_skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
  case Status::ok: return "ok";
  case Status::mismatch: return "mismatch";
  case Status::oracle_skipped: return "oracle-skipped";
  }
  return "?";
}

struct InvariantEntry {
  FormulaResult formula;
  std::optional<std::size_t> oracle_value;
  bool witness_verified = false;

  bool agrees() const { return !oracle_value || *oracle_value == formula.value; }
};

struct InvariantReport {
  std::string graph_id; ///< graph6 of G
  std::size_t n = 0;
  std::size_t r = 0, t = 0, k = 0;
  std::size_t r_bar = 0, t_bar = 0, k_bar = 0;
  Distance diameter, diameter_bar;
  std::size_t omega = 0, alpha = 0;
  InvariantEntry cm, m, hm;
  Status status = Status::ok;

  bool witnesses_verified() const { return cm.witness_verified && m.witness_verified && hm.witness_verified; }
};

struct ReportOptions {
  bool run_oracle = true;
  std::size_t oracle_cap = default_oracle_cap; ///< on the prism order 2n
  CmVariant cm_variant = CmVariant::closed_form;
};

/// Formula values, witness checks and (within the cap) oracle values for GḠ.
inline InvariantReport make_report(const Graph &g, const ReportOptions &opt = {}) {
  if (g.order() == 0) throw std::invalid_argument("cannot report on a graph with no vertices");
  InvariantReport rep;
  rep.graph_id = to_graph6(g);
  rep.n = g.order();
  const Graph gc = complement(g);
  const auto parts = components(g);
  const auto parts_bar = components(gc);
  rep.r = parts.count;
  rep.t = parts.trivial_count;
  rep.k = parts.min_order;
  rep.r_bar = parts_bar.count;
  rep.t_bar = parts_bar.trivial_count;
  rep.k_bar = parts_bar.min_order;
  rep.diameter = diameter(g);
  rep.diameter_bar = diameter(gc);
  rep.omega = clique_number(g).value;
  rep.alpha = independence_number(g).value;

  rep.cm.formula = cm_prism(g, opt.cm_variant);
  rep.m.formula = m_prism(g);
  rep.hm.formula = hm_prism(g);

  const bool fits = 2 * g.order() <= opt.oracle_cap;
  if (fits) {
    const IntervalTable table(complementary_prism(g));
    for (auto *e : {&rep.cm, &rep.m, &rep.hm}) e->witness_verified = verify_witness(table, e->formula);
    if (opt.run_oracle) {
      rep.cm.oracle_value = convexity_number(table, opt.oracle_cap).value;
      const auto m = monophonic_number(table, opt.oracle_cap);
      rep.m.oracle_value = m.value;
      rep.hm.oracle_value = hull_number(table, opt.oracle_cap, true, m.value).value;
    }
  }
  if (!opt.run_oracle || !fits)
    rep.status = Status::oracle_skipped;
  else if (rep.cm.agrees() && rep.m.agrees() && rep.hm.agrees())
    rep.status = Status::ok;
  else
    rep.status = Status::mismatch;
  return rep;
}

/// "g:3" for a base-side vertex, "gbar:3" for its partner.
inline std::vector<std::string> witness_labels(VertexSet witness, std::size_t n) {
  std::vector<std::string> out;
  for (vertex v : witness) out.push_back(v < n ? "g:" + std::to_string(v) : "gbar:" + std::to_string(v - n));
  return out;
}

inline nlohmann::ordered_json to_json(const InvariantEntry &e, std::size_t n) {
  nlohmann::ordered_json j;
  j["formula_value"] = e.formula.value;
  j["oracle_value"] = e.oracle_value ? nlohmann::ordered_json(*e.oracle_value) : nlohmann::ordered_json(nullptr);
  j["case_used"] = {{"orientation", to_string(e.formula.case_used.orientation)},
                    {"rule", to_string(e.formula.rule)},
                    {"is_c5", e.formula.case_used.is_c5},
                    {"edgeless", e.formula.case_used.edgeless},
                    {"complete", e.formula.case_used.complete}};
  j["witness_kind"] = to_string(e.formula.witness_kind);
  j["witness"] = witness_labels(e.formula.witness, n);
  j["witness_verified"] = e.witness_verified;
  return j;
}

inline nlohmann::ordered_json distance_json(Distance d) {
  return d.is_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(d.hops());
}

inline nlohmann::ordered_json to_json(const InvariantReport &rep) {
  nlohmann::ordered_json j;
  j["graph_id"] = rep.graph_id;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["t"] = rep.t;
  j["k"] = rep.k;
  j["diameter"] = distance_json(rep.diameter);
  j["complement"] = {{"r", rep.r_bar}, {"t", rep.t_bar}, {"k", rep.k_bar}, {"diameter", distance_json(rep.diameter_bar)}};
  j["omega"] = rep.omega;
  j["alpha"] = rep.alpha;
  j["cm"] = to_json(rep.cm, rep.n);
  j["m"] = to_json(rep.m, rep.n);
  j["hm"] = to_json(rep.hm, rep.n);
  j["status"] = to_string(rep.status);
  return j;
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)> &fn) {
  std::vector<T> out(count);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  for (auto &th : pool) th.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Every labelled graph on n vertices, in edge-mask order.
inline std::vector<Graph> all_labelled_graphs(std::size_t n) {
  if (n > 8) throw std::invalid_argument("exhaustive enumeration is limited to n <= 8");
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) out.push_back(graph_from_mask(n, mask));
  return out;
}

inline std::vector<Graph> exhaustive_corpus(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto level = all_labelled_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// `count` draws of G(n, p), cycling n through `orders` fastest and p through
/// `probabilities` next, all from one engine seeded with `seed`.
inline std::vector<Graph> random_corpus(const std::vector<std::size_t> &orders, const std::vector<double> &probabilities,
                                        std::size_t count, std::uint64_t seed) {
  if (orders.empty() || probabilities.empty()) throw std::invalid_argument("random corpus needs orders and probabilities");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = orders[i % orders.size()];
    const double p = probabilities[(i / orders.size()) % probabilities.size()];
    out.push_back(random_gnp(n, p, rng));
  }
  return out;
}

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t ok = 0;
  std::size_t mismatch = 0;
  std::size_t oracle_skipped = 0;
  std::size_t witness_failures = 0;
  std::vector<std::string> mismatches;       ///< graph6 of every mismatching graph
  std::vector<std::string> unverified;       ///< graph6 of every graph with a failed witness
};

inline SweepSummary sweep(const std::vector<Graph> &corpus, const ReportOptions &opt = {}, unsigned jobs = 1) {
  auto reports = parallel_map<InvariantReport>(corpus.size(), jobs, [&](std::size_t i) { return make_report(corpus[i], opt); });
  SweepSummary s;
  s.graphs = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto &rep = reports[i];
    switch (rep.status) {
    case Status::ok: ++s.ok; break;
    case Status::mismatch: ++s.mismatch; s.mismatches.push_back(rep.graph_id); break;
    case Status::oracle_skipped: ++s.oracle_skipped; break;
    }
    const bool checked = 2 * rep.n <= opt.oracle_cap;
    if (checked && !rep.witnesses_verified()) {
      ++s.witness_failures;
      s.unverified.push_back(rep.graph_id);
    }
  }
  return s;
}

inline nlohmann::ordered_json to_json(const SweepSummary &s) {
  nlohmann::ordered_json j;
  j["graphs"] = s.graphs;
  j["ok"] = s.ok;
  j["mismatch"] = s.mismatch;
  j["oracle_skipped"] = s.oracle_skipped;
  j["witness_failures"] = s.witness_failures;
  j["mismatches"] = s.mismatches;
  j["unverified_witnesses"] = s.unverified;
  return j;
}

} // namespace monoprism

#endif // MONOPRISM_HARNESS_HPP
