#include "infocov/coverage.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace infocov {

void CoverageConfig::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must be in [0,1]");
  if (replications < 1)
    throw std::invalid_argument("replication count must be at least 1");
}

unsigned effective_thread_count() {
  if (const char* env = std::getenv("INFOCOV_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

CoverageEstimate estimate_coverage(const DirectedGraph& g, const SeedSet& seeds,
                                   Model model, const CoverageConfig& cfg) {
  cfg.validate();
  validate_seeds(g, seeds);
  if (model == Model::independent_cascade && !g.has_ic_probs())
    throw std::invalid_argument("ic probabilities are not assigned");
  if (model == Model::linear_threshold && !g.has_lt_weights())
    throw std::invalid_argument("lt weights are not assigned");

  const std::uint32_t R = cfg.replications;
  std::vector<double> active_counts(R), informed_counts(R);

  auto run_range = [&](std::uint32_t begin, std::uint32_t end) {
    for (std::uint32_t i = begin; i < end; ++i) {
      const ReplicationStream stream{cfg.master_seed, i};
      const CascadeOutcome outcome = model == Model::independent_cascade
                                         ? simulate_ic(g, seeds, stream)
                                         : simulate_lt(g, seeds, stream);
      active_counts[i] = static_cast<double>(outcome.active.size());
      informed_counts[i] = static_cast<double>(outcome.informed.size());
    }
  };

  const unsigned threads = std::min<unsigned>(effective_thread_count(), R);
  if (threads <= 1 || R < 256) {
    run_range(0, R);
  } else {
    constexpr std::uint32_t kBlock = 64;
    std::atomic<std::uint32_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::uint32_t begin = next.fetch_add(kBlock);
            if (begin >= R) return;
            run_range(begin, std::min(begin + kBlock, R));
          }
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Single sequential reduction in replication order: the estimate does not
  // depend on how the simulations above were scheduled.
  double sum = 0.0, sum_sq = 0.0, sum_active = 0.0, sum_informed = 0.0;
  for (std::uint32_t i = 0; i < R; ++i) {
    const double x = active_counts[i] + cfg.lambda * informed_counts[i];
    sum += x;
    sum_sq += x * x;
    sum_active += active_counts[i];
    sum_informed += informed_counts[i];
  }

  CoverageEstimate est;
  est.replications_used = R;
  est.mean = sum / R;
  est.mean_active = sum_active / R;
  est.mean_informed = sum_informed / R;
  if (R > 1) {
    const double variance = std::max(0.0, (sum_sq - R * est.mean * est.mean) / (R - 1));
    est.std_error = std::sqrt(variance / R);
  }
  return est;
}

namespace {

// Coverage of one fully materialized live-arc graph, with scratch reused
// across enumeration leaves. `mark`: 0 untouched, 1 active, 2 informed.
double live_arc_coverage(const DirectedGraph& g, const std::vector<std::uint8_t>& live,
                         const std::vector<NodeId>& seeds, double lambda,
                         std::vector<std::uint8_t>& mark, std::vector<NodeId>& stack) {
  std::fill(mark.begin(), mark.end(), 0);
  stack.assign(seeds.begin(), seeds.end());
  std::size_t n_active = seeds.size();
  for (NodeId s : seeds) mark[s] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
      const NodeId v = g.edge_target(e);
      if (live[e] && mark[v] != 1) {
        mark[v] = 1;
        ++n_active;
        stack.push_back(v);
      }
    }
  }
  std::size_t n_informed = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (mark[v] != 1) continue;
    for (std::size_t e = g.out_begin(v); e < g.out_end(v); ++e) {
      const NodeId w = g.edge_target(e);
      if (mark[w] == 0) {
        mark[w] = 2;
        ++n_informed;
      }
    }
  }
  return static_cast<double>(n_active) + lambda * static_cast<double>(n_informed);
}

struct Enumerator {
  const DirectedGraph& g;
  const std::vector<NodeId>& seeds;
  double lambda;
  std::vector<std::uint8_t> live;
  std::vector<std::uint8_t> mark;
  std::vector<NodeId> stack;
  double total = 0.0;

  Enumerator(const DirectedGraph& g_, const std::vector<NodeId>& seeds_, double lambda_)
      : g(g_), seeds(seeds_), lambda(lambda_),
        live(g_.edge_count(), 0), mark(g_.node_count(), 0) {}

  double leaf() { return live_arc_coverage(g, live, seeds, lambda, mark, stack); }

  // IC: every edge independently live or dead; zero-probability branches
  // are pruned.
  void ic_edges(std::size_t e, double prob) {
    if (e == g.edge_count()) {
      total += prob * leaf();
      return;
    }
    const double p = g.edge_ic_prob(e);
    if (p > 0.0) {
      live[e] = 1;
      ic_edges(e + 1, prob * p);
    }
    if (p < 1.0) {
      live[e] = 0;
      ic_edges(e + 1, prob * (1.0 - p));
    }
  }

  // LT: each node keeps at most one in-edge.
  void lt_nodes(NodeId v, double prob) {
    if (v == g.node_count()) {
      total += prob * leaf();
      return;
    }
    double weight_sum = 0.0;
    for (std::size_t j = g.in_begin(v); j < g.in_end(v); ++j) {
      const std::size_t e = g.in_edge_id(j);
      const double w = g.edge_lt_weight(e);
      weight_sum += w;
      if (w > 0.0) {
        live[e] = 1;
        lt_nodes(v + 1, prob * w);
        live[e] = 0;
      }
    }
    const double none = 1.0 - weight_sum;
    if (none > 0.0) lt_nodes(v + 1, prob * none);
  }
};

}  // namespace

double exact_coverage(const DirectedGraph& g, const SeedSet& seeds, Model model,
                      double lambda, const ExactCaps& caps) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must be in [0,1]");
  validate_seeds(g, seeds);

  if (model == Model::independent_cascade) {
    if (!g.has_ic_probs())
      throw std::invalid_argument("ic probabilities are not assigned");
    if (g.edge_count() > caps.max_ic_edges)
      throw std::runtime_error(
          "exact IC enumeration needs 2^" + std::to_string(g.edge_count()) +
          " live-arc graphs; cap is 2^" + std::to_string(caps.max_ic_edges) + " edges");
    Enumerator en(g, seeds.ids(), lambda);
    en.ic_edges(0, 1.0);
    return en.total;
  }

  if (!g.has_lt_weights())
    throw std::invalid_argument("lt weights are not assigned");
  if (!validate_lt(g).empty())
    throw std::invalid_argument("graph violates the LT weight constraint");
  double work = 1.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    work *= static_cast<double>(g.in_degree(v)) + 1.0;
    if (work > static_cast<double>(caps.max_lt_choices))
      throw std::runtime_error(
          "exact LT enumeration needs more than " + std::to_string(caps.max_lt_choices) +
          " in-arc combinations (" + std::to_string(work) + " required)");
  }
  Enumerator en(g, seeds.ids(), lambda);
  en.lt_nodes(0, 1.0);
  return en.total;
}

}  // namespace infocov
