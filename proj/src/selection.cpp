#include "infocov/selection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "infocov/rng.hpp"

namespace infocov {

namespace {

void check_k(const DirectedGraph& g, std::uint32_t k) {
  if (k > g.node_count())
    throw std::invalid_argument("k=" + std::to_string(k) + " exceeds node count " +
                                std::to_string(g.node_count()));
}

}  // namespace

GainEvaluator parse_evaluator(std::string_view name) {
  if (name == "monte-carlo") return GainEvaluator::monte_carlo;
  if (name == "exact") return GainEvaluator::exact;
  throw std::invalid_argument("unknown evaluator '" + std::string(name) +
                              "' (expected monte-carlo or exact)");
}

SelectionResult lazy_greedy(const DirectedGraph& g, Model model, std::uint32_t k,
                            const CoverageConfig& cfg, GainEvaluator evaluator,
                            const ExactCaps& caps) {
  cfg.validate();
  check_k(g, k);

  SelectionResult result;
  result.objective_value = 0.0;
  if (k == 0) return result;

  auto evaluate = [&](const std::vector<NodeId>& ids) {
    const SeedSet s{std::vector<NodeId>(ids)};
    return evaluator == GainEvaluator::exact
               ? exact_coverage(g, s, model, cfg.lambda, caps)
               : estimate_coverage(g, s, model, cfg).mean;
  };

  struct Entry {
    double gain;
    NodeId node;
    std::uint32_t stamp;
  };
  struct ByGainThenSmallId {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.node > b.node;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, ByGainThenSmallId> queue;
  for (NodeId v = 0; v < g.node_count(); ++v)
    queue.push({evaluate({v}), v, 0});

  std::vector<NodeId> chosen;
  double current_value = 0.0;
  while (chosen.size() < k) {
    std::uint64_t evaluations = 0;
    for (;;) {
      Entry top = queue.top();
      queue.pop();
      if (top.stamp == chosen.size()) {
        chosen.push_back(top.node);
        current_value += top.gain;
        result.seeds.push_back(top.node);
        result.marginal_gains.push_back(top.gain);
        break;
      }
      std::vector<NodeId> with_node(chosen);
      with_node.push_back(top.node);
      top.gain = evaluate(with_node) - current_value;
      top.stamp = static_cast<std::uint32_t>(chosen.size());
      ++evaluations;
      queue.push(top);
    }
    result.evaluations_per_step.push_back(evaluations);
  }
  result.objective_value = current_value;
  return result;
}

SelectionResult effective_degree_rank(const DirectedGraph& g, std::uint32_t k) {
  check_k(g, k);
  const NodeId n = g.node_count();

  SelectionResult result;
  std::vector<std::int64_t> effective_degree(n);
  for (NodeId v = 0; v < n; ++v) effective_degree[v] = g.out_degree(v);
  std::vector<std::uint8_t> selected(n, 0), covered(n, 0);

  for (std::uint32_t step = 0; step < k; ++step) {
    NodeId best = 0;
    std::int64_t best_degree = -1;
    for (NodeId v = 0; v < n; ++v) {
      if (!selected[v] && effective_degree[v] > best_degree) {
        best = v;
        best_degree = effective_degree[v];
      }
    }
    selected[best] = 1;
    result.seeds.push_back(best);
    result.marginal_gains.push_back(static_cast<double>(best_degree));
    // Covering w costs every in-neighbor of w one unit of effective degree;
    // each node is covered at most once, so this stays O(k*n + m) overall.
    for (std::size_t e = g.out_begin(best); e < g.out_end(best); ++e) {
      const NodeId w = g.edge_target(e);
      if (covered[w]) continue;
      covered[w] = 1;
      for (std::size_t j = g.in_begin(w); j < g.in_end(w); ++j)
        --effective_degree[g.in_source(j)];
    }
  }
  return result;
}

SelectionResult baseline_out_degree(const DirectedGraph& g, std::uint32_t k) {
  check_k(g, k);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const NodeId da = g.out_degree(a), db = g.out_degree(b);
    return da != db ? da > db : a < b;
  });
  SelectionResult result;
  for (std::uint32_t i = 0; i < k; ++i) {
    result.seeds.push_back(order[i]);
    result.marginal_gains.push_back(static_cast<double>(g.out_degree(order[i])));
  }
  return result;
}

SelectionResult baseline_random(const DirectedGraph& g, std::uint32_t k,
                                std::uint64_t seed) {
  check_k(g, k);
  std::vector<NodeId> pool(g.node_count());
  std::iota(pool.begin(), pool.end(), 0);
  const ReplicationStream stream{seed, 0};
  SelectionResult result;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + stream.below(RngDomain::seed_shuffle, i, pool.size() - i);
    std::swap(pool[i], pool[j]);
    result.seeds.push_back(pool[i]);
  }
  return result;
}

SelectionResult exhaustive_optimal(const DirectedGraph& g, Model model,
                                   std::uint32_t k, double lambda,
                                   const ExactCaps& caps, std::uint64_t max_subsets) {
  check_k(g, k);
  const NodeId n = g.node_count();

  SelectionResult result;
  result.objective_value = 0.0;
  if (k == 0) return result;

  double subsets = 1.0;
  for (std::uint32_t i = 1; i <= k; ++i)
    subsets = subsets * (n - k + i) / i;
  if (subsets > static_cast<double>(max_subsets))
    throw std::runtime_error("exhaustive search over " + std::to_string(subsets) +
                             " subsets exceeds the cap of " + std::to_string(max_subsets));

  std::vector<NodeId> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<NodeId> best;
  double best_value = -1.0;
  std::uint64_t evaluated = 0;
  for (;;) {
    const double value = exact_coverage(g, SeedSet{std::vector<NodeId>(comb)}, model,
                                        lambda, caps);
    ++evaluated;
    // Lexicographic enumeration plus strict improvement keeps the smallest
    // maximizer.
    if (value > best_value) {
      best_value = value;
      best = comb;
    }
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }

  result.seeds = std::move(best);
  result.objective_value = best_value;
  result.evaluations_per_step.push_back(evaluated);
  return result;
}

}  // namespace infocov
