#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "infocov/coverage.hpp"
#include "infocov/diffusion.hpp"
#include "infocov/graph.hpp"

namespace infocov {

struct SelectionResult {
  std::vector<NodeId> seeds;           // in pick order (ascending for exhaustive)
  std::vector<double> marginal_gains;  // per-step gain or heuristic score
  // Objective evaluations per greedy step, excluding the n initial singleton
  // evaluations; empty for selectors that never call the objective, one
  // total for exhaustive search.
  std::vector<std::uint64_t> evaluations_per_step;
  std::optional<double> objective_value;
};

enum class GainEvaluator { monte_carlo, exact };

GainEvaluator parse_evaluator(std::string_view name);  // "monte-carlo" | "exact"

// Lazy-forward greedy: seed every node's gain with its singleton value, then
// repeatedly pop the largest cached gain; a gain stamped at the current set
// size is final (submodularity makes stale gains upper bounds), otherwise it
// is recomputed and reinserted. Ties break toward the smallest id.
SelectionResult lazy_greedy(const DirectedGraph& g, Model model, std::uint32_t k,
                            const CoverageConfig& cfg, GainEvaluator evaluator,
                            const ExactCaps& caps = {});

// Degree heuristic: pick the node with the largest effective degree
// (out-degree minus already-covered out-neighbors), add its out-neighbors
// to the covered set, repeat. Model-free; objective_value is left unset.
SelectionResult effective_degree_rank(const DirectedGraph& g, std::uint32_t k);

// Top-k by raw out-degree, ties toward the smallest id.
SelectionResult baseline_out_degree(const DirectedGraph& g, std::uint32_t k);

// Uniform k-subset without replacement, deterministic for a given seed.
SelectionResult baseline_random(const DirectedGraph& g, std::uint32_t k,
                                std::uint64_t seed);

// True argmax over all k-subsets by exact_coverage; ties resolve to the
// lexicographically smallest set. Intended for small instances.
SelectionResult exhaustive_optimal(const DirectedGraph& g, Model model,
                                   std::uint32_t k, double lambda,
                                   const ExactCaps& caps = {},
                                   std::uint64_t max_subsets = 100000);

}  // namespace infocov
