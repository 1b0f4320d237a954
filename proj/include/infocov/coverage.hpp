#pragma once

#include <cstdint>

#include "infocov/diffusion.hpp"
#include "infocov/graph.hpp"

namespace infocov {

struct CoverageConfig {
  double lambda = 1.0;
  std::uint32_t replications = 10000;
  std::uint64_t master_seed = 0;

  void validate() const;  // lambda in [0,1], replications >= 1
};

struct CoverageEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(replications_used)
  std::uint32_t replications_used = 0;
  // Decomposition from the same replication streams: the lambda=0 and
  // lambda=1 views of the estimate are mean_active and
  // mean_active + mean_informed.
  double mean_active = 0.0;
  double mean_informed = 0.0;
};

// Monte Carlo estimate of |A| + lambda*|L| averaged over
// cfg.replications cascades on streams (master_seed, 0..R-1). Replications
// may run on several threads (INFOCOV_THREADS, default all cores); the
// result is bit-identical to sequential execution because per-replication
// values are reduced in replication order.
CoverageEstimate estimate_coverage(const DirectedGraph& g, const SeedSet& seeds,
                                   Model model, const CoverageConfig& cfg);

struct ExactCaps {
  unsigned max_ic_edges = 20;               // enumerates 2^m live-arc graphs
  std::uint64_t max_lt_choices = 1ull << 20;  // product of (in_degree+1)
};

// Exact expectation by weighted enumeration of every live-arc graph: all
// edge subsets under IC, all per-node in-edge choices under LT. Rejects
// instances beyond the caps with an estimate of the required work.
double exact_coverage(const DirectedGraph& g, const SeedSet& seeds, Model model,
                      double lambda, const ExactCaps& caps = {});

// Worker-thread count used by estimate_coverage: INFOCOV_THREADS when set,
// otherwise the hardware concurrency.
unsigned effective_thread_count();

}  // namespace infocov
