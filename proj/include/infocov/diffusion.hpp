#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "infocov/graph.hpp"
#include "infocov/rng.hpp"

namespace infocov {

enum class Model { independent_cascade, linear_threshold };

Model parse_model(std::string_view name);  // "ic" | "lt"
std::string_view model_name(Model model);

// Sorted duplicate-free set of seed nodes.
class SeedSet {
 public:
  SeedSet() = default;
  SeedSet(std::initializer_list<NodeId> ids);
  explicit SeedSet(std::vector<NodeId> ids);  // sorts; rejects duplicates

  const std::vector<NodeId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(NodeId v) const;

 private:
  std::vector<NodeId> ids_;
};

// Throws if any seed id is outside [0, n).
void validate_seeds(const DirectedGraph& g, const SeedSet& seeds);

// End state of one cascade. `active` holds seeds plus everything activated;
// `informed` holds the still-inactive out-neighbors of active nodes. Both
// are ascending and disjoint.
struct CascadeOutcome {
  std::vector<NodeId> active;
  std::vector<NodeId> informed;
};

// A sampled deterministic subgraph: reachability from a seed set over the
// live arcs reproduces the cascade's active-set distribution. Holds a
// reference to the base graph, which must outlive it.
class LiveArcGraph {
 public:
  LiveArcGraph(const DirectedGraph& g, std::vector<std::uint8_t> live);

  const DirectedGraph& base() const { return *g_; }
  bool is_live(std::size_t e) const { return live_[e] != 0; }
  std::size_t live_count() const;
  std::vector<NodeId> reachable(const SeedSet& seeds) const;  // ascending

 private:
  const DirectedGraph* g_;
  std::vector<std::uint8_t> live_;
};

// Independent cascade: each newly active node gets one chance per inactive
// out-neighbor, succeeding with the edge's ic_prob. The per-edge coin is a
// pure function of (stream, edge index), so the outcome coincides with
// reachability over sample_live_arc of the same stream.
CascadeOutcome simulate_ic(const DirectedGraph& g, const SeedSet& seeds,
                           const ReplicationStream& stream);

// Linear threshold: every node draws a threshold once per replication and
// activates when the weight of its active in-neighbors reaches it. Callers
// are expected to have checked validate_lt once per graph.
CascadeOutcome simulate_lt(const DirectedGraph& g, const SeedSet& seeds,
                           const ReplicationStream& stream);

// IC keeps each edge independently with its ic_prob; LT lets each node keep
// at most one in-edge, edge j with probability lt_weight(j) and none with
// the remainder.
LiveArcGraph sample_live_arc(const DirectedGraph& g, Model model,
                             const ReplicationStream& stream);

// Inactive out-neighbors of the given active set, over the graph's full
// edge set. `active` must be ascending.
std::vector<NodeId> informed_neighbors(const DirectedGraph& g,
                                       const std::vector<NodeId>& active);

// |active| + lambda * |informed|.
double coverage_of_outcome(const DirectedGraph& g, const CascadeOutcome& outcome,
                           double lambda);

// Reachable set over live arcs plus lambda times its inactive out-neighbors
// counted over the *original* graph edges.
double coverage_of_outcome(const DirectedGraph& g, const LiveArcGraph& live,
                           const SeedSet& seeds, double lambda);

}  // namespace infocov
