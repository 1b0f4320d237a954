#include "infocov/diffusion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace infocov {

Model parse_model(std::string_view name) {
  if (name == "ic") return Model::independent_cascade;
  if (name == "lt") return Model::linear_threshold;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected ic or lt)");
}

std::string_view model_name(Model model) {
  return model == Model::independent_cascade ? "ic" : "lt";
}

SeedSet::SeedSet(std::initializer_list<NodeId> ids) : SeedSet(std::vector<NodeId>(ids)) {}

SeedSet::SeedSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end())
    throw std::invalid_argument("duplicate seed " + std::to_string(*dup));
}

bool SeedSet::contains(NodeId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void validate_seeds(const DirectedGraph& g, const SeedSet& seeds) {
  if (!seeds.empty() && seeds.ids().back() >= g.node_count())
    throw std::invalid_argument("seed " + std::to_string(seeds.ids().back()) +
                                " out of range (n=" + std::to_string(g.node_count()) + ")");
}

LiveArcGraph::LiveArcGraph(const DirectedGraph& g, std::vector<std::uint8_t> live)
    : g_(&g), live_(std::move(live)) {
  if (live_.size() != g.edge_count())
    throw std::invalid_argument("live-arc mask size does not match edge count");
}

std::size_t LiveArcGraph::live_count() const {
  return static_cast<std::size_t>(std::count(live_.begin(), live_.end(), 1));
}

std::vector<NodeId> LiveArcGraph::reachable(const SeedSet& seeds) const {
  const DirectedGraph& g = *g_;
  validate_seeds(g, seeds);
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<NodeId> stack(seeds.ids());
  for (NodeId s : stack) seen[s] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
      const NodeId v = g.edge_target(e);
      if (live_[e] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

namespace {

std::vector<NodeId> informed_from_flags(const DirectedGraph& g,
                                        const std::vector<std::uint8_t>& active) {
  std::vector<std::uint8_t> informed(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!active[u]) continue;
    for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
      const NodeId v = g.edge_target(e);
      if (!active[v]) informed[v] = 1;
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (informed[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<NodeId> informed_neighbors(const DirectedGraph& g,
                                       const std::vector<NodeId>& active) {
  std::vector<std::uint8_t> flags(g.node_count(), 0);
  for (NodeId u : active) flags[u] = 1;
  return informed_from_flags(g, flags);
}

CascadeOutcome simulate_ic(const DirectedGraph& g, const SeedSet& seeds,
                           const ReplicationStream& stream) {
  if (!g.has_ic_probs())
    throw std::invalid_argument("ic probabilities are not assigned");
  validate_seeds(g, seeds);

  std::vector<std::uint8_t> active(g.node_count(), 0);
  std::vector<NodeId> frontier(seeds.ids());
  std::vector<NodeId> all_active(seeds.ids());
  for (NodeId s : frontier) active[s] = 1;

  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId u : frontier) {
      for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
        const NodeId v = g.edge_target(e);
        if (!active[v] && stream.uniform(RngDomain::ic_edge, e) < g.edge_ic_prob(e)) {
          active[v] = 1;
          next.push_back(v);
        }
      }
    }
    // Fixed ascending processing order per round; the activation
    // distribution does not depend on it.
    std::sort(next.begin(), next.end());
    all_active.insert(all_active.end(), next.begin(), next.end());
    frontier.swap(next);
  }

  std::sort(all_active.begin(), all_active.end());
  return {std::move(all_active), informed_from_flags(g, active)};
}

CascadeOutcome simulate_lt(const DirectedGraph& g, const SeedSet& seeds,
                           const ReplicationStream& stream) {
  if (!g.has_lt_weights())
    throw std::invalid_argument("lt weights are not assigned");
  validate_seeds(g, seeds);

  const NodeId n = g.node_count();
  std::vector<std::uint8_t> active(n, 0);
  std::vector<double> incoming(n, 0.0);
  std::vector<double> threshold(n, -1.0);  // drawn on first touch
  auto threshold_of = [&](NodeId v) {
    if (threshold[v] < 0.0)
      threshold[v] = stream.uniform_open_closed(RngDomain::lt_threshold, v);
    return threshold[v];
  };

  std::vector<NodeId> frontier(seeds.ids());
  std::vector<NodeId> all_active(seeds.ids());
  for (NodeId s : frontier) active[s] = 1;

  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId u : frontier) {
      for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
        const NodeId v = g.edge_target(e);
        if (active[v]) continue;
        incoming[v] += g.edge_lt_weight(e);
        if (incoming[v] >= threshold_of(v)) {
          active[v] = 1;
          next.push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    all_active.insert(all_active.end(), next.begin(), next.end());
    frontier.swap(next);
  }

  std::sort(all_active.begin(), all_active.end());
  return {std::move(all_active), informed_from_flags(g, active)};
}

LiveArcGraph sample_live_arc(const DirectedGraph& g, Model model,
                             const ReplicationStream& stream) {
  std::vector<std::uint8_t> live(g.edge_count(), 0);
  if (model == Model::independent_cascade) {
    if (!g.has_ic_probs())
      throw std::invalid_argument("ic probabilities are not assigned");
    // Same domain and counters as simulate_ic, so the two are coupled per
    // replication, not merely equal in distribution.
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      live[e] = stream.uniform(RngDomain::ic_edge, e) < g.edge_ic_prob(e) ? 1 : 0;
  } else {
    if (!g.has_lt_weights())
      throw std::invalid_argument("lt weights are not assigned");
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const double u = stream.uniform(RngDomain::lt_arc_choice, v);
      double cum = 0.0;
      for (std::size_t j = g.in_begin(v); j < g.in_end(v); ++j) {
        const std::size_t e = g.in_edge_id(j);
        const double w = g.edge_lt_weight(e);
        if (u < cum + w) {
          live[e] = 1;
          break;
        }
        cum += w;
      }
    }
  }
  return LiveArcGraph(g, std::move(live));
}

double coverage_of_outcome(const DirectedGraph&, const CascadeOutcome& outcome,
                           double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must be in [0,1]");
  return static_cast<double>(outcome.active.size()) +
         lambda * static_cast<double>(outcome.informed.size());
}

double coverage_of_outcome(const DirectedGraph& g, const LiveArcGraph& live,
                           const SeedSet& seeds, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must be in [0,1]");
  if (&live.base() != &g)
    throw std::invalid_argument("live-arc graph was sampled from a different graph");
  const std::vector<NodeId> active = live.reachable(seeds);
  const std::vector<NodeId> informed = informed_neighbors(g, active);
  return static_cast<double>(active.size()) + lambda * static_cast<double>(informed.size());
}

}  // namespace infocov
