#include "infocov/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "infocov/rng.hpp"

namespace infocov {

DirectedGraph erdos_renyi(NodeId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must be in [0,1]");
  const ReplicationStream stream{seed, 0};
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::uint64_t pair = static_cast<std::uint64_t>(u) * n + v;
      if (stream.uniform(RngDomain::er_edge, pair) < p) edges.push_back({u, v});
    }
  }
  return DirectedGraph(n, std::move(edges), false, false);
}

DirectedGraph scale_free(NodeId n, NodeId attach, std::uint64_t seed) {
  if (attach < 1) throw std::invalid_argument("attach count must be at least 1");
  if (n <= attach)
    throw std::invalid_argument("node count must exceed the attach count");

  const ReplicationStream stream{seed, 0};
  std::uint64_t counter = 0;

  // Endpoint pool realizes degree-proportional sampling; the initial nodes
  // are seeded once each so the first newcomer can find targets.
  std::vector<NodeId> pool;
  pool.reserve(static_cast<std::size_t>(n) * 2 * attach);
  for (NodeId v = 0; v < attach; ++v) pool.push_back(v);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - attach) * attach);
  std::vector<NodeId> targets;
  for (NodeId newcomer = attach; newcomer < n; ++newcomer) {
    targets.clear();
    while (targets.size() < attach) {
      const NodeId candidate = pool[stream.below(RngDomain::ba_attach, counter++, pool.size())];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
        targets.push_back(candidate);
    }
    for (NodeId t : targets) {
      edges.push_back({t, newcomer});
      pool.push_back(t);
      pool.push_back(newcomer);
    }
  }
  return DirectedGraph(n, std::move(edges), false, false);
}

DirectedGraph fixture_graph(std::string_view name) {
  auto bare = [](NodeId n, std::vector<Edge> edges) {
    return DirectedGraph(n, std::move(edges), false, false);
  };
  if (name == "single-edge") return bare(2, {{0, 1}});
  if (name == "path3") return bare(3, {{0, 1}, {1, 2}});
  if (name == "star4") return bare(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name == "two-stars")
    return bare(7, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}});
  // Overlapping stars: 1 -> {3,4,6,7}, 0 -> {3,4,5}, 2 -> {8,9}. Nodes 0 and
  // 1 share two out-neighbors, which separates effective-degree ranking from
  // the raw degree order.
  if (name == "overlap")
    return bare(10, {{1, 3}, {1, 4}, {1, 6}, {1, 7}, {0, 3}, {0, 4}, {0, 5}, {2, 8}, {2, 9}});
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"single-edge", "path3", "star4", "two-stars", "overlap"};
}

}  // namespace infocov
