#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "infocov/graph.hpp"

namespace infocov {

// Directed G(n,p): every ordered pair (u,v), u != v, independently with
// probability p. Deterministic for a given seed. O(n^2) draws, desk scale.
DirectedGraph erdos_renyi(NodeId n, double p, std::uint64_t seed);

// Preferential attachment: nodes attach..n-1 arrive in turn and receive
// `attach` in-edges from distinct existing nodes drawn proportionally to
// degree, so the edge count is exactly (n - attach) * attach. Edges point
// from the chosen (popular) node to the newcomer.
DirectedGraph scale_free(NodeId n, NodeId attach, std::uint64_t seed);

// Tiny named graphs shared by the unit tests and the generate command:
// single-edge, path3, star4, two-stars, overlap.
DirectedGraph fixture_graph(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace infocov
