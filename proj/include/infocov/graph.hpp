#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace infocov {

using NodeId = std::uint32_t;

// One directed edge with its diffusion parameters. The values are only
// meaningful when the owning graph reports the corresponding parameter set
// as assigned.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double ic_prob = 0.0;
  double lt_weight = 0.0;
};

struct WeightScheme {
  enum class Kind { uniform_ic, trivalency, weighted_cascade };

  Kind kind = Kind::uniform_ic;
  double p = 0.0;          // uniform_ic only
  std::uint64_t seed = 0;  // trivalency only

  static WeightScheme uniform_ic(double p);
  static WeightScheme trivalency(std::uint64_t seed);
  static WeightScheme weighted_cascade();

  // Accepts "uniform:<p>", "trivalency" and "wc"; `seed` feeds trivalency.
  static WeightScheme parse(std::string_view text, std::uint64_t seed = 0);
};

struct LtViolation {
  NodeId node = 0;
  double incoming_sum = 0.0;
};

// Immutable directed graph in CSR form with one set of per-edge activation
// probabilities (IC) and one set of per-edge weights (LT) stored side by
// side. Safe to share across threads once constructed.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Rejects self-loops, duplicate (src,dst) pairs, out-of-range endpoints
  // and parameters outside [0,1]. `labels`, when non-empty, maps dense ids
  // back to the caller's node names; otherwise ids name themselves.
  DirectedGraph(NodeId node_count, std::vector<Edge> edges, bool with_ic_probs,
                bool with_lt_weights, std::vector<std::string> labels = {});

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return out_to_.size(); }

  bool has_ic_probs() const { return has_ic_; }
  bool has_lt_weights() const { return has_lt_; }

  NodeId out_degree(NodeId u) const;
  NodeId in_degree(NodeId v) const;

  // Out-edges of u occupy [out_begin(u), out_end(u)) in a global edge
  // numbering that is stable for a given edge set; the numbering doubles as
  // the per-edge randomness counter.
  std::size_t out_begin(NodeId u) const { return out_offsets_[u]; }
  std::size_t out_end(NodeId u) const { return out_offsets_[u + 1]; }
  NodeId edge_target(std::size_t e) const { return out_to_[e]; }
  NodeId edge_source(std::size_t e) const;
  double edge_ic_prob(std::size_t e) const { return ic_prob_[e]; }
  double edge_lt_weight(std::size_t e) const { return lt_weight_[e]; }

  // In-edges of v; each entry names the global index of its out-edge twin.
  std::size_t in_begin(NodeId v) const { return in_offsets_[v]; }
  std::size_t in_end(NodeId v) const { return in_offsets_[v + 1]; }
  NodeId in_source(std::size_t j) const { return in_from_[j]; }
  std::size_t in_edge_id(std::size_t j) const { return in_edge_id_[j]; }

  std::string label(NodeId u) const;
  std::optional<NodeId> id_of(std::string_view label) const;

  std::vector<Edge> edge_list() const;

  friend DirectedGraph assign_weights(DirectedGraph g, const WeightScheme& scheme);

 private:
  NodeId n_ = 0;
  bool has_ic_ = false;
  bool has_lt_ = false;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_to_;
  std::vector<double> ic_prob_;
  std::vector<double> lt_weight_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_from_;
  std::vector<std::size_t> in_edge_id_;
  std::vector<std::string> labels_;  // empty means identity labels
  std::unordered_map<std::string, NodeId> label_to_id_;
};

// Edge-list text format: `src dst [ic_prob [lt_weight]]`, whitespace
// separated, one edge per line, full-line `#` comments. All data lines must
// carry the same number of fields. A first-line `# n=<n> m=<m>` header is
// honored when every label is an integer below n, which preserves isolated
// nodes across a save/load round trip.
DirectedGraph load_graph(std::istream& in);
DirectedGraph load_graph_file(const std::string& path);
DirectedGraph load_graph_text(std::string_view text);

// Writes the same format back (header plus one line per edge, original
// labels, shortest round-trip number formatting). Emits as many parameter
// columns as are assigned.
void save_graph(const DirectedGraph& g, std::ostream& out);
void save_graph_file(const DirectedGraph& g, const std::string& path);
std::string graph_to_text(const DirectedGraph& g);

// uniform-ic sets every ic_prob to p; trivalency draws each ic_prob from
// {0.1, 0.01, 0.001}; weighted-cascade sets both ic_prob and lt_weight of
// every in-edge of v to 1/in_degree(v).
DirectedGraph assign_weights(DirectedGraph g, const WeightScheme& scheme);

// Reports every node whose incoming lt_weight sum exceeds 1 by more than
// 1e-9. Empty result means the graph is valid for the LT model.
std::vector<LtViolation> validate_lt(const DirectedGraph& g);

}  // namespace infocov
