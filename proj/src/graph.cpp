#include "infocov/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "infocov/rng.hpp"

namespace infocov {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::uint64_t edge_key(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

WeightScheme WeightScheme::uniform_ic(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("uniform-ic probability must be in [0,1]");
  WeightScheme s;
  s.kind = Kind::uniform_ic;
  s.p = p;
  return s;
}

WeightScheme WeightScheme::trivalency(std::uint64_t seed) {
  WeightScheme s;
  s.kind = Kind::trivalency;
  s.seed = seed;
  return s;
}

WeightScheme WeightScheme::weighted_cascade() {
  WeightScheme s;
  s.kind = Kind::weighted_cascade;
  return s;
}

WeightScheme WeightScheme::parse(std::string_view text, std::uint64_t seed) {
  if (text == "wc" || text == "weighted-cascade") return weighted_cascade();
  if (text == "trivalency") return trivalency(seed);
  if (text.rfind("uniform:", 0) == 0) {
    double p = 0.0;
    if (!parse_double(text.substr(8), p))
      throw std::invalid_argument("bad uniform-ic probability in '" + std::string(text) + "'");
    return uniform_ic(p);
  }
  throw std::invalid_argument("unknown weight scheme '" + std::string(text) +
                              "' (expected uniform:<p>, trivalency or wc)");
}

DirectedGraph::DirectedGraph(NodeId node_count, std::vector<Edge> edges,
                             bool with_ic_probs, bool with_lt_weights,
                             std::vector<std::string> labels)
    : n_(node_count), has_ic_(with_ic_probs), has_lt_(with_lt_weights) {
  if (!labels.empty() && labels.size() != n_)
    throw std::invalid_argument("label table size does not match node count");
  if (edges.empty()) has_ic_ = has_lt_ = true;  // vacuously assigned

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= n_ || e.dst >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.src == e.dst)
      throw std::invalid_argument("self-loop on node " + std::to_string(e.src));
    if (i > 0 && edges[i - 1].src == e.src && edges[i - 1].dst == e.dst)
      throw std::invalid_argument("duplicate edge " + std::to_string(e.src) +
                                  " -> " + std::to_string(e.dst));
    if (with_ic_probs && !(e.ic_prob >= 0.0 && e.ic_prob <= 1.0))
      throw std::invalid_argument("ic_prob outside [0,1] on edge " +
                                  std::to_string(e.src) + " -> " + std::to_string(e.dst));
    if (with_lt_weights && !(e.lt_weight >= 0.0 && e.lt_weight <= 1.0))
      throw std::invalid_argument("lt_weight outside [0,1] on edge " +
                                  std::to_string(e.src) + " -> " + std::to_string(e.dst));
  }

  const std::size_t m = edges.size();
  out_offsets_.assign(n_ + 1, 0);
  out_to_.resize(m);
  ic_prob_.assign(m, 0.0);
  lt_weight_.assign(m, 0.0);
  for (const Edge& e : edges) ++out_offsets_[e.src + 1];
  for (NodeId u = 0; u < n_; ++u) out_offsets_[u + 1] += out_offsets_[u];
  for (std::size_t i = 0; i < m; ++i) {
    out_to_[i] = edges[i].dst;
    if (with_ic_probs) ic_prob_[i] = edges[i].ic_prob;
    if (with_lt_weights) lt_weight_[i] = edges[i].lt_weight;
  }

  // Transpose; scanning out-edges in CSR order keeps each in-list sorted by
  // source.
  in_offsets_.assign(n_ + 1, 0);
  in_from_.resize(m);
  in_edge_id_.resize(m);
  for (std::size_t e = 0; e < m; ++e) ++in_offsets_[out_to_[e] + 1];
  for (NodeId v = 0; v < n_; ++v) in_offsets_[v + 1] += in_offsets_[v];
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (NodeId u = 0; u < n_; ++u) {
    for (std::size_t e = out_offsets_[u]; e < out_offsets_[u + 1]; ++e) {
      const std::size_t slot = cursor[out_to_[e]]++;
      in_from_[slot] = u;
      in_edge_id_[slot] = e;
    }
  }

  labels_ = std::move(labels);
  for (NodeId u = 0; u < labels_.size(); ++u) label_to_id_.emplace(labels_[u], u);
}

NodeId DirectedGraph::out_degree(NodeId u) const {
  return static_cast<NodeId>(out_offsets_[u + 1] - out_offsets_[u]);
}

NodeId DirectedGraph::in_degree(NodeId v) const {
  return static_cast<NodeId>(in_offsets_[v + 1] - in_offsets_[v]);
}

NodeId DirectedGraph::edge_source(std::size_t e) const {
  auto it = std::upper_bound(out_offsets_.begin(), out_offsets_.end(), e);
  return static_cast<NodeId>(it - out_offsets_.begin() - 1);
}

std::string DirectedGraph::label(NodeId u) const {
  if (labels_.empty()) return std::to_string(u);
  return labels_[u];
}

std::optional<NodeId> DirectedGraph::id_of(std::string_view label) const {
  if (labels_.empty()) {
    std::uint64_t v = 0;
    if (!parse_u64(label, v) || v >= n_) return std::nullopt;
    return static_cast<NodeId>(v);
  }
  auto it = label_to_id_.find(std::string(label));
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> DirectedGraph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (NodeId u = 0; u < n_; ++u)
    for (std::size_t e = out_begin(u); e < out_end(u); ++e)
      edges.push_back({u, out_to_[e], ic_prob_[e], lt_weight_[e]});
  return edges;
}

namespace {

struct RawLine {
  std::vector<std::string> tokens;
  std::size_t line_no = 0;
};

[[noreturn]] void load_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

DirectedGraph load_graph(std::istream& in) {
  std::vector<RawLine> lines;
  bool have_header = false;
  std::uint64_t header_n = 0, header_m = 0;

  std::string raw;
  std::size_t line_no = 0;
  std::size_t fields = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') {
      if (line_no == 1 && tokens.size() == 3 && tokens[0] == "#" &&
          tokens[1].rfind("n=", 0) == 0 && tokens[2].rfind("m=", 0) == 0 &&
          parse_u64(std::string_view(tokens[1]).substr(2), header_n) &&
          parse_u64(std::string_view(tokens[2]).substr(2), header_m))
        have_header = true;
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 4)
      load_error(line_no, "expected `src dst [ic_prob [lt_weight]]`, got " +
                              std::to_string(tokens.size()) + " fields");
    if (fields == 0) fields = tokens.size();
    if (tokens.size() != fields)
      load_error(line_no, "inconsistent field count (" + std::to_string(tokens.size()) +
                              " here, " + std::to_string(fields) + " before)");
    lines.push_back({std::move(tokens), line_no});
  }

  // The header pins the node count only when every label is already a dense
  // integer id; otherwise labels map to ids in first-seen order.
  bool identity_ids = have_header;
  if (identity_ids) {
    if (header_n > std::uint64_t(1) << 31) identity_ids = false;
    for (const RawLine& l : lines) {
      std::uint64_t a = 0, b = 0;
      if (!parse_u64(l.tokens[0], a) || !parse_u64(l.tokens[1], b) ||
          a >= header_n || b >= header_n) {
        identity_ids = false;
        break;
      }
    }
  }
  if (identity_ids && header_m != lines.size())
    throw std::runtime_error("header claims m=" + std::to_string(header_m) +
                             " but the file has " + std::to_string(lines.size()) +
                             " edges");

  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& tok) {
    auto [it, fresh] = ids.emplace(tok, static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(tok);
    return it->second;
  };

  std::vector<Edge> edges;
  edges.reserve(lines.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(lines.size() * 2);
  for (const RawLine& l : lines) {
    Edge e;
    if (identity_ids) {
      std::uint64_t a = 0, b = 0;
      parse_u64(l.tokens[0], a);
      parse_u64(l.tokens[1], b);
      e.src = static_cast<NodeId>(a);
      e.dst = static_cast<NodeId>(b);
    } else {
      e.src = intern(l.tokens[0]);
      e.dst = intern(l.tokens[1]);
    }
    if (e.src == e.dst)
      load_error(l.line_no, "self-loop on node " + l.tokens[0]);
    if (!seen.insert(edge_key(e.src, e.dst)).second)
      load_error(l.line_no, "duplicate edge " + l.tokens[0] + " -> " + l.tokens[1]);
    if (fields >= 3) {
      if (!parse_double(l.tokens[2], e.ic_prob) || e.ic_prob < 0.0 || e.ic_prob > 1.0)
        load_error(l.line_no, "ic_prob '" + l.tokens[2] + "' is not a probability");
    }
    if (fields == 4) {
      if (!parse_double(l.tokens[3], e.lt_weight) || e.lt_weight < 0.0 || e.lt_weight > 1.0)
        load_error(l.line_no, "lt_weight '" + l.tokens[3] + "' is not in [0,1]");
    }
    edges.push_back(e);
  }

  const NodeId n = identity_ids ? static_cast<NodeId>(header_n)
                                : static_cast<NodeId>(labels.size());
  return DirectedGraph(n, std::move(edges), fields >= 3, fields == 4,
                       identity_ids ? std::vector<std::string>{} : std::move(labels));
}

DirectedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return load_graph(in);
}

DirectedGraph load_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

void save_graph(const DirectedGraph& g, std::ostream& out) {
  if (g.has_lt_weights() && !g.has_ic_probs())
    throw std::runtime_error(
        "edge-list format cannot carry lt weights without ic probabilities");
  out << "# n=" << g.node_count() << " m=" << g.edge_count() << "\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
      out << g.label(u) << ' ' << g.label(g.edge_target(e));
      if (g.has_ic_probs()) out << ' ' << format_double(g.edge_ic_prob(e));
      if (g.has_lt_weights()) out << ' ' << format_double(g.edge_lt_weight(e));
      out << '\n';
    }
  }
}

void save_graph_file(const DirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  save_graph(g, out);
}

std::string graph_to_text(const DirectedGraph& g) {
  std::ostringstream out;
  save_graph(g, out);
  return out.str();
}

DirectedGraph assign_weights(DirectedGraph g, const WeightScheme& scheme) {
  switch (scheme.kind) {
    case WeightScheme::Kind::uniform_ic: {
      if (!(scheme.p >= 0.0 && scheme.p <= 1.0))
        throw std::invalid_argument("uniform-ic probability must be in [0,1]");
      std::fill(g.ic_prob_.begin(), g.ic_prob_.end(), scheme.p);
      g.has_ic_ = true;
      break;
    }
    case WeightScheme::Kind::trivalency: {
      static constexpr double kLevels[3] = {0.1, 0.01, 0.001};
      const ReplicationStream stream{scheme.seed, 0};
      for (std::size_t e = 0; e < g.ic_prob_.size(); ++e)
        g.ic_prob_[e] = kLevels[stream.below(RngDomain::trivalency, e, 3)];
      g.has_ic_ = true;
      break;
    }
    case WeightScheme::Kind::weighted_cascade: {
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const NodeId d = g.in_degree(v);
        if (d == 0) continue;
        const double w = 1.0 / d;
        for (std::size_t j = g.in_begin(v); j < g.in_end(v); ++j) {
          const std::size_t e = g.in_edge_id(j);
          g.ic_prob_[e] = w;
          g.lt_weight_[e] = w;
        }
      }
      g.has_ic_ = true;
      g.has_lt_ = true;
      break;
    }
  }
  return g;
}

std::vector<LtViolation> validate_lt(const DirectedGraph& g) {
  if (!g.has_lt_weights())
    throw std::invalid_argument("lt weights are not assigned");
  std::vector<LtViolation> violations;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double sum = 0.0;
    for (std::size_t j = g.in_begin(v); j < g.in_end(v); ++j)
      sum += g.edge_lt_weight(g.in_edge_id(j));
    if (sum > 1.0 + 1e-9) violations.push_back({v, sum});
  }
  return violations;
}

}  // namespace infocov
