#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "infocov/diffusion.hpp"
#include "infocov/generate.hpp"
#include "oracles.hpp"

using namespace infocov;
using testutil::brute_informed;
using testutil::random_oracle_graph;
using testutil::random_seed_set;

namespace {

DirectedGraph single_edge(double p) {
  return DirectedGraph(2, {{0, 1, p, p}}, true, true);
}

}  // namespace

TEST_CASE("empty seed set yields an empty outcome") {
  const DirectedGraph g = single_edge(1.0);
  for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
    const CascadeOutcome out = model == Model::independent_cascade
                                   ? simulate_ic(g, {}, {1, 0})
                                   : simulate_lt(g, {}, {1, 0});
    CHECK(out.active.empty());
    CHECK(out.informed.empty());
  }
}

TEST_CASE("certain activation under IC") {
  const CascadeOutcome out = simulate_ic(single_edge(1.0), {0}, {7, 0});
  CHECK(out.active == std::vector<NodeId>{0, 1});
  CHECK(out.informed.empty());
}

TEST_CASE("single edge p=0.5: Bernoulli activation, always covered") {
  const DirectedGraph g = single_edge(0.5);
  int activations = 0;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    const CascadeOutcome out = simulate_ic(g, {0}, {11, std::uint64_t(i)});
    const bool v_active = out.active.size() == 2;
    const bool v_informed = out.informed.size() == 1;
    CHECK(v_active != v_informed);  // v is exactly one of the two
    if (v_active) ++activations;
  }
  CHECK(std::abs(activations / double(runs) - 0.5) < 0.02);
}

TEST_CASE("LT weight 1 always activates, weight 0 never does") {
  const DirectedGraph g = single_edge(1.0);
  const DirectedGraph zero(2, {{0, 1, 0.0, 0.0}}, true, true);
  for (int i = 0; i < 2000; ++i) {
    CHECK(simulate_lt(g, {0}, {3, std::uint64_t(i)}).active.size() == 2);
    const CascadeOutcome out = simulate_lt(zero, {0}, {3, std::uint64_t(i)});
    CHECK(out.active.size() == 1);
    CHECK(out.informed == std::vector<NodeId>{1});
  }
}

TEST_CASE("LT: one of two half-weight sources fires half the time") {
  const DirectedGraph g(3, {{0, 2, 0.0, 0.5}, {1, 2, 0.0, 0.5}}, true, true);
  int activations = 0;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i)
    if (simulate_lt(g, {0}, {17, std::uint64_t(i)}).active.size() == 2) ++activations;
  CHECK(std::abs(activations / double(runs) - 0.5) < 0.02);
}

TEST_CASE("live-arc sampling at the probability extremes") {
  DirectedGraph g = fixture_graph("star4");
  g = assign_weights(std::move(g), WeightScheme::uniform_ic(1.0));
  CHECK(sample_live_arc(g, Model::independent_cascade, {5, 0}).live_count() == g.edge_count());
  g = assign_weights(std::move(g), WeightScheme::uniform_ic(0.0));
  CHECK(sample_live_arc(g, Model::independent_cascade, {5, 0}).live_count() == 0);
}

TEST_CASE("LT live-arc picks in-edges with their weights") {
  const DirectedGraph g(3, {{0, 2, 0.0, 0.3}, {1, 2, 0.0, 0.2}}, true, true);
  int counts[3] = {0, 0, 0};  // edge from 0, edge from 1, none
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    const LiveArcGraph live = sample_live_arc(g, Model::linear_threshold, {23, std::uint64_t(i)});
    if (live.live_count() == 0)
      ++counts[2];
    else
      ++counts[live.is_live(g.out_begin(0)) ? 0 : 1];
  }
  CHECK(std::abs(counts[0] - 3000) <= 150);
  CHECK(std::abs(counts[1] - 2000) <= 150);
  CHECK(std::abs(counts[2] - 5000) <= 150);
}

TEST_CASE("IC cascade equals live-arc reachability on the same stream") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const ReplicationStream stream{std::uint64_t(trial), i};
      const CascadeOutcome out = simulate_ic(g, seeds, stream);
      const LiveArcGraph live = sample_live_arc(g, Model::independent_cascade, stream);
      CHECK(out.active == live.reachable(seeds));
    }
  }
}

TEST_CASE("informed sets match the brute-force scan") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 1 + trial % 3);
    for (std::uint64_t i = 0; i < 50; ++i) {
      for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
        const CascadeOutcome out = model == Model::independent_cascade
                                       ? simulate_ic(g, seeds, {99, i})
                                       : simulate_lt(g, seeds, {99, i});
        CHECK(out.informed == brute_informed(g, out.active));
        // Seeds stay active; the two sets never overlap.
        for (NodeId s : seeds.ids())
          CHECK(std::binary_search(out.active.begin(), out.active.end(), s));
        std::vector<NodeId> overlap;
        std::set_intersection(out.active.begin(), out.active.end(),
                              out.informed.begin(), out.informed.end(),
                              std::back_inserter(overlap));
        CHECK(overlap.empty());
      }
    }
  }
}

TEST_CASE("simulations are deterministic given the stream") {
  std::mt19937_64 rng(606);
  const DirectedGraph g = random_oracle_graph(rng);
  const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const CascadeOutcome a = simulate_ic(g, seeds, {42, i});
    const CascadeOutcome b = simulate_ic(g, seeds, {42, i});
    CHECK(a.active == b.active);
    CHECK(a.informed == b.informed);
    const CascadeOutcome c = simulate_lt(g, seeds, {42, i});
    const CascadeOutcome d = simulate_lt(g, seeds, {42, i});
    CHECK(c.active == d.active);
    CHECK(c.informed == d.informed);
  }
}

TEST_CASE("IC with certain edges activates the reachable set exactly") {
  DirectedGraph g = fixture_graph("path3");
  g = assign_weights(std::move(g), WeightScheme::uniform_ic(1.0));
  const CascadeOutcome out = simulate_ic(g, {0}, {0, 0});
  CHECK(out.active == std::vector<NodeId>{0, 1, 2});
  CHECK(out.informed.empty());
}

TEST_CASE("coverage of an outcome") {
  const DirectedGraph g = single_edge(0.5);
  const CascadeOutcome one_informed{{0}, {1}};
  CHECK(coverage_of_outcome(g, one_informed, 1.0) == 2.0);
  CHECK(coverage_of_outcome(g, one_informed, 0.0) == 1.0);
  const CascadeOutcome mixed{{0, 1}, {2, 3, 4}};
  CHECK(coverage_of_outcome(g, mixed, 0.5) == 3.5);
  CHECK_THROWS_AS(coverage_of_outcome(g, mixed, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(coverage_of_outcome(g, mixed, -0.1), std::invalid_argument);
}

TEST_CASE("live-arc coverage counts informed nodes over the original edges") {
  DirectedGraph star = assign_weights(fixture_graph("star4"), WeightScheme::uniform_ic(0.0));
  const LiveArcGraph live = sample_live_arc(star, Model::independent_cascade, {1, 0});
  CHECK(live.reachable({0}) == std::vector<NodeId>{0});
  // No live arcs, but the three leaves are still informed neighbors.
  CHECK(coverage_of_outcome(star, live, {0}, 0.5) == 2.5);
  CHECK(coverage_of_outcome(star, live, {0}, 0.0) == 1.0);
}

TEST_CASE("coverage bounds hold across random outcomes") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
    for (std::uint64_t i = 0; i < 50; ++i) {
      const double c = coverage_of_outcome(g, simulate_ic(g, seeds, {13, i}), 1.0);
      CHECK(c >= double(seeds.size()));
      CHECK(c <= double(g.node_count()));
    }
  }
}

TEST_CASE("seed validation") {
  const DirectedGraph g = single_edge(0.5);
  CHECK_THROWS_AS(simulate_ic(g, SeedSet{{7}}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SeedSet({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(parse_model("bogus"), std::invalid_argument);
  CHECK(parse_model("ic") == Model::independent_cascade);
  CHECK(model_name(Model::linear_threshold) == "lt");
}

TEST_CASE("simulating without parameters is rejected") {
  const DirectedGraph bare = fixture_graph("single-edge");
  CHECK_THROWS_AS(simulate_ic(bare, {0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(simulate_lt(bare, {0}, {0, 0}), std::invalid_argument);
}
