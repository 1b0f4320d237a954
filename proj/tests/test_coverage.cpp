#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "infocov/coverage.hpp"
#include "infocov/generate.hpp"
#include "oracles.hpp"

using namespace infocov;
using testutil::random_oracle_graph;
using testutil::random_seed_set;
using testutil::reference_mc_mean;

namespace {

DirectedGraph single_edge(double p) {
  return DirectedGraph(2, {{0, 1, p, p}}, true, true);
}

}  // namespace

TEST_CASE("empty seed set estimates to zero") {
  const CoverageEstimate est =
      estimate_coverage(single_edge(0.5), {}, Model::independent_cascade, {1.0, 500, 3});
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.replications_used == 500);
}

TEST_CASE("single edge at lambda=1 covers both nodes in every outcome") {
  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const CoverageEstimate est =
        estimate_coverage(single_edge(p), {0}, Model::independent_cascade, {1.0, 2000, 11});
    CHECK(est.mean == 2.0);
    CHECK(est.std_error == 0.0);
  }
}

TEST_CASE("single edge p=0.5 at lambda=0 estimates the spread 1.5") {
  const CoverageEstimate est =
      estimate_coverage(single_edge(0.5), {0}, Model::independent_cascade, {0.0, 10000, 19});
  CHECK(std::abs(est.mean - 1.5) <= 0.02);
}

TEST_CASE("exact coverage on hand-checked fixtures") {
  DirectedGraph path = assign_weights(fixture_graph("path3"), WeightScheme::uniform_ic(1.0));
  CHECK(exact_coverage(path, {0}, Model::independent_cascade, 0.7) == doctest::Approx(3.0).epsilon(1e-12));

  DirectedGraph star = assign_weights(fixture_graph("star4"), WeightScheme::uniform_ic(0.0));
  CHECK(exact_coverage(star, {0}, Model::independent_cascade, 0.5) == doctest::Approx(2.5).epsilon(1e-12));

  CHECK(exact_coverage(single_edge(0.3), {0}, Model::independent_cascade, 0.0) ==
        doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("single-edge closed form 1 + p + (1-p)*lambda") {
  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    for (double lambda : {0.0, 0.5, 1.0}) {
      const double expected = 1.0 + p + (1.0 - p) * lambda;
      CHECK(exact_coverage(single_edge(p), {0}, Model::independent_cascade, lambda) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("estimator agrees with the exact oracle on random instances") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 1 + trial % 3);
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      for (double lambda : {0.0, 0.5, 1.0}) {
        const CoverageConfig cfg{lambda, 4000, std::uint64_t(trial) * 7 + 1};
        const CoverageEstimate est = estimate_coverage(g, seeds, model, cfg);
        const double exact = exact_coverage(g, seeds, model, lambda);
        const double tol = std::max(4.0 * est.std_error, 0.02 * g.node_count());
        CHECK(std::abs(est.mean - exact) <= tol);
      }
    }
  }
}

TEST_CASE("exact coverage is monotone and submodular on random instances") {
  std::mt19937_64 rng(2002);
  int checked = 0;
  while (checked < 60) {
    const DirectedGraph g = random_oracle_graph(rng);
    const NodeId n = g.node_count();
    if (n < 3) continue;
    // M subset of N, v outside N.
    std::vector<NodeId> perm(n);
    for (NodeId i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t n_size = 1 + rng() % (n - 1);
    const std::size_t m_size = rng() % n_size;
    const NodeId v = perm[n_size];
    std::vector<NodeId> m_ids(perm.begin(), perm.begin() + m_size);
    std::vector<NodeId> n_ids(perm.begin(), perm.begin() + n_size);
    auto with = [](std::vector<NodeId> ids, NodeId extra) {
      ids.push_back(extra);
      return SeedSet{std::move(ids)};
    };
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      const double lambda = (checked % 3) * 0.5;
      const double f_m = exact_coverage(g, SeedSet{std::vector<NodeId>(m_ids)}, model, lambda);
      const double f_n = exact_coverage(g, SeedSet{std::vector<NodeId>(n_ids)}, model, lambda);
      const double f_mv = exact_coverage(g, with(m_ids, v), model, lambda);
      const double f_nv = exact_coverage(g, with(n_ids, v), model, lambda);
      CHECK(f_m <= f_n + 1e-9);                      // monotone
      CHECK(f_mv - f_m >= f_nv - f_n - 1e-9);        // submodular
    }
    ++checked;
  }
}

TEST_CASE("exact coverage is affine in lambda") {
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      const double at0 = exact_coverage(g, seeds, model, 0.0);
      const double at1 = exact_coverage(g, seeds, model, 1.0);
      const double mid = exact_coverage(g, seeds, model, 0.5);
      CHECK(mid == doctest::Approx(0.5 * (at0 + at1)).epsilon(1e-12));
      CHECK(at0 <= at1 + 1e-12);
    }
  }
}

TEST_CASE("averaged live-arc coverage agrees with the exact oracle") {
  std::mt19937_64 rng(6006);
  for (int trial = 0; trial < 5; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      const std::uint32_t R = 4000;
      double sum = 0.0;
      for (std::uint32_t i = 0; i < R; ++i)
        sum += coverage_of_outcome(g, sample_live_arc(g, model, {std::uint64_t(trial), i}),
                                   seeds, 0.5);
      const double exact = exact_coverage(g, seeds, model, 0.5);
      CHECK(std::abs(sum / R - exact) <= 0.03 * g.node_count());
    }
  }
}

TEST_CASE("estimates stay within [|S|, n] and the active part is bounded") {
  std::mt19937_64 rng(7007);
  for (int trial = 0; trial < 8; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 1 + trial % 2);
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      const CoverageConfig cfg{1.0, 1000, std::uint64_t(trial)};
      const CoverageEstimate full = estimate_coverage(g, seeds, model, cfg);
      CHECK(full.mean >= double(seeds.size()));
      CHECK(full.mean <= double(g.node_count()));
      CHECK(full.mean_active <= full.mean);
      const double lo = exact_coverage(g, seeds, model, 0.0);
      const double hi = exact_coverage(g, seeds, model, 1.0);
      CHECK(lo >= double(seeds.size()));
      CHECK(hi <= double(g.node_count()));
    }
  }
}

TEST_CASE("lambda=0 estimate equals the reference spread Monte Carlo bit-exactly") {
  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 6; ++trial) {
    const DirectedGraph g = random_oracle_graph(rng);
    const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
    for (auto model : {Model::independent_cascade, Model::linear_threshold}) {
      const CoverageConfig cfg{0.0, 3000, 77u + trial};
      const CoverageEstimate est = estimate_coverage(g, seeds, model, cfg);
      CHECK(est.mean == reference_mc_mean(g, seeds, model, 0.0, 3000, 77u + trial));
      CHECK(est.mean == est.mean_active);
      // And the lambda=1 view equals active plus informed from the same streams.
      const CoverageConfig cfg1{1.0, 3000, 77u + trial};
      const CoverageEstimate full = estimate_coverage(g, seeds, model, cfg1);
      CHECK(full.mean == reference_mc_mean(g, seeds, model, 1.0, 3000, 77u + trial));
      CHECK(full.mean_active == est.mean_active);
    }
  }
}

TEST_CASE("estimates are identical across thread counts") {
  std::mt19937_64 rng(5005);
  const DirectedGraph g = random_oracle_graph(rng);
  const SeedSet seeds = random_seed_set(rng, g.node_count(), 2);
  const CoverageConfig cfg{0.5, 5000, 31};

  setenv("INFOCOV_THREADS", "1", 1);
  const CoverageEstimate sequential = estimate_coverage(g, seeds, Model::independent_cascade, cfg);
  setenv("INFOCOV_THREADS", "5", 1);
  const CoverageEstimate threaded = estimate_coverage(g, seeds, Model::independent_cascade, cfg);
  unsetenv("INFOCOV_THREADS");

  CHECK(sequential.mean == threaded.mean);
  CHECK(sequential.std_error == threaded.std_error);
  CHECK(sequential.mean_active == threaded.mean_active);
  CHECK(sequential.mean_informed == threaded.mean_informed);
}

TEST_CASE("enumeration caps reject oversized instances with a work estimate") {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= 21; ++v) edges.push_back({0, v, 0.5, 0.04});
  const DirectedGraph wide(22, std::move(edges), true, true);
  CHECK_THROWS_WITH_AS(exact_coverage(wide, {0}, Model::independent_cascade, 1.0),
                       doctest::Contains("2^21"), std::runtime_error);

  std::vector<Edge> fan;
  for (NodeId u = 0; u < 24; ++u)
    for (NodeId v = 24; v < 30; ++v) fan.push_back({u, v, 0.5, 1.0 / 24});
  const DirectedGraph dense(30, std::move(fan), true, true);
  CHECK_THROWS_AS(exact_coverage(dense, {0}, Model::linear_threshold, 1.0), std::runtime_error);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS((CoverageConfig{1.5, 10, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CoverageConfig{0.5, 0, 0}.validate()), std::invalid_argument);
  const DirectedGraph g = single_edge(0.5);
  CHECK_THROWS_AS(estimate_coverage(g, SeedSet{{9}}, Model::independent_cascade, {1.0, 10, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_coverage(g, {0}, Model::independent_cascade, 2.0), std::invalid_argument);
}

TEST_CASE("lt exact enumeration requires a valid graph") {
  const DirectedGraph bad = load_graph_text("0 2 0.5 0.7\n1 2 0.5 0.7\n");
  CHECK_THROWS_AS(exact_coverage(bad, {0}, Model::linear_threshold, 1.0), std::invalid_argument);
}
