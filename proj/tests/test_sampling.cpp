#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "graphonlab/graphonlab.hpp"
#include "oracles.hpp"

using namespace graphonlab;

TEST_CASE("sample_weighted endpoints") {
  const WeightedGraph hp = sample_weighted(20, StepGraphon::constant(0.35), 5);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) CHECK(hp.weight(i, j) == (i == j ? 0.0 : 0.35));

  const WeightedGraph h0 = sample_weighted(10, StepGraphon::constant(0.0), 5);
  for (double w : h0.weights) CHECK(w == 0.0);

  CHECK_THROWS_AS(sample_weighted(0, StepGraphon::constant(0.5), 1), invalid_input);
  CHECK_THROWS_AS(sample_weighted(5, StepGraphon({1.0}, {1.5}, false), 1), invalid_input);
}

TEST_CASE("sampled block proportions follow the masses") {
  const StepGraphon w({0.3, 0.7}, {0.9, 0.1, 0.1, 0.5}, true);
  CounterRng seeds(31);
  const int n = 400;
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph h = sample_weighted(n, w, seeds.next_u64());
    int low = 0;
    for (double x : h.coords) low += x <= 0.3;
    if (std::abs(low / static_cast<double>(n) - 0.3) > 3.0 / std::sqrt(n)) ++failures;
  }
  CHECK(failures <= 1);
}

TEST_CASE("bernoulli_round endpoints and counts") {
  WeightedGraph ones;
  ones.n = 10;
  ones.weights.assign(100, 1.0);
  for (int i = 0; i < 10; ++i) ones.weights[i * 10 + i] = 0.0;
  const FiniteGraph complete = bernoulli_round(ones, 3);
  CHECK(static_cast<int>(complete.edges().size()) == 45);

  WeightedGraph zeros;
  zeros.n = 10;
  zeros.weights.assign(100, 0.0);
  CHECK(bernoulli_round(zeros, 3).edges().empty());

  // edge count matches the binomial mean within four standard errors
  const double p = 0.3;
  const int n = 40;
  const int pairs = n * (n - 1) / 2;
  CounterRng seeds(777);
  double total = 0.0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    WeightedGraph h;
    h.n = n;
    h.weights.assign(static_cast<std::size_t>(n) * n, p);
    for (int i = 0; i < n; ++i) h.weights[static_cast<std::size_t>(i) * n + i] = 0.0;
    total += static_cast<double>(bernoulli_round(h, seeds.next_u64()).edges().size());
  }
  const double mean = total / trials;
  const double se = std::sqrt(pairs * p * (1 - p) / trials);
  CHECK(std::abs(mean - pairs * p) <= 4.0 * se);
}

TEST_CASE("sample_graph endpoints and determinism") {
  CHECK(static_cast<int>(sample_graph(15, StepGraphon::constant(1.0), 9).edges().size()) ==
        15 * 14 / 2);
  CHECK(sample_graph(15, StepGraphon::constant(0.0), 9).edges().empty());

  const StepGraphon w({0.5, 0.5}, {0.8, 0.2, 0.2, 0.8}, true);
  const FiniteGraph a = sample_graph(64, w, 1234);
  const FiniteGraph b = sample_graph(64, w, 1234);
  CHECK(a.edges() == b.edges());
  const FiniteGraph c = sample_graph(64, w, 1235);
  CHECK(a.edges() != c.edges());
}

TEST_CASE("edge and triangle density helpers agree with hom densities") {
  CounterRng rng(2468);
  for (int trial = 0; trial < 25; ++trial) {
    const FiniteGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng.next_below(8)), 0.5);
    CHECK(edge_density(g) == doctest::Approx(hom_density_graph(motif("K2"), g)).epsilon(1e-14));
    CHECK(triangle_density(g) ==
          doctest::Approx(hom_density_graph(motif("K3"), g)).epsilon(1e-14));
  }
}

TEST_CASE("relabeling a sample leaves hom densities unchanged") {
  CounterRng rng(1357);
  const StepGraphon w({0.5, 0.5}, {0.9, 0.2, 0.2, 0.6}, true);
  for (int trial = 0; trial < 10; ++trial) {
    const FiniteGraph g = sample_graph(10, w, rng.next_u64());
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 9; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);
    const FiniteGraph gp = g.relabel(perm);
    CHECK(hom_count(motif("K3"), g) == hom_count(motif("K3"), gp));
    CHECK(hom_count(motif("P4"), g) == hom_count(motif("P4"), gp));
  }
}

TEST_CASE("edge density is unbiased within four standard errors") {
  const StepGraphon w({0.25, 0.75}, {0.9, 0.3, 0.3, 0.5}, true);
  const double t = hom_density_graphon(motif("K2"), w);
  const int n = 50;
  CounterRng seeds(97);
  std::vector<double> vals;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i)
    vals.push_back(edge_density(sample_graph(n, w, seeds.next_u64())));
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= trials;
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var /= trials - 1;
  const double se = std::sqrt(var / trials);
  // diagonal-free sampling biases by O(1/n)
  CHECK(std::abs(mean - t) <= 4.0 * se + 2.0 * t / n);
}

TEST_CASE("concentration_curve medians shrink") {
  const StepGraphon w({0.3, 0.7}, {0.8, 0.2, 0.2, 0.8}, true);
  const std::vector<int> grid{50, 100, 200};
  const auto rows = concentration_curve(w, grid, 21, 424242);

  CHECK(rows.size() == grid.size() * 21 * 3);
  for (const char* stat : {"k2_gap", "k3_gap", "cut_dist"}) {
    std::vector<double> med;
    for (int n : grid) med.push_back(experiment_median(rows, n, stat));
    for (std::size_t i = 1; i < med.size(); ++i) CHECK(med[i] <= med[i - 1] * 1.10 + 1e-12);
  }

  // the zero graphon samples to the empty graph at distance zero
  const auto zero_rows = concentration_curve(StepGraphon::constant(0.0), {20, 40}, 3, 7);
  for (const auto& r : zero_rows) CHECK(r.value == 0.0);

  CHECK_THROWS_AS(concentration_curve(w, {600}, 2, 1), invalid_input);
  CHECK_THROWS_AS(concentration_curve(w, {50}, 0, 1), invalid_input);
}
