#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphonlab/graphonlab.hpp"
#include "oracles.hpp"

using namespace graphonlab;

TEST_CASE("hom_count brute force values") {
  CHECK(hom_count(motif("K2"), motif("K3")) == 6);
  CHECK(hom_count(motif("K3"), motif("K2")) == 0);
  const FiniteGraph single(1, {});
  CHECK(hom_count(single, motif("C4")) == 4);
  CHECK(hom_count(single, motif("K3")) == 3);
  CHECK_THROWS_AS(hom_count(FiniteGraph(7, {}), motif("K2")), invalid_input);
}

TEST_CASE("hom_count equals the recursive oracle") {
  CounterRng rng(1123);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteGraph h = oracle::random_graph(rng, 2 + static_cast<int>(rng.next_below(3)), 0.6);
    const FiniteGraph g = oracle::random_graph(rng, 1 + static_cast<int>(rng.next_below(7)), 0.5);
    CHECK(hom_count(h, g) == oracle::hom_count_recursive(h, g));
  }
}

TEST_CASE("hom_density_graph") {
  CHECK(hom_density_graph(motif("K2"), motif("K3")) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(hom_density_graph(motif("K2"), FiniteGraph(4, {})) == 0.0);
  CHECK(hom_density_graph(FiniteGraph(1, {}), motif("C4")) == 1.0);
}

TEST_CASE("hom_density_graphon closed forms") {
  const StepGraphon p = StepGraphon::constant(0.5);
  CHECK(hom_density_graphon(motif("K2"), p) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hom_density_graphon(motif("K3"), p) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(hom_density_graphon(motif("P3"), p) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(hom_density_graphon(motif("K2"), StepGraphon({1.0}, {1.5}, false)),
                  invalid_input);
}

TEST_CASE("embedding compatibility t(H, f^G) = t(H, G)") {
  CounterRng rng(88);
  const char* motifs[] = {"K2", "K3", "P3", "P4", "C4", "star3"};
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteGraph g = oracle::random_graph(rng, 2 + static_cast<int>(rng.next_below(6)), 0.5);
    const FiniteGraph h = motif(motifs[rng.next_below(6)]);
    CHECK(hom_density_graphon(h, graph_to_graphon(g)) ==
          doctest::Approx(hom_density_graph(h, g)).epsilon(1e-12));
  }
}

TEST_CASE("hom_density_graphon equals recursive oracle on random graphons") {
  CounterRng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const StepGraphon w = oracle::random_graphon(rng, 1 + static_cast<int>(rng.next_below(5)));
    const FiniteGraph h = motif(trial % 2 ? "P4" : "K3");
    CHECK(hom_density_graphon(h, w) ==
          doctest::Approx(oracle::hom_density_graphon_recursive(h, w)).epsilon(1e-13));
  }
}

TEST_CASE("labelled_density") {
  const StepGraphon p = StepGraphon::constant(0.6, 2);
  const StepFunction k2p = labelled_density(labelled_motif("K2"), p);
  CHECK(k2p.value(0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(k2p.value(1) == doctest::Approx(0.6).epsilon(1e-15));

  const StepFunction p3p = labelled_density(labelled_motif("P3"), p);
  CHECK(p3p.value(0) == doctest::Approx(0.36).epsilon(1e-14));

  CounterRng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const StepGraphon w = oracle::random_graphon(rng, 1 + static_cast<int>(rng.next_below(6)));
    const StepFunction lab = labelled_density(labelled_motif("K2"), w);
    const StepFunction deg = w.degree_function();
    for (int b = 0; b < w.block_count(); ++b)
      CHECK(lab.value(b) == doctest::Approx(deg.value(b)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(labelled_density(LabelledGraph(motif("K2"), {0, 1}), p), invalid_input);
  CHECK_THROWS_AS(labelled_density(LabelledGraph(motif("K2"), {}), p), invalid_input);
}

TEST_CASE("averaging the labelled density recovers the plain density") {
  CounterRng rng(14);
  const char* motifs[] = {"K2", "K3", "P3", "P4", "C4", "star3"};
  for (int trial = 0; trial < 30; ++trial) {
    const StepGraphon w = oracle::random_graphon(rng, 1 + static_cast<int>(rng.next_below(5)));
    const FiniteGraph h = motif(motifs[rng.next_below(6)]);
    const StepFunction lab = labelled_density(LabelledGraph(h, {0}), w);
    CHECK(lab.integral() == doctest::Approx(hom_density_graphon(h, w)).epsilon(1e-12));
  }
}

TEST_CASE("densities of graphon-flagged inputs stay in [0,1]") {
  CounterRng rng(21);
  const char* motifs[] = {"K2", "K3", "P3", "P4", "C4", "star3"};
  for (int trial = 0; trial < 60; ++trial) {
    const StepGraphon w = oracle::random_graphon(rng, 1 + static_cast<int>(rng.next_below(5)));
    const double t = hom_density_graphon(motif(motifs[rng.next_below(6)]), w);
    CHECK(t >= -1e-12);
    CHECK(t <= 1.0 + 1e-12);
  }
}

TEST_CASE("generalized_density closed forms") {
  const FiniteGraph h = motif("P3");
  const StepGraphon p = StepGraphon::constant(0.5, 2);
  std::vector<StepGraphon> kernels(h.edges().size(), p);
  std::vector<std::vector<char>> full(3, std::vector<char>(2, 1));
  CHECK(generalized_density(h, kernels, full) == doctest::Approx(0.25).epsilon(1e-14));

  std::vector<std::vector<char>> with_empty = full;
  with_empty[1] = {0, 0};
  CHECK(generalized_density(h, kernels, with_empty) == 0.0);

  // single edge, kernels == 1, vertex sets of masses a and b -> a * b
  const FiniteGraph edge = motif("K2");
  const StepGraphon one({0.3, 0.7}, {1, 1, 1, 1}, true);
  std::vector<StepGraphon> ek{one};
  std::vector<std::vector<char>> sets{{1, 0}, {0, 1}};
  CHECK(generalized_density(edge, ek, sets) == doctest::Approx(0.21).epsilon(1e-14));

  const StepGraphon other_masses({0.5, 0.5}, {1, 1, 1, 1}, true);
  CHECK_THROWS_AS(generalized_density(edge, {one, other_masses}, sets), invalid_input);
}

TEST_CASE("counting bound, plain version") {
  const auto [lhs0, rhs0] =
      counting_lemma_gap(motif("K2"), StepGraphon::constant(0.7), StepGraphon::constant(0.2));
  CHECK(lhs0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rhs0 == doctest::Approx(0.5).epsilon(1e-14));

  CounterRng rng(3111);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(6));
    const std::vector<double> masses = oracle::random_masses(rng, k);
    const StepGraphon w = oracle::random_kernel_on(rng, masses, 0.0, 1.0);
    const StepGraphon wp = oracle::random_kernel_on(rng, masses, 0.0, 1.0);
    const char* motifs[] = {"K2", "K3", "P3", "P4", "C4", "star3"};
    const auto [lhs, rhs] = counting_lemma_gap(motif(motifs[rng.next_below(6)]), w, wp);
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("generalized counting bound on random instances") {
  CounterRng rng(6171);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(5));
    const std::vector<double> masses = oracle::random_masses(rng, k);
    const char* motifs[] = {"K2", "K3", "P3", "P4", "C4"};
    const FiniteGraph h = motif(motifs[rng.next_below(5)]);

    std::vector<StepGraphon> kw, kwp;
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
      kw.push_back(oracle::random_kernel_on(rng, masses, 0.0, 1.0));
      kwp.push_back(oracle::random_kernel_on(rng, masses, 0.0, 1.0));
    }
    std::vector<std::vector<char>> sets(h.vertex_count(), std::vector<char>(k));
    for (auto& set : sets)
      for (int b = 0; b < k; ++b) set[b] = rng.next_coin(0.7) ? 1 : 0;

    std::vector<double> set_mass(h.vertex_count(), 0.0);
    for (int v = 0; v < h.vertex_count(); ++v)
      for (int b = 0; b < k; ++b)
        if (sets[v][b]) set_mass[v] += masses[b];

    const double lhs =
        std::abs(generalized_density(h, kw, sets) - generalized_density(h, kwp, sets));
    double rhs = 0.0;
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
      auto [u, v] = h.edges()[e];
      double outside = 1.0;
      for (int x = 0; x < h.vertex_count(); ++x)
        if (x != u && x != v) outside *= set_mass[x];
      const double norm = cut_norm_exact(kw[e].difference(kwp[e]));
      rhs += outside * std::min(set_mass[u] * set_mass[v], norm);
    }
    CHECK(lhs <= rhs + 1e-9);
  }
}
