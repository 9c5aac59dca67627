#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphonlab/graphonlab.hpp"
#include "oracles.hpp"

using namespace graphonlab;

namespace {

ColoredGraph random_colored_graph(CounterRng& rng, int n, double p, int n_colors) {
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng.next_below(n_colors));
  return ColoredGraph(oracle::random_graph(rng, n, p), std::move(colors));
}

ColoredStepGraphon random_colored_graphon(CounterRng& rng, int k, int n_colors) {
  std::vector<int> colors(k);
  for (int b = 0; b < k; ++b) colors[b] = 1 + static_cast<int>(rng.next_below(n_colors));
  return ColoredStepGraphon(oracle::random_graphon(rng, k), std::move(colors));
}

}  // namespace

TEST_CASE("embed_colored_graph groups by color") {
  // all one color: base matches graph_to_graphon up to reordering
  const FiniteGraph g = motif("P3");
  const ColoredGraph mono(g, {1, 1, 1});
  const ColoredStepGraphon w = embed_colored_graph(mono);
  CHECK(w.color_count() == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(w.base.value(i, j) == graph_to_graphon(g).value(i, j));

  const ColoredGraph k2(motif("K2"), {1, 2});
  const ColoredStepGraphon wk2 = embed_colored_graph(k2);
  CHECK(wk2.base.masses()[0] == 0.5);
  CHECK(wk2.colors == std::vector<int>{1, 2});
  CHECK(wk2.base.value(0, 1) == 1.0);

  const ColoredGraph mixed(FiniteGraph(3, {}), {1, 1, 2});
  const ColoredStepGraphon wm = embed_colored_graph(mixed);
  CHECK(wm.color_mass(1) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(wm.color_mass(2) == doctest::Approx(1.0 / 3).epsilon(1e-15));

  // grouping happens even when input colors interleave
  const ColoredGraph inter(FiniteGraph(4, {{0, 3}}), {2, 1, 2, 1});
  const ColoredStepGraphon wi = embed_colored_graph(inter);
  CHECK(wi.colors == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("single colored vertex density is the color fraction") {
  CounterRng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const ColoredGraph g = random_colored_graph(rng, 2 + static_cast<int>(rng.next_below(6)), 0.5, 3);
    for (int s = 1; s <= 3; ++s) {
      const ColoredGraph h(FiniteGraph(1, {}), {s});
      int count = 0;
      for (int c : g.colors) count += c == s;
      CHECK(colored_hom_density_graph(h, g) ==
            doctest::Approx(static_cast<double>(count) / g.base.vertex_count()).epsilon(1e-14));
    }
  }
}

TEST_CASE("colored density reduces to uncolored when |S| = 1") {
  CounterRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteGraph base = oracle::random_graph(rng, 2 + static_cast<int>(rng.next_below(5)), 0.5);
    const ColoredGraph g(base, std::vector<int>(base.vertex_count(), 1));
    const FiniteGraph hb = motif(trial % 2 ? "K3" : "P3");
    const ColoredGraph h(hb, std::vector<int>(hb.vertex_count(), 1));
    CHECK(colored_hom_density_graph(h, g) == hom_density_graph(hb, g.base));

    const StepGraphon w = oracle::random_graphon(rng, 3);
    const ColoredStepGraphon cw(w, {1, 1, 1});
    CHECK(colored_hom_density_graphon(h, cw) == doctest::Approx(hom_density_graphon(hb, w)).epsilon(1e-14));
  }
}

TEST_CASE("color absent from the target gives density zero") {
  const ColoredGraph g(motif("K3"), {1, 1, 1});
  const ColoredGraph h(motif("K2"), {1, 2});
  CHECK(colored_hom_density_graph(h, g) == 0.0);
  const ColoredStepGraphon w(StepGraphon::constant(1.0, 2), {1, 1});
  CHECK(colored_hom_density_graphon(h, w) == 0.0);
}

TEST_CASE("embedding compatibility for colored densities") {
  CounterRng rng(7171);
  for (int trial = 0; trial < 25; ++trial) {
    const ColoredGraph g = random_colored_graph(rng, 2 + static_cast<int>(rng.next_below(5)), 0.5, 2);
    const int hn = 1 + static_cast<int>(rng.next_below(3));
    const ColoredGraph h = random_colored_graph(rng, hn, 0.6, 2);
    CHECK(colored_hom_density_graph(h, g) ==
          doctest::Approx(colored_hom_density_graphon(h, embed_colored_graph(g))).epsilon(1e-12));
  }
}

TEST_CASE("single colored vertex against a graphon gives color mass") {
  CounterRng rng(31);
  const ColoredStepGraphon w = random_colored_graphon(rng, 5, 3);
  for (int s = 1; s <= 3; ++s) {
    const ColoredGraph h(FiniteGraph(1, {}), {s});
    CHECK(colored_hom_density_graphon(h, w) == doctest::Approx(w.color_mass(s)).epsilon(1e-14));
  }
}

TEST_CASE("colored_cut_norm") {
  CounterRng rng(99);
  const ColoredStepGraphon w = random_colored_graphon(rng, 4, 2);
  CHECK(colored_cut_norm(w, w) == 0.0);

  // same base, coloring flipped on one block of mass m -> 2m
  ColoredStepGraphon flipped = w;
  flipped.colors[2] = flipped.colors[2] == 1 ? 2 : 1;
  CHECK(colored_cut_norm(w, flipped) == doctest::Approx(2.0 * w.base.masses()[2]).epsilon(1e-12));

  const ColoredStepGraphon p1(StepGraphon::constant(0.3), {1});
  const ColoredStepGraphon p2(StepGraphon::constant(0.8), {1});
  CHECK(colored_cut_norm(p1, p2) == doctest::Approx(0.5).epsilon(1e-14));

  // colored norm dominates the base cut norm, equality for equal colorings
  for (int trial = 0; trial < 20; ++trial) {
    const ColoredStepGraphon a = random_colored_graphon(rng, 3, 2);
    ColoredStepGraphon b = random_colored_graphon(rng, 3, 2);
    b.base = a.base;  // same partition so the refinement is trivial
    const double base_norm = cut_norm_exact(difference_on_refinement(a.base, b.base));
    CHECK(colored_cut_norm(a, b) >= base_norm - 1e-12);
    b.colors = a.colors;
    CHECK(colored_cut_norm(a, b) == doctest::Approx(base_norm).epsilon(1e-12));
  }
}

TEST_CASE("colored cut distance upper") {
  CounterRng rng(123);
  const ColoredStepGraphon w(oracle::random_equal_mass_graphon(rng, 4), {1, 2, 2, 1});
  CHECK(colored_cut_distance_upper(w, w, 4, AlignMode::Exhaustive, 1) == 0.0);

  // block permutation of a colored graphon is at distance zero
  std::vector<int> perm{2, 0, 3, 1};
  ColoredStepGraphon wp(w.base.permuted(perm), {w.colors[2], w.colors[0], w.colors[3], w.colors[1]});
  CHECK(colored_cut_distance_upper(w, wp, 4, AlignMode::Exhaustive, 1) <= 1e-12);

  // all color 1 vs all color 2 on the same base: mass 2 no matter the alignment
  const ColoredStepGraphon c1(w.base, {1, 1, 1, 1});
  const ColoredStepGraphon c2(w.base, {2, 2, 2, 2});
  CHECK(colored_cut_distance_upper(c1, c2, 4, AlignMode::Exhaustive, 1) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // the anneal path stays above the exhaustive optimum
  const ColoredStepGraphon other(oracle::random_equal_mass_graphon(rng, 4), {2, 1, 1, 2});
  const double exact = colored_cut_distance_upper(w, other, 4, AlignMode::Exhaustive, 1);
  const double anneal = colored_cut_distance_upper(w, other, 4, AlignMode::Anneal, 9);
  CHECK(anneal >= exact - 1e-10);
}

TEST_CASE("sample_colored endpoints") {
  const ColoredStepGraphon zero(StepGraphon::constant(0.0, 2), {1, 1});
  const ColoredGraph g0 = sample_colored(40, zero, 7);
  CHECK(g0.base.edges().empty());
  for (int c : g0.colors) CHECK(c == 1);

  const ColoredStepGraphon one(StepGraphon::constant(1.0), {1});
  const ColoredGraph g1 = sample_colored(12, one, 7);
  CHECK(static_cast<int>(g1.base.edges().size()) == 12 * 11 / 2);
}

TEST_CASE("sampled color fractions concentrate") {
  const ColoredStepGraphon w(StepGraphon::constant(0.5, 2), {1, 2});
  CounterRng seeds(2026);
  const int n = 400;
  int failures = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const ColoredGraph g = sample_colored(n, w, seeds.next_u64());
    int ones = 0;
    for (int c : g.colors) ones += c == 1;
    const double frac = static_cast<double>(ones) / n;
    if (std::abs(frac - 0.5) > 3.0 / std::sqrt(static_cast<double>(n))) ++failures;
  }
  // 3/sqrt(n) is six standard deviations for a fair coin; allow a stray hit
  CHECK(failures <= 1);
}

TEST_CASE("colored counting bound on random instances") {
  CounterRng rng(515);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(6));
    const std::vector<double> masses = oracle::random_masses(rng, k);
    std::vector<int> ca(k), cb(k);
    for (int b = 0; b < k; ++b) {
      ca[b] = 1 + static_cast<int>(rng.next_below(2));
      cb[b] = 1 + static_cast<int>(rng.next_below(2));
    }
    const ColoredStepGraphon w(oracle::random_kernel_on(rng, masses, 0.0, 1.0), ca);
    const ColoredStepGraphon wp(oracle::random_kernel_on(rng, masses, 0.0, 1.0), cb);

    const int hn = 1 + static_cast<int>(rng.next_below(4));
    std::vector<int> hc(hn);
    for (int v = 0; v < hn; ++v) hc[v] = 1 + static_cast<int>(rng.next_below(2));
    const ColoredGraph h(oracle::random_graph(rng, hn, 0.6), hc);

    const double lhs = std::abs(colored_hom_density_graphon(h, w) -
                                colored_hom_density_graphon(h, wp));
    double color_term = 0.0;
    for (int b = 0; b < k; ++b)
      if (ca[b] != cb[b]) color_term += 2.0 * masses[b];
    const double rhs = static_cast<double>(h.base.edges().size()) *
                           cut_norm_exact(w.base.difference(wp.base)) +
                       color_term;
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("sampled colored densities converge with n") {
  CounterRng rng(5599);
  const ColoredStepGraphon w(
      StepGraphon({0.4, 0.6}, {0.7, 0.2, 0.2, 0.6}, true), {1, 2});
  const ColoredGraph h(motif("K2"), {1, 2});
  const double limit = colored_hom_density_graphon(h, w);

  std::vector<double> medians;
  for (int n : {50, 100, 200, 400}) {
    std::vector<double> gaps;
    for (int t = 0; t < 50; ++t) {
      const ColoredGraph g = sample_colored(n, w, rng.next_u64());
      gaps.push_back(std::abs(colored_hom_density_graph(h, g) - limit));
    }
    medians.push_back(oracle::median(gaps));
  }
  for (std::size_t i = 1; i < medians.size(); ++i)
    CHECK(medians[i] <= medians[i - 1] * 1.10 + 1e-12);
  CHECK(medians.back() < medians.front());
}
