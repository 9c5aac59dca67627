// Test-only reference implementations, kept independent of the library's
// algorithmic paths: the cut norm enumerates subset pairs directly, the
// homomorphism counts recurse vertex by vertex.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "graphonlab/graphonlab.hpp"

namespace oracle {

using graphonlab::CounterRng;
using graphonlab::FiniteGraph;
using graphonlab::StepGraphon;

// sup over all pairs of block subsets, each pair summed from scratch.
inline double cut_norm_bruteforce(const StepGraphon& g) {
  const int k = g.block_count();
  double best = 0.0;
  for (std::uint32_t a = 0; a < (1u << k); ++a)
    for (std::uint32_t b = 0; b < (1u << k); ++b) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < k; ++j) {
          if (!(b >> j & 1)) continue;
          s += g.value(i, j) * g.masses()[i] * g.masses()[j];
        }
      }
      best = std::max(best, std::abs(s));
    }
  return best;
}

inline double op_norm_bruteforce(const StepGraphon& g) {
  const int k = g.block_count();
  double best = 0.0;
  for (std::uint32_t pat = 0; pat < (1u << k); ++pat) {
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      double row = 0.0;
      for (int j = 0; j < k; ++j) {
        const double sign = (pat >> j & 1) ? 1.0 : -1.0;
        row += g.value(i, j) * g.masses()[j] * sign;
      }
      total += g.masses()[i] * std::abs(row);
    }
    best = std::max(best, total);
  }
  return best;
}

inline std::int64_t hom_count_recursive(const FiniteGraph& h, const FiniteGraph& g,
                                        std::vector<int>& map, int next) {
  const int n = g.vertex_count();
  if (next == h.vertex_count()) {
    for (auto [u, v] : h.edges())
      if (map[u] == map[v] || !g.has_edge(map[u], map[v])) return 0;
    return 1;
  }
  std::int64_t total = 0;
  for (int t = 0; t < n; ++t) {
    map[next] = t;
    total += hom_count_recursive(h, g, map, next + 1);
  }
  return total;
}

inline std::int64_t hom_count_recursive(const FiniteGraph& h, const FiniteGraph& g) {
  std::vector<int> map(h.vertex_count(), 0);
  return hom_count_recursive(h, g, map, 0);
}

inline double hom_density_graphon_recursive(const FiniteGraph& h, const StepGraphon& w,
                                            std::vector<int>& map, int next) {
  if (next == h.vertex_count()) {
    double term = 1.0;
    for (auto [u, v] : h.edges()) term *= w.value(map[u], map[v]);
    for (int v = 0; v < h.vertex_count(); ++v) term *= w.masses()[map[v]];
    return term;
  }
  double total = 0.0;
  for (int b = 0; b < w.block_count(); ++b) {
    map[next] = b;
    total += hom_density_graphon_recursive(h, w, map, next + 1);
  }
  return total;
}

inline double hom_density_graphon_recursive(const FiniteGraph& h, const StepGraphon& w) {
  std::vector<int> map(h.vertex_count(), 0);
  return hom_density_graphon_recursive(h, w, map, 0);
}

// Random masses, positive and summing to one.
inline std::vector<double> random_masses(CounterRng& rng, int k) {
  std::vector<double> m(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    m[i] = 0.1 + rng.next_unit();
    total += m[i];
  }
  for (int i = 0; i < k - 1; ++i) m[i] /= total;
  double partial = 0.0;
  for (int i = 0; i < k - 1; ++i) partial += m[i];
  m[k - 1] = 1.0 - partial;
  return m;
}

inline StepGraphon random_kernel_on(CounterRng& rng, std::vector<double> masses,
                                    double lo = -1.0, double hi = 1.0) {
  const int k = static_cast<int>(masses.size());
  std::vector<double> values(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = lo + (hi - lo) * rng.next_unit();
      values[static_cast<std::size_t>(i) * k + j] = v;
      values[static_cast<std::size_t>(j) * k + i] = v;
    }
  return StepGraphon(std::move(masses), std::move(values), lo >= 0.0 && hi <= 1.0);
}

inline StepGraphon random_kernel(CounterRng& rng, int k, double lo = -1.0, double hi = 1.0) {
  return random_kernel_on(rng, random_masses(rng, k), lo, hi);
}

inline StepGraphon random_graphon(CounterRng& rng, int k) {
  return random_kernel(rng, k, 0.0, 1.0);
}

inline StepGraphon random_equal_mass_graphon(CounterRng& rng, int k) {
  std::vector<double> masses(k, 1.0 / k);
  std::vector<double> values(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = rng.next_unit();
      values[static_cast<std::size_t>(i) * k + j] = v;
      values[static_cast<std::size_t>(j) * k + i] = v;
    }
  return StepGraphon(std::move(masses), std::move(values), true);
}

inline FiniteGraph random_graph(CounterRng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (rng.next_coin(p)) edges.emplace_back(j, i);
  return FiniteGraph(n, std::move(edges));
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace oracle
