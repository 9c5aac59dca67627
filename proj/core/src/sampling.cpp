#include "graphonlab/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/cut_norm.hpp"
#include "graphonlab/errors.hpp"
#include "graphonlab/homomorphism.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

WeightedGraph sample_weighted(int n, const StepGraphon& w, std::uint64_t seed) {
  if (n < 1) throw invalid_input("sample_weighted: n must be >= 1");
  if (!w.is_graphon()) throw invalid_input("sample_weighted: kernel is not graphon-flagged");
  CounterRng coords = CounterRng(seed).substream(0);

  WeightedGraph h;
  h.n = n;
  h.coords.resize(n);
  for (int i = 0; i < n; ++i) h.coords[i] = coords.next_unit();

  h.weights.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const double v = w.evaluate(h.coords[i], h.coords[j]);
      h.weights[static_cast<std::size_t>(i) * n + j] = v;
      h.weights[static_cast<std::size_t>(j) * n + i] = v;
    }
  return h;
}

FiniteGraph bernoulli_round(const WeightedGraph& h, std::uint64_t seed) {
  CounterRng coins = CounterRng(seed).substream(1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < h.n; ++i)
    for (int j = 0; j < i; ++j)
      if (coins.next_coin(h.weight(i, j))) edges.emplace_back(j, i);
  return FiniteGraph(h.n, std::move(edges));
}

FiniteGraph sample_graph(int n, const StepGraphon& w, std::uint64_t seed) {
  return bernoulli_round(sample_weighted(n, w, seed), seed);
}

double edge_density(const FiniteGraph& g) {
  const double n = g.vertex_count();
  if (n == 0) throw invalid_input("edge_density: empty graph");
  return 2.0 * static_cast<double>(g.edges().size()) / (n * n);
}

double triangle_density(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw invalid_input("triangle_density: empty graph");
  // 6 * (#triangles) ordered maps; count closed wedges over edges.
  std::int64_t closed = 0;
  for (auto [u, v] : g.edges()) {
    int common = 0;
    for (int w2 = 0; w2 < n; ++w2)
      if (g.has_edge(u, w2) && g.has_edge(v, w2)) ++common;
    closed += common;
  }
  // each triangle counted once per edge: 3 wedges -> 6 ordered maps
  return 2.0 * static_cast<double>(closed) / (static_cast<double>(n) * n * n);
}

std::vector<ExperimentRow> concentration_curve(const StepGraphon& w,
                                               const std::vector<int>& n_grid, int trials,
                                               std::uint64_t seed, int refine_cap) {
  if (trials < 1) throw invalid_input("concentration_curve: trials must be >= 1");
  for (int n : n_grid)
    if (n < 1 || n > refine_cap)
      throw invalid_input("concentration_curve: grid entries must lie in [1, refine cap]");

  const double t_k2 = hom_density_graphon(motif("K2"), w);
  const double t_k3 = hom_density_graphon(motif("K3"), w);

  CounterRng root(seed);
  std::vector<ExperimentRow> rows;
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const int n = n_grid[gi];
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed =
          root.substream(gi * 100003ull + static_cast<std::uint64_t>(t)).next_u64();
      const FiniteGraph g = sample_graph(n, w, trial_seed);
      const StepGraphon gw = graph_to_graphon(g);
      rows.push_back({n, t, "k2_gap", std::abs(edge_density(g) - t_k2)});
      rows.push_back({n, t, "k3_gap", std::abs(triangle_density(g) - t_k3)});
      rows.push_back({n, t, "cut_dist",
                      cut_distance_upper(gw, w, n, AlignMode::Anneal, trial_seed)});
    }
  }
  return rows;
}

double experiment_median(const std::vector<ExperimentRow>& rows, int n,
                         const std::string& statistic) {
  std::vector<double> vals;
  for (const auto& r : rows)
    if (r.n == n && r.statistic == statistic) vals.push_back(r.value);
  if (vals.empty()) throw invalid_input("experiment_median: no matching rows");
  std::sort(vals.begin(), vals.end());
  const std::size_t m = vals.size();
  return m % 2 ? vals[m / 2] : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
}

}  // namespace graphonlab
