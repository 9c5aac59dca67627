#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// Random weighted graph: symmetric weights in [0,1], zero diagonal.  The
// drawn coordinates are retained so rounding stays coupled to the same draw.
struct WeightedGraph {
  int n = 0;
  std::vector<double> weights;  // row-major n x n
  std::vector<double> coords;   // the i.i.d. uniforms X_i

  double weight(int i, int j) const { return weights[static_cast<std::size_t>(i) * n + j]; }
};

WeightedGraph sample_weighted(int n, const StepGraphon& w, std::uint64_t seed);

// Independent edge coin per pair i > j with probability weights[i][j].
FiniteGraph bernoulli_round(const WeightedGraph& h, std::uint64_t seed);

// Composition of the two with substreams derived from one seed.
FiniteGraph sample_graph(int n, const StepGraphon& w, std::uint64_t seed);

// Fast exact densities for the two motifs tracked by the experiments.
double edge_density(const FiniteGraph& g);
double triangle_density(const FiniteGraph& g);

struct ExperimentRow {
  int n = 0;
  int trial = 0;
  std::string statistic;
  double value = 0.0;
};

// For each n: sampled-vs-limit gaps of the K2/K3 densities and the
// cut-distance upper bound on the n-block refinement (annealed alignment).
std::vector<ExperimentRow> concentration_curve(const StepGraphon& w,
                                               const std::vector<int>& n_grid, int trials,
                                               std::uint64_t seed, int refine_cap = 512);

// Median of the rows with the given n and statistic name.
double experiment_median(const std::vector<ExperimentRow>& rows, int n,
                         const std::string& statistic);

}  // namespace graphonlab
