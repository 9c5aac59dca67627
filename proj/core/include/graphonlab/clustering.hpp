#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphonlab/colored.hpp"
#include "graphonlab/homomorphism.hpp"
#include "graphonlab/spectral.hpp"
#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// Node-level statistic: a map from graphons to R^m valued step functions.
struct NodeStatistic {
  enum class Kind { Degree, LabelledHomDensity, SpectralEmbedding, Composite };

  Kind kind = Kind::Degree;
  LabelledGraph motif;                // LabelledHomDensity
  int embed_dim = 1;                  // SpectralEmbedding
  double gap_tol = kDefaultGapTol;    // SpectralEmbedding
  std::vector<NodeStatistic> parts;   // Composite

  static NodeStatistic degree();
  static NodeStatistic labelled_hom(LabelledGraph h);
  static NodeStatistic spectral(int m, double gap_tol = kDefaultGapTol);
  static NodeStatistic composite(std::vector<NodeStatistic> parts);

  int dim() const;
};

StepFunction compute_statistic(const NodeStatistic& stat, const StepGraphon& w);

// Open axis-aligned box in R^m; +-infinity encodes unbounded sides.
struct RegionBox {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const std::vector<double>& x) const;
  double distance(const std::vector<double>& x) const;
  static double box_distance(const RegionBox& a, const RegionBox& b);
};

// Disjoint open boxes with an optional pairwise separation and a coverage
// tolerance for mass allowed to fall outside every region.
struct RegionSet {
  std::vector<RegionBox> regions;
  std::optional<double> d_min;
  double coverage_tolerance = kDefaultCoverTol;

  RegionSet() = default;
  RegionSet(std::vector<RegionBox> boxes, std::optional<double> separation = std::nullopt,
            double cover_tol = kDefaultCoverTol);
  int dim() const;

  // Two-region threshold layout [0, alpha) / (alpha, 1] on a 1-d statistic.
  static RegionSet threshold(double alpha);
};

struct ColoringReport {
  ColoredStepGraphon result;
  double uncovered_mass = 0.0;
  std::vector<int> boundary_blocks;   // statistic value sits on a region boundary
  std::vector<int> uncovered_blocks;  // colored by the nearest region, recorded here
};

// Color each block by the unique region containing its statistic value.
// Boundary values take the lowest adjacent region index; uncovered blocks
// take the nearest region and accumulate uncovered_mass.  Throws
// precondition_error("coverage") if uncovered mass exceeds the tolerance.
ColoringReport partition_by_regions(const StepGraphon& base, const StepFunction& values,
                                    const RegionSet& regions);

// Two-color partition by t_y(H, W) against alpha, with values >= alpha
// taking color 2 (including exact boundary hits, which are still reported).
ColoringReport threshold_cluster(const StepGraphon& w, const LabelledGraph& h, double alpha);

struct ConsistencyRow {
  int n = 0;
  int trial = 0;
  double colored_distance = 0.0;
  double uncovered_mass = 0.0;
};

// Sample, cluster with the fixed statistic and regions, and measure the
// colored cut distance to the limit coloring, per n and trial.
std::vector<ConsistencyRow> consistency_experiment(const StepGraphon& w0,
                                                   const NodeStatistic& stat,
                                                   const RegionSet& regions,
                                                   const std::vector<int>& n_grid, int trials,
                                                   std::uint64_t seed,
                                                   double sample_cover_tol = 0.25);

double consistency_median(const std::vector<ConsistencyRow>& rows, int n);

// lhs = colored cut norm of the two colorings; rhs = cut norm of the kernel
// difference plus the statistic's L1 distance over d_min.  Requires d_min.
std::pair<double, double> lipschitz_check(const StepGraphon& w1, const StepGraphon& w2,
                                          const NodeStatistic& stat, const RegionSet& regions);

// Family with a positive-mass level set exactly at the threshold: rounding
// the set up or down yields kernels converging to the same limit whose
// colorings stay apart.
struct DegreeMassDemoReport {
  struct Row {
    double eps = 0.0;
    double cut_gap_up = 0.0;    // |W_up - W0| in cut norm
    double cut_gap_down = 0.0;
    double colored_distance = 0.0;  // between the two variants' colorings
    double differ_mass = 0.0;       // mass where the two colorings disagree
  };
  std::vector<Row> rows;
  double split_mass_up = 0.0;
  double split_mass_down = 0.0;
  bool zero_eps_uncovered = false;  // coloring undefined at eps = 0
  double zero_eps_uncovered_mass = 0.0;
};
DegreeMassDemoReport inconsistency_demo_degree_mass(
    const std::vector<double>& eps_grid = {0.2, 0.1, 0.05}, double split_up_mass = 0.25,
    double split_down_mass = 0.25);

}  // namespace graphonlab
