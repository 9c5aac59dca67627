#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace graphonlab {

// Simple labelled graph: n vertices (0-based internally), undirected edges,
// no loops, no multi-edges.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  int degree(int v) const;

  FiniteGraph relabel(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<unsigned char> adj_;
};

// Piecewise-constant map [0,1] -> R^m on a block partition.  Carries degree
// functions, labelled densities, spectral embeddings, eigenfunctions.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> masses, std::vector<double> values, int dim);

  int block_count() const { return static_cast<int>(masses_.size()); }
  int dim() const { return dim_; }
  const std::vector<double>& masses() const { return masses_; }
  const std::vector<double>& raw() const { return values_; }
  double value(int block, int d = 0) const { return values_[static_cast<std::size_t>(block) * dim_ + d]; }
  double& value(int block, int d = 0) { return values_[static_cast<std::size_t>(block) * dim_ + d]; }

  // Block-mass weighted integral of coordinate d.
  double integral(int d = 0) const;
  // Weighted L2 inner product of two scalar step functions on equal masses.
  static double inner(const StepFunction& a, const StepFunction& b, int da = 0, int db = 0);
  // Weighted L1 distance between R^m valued step functions (common
  // refinement of the two partitions, Euclidean norm per point).
  static double l1_distance(const StepFunction& a, const StepFunction& b);

 private:
  std::vector<double> masses_;
  std::vector<double> values_;  // row-major block x dim
  int dim_ = 1;
};

// Symmetric block kernel on [0,1]^2.  `graphon` flags values in [0,1];
// general kernels (differences, normalized kernels) leave it false.
class StepGraphon {
 public:
  StepGraphon() = default;
  StepGraphon(std::vector<double> masses, std::vector<double> values, bool graphon);

  static StepGraphon constant(double p, int blocks = 1);

  int block_count() const { return k_; }
  bool is_graphon() const { return graphon_; }
  const std::vector<double>& masses() const { return masses_; }
  const std::vector<double>& raw() const { return values_; }
  double value(int i, int j) const { return values_[static_cast<std::size_t>(i) * k_ + j]; }

  // Cumulative block boundaries b_0 = 0 < ... < b_k = 1.
  const std::vector<double>& boundaries() const { return cum_; }

  // Half-open blocks (b_{i-1}, b_i], with 0 adjoined to the first block.
  int block_of(double x) const;

  // Point evaluation; throws on coordinates outside [0,1].
  double evaluate(double x, double y) const;

  StepFunction degree_function() const;

  StepGraphon scaled(double c) const;
  // Difference on the blocks of *this; requires identical masses.
  StepGraphon difference(const StepGraphon& other) const;
  // Kernel with blocks permuted: result(i,j) = value(perm[i], perm[j]).
  StepGraphon permuted(const std::vector<int>& perm) const;

 private:
  int k_ = 0;
  bool graphon_ = false;
  std::vector<double> masses_;
  std::vector<double> cum_;
  std::vector<double> values_;  // row-major k x k, exactly symmetric
};

StepGraphon graph_to_graphon(const FiniteGraph& g);

struct RefineResult {
  StepGraphon graphon;
  double l1_error = 0.0;  // exact L1 gap between input and its n-block average
};

// n-equal-block discretization; exact (error 0) when all boundaries of w
// align with multiples of 1/n.
RefineResult refine(const StepGraphon& w, int n);

// Overlay of two block partitions.  index1/index2 map each merged block to
// the source block on either side; boundaries closer than tol are fused.
struct CommonRefinement {
  std::vector<double> masses;
  std::vector<int> index1;
  std::vector<int> index2;
};
CommonRefinement common_refine(const StepGraphon& a, const StepGraphon& b,
                               double tol = 1e-12);
CommonRefinement common_refine_masses(const std::vector<double>& ma,
                                      const std::vector<double>& mb,
                                      double tol = 1e-12);

// Kernel a - b on their common refinement.
StepGraphon difference_on_refinement(const StepGraphon& a, const StepGraphon& b);

double l1_distance(const StepGraphon& a, const StepGraphon& b);
double l2_distance(const StepGraphon& a, const StepGraphon& b);

// Permutation of refined equal-mass blocks, the computational stand-in for a
// measure-preserving rearrangement.
struct BlockAlignment {
  std::vector<int> perm;
  explicit BlockAlignment(std::vector<int> p);
  static BlockAlignment identity(int n);
};

}  // namespace graphonlab
