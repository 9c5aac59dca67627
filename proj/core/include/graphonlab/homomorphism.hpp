#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// Motif with an ordered list of distinct labelled vertices (possibly empty).
struct LabelledGraph {
  FiniteGraph base;
  std::vector<int> labelled;

  LabelledGraph() = default;
  LabelledGraph(FiniteGraph g, std::vector<int> labels);
};

// Default ceiling on |V(H)| for brute-force enumeration.
inline constexpr int kDefaultMotifCap = 6;

// Exact |Hom(H,G)| over all |V(G)|^{|V(H)|} maps, enumerated in mixed-radix
// lexicographic order.
std::int64_t hom_count(const FiniteGraph& h, const FiniteGraph& g,
                       int motif_cap = kDefaultMotifCap);

double hom_density_graph(const FiniteGraph& h, const FiniteGraph& g,
                         int motif_cap = kDefaultMotifCap);

// Exact density against a step graphon: sum over block assignments of the
// edge-value product times assigned block masses.
double hom_density_graphon(const FiniteGraph& h, const StepGraphon& w,
                           int motif_cap = kDefaultMotifCap);

// One-labelled density y -> t_y(H, W) as a step function on W's blocks.
StepFunction labelled_density(const LabelledGraph& h, const StepGraphon& w,
                              int motif_cap = kDefaultMotifCap);

// Density with one kernel per edge, restricted to a product of block-union
// vertex sets.  All kernels must share their block structure; vertex sets
// are indicator vectors over those blocks.
double generalized_density(const FiniteGraph& h,
                           const std::vector<StepGraphon>& edge_kernels,
                           const std::vector<std::vector<char>>& vertex_sets,
                           int motif_cap = kDefaultMotifCap);

// lhs = |t(H,W) - t(H,W')|, rhs = |E(H)| * cut_norm_exact(W - W') on the
// common refinement.  The counting bound asserts lhs <= rhs.
std::pair<double, double> counting_lemma_gap(const FiniteGraph& h, const StepGraphon& w,
                                             const StepGraphon& wp,
                                             int motif_cap = kDefaultMotifCap);

// Built-in motifs: K2, K3, P3, P4, C4, star3.
FiniteGraph motif(std::string_view name);
// Same motifs with vertex 0 labelled (for P3/P4 an endpoint).
LabelledGraph labelled_motif(std::string_view name);

}  // namespace graphonlab
