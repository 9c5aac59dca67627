#pragma once

#include <cstdint>
#include <vector>

#include "graphonlab/cut_norm.hpp"
#include "graphonlab/homomorphism.hpp"
#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// Vertex-colored graph; colors are dense integers 1..N.
struct ColoredGraph {
  FiniteGraph base;
  std::vector<int> colors;

  ColoredGraph() = default;
  ColoredGraph(FiniteGraph g, std::vector<int> cols);
  int color_count() const;
};

// Step graphon with one color label per block.
struct ColoredStepGraphon {
  StepGraphon base;
  std::vector<int> colors;

  ColoredStepGraphon() = default;
  ColoredStepGraphon(StepGraphon w, std::vector<int> cols);
  int color_count() const;
  // Total mass of blocks carrying the given color.
  double color_mass(int color) const;
};

// Vertices grouped by color into consecutive intervals (within a color by
// original index); kernel cells from adjacency.
ColoredStepGraphon embed_colored_graph(const ColoredGraph& g);

// Color-compatible homomorphism density between colored graphs.
double colored_hom_density_graph(const ColoredGraph& h, const ColoredGraph& g,
                                 int motif_cap = kDefaultMotifCap);

// Block sum restricted to blocks whose color matches each vertex's color.
double colored_hom_density_graphon(const ColoredGraph& h, const ColoredStepGraphon& w,
                                   int motif_cap = kDefaultMotifCap);

// Cut norm of the kernel difference plus, per color, the mass of the
// symmetric difference of the color fibers (not a norm for |S| > 1).
double colored_cut_norm(const ColoredStepGraphon& w1, const ColoredStepGraphon& w2);

struct ColoredCutDistanceReport {
  double distance = 0.0;
  double kernel_term = 0.0;
  double color_term = 0.0;
  std::vector<int> alignment;
};

// Minimum of the colored cut norm over block permutations of the second
// argument on the n-equal-block refinement (colors travel with blocks).
ColoredCutDistanceReport colored_cut_distance_upper_report(const ColoredStepGraphon& w1,
                                                           const ColoredStepGraphon& w2, int n,
                                                           AlignMode mode, std::uint64_t seed);
double colored_cut_distance_upper(const ColoredStepGraphon& w1, const ColoredStepGraphon& w2,
                                  int n, AlignMode mode, std::uint64_t seed);

// n i.i.d. uniform coordinates; edges drawn independently with probability
// f_W; vertex colors read off the color map.
ColoredGraph sample_colored(int n, const ColoredStepGraphon& w, std::uint64_t seed);

// Refine a colored graphon to n equal blocks (colors follow the block that
// owns each refined cell's midpoint; boundaries must align for exactness).
ColoredStepGraphon refine_colored(const ColoredStepGraphon& w, int n);

}  // namespace graphonlab
