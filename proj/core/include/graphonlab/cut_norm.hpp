#pragma once

#include <cstdint>
#include <vector>

#include "graphonlab/step_graphon.hpp"

namespace graphonlab {

// Ceiling on the block count for exact 2^k enumerations.  Initialized once
// from the GRAPHONLAB_EXACT_K environment variable, default 22.
int exact_block_limit();

// Exact cut norm sup_{A,B} |int_{A x B} K|.  The bilinear objective over the
// box [0,mu_i] x [0,mu_j] peaks at block unions, so row subsets are
// enumerated and the column side is resolved by sign.  Exact up to rounding;
// throws above the exact limit.
double cut_norm_exact(const StepGraphon& k, int exact_limit = exact_block_limit());

// Alternating maximization over block subsets with seeded restarts.  Every
// iterate is a feasible rectangle, so the result never exceeds
// cut_norm_exact on the same kernel.
double cut_norm_lower(const StepGraphon& k, int restarts, std::uint64_t seed);

// Cut norm via the exact enumerator when the block count allows it, else the
// alternating lower bound; the workhorse for large refinements.
double cut_norm_auto(const StepGraphon& k, int restarts = 8, std::uint64_t seed = 17,
                     int exact_limit = exact_block_limit());

// sup over |f|_inf <= 1 of |T_K f|_1; the maximizer is a sign pattern per
// block.  Sandwiched between the cut norm and 4x the cut norm.
double op_norm_inf_to_1(const StepGraphon& k, int exact_limit = exact_block_limit());

enum class AlignMode { Exhaustive, Anneal };

struct CutDistanceReport {
  double distance = 0.0;
  double refine_error_1 = 0.0;
  double refine_error_2 = 0.0;
  std::vector<int> alignment;  // block permutation applied to the second argument
};

// Upper bound on the cut distance: refine both arguments to n equal blocks
// and minimize the cut norm of the aligned difference over block
// permutations.  Exhaustive mode enumerates all n! permutations (n <= 9);
// anneal mode runs seeded simulated annealing from a degree-sorted start.
// For refinements above the exact limit the kernel norm falls back to the
// alternating lower bound, making the result an estimate rather than a
// certified bound; the permutation itself is still a genuine alignment.
CutDistanceReport cut_distance_upper_report(const StepGraphon& w1, const StepGraphon& w2,
                                            int n, AlignMode mode, std::uint64_t seed);
double cut_distance_upper(const StepGraphon& w1, const StepGraphon& w2, int n,
                          AlignMode mode, std::uint64_t seed);

}  // namespace graphonlab
