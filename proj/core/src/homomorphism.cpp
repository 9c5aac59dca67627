#include "graphonlab/homomorphism.hpp"

#include <cmath>
#include <string>

#include "graphonlab/cut_norm.hpp"
#include "graphonlab/errors.hpp"

namespace graphonlab {

LabelledGraph::LabelledGraph(FiniteGraph g, std::vector<int> labels)
    : base(std::move(g)), labelled(std::move(labels)) {
  std::vector<char> seen(base.vertex_count(), 0);
  for (int v : labelled) {
    if (v < 0 || v >= base.vertex_count())
      throw invalid_input("LabelledGraph: labelled vertex out of range");
    if (seen[v]) throw invalid_input("LabelledGraph: labelled vertices must be distinct");
    seen[v] = 1;
  }
}

namespace {

void check_cap(int h_vertices, int cap) {
  if (h_vertices > cap) throw invalid_input("motif exceeds the enumeration cap");
}

// Advance a mixed-radix counter; returns false after the last assignment.
bool advance(std::vector<int>& digits, int radix) {
  for (std::size_t d = 0; d < digits.size(); ++d) {
    if (++digits[d] < radix) return true;
    digits[d] = 0;
  }
  return false;
}

}  // namespace

std::int64_t hom_count(const FiniteGraph& h, const FiniteGraph& g, int motif_cap) {
  const int hv = h.vertex_count();
  check_cap(hv, motif_cap);
  const int n = g.vertex_count();
  if (n == 0) return hv == 0 ? 1 : 0;
  if (hv == 0) return 1;

  std::vector<int> map(hv, 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : h.edges()) {
      if (map[u] == map[v] || !g.has_edge(map[u], map[v])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (advance(map, n));
  return count;
}

double hom_density_graph(const FiniteGraph& h, const FiniteGraph& g, int motif_cap) {
  const int n = g.vertex_count();
  if (n == 0) throw invalid_input("hom_density_graph: empty target graph");
  return static_cast<double>(hom_count(h, g, motif_cap)) /
         std::pow(static_cast<double>(n), h.vertex_count());
}

double hom_density_graphon(const FiniteGraph& h, const StepGraphon& w, int motif_cap) {
  const int hv = h.vertex_count();
  check_cap(hv, motif_cap);
  if (!w.is_graphon())
    throw invalid_input("hom_density_graphon: kernel is not graphon-flagged");
  if (hv == 0) return 1.0;
  const int k = w.block_count();

  std::vector<int> map(hv, 0);
  double total = 0.0;
  do {
    double term = 1.0;
    for (auto [u, v] : h.edges()) term *= w.value(map[u], map[v]);
    for (int v = 0; v < hv; ++v) term *= w.masses()[map[v]];
    total += term;
  } while (advance(map, k));
  return total;
}

StepFunction labelled_density(const LabelledGraph& h, const StepGraphon& w, int motif_cap) {
  if (h.labelled.size() != 1)
    throw invalid_input("labelled_density: exactly one labelled vertex required");
  const int hv = h.base.vertex_count();
  check_cap(hv, motif_cap);
  const int pin = h.labelled[0];
  const int k = w.block_count();

  std::vector<int> free_vertices;
  for (int v = 0; v < hv; ++v)
    if (v != pin) free_vertices.push_back(v);

  std::vector<double> out(k, 0.0);
  std::vector<int> map(hv, 0);
  for (int b = 0; b < k; ++b) {
    map[pin] = b;
    std::vector<int> digits(free_vertices.size(), 0);
    double total = 0.0;
    if (free_vertices.empty()) {
      total = 1.0;
      for (auto [u, v] : h.base.edges()) total *= w.value(map[u], map[v]);
    } else {
      do {
        for (std::size_t d = 0; d < free_vertices.size(); ++d) map[free_vertices[d]] = digits[d];
        double term = 1.0;
        for (auto [u, v] : h.base.edges()) term *= w.value(map[u], map[v]);
        for (int fv : free_vertices) term *= w.masses()[map[fv]];
        total += term;
      } while (advance(digits, k));
    }
    out[b] = total;
  }
  return StepFunction(w.masses(), std::move(out), 1);
}

double generalized_density(const FiniteGraph& h,
                           const std::vector<StepGraphon>& edge_kernels,
                           const std::vector<std::vector<char>>& vertex_sets,
                           int motif_cap) {
  const int hv = h.vertex_count();
  check_cap(hv, motif_cap);
  if (edge_kernels.size() != h.edges().size())
    throw invalid_input("generalized_density: one kernel per edge required");
  if (static_cast<int>(vertex_sets.size()) != hv)
    throw invalid_input("generalized_density: one vertex set per vertex required");
  if (edge_kernels.empty() && hv == 0) return 1.0;

  int k = 0;
  if (!edge_kernels.empty()) {
    k = edge_kernels.front().block_count();
    for (const auto& w : edge_kernels) {
      if (w.block_count() != k)
        throw invalid_input("generalized_density: kernels on incompatible refinements");
      for (int b = 0; b < k; ++b)
        if (std::abs(w.masses()[b] - edge_kernels.front().masses()[b]) > 1e-12)
          throw invalid_input("generalized_density: kernels on incompatible refinements");
    }
  } else {
    k = static_cast<int>(vertex_sets.front().size());
  }
  const std::vector<double> masses =
      edge_kernels.empty() ? std::vector<double>(k, 1.0 / k) : edge_kernels.front().masses();
  for (const auto& set : vertex_sets)
    if (static_cast<int>(set.size()) != k)
      throw invalid_input("generalized_density: vertex set size mismatch");

  std::vector<int> map(hv, 0);
  double total = 0.0;
  do {
    double term = 1.0;
    for (int v = 0; v < hv && term != 0.0; ++v)
      term *= vertex_sets[v][map[v]] ? masses[map[v]] : 0.0;
    if (term != 0.0) {
      for (std::size_t e = 0; e < h.edges().size(); ++e) {
        auto [u, v] = h.edges()[e];
        term *= edge_kernels[e].value(map[u], map[v]);
      }
      total += term;
    }
  } while (advance(map, k));
  return total;
}

std::pair<double, double> counting_lemma_gap(const FiniteGraph& h, const StepGraphon& w,
                                             const StepGraphon& wp, int motif_cap) {
  const double lhs = std::abs(hom_density_graphon(h, w, motif_cap) -
                              hom_density_graphon(h, wp, motif_cap));
  const double rhs = static_cast<double>(h.edges().size()) *
                     cut_norm_exact(difference_on_refinement(w, wp));
  return {lhs, rhs};
}

FiniteGraph motif(std::string_view name) {
  if (name == "K2") return FiniteGraph(2, {{0, 1}});
  if (name == "K3") return FiniteGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "P3") return FiniteGraph(3, {{0, 1}, {1, 2}});
  if (name == "P4") return FiniteGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  if (name == "C4") return FiniteGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  if (name == "star3") return FiniteGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  throw invalid_input("unknown motif: " + std::string(name));
}

LabelledGraph labelled_motif(std::string_view name) {
  return LabelledGraph(motif(name), {0});
}

}  // namespace graphonlab
