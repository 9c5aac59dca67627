#include "graphonlab/colored.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphonlab/errors.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

namespace {

void check_colors(const std::vector<int>& colors, std::size_t expected) {
  if (colors.size() != expected)
    throw invalid_input("colored: one color per vertex/block required");
  for (int c : colors)
    if (c < 1) throw invalid_input("colored: colors are integers >= 1");
}

}  // namespace

ColoredGraph::ColoredGraph(FiniteGraph g, std::vector<int> cols)
    : base(std::move(g)), colors(std::move(cols)) {
  check_colors(colors, static_cast<std::size_t>(base.vertex_count()));
}

int ColoredGraph::color_count() const {
  int n = 1;
  for (int c : colors) n = std::max(n, c);
  return n;
}

ColoredStepGraphon::ColoredStepGraphon(StepGraphon w, std::vector<int> cols)
    : base(std::move(w)), colors(std::move(cols)) {
  check_colors(colors, static_cast<std::size_t>(base.block_count()));
}

int ColoredStepGraphon::color_count() const {
  int n = 1;
  for (int c : colors) n = std::max(n, c);
  return n;
}

double ColoredStepGraphon::color_mass(int color) const {
  double m = 0.0;
  for (int b = 0; b < base.block_count(); ++b)
    if (colors[b] == color) m += base.masses()[b];
  return m;
}

ColoredStepGraphon embed_colored_graph(const ColoredGraph& g) {
  const int n = g.base.vertex_count();
  if (n < 1) throw invalid_input("embed_colored_graph: empty graph");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.colors[a] < g.colors[b]; });

  std::vector<double> masses(n, 1.0 / n);
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) {
    colors[i] = g.colors[order[i]];
    for (int j = 0; j < n; ++j)
      values[static_cast<std::size_t>(i) * n + j] =
          g.base.has_edge(order[i], order[j]) ? 1.0 : 0.0;
  }
  return ColoredStepGraphon(StepGraphon(std::move(masses), std::move(values), true),
                            std::move(colors));
}

double colored_hom_density_graph(const ColoredGraph& h, const ColoredGraph& g, int motif_cap) {
  const int hv = h.base.vertex_count();
  if (hv > motif_cap) throw invalid_input("motif exceeds the enumeration cap");
  const int n = g.base.vertex_count();
  if (n == 0) throw invalid_input("colored_hom_density_graph: empty target graph");
  if (hv == 0) return 1.0;

  std::vector<int> map(hv, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (int v = 0; v < hv; ++v) {
      if (g.colors[map[v]] != h.colors[v]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (auto [u, v] : h.base.edges()) {
        if (map[u] == map[v] || !g.base.has_edge(map[u], map[v])) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
    int d = 0;
    for (; d < hv; ++d) {
      if (++map[d] < n) break;
      map[d] = 0;
    }
    if (d == hv) break;
  }
  return static_cast<double>(count) / std::pow(static_cast<double>(n), hv);
}

double colored_hom_density_graphon(const ColoredGraph& h, const ColoredStepGraphon& w,
                                   int motif_cap) {
  const int hv = h.base.vertex_count();
  if (hv > motif_cap) throw invalid_input("motif exceeds the enumeration cap");
  if (hv == 0) return 1.0;
  const int k = w.base.block_count();

  std::vector<int> map(hv, 0);
  double total = 0.0;
  while (true) {
    double term = 1.0;
    for (int v = 0; v < hv; ++v) {
      if (w.colors[map[v]] != h.colors[v]) {
        term = 0.0;
        break;
      }
      term *= w.base.masses()[map[v]];
    }
    if (term != 0.0)
      for (auto [u, v] : h.base.edges()) term *= w.base.value(map[u], map[v]);
    total += term;
    int d = 0;
    for (; d < hv; ++d) {
      if (++map[d] < k) break;
      map[d] = 0;
    }
    if (d == hv) break;
  }
  return total;
}

namespace {

// Sum over colors of the symmetric-difference mass of the color fibers, on a
// merged refinement of the two partitions.
double color_mismatch(const ColoredStepGraphon& a, const ColoredStepGraphon& b) {
  const CommonRefinement ref = common_refine(a.base, b.base);
  double total = 0.0;
  for (std::size_t c = 0; c < ref.masses.size(); ++c)
    if (a.colors[ref.index1[c]] != b.colors[ref.index2[c]]) total += 2.0 * ref.masses[c];
  return total;
}

}  // namespace

double colored_cut_norm(const ColoredStepGraphon& w1, const ColoredStepGraphon& w2) {
  const double kernel = cut_norm_auto(difference_on_refinement(w1.base, w2.base));
  return kernel + color_mismatch(w1, w2);
}

ColoredStepGraphon refine_colored(const ColoredStepGraphon& w, int n) {
  RefineResult r = refine(w.base, n);
  std::vector<int> colors(n);
  for (int c = 0; c < n; ++c) {
    const double mid = (c + 0.5) / n;
    colors[c] = w.colors[w.base.block_of(mid)];
  }
  return ColoredStepGraphon(std::move(r.graphon), std::move(colors));
}

namespace {

StepGraphon aligned_difference(const StepGraphon& a, const StepGraphon& b,
                               const std::vector<int>& perm) {
  const int n = a.block_count();
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      values[static_cast<std::size_t>(i) * n + j] = a.value(i, j) - b.value(perm[i], perm[j]);
  return StepGraphon(a.masses(), std::move(values), false);
}

int color_mismatch_count(const std::vector<int>& ca, const std::vector<int>& cb,
                         const std::vector<int>& perm) {
  int m = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) m += ca[i] != cb[perm[i]];
  return m;
}

// Alignment objective: mean absolute kernel misfit plus the colored term.
double combined_cost(const ColoredStepGraphon& a, const ColoredStepGraphon& b,
                     const std::vector<int>& perm) {
  const int n = a.base.block_count();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += std::abs(a.base.value(i, j) - b.base.value(perm[i], perm[j]));
  return s / (static_cast<double>(n) * n) +
         2.0 * color_mismatch_count(a.colors, b.colors, perm) / n;
}

double combined_swap_delta(const ColoredStepGraphon& a, const ColoredStepGraphon& b,
                           const std::vector<int>& perm, int p, int q) {
  const int n = a.base.block_count();
  const int bp = perm[p], bq = perm[q];
  double delta = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const int bi = perm[i];
    delta += 2.0 * (std::abs(a.base.value(i, p) - b.base.value(bi, bq)) -
                    std::abs(a.base.value(i, p) - b.base.value(bi, bp)));
    delta += 2.0 * (std::abs(a.base.value(i, q) - b.base.value(bi, bp)) -
                    std::abs(a.base.value(i, q) - b.base.value(bi, bq)));
  }
  delta += std::abs(a.base.value(p, p) - b.base.value(bq, bq)) -
           std::abs(a.base.value(p, p) - b.base.value(bp, bp));
  delta += std::abs(a.base.value(q, q) - b.base.value(bp, bp)) -
           std::abs(a.base.value(q, q) - b.base.value(bq, bq));
  delta /= static_cast<double>(n) * n;

  const int before = (a.colors[p] != b.colors[bp]) + (a.colors[q] != b.colors[bq]);
  const int after = (a.colors[p] != b.colors[bq]) + (a.colors[q] != b.colors[bp]);
  delta += 2.0 * (after - before) / n;
  return delta;
}

std::vector<int> color_degree_sorted_alignment(const ColoredStepGraphon& a,
                                               const ColoredStepGraphon& b) {
  const int n = a.base.block_count();
  const StepFunction da = a.base.degree_function();
  const StepFunction db = b.base.degree_function();
  std::vector<int> o1(n), o2(n);
  std::iota(o1.begin(), o1.end(), 0);
  std::iota(o2.begin(), o2.end(), 0);
  auto key_less = [](const StepFunction& d, const std::vector<int>& colors) {
    return [&d, &colors](int x, int y) {
      if (colors[x] != colors[y]) return colors[x] < colors[y];
      return d.value(x) < d.value(y);
    };
  };
  std::stable_sort(o1.begin(), o1.end(), key_less(da, a.colors));
  std::stable_sort(o2.begin(), o2.end(), key_less(db, b.colors));
  std::vector<int> perm(n);
  for (int r = 0; r < n; ++r) perm[o1[r]] = o2[r];
  return perm;
}

std::vector<int> anneal_colored(const ColoredStepGraphon& a, const ColoredStepGraphon& b,
                                std::vector<int> perm, std::uint64_t seed) {
  const int n = a.base.block_count();
  if (n < 2) return perm;
  CounterRng rng = CounterRng(seed).substream(0x636f6c);
  double cost = combined_cost(a, b, perm);
  std::vector<int> best_perm = perm;
  double best_cost = cost;

  const int proposals = std::max(4000, 60 * n);
  const double t0 = std::max(cost / n, 1e-9);
  const double t1 = 1e-6 * t0 + 1e-15;
  for (int t = 0; t < proposals; ++t) {
    const double frac = static_cast<double>(t) / proposals;
    const double temp = t0 * std::pow(t1 / t0, frac);
    const int p = static_cast<int>(rng.next_below(n));
    int q = static_cast<int>(rng.next_below(n - 1));
    if (q >= p) ++q;
    const double delta = combined_swap_delta(a, b, perm, p, q);
    if (delta <= 0.0 || rng.next_unit() < std::exp(-delta / temp)) {
      std::swap(perm[p], perm[q]);
      cost += delta;
      if (cost < best_cost) {
        best_cost = cost;
        best_perm = perm;
      }
    }
  }
  return best_perm;
}

}  // namespace

ColoredCutDistanceReport colored_cut_distance_upper_report(const ColoredStepGraphon& w1,
                                                           const ColoredStepGraphon& w2, int n,
                                                           AlignMode mode, std::uint64_t seed) {
  if (mode == AlignMode::Exhaustive && n > 9)
    throw invalid_input("colored_cut_distance_upper: exhaustive mode requires n <= 9");
  const ColoredStepGraphon a = refine_colored(w1, n);
  const ColoredStepGraphon b = refine_colored(w2, n);

  ColoredCutDistanceReport report;
  auto evaluate = [&](const std::vector<int>& perm, bool exact) {
    const StepGraphon diff = aligned_difference(a.base, b.base, perm);
    const double kernel = exact ? cut_norm_exact(diff) : cut_norm_auto(diff, 8, seed);
    const double color = 2.0 * color_mismatch_count(a.colors, b.colors, perm) / n;
    return std::make_pair(kernel, color);
  };

  if (mode == AlignMode::Exhaustive) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1.0;
    do {
      auto [kernel, color] = evaluate(perm, true);
      if (best < 0.0 || kernel + color < best) {
        best = kernel + color;
        report.kernel_term = kernel;
        report.color_term = color;
        report.alignment = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    report.distance = best;
    return report;
  }

  std::vector<std::vector<int>> candidates;
  candidates.push_back(BlockAlignment::identity(n).perm);
  candidates.push_back(color_degree_sorted_alignment(a, b));
  candidates.push_back(anneal_colored(a, b, candidates.back(), seed));

  double best = -1.0;
  for (const auto& perm : candidates) {
    auto [kernel, color] = evaluate(perm, false);
    if (best < 0.0 || kernel + color < best) {
      best = kernel + color;
      report.kernel_term = kernel;
      report.color_term = color;
      report.alignment = perm;
    }
  }
  report.distance = best;
  return report;
}

double colored_cut_distance_upper(const ColoredStepGraphon& w1, const ColoredStepGraphon& w2,
                                  int n, AlignMode mode, std::uint64_t seed) {
  return colored_cut_distance_upper_report(w1, w2, n, mode, seed).distance;
}

ColoredGraph sample_colored(int n, const ColoredStepGraphon& w, std::uint64_t seed) {
  if (n < 1) throw invalid_input("sample_colored: n must be >= 1");
  CounterRng root(seed);
  CounterRng coords = root.substream(0);
  CounterRng coins = root.substream(1);

  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = coords.next_unit();

  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = w.colors[w.base.block_of(x[i])];

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (coins.next_coin(w.base.evaluate(x[i], x[j]))) edges.emplace_back(j, i);
  return ColoredGraph(FiniteGraph(n, std::move(edges)), std::move(colors));
}

}  // namespace graphonlab
