#include "graphonlab/cut_norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "graphonlab/errors.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

int exact_block_limit() {
  static const int limit = [] {
    if (const char* env = std::getenv("GRAPHONLAB_EXACT_K")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 22;
  }();
  return limit;
}

namespace {

// Cell integrals c_ij = K_ij * mu_i * mu_j.
std::vector<double> cell_integrals(const StepGraphon& g) {
  const int k = g.block_count();
  std::vector<double> c(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      c[static_cast<std::size_t>(i) * k + j] =
          g.value(i, j) * g.masses()[i] * g.masses()[j];
  return c;
}

// DFS over row subsets; column sums are rebuilt along each path (depth <= k
// additions), so no drift accumulates across the 2^k enumeration.
struct SubsetMax {
  int k;
  const double* c;
  std::vector<std::vector<double>> buf;
  double best = 0.0;

  SubsetMax(int k_, const double* c_) : k(k_), c(c_), buf(k_ + 1, std::vector<double>(k_, 0.0)) {}

  void run(int d, const double* col) {
    if (d == k) {
      double pos = 0.0, neg = 0.0;
      for (int j = 0; j < k; ++j) {
        const double v = col[j];
        if (v > 0.0) pos += v;
        else neg -= v;
      }
      best = std::max(best, std::max(pos, neg));
      return;
    }
    run(d + 1, col);
    double* nxt = buf[d + 1].data();
    const double* row = c + static_cast<std::size_t>(d) * k;
    for (int j = 0; j < k; ++j) nxt[j] = col[j] + row[j];
    run(d + 1, nxt);
  }
};

}  // namespace

double cut_norm_exact(const StepGraphon& g, int exact_limit) {
  const int k = g.block_count();
  if (k > exact_limit) throw invalid_input("cut_norm_exact: block count above exact limit");
  const std::vector<double> c = cell_integrals(g);
  SubsetMax dfs(k, c.data());
  dfs.run(0, dfs.buf[0].data());
  return dfs.best;
}

namespace {

// One alternation pass from a row subset, for a fixed sign branch.
// Returns the best rectangle value found; `a` is updated in place.
double alternate(const std::vector<double>& c, int k, std::vector<char>& a, int branch) {
  std::vector<double> col(k), row(k);
  double val = 0.0;
  for (int round = 0; round < 4 * k + 8; ++round) {
    std::fill(col.begin(), col.end(), 0.0);
    for (int i = 0; i < k; ++i) {
      if (!a[i]) continue;
      const double* r = c.data() + static_cast<std::size_t>(i) * k;
      for (int j = 0; j < k; ++j) col[j] += r[j];
    }
    double v = 0.0;
    std::vector<char> b(k, 0);
    for (int j = 0; j < k; ++j) {
      if (branch * col[j] > 0.0) {
        b[j] = 1;
        v += branch * col[j];
      }
    }
    val = std::max(val, v);

    std::fill(row.begin(), row.end(), 0.0);
    for (int j = 0; j < k; ++j) {
      if (!b[j]) continue;
      for (int i = 0; i < k; ++i) row[i] += c[static_cast<std::size_t>(i) * k + j];
    }
    std::vector<char> a2(k, 0);
    for (int i = 0; i < k; ++i)
      if (branch * row[i] > 0.0) a2[i] = 1;
    if (a2 == a) break;
    a = std::move(a2);
  }
  return val;
}

}  // namespace

double cut_norm_lower(const StepGraphon& g, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw invalid_input("cut_norm_lower: restarts must be >= 1");
  const int k = g.block_count();
  const std::vector<double> c = cell_integrals(g);
  CounterRng rng = CounterRng(seed).substream(0x6c6f77);

  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    std::vector<char> start(k, 0);
    if (r == 0) {
      std::fill(start.begin(), start.end(), 1);
    } else if (r <= k) {
      start[r - 1] = 1;
    } else {
      for (int i = 0; i < k; ++i) start[i] = rng.next_coin(0.5) ? 1 : 0;
    }
    for (int branch : {+1, -1}) {
      std::vector<char> a = start;
      best = std::max(best, alternate(c, k, a, branch));
    }
  }
  return best;
}

double cut_norm_auto(const StepGraphon& g, int restarts, std::uint64_t seed, int exact_limit) {
  if (g.block_count() <= exact_limit) return cut_norm_exact(g, exact_limit);
  return cut_norm_lower(g, restarts, seed);
}

namespace {

// DFS over column sign patterns with s_0 fixed to +1 (global flips do not
// change the objective).
struct SignMax {
  int k;
  const double* c;
  std::vector<std::vector<double>> buf;
  double best = 0.0;

  SignMax(int k_, const double* c_) : k(k_), c(c_), buf(k_ + 1, std::vector<double>(k_, 0.0)) {}

  void run(int d, const double* r) {
    if (d == k) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) s += std::abs(r[i]);
      best = std::max(best, s);
      return;
    }
    double* nxt = buf[d + 1].data();
    for (int i = 0; i < k; ++i) nxt[i] = r[i] + c[static_cast<std::size_t>(i) * k + d];
    run(d + 1, nxt);
    for (int i = 0; i < k; ++i) nxt[i] = r[i] - c[static_cast<std::size_t>(i) * k + d];
    run(d + 1, nxt);
  }
};

}  // namespace

double op_norm_inf_to_1(const StepGraphon& g, int exact_limit) {
  const int k = g.block_count();
  if (k > exact_limit) throw invalid_input("op_norm_inf_to_1: block count above exact limit");
  const std::vector<double> c = cell_integrals(g);
  SignMax dfs(k, c.data());
  // first column fixed to +1
  std::vector<double> r0(k);
  for (int i = 0; i < k; ++i) r0[i] = c[static_cast<std::size_t>(i) * k];
  dfs.run(1, r0.data());
  return dfs.best;
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

// L1 misfit of the alignment, without mass weights (blocks are equal-mass).
double align_cost(const StepGraphon& a, const StepGraphon& b, const std::vector<int>& perm) {
  const int n = a.block_count();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += std::abs(a.value(i, j) - b.value(perm[i], perm[j]));
  return s;
}

double swap_delta(const StepGraphon& a, const StepGraphon& b, const std::vector<int>& perm,
                  int p, int q) {
  const int n = a.block_count();
  const int bp = perm[p], bq = perm[q];
  double delta = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const int bi = perm[i];
    // column p and q entries of row i, counted twice by symmetry
    delta += 2.0 * (std::abs(a.value(i, p) - b.value(bi, bq)) -
                    std::abs(a.value(i, p) - b.value(bi, bp)));
    delta += 2.0 * (std::abs(a.value(i, q) - b.value(bi, bp)) -
                    std::abs(a.value(i, q) - b.value(bi, bq)));
  }
  delta += std::abs(a.value(p, p) - b.value(bq, bq)) - std::abs(a.value(p, p) - b.value(bp, bp));
  delta += std::abs(a.value(q, q) - b.value(bp, bp)) - std::abs(a.value(q, q) - b.value(bq, bq));
  // the (p,q) cell maps to (bq,bp) = (bp,bq) by symmetry: unchanged
  return delta;
}

std::vector<int> degree_sorted_alignment(const StepGraphon& a, const StepGraphon& b) {
  const int n = a.block_count();
  const StepFunction da = a.degree_function();
  const StepFunction db = b.degree_function();
  std::vector<int> o1(n), o2(n);
  std::iota(o1.begin(), o1.end(), 0);
  std::iota(o2.begin(), o2.end(), 0);
  std::stable_sort(o1.begin(), o1.end(), [&](int x, int y) { return da.value(x) < da.value(y); });
  std::stable_sort(o2.begin(), o2.end(), [&](int x, int y) { return db.value(x) < db.value(y); });
  std::vector<int> perm(n);
  for (int r = 0; r < n; ++r) perm[o1[r]] = o2[r];
  return perm;
}

std::vector<int> anneal_alignment(const StepGraphon& a, const StepGraphon& b,
                                  std::vector<int> perm, std::uint64_t seed) {
  const int n = a.block_count();
  if (n < 2) return perm;
  CounterRng rng = CounterRng(seed).substream(0x616c6e);
  double cost = align_cost(a, b, perm);
  std::vector<int> best_perm = perm;
  double best_cost = cost;

  const int proposals = std::max(4000, 60 * n);
  // temperature on the scale of one swap's misfit change
  const double t0 = std::max(cost / n, 1e-9);
  const double t1 = 1e-6 * t0 + 1e-15;
  for (int t = 0; t < proposals; ++t) {
    const double frac = static_cast<double>(t) / proposals;
    const double temp = t0 * std::pow(t1 / t0, frac);
    const int p = static_cast<int>(rng.next_below(n));
    int q = static_cast<int>(rng.next_below(n - 1));
    if (q >= p) ++q;
    const double delta = swap_delta(a, b, perm, p, q);
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

CutDistanceReport cut_distance_upper_report(const StepGraphon& w1, const StepGraphon& w2,
                                            int n, AlignMode mode, std::uint64_t seed) {
  if (mode == AlignMode::Exhaustive && n > 9)
    throw invalid_input("cut_distance_upper: exhaustive mode requires n <= 9");
  RefineResult r1 = refine(w1, n);
  RefineResult r2 = refine(w2, n);
  CutDistanceReport report;
  report.refine_error_1 = r1.l1_error;
  report.refine_error_2 = r2.l1_error;

  const StepGraphon& a = r1.graphon;
  const StepGraphon& b = r2.graphon;

  if (mode == AlignMode::Exhaustive) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1.0;
    std::vector<int> best_perm = perm;
    do {
      const double d = cut_norm_exact(aligned_difference(a, b, perm));
      if (best < 0.0 || d < best) {
        best = d;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    report.distance = best;
    report.alignment = best_perm;
    return report;
  }

  std::vector<std::vector<int>> candidates;
  candidates.push_back(BlockAlignment::identity(n).perm);
  candidates.push_back(degree_sorted_alignment(a, b));
  candidates.push_back(anneal_alignment(a, b, candidates.back(), seed));

  double best = -1.0;
  std::vector<int> best_perm;
  for (const auto& perm : candidates) {
    const double d = cut_norm_auto(aligned_difference(a, b, perm), 8, seed);
    if (best < 0.0 || d < best) {
      best = d;
      best_perm = perm;
    }
  }
  report.distance = best;
  report.alignment = best_perm;
  return report;
}

double cut_distance_upper(const StepGraphon& w1, const StepGraphon& w2, int n,
                          AlignMode mode, std::uint64_t seed) {
  return cut_distance_upper_report(w1, w2, n, mode, seed).distance;
}

}  // namespace graphonlab
