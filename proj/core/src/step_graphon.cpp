#include "graphonlab/step_graphon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphonlab/errors.hpp"

namespace graphonlab {

namespace {
constexpr double kMassTol = 1e-12;
}

FiniteGraph::FiniteGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw invalid_input("FiniteGraph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw invalid_input("FiniteGraph: edge endpoint out of range");
    if (u == v) throw invalid_input("FiniteGraph: loop edge");
    if (u > v) std::swap(u, v);
    auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (cell) continue;  // collapse duplicates
    cell = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

int FiniteGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v) * n_ + u];
  return d;
}

FiniteGraph FiniteGraph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw invalid_input("relabel: permutation size mismatch");
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return FiniteGraph(n_, std::move(es));
}

StepFunction::StepFunction(std::vector<double> masses, std::vector<double> values, int dim)
    : masses_(std::move(masses)), values_(std::move(values)), dim_(dim) {
  if (dim_ < 1) throw invalid_input("StepFunction: dimension must be >= 1");
  if (values_.size() != masses_.size() * static_cast<std::size_t>(dim_))
    throw invalid_input("StepFunction: value count does not match blocks x dim");
  double total = 0.0;
  for (double m : masses_) {
    if (!(m > 0.0)) throw invalid_input("StepFunction: nonpositive block mass");
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTol)
    throw invalid_input("StepFunction: masses must sum to 1");
}

double StepFunction::integral(int d) const {
  double s = 0.0;
  for (int b = 0; b < block_count(); ++b) s += masses_[b] * value(b, d);
  return s;
}

double StepFunction::inner(const StepFunction& a, const StepFunction& b, int da, int db) {
  if (a.block_count() != b.block_count())
    throw invalid_input("StepFunction::inner: block mismatch");
  double s = 0.0;
  for (int i = 0; i < a.block_count(); ++i)
    s += a.masses()[i] * a.value(i, da) * b.value(i, db);
  return s;
}

double StepFunction::l1_distance(const StepFunction& a, const StepFunction& b) {
  if (a.dim() != b.dim()) throw invalid_input("StepFunction::l1_distance: dim mismatch");
  const CommonRefinement ref = common_refine_masses(a.masses(), b.masses());
  double total = 0.0;
  for (std::size_t c = 0; c < ref.masses.size(); ++c) {
    double sq = 0.0;
    for (int d = 0; d < a.dim(); ++d) {
      const double diff = a.value(ref.index1[c], d) - b.value(ref.index2[c], d);
      sq += diff * diff;
    }
    total += ref.masses[c] * std::sqrt(sq);
  }
  return total;
}

StepGraphon::StepGraphon(std::vector<double> masses, std::vector<double> values, bool graphon)
    : k_(static_cast<int>(masses.size())),
      graphon_(graphon),
      masses_(std::move(masses)),
      values_(std::move(values)) {
  if (k_ == 0) throw invalid_input("StepGraphon: needs at least one block");
  if (values_.size() != static_cast<std::size_t>(k_) * k_)
    throw invalid_input("StepGraphon: values must be k x k");
  double total = 0.0;
  for (double m : masses_) {
    if (!(m > 0.0)) throw invalid_input("StepGraphon: nonpositive block mass");
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTol)
    throw invalid_input("StepGraphon: masses must sum to 1 within 1e-12");
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < i; ++j)
      if (value(i, j) != value(j, i))
        throw invalid_input("StepGraphon: values must be exactly symmetric");
  if (graphon_) {
    for (double v : values_)
      if (!(v >= 0.0 && v <= 1.0))
        throw invalid_input("StepGraphon: graphon-flagged values must lie in [0,1]");
  }
  cum_.resize(k_ + 1);
  cum_[0] = 0.0;
  for (int i = 0; i < k_; ++i) cum_[i + 1] = cum_[i] + masses_[i];
  cum_[k_] = 1.0;
}

StepGraphon StepGraphon::constant(double p, int blocks) {
  std::vector<double> masses(blocks, 1.0 / blocks);
  std::vector<double> values(static_cast<std::size_t>(blocks) * blocks, p);
  const bool graphon = p >= 0.0 && p <= 1.0;
  return StepGraphon(std::move(masses), std::move(values), graphon);
}

int StepGraphon::block_of(double x) const {
  if (x <= 0.0) return 0;
  // blocks are (b_{i-1}, b_i]: first boundary >= x
  const auto it = std::lower_bound(cum_.begin() + 1, cum_.end(), x);
  const int idx = static_cast<int>(it - cum_.begin()) - 1;
  return std::min(idx, k_ - 1);
}

double StepGraphon::evaluate(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw invalid_input("evaluate: coordinates must lie in [0,1]");
  return value(block_of(x), block_of(y));
}

StepFunction StepGraphon::degree_function() const {
  std::vector<double> d(k_);
  for (int i = 0; i < k_; ++i) {
    double s = 0.0;
    for (int j = 0; j < k_; ++j) s += value(i, j) * masses_[j];
    d[i] = s;
  }
  return StepFunction(masses_, std::move(d), 1);
}

StepGraphon StepGraphon::scaled(double c) const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = c * values_[i];
  bool graphon = true;
  for (double x : v)
    if (!(x >= 0.0 && x <= 1.0)) { graphon = false; break; }
  return StepGraphon(masses_, std::move(v), graphon);
}

StepGraphon StepGraphon::difference(const StepGraphon& other) const {
  if (other.k_ != k_ || other.masses_ != masses_)
    throw invalid_input("difference: block structure mismatch, refine first");
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] - other.values_[i];
  return StepGraphon(masses_, std::move(v), false);
}

StepGraphon StepGraphon::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != k_)
    throw invalid_input("permuted: permutation size mismatch");
  std::vector<double> masses(k_), v(values_.size());
  for (int i = 0; i < k_; ++i) masses[i] = masses_[perm[i]];
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      v[static_cast<std::size_t>(i) * k_ + j] = value(perm[i], perm[j]);
  return StepGraphon(std::move(masses), std::move(v), graphon_);
}

StepGraphon graph_to_graphon(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw invalid_input("graph_to_graphon: empty graph");
  std::vector<double> masses(n, 1.0 / n);
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [u, v] : g.edges()) {
    values[static_cast<std::size_t>(u) * n + v] = 1.0;
    values[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  return StepGraphon(std::move(masses), std::move(values), true);
}

namespace {

// Sorted union of two boundary chains; points closer than tol are fused.
std::vector<double> merge_boundaries(const std::vector<double>& a,
                                     const std::vector<double>& b, double tol) {
  std::vector<double> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  out.push_back(0.0);
  for (double x : all) {
    if (x <= out.back() + tol) continue;
    out.push_back(x);
  }
  if (1.0 - out.back() <= tol) out.back() = 1.0;
  else out.push_back(1.0);
  return out;
}

std::vector<double> cumulative(const std::vector<double>& masses) {
  std::vector<double> cum(masses.size() + 1, 0.0);
  for (std::size_t i = 0; i < masses.size(); ++i) cum[i + 1] = cum[i] + masses[i];
  cum.back() = 1.0;
  return cum;
}

int locate(const std::vector<double>& cum, double mid) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), mid);
  int idx = static_cast<int>(it - cum.begin()) - 1;
  idx = std::max(idx, 0);
  return std::min(idx, static_cast<int>(cum.size()) - 2);
}

}  // namespace

CommonRefinement common_refine_masses(const std::vector<double>& ma,
                                      const std::vector<double>& mb, double tol) {
  const auto ca = cumulative(ma);
  const auto cb = cumulative(mb);
  const auto merged = merge_boundaries(ca, cb, tol);
  CommonRefinement ref;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double lo = merged[i], hi = merged[i + 1];
    ref.masses.push_back(hi - lo);
    const double mid = 0.5 * (lo + hi);
    ref.index1.push_back(locate(ca, mid));
    ref.index2.push_back(locate(cb, mid));
  }
  return ref;
}

CommonRefinement common_refine(const StepGraphon& a, const StepGraphon& b, double tol) {
  return common_refine_masses(a.masses(), b.masses(), tol);
}

StepGraphon difference_on_refinement(const StepGraphon& a, const StepGraphon& b) {
  const CommonRefinement ref = common_refine(a, b);
  const int k = static_cast<int>(ref.masses.size());
  std::vector<double> values(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      values[static_cast<std::size_t>(i) * k + j] =
          a.value(ref.index1[i], ref.index1[j]) - b.value(ref.index2[i], ref.index2[j]);
  return StepGraphon(ref.masses, std::move(values), false);
}

double l1_distance(const StepGraphon& a, const StepGraphon& b) {
  const CommonRefinement ref = common_refine(a, b);
  const int k = static_cast<int>(ref.masses.size());
  double s = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s += ref.masses[i] * ref.masses[j] *
           std::abs(a.value(ref.index1[i], ref.index1[j]) -
                    b.value(ref.index2[i], ref.index2[j]));
  return s;
}

double l2_distance(const StepGraphon& a, const StepGraphon& b) {
  const CommonRefinement ref = common_refine(a, b);
  const int k = static_cast<int>(ref.masses.size());
  double s = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double d = a.value(ref.index1[i], ref.index1[j]) -
                       b.value(ref.index2[i], ref.index2[j]);
      s += ref.masses[i] * ref.masses[j] * d * d;
    }
  return std::sqrt(s);
}

RefineResult refine(const StepGraphon& w, int n) {
  const int k = w.block_count();
  if (n < k) throw invalid_input("refine: target block count below current");
  const auto& cum = w.boundaries();
  std::vector<double> masses(n, 1.0 / n);
  std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);

  // Overlap weights of each new equal cell against the original blocks.
  // overlaps[c] lists (orig block, width) covering ((c)/n, (c+1)/n).
  std::vector<std::vector<std::pair<int, double>>> overlaps(n);
  for (int c = 0; c < n; ++c) {
    const double lo = static_cast<double>(c) / n;
    const double hi = static_cast<double>(c + 1) / n;
    for (int b = 0; b < k; ++b) {
      const double s = std::max(lo, cum[b]);
      const double e = std::min(hi, cum[b + 1]);
      if (e - s > 1e-15) overlaps[c].emplace_back(b, e - s);
    }
  }

  double err = 0.0;
  for (int ci = 0; ci < n; ++ci)
    for (int cj = 0; cj < n; ++cj) {
      double avg = 0.0;
      double area = 0.0;
      for (auto [bi, wi] : overlaps[ci])
        for (auto [bj, wj] : overlaps[cj]) {
          avg += wi * wj * w.value(bi, bj);
          area += wi * wj;
        }
      avg /= area;
      values[static_cast<std::size_t>(ci) * n + cj] = avg;
      for (auto [bi, wi] : overlaps[ci])
        for (auto [bj, wj] : overlaps[cj])
          err += wi * wj * std::abs(w.value(bi, bj) - avg);
    }

  // Symmetrize exactly; averaging is symmetric up to float ordering.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const double v = values[static_cast<std::size_t>(i) * n + j];
      values[static_cast<std::size_t>(j) * n + i] = v;
    }

  const bool graphon = w.is_graphon();
  return RefineResult{StepGraphon(std::move(masses), std::move(values), graphon), err};
}

BlockAlignment::BlockAlignment(std::vector<int> p) : perm(std::move(p)) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
      throw invalid_input("BlockAlignment: not a bijection");
    seen[v] = 1;
  }
}

BlockAlignment BlockAlignment::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return BlockAlignment(std::move(p));
}

}  // namespace graphonlab
