#include "graphonlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "graphonlab/cut_norm.hpp"
#include "graphonlab/errors.hpp"
#include "graphonlab/rng.hpp"
#include "graphonlab/sampling.hpp"

namespace graphonlab {

namespace {

double off_diagonal_frobenius(const std::vector<double>& s, int k) {
  double sum = 0.0;
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      const double v = s[static_cast<std::size_t>(p) * k + q];
      sum += 2.0 * v * v;
    }
  return std::sqrt(sum);
}

// Cyclic Jacobi sweeps on a symmetric matrix; eigenvectors accumulate in v
// (column i of v pairs with diagonal entry i).
void jacobi(std::vector<double>& s, std::vector<double>& v, int k, double tol = 1e-12) {
  v.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i) * k + i] = 1.0;
  if (k == 1) return;

  auto at = [&](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i) * k + j];
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_frobenius(s, k) <= tol) return;
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q) {
        const double apq = at(s, p, q);
        if (std::abs(apq) < 1e-300) {
          at(s, p, q) = at(s, q, p) = 0.0;
          continue;
        }
        const double theta = (at(s, q, q) - at(s, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (int i = 0; i < k; ++i) {
          const double sip = at(s, i, p), siq = at(s, i, q);
          at(s, i, p) = c * sip - sn * siq;
          at(s, i, q) = sn * sip + c * siq;
        }
        for (int j = 0; j < k; ++j) {
          const double spj = at(s, p, j), sqj = at(s, q, j);
          at(s, p, j) = c * spj - sn * sqj;
          at(s, q, j) = sn * spj + c * sqj;
        }
        at(s, p, q) = at(s, q, p) = 0.0;
        for (int i = 0; i < k; ++i) {
          const double vip = at(v, i, p), viq = at(v, i, q);
          at(v, i, p) = c * vip - sn * viq;
          at(v, i, q) = sn * vip + c * viq;
        }
      }
  }
}

// Flip an eigenfunction so its inner product with 1 (or the first usable
// block indicator) is positive.  Returns -1 for the constant test function,
// else the block index used.
int normalize_sign(std::vector<double>& f, const std::vector<double>& masses) {
  const int k = static_cast<int>(masses.size());
  double s = 0.0;
  for (int b = 0; b < k; ++b) s += masses[b] * f[b];
  if (std::abs(s) > 1e-9) {
    if (s < 0.0)
      for (double& x : f) x = -x;
    return -1;
  }
  for (int b = 0; b < k; ++b) {
    if (std::abs(masses[b] * f[b]) > 1e-9) {
      if (masses[b] * f[b] < 0.0)
        for (double& x : f) x = -x;
      return b;
    }
  }
  return -1;
}

struct EigenPair {
  double value;
  std::vector<double> f;  // block values
};

// Sort by |lambda| descending, ties by signed value descending.
void sort_pairs(std::vector<EigenPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    const double aa = std::abs(a.value), ab = std::abs(b.value);
    if (aa != ab) return aa > ab;
    return a.value > b.value;
  });
}

SpectrumResult assemble(std::vector<EigenPair> pairs, const std::vector<double>& masses,
                        double gap_tol) {
  sort_pairs(pairs);
  SpectrumResult out;
  out.gap_tol = gap_tol;
  const int k = static_cast<int>(pairs.size());
  out.eigenvalues.reserve(k);
  for (auto& p : pairs) {
    const int fb = normalize_sign(p.f, masses);
    out.sign_fallback.push_back(fb);
    out.eigenvalues.push_back(p.value);
    out.eigenfunctions.emplace_back(masses, std::move(p.f), 1);
  }
  out.gaps.resize(k);
  for (int i = 0; i < k; ++i)
    out.gaps[i] = i + 1 < k ? std::abs(out.eigenvalues[i]) - std::abs(out.eigenvalues[i + 1])
                            : std::abs(out.eigenvalues[i]);
  out.simple.resize(k);
  for (int i = 0; i < k; ++i) {
    const double before = i == 0 ? std::numeric_limits<double>::infinity() : out.gaps[i - 1];
    const double after = i + 1 < k ? out.gaps[i] : std::numeric_limits<double>::infinity();
    out.simple[i] = before > gap_tol && after > gap_tol;
  }
  return out;
}

// Mass-conjugated matrix of the kernel operator: sqrt(mu_i) V_ij sqrt(mu_j).
std::vector<double> conjugated_matrix(const StepGraphon& w) {
  const int k = w.block_count();
  std::vector<double> root(k);
  for (int i = 0; i < k; ++i) root[i] = std::sqrt(w.masses()[i]);
  std::vector<double> s(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s[static_cast<std::size_t>(i) * k + j] = root[i] * w.value(i, j) * root[j];
  return s;
}

std::vector<EigenPair> matrix_eigenpairs(std::vector<double> s,
                                         const std::vector<double>& masses) {
  const int k = static_cast<int>(masses.size());
  std::vector<double> v;
  jacobi(s, v, k);
  std::vector<EigenPair> pairs(k);
  for (int e = 0; e < k; ++e) {
    pairs[e].value = s[static_cast<std::size_t>(e) * k + e];
    pairs[e].f.resize(k);
    for (int b = 0; b < k; ++b)
      pairs[e].f[b] = v[static_cast<std::size_t>(b) * k + e] / std::sqrt(masses[b]);
  }
  return pairs;
}

}  // namespace

SpectrumResult eigendecompose(const StepGraphon& w, double gap_tol) {
  return assemble(matrix_eigenpairs(conjugated_matrix(w), w.masses()), w.masses(), gap_tol);
}

StepGraphon eigenprojection(const SpectrumResult& spec, int k, double tie_tol) {
  const int total = static_cast<int>(spec.eigenvalues.size());
  if (k < 0 || k >= total) throw invalid_input("eigenprojection: index out of range");
  const double target = std::abs(spec.eigenvalues[k]);
  const auto& masses = spec.eigenfunctions[k].masses();
  const int blocks = static_cast<int>(masses.size());
  std::vector<double> values(static_cast<std::size_t>(blocks) * blocks, 0.0);
  for (int e = 0; e < total; ++e) {
    if (std::abs(std::abs(spec.eigenvalues[e]) - target) > tie_tol) continue;
    const StepFunction& f = spec.eigenfunctions[e];
    for (int i = 0; i < blocks; ++i)
      for (int j = 0; j < blocks; ++j)
        values[static_cast<std::size_t>(i) * blocks + j] += f.value(i) * f.value(j);
  }
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < i; ++j)
      values[static_cast<std::size_t>(j) * blocks + i] =
          values[static_cast<std::size_t>(i) * blocks + j];
  return StepGraphon(masses, std::move(values), false);
}

StepGraphon cutoff(const StepGraphon& w, double lambda) {
  if (lambda < 0.0) throw invalid_input("cutoff: lambda must be >= 0");
  const SpectrumResult spec = eigendecompose(w);
  const int blocks = w.block_count();
  std::vector<double> values(static_cast<std::size_t>(blocks) * blocks, 0.0);
  for (std::size_t e = 0; e < spec.eigenvalues.size(); ++e) {
    if (std::abs(spec.eigenvalues[e]) <= lambda) continue;
    const StepFunction& f = spec.eigenfunctions[e];
    for (int i = 0; i < blocks; ++i)
      for (int j = 0; j < blocks; ++j)
        values[static_cast<std::size_t>(i) * blocks + j] +=
            spec.eigenvalues[e] * f.value(i) * f.value(j);
  }
  for (int i = 0; i < blocks; ++i)
    for (int j = 0; j < i; ++j)
      values[static_cast<std::size_t>(j) * blocks + i] =
          values[static_cast<std::size_t>(i) * blocks + j];
  return StepGraphon(w.masses(), std::move(values), false);
}

SpectrumResult unnormalized_laplacian_spectrum(const StepGraphon& w, double gap_tol) {
  const int k = w.block_count();
  const StepFunction d = w.degree_function();
  std::vector<double> s = conjugated_matrix(w);
  for (auto& x : s) x = -x;
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i) * k + i] += d.value(i);
  return assemble(matrix_eigenpairs(std::move(s), w.masses()), w.masses(), gap_tol);
}

NormalizedKernel normalize_kernel(const StepGraphon& w) {
  if (!w.is_graphon()) throw invalid_input("normalize_kernel: input must be graphon-flagged");
  const int k = w.block_count();
  NormalizedKernel out;
  out.degree = w.degree_function();
  out.zero_degree.assign(k, false);

  double vmax = 0.0;
  for (double v : w.raw()) vmax = std::max(vmax, v);

  std::vector<double> values(static_cast<std::size_t>(k) * k, 0.0);
  if (vmax == 0.0) {
    out.zero_degree.assign(k, true);
    out.zero_degree_mass = 1.0;
    out.kernel = StepGraphon(w.masses(), std::move(values), false);
    return out;
  }

  // Canonicalize by the max entry: the normalized kernel is invariant under
  // W -> cW, and dividing out vmax first makes that exact whenever the
  // rescaled input is itself exact.
  std::vector<double> u(w.raw());
  for (double& x : u) x /= vmax;
  std::vector<double> du(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += u[static_cast<std::size_t>(i) * k + j] * w.masses()[j];
    du[i] = s;
  }
  for (int i = 0; i < k; ++i) {
    if (du[i] == 0.0) {
      out.zero_degree[i] = true;
      out.zero_degree_mass += w.masses()[i];
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!out.zero_degree[i] && !out.zero_degree[j])
        values[static_cast<std::size_t>(i) * k + j] =
            u[static_cast<std::size_t>(i) * k + j] / std::sqrt(du[i] * du[j]);
  out.kernel = StepGraphon(w.masses(), std::move(values), false);
  return out;
}

namespace {

// Eigenpairs of the normalized kernel on the positive-degree blocks,
// extended by zero; plus one zero eigenvalue per zero-degree block (as an
// indicator eigenfunction), reported as Laplacian eigenvalues 1 - lambda
// and 0 respectively.
std::vector<EigenPair> normalized_laplacian_pairs(const NormalizedKernel& nk,
                                                  const std::vector<double>& masses) {
  const int k = static_cast<int>(masses.size());
  std::vector<int> pos;
  for (int i = 0; i < k; ++i)
    if (!nk.zero_degree[i]) pos.push_back(i);
  const int kp = static_cast<int>(pos.size());

  std::vector<EigenPair> pairs;
  if (kp > 0) {
    std::vector<double> sub(static_cast<std::size_t>(kp) * kp);
    for (int a = 0; a < kp; ++a)
      for (int b = 0; b < kp; ++b)
        sub[static_cast<std::size_t>(a) * kp + b] = std::sqrt(masses[pos[a]]) *
                                                    nk.kernel.value(pos[a], pos[b]) *
                                                    std::sqrt(masses[pos[b]]);
    std::vector<double> v;
    jacobi(sub, v, kp);
    for (int e = 0; e < kp; ++e) {
      EigenPair p;
      p.value = 1.0 - sub[static_cast<std::size_t>(e) * kp + e];
      p.f.assign(k, 0.0);
      for (int a = 0; a < kp; ++a)
        p.f[pos[a]] = v[static_cast<std::size_t>(a) * kp + e] / std::sqrt(masses[pos[a]]);
      pairs.push_back(std::move(p));
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!nk.zero_degree[i]) continue;
    EigenPair p;
    p.value = 0.0;
    p.f.assign(k, 0.0);
    p.f[i] = 1.0 / std::sqrt(masses[i]);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace

SpectrumResult normalized_laplacian_spectrum(const StepGraphon& w, double gap_tol) {
  const NormalizedKernel nk = normalize_kernel(w);
  return assemble(normalized_laplacian_pairs(nk, w.masses()), w.masses(), gap_tol);
}

LeadingPairs leading_normalized_eigenpairs(const StepGraphon& w, int count, int max_iters,
                                           double tol) {
  const NormalizedKernel nk = normalize_kernel(w);
  const int k = w.block_count();
  std::vector<int> pos;
  for (int i = 0; i < k; ++i)
    if (!nk.zero_degree[i]) pos.push_back(i);
  const int kp = static_cast<int>(pos.size());
  const int p = std::min(count, kp);
  LeadingPairs out;
  if (p == 0) return out;

  // Conjugated positive-part matrix, shifted to (S + I) / 2 so dominance by
  // modulus matches dominance by signed value (spectrum lies in [-1, 1]).
  std::vector<double> a(static_cast<std::size_t>(kp) * kp);
  for (int i = 0; i < kp; ++i)
    for (int j = 0; j < kp; ++j)
      a[static_cast<std::size_t>(i) * kp + j] = 0.5 * std::sqrt(w.masses()[pos[i]]) *
                                                nk.kernel.value(pos[i], pos[j]) *
                                                std::sqrt(w.masses()[pos[j]]);
  for (int i = 0; i < kp; ++i) a[static_cast<std::size_t>(i) * kp + i] += 0.5;

  if (kp <= 160) {
    // Small enough for full sweeps.
    std::vector<double> v;
    jacobi(a, v, kp);
    std::vector<std::pair<double, int>> order(kp);
    for (int e = 0; e < kp; ++e)
      order[e] = {a[static_cast<std::size_t>(e) * kp + e], e};
    std::sort(order.begin(), order.end(), std::greater<>());
    for (int r = 0; r < p; ++r) {
      out.eigenvalues.push_back(2.0 * order[r].first - 1.0);
      std::vector<double> f(k, 0.0);
      for (int i = 0; i < kp; ++i)
        f[pos[i]] = v[static_cast<std::size_t>(i) * kp + order[r].second] /
                    std::sqrt(w.masses()[pos[i]]);
      out.sign_fallback.push_back(normalize_sign(f, w.masses()));
      out.vectors.push_back(std::move(f));
    }
    return out;
  }

  // Subspace iteration with Rayleigh-Ritz extraction.
  CounterRng rng(0x737562695221ull);
  std::vector<std::vector<double>> q(p, std::vector<double>(kp));
  for (int c = 0; c < p; ++c)
    for (int i = 0; i < kp; ++i) q[c][i] = rng.next_unit() - 0.5;

  auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < kp; ++i) {
      double s = 0.0;
      const double* row = a.data() + static_cast<std::size_t>(i) * kp;
      for (int j = 0; j < kp; ++j) s += row[j] * x[j];
      y[i] = s;
    }
  };
  auto orthonormalize = [&](std::vector<std::vector<double>>& m) {
    for (int c = 0; c < p; ++c) {
      for (int d = 0; d < c; ++d) {
        double dot = 0.0;
        for (int i = 0; i < kp; ++i) dot += m[c][i] * m[d][i];
        for (int i = 0; i < kp; ++i) m[c][i] -= dot * m[d][i];
      }
      double nrm = 0.0;
      for (int i = 0; i < kp; ++i) nrm += m[c][i] * m[c][i];
      nrm = std::sqrt(nrm);
      if (nrm < 1e-14) {
        for (int i = 0; i < kp; ++i) m[c][i] = rng.next_unit() - 0.5;
        nrm = 0.0;
        for (int i = 0; i < kp; ++i) nrm += m[c][i] * m[c][i];
        nrm = std::sqrt(nrm);
      }
      for (int i = 0; i < kp; ++i) m[c][i] /= nrm;
    }
  };

  orthonormalize(q);
  std::vector<std::vector<double>> z(p, std::vector<double>(kp));
  std::vector<double> theta(p, 0.0);
  for (int iter = 0; iter < max_iters; ++iter) {
    for (int c = 0; c < p; ++c) apply(q[c], z[c]);
    // Rayleigh-Ritz on the current subspace
    std::vector<double> b(static_cast<std::size_t>(p) * p);
    for (int c = 0; c < p; ++c)
      for (int d = 0; d < p; ++d) {
        double dot = 0.0;
        for (int i = 0; i < kp; ++i) dot += q[c][i] * z[d][i];
        b[static_cast<std::size_t>(c) * p + d] = dot;
      }
    for (int c = 0; c < p; ++c)
      for (int d = 0; d < c; ++d) {
        const double avg = 0.5 * (b[static_cast<std::size_t>(c) * p + d] +
                                  b[static_cast<std::size_t>(d) * p + c]);
        b[static_cast<std::size_t>(c) * p + d] = avg;
        b[static_cast<std::size_t>(d) * p + c] = avg;
      }
    std::vector<double> u;
    jacobi(b, u, p);
    std::vector<std::pair<double, int>> order(p);
    for (int e = 0; e < p; ++e) order[e] = {b[static_cast<std::size_t>(e) * p + e], e};
    std::sort(order.begin(), order.end(), std::greater<>());

    std::vector<std::vector<double>> next(p, std::vector<double>(kp, 0.0));
    for (int r = 0; r < p; ++r) {
      theta[r] = order[r].first;
      const int col = order[r].second;
      for (int c = 0; c < p; ++c) {
        const double coef = u[static_cast<std::size_t>(c) * p + col];
        for (int i = 0; i < kp; ++i) next[r][i] += coef * z[c][i];
      }
    }
    q.swap(next);
    orthonormalize(q);

    // Residual check on the ritz vectors
    double worst = 0.0;
    for (int r = 0; r < p; ++r) {
      apply(q[r], z[r]);
      double res = 0.0;
      for (int i = 0; i < kp; ++i) {
        const double d = z[r][i] - theta[r] * q[r][i];
        res += d * d;
      }
      worst = std::max(worst, std::sqrt(res));
    }
    if (worst <= tol) break;
  }

  for (int r = 0; r < p; ++r) {
    out.eigenvalues.push_back(2.0 * theta[r] - 1.0);
    std::vector<double> f(k, 0.0);
    for (int i = 0; i < kp; ++i) f[pos[i]] = q[r][i] / std::sqrt(w.masses()[pos[i]]);
    out.sign_fallback.push_back(normalize_sign(f, w.masses()));
    out.vectors.push_back(std::move(f));
  }
  return out;
}

SpectralEmbedding spectral_embedding(const StepGraphon& w, int m, double gap_tol,
                                     double cover_tol) {
  if (m < 1) throw invalid_input("spectral_embedding: m must be >= 1");
  const NormalizedKernel nk = normalize_kernel(w);
  if (nk.zero_degree_mass > cover_tol)
    throw precondition_error("degenerate_degree",
                             "spectral_embedding: zero-degree mass exceeds tolerance");

  const int k = w.block_count();
  const int want = m + 8;
  const LeadingPairs lead = leading_normalized_eigenpairs(w, want);

  // Laplacian eigenvalues 1 - lambda, ascending; values within gap_tol of
  // zero are kernel directions (lambda near 1) and are excluded.
  struct Cand {
    double mu;
    int idx;
  };
  std::vector<Cand> cands;
  int excluded = 0;
  for (std::size_t i = 0; i < lead.eigenvalues.size(); ++i) {
    const double mu = 1.0 - lead.eigenvalues[i];
    if (std::abs(mu) <= gap_tol) {
      ++excluded;
      continue;
    }
    if (mu < 0.0) continue;
    cands.push_back({mu, static_cast<int>(i)});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.mu < b.mu; });

  if (static_cast<int>(cands.size()) < m)
    throw precondition_error("multiplicity",
                             "spectral_embedding: fewer than m isolated nonzero eigenvalues");
  for (int i = 0; i + 1 < m + 1 && i + 1 < static_cast<int>(cands.size()); ++i) {
    if (i < m && cands[i + 1].mu - cands[i].mu <= gap_tol)
      throw precondition_error("multiplicity",
                               "spectral_embedding: eigenvalue gap below tolerance");
  }

  SpectralEmbedding out;
  out.near_one_excluded = excluded;
  std::vector<double> values(static_cast<std::size_t>(k) * m, 0.0);
  for (int j = 0; j < m; ++j) {
    const auto& f = lead.vectors[cands[j].idx];
    out.laplacian_eigenvalues.push_back(cands[j].mu);
    for (int b = 0; b < k; ++b) values[static_cast<std::size_t>(b) * m + j] = f[b];
    out.sign_fallback.push_back(lead.sign_fallback[cands[j].idx]);
  }
  out.values = StepFunction(w.masses(), std::move(values), m);
  return out;
}

WeightedKmeansResult weighted_kmeans(const StepFunction& values, int n_clusters,
                                     std::uint64_t seed, int max_iters, double tol) {
  if (n_clusters < 1) throw invalid_input("weighted_kmeans: need at least one cluster");
  const int k = values.block_count();
  const int m = values.dim();

  std::vector<std::vector<double>> points(k, std::vector<double>(m));
  for (int b = 0; b < k; ++b)
    for (int d = 0; d < m; ++d) points[b][d] = values.value(b, d);

  std::vector<std::vector<double>> distinct;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& q : distinct)
      if (q == p) { seen = true; break; }
    if (!seen) distinct.push_back(p);
  }
  if (static_cast<int>(distinct.size()) < n_clusters)
    throw invalid_input("weighted_kmeans: more clusters than distinct values");

  auto dist2 = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (int d = 0; d < m; ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return s;
  };

  // Farthest-point init from a seeded first pick.
  CounterRng rng = CounterRng(seed).substream(0x6b6d);
  std::vector<std::vector<double>> centers;
  centers.push_back(points[rng.next_below(static_cast<std::uint64_t>(k))]);
  while (static_cast<int>(centers.size()) < n_clusters) {
    int far = -1;
    double best = -1.0;
    for (int b = 0; b < k; ++b) {
      double dmin = std::numeric_limits<double>::infinity();
      for (const auto& c : centers) dmin = std::min(dmin, dist2(points[b], c));
      if (dmin > best) {
        best = dmin;
        far = b;
      }
    }
    centers.push_back(points[far]);
  }

  std::vector<int> labels(k, 0);
  for (int iter = 0; iter < max_iters; ++iter) {
    for (int b = 0; b < k; ++b) {
      int best = 0;
      double bd = dist2(points[b], centers[0]);
      for (int c = 1; c < n_clusters; ++c) {
        const double d = dist2(points[b], centers[c]);
        if (d < bd) {
          bd = d;
          best = c;
        }
      }
      labels[b] = best;
    }
    std::vector<std::vector<double>> next(n_clusters, std::vector<double>(m, 0.0));
    std::vector<double> mass(n_clusters, 0.0);
    for (int b = 0; b < k; ++b) {
      mass[labels[b]] += values.masses()[b];
      for (int d = 0; d < m; ++d) next[labels[b]][d] += values.masses()[b] * points[b][d];
    }
    double shift = 0.0;
    for (int c = 0; c < n_clusters; ++c) {
      if (mass[c] <= 0.0) {
        // re-seed an empty cluster at the farthest point
        int far = 0;
        double best = -1.0;
        for (int b = 0; b < k; ++b) {
          const double d = dist2(points[b], centers[labels[b]]);
          if (d > best) {
            best = d;
            far = b;
          }
        }
        next[c] = points[far];
        mass[c] = 1.0;
        shift += 1.0;
        continue;
      }
      for (int d = 0; d < m; ++d) next[c][d] /= mass[c];
      shift += std::sqrt(dist2(next[c], centers[c]));
    }
    centers = std::move(next);
    if (shift <= tol) break;
  }
  for (int b = 0; b < k; ++b) {
    int best = 0;
    double bd = dist2(points[b], centers[0]);
    for (int c = 1; c < n_clusters; ++c) {
      const double d = dist2(points[b], centers[c]);
      if (d < bd) {
        bd = d;
        best = c;
      }
    }
    labels[b] = best + 1;
  }

  WeightedKmeansResult out;
  out.centers = centers;
  out.labels = labels;
  out.box_lo.resize(n_clusters);
  out.box_hi.resize(n_clusters);
  for (int c = 0; c < n_clusters; ++c) {
    double rmin = std::numeric_limits<double>::infinity();
    for (int o = 0; o < n_clusters; ++o)
      if (o != c) rmin = std::min(rmin, std::sqrt(dist2(centers[c], centers[o])) / 2.0);
    double half;
    if (n_clusters == 1) {
      half = std::numeric_limits<double>::infinity();
    } else {
      half = rmin / std::sqrt(static_cast<double>(m));
    }
    out.box_lo[c].resize(m);
    out.box_hi[c].resize(m);
    for (int d = 0; d < m; ++d) {
      out.box_lo[c][d] = n_clusters == 1 ? -std::numeric_limits<double>::infinity()
                                         : centers[c][d] - half;
      out.box_hi[c][d] = n_clusters == 1 ? std::numeric_limits<double>::infinity()
                                         : centers[c][d] + half;
    }
  }
  double sep = std::numeric_limits<double>::infinity();
  for (int c = 0; c < n_clusters; ++c)
    for (int o = c + 1; o < n_clusters; ++o) {
      double s = 0.0;
      for (int d = 0; d < m; ++d) {
        const double gap =
            std::max({0.0, out.box_lo[c][d] - out.box_hi[o][d], out.box_lo[o][d] - out.box_hi[c][d]});
        s += gap * gap;
      }
      sep = std::min(sep, std::sqrt(s));
    }
  out.min_box_separation = n_clusters > 1 ? sep : 0.0;
  return out;
}

namespace {

// 1-D analogue of graphon refinement: average g over n equal cells.
StepFunction refine_step_function(const StepFunction& g, int n) {
  std::vector<double> cum(g.block_count() + 1, 0.0);
  for (int b = 0; b < g.block_count(); ++b) cum[b + 1] = cum[b] + g.masses()[b];
  cum.back() = 1.0;
  std::vector<double> masses(n, 1.0 / n), values(static_cast<std::size_t>(n) * g.dim(), 0.0);
  for (int c = 0; c < n; ++c) {
    const double lo = static_cast<double>(c) / n;
    const double hi = static_cast<double>(c + 1) / n;
    for (int d = 0; d < g.dim(); ++d) {
      double acc = 0.0, area = 0.0;
      for (int b = 0; b < g.block_count(); ++b) {
        const double s = std::max(lo, cum[b]);
        const double e = std::min(hi, cum[b + 1]);
        if (e - s > 1e-15) {
          acc += (e - s) * g.value(b, d);
          area += e - s;
        }
      }
      values[static_cast<std::size_t>(c) * g.dim() + d] = acc / area;
    }
  }
  return StepFunction(std::move(masses), std::move(values), g.dim());
}

}  // namespace

std::vector<RankOneDiagnosticRow> rank_one_laplacian_diagnostic(const StepFunction& g,
                                                                const std::vector<int>& k_grid) {
  if (g.dim() != 1) throw invalid_input("rank_one_laplacian_diagnostic: g must be scalar");
  for (int b = 0; b < g.block_count(); ++b)
    if (!(g.value(b) > 0.0))
      throw invalid_input("rank_one_laplacian_diagnostic: g must be positive");

  std::vector<RankOneDiagnosticRow> rows;
  for (int k : k_grid) {
    if (k < 1) throw invalid_input("rank_one_laplacian_diagnostic: k must be >= 1");
    // block average of the profile at the grid resolution
    const StepFunction gk = refine_step_function(g, k);
    std::vector<double> values(static_cast<std::size_t>(k) * k);
    bool unit_range = true;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        values[static_cast<std::size_t>(i) * k + j] = gk.value(i) * gk.value(j);
        if (values[static_cast<std::size_t>(i) * k + j] > 1.0) unit_range = false;
      }
    const StepGraphon w(gk.masses(), std::move(values), unit_range);
    const SpectrumResult spec = unnormalized_laplacian_spectrum(w);

    RankOneDiagnosticRow row;
    row.blocks = k;

    // eigenvalue closest to zero and its eigenfunction's deviation from
    // constant
    int zi = 0;
    for (std::size_t e = 0; e < spec.eigenvalues.size(); ++e)
      if (std::abs(spec.eigenvalues[e]) < std::abs(spec.eigenvalues[zi])) zi = static_cast<int>(e);
    row.zero_eigenvalue = spec.eigenvalues[zi];
    const StepFunction& f0 = spec.eigenfunctions[zi];
    const double mean = f0.integral();
    double dev = 0.0;
    for (int b = 0; b < k; ++b)
      dev += f0.masses()[b] * (f0.value(b) - mean) * (f0.value(b) - mean);
    row.zero_residual = std::sqrt(dev);

    const StepFunction d = w.degree_function();
    row.degree_min = std::numeric_limits<double>::infinity();
    row.degree_max = 0.0;
    for (int b = 0; b < k; ++b) {
      row.degree_min = std::min(row.degree_min, d.value(b));
      row.degree_max = std::max(row.degree_max, d.value(b));
    }

    std::vector<double> nonzero;
    for (std::size_t e = 0; e < spec.eigenvalues.size(); ++e)
      if (static_cast<int>(e) != zi) nonzero.push_back(spec.eigenvalues[e]);
    std::sort(nonzero.begin(), nonzero.end());
    row.spread_min = nonzero.empty() ? 0.0 : nonzero.front();
    row.spread_max = nonzero.empty() ? 0.0 : nonzero.back();
    double max_gap = 0.0;
    for (std::size_t i = 0; i + 1 < nonzero.size(); ++i)
      max_gap = std::max(max_gap, nonzero[i + 1] - nonzero[i]);
    row.max_consecutive_gap = max_gap;
    rows.push_back(row);
  }
  return rows;
}

StepGraphon perturbed_block_diagonal(int m, double delta) {
  if (m < 1) throw invalid_input("perturbed_block_diagonal: m must be >= 1");
  if (!(delta > 0.0 && delta < 0.5))
    throw invalid_input("perturbed_block_diagonal: delta must lie in (0, 1/2)");
  const int k = 2 * m;
  std::vector<double> masses(k, 1.0 / k);
  std::vector<double> values(static_cast<std::size_t>(k) * k, 0.0);
  for (int cell = 0; cell < m; ++cell) {
    const double dc = delta * (cell + 1) / m;  // distinct strengths split the spectrum
    const int a = 2 * cell, b = 2 * cell + 1;
    values[static_cast<std::size_t>(a) * k + a] = 1.0;
    values[static_cast<std::size_t>(b) * k + b] = 1.0;
    values[static_cast<std::size_t>(a) * k + b] = 1.0 - dc;
    values[static_cast<std::size_t>(b) * k + a] = 1.0 - dc;
  }
  return StepGraphon(std::move(masses), std::move(values), true);
}

ScaleInvarianceReport scale_invariance_demo(int m, double delta,
                                            const std::vector<int>& n_grid) {
  if (m < 2) throw invalid_input("scale_invariance_demo: m must be >= 2");
  const StepGraphon base = perturbed_block_diagonal(m, delta);
  ScaleInvarianceReport report;
  report.base_cut_norm = cut_norm_exact(base);

  const SpectrumResult ref = eigendecompose(normalize_kernel(base).kernel);
  report.reference_spectrum = ref.eigenvalues;

  const SpectrumResult lap = normalized_laplacian_spectrum(base);
  std::vector<double> nonzero;
  for (double mu : lap.eigenvalues)
    if (mu > kDefaultGapTol) nonzero.push_back(mu);
  std::sort(nonzero.begin(), nonzero.end());
  if (static_cast<int>(nonzero.size()) > m) nonzero.resize(m);
  report.laplacian_nonzero = nonzero;

  // The eigenvalue-1 directions of W' span the cell indicators; clustering
  // their coordinates recovers the diagonal partition in any basis.
  {
    const int k = base.block_count();
    std::vector<const StepFunction*> kernel_dirs;
    for (std::size_t e = 0; e < ref.eigenvalues.size(); ++e)
      if (std::abs(ref.eigenvalues[e] - 1.0) <= kDefaultGapTol)
        kernel_dirs.push_back(&ref.eigenfunctions[e]);
    if (static_cast<int>(kernel_dirs.size()) == m) {
      std::vector<double> coords(static_cast<std::size_t>(k) * m);
      for (int b = 0; b < k; ++b)
        for (int d = 0; d < m; ++d)
          coords[static_cast<std::size_t>(b) * m + d] = kernel_dirs[d]->value(b);
      const WeightedKmeansResult km =
          weighted_kmeans(StepFunction(base.masses(), std::move(coords), m), m, 1);
      bool ok = true;
      for (int cell = 0; cell < m && ok; ++cell) {
        if (km.labels[2 * cell] != km.labels[2 * cell + 1]) ok = false;
        for (int other = 0; other < cell; ++other)
          if (km.labels[2 * cell] == km.labels[2 * other]) ok = false;
      }
      report.partition_recovered = ok;
    }
  }

  for (int n : n_grid) {
    if (n < 1) throw invalid_input("scale_invariance_demo: grid entries must be >= 1");
    const StepGraphon wn = base.scaled(1.0 / n);
    ScaleInvarianceReport::Row row;
    row.n = n;
    row.cut_norm = cut_norm_exact(wn);
    const SpectrumResult sn = eigendecompose(normalize_kernel(wn).kernel);
    double dev = 0.0;
    for (std::size_t i = 0; i < sn.eigenvalues.size(); ++i)
      dev = std::max(dev, std::abs(sn.eigenvalues[i] - ref.eigenvalues[i]));
    row.spectrum_deviation = dev;
    report.rows.push_back(row);
  }

  try {
    spectral_embedding(StepGraphon::constant(0.0, 2 * m), m);
  } catch (const precondition_error& e) {
    report.zero_limit_guard_fired = true;
    report.guard_reason = e.reason();
  }
  return report;
}

std::vector<LaplacianConvergenceRow> laplacian_convergence_experiment(
    const StepGraphon& w0, const std::vector<int>& n_grid, int trials, std::uint64_t seed,
    int top_m) {
  const StepFunction d0 = w0.degree_function();
  for (int b = 0; b < w0.block_count(); ++b)
    if (!(d0.value(b) > 0.0))
      throw precondition_error("degenerate_degree",
                               "laplacian_convergence_experiment: limit degree vanishes");

  const NormalizedKernel nk0 = normalize_kernel(w0);
  const LeadingPairs lead0 = leading_normalized_eigenpairs(w0, top_m);

  CounterRng root(seed);
  std::vector<LaplacianConvergenceRow> rows;
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const int n = n_grid[gi];
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed =
          root.substream(gi * 100003ull + static_cast<std::uint64_t>(t)).next_u64();
      const FiniteGraph g = sample_graph(n, w0, trial_seed);
      const StepGraphon gw = graph_to_graphon(g);

      LaplacianConvergenceRow row;
      row.n = n;
      row.trial = t;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) {
          row.had_zero_degree_vertex = true;
          break;
        }

      const NormalizedKernel nkn = normalize_kernel(gw);
      row.wprime_cut_gap =
          cut_norm_auto(difference_on_refinement(nkn.kernel, nk0.kernel), 8, trial_seed);

      const LeadingPairs leadn =
          leading_normalized_eigenpairs(gw, static_cast<int>(lead0.eigenvalues.size()));
      for (std::size_t i = 0; i < lead0.eigenvalues.size(); ++i) {
        const double got = i < leadn.eigenvalues.size() ? leadn.eigenvalues[i] : 0.0;
        row.eigenvalue_gaps.push_back(std::abs(got - lead0.eigenvalues[i]));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace graphonlab
