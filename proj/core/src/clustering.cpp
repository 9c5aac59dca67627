#include "graphonlab/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphonlab/errors.hpp"
#include "graphonlab/rng.hpp"
#include "graphonlab/sampling.hpp"

namespace graphonlab {

NodeStatistic NodeStatistic::degree() {
  NodeStatistic s;
  s.kind = Kind::Degree;
  return s;
}

NodeStatistic NodeStatistic::labelled_hom(LabelledGraph h) {
  if (h.labelled.size() != 1)
    throw invalid_input("NodeStatistic: motif must have exactly one labelled vertex");
  NodeStatistic s;
  s.kind = Kind::LabelledHomDensity;
  s.motif = std::move(h);
  return s;
}

NodeStatistic NodeStatistic::spectral(int m, double gap_tol) {
  if (m < 1) throw invalid_input("NodeStatistic: embedding dimension must be >= 1");
  NodeStatistic s;
  s.kind = Kind::SpectralEmbedding;
  s.embed_dim = m;
  s.gap_tol = gap_tol;
  return s;
}

NodeStatistic NodeStatistic::composite(std::vector<NodeStatistic> parts) {
  if (parts.empty()) throw invalid_input("NodeStatistic: composite needs parts");
  NodeStatistic s;
  s.kind = Kind::Composite;
  s.parts = std::move(parts);
  return s;
}

int NodeStatistic::dim() const {
  switch (kind) {
    case Kind::Degree:
    case Kind::LabelledHomDensity:
      return 1;
    case Kind::SpectralEmbedding:
      return embed_dim;
    case Kind::Composite: {
      int d = 0;
      for (const auto& p : parts) d += p.dim();
      return d;
    }
  }
  return 1;
}

StepFunction compute_statistic(const NodeStatistic& stat, const StepGraphon& w) {
  switch (stat.kind) {
    case NodeStatistic::Kind::Degree:
      return w.degree_function();
    case NodeStatistic::Kind::LabelledHomDensity:
      return labelled_density(stat.motif, w);
    case NodeStatistic::Kind::SpectralEmbedding:
      return spectral_embedding(w, stat.embed_dim, stat.gap_tol).values;
    case NodeStatistic::Kind::Composite: {
      const int k = w.block_count();
      const int m = stat.dim();
      std::vector<double> values(static_cast<std::size_t>(k) * m);
      int offset = 0;
      for (const auto& part : stat.parts) {
        const StepFunction v = compute_statistic(part, w);
        for (int b = 0; b < k; ++b)
          for (int d = 0; d < part.dim(); ++d)
            values[static_cast<std::size_t>(b) * m + offset + d] = v.value(b, d);
        offset += part.dim();
      }
      return StepFunction(w.masses(), std::move(values), m);
    }
  }
  throw invalid_input("compute_statistic: unknown statistic kind");
}

bool RegionBox::contains(const std::vector<double>& x) const {
  for (int d = 0; d < dim(); ++d)
    if (!(x[d] > lo[d] && x[d] < hi[d])) return false;
  return true;
}

double RegionBox::distance(const std::vector<double>& x) const {
  double s = 0.0;
  for (int d = 0; d < dim(); ++d) {
    const double gap = std::max({0.0, lo[d] - x[d], x[d] - hi[d]});
    s += gap * gap;
  }
  return std::sqrt(s);
}

double RegionBox::box_distance(const RegionBox& a, const RegionBox& b) {
  double s = 0.0;
  for (int d = 0; d < a.dim(); ++d) {
    const double gap = std::max({0.0, a.lo[d] - b.hi[d], b.lo[d] - a.hi[d]});
    s += gap * gap;
  }
  return std::sqrt(s);
}

RegionSet::RegionSet(std::vector<RegionBox> boxes, std::optional<double> separation,
                     double cover_tol)
    : regions(std::move(boxes)), d_min(separation), coverage_tolerance(cover_tol) {
  if (regions.empty()) throw invalid_input("RegionSet: needs at least one region");
  const int m = regions.front().dim();
  for (const auto& r : regions) {
    if (r.dim() != m || static_cast<int>(r.hi.size()) != m)
      throw invalid_input("RegionSet: inconsistent region dimensions");
    for (int d = 0; d < m; ++d)
      if (!(r.lo[d] < r.hi[d])) throw invalid_input("RegionSet: empty box side");
  }
  for (std::size_t i = 0; i < regions.size(); ++i)
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      bool overlap = true;
      for (int d = 0; d < m; ++d)
        if (!(regions[i].lo[d] < regions[j].hi[d] && regions[j].lo[d] < regions[i].hi[d])) {
          overlap = false;
          break;
        }
      if (overlap) throw invalid_input("RegionSet: regions must be pairwise disjoint");
      if (d_min && RegionBox::box_distance(regions[i], regions[j]) < *d_min - 1e-12)
        throw invalid_input("RegionSet: regions closer than the declared separation");
    }
}

int RegionSet::dim() const { return regions.front().dim(); }

RegionSet RegionSet::threshold(double alpha) {
  const double inf = std::numeric_limits<double>::infinity();
  RegionBox low{{-inf}, {alpha}};
  RegionBox high{{alpha}, {inf}};
  return RegionSet({low, high});
}

ColoringReport partition_by_regions(const StepGraphon& base, const StepFunction& values,
                                    const RegionSet& regions) {
  const int m = regions.dim();
  if (values.dim() != m)
    throw invalid_input("partition_by_regions: statistic/region dimension mismatch");
  if (values.block_count() != base.block_count() || values.masses() != base.masses())
    throw invalid_input("partition_by_regions: statistic not on the graphon's blocks");

  const int k = base.block_count();
  const int nr = static_cast<int>(regions.regions.size());
  std::vector<int> colors(k, 1);
  double uncovered = 0.0;
  std::vector<int> boundary_blocks, uncovered_blocks;

  std::vector<double> x(m);
  for (int b = 0; b < k; ++b) {
    for (int d = 0; d < m; ++d) x[d] = values.value(b, d);

    int inside = -1;
    for (int r = 0; r < nr; ++r)
      if (regions.regions[r].contains(x)) {
        inside = r;
        break;
      }
    if (inside >= 0) {
      colors[b] = inside + 1;
      continue;
    }

    // Outside every open region: mass counts as uncovered either way; blocks
    // at distance zero sit on a boundary and take the lowest adjacent index,
    // the rest take the nearest region.
    uncovered += base.masses()[b];
    int adjacent = -1;
    int nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < nr; ++r) {
      const double dist = regions.regions[r].distance(x);
      if (dist == 0.0 && adjacent < 0) adjacent = r;
      if (dist < best) {
        best = dist;
        nearest = r;
      }
    }
    if (adjacent >= 0) {
      boundary_blocks.push_back(b);
      colors[b] = adjacent + 1;
    } else {
      uncovered_blocks.push_back(b);
      colors[b] = nearest + 1;
    }
  }

  if (uncovered > regions.coverage_tolerance)
    throw precondition_error("coverage",
                             "partition_by_regions: uncovered mass exceeds tolerance");

  ColoringReport report;
  report.result = ColoredStepGraphon(base, std::move(colors));
  report.uncovered_mass = uncovered;
  report.boundary_blocks = std::move(boundary_blocks);
  report.uncovered_blocks = std::move(uncovered_blocks);
  return report;
}

ColoringReport threshold_cluster(const StepGraphon& w, const LabelledGraph& h, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw invalid_input("threshold_cluster: alpha must lie in (0,1)");
  const StepFunction values = labelled_density(h, w);

  // Total rule: below alpha -> 1, at or above -> 2.  Exact boundary hits are
  // reported but never count as uncovered.
  const int k = w.block_count();
  std::vector<int> colors(k);
  std::vector<int> boundary;
  for (int b = 0; b < k; ++b) {
    colors[b] = values.value(b) < alpha ? 1 : 2;
    if (values.value(b) == alpha) boundary.push_back(b);
  }
  ColoringReport report;
  report.result = ColoredStepGraphon(w, std::move(colors));
  report.boundary_blocks = std::move(boundary);
  return report;
}

std::vector<ConsistencyRow> consistency_experiment(const StepGraphon& w0,
                                                   const NodeStatistic& stat,
                                                   const RegionSet& regions,
                                                   const std::vector<int>& n_grid, int trials,
                                                   std::uint64_t seed, double sample_cover_tol) {
  const StepFunction limit_values = compute_statistic(stat, w0);
  const ColoringReport limit = partition_by_regions(w0, limit_values, regions);
  if (limit.uncovered_mass != 0.0)
    throw precondition_error("coverage",
                             "consistency_experiment: limit graphon leaves uncovered mass");

  RegionSet sample_regions = regions;
  sample_regions.coverage_tolerance = sample_cover_tol;

  CounterRng root(seed);
  std::vector<ConsistencyRow> rows;
  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    const int n = n_grid[gi];
    if (n < 1) throw invalid_input("consistency_experiment: grid entries must be >= 1");
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed =
          root.substream(gi * 100003ull + static_cast<std::uint64_t>(t)).next_u64();
      const FiniteGraph g = sample_graph(n, w0, trial_seed);
      const StepGraphon gw = graph_to_graphon(g);
      const StepFunction values = compute_statistic(stat, gw);
      const ColoringReport colored = partition_by_regions(gw, values, sample_regions);

      ConsistencyRow row;
      row.n = n;
      row.trial = t;
      row.uncovered_mass = colored.uncovered_mass;
      row.colored_distance = colored_cut_distance_upper(colored.result, limit.result, n,
                                                        AlignMode::Anneal, trial_seed);
      rows.push_back(row);
    }
  }
  return rows;
}

double consistency_median(const std::vector<ConsistencyRow>& rows, int n) {
  std::vector<double> vals;
  for (const auto& r : rows)
    if (r.n == n) vals.push_back(r.colored_distance);
  if (vals.empty()) throw invalid_input("consistency_median: no matching rows");
  std::sort(vals.begin(), vals.end());
  const std::size_t m = vals.size();
  return m % 2 ? vals[m / 2] : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
}

std::pair<double, double> lipschitz_check(const StepGraphon& w1, const StepGraphon& w2,
                                          const NodeStatistic& stat, const RegionSet& regions) {
  if (!regions.d_min)
    throw invalid_input("lipschitz_check: region set declares no separation d_min");
  const StepFunction v1 = compute_statistic(stat, w1);
  const StepFunction v2 = compute_statistic(stat, w2);
  const ColoringReport c1 = partition_by_regions(w1, v1, regions);
  const ColoringReport c2 = partition_by_regions(w2, v2, regions);

  const double lhs = colored_cut_norm(c1.result, c2.result);
  const double rhs = cut_norm_exact(difference_on_refinement(w1, w2)) +
                     StepFunction::l1_distance(v1, v2) / *regions.d_min;
  return {lhs, rhs};
}

namespace {

// Four-block base: two blocks of mass a and b sit exactly at degree 1/2, the
// remaining mass splits into a low-degree and a high-degree block.
StepGraphon degree_mass_base(double a, double b) {
  const double c = (1.0 - a - b) / 2.0;
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw invalid_input("inconsistency_demo_degree_mass: split masses must be positive "
                        "and leave room for the off-level blocks");
  std::vector<double> masses{a, b, c, c};
  std::vector<double> values{
      0.5, 0.5, 0.4, 0.6,
      0.5, 0.5, 0.4, 0.6,
      0.4, 0.4, 0.4, 0.4,
      0.6, 0.6, 0.4, 0.8,
  };
  return StepGraphon(std::move(masses), std::move(values), true);
}

// eps + (1-eps) W on (up,up), (1-eps) W on (down,down), W elsewhere.
StepGraphon tilt(const StepGraphon& w0, int up, int down, double eps) {
  const int k = w0.block_count();
  std::vector<double> values(w0.raw());
  values[static_cast<std::size_t>(up) * k + up] = eps + (1.0 - eps) * w0.value(up, up);
  values[static_cast<std::size_t>(down) * k + down] = (1.0 - eps) * w0.value(down, down);
  return StepGraphon(w0.masses(), std::move(values), true);
}

}  // namespace

DegreeMassDemoReport inconsistency_demo_degree_mass(const std::vector<double>& eps_grid,
                                                    double split_up_mass,
                                                    double split_down_mass) {
  const StepGraphon w0 = degree_mass_base(split_up_mass, split_down_mass);
  const RegionSet regions = RegionSet::threshold(0.5);

  DegreeMassDemoReport report;
  report.split_mass_up = split_up_mass;
  report.split_mass_down = split_down_mass;

  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps < 1.0))
      throw invalid_input("inconsistency_demo_degree_mass: eps must lie in (0,1)");
    const StepGraphon up = tilt(w0, 0, 1, eps);
    const StepGraphon down = tilt(w0, 1, 0, eps);
    const ColoringReport cu = partition_by_regions(up, up.degree_function(), regions);
    const ColoringReport cd = partition_by_regions(down, down.degree_function(), regions);

    DegreeMassDemoReport::Row row;
    row.eps = eps;
    row.cut_gap_up = cut_norm_exact(up.difference(w0));
    row.cut_gap_down = cut_norm_exact(down.difference(w0));
    row.colored_distance = colored_cut_norm(cu.result, cd.result);
    for (int b = 0; b < w0.block_count(); ++b)
      if (cu.result.colors[b] != cd.result.colors[b]) row.differ_mass += w0.masses()[b];
    report.rows.push_back(row);
  }

  // eps = 0 puts the whole level set on the region boundary: undefined.
  try {
    partition_by_regions(w0, w0.degree_function(), regions);
  } catch (const precondition_error&) {
    report.zero_eps_uncovered = true;
    report.zero_eps_uncovered_mass = split_up_mass + split_down_mass;
  }
  return report;
}

}  // namespace graphonlab
