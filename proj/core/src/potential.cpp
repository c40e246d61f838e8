#include "lejalab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "lejalab/nodes.hpp"

namespace lejalab {
namespace {

constexpr double kPi = std::numbers::pi;

struct CdfView {
  std::function<double(double)> cdf;
  std::function<double(double)> cdf_left;
  std::vector<double> jumps;
};

double ks_distance(const std::vector<double>& atoms, const CdfView& model) {
  const double n = static_cast<double>(atoms.size());
  auto nu = [&](double s) {
    return static_cast<double>(std::upper_bound(atoms.begin(), atoms.end(), s) - atoms.begin()) / n;
  };
  auto nu_left = [&](double s) {
    return static_cast<double>(std::lower_bound(atoms.begin(), atoms.end(), s) - atoms.begin()) / n;
  };
  double d = 0.0;
  auto probe = [&](double s) {
    d = std::max(d, std::abs(nu(s) - model.cdf(s)));
    d = std::max(d, std::abs(nu_left(s) - model.cdf_left(s)));
  };
  for (double s : atoms) probe(s);
  for (double s : model.jumps) probe(s);
  return d;
}

CdfView view_of(const EquilibriumModel& model) {
  return {[&model](double s) { return model.cdf(s); },
          [&model](double s) { return model.cdf_left(s); }, model.jumps()};
}

// Model CDF seen from a cut at parameter c on a closed curve.
CdfView rotated_view(const EquilibriumModel& model, double c) {
  const double base = model.cdf_left(c);
  CdfView v;
  v.cdf = [&model, c, base](double s) {
    const double t = c + s;
    return t < 1.0 ? model.cdf(t) - base : 1.0 - base + model.cdf(t - 1.0);
  };
  v.cdf_left = [&model, c, base](double s) {
    const double t = c + s;
    return t < 1.0 ? model.cdf_left(t) - base : 1.0 - base + model.cdf_left(t - 1.0);
  };
  for (double j : model.jumps()) {
    double r = j - c;
    if (r < 0) r += 1.0;
    v.jumps.push_back(r);
  }
  return v;
}

// Mass of the arc from parameter lo to hi (lo <= hi) including both ends.
double arc_mass(const EquilibriumModel& model, double lo, double hi) {
  return model.cdf(hi) - model.cdf_left(lo);
}

// Mass of the arc from lo through the cut to hi on a closed curve (hi < lo).
double wrap_mass(const EquilibriumModel& model, double lo, double hi) {
  return (1.0 - model.cdf_left(lo)) + model.cdf(hi);
}

struct ParamPoint {
  double s;
  Complex z;
};

std::vector<ParamPoint> sorted_by_parameter(const EquilibriumModel& model,
                                            std::span<const Complex> row) {
  std::vector<ParamPoint> pts;
  pts.reserve(row.size());
  for (const auto& z : row) pts.push_back({model.parameter(z), z});
  std::stable_sort(pts.begin(), pts.end(),
                   [](const ParamPoint& a, const ParamPoint& b) { return a.s < b.s; });
  return pts;
}

double holder_scan(const EquilibriumModel& model, const std::vector<Complex>& points,
                   const std::vector<double>& params, bool closed, std::size_t window) {
  const std::size_t m = points.size();
  const std::size_t reach = window == 0 ? m - 1 : std::min(window, m - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t step = 1; step <= reach; ++step) {
      std::size_t j = i + step;
      double mass;
      if (j < m) {
        mass = arc_mass(model, params[i], params[j]);
      } else {
        if (!closed || window == 0) break;
        j -= m;
        if (j >= i) break;
        mass = wrap_mass(model, params[i], params[j]);
      }
      const double dist = std::abs(points[i] - points[j]);
      if (dist == 0.0) continue;
      best = std::max(best, mass / std::sqrt(dist));
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(EquilibriumMethod method) {
  switch (method) {
    case EquilibriumMethod::arcsine_segment: return "arcsine_segment";
    case EquilibriumMethod::uniform_circle: return "uniform_circle";
    case EquilibriumMethod::empirical: return "empirical";
  }
  return "unknown";
}

EquilibriumModel EquilibriumModel::arcsine_segment(const SetSpec& set) {
  if (set.kind != SetKind::segment) throw InvalidInput("arcsine model requires a segment set");
  EquilibriumModel m;
  m.method_ = EquilibriumMethod::arcsine_segment;
  m.set_ = set;
  return m;
}

EquilibriumModel EquilibriumModel::uniform_circle(const SetSpec& set) {
  if (set.kind != SetKind::circle) throw InvalidInput("uniform model requires a circle set");
  EquilibriumModel m;
  m.method_ = EquilibriumMethod::uniform_circle;
  m.set_ = set;
  return m;
}

EquilibriumModel EquilibriumModel::empirical(const SetSpec& set, std::span<const Complex> reference) {
  if (reference.empty()) throw InvalidInput("empirical model needs reference points");
  EquilibriumModel m;
  m.method_ = EquilibriumMethod::empirical;
  m.set_ = set;
  m.reference_params_.reserve(reference.size());
  for (const auto& z : reference) m.reference_params_.push_back(parameter_of(set, z));
  std::sort(m.reference_params_.begin(), m.reference_params_.end());
  return m;
}

EquilibriumModel EquilibriumModel::for_set(const SetSpec& set, std::size_t reference_size) {
  if (set.kind == SetKind::segment) return arcsine_segment(set);
  if (set.kind == SetKind::circle) return uniform_circle(set);
  const auto mesh = build_mesh(set, std::max<std::size_t>(32768, 4 * reference_size),
                               Clustering::endpoint_clustered);
  const auto leja = leja_generate(mesh, reference_size);
  return empirical(set, leja);
}

double EquilibriumModel::cdf(double s) const {
  switch (method_) {
    case EquilibriumMethod::arcsine_segment:
      return arcsine_cdf(std::clamp(2.0 * s - 1.0, -1.0, 1.0));
    case EquilibriumMethod::uniform_circle:
      return std::clamp(s, 0.0, 1.0);
    case EquilibriumMethod::empirical: {
      const auto& r = reference_params_;
      return static_cast<double>(std::upper_bound(r.begin(), r.end(), s) - r.begin()) /
             static_cast<double>(r.size());
    }
  }
  return 0.0;
}

double EquilibriumModel::cdf_left(double s) const {
  if (method_ != EquilibriumMethod::empirical) return cdf(s);
  const auto& r = reference_params_;
  return static_cast<double>(std::lower_bound(r.begin(), r.end(), s) - r.begin()) /
         static_cast<double>(r.size());
}

CountingMeasure CountingMeasure::from_row(const SetSpec& set, std::span<const Complex> row) {
  if (row.empty()) throw InvalidInput("counting measure of an empty row");
  CountingMeasure nu;
  std::vector<std::pair<double, Complex>> tagged;
  tagged.reserve(row.size());
  for (const auto& z : row) tagged.emplace_back(parameter_of(set, z), z);
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [s, z] : tagged) {
    nu.parameters.push_back(s);
    nu.atoms.push_back(z);
  }
  return nu;
}

double arcsine_cdf(double x) {
  if (!(std::abs(x) <= 1.0)) throw InvalidInput("arcsine_cdf: x must lie in [-1, 1]");
  return 0.5 + std::asin(x) / kPi;
}

double mu_subarc(const EquilibriumModel& model, Complex xi1, Complex xi2) {
  const double s1 = model.parameter(xi1);
  const double s2 = model.parameter(xi2);
  return arc_mass(model, std::min(s1, s2), std::max(s1, s2));
}

double kolmogorov_distance(const CountingMeasure& nu, const EquilibriumModel& model) {
  if (nu.parameters.empty()) throw InvalidInput("kolmogorov_distance: empty measure");
  return ks_distance(nu.parameters, view_of(model));
}

double kolmogorov_distance_rotated(const CountingMeasure& nu, const EquilibriumModel& model) {
  if (!model.closed()) return kolmogorov_distance(nu, model);
  double worst = 0.0;
  for (int cut = 0; cut < 8; ++cut) {
    const double c = cut / 8.0;
    std::vector<double> shifted;
    shifted.reserve(nu.parameters.size());
    for (double s : nu.parameters) {
      double r = s - c;
      if (r < 0) r += 1.0;
      shifted.push_back(r);
    }
    std::sort(shifted.begin(), shifted.end());
    worst = std::max(worst, ks_distance(shifted, rotated_view(model, c)));
  }
  return worst;
}

double capacity_estimate(std::span<const Complex> leja_points) {
  if (leja_points.size() < 2) throw InvalidInput("capacity_estimate needs at least 2 points");
  const Complex last = leja_points.back();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < leja_points.size(); ++j) {
    const double d = std::abs(last - leja_points[j]);
    if (d == 0.0) throw InvalidInput("capacity_estimate: coincident points");
    sum += std::log(d);
  }
  return std::exp(sum / static_cast<double>(leja_points.size() - 1));
}

double spacing_statistic(std::span<const Complex> row, const EquilibriumModel& model,
                         std::size_t n) {
  if (row.size() < 2) throw InvalidInput("spacing_statistic needs at least 2 nodes");
  const auto pts = sorted_by_parameter(model, row);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].z == pts[i + 1].z) throw InvalidInput("spacing_statistic: duplicate nodes");
    gap = std::min(gap, arc_mass(model, pts[i].s, pts[i + 1].s));
  }
  if (model.closed()) gap = std::min(gap, wrap_mass(model, pts.back().s, pts.front().s));
  return static_cast<double>(n) * gap;
}

double holder_statistic(const EquilibriumModel& model, const BoundaryMesh& mesh,
                        std::size_t window) {
  if (mesh.size() < 2) throw InvalidInput("holder_statistic needs at least 2 mesh points");
  return holder_scan(model, mesh.points, mesh.params, mesh.closed, window);
}

double holder_statistic(const EquilibriumModel& model, std::span<const Complex> row,
                        std::size_t window) {
  if (row.size() < 2) throw InvalidInput("holder_statistic needs at least 2 points");
  const auto pts = sorted_by_parameter(model, row);
  std::vector<Complex> points;
  std::vector<double> params;
  for (const auto& p : pts) {
    points.push_back(p.z);
    params.push_back(p.s);
  }
  return holder_scan(model, points, params, model.closed(), window);
}

}  // namespace lejalab
