#include "lejalab/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "contour.hpp"
#include "lejalab/nodes.hpp"
#include "lejalab/potential.hpp"

namespace lejalab {
namespace {

constexpr double kPi = std::numbers::pi;

double segment_distance(Complex zb) {
  const double x = std::clamp(zb.real(), -1.0, 1.0);
  return std::abs(zb - Complex(x, 0.0));
}

Complex to_base(const SetSpec& set, Complex z) { return set.affine ? set.affine->invert(z) : z; }
Complex to_plane(const SetSpec& set, Complex z) { return set.affine ? set.affine->apply(z) : z; }
double plane_scale(const SetSpec& set) { return set.affine ? set.affine->scale : 1.0; }

// Robust sqrt(r0^2 + r1^2) without overflow.
double robust_length(double v0, double v1) { return std::hypot(v0, v1); }

// Root u > 0 of (r0 z0 / (u + r0 - 1))^2 + (z1 / u)^2 - 1 by bisection, after
// D. Eberly's formulation shifted by one (u = s + 1) so that points close to
// the major axis keep full relative precision. rm1 is r0 - 1.
double ellipse_root(double r0, double rm1, double z0, double z1, double g) {
  const double n0 = r0 * z0;
  double u0 = z1;
  double u1 = g < 0 ? 1.0 : robust_length(n0, z1);
  double u = 1.0;
  for (int i = 0; i < 2000; ++i) {
    u = (u0 + u1) / 2.0;
    if (u == u0 || u == u1) break;
    const double ratio0 = n0 / (u + rm1);
    const double ratio1 = z1 / u;
    const double gs = ratio0 * ratio0 + ratio1 * ratio1 - 1.0;
    if (gs > 0) {
      u0 = u;
    } else if (gs < 0) {
      u1 = u;
    } else {
      break;
    }
  }
  return u;
}

}  // namespace

Complex joukowski(Complex w) {
  if (w == Complex(0.0, 0.0)) throw InvalidInput("joukowski map is undefined at w = 0");
  return (w + 1.0 / w) / 2.0;
}

Complex inverse_joukowski(Complex z) {
  if (segment_distance(z) <= 1e-14) {
    throw InvalidInput("inverse_joukowski: point lies on [-1, 1]");
  }
  // (z - 1)(z + 1) keeps relative accuracy near the endpoints.
  const Complex root = std::sqrt((z - 1.0) * (z + 1.0));
  const Complex w1 = z + root;
  const Complex w2 = z - root;
  return std::abs(w1) >= std::abs(w2) ? w1 : w2;
}

std::string_view to_string(GreenMethod method) {
  switch (method) {
    case GreenMethod::exact_segment: return "exact_segment";
    case GreenMethod::exact_circle: return "exact_circle";
    case GreenMethod::discrete: return "discrete";
  }
  return "unknown";
}

GreenModel GreenModel::exact(const SetSpec& set) {
  validate(set);
  GreenModel model;
  model.set_ = set;
  switch (set.kind) {
    case SetKind::segment:
      model.method_ = GreenMethod::exact_segment;
      model.capacity_ = 0.5 * plane_scale(set);
      break;
    case SetKind::circle:
      model.method_ = GreenMethod::exact_circle;
      model.capacity_ = set.radius * plane_scale(set);
      break;
    default:
      throw InvalidInput("no closed-form Green function for kind '" +
                         std::string(to_string(set.kind)) + "'; use the discrete model");
  }
  return model;
}

GreenModel GreenModel::discrete(const SetSpec& set, std::vector<Complex> charges, double capacity) {
  if (charges.size() < 16) throw InvalidInput("discrete Green model needs at least 16 charges");
  if (!(capacity > 0) || !std::isfinite(capacity)) {
    throw InvalidInput("discrete Green model needs a positive capacity");
  }
  GreenModel model;
  model.method_ = GreenMethod::discrete;
  model.set_ = set;
  model.charges_ = std::move(charges);
  model.capacity_ = capacity;
  return model;
}

GreenModel GreenModel::discrete_leja(const SetSpec& set, std::size_t charges) {
  const auto mesh =
      build_mesh(set, default_leja_candidates(charges), Clustering::endpoint_clustered);
  auto points = leja_generate(mesh, charges);
  const double cap = capacity_estimate(points);
  return discrete(set, std::move(points), cap);
}

GreenModel GreenModel::for_set(const SetSpec& set) {
  if (set.kind == SetKind::segment || set.kind == SetKind::circle) return exact(set);
  return discrete_leja(set);
}

double GreenModel::value(Complex z) const {
  switch (method_) {
    case GreenMethod::exact_segment: {
      const Complex zb = to_base(set_, z);
      if (segment_distance(zb) <= 1e-14) return 0.0;
      return std::max(0.0, std::log(std::abs(inverse_joukowski(zb))));
    }
    case GreenMethod::exact_circle: {
      const Complex zb = to_base(set_, z);
      return std::max(0.0, std::log(std::abs(zb - set_.center) / set_.radius));
    }
    case GreenMethod::discrete: {
      double sum = 0.0;
      for (const auto& t : charges_) sum += std::log(std::abs(z - t));
      const double g = sum / static_cast<double>(charges_.size()) - std::log(capacity_);
      return std::isnan(g) ? 0.0 : std::max(0.0, g);
    }
  }
  return 0.0;
}

Complex GreenModel::level_point(double delta, double theta) const {
  const Complex w = std::polar(1.0 + delta, theta);
  switch (method_) {
    case GreenMethod::exact_segment:
      return to_plane(set_, joukowski(w));
    case GreenMethod::exact_circle:
      return to_plane(set_, set_.center + set_.radius * w);
    case GreenMethod::discrete:
      break;
  }
  throw InvalidInput("level_point requires an exact Green model");
}

double green_eval(const GreenModel& model, Complex z) {
  switch (model.method()) {
    case GreenMethod::exact_segment:
      if (segment_distance(to_base(model.set(), z)) * plane_scale(model.set()) <= 1e-12) {
        throw InvalidInput("green_eval: point lies on the compact set");
      }
      break;
    case GreenMethod::exact_circle: {
      const auto& s = model.set();
      if (std::abs(to_base(s, z) - s.center) <= s.radius * (1.0 + 1e-12)) {
        throw InvalidInput("green_eval: point lies inside or on the circle");
      }
      break;
    }
    case GreenMethod::discrete:
      break;
  }
  return model.value(z);
}

LevelCurve level_curve(const GreenModel& model, double delta, std::size_t resolution) {
  if (!(delta > 0 && delta <= 10)) throw InvalidInput("level_curve: delta must lie in (0, 10]");
  if (resolution < 64) throw InvalidInput("level_curve: resolution must be at least 64");

  LevelCurve curve;
  curve.delta = delta;
  curve.resolution = resolution;
  const double level = std::log1p(delta);

  if (model.method() == GreenMethod::discrete) {
    const Box set_box = bounding_box(model.set());
    const double margin = 3.0 * (1.0 + delta) * diameter(model.set());
    Box box{set_box.xmin - margin, set_box.xmax + margin, set_box.ymin - margin,
            set_box.ymax + margin};
    curve.polyline = detail::extract_level_loop([&model](Complex z) { return model.value(z); }, box,
                                                resolution, level);
  } else {
    curve.polyline.resize(resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
      // Quarter turns are placed exactly so the curve hits the axes.
      const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(resolution);
      Complex w;
      switch ((4 * k) % resolution == 0 ? (4 * k / resolution) % 4 : 4) {
        case 0: w = {1.0 + delta, 0.0}; break;
        case 1: w = {0.0, 1.0 + delta}; break;
        case 2: w = {-(1.0 + delta), 0.0}; break;
        case 3: w = {0.0, -(1.0 + delta)}; break;
        default: w = std::polar(1.0 + delta, theta);
      }
      curve.polyline[k] = model.method() == GreenMethod::exact_segment
                              ? to_plane(model.set(), joukowski(w))
                              : to_plane(model.set(), model.set().center + model.set().radius * w);
    }
  }

  double tol = 0.0;
  for (const auto& p : curve.polyline) tol = std::max(tol, std::abs(model.value(p) - level));
  curve.tolerance = tol;
  return curve;
}

int winding_number(const std::vector<Complex>& polyline, Complex p) {
  int wn = 0;
  const std::size_t n = polyline.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = polyline[i] - p;
    const Complex b = polyline[(i + 1) % n] - p;
    const double c = a.real() * b.imag() - a.imag() * b.real();
    if (a.imag() <= 0) {
      if (b.imag() > 0 && c > 0) ++wn;
    } else {
      if (b.imag() <= 0 && c < 0) --wn;
    }
  }
  return wn;
}

double polyline_distance(const std::vector<Complex>& polyline, Complex p, bool closed) {
  if (polyline.empty()) throw InvalidInput("polyline_distance: empty polyline");
  double best = std::abs(polyline.front() - p);
  const std::size_t n = polyline.size();
  const std::size_t segments = closed ? n : n - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    const Complex a = polyline[i];
    const Complex d = polyline[(i + 1) % n] - a;
    const double len2 = std::norm(d);
    double t = len2 > 0 ? ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(p - (a + t * d)));
  }
  return best;
}

double ellipse_distance(double a, double b, Complex p) {
  if (!(a >= b && b > 0)) throw InvalidInput("ellipse_distance: need a >= b > 0");
  const double y0 = std::abs(p.real());
  const double y1 = std::abs(p.imag());
  const double e0 = a, e1 = b;
  if (y1 > 0) {
    if (y0 > 0) {
      const double z0 = y0 / e0;
      const double z1 = y1 / e1;
      const double g = z0 * z0 + z1 * z1 - 1.0;
      if (g == 0.0) return 0.0;
      const double r0 = (e0 / e1) * (e0 / e1);
      const double rm1 = (e0 - e1) * (e0 + e1) / (e1 * e1);
      const double u = ellipse_root(r0, rm1, z0, z1, g);
      const double x0 = r0 * y0 / (u + rm1);
      const double x1 = y1 / u;
      return std::hypot(x0 - y0, x1 - y1);
    }
    return std::abs(y1 - e1);
  }
  // On the major axis: interior points left of the focal threshold
  // (a^2 - b^2)/a project off-axis, everything else onto the vertex.
  const double numer0 = e0 * y0;
  const double denom0 = (e0 - e1) * (e0 + e1);
  if (numer0 < denom0) {
    const double xde0 = numer0 / denom0;
    const double x0 = e0 * xde0;
    const double x1 = e1 * std::sqrt(std::max(0.0, 1.0 - xde0 * xde0));
    return std::hypot(x0 - y0, x1);
  }
  return std::abs(y0 - e0);
}

LevelDistance::LevelDistance(const GreenModel& model, double delta, std::size_t resolution)
    : model_(model), delta_(delta) {
  if (!(delta > 0)) throw InvalidInput("rho: delta must be positive");
  if (model_.method() == GreenMethod::discrete) {
    polyline_ = level_curve(model_, delta, resolution).polyline;
  }
}

double LevelDistance::operator()(Complex z) const {
  const SetSpec& set = model_.set();
  (void)parameter_of(set, z, 1e-8);
  switch (model_.method()) {
    case GreenMethod::exact_segment: {
      const double r = 1.0 + delta_;
      const double a = (r + 1.0 / r) / 2.0;
      const double b = delta_ * (2.0 + delta_) / (2.0 * r);
      return plane_scale(set) * ellipse_distance(a, b, to_base(set, z));
    }
    case GreenMethod::exact_circle: {
      const double d = std::abs(to_base(set, z) - set.center);
      return plane_scale(set) * std::abs(set.radius * (1.0 + delta_) - d);
    }
    case GreenMethod::discrete:
      return polyline_distance(polyline_, z);
  }
  return 0.0;
}

double rho(const GreenModel& model, double delta, Complex z) {
  return LevelDistance(model, delta)(z);
}

double rho_formula_segment(double x, int n) {
  if (n < 1) throw InvalidInput("rho_formula_segment: n must be positive");
  if (!(std::abs(x) <= 1.0 + 1e-12)) throw InvalidInput("rho_formula_segment: |x| must be <= 1");
  const double dn = static_cast<double>(n);
  return std::sqrt(std::max(0.0, 1.0 - std::abs(x))) / dn + 1.0 / (dn * dn);
}

}  // namespace lejalab
