#include "lejalab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lejalab {
namespace {

constexpr double kPi = std::numbers::pi;

// exp(2*pi*i*k/m) with exact values at quarter turns.
Complex unit_root(std::size_t k, std::size_t m) {
  if ((4 * k) % m == 0) {
    switch ((4 * k / m) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

int orientation(Complex a, Complex b, Complex c) {
  const double v = cross(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool on_segment(Complex a, Complex b, Complex p) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

// Projection of p onto segment [a, b]: returns (t in [0,1], distance).
std::pair<double, double> project(Complex a, Complex b, Complex p) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return {t, std::abs(p - (a + t * d))};
}

std::vector<double> cumulative_lengths(const std::vector<Complex>& v) {
  std::vector<double> cum(v.size(), 0.0);
  for (std::size_t i = 1; i < v.size(); ++i) cum[i] = cum[i - 1] + std::abs(v[i] - v[i - 1]);
  return cum;
}

Complex polyline_point(const std::vector<Complex>& v, double s) {
  const auto cum = cumulative_lengths(v);
  const double total = cum.back();
  if (s <= 0) return v.front();
  if (s >= 1) return v.back();
  const double target = s * total;
  const auto it = std::upper_bound(cum.begin(), cum.end(), target);
  const std::size_t seg = std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), v.size() - 1) - 1;
  const double len = cum[seg + 1] - cum[seg];
  const double t = len > 0 ? (target - cum[seg]) / len : 0.0;
  return v[seg] + t * (v[seg + 1] - v[seg]);
}

Complex base_point(const SetSpec& spec, double s) {
  switch (spec.kind) {
    case SetKind::segment:
      return {2.0 * s - 1.0, 0.0};
    case SetKind::circle: {
      double frac = s - std::floor(s);
      return spec.center + spec.radius * std::polar(1.0, 2.0 * kPi * frac);
    }
    case SetKind::circular_arc:
      return spec.center + spec.radius * std::polar(1.0, spec.span * (s - 0.5));
    case SetKind::polyline_arc:
    case SetKind::samples:
      return polyline_point(spec.vertices, s);
  }
  return {};
}

Complex to_plane(const SetSpec& spec, Complex base) {
  return spec.affine ? spec.affine->apply(base) : base;
}

Complex to_base(const SetSpec& spec, Complex z) {
  return spec.affine ? spec.affine->invert(z) : z;
}

double plane_scale(const SetSpec& spec) { return spec.affine ? spec.affine->scale : 1.0; }

struct BaseProjection {
  double param = 0.0;
  double distance = 0.0;
};

BaseProjection project_base(const SetSpec& spec, Complex zb) {
  switch (spec.kind) {
    case SetKind::segment: {
      const double x = std::clamp(zb.real(), -1.0, 1.0);
      return {(x + 1.0) / 2.0, std::abs(zb - Complex(x, 0.0))};
    }
    case SetKind::circle: {
      const Complex d = zb - spec.center;
      double s = std::atan2(d.imag(), d.real()) / (2.0 * kPi);
      if (s < 0) s += 1.0;
      if (s >= 1.0) s = 0.0;
      return {s, std::abs(std::abs(d) - spec.radius)};
    }
    case SetKind::circular_arc: {
      const Complex d = zb - spec.center;
      const double theta = std::atan2(d.imag(), d.real());
      const double half = spec.span / 2.0;
      if (std::abs(theta) <= half) {
        return {theta / spec.span + 0.5, std::abs(std::abs(d) - spec.radius)};
      }
      const Complex a = spec.center + spec.radius * std::polar(1.0, -half);
      const Complex b = spec.center + spec.radius * std::polar(1.0, half);
      const double da = std::abs(zb - a);
      const double db = std::abs(zb - b);
      return da <= db ? BaseProjection{0.0, da} : BaseProjection{1.0, db};
    }
    case SetKind::polyline_arc:
    case SetKind::samples: {
      const auto& v = spec.vertices;
      const auto cum = cumulative_lengths(v);
      BaseProjection best{0.0, std::abs(zb - v.front())};
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const auto [t, dist] = project(v[i], v[i + 1], zb);
        if (dist < best.distance) {
          best = {(cum[i] + t * (cum[i + 1] - cum[i])) / cum.back(), dist};
        }
      }
      return best;
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::segment: return "segment";
    case SetKind::circle: return "circle";
    case SetKind::circular_arc: return "circular_arc";
    case SetKind::polyline_arc: return "polyline_arc";
    case SetKind::samples: return "samples";
  }
  return "unknown";
}

SetKind set_kind_from_string(std::string_view name) {
  for (SetKind k : {SetKind::segment, SetKind::circle, SetKind::circular_arc,
                    SetKind::polyline_arc, SetKind::samples}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidInput("unknown set kind '" + std::string(name) + "'");
}

Complex Similarity::apply(Complex z) const { return apply_linear(z) + shift; }

Complex Similarity::invert(Complex z) const {
  return (z - shift) * std::polar(1.0, -rotation) / scale;
}

Complex Similarity::apply_linear(Complex v) const { return scale * std::polar(1.0, rotation) * v; }

SetSpec SetSpec::segment() { return SetSpec{}; }

SetSpec SetSpec::circle(double radius, Complex center) {
  SetSpec s;
  s.kind = SetKind::circle;
  s.radius = radius;
  s.center = center;
  return s;
}

SetSpec SetSpec::circular_arc(double radius, double span, Complex center) {
  SetSpec s;
  s.kind = SetKind::circular_arc;
  s.radius = radius;
  s.span = span;
  s.center = center;
  return s;
}

SetSpec SetSpec::polyline_arc(std::vector<Complex> vertices) {
  SetSpec s;
  s.kind = SetKind::polyline_arc;
  s.vertices = std::move(vertices);
  return s;
}

SetSpec SetSpec::samples(std::vector<Complex> points) {
  SetSpec s;
  s.kind = SetKind::samples;
  s.vertices = std::move(points);
  return s;
}

SetSpec SetSpec::with_affine(const Similarity& map) const {
  SetSpec out = *this;
  if (out.affine) {
    // Compose: map after the existing similarity.
    const Similarity& a = *out.affine;
    Similarity c;
    c.scale = map.scale * a.scale;
    c.rotation = map.rotation + a.rotation;
    c.shift = map.apply(a.shift);
    out.affine = c;
  } else {
    out.affine = map;
  }
  return out;
}

void validate(const SetSpec& spec) {
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  switch (spec.kind) {
    case SetKind::segment:
      break;
    case SetKind::circle:
    case SetKind::circular_arc:
      if (!(spec.radius > 0) || !std::isfinite(spec.radius)) {
        throw InvalidInput("radius must be a positive finite number");
      }
      if (!finite(spec.center)) throw InvalidInput("center must be finite");
      if (spec.kind == SetKind::circular_arc &&
          !(spec.span > 0 && spec.span < 2.0 * kPi)) {
        throw InvalidInput("circular_arc span must lie in (0, 2*pi); use kind=circle for a full circle");
      }
      break;
    case SetKind::polyline_arc: {
      const auto& v = spec.vertices;
      if (v.size() < 2) throw InvalidInput("polyline_arc needs at least 2 vertices");
      for (const auto& z : v) {
        if (!finite(z)) throw InvalidInput("polyline_arc vertices must be finite");
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (v[i] == v[j]) {
            throw InvalidInput("polyline_arc vertices " + std::to_string(i) + " and " +
                               std::to_string(j) + " coincide");
          }
        }
      }
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // Adjacent segments may only share their common vertex.
        if (i + 2 < v.size()) {
          const Complex d0 = v[i + 1] - v[i];
          const Complex d1 = v[i + 2] - v[i + 1];
          if (cross(d0, d1) == 0 && dot(d0, d1) < 0) {
            throw InvalidInput("polyline_arc folds back on itself at vertex " + std::to_string(i + 1));
          }
        }
        for (std::size_t j = i + 2; j + 1 < v.size(); ++j) {
          if (segments_intersect(v[i], v[i + 1], v[j], v[j + 1])) {
            throw InvalidInput("polyline_arc is self-intersecting (segments " + std::to_string(i) +
                               " and " + std::to_string(j) + ")");
          }
        }
      }
      break;
    }
    case SetKind::samples: {
      const auto& v = spec.vertices;
      if (v.size() < 2) throw InvalidInput("samples needs at least 2 points");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!finite(v[i])) throw InvalidInput("sample points must be finite");
        if (i > 0 && v[i] == v[i - 1]) {
          throw InvalidInput("consecutive sample points " + std::to_string(i - 1) + " and " +
                             std::to_string(i) + " coincide");
        }
      }
      break;
    }
  }
  if (spec.affine) {
    const auto& a = *spec.affine;
    if (!(a.scale > 0) || !std::isfinite(a.scale)) {
      throw InvalidInput("affine scale must be a positive finite number");
    }
    if (!std::isfinite(a.rotation) || !finite(a.shift)) {
      throw InvalidInput("affine rotation and shift must be finite");
    }
  }
}

Complex point_at(const SetSpec& spec, double s) { return to_plane(spec, base_point(spec, s)); }

double parameter_of(const SetSpec& spec, Complex z, double tolerance) {
  const Complex zb = to_base(spec, z);
  const auto proj = project_base(spec, zb);
  const double scale = spec.kind == SetKind::circle || spec.kind == SetKind::circular_arc
                           ? std::max(1.0, spec.radius)
                           : 1.0;
  if (!(proj.distance <= tolerance * scale)) {
    throw InvalidInput("point (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                       ") is not on the " + std::string(to_string(spec.kind)));
  }
  return std::clamp(proj.param, 0.0, 1.0);
}

double distance_to_set(const SetSpec& spec, Complex z) {
  return project_base(spec, to_base(spec, z)).distance * plane_scale(spec);
}

Box bounding_box(const SetSpec& spec) {
  const auto mesh = build_mesh(spec, 4097, Clustering::uniform);
  Box box{mesh.points[0].real(), mesh.points[0].real(), mesh.points[0].imag(), mesh.points[0].imag()};
  auto extend = [&box](Complex p) {
    box.xmin = std::min(box.xmin, p.real());
    box.xmax = std::max(box.xmax, p.real());
    box.ymin = std::min(box.ymin, p.imag());
    box.ymax = std::max(box.ymax, p.imag());
  };
  for (const auto& p : mesh.points) extend(p);
  for (const auto& v : spec.vertices) extend(to_plane(spec, v));
  return box;
}

double diameter(const SetSpec& spec) {
  switch (spec.kind) {
    case SetKind::segment:
      return 2.0 * plane_scale(spec);
    case SetKind::circle:
      return 2.0 * spec.radius * plane_scale(spec);
    default: {
      const auto mesh = build_mesh(spec, 1025, Clustering::uniform);
      double d = 0.0;
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        for (std::size_t j = i + 1; j < mesh.size(); ++j) {
          d = std::max(d, std::abs(mesh.points[i] - mesh.points[j]));
        }
      }
      return d;
    }
  }
}

BoundaryMesh build_mesh(const SetSpec& spec, std::size_t m, Clustering clustering) {
  if (m < 2) throw InvalidInput("mesh needs at least 2 points");
  validate(spec);

  BoundaryMesh mesh;
  mesh.source = spec;
  mesh.closed = spec.closed();
  mesh.points.resize(m);
  mesh.params.resize(m);

  if (mesh.closed) {
    for (std::size_t k = 0; k < m; ++k) {
      mesh.params[k] = static_cast<double>(k) / static_cast<double>(m);
      mesh.points[k] = to_plane(spec, spec.center + spec.radius * unit_root(k, m));
    }
  } else {
    const auto last = static_cast<long long>(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      // r is computed from integers so that mirrored indices get exactly
      // opposite values.
      const double r = static_cast<double>(2 * static_cast<long long>(k) - last) /
                       static_cast<double>(last);
      const double x = clustering == Clustering::uniform ? r : std::sin(kPi * r / 2.0);
      const double s = (x + 1.0) / 2.0;
      mesh.params[k] = s;
      mesh.points[k] = spec.kind == SetKind::segment ? to_plane(spec, Complex(x, 0.0))
                                                      : point_at(spec, s);
    }
  }

  for (std::size_t k = 1; k < m; ++k) {
    if (!(mesh.params[k] > mesh.params[k - 1]) || mesh.points[k] == mesh.points[k - 1]) {
      throw NumericalFailure("mesh of " + std::to_string(m) +
                             " points is too fine to separate consecutive points");
    }
  }
  return mesh;
}

BoundaryMesh subarc(const BoundaryMesh& mesh, std::size_t i, std::size_t j) {
  if (mesh.closed) {
    throw InvalidInput("subarc of a closed curve is ambiguous; cut the curve first");
  }
  if (i == j) throw InvalidInput("subarc endpoints must differ");
  if (i >= mesh.size() || j >= mesh.size()) throw InvalidInput("subarc index out of range");
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  BoundaryMesh out;
  out.closed = false;
  out.source = mesh.source;
  out.points.assign(mesh.points.begin() + static_cast<std::ptrdiff_t>(lo),
                    mesh.points.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  out.params.assign(mesh.params.begin() + static_cast<std::ptrdiff_t>(lo),
                    mesh.params.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  return out;
}

double qc_constant_estimate(const BoundaryMesh& mesh) {
  if (mesh.closed) throw InvalidInput("qc constant is defined for open arcs");
  if (mesh.size() < 3) throw InvalidInput("qc constant needs at least 3 mesh points");

  constexpr std::size_t kMaxSamples = 512;
  std::vector<Complex> p;
  if (mesh.size() <= kMaxSamples) {
    p = mesh.points;
  } else {
    p.reserve(kMaxSamples);
    const std::size_t last = mesh.size() - 1;
    for (std::size_t k = 0; k < kMaxSamples; ++k) {
      p.push_back(mesh.points[(k * last + (kMaxSamples - 1) / 2) / (kMaxSamples - 1)]);
    }
  }

  // diam[i] holds diam(p[i..j-1]) while j advances, so each (i, j) costs O(1).
  const std::size_t count = p.size();
  std::vector<double> diam(count, 0.0);
  double best = 0.0;
  bool any = false;
  for (std::size_t j = 1; j < count; ++j) {
    double reach = 0.0;  // max |p[j] - p[l]| over l in [i, j)
    for (std::size_t i = j; i-- > 0;) {
      reach = std::max(reach, std::abs(p[j] - p[i]));
      diam[i] = std::max(diam[i], reach);
      const double chord = std::abs(p[j] - p[i]);
      if (chord == 0.0) continue;
      any = true;
      best = std::max(best, diam[i] / chord);
    }
  }
  if (!any) throw InvalidInput("all mesh point pairs are degenerate");
  return best;
}

}  // namespace lejalab
