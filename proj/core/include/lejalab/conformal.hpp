#pragma once

#include <cstddef>
#include <vector>

#include "lejalab/error.hpp"
#include "lejalab/geometry.hpp"

namespace lejalab {

/// Joukowski map (w + 1/w) / 2 from |w| > 1 onto the exterior of [-1, 1].
Complex joukowski(Complex w);

/// Inverse of the Joukowski map, w = z + sqrt(z^2 - 1) on the branch with
/// |w| > 1. Rejects points within 1e-14 of [-1, 1].
Complex inverse_joukowski(Complex z);

enum class GreenMethod { exact_segment, exact_circle, discrete };

std::string_view to_string(GreenMethod method);

/// Green function of the complement of a compact set with pole at infinity.
///
/// The exact models use closed forms (log|Phi| for the segment via the
/// inverse Joukowski map, log(|z - c| / R) for a circle), composed with the
/// set's similarity. The discrete model is the logarithmic potential of
/// equal charges, (1/N) sum log|z - t_j| - log(cap), clamped below at 0.
class GreenModel {
 public:
  /// Closed-form model for a segment or circle set (with any similarity).
  static GreenModel exact(const SetSpec& set);

  /// Equal-charge model from explicit charges and capacity.
  static GreenModel discrete(const SetSpec& set, std::vector<Complex> charges, double capacity);

  /// Equal-charge model with N Leja charges on a default candidate mesh and
  /// the capacity estimated from the same sequence.
  static GreenModel discrete_leja(const SetSpec& set, std::size_t charges = 256);

  /// Exact model where one exists, discrete_leja otherwise.
  static GreenModel for_set(const SetSpec& set);

  GreenMethod method() const { return method_; }
  const SetSpec& set() const { return set_; }
  const std::vector<Complex>& charges() const { return charges_; }
  /// Capacity of the set: closed form for exact models.
  double capacity() const { return capacity_; }

  /// Value at z without the domain check; 0 on and inside the set.
  double value(Complex z) const;

  /// Closed-form point on the level set g = log(1 + delta) at angle theta in
  /// the exterior-disk coordinate. Exact models only.
  Complex level_point(double delta, double theta) const;

 private:
  GreenMethod method_ = GreenMethod::exact_segment;
  SetSpec set_;
  std::vector<Complex> charges_;
  double capacity_ = 0.5;
};

/// g(z); rejects z inside or on the set for exact models (distance 1e-12).
double green_eval(const GreenModel& model, Complex z);

/// Closed polyline approximating {g = log(1 + delta)}.
struct LevelCurve {
  double delta = 0.0;
  std::vector<Complex> polyline;
  bool closed = true;
  /// Max |g - log(1 + delta)| over polyline points.
  double tolerance = 0.0;
  std::size_t resolution = 0;
};

/// Exact models trace the image of |w| = 1 + delta at `resolution` angles.
/// The discrete model extracts the contour on a resolution x resolution grid
/// over the set's bounding box inflated by 3 (1 + delta) diam(K).
LevelCurve level_curve(const GreenModel& model, double delta, std::size_t resolution = 512);

/// Winding number of a closed polyline about p.
int winding_number(const std::vector<Complex>& polyline, Complex p);

/// Distance from p to the polyline (closed if `closed`).
double polyline_distance(const std::vector<Complex>& polyline, Complex p, bool closed = true);

/// Euclidean distance from p to the ellipse x^2/a^2 + y^2/b^2 = 1, a >= b > 0,
/// for p inside or outside. Safeguarded bisection on the stationarity equation.
double ellipse_distance(double a, double b, Complex p);

/// Distance from points of K to the level set K_delta. Exact models are
/// analytic; the discrete model measures to a cached level-curve polyline.
class LevelDistance {
 public:
  LevelDistance(const GreenModel& model, double delta, std::size_t resolution = 512);
  double operator()(Complex z) const;
  double delta() const { return delta_; }

 private:
  GreenModel model_;
  double delta_;
  std::vector<Complex> polyline_;
};

/// rho_delta(z) = dist(z, K_delta) for z on the set.
double rho(const GreenModel& model, double delta, Complex z);

/// sqrt(1 - |x|) / n + 1 / n^2.
double rho_formula_segment(double x, int n);

}  // namespace lejalab
