#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lejalab/error.hpp"
#include "lejalab/geometry.hpp"

namespace lejalab {

enum class EquilibriumMethod { arcsine_segment, uniform_circle, empirical };

std::string_view to_string(EquilibriumMethod method);

/// Equilibrium measure of a set, exposed through its CDF in the set's
/// natural parameter (see point_at).
class EquilibriumModel {
 public:
  static EquilibriumModel arcsine_segment(const SetSpec& set);
  static EquilibriumModel uniform_circle(const SetSpec& set);
  /// Step CDF of a reference node family (typically many Leja points).
  static EquilibriumModel empirical(const SetSpec& set, std::span<const Complex> reference);
  /// Closed form for segments and circles, otherwise `reference_size` Leja
  /// points on a 32768-point clustered mesh.
  static EquilibriumModel for_set(const SetSpec& set, std::size_t reference_size = 1024);

  EquilibriumMethod method() const { return method_; }
  const SetSpec& set() const { return set_; }
  bool closed() const { return set_.closed(); }

  /// Right-continuous CDF at parameter s.
  double cdf(double s) const;
  /// Left limit of the CDF at s.
  double cdf_left(double s) const;
  /// Parameters where the CDF jumps (empirical model only).
  const std::vector<double>& jumps() const { return reference_params_; }

  double parameter(Complex z) const { return parameter_of(set_, z); }

 private:
  EquilibriumMethod method_ = EquilibriumMethod::arcsine_segment;
  SetSpec set_;
  std::vector<double> reference_params_;
};

/// Normalized counting measure of a node row.
struct CountingMeasure {
  std::vector<Complex> atoms;
  /// Natural parameters of the atoms, sorted ascending.
  std::vector<double> parameters;

  static CountingMeasure from_row(const SetSpec& set, std::span<const Complex> row);
  std::size_t size() const { return atoms.size(); }
};

/// 1/2 + arcsin(x)/pi on [-1, 1].
double arcsine_cdf(double x);

/// Equilibrium mass of the subarc between two points of the set (on closed
/// curves: the arc traversed in increasing parameter from the smaller one).
double mu_subarc(const EquilibriumModel& model, Complex xi1, Complex xi2);

/// sup_s |F_nu(s) - F_mu(s)| in the natural parameter, evaluated exactly at
/// the jump points. Closed curves use the cut at parameter 0.
double kolmogorov_distance(const CountingMeasure& nu, const EquilibriumModel& model);

/// Max of the Kolmogorov distance over 8 equally rotated cuts (closed curves);
/// equals kolmogorov_distance on open arcs.
double kolmogorov_distance_rotated(const CountingMeasure& nu, const EquilibriumModel& model);

/// (prod_{j<n} |z_n - z_j|)^{1/(n-1)} for the last point of a Leja-ordered
/// list, computed as a mean of logs.
double capacity_estimate(std::span<const Complex> leja_points);

/// n * min over parameter-adjacent node pairs of mu_subarc. Closed curves
/// include the wrap-around gap.
double spacing_statistic(std::span<const Complex> row, const EquilibriumModel& model, std::size_t n);

/// max mu_subarc(xi1, xi2) / sqrt|xi1 - xi2| over mesh pairs whose index
/// distance is at most `window` (0 scans every pair).
double holder_statistic(const EquilibriumModel& model, const BoundaryMesh& mesh,
                        std::size_t window = 16);

/// Same statistic over a node row, after sorting it by parameter.
double holder_statistic(const EquilibriumModel& model, std::span<const Complex> row,
                        std::size_t window = 16);

}  // namespace lejalab
