#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lejalab/conformal.hpp"
#include "lejalab/error.hpp"
#include "lejalab/geometry.hpp"
#include "lejalab/nodes.hpp"

namespace lejalab {

/// Lagrange fundamental polynomials of a node row, evaluated in log space.
///
/// The denominators prod_{j != k} (z_k - z_j) are stored as a log-magnitude
/// and a unit phase, so |l_k(z)| is the exponential of a difference of
/// log-sums and never overflows for rows up to ~10^3 nodes.
class LagrangeBasis {
 public:
  /// Throws InvalidInput on duplicate nodes.
  explicit LagrangeBasis(std::vector<Complex> nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Complex>& nodes() const { return nodes_; }

  /// sum_k |l_k(z)|; exactly 1 at a node.
  double lebesgue(Complex z) const;
  /// |l_k(z)| for every k.
  std::vector<double> magnitudes(Complex z) const;
  /// Signed (complex) l_k(z) for every k; the indicator at a node.
  std::vector<Complex> values(Complex z) const;

 private:
  std::size_t node_index(Complex z) const;

  std::vector<Complex> nodes_;
  std::vector<double> log_denominator_;
  std::vector<Complex> denominator_phase_;
};

/// Lebesgue function sum_k |l_{n,k}(z)| of a row.
double lebesgue_function(std::span<const Complex> row, Complex z);

struct LebesgueResult {
  std::size_t n = 0;
  double lambda = 1.0;
  double lambda_root = 1.0;
  Complex argmax{};
  std::size_t mesh_size = 0;
  int refinement_passes = 0;
  /// Set when refinement moved the sampled maximum by more than 0.1%.
  bool uncertain = false;
};

/// Lebesgue constant sup_K sum_k |l_k|: sampled on mesh_factor * n
/// endpoint-clustered points of the set, then polished by three passes of
/// golden-section search around the five largest sampled local maxima.
LebesgueResult lebesgue_constant(std::span<const Complex> row, const SetSpec& set,
                                 std::size_t mesh_factor = 30);

/// One LebesgueResult per requested row size.
std::vector<LebesgueResult> subexponential_table(const Scheme& scheme,
                                                 const std::vector<std::size_t>& ns,
                                                 std::size_t mesh_factor = 30);

/// max |p| on the level set {g = log(1 + delta)} divided by max |p| on the
/// set; p has monomial coefficients coeffs[0] + coeffs[1] z + ...
double bernstein_walsh_ratio(std::span<const Complex> coeffs, const SetSpec& set, double delta,
                             const GreenModel& green);

struct SProductReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double delta = 0.0;
  /// Row indices j != k with |z_j - z_k| <= delta.
  std::vector<std::size_t> members;
  double log_s = 0.0;
  /// exp(log_s) when representable as a normal double.
  std::optional<double> s_value;
  /// S^{1/n}.
  double s_root = 1.0;
};

/// Product of |z_j - z_k| over the row neighbours of z_k within delta.
SProductReport s_product(std::span<const Complex> row, std::size_t k, double delta, std::size_t n);

/// The report of the node k minimizing s_root (lowest k on ties).
SProductReport s_product_min(std::span<const Complex> row, double delta, std::size_t n);

/// Default delta ladder for S-product sweeps.
inline const std::vector<double>& default_delta_ladder() {
  static const std::vector<double> ladder{0.4, 0.2, 0.1, 0.05};
  return ladder;
}

}  // namespace lejalab
