#include "lejalab/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lejalab/parallel.hpp"
#include "refine.hpp"

namespace lejalab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

Complex unit(Complex z) { return z / std::abs(z); }

Complex horner(std::span<const Complex> coeffs, std::size_t degree, Complex z) {
  Complex acc = coeffs[degree];
  for (std::size_t i = degree; i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// Sampled and refined max of |p| along a parametrized curve.
template <typename PointAt>
double curve_max(std::span<const Complex> coeffs, std::size_t degree, std::size_t samples,
                 PointAt&& point_at_param, bool periodic) {
  std::vector<double> params(samples), values(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    params[i] = periodic ? static_cast<double>(i) / static_cast<double>(samples)
                         : static_cast<double>(i) / static_cast<double>(samples - 1);
    values[i] = std::abs(horner(coeffs, degree, point_at_param(params[i])));
  }
  auto f = [&](double s) { return std::abs(horner(coeffs, degree, point_at_param(s))); };
  return detail::refine_max<decltype(f)&>(params, values, f, periodic).value;
}

}  // namespace

LagrangeBasis::LagrangeBasis(std::vector<Complex> nodes) : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw InvalidInput("Lagrange basis needs at least one node");
  log_denominator_.assign(n, 0.0);
  denominator_phase_.assign(n, Complex(1.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    double logsum = 0.0;
    Complex phase{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      const Complex d = nodes_[k] - nodes_[j];
      if (d == Complex(0.0, 0.0)) {
        throw InvalidInput("duplicate nodes at positions " + std::to_string(std::min(j, k)) +
                           " and " + std::to_string(std::max(j, k)));
      }
      logsum += std::log(std::abs(d));
      phase *= unit(d);
    }
    log_denominator_[k] = logsum;
    denominator_phase_[k] = unit(phase);
  }
}

std::size_t LagrangeBasis::node_index(Complex z) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (nodes_[k] == z) return k;
  }
  return kNoNode;
}

double LagrangeBasis::lebesgue(Complex z) const {
  if (node_index(z) != kNoNode) return 1.0;
  const std::size_t n = nodes_.size();
  double total_log = 0.0;
  for (const auto& zj : nodes_) total_log += std::log(std::abs(z - zj));
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += std::exp(total_log - std::log(std::abs(z - nodes_[k])) - log_denominator_[k]);
  }
  return sum;
}

std::vector<double> LagrangeBasis::magnitudes(Complex z) const {
  const std::size_t n = nodes_.size();
  std::vector<double> out(n, 0.0);
  if (const auto idx = node_index(z); idx != kNoNode) {
    out[idx] = 1.0;
    return out;
  }
  double total_log = 0.0;
  for (const auto& zj : nodes_) total_log += std::log(std::abs(z - zj));
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = std::exp(total_log - std::log(std::abs(z - nodes_[k])) - log_denominator_[k]);
  }
  return out;
}

std::vector<Complex> LagrangeBasis::values(Complex z) const {
  const std::size_t n = nodes_.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  if (const auto idx = node_index(z); idx != kNoNode) {
    out[idx] = 1.0;
    return out;
  }
  double total_log = 0.0;
  Complex total_phase{1.0, 0.0};
  for (const auto& zj : nodes_) {
    const Complex d = z - zj;
    total_log += std::log(std::abs(d));
    total_phase *= unit(d);
  }
  total_phase = unit(total_phase);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex d = z - nodes_[k];
    const double mag = std::exp(total_log - std::log(std::abs(d)) - log_denominator_[k]);
    out[k] = mag * total_phase * std::conj(unit(d)) * std::conj(denominator_phase_[k]);
  }
  return out;
}

double lebesgue_function(std::span<const Complex> row, Complex z) {
  return LagrangeBasis({row.begin(), row.end()}).lebesgue(z);
}

LebesgueResult lebesgue_constant(std::span<const Complex> row, const SetSpec& set,
                                 std::size_t mesh_factor) {
  if (mesh_factor < 10) throw InvalidInput("lebesgue_constant: mesh_factor must be at least 10");
  const LagrangeBasis basis({row.begin(), row.end()});
  const std::size_t n = row.size();
  const auto mesh = build_mesh(set, std::max<std::size_t>(mesh_factor * n, 2),
                               set.closed() ? Clustering::uniform : Clustering::endpoint_clustered);

  std::vector<double> values(mesh.size());
  parallel_blocks(
      mesh.size(),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) values[i] = basis.lebesgue(mesh.points[i]);
      },
      256);

  auto f = [&](double s) { return basis.lebesgue(point_at(set, s)); };
  constexpr int kPasses = 3;
  const auto best = detail::refine_max<decltype(f)&>(mesh.params, values, f, mesh.closed, kPasses);

  LebesgueResult result;
  result.n = n;
  result.lambda = best.value;
  result.lambda_root = std::pow(best.value, 1.0 / static_cast<double>(n));
  result.argmax = best.value > best.sampled_value ? point_at(set, best.param)
                                                  : mesh.points[best.sampled_index];
  result.mesh_size = mesh.size();
  result.refinement_passes = kPasses;
  result.uncertain = best.value > best.sampled_value * (1.0 + 1e-3);
  return result;
}

std::vector<LebesgueResult> subexponential_table(const Scheme& scheme,
                                                 const std::vector<std::size_t>& ns,
                                                 std::size_t mesh_factor) {
  std::string missing;
  for (auto n : ns) {
    if (!scheme.has_row(n)) missing += (missing.empty() ? "" : ", ") + std::to_string(n);
  }
  if (!missing.empty()) throw InvalidInput("scheme has no rows for n = " + missing);
  std::vector<LebesgueResult> table;
  table.reserve(ns.size());
  for (auto n : ns) table.push_back(lebesgue_constant(scheme.row(n), scheme.set(), mesh_factor));
  return table;
}

double bernstein_walsh_ratio(std::span<const Complex> coeffs, const SetSpec& set, double delta,
                             const GreenModel& green) {
  if (!(delta > 0)) throw InvalidInput("bernstein_walsh_ratio: delta must be positive");
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == Complex(0.0, 0.0)) --degree;
  if (degree == 0) throw InvalidInput("bernstein_walsh_ratio: zero polynomial");
  --degree;

  constexpr std::size_t kSamples = 2048;
  const bool closed = set.closed();
  const double on_set = curve_max(
      coeffs, degree, kSamples,
      [&](double s) {
        // Cosine grading on open arcs matches the endpoint-clustered meshes.
        const double t = closed ? s : (1.0 - std::cos(kPi * s)) / 2.0;
        return point_at(set, t);
      },
      closed);

  double on_level = 0.0;
  if (green.method() == GreenMethod::discrete) {
    for (const auto& z : level_curve(green, delta, 512).polyline) {
      on_level = std::max(on_level, std::abs(horner(coeffs, degree, z)));
    }
  } else {
    on_level = curve_max(
        coeffs, degree, kSamples,
        [&](double s) { return green.level_point(delta, 2.0 * kPi * s); }, true);
  }
  if (on_set == 0.0) throw InvalidInput("bernstein_walsh_ratio: polynomial vanishes on the set");
  return on_level / on_set;
}

SProductReport s_product(std::span<const Complex> row, std::size_t k, double delta, std::size_t n) {
  if (k >= row.size()) throw InvalidInput("s_product: node index out of range");
  if (!(delta > 0)) throw InvalidInput("s_product: delta must be positive");
  if (n == 0) throw InvalidInput("s_product: n must be positive");
  SProductReport report;
  report.n = n;
  report.k = k;
  report.delta = delta;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j == k) continue;
    const double d = std::abs(row[j] - row[k]);
    if (d <= delta) {
      report.members.push_back(j);
      report.log_s += std::log(d);
    }
  }
  const double s = std::exp(report.log_s);
  if (std::isnormal(s)) report.s_value = s;
  report.s_root = std::exp(report.log_s / static_cast<double>(n));
  return report;
}

SProductReport s_product_min(std::span<const Complex> row, double delta, std::size_t n) {
  if (row.empty()) throw InvalidInput("s_product_min: empty row");
  SProductReport best = s_product(row, 0, delta, n);
  for (std::size_t k = 1; k < row.size(); ++k) {
    auto r = s_product(row, k, delta, n);
    if (r.s_root < best.s_root) best = std::move(r);
  }
  return best;
}

}  // namespace lejalab
