#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lejalab/conformal.hpp"
#include "lejalab/error.hpp"
#include "lejalab/nodes.hpp"

namespace lejalab {

enum class SeparationRule { rho_exact, rho_formula_segment };

std::string_view to_string(SeparationRule rule);

/// Empirical separation constant of one row: the minimum over ordered pairs
/// (k, j), k != j, of |z_k - z_j| divided by the rule's reference length at
/// the reference node z_k.
struct SeparationReport {
  std::size_t n = 0;
  double min_ratio = 0.0;
  std::size_t k = 0;
  std::size_t j = 0;
  SeparationRule rule = SeparationRule::rho_exact;
  double delta = 0.0;
};

/// min |z_k - z_j| / rho_{1/n}(z_k) with rho from the Green model.
SeparationReport separation_ratios(std::span<const Complex> row, const GreenModel& green,
                                   std::size_t n);

std::vector<SeparationReport> separation_trend(const Scheme& scheme,
                                               const std::vector<std::size_t>& ns,
                                               const GreenModel& green);

/// min |x_j - x_k| / (sqrt(1-|x_j|)/n + sqrt(1-|x_k|)/n + 1/n^2) for rows
/// on a segment set (measured in the segment's base coordinate).
SeparationReport distancing_rule_b(std::span<const Complex> row, const SetSpec& set,
                                   std::size_t n);

}  // namespace lejalab
