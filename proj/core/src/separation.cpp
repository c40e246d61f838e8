#include "lejalab/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lejalab {
namespace {

void require_pairs(std::span<const Complex> row) {
  if (row.size() < 2) throw InvalidInput("separation needs at least two nodes");
  for (std::size_t a = 0; a < row.size(); ++a) {
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      if (row[a] == row[b]) {
        throw InvalidInput("duplicate nodes at positions " + std::to_string(a) + " and " +
                           std::to_string(b));
      }
    }
  }
}

}  // namespace

std::string_view to_string(SeparationRule rule) {
  switch (rule) {
    case SeparationRule::rho_exact: return "rho_exact";
    case SeparationRule::rho_formula_segment: return "rho_formula_segment";
  }
  return "unknown";
}

SeparationReport separation_ratios(std::span<const Complex> row, const GreenModel& green,
                                   std::size_t n) {
  if (n == 0) throw InvalidInput("separation_ratios: n must be positive");
  require_pairs(row);
  const double delta = 1.0 / static_cast<double>(n);
  const LevelDistance rho(green, delta);

  SeparationReport report;
  report.n = n;
  report.delta = delta;
  report.rule = SeparationRule::rho_exact;
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < row.size(); ++k) {
    const double reference = rho(row[k]);
    if (!(reference > 0)) throw NumericalFailure("rho vanished at node " + std::to_string(k));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == k) continue;
      const double ratio = std::abs(row[k] - row[j]) / reference;
      if (ratio < report.min_ratio) {
        report.min_ratio = ratio;
        report.k = k;
        report.j = j;
      }
    }
  }
  return report;
}

std::vector<SeparationReport> separation_trend(const Scheme& scheme,
                                               const std::vector<std::size_t>& ns,
                                               const GreenModel& green) {
  std::vector<SeparationReport> out;
  out.reserve(ns.size());
  for (auto n : ns) out.push_back(separation_ratios(scheme.row(n), green, n));
  return out;
}

SeparationReport distancing_rule_b(std::span<const Complex> row, const SetSpec& set,
                                   std::size_t n) {
  if (set.kind != SetKind::segment) throw InvalidInput("distancing rule applies to segments only");
  if (n == 0) throw InvalidInput("distancing_rule_b: n must be positive");
  require_pairs(row);
  std::vector<double> x;
  x.reserve(row.size());
  for (const auto& z : row) {
    (void)parameter_of(set, z);
    const Complex base = set.affine ? set.affine->invert(z) : z;
    x.push_back(std::clamp(base.real(), -1.0, 1.0));
  }

  const double dn = static_cast<double>(n);
  SeparationReport report;
  report.n = n;
  report.delta = 1.0 / dn;
  report.rule = SeparationRule::rho_formula_segment;
  report.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j == k) continue;
      const double scale = std::sqrt(std::max(0.0, 1.0 - std::abs(x[j]))) / dn +
                           std::sqrt(std::max(0.0, 1.0 - std::abs(x[k]))) / dn + 1.0 / (dn * dn);
      const double ratio = std::abs(x[j] - x[k]) / scale;
      if (ratio < report.min_ratio) {
        report.min_ratio = ratio;
        report.k = k;
        report.j = j;
      }
    }
  }
  return report;
}

}  // namespace lejalab
