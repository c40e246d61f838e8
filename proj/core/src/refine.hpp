#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace lejalab::detail {

struct RefinedMax {
  double value = 0.0;
  double param = 0.0;
  double sampled_value = 0.0;
  double sampled_param = 0.0;
  std::size_t sampled_index = 0;
};

/// Maximizes f over a parameter interval given samples (params ascending,
/// values = f(params)). The top `top` local maxima of the samples are
/// polished by golden-section search on their neighbor bracket, `passes`
/// rounds of 20 iterations each. On periodic domains (period 1) brackets
/// wrap; f must accept parameters outside [0, 1) and reduce them itself.
template <typename F>
RefinedMax refine_max(std::span<const double> params, std::span<const double> values, F&& f,
                      bool periodic, int passes = 3, std::size_t top = 5) {
  const std::size_t m = params.size();
  RefinedMax out;
  std::size_t arg = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (values[i] > values[arg]) arg = i;
  }
  out.value = out.sampled_value = values[arg];
  out.param = out.sampled_param = params[arg];
  out.sampled_index = arg;

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < m; ++i) {
    const bool has_left = periodic || i > 0;
    const bool has_right = periodic || i + 1 < m;
    const double left = has_left ? values[(i + m - 1) % m] : -INFINITY;
    const double right = has_right ? values[(i + 1) % m] : -INFINITY;
    if (values[i] >= left && values[i] >= right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (peaks.size() > top) peaks.resize(top);

  constexpr double kInvPhi = 0.6180339887498949;
  for (std::size_t peak : peaks) {
    double lo, hi;
    if (periodic) {
      lo = peak > 0 ? params[peak - 1] : params[m - 1] - 1.0;
      hi = peak + 1 < m ? params[peak + 1] : params[0] + 1.0;
    } else {
      lo = params[peak > 0 ? peak - 1 : 0];
      hi = params[peak + 1 < m ? peak + 1 : m - 1];
    }
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    auto consider = [&](double x, double v) {
      if (v > out.value) {
        out.value = v;
        out.param = periodic ? x - std::floor(x) : x;
      }
    };
    consider(x1, f1);
    consider(x2, f2);
    for (int pass = 0; pass < passes; ++pass) {
      for (int it = 0; it < 20; ++it) {
        if (f1 >= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - kInvPhi * (hi - lo);
          f1 = f(x1);
          consider(x1, f1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + kInvPhi * (hi - lo);
          f2 = f(x2);
          consider(x2, f2);
        }
      }
    }
  }
  return out;
}

}  // namespace lejalab::detail
