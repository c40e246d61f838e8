// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lejalab/conformal.hpp"
#include "lejalab/lebesgue.hpp"
#include "lejalab/nodes.hpp"
#include "lejalab/potential.hpp"
#include "lejalab/separation.hpp"
#include "oracles.hpp"

using namespace lejalab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;
};

void note(Verdict& v, bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
void note(Verdict& v, bool ok, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!v.detail.empty()) v.detail += "; ";
  v.detail += buf;
  if (!ok) {
    v.pass = false;
    v.detail += " [x]";
  }
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) note(v, false, "over budget %.0f s", budget_s);
  if (!v.pass) ++failures;
  std::printf("%s %2d %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", id, title, secs,
              v.detail.c_str());
  std::fflush(stdout);
}

std::vector<double> reals(std::span<const Complex> row) { return oracle::real_parts({row.begin(), row.end()}); }

// Minimum pair ratio |x_k - x_j| / rho(x_k) with rho from the on-axis ellipse oracle.
double separation_oracle(const std::vector<double>& x, std::size_t n) {
  const double r = 1.0 + 1.0 / static_cast<double>(n);
  const double a = (r + 1.0 / r) / 2.0, b = (r - 1.0 / r) / 2.0;
  double best = INFINITY;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double rho = oracle::ellipse_distance_on_axis(a, b, x[k]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != k) best = std::min(best, std::abs(x[k] - x[j]) / rho);
    }
  }
  return best;
}

}  // namespace

int main() {
  const auto seg = SetSpec::segment();
  const auto exact = GreenModel::exact(seg);

  criterion(1, "Joukowski round trip and segment Green function", 1.0, [&] {
    Verdict v;
    double worst = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double radius = 1.0 + 9.0 * k / 100.0;
      for (int t = 0; t < 100; ++t) {
        const Complex w = std::polar(radius, 2.0 * kPi * t / 100.0 + 0.01);
        worst = std::max(worst, std::abs(inverse_joukowski(joukowski(w)) - w));
      }
    }
    note(v, worst <= 1e-12, "max |Phi(Psi(w)) - w| = %.2e", worst);
    const double g = green_eval(exact, 1.25);
    note(v, std::abs(g - std::log(2.0)) <= 1e-12, "g(1.25) - log 2 = %.1e", g - std::log(2.0));
    note(v, std::abs(oracle::green_segment(1.25) - std::log(2.0)) <= 1e-12, "focal oracle agrees");
    return v;
  });

  criterion(2, "rho formula against exact rho", 30.0, [&] {
    Verdict v;
    constexpr int kPoints = 10000;
    double lo = INFINITY, hi = 0.0, oracle_gap = 0.0, sampled_gap = 0.0;
    for (int n = 1; n <= 128; ++n) {
      const double delta = 1.0 / n;
      const double r = 1.0 + delta;
      const double a = (r + 1.0 / r) / 2.0, b = (r - 1.0 / r) / 2.0;
      const LevelDistance rho(exact, delta);
      for (int i = 0; i < kPoints; ++i) {
        const double x = -1.0 + 2.0 * i / (kPoints - 1);
        const double ex = rho(x);
        const double ratio = rho_formula_segment(x, n) / ex;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        oracle_gap = std::max(oracle_gap, std::abs(ex / oracle::ellipse_distance_on_axis(a, b, x) - 1));
        if (i % 97 == 0 && n % 9 == 1) {
          sampled_gap = std::max(sampled_gap, std::abs(ex / oracle::ellipse_distance_sampled(a, b, x) - 1));
        }
      }
    }
    const double c2 = std::max(hi, 1.0 / lo);
    note(v, oracle_gap <= 1e-9, "exact rho vs on-axis oracle %.1e", oracle_gap);
    note(v, sampled_gap <= 1e-8, "vs sampled oracle %.1e", sampled_gap);
    note(v, c2 <= 4.5, "ratio in [%.4f, %.4f], c2 = %.4f", lo, hi, c2);
    return v;
  });

  criterion(3, "Lebesgue constants at n = 3", 1.0, [&] {
    Verdict v;
    const auto cheb = lebesgue_constant(chebyshev_nodes(seg, 3), seg);
    const auto equi = lebesgue_constant(equispaced_nodes(seg, 3), seg);
    // Hand values at the known maximizers x = 1 and x = 1/2.
    const double cheb_hand = oracle::lebesgue_naive(reals(chebyshev_nodes(seg, 3)), 1.0);
    const double equi_hand = oracle::lebesgue_naive({-1.0, 0.0, 1.0}, 0.5);
    note(v, std::abs(cheb.lambda - 5.0 / 3.0) <= 1e-6 && std::abs(cheb_hand - 5.0 / 3.0) <= 1e-12,
         "Chebyshev %.9f", cheb.lambda);
    note(v, std::abs(equi.lambda - 1.25) <= 1e-6 && std::abs(equi_hand - 1.25) <= 1e-12,
         "equispaced %.9f", equi.lambda);
    return v;
  });

  const auto leja = Scheme::generate(SchemeKind::leja, seg, {256});

  criterion(4, "Leja Lebesgue constants are subexponential", 300.0, [&] {
    Verdict v;
    const auto table = subexponential_table(leja, {32, 64, 128});
    for (const auto& r : table) note(v, r.lambda_root <= 1.2, "n=%zu root %.4f", r.n, r.lambda_root);
    note(v, table[1].lambda_root <= table[0].lambda_root && table[2].lambda_root <= table[1].lambda_root,
         "nonincreasing");
    for (std::size_t n : {16u, 32u}) {
      for (const auto& [name, row] : {std::pair{"leja", leja.row(n)},
                                       std::pair{"equispaced", equispaced_nodes(seg, n)}}) {
        const double ours = lebesgue_constant(row, seg).lambda;
        const double dense = oracle::lebesgue_dense(reals(row), 100001);
        note(v, std::abs(ours / dense - 1) <= 1e-4 && ours >= dense * (1 - 1e-12),
             "%s n=%zu %.5g vs dense %.5g", name, n, ours, dense);
      }
    }
    const double equi16 = std::pow(lebesgue_constant(equispaced_nodes(seg, 16), seg).lambda, 1.0 / 16);
    note(v, equi16 >= 1.3, "equispaced n=16 root %.4f", equi16);
    return v;
  });

  criterion(5, "Leja rows are well separated", 120.0, [&] {
    Verdict v;
    double worst = INFINITY;
    std::size_t worst_n = 0;
    double r16 = 0.0, r128 = 0.0;
    for (std::size_t n = 8; n <= 128; ++n) {
      const double r = separation_ratios(leja.row(n), exact, n).min_ratio;
      if (r < worst) worst = r, worst_n = n;
      if (n == 16) r16 = r;
      if (n == 128) r128 = r;
    }
    note(v, worst >= 0.1, "min over n = %.4f at n=%zu", worst, worst_n);
    note(v, r128 >= 0.5 * r16, "n=16 %.4f, n=128 %.4f", r16, r128);
    for (std::size_t n : {16u, 128u}) {
      const double ours = separation_ratios(leja.row(n), exact, n).min_ratio;
      const double check = separation_oracle(reals(leja.row(n)), n);
      note(v, std::abs(ours / check - 1) <= 1e-9, "oracle n=%zu %.1e", n, ours / check - 1);
    }
    return v;
  });

  const auto arcsine = EquilibriumModel::arcsine_segment(seg);

  criterion(6, "counting measures approach the arcsine law", 30.0, [&] {
    Verdict v;
    for (std::size_t n : {4u, 16u, 64u}) {
      const double d = kolmogorov_distance(CountingMeasure::from_row(seg, chebyshev_nodes(seg, n)), arcsine);
      note(v, std::abs(d - 0.5 / n) <= 1e-12, "Chebyshev n=%zu err %.1e", n, d - 0.5 / n);
    }
    const double d16 = kolmogorov_distance(CountingMeasure::from_row(seg, leja.row(16)), arcsine);
    const double d256 = kolmogorov_distance(CountingMeasure::from_row(seg, leja.row(256)), arcsine);
    note(v, d256 < d16, "Leja n=16 %.4f, n=256 %.4f", d16, d256);
    return v;
  });

  criterion(7, "spacing and Hoelder statistics", 30.0, [&] {
    Verdict v;
    double worst = 0.0;
    for (std::size_t n = 4; n <= 64; ++n) {
      worst = std::max(worst, std::abs(spacing_statistic(chebyshev_nodes(seg, n), arcsine, n) - 1.0));
    }
    note(v, worst <= 1e-12, "Chebyshev spacing max err %.1e", worst);
    const double h512 = holder_statistic(arcsine, build_mesh(seg, 512, Clustering::endpoint_clustered));
    const double h1024 = holder_statistic(arcsine, build_mesh(seg, 1024, Clustering::endpoint_clustered));
    const double limit = std::sqrt(2.0) / kPi;
    note(v, std::abs(h1024 - h512) <= 0.01, "Hoelder 512 %.6f, 1024 %.6f", h512, h1024);
    note(v, std::abs(h1024 - 0.450) <= 0.01 && std::abs(h1024 - limit) <= 0.01,
         "endpoint limit sqrt2/pi %.6f", limit);
    return v;
  });

  criterion(8, "Bernstein-Walsh ratio of Chebyshev polynomials", 10.0, [&] {
    Verdict v;
    double worst = 0.0;
    bool bounded = true;
    for (int d = 1; d <= 8; ++d) {
      const auto t = oracle::chebyshev_t(d);
      const std::vector<Complex> coeffs(t.begin(), t.end());
      for (double delta : {0.25, 0.5, 1.0}) {
        const double r = 1.0 + delta;
        const double ratio = bernstein_walsh_ratio(coeffs, seg, delta, exact);
        worst = std::max(worst, std::abs(ratio - (std::pow(r, d) + std::pow(r, -d)) / 2));
        bounded = bounded && ratio <= std::pow(r, d) * (1 + 1e-12);
      }
    }
    note(v, worst <= 1e-6, "max err vs ellipse maximum %.1e", worst);
    note(v, bounded, "below (1+delta)^d");
    return v;
  });

  criterion(9, "discrete Green function against the closed form", 30.0, [&] {
    Verdict v;
    const auto discrete = GreenModel::discrete_leja(seg, 256);
    // Probe ring: the stadium at distance 1/2 from [-1, 1].
    std::vector<Complex> probes;
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.0 + 2.0 * i / 400;
      probes.emplace_back(x, 0.5);
      probes.emplace_back(x, -0.5);
    }
    for (int i = 0; i < 400; ++i) {
      const double t = kPi * i / 400 - kPi / 2;
      probes.push_back(1.0 + std::polar(0.5, t));
      probes.push_back(-1.0 - std::polar(0.5, t));
    }
    double worst = 0.0;
    for (const auto& z : probes) {
      worst = std::max(worst, std::abs(green_eval(discrete, z) - oracle::green_segment(z)));
    }
    note(v, worst <= 0.02, "max |g_discrete - g| = %.4f", worst);
    note(v, discrete.capacity() >= 0.475 && discrete.capacity() <= 0.525, "capacity %.5f",
         discrete.capacity());
    return v;
  });

  criterion(10, "neighbour products along the delta ladder", 60.0, [&] {
    Verdict v;
    const std::vector<double> ladder{0.4, 0.2, 0.1, 0.05};
    for (std::size_t n : {16u, 32u, 64u, 128u}) {
      std::vector<double> roots;
      for (double delta : ladder) roots.push_back(s_product_min(leja.row(n), delta, n).s_root);
      bool rising = true;
      for (std::size_t i = 1; i < roots.size(); ++i) rising = rising && roots[i] >= roots[i - 1];
      note(v, roots[2] >= roots[0] - 0.05 && rising, "n=%zu %.3f %.3f %.3f %.3f", n, roots[0],
           roots[1], roots[2], roots[3]);
    }
    return v;
  });

  std::printf("%s: %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
