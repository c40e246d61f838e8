#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lejalab/nodes.hpp"
#include "lejalab/potential.hpp"
#include "oracles.hpp"

using namespace lejalab;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

const Scheme& leja_segment() {
  static const Scheme scheme = Scheme::generate(SchemeKind::leja, SetSpec::segment(), {256});
  return scheme;
}

// Segment mesh restricted to |x| <= 0.5, natural parameters (x + 1) / 2.
BoundaryMesh central_mesh(std::size_t m) {
  const auto full = build_mesh(SetSpec::segment(), m, Clustering::uniform);
  BoundaryMesh out;
  out.source = full.source;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (std::abs(full.points[i].real()) <= 0.5) {
      out.points.push_back(full.points[i]);
      out.params.push_back(full.params[i]);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("potential") {

TEST_CASE("arcsine distribution") {
  CHECK(arcsine_cdf(0.0) == 0.5);
  CHECK(arcsine_cdf(1.0) == 1.0);
  CHECK(arcsine_cdf(-1.0) == 0.0);
  CHECK(arcsine_cdf(0.5) == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(arcsine_cdf(1.01), InvalidInput);
}

TEST_CASE("equilibrium mass of subarcs") {
  const auto model = EquilibriumModel::arcsine_segment(SetSpec::segment());
  CHECK(mu_subarc(model, -1.0, 1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(mu_subarc(model, 0.0, 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(mu_subarc(model, 0.5, 1.0) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(mu_subarc(model, 1.0, 0.5) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(mu_subarc(model, Complex(0, 0.2), 1.0), InvalidInput);
  const auto circle = EquilibriumModel::uniform_circle(SetSpec::circle(2.0));
  CHECK(mu_subarc(circle, Complex(2, 0), Complex(0, 2)) == Approx(0.25).epsilon(1e-14));
}

TEST_CASE("model CDFs are monotone from 0 to 1") {
  const auto arc = SetSpec::circular_arc(1.0, 4.0);
  const EquilibriumModel models[] = {EquilibriumModel::arcsine_segment(SetSpec::segment()),
                                     EquilibriumModel::uniform_circle(SetSpec::circle(1.0)),
                                     EquilibriumModel::for_set(arc, 256)};
  for (const auto& model : models) {
    CHECK(model.cdf_left(0.0) == Approx(0.0).epsilon(1e-15));
    CHECK(model.cdf(1.0) == Approx(1.0).epsilon(1e-15));
    double previous = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double v = model.cdf(i / 1000.0);
      CHECK(v >= previous);
      CHECK(v <= 1.0);
      previous = v;
    }
  }
  CHECK(models[2].method() == EquilibriumMethod::empirical);
  CHECK(models[2].jumps().size() == 256);
}

TEST_CASE("empirical model of the segment approaches the arcsine law") {
  const auto seg = SetSpec::segment();
  const auto empirical = EquilibriumModel::empirical(seg, leja_segment().row(256));
  const auto exact = EquilibriumModel::arcsine_segment(seg);
  for (int i = 0; i <= 100; ++i) {
    CHECK(std::abs(empirical.cdf(i / 100.0) - exact.cdf(i / 100.0)) <= 0.01);
  }
  CHECK(empirical.cdf_left(empirical.jumps().front()) == 0.0);
}

TEST_CASE("Kolmogorov distance of simple measures") {
  const auto seg = SetSpec::segment();
  const auto model = EquilibriumModel::arcsine_segment(seg);
  const std::vector<Complex> single{0.0};
  CHECK(kolmogorov_distance(CountingMeasure::from_row(seg, single), model) == Approx(0.5));
  for (std::size_t n : {1u, 4u, 16u, 64u}) {
    const auto cheb = chebyshev_nodes(seg, n);
    CHECK(std::abs(kolmogorov_distance(CountingMeasure::from_row(seg, cheb), model) - 0.5 / n) <=
          1e-12);
  }
  CHECK_THROWS_AS(kolmogorov_distance(CountingMeasure{}, model), InvalidInput);
}

TEST_CASE("quantile rows sit at half a jump from any model") {
  for (std::size_t n : {3u, 10u, 40u}) {
    std::vector<Complex> arcsine_row, circle_row;
    for (std::size_t k = 1; k <= n; ++k) {
      const double u = (static_cast<double>(k) - 0.5) / static_cast<double>(n);
      arcsine_row.emplace_back(oracle::arcsine_quantile(u), 0.0);
      circle_row.push_back(std::polar(1.0, 2 * kPi * u));
    }
    const auto seg = SetSpec::segment();
    const auto circ = SetSpec::circle(1.0);
    CHECK(kolmogorov_distance(CountingMeasure::from_row(seg, arcsine_row),
                              EquilibriumModel::arcsine_segment(seg)) ==
          Approx(0.5 / n).epsilon(1e-12));
    CHECK(kolmogorov_distance(CountingMeasure::from_row(circ, circle_row),
                              EquilibriumModel::uniform_circle(circ)) ==
          Approx(0.5 / n).epsilon(1e-12));
  }
}

TEST_CASE("rotated cuts on closed curves") {
  const auto circ = SetSpec::circle(1.0);
  const auto model = EquilibriumModel::uniform_circle(circ);
  std::vector<Complex> row;
  for (int k = 0; k < 8; ++k) row.push_back(std::polar(1.0, 2 * kPi * k / 8));
  const auto nu = CountingMeasure::from_row(circ, row);
  const double fixed = kolmogorov_distance(nu, model);
  const double rotated = kolmogorov_distance_rotated(nu, model);
  CHECK(fixed == Approx(0.125).epsilon(1e-12));
  CHECK(rotated >= fixed - 1e-15);
  CHECK(rotated <= 0.125 + 1e-12);
  // Four atoms crowded on one side: every cut sees a large deviation.
  const std::vector<Complex> lumped{std::polar(1.0, 0.1), std::polar(1.0, 0.2),
                                    std::polar(1.0, 0.3), std::polar(1.0, 0.4)};
  CHECK(kolmogorov_distance_rotated(CountingMeasure::from_row(circ, lumped), model) > 0.8);
}

TEST_CASE("Kolmogorov distance is similarity invariant") {
  const Similarity map{4.0, 2.2, {-3.0, 1.0}};
  const auto seg = SetSpec::segment();
  const auto moved = seg.with_affine(map);
  const auto row = leja_segment().row(40);
  std::vector<Complex> mapped;
  for (const auto& z : row) mapped.push_back(map.apply(z));
  const double a = kolmogorov_distance(CountingMeasure::from_row(seg, row),
                                       EquilibriumModel::arcsine_segment(seg));
  const double b = kolmogorov_distance(CountingMeasure::from_row(moved, mapped),
                                       EquilibriumModel::arcsine_segment(moved));
  CHECK(std::abs(a - b) <= 1e-12);
}

TEST_CASE("Leja rows approach the equilibrium measure") {
  const auto seg = SetSpec::segment();
  const auto model = EquilibriumModel::arcsine_segment(seg);
  const double d16 = kolmogorov_distance(CountingMeasure::from_row(seg, leja_segment().row(16)), model);
  const double d256 =
      kolmogorov_distance(CountingMeasure::from_row(seg, leja_segment().row(256)), model);
  CHECK(d256 < d16);
}

TEST_CASE("capacity estimates") {
  const auto& scheme = leja_segment();
  CHECK(capacity_estimate(scheme.row(256)) == Approx(0.5).epsilon(0.05));
  const double c64 = capacity_estimate(scheme.row(64));
  const double c128 = capacity_estimate(scheme.row(128));
  const double c256 = capacity_estimate(scheme.row(256));
  CHECK(std::abs(c128 / c64 - 1.0) < 0.05);
  CHECK(std::abs(c256 / c128 - 1.0) < 0.05);

  const auto circle = Scheme::generate(SchemeKind::leja, SetSpec::circle(1.0), {256});
  CHECK(capacity_estimate(circle.row(256)) == Approx(1.0).epsilon(0.05));

  const std::vector<Complex> two{Complex(0.2, 0), Complex(0.9, 0)};
  CHECK(capacity_estimate(two) == Approx(0.7));
  const std::vector<Complex> repeated{0.1, 0.5, 0.1};
  CHECK_THROWS_AS(capacity_estimate(repeated), InvalidInput);
  CHECK_THROWS_AS(capacity_estimate(std::vector<Complex>{0.3}), InvalidInput);
}

TEST_CASE("spacing statistic") {
  const auto seg = SetSpec::segment();
  const auto model = EquilibriumModel::arcsine_segment(seg);
  for (std::size_t n = 2; n <= 64; ++n) {
    CHECK(std::abs(spacing_statistic(chebyshev_nodes(seg, n), model, n) - 1.0) <= 1e-12);
  }
  const std::vector<Complex> ends{-1.0, 1.0};
  CHECK(spacing_statistic(ends, model, 2) == Approx(2.0));

  const auto equi = equispaced_nodes(seg, 32);
  double want = 1e300;
  for (std::size_t k = 0; k + 1 < equi.size(); ++k) {
    const double a = equi[k].real(), b = equi[k + 1].real();
    want = std::min(want, (std::asin(b) - std::asin(a)) / kPi);
  }
  const double got = spacing_statistic(equi, model, 32);
  CHECK(got == Approx(32 * want).epsilon(1e-12));
  CHECK(got == Approx(2.0 / kPi).epsilon(0.05));

  const std::vector<Complex> dup{0.1, 0.5, 0.1};
  CHECK_THROWS_AS(spacing_statistic(dup, model, 3), InvalidInput);
}

TEST_CASE("spacing statistic on the circle includes the wrap gap") {
  const auto circ = SetSpec::circle(1.0);
  const auto model = EquilibriumModel::uniform_circle(circ);
  std::vector<Complex> row;
  for (int k = 0; k < 6; ++k) row.push_back(std::polar(1.0, 0.5 + 2 * kPi * k / 6));
  CHECK(spacing_statistic(row, model, 6) == Approx(1.0).epsilon(1e-12));
  const std::vector<Complex> bunched{std::polar(1.0, 0.1), std::polar(1.0, 3.0), std::polar(1.0, 6.2)};
  CHECK(spacing_statistic(bunched, model, 3) ==
        Approx(3 * (0.1 + 2 * kPi - 6.2) / (2 * kPi)).epsilon(1e-12));
}

TEST_CASE("Hoelder statistic near the endpoints") {
  const auto seg = SetSpec::segment();
  const auto model = EquilibriumModel::arcsine_segment(seg);
  const double h512 = holder_statistic(model, build_mesh(seg, 512, Clustering::endpoint_clustered));
  const double h1024 = holder_statistic(model, build_mesh(seg, 1024, Clustering::endpoint_clustered));
  const double limit = std::sqrt(2.0) / kPi;
  CHECK(h512 == Approx(limit).epsilon(0.01 / limit));
  CHECK(h1024 == Approx(limit).epsilon(0.01 / limit));
  CHECK(std::abs(h1024 / h512 - 1.0) < 0.01);

  const double nearest =
      holder_statistic(model, build_mesh(seg, 1025, Clustering::endpoint_clustered), 1);
  CHECK(std::isfinite(nearest));
  CHECK(nearest <= 0.46);
}

TEST_CASE("Hoelder statistic away from the endpoints") {
  const auto model = EquilibriumModel::arcsine_segment(SetSpec::segment());
  const double central = holder_statistic(model, central_mesh(401), 0);
  CHECK(central <= 0.37);
  CHECK(central > 0.0);
}

TEST_CASE("Hoelder statistic over a node row") {
  const auto seg = SetSpec::segment();
  const auto model = EquilibriumModel::arcsine_segment(seg);
  const auto row = leja_segment().row(64);
  const double h = holder_statistic(model, row);
  CHECK(h > 0.0);
  CHECK(h <= 1.0 / std::sqrt(2.0) + 1e-12);
}

TEST_CASE("method names") {
  CHECK(to_string(EquilibriumMethod::arcsine_segment) == "arcsine_segment");
  CHECK(to_string(EquilibriumMethod::uniform_circle) == "uniform_circle");
  CHECK(to_string(EquilibriumMethod::empirical) == "empirical");
}

}  // TEST_SUITE
