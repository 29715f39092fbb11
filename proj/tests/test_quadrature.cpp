#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "morrey/polar.hpp"
#include "morrey/quadrature.hpp"
#include "morrey/series.hpp"
#include "test_grids.hpp"

using namespace morrey;

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  const auto& gl = gauss_legendre(8);
  REQUIRE(gl.nodes.size() == 8);
  // int_{-1}^{1} x^k dx for k = 0..15
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
      s += gl.weights[i] * std::pow(gl.nodes[i], k);
    const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(std::abs(s - exact) < 1e-14);
  }
}

TEST_CASE("disc rule: mass, moments, log moments") {
  const GridSettings gs = small_grid();
  const DiscRule rule = DiscRule::make(gs);

  CHECK(std::abs(integrate_disc(rule, [](cd) { return 1.0; }) - 1.0) < 1e-12);

  CHECK(std::abs(integrate_disc(rule, [](cd z) { return std::norm(z); }) - 0.5) <
        1e-12);

  // 2 n^2 |z|^{2n-2} log(1/|z|) integrates to 1 (oracle: 1/(4n^2) per power)
  const int n = 4;
  const double v = integrate_disc(rule, [&](cd z) {
    const double r = std::abs(z);
    return 2.0 * n * n * std::pow(r, 2 * n - 2) * std::log(1.0 / r);
  });
  CHECK(std::abs(v - 1.0) < 1e-10);

  CHECK_THROWS_AS(integrate_disc(rule,
                                 [](cd z) {
                                   return std::abs(z) > 0.9
                                              ? std::numeric_limits<double>::quiet_NaN()
                                              : 1.0;
                                 }),
                  std::runtime_error);
}

TEST_CASE("box rule: sector areas and whole-disc consistency") {
  const GridSettings gs = small_grid();
  for (double h : {1.0, 0.5, 0.125}) {
    const BoxRule rule = BoxRule::make(gs, Arc(0.7, h));
    const double area = integrate_box(rule, [](cd) { return 1.0; });
    CHECK(std::abs(area - h * h * (2.0 - h)) < 1e-12);
  }
  CHECK(std::abs(integrate_box(BoxRule::make(gs, Arc(0.0, 1.0)),
                               [](cd) { return 0.0; })) == 0.0);

  // h = 1 box equals the whole disc for a mu_f-type density
  const PowerSeries f = geometric(cd{0.6, 0.0}, gs.trunc);
  const PowerSeries fp = derivative(f);
  auto density = [&](cd z) {
    return std::norm(evaluate(fp, z)) * (1.0 - std::norm(z));
  };
  const double via_box = integrate_box(BoxRule::make(gs, Arc(0.0, 1.0)), density);
  const double via_disc = integrate_disc(DiscRule::make(gs), density);
  CHECK(std::abs(via_box - via_disc) < 1e-10 * std::max(1.0, via_disc));
}

TEST_CASE("circle rule: trapezoid means") {
  CHECK(std::abs(integrate_circle([](double) { return 1.0; }, 1.0, 64) - 1.0) <
        1e-15);

  const double r = 0.8;
  const int n = 3;
  const double mean = integrate_circle(
      [&](double th) { return std::pow(r, 2 * n) * 1.0 + 0.0 * th; }, r, 64);
  CHECK(std::abs(mean - std::pow(r, 2 * n)) < 1e-14);

  // |1 + e^{i theta}|^2 averages to 2 (Parseval for 1 + z)
  const double v = integrate_circle(
      [](double th) { return std::norm(1.0 + std::polar(1.0, th)); }, 1.0, 64);
  CHECK(std::abs(v - 2.0) < 1e-13);

  // exact for |p|^2 with deg p < M/2
  const PowerSeries p = binomial_series(1.0, cd{0.55, 0.2}, 20);
  double parseval = 0.0;
  for (const auto& c : p.coeffs) parseval += std::norm(c);
  const double quad = integrate_circle(
      [&](double th) { return std::norm(evaluate(p, std::polar(1.0, th))); }, 1.0,
      64);
  CHECK(std::abs(quad - parseval) < 1e-12);

  CHECK_THROWS_AS(integrate_circle([](double) { return 1.0; }, 0.0, 64),
                  std::invalid_argument);
}

TEST_CASE("sup over grid: determinism and closed-form argmax") {
  const std::vector<double> grid{0.0, 0.5, 0.75, 0.875};

  const auto flat = sup_over_grid(grid, [](double) { return 3.0; });
  CHECK(flat.value == 3.0);
  CHECK(flat.index == 0);  // first occurrence wins ties

  const auto decay = sup_over_grid(grid, [](double rho) { return 1.0 - rho; });
  CHECK(decay.argmax == 0.0);

  // Morrey mobius functional of f = z at lambda = 1/2 via the closed-form
  // series (1-x)^{3-lambda} sum ((n+1)/(n+2)) x^n, maximized at x = 0.
  auto functional = [](double x) {
    double s = 0.0, xn = 1.0;
    for (int n = 0; n < 400; ++n) {
      s += (n + 1.0) / (n + 2.0) * xn;
      xn *= x;
    }
    return std::pow(1.0 - x, 2.5) * s;
  };
  std::vector<double> xs;
  for (int k = 0; k <= 40; ++k) xs.push_back(k / 41.0);
  const auto best = sup_over_grid(xs, functional);
  CHECK(best.argmax == 0.0);
  CHECK(std::abs(best.value - 0.5) < 1e-12);

  CHECK_THROWS_AS(sup_over_grid(std::vector<double>{}, [](double) { return 0.0; }),
                  std::invalid_argument);
}

TEST_CASE("refinement convergence on corpus-type densities") {
  const GridSettings gs = small_grid();
  const GridSettings gs2 = refined(gs);
  const PowerSeries f = geometric(cd{0.9, 0.0}, gs.trunc);
  const PowerSeries fp = derivative(f);
  auto density = [&](cd z) {
    return std::norm(evaluate(fp, z)) * (1.0 - std::norm(z));
  };
  const double v1 = integrate_disc(DiscRule::make(gs), density);
  const double v2 = integrate_disc(DiscRule::make(gs2), density);
  CHECK(std::abs(v1 - v2) / std::abs(v2) < 1e-6);
}

TEST_CASE("grid coupling validation") {
  GridSettings gs = small_grid();
  gs.depth = 3;  // 64 * 2^-3 = 8 < 16
  CHECK_THROWS_AS(gs.validate(), std::invalid_argument);
  gs = small_grid();
  gs.trunc = 8;
  CHECK_THROWS_AS(gs.validate(), std::invalid_argument);
  gs = small_grid();
  gs.angular = 100;  // < 2N+4
  CHECK_THROWS_AS(gs.validate(), std::invalid_argument);
  CHECK(GridSettings::max_depth(256) == 4);
}

TEST_CASE("param grids and arc grids") {
  GridSettings gs;  // defaults: N=256, J=4
  const ParamGrid grid = ParamGrid::standard(gs);
  REQUIRE(grid.shells.size() == 5);
  CHECK(grid.shells[0].rho == 0.0);
  CHECK(grid.shells[4].rho == doctest::Approx(0.9375));
  CHECK(grid.shells[0].count == 16);
  CHECK(grid.shells[4].count == 101);  // ceil(2 pi / 2^-4)

  const auto arcs = arc_grid(gs);
  // levels j = 0..4 with 2^{j+1} centers each
  std::size_t expect = 0;
  for (int j = 0; j <= 4; ++j) expect += std::size_t{1} << (j + 1);
  CHECK(arcs.size() == expect);
  CHECK(arcs[0].h == 1.0);
}

TEST_CASE("polar sampling matches direct evaluation") {
  const GridSettings gs = small_grid();
  const PowerSeries f = binomial_series(1.3, cd{0.7, 0.2}, gs.trunc);
  const auto vals = circle_values(f, 0.9, gs.angular);
  for (int k = 0; k < gs.angular; k += 37) {
    const cd z = 0.9 * std::polar(1.0, 2.0 * kPi * k / gs.angular);
    CHECK(std::abs(vals[k] - evaluate(f, z)) < 1e-12);
  }

  // field integral equals integrate_disc of the same density
  const PowerSeries fp = derivative(f);
  const DiscField field =
      sample_series_abs2(fp, [](double r) { return 1.0 - r * r; }, gs);
  const double direct = integrate_disc(DiscRule::make(gs), [&](cd z) {
    return std::norm(evaluate(fp, z)) * (1.0 - std::norm(z));
  });
  CHECK(std::abs(field.integral() - direct) < 1e-11 * std::max(1.0, direct));
}

TEST_CASE("spectral box masses agree with per-arc quadrature") {
  const GridSettings gs = small_grid();
  const PowerSeries f = geometric(cd{0.8, 0.0}, gs.trunc);
  const PowerSeries fp = derivative(f);
  auto w = [](double r) { return 1.0 - r * r; };
  const ArcMasses masses = box_masses_series(fp, w, gs);
  REQUIRE(masses.levels.size() == static_cast<std::size_t>(gs.depth) + 1);

  auto density = [&](cd z) {
    return std::norm(evaluate(fp, z)) * (1.0 - std::norm(z));
  };
  for (std::size_t j : {std::size_t{0}, std::size_t{2}}) {
    const auto& level = masses.levels[j];
    for (std::size_t k = 0; k < level.masses.size(); k += 3) {
      const Arc arc(kPi * level.h * k, level.h);
      const double direct = integrate_box(BoxRule::make(gs, arc), density);
      CHECK(std::abs(level.masses[k] - direct) <
            1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}
