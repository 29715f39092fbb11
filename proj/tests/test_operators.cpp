#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "morrey/operators.hpp"
#include "test_grids.hpp"

using namespace morrey;

namespace {

PowerSeries random_poly(std::uint64_t seed, std::size_t deg) {
  std::uint64_t s = seed;
  auto next = [&s]() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
  };
  std::vector<cd> c(deg + 1);
  for (auto& x : c) x = cd{next(), next()};
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("apply: hand-integrated cases") {
  // T_g with constant symbol kills everything
  const PowerSeries tg0 = apply({OpKind::Tg, constant(cd{7, 0})}, random_poly(1, 12));
  for (const auto& c : tg0.coeffs) CHECK(std::abs(c) == 0.0);

  // T_z 1 = z
  const PowerSeries tz = apply({OpKind::Tg, monomial(1)}, constant(cd{1, 0}));
  REQUIRE(tz.degree() >= 1);
  CHECK(std::abs(tz.coeffs[1] - cd{1, 0}) < 1e-15);

  // f = 1+z, g = z^2: T_g f = int (1+w) 2w dw = z^2 + (2/3) z^3
  const PowerSeries t2 =
      apply({OpKind::Tg, monomial(2)}, PowerSeries({cd{1, 0}, cd{1, 0}}));
  CHECK(std::abs(t2.coeffs[2] - cd{1, 0}) < 1e-15);
  CHECK(std::abs(t2.coeffs[3] - cd{2.0 / 3.0, 0}) < 1e-15);

  // I_c f = c (f - f(0))
  const PowerSeries f = random_poly(2, 9);
  const PowerSeries ic = apply({OpKind::Ig, constant(cd{2, 0})}, f);
  CHECK(std::abs(ic.coeffs[0]) == 0.0);
  for (std::size_t n = 1; n <= f.degree(); ++n)
    CHECK(std::abs(ic.coeffs[n] - 2.0 * f.coeffs[n]) < 1e-14);

  // M_g 1 = g
  const PowerSeries g = geometric(cd{0.5, 0}, 20);
  const PowerSeries mg = apply({OpKind::Mg, g}, constant(cd{1, 0}));
  for (std::size_t n = 0; n <= g.degree(); ++n)
    CHECK(mg.coeffs[n] == g.coeffs[n]);

  // zero constant coefficient for Tg and Ig
  CHECK(std::abs(apply({OpKind::Tg, random_poly(3, 8)}, f).coeffs[0]) == 0.0);
  CHECK(std::abs(apply({OpKind::Ig, random_poly(4, 8)}, f).coeffs[0]) == 0.0);
}

TEST_CASE("operator is linear in the symbol") {
  const PowerSeries f = random_poly(5, 16);
  const PowerSeries g = random_poly(6, 20);
  const PowerSeries h = random_poly(7, 14);
  const cd alpha{1.3, -0.4}, beta{-0.2, 2.1};
  const PowerSeries lhs = apply({OpKind::Tg, add(scale(g, alpha), scale(h, beta))}, f);
  const PowerSeries rhs = add(scale(apply({OpKind::Tg, g}, f), alpha),
                              scale(apply({OpKind::Tg, h}, f), beta));
  REQUIRE(lhs.degree() == rhs.degree());
  for (std::size_t n = 0; n <= lhs.degree(); ++n)
    CHECK(std::abs(lhs.coeffs[n] - rhs.coeffs[n]) < 1e-12);
}

TEST_CASE("decomposition identity M_g f = f(0)g(0) + I_g f + T_g f") {
  CHECK(decomposition_check(monomial(1), monomial(1)) == 0.0);

  for (int i = 0; i < 4; ++i) {
    const PowerSeries g = random_poly(100 + i, 64);
    const PowerSeries f = random_poly(200 + i, 64);
    CHECK(decomposition_check(g, f) < 1e-12);
  }

  const GridSettings gs = small_grid();
  const PowerSeries Fb =
      test_function(TestFamily(FamilyKind::Fb, cd{0.5, 0}, 0.5), gs.trunc);
  const PowerSeries fb =
      test_function(TestFamily(FamilyKind::fb, cd{0.3, 0}, 0.5), gs.trunc);
  CHECK(decomposition_check(Fb, fb) < 1e-10);
}

TEST_CASE("space pairs") {
  const SpacePair mp = SpacePair::morrey_pair(0.5);
  CHECK(mp.cod_lambda == 0.5);
  CHECK_FALSE(mp.hardy_domain());

  const SpacePair hp = SpacePair::hardy_pair(4.0);
  CHECK(hp.cod_lambda == doctest::Approx(0.5));
  CHECK(hp.hardy_domain());

  // p = 2 lands on the lambda = 0 (H^2-equivalent) functional,
  // p = inf on lambda = 1
  CHECK(SpacePair::hardy_pair(2.0).cod_lambda == 0.0);
  CHECK(SpacePair::hardy_pair(std::numeric_limits<double>::infinity()).cod_lambda ==
        1.0);

  CHECK(SpacePair::parse("morrey:0.25").domain.param == 0.25);
  CHECK(SpacePair::parse("hardy:3").hardy_domain());
  CHECK_THROWS_AS(SpacePair::parse("morrey:1"), std::invalid_argument);
  CHECK_THROWS_AS(SpacePair::parse("hardy:1.5"), std::invalid_argument);
}

TEST_CASE("theorem comparators") {
  const GridSettings gs = small_grid();

  CHECK(std::abs(theorem_comparator({OpKind::Ig, constant(cd{3, 4})},
                                    SpacePair::morrey_pair(0.5), gs) -
                 5.0) < 1e-12);
  CHECK(theorem_comparator({OpKind::Mg, constant(cd{0, 0})},
                           SpacePair::morrey_pair(0.5), gs) == 0.0);
  // T_g comparator is the BMOA seminorm: exactly 1 for g = z, 0 for constants
  CHECK(std::abs(theorem_comparator({OpKind::Tg, monomial(1)},
                                    SpacePair::morrey_pair(0.5), gs) -
                 1.0) < 1e-3);
  CHECK(theorem_comparator({OpKind::Tg, constant(cd{5, 0})},
                           SpacePair::morrey_pair(0.5), gs) < 1e-6);
}

TEST_CASE("opnorm lower estimates") {
  const GridSettings gs = small_grid();
  const ParamGrid bgrid = ParamGrid::family(gs);
  const SpacePair pair = SpacePair::morrey_pair(0.5);

  // I with zero symbol: exactly zero estimate
  const OpNormEstimate zero =
      opnorm_lower({OpKind::Ig, constant(cd{0, 0})}, pair, Family::fb, bgrid, gs);
  CHECK(zero.lower == 0.0);
  CHECK(zero.comparator == 0.0);

  // I with constant symbol c: the ratio ||I_c f_b|| / ||f_b|| is exactly |c|
  // at every unclamped parameter.
  const OpNormEstimate c2 =
      opnorm_lower({OpKind::Ig, constant(cd{2, 0})}, pair, Family::fb, bgrid, gs);
  CHECK(c2.clamped == 0);
  CHECK(std::abs(c2.lower - 2.0) < 1e-9);
  CHECK(std::abs(c2.comparator - 2.0) < 1e-12);
  CHECK(std::abs(c2.ratio - 1.0) < 1e-9);

  // T_z against comparator ||z||_* = 1: strictly positive estimate
  const OpNormEstimate tz =
      opnorm_lower({OpKind::Tg, monomial(1)}, pair, Family::Fb, bgrid, gs);
  CHECK(tz.lower > 0.05);
  CHECK(std::abs(tz.comparator - 1.0) < 1e-3);

  // inadmissible family/pair combinations name the admissible set
  CHECK_THROWS_WITH_AS(
      opnorm_lower({OpKind::Ig, monomial(1)}, pair, Family::hb, bgrid, gs),
      doctest::Contains("fb, Fb"), std::invalid_argument);
  CHECK_THROWS_AS(opnorm_lower({OpKind::Ig, monomial(1)}, SpacePair::hardy_pair(4.0),
                               Family::fb, bgrid, gs),
                  std::invalid_argument);

  // corpus family needs entries
  CHECK_THROWS_AS(
      opnorm_lower({OpKind::Ig, monomial(1)}, pair, Family::corpus, bgrid, gs),
      std::invalid_argument);
  const std::vector<std::pair<std::string, PowerSeries>> entries = {
      {"z", monomial(1)}, {"z2", monomial(2)}};
  const OpNormEstimate corp = opnorm_lower({OpKind::Ig, constant(cd{1.5, 0})}, pair,
                                           Family::corpus, bgrid, gs, &entries);
  CHECK(std::abs(corp.lower - 1.5) < 1e-9);

  // shared denominators reproduce the in-place computation bitwise
  const auto params = family_parameters(pair, Family::fb, bgrid);
  const auto doms = family_domain_norms(pair, Family::fb, params, gs);
  const OpNormEstimate cached = opnorm_lower({OpKind::Tg, monomial(1)}, pair,
                                             Family::Fb, bgrid, gs, nullptr, 0);
  const auto fparams = family_parameters(pair, Family::Fb, bgrid);
  const auto fdoms = family_domain_norms(pair, Family::Fb, fparams, gs);
  const OpNormEstimate cached2 = opnorm_lower({OpKind::Tg, monomial(1)}, pair,
                                              Family::Fb, bgrid, gs, nullptr, 0,
                                              &fdoms);
  CHECK(cached.lower == cached2.lower);
  CHECK(cached.argmax == cached2.argmax);
}

TEST_CASE("kernel family skips |b| < 1/2 and deep sweeps restrict shells") {
  const GridSettings gs = small_grid();
  const ParamGrid bgrid = ParamGrid::family(gs);
  const SpacePair pair = SpacePair::hardy_pair(4.0);

  const auto all = family_parameters(pair, Family::kernel, bgrid);
  for (cd b : all) CHECK(std::abs(b) >= 0.5);

  const auto deep = family_parameters(pair, Family::kernel, bgrid, gs.depth);
  CHECK(deep.size() < all.size());
  for (cd b : deep) CHECK(std::abs(b) == doctest::Approx(0.75));
}

TEST_CASE("essential proxy columns") {
  const GridSettings gs = small_grid();
  const SpacePair pair = SpacePair::morrey_pair(0.5);

  // constant symbol: every column is zero
  const EssentialProxy zero =
      essential_proxy(constant(cd{4, 0}), pair, {0.5, 0.75}, gs);
  for (const auto& row : zero.rows) {
    CHECK(row.bmoa_diff < 1e-6);
    CHECK(row.tg_lower < 1e-6);
  }
  for (const auto& pt : zero.profile) CHECK(pt.value < 1e-6);

  // polynomial symbol: ||g - g_r||_* decays monotonically in r
  const std::vector<double> rlevels = {0.5, 0.75, 0.875, 0.9375};
  const EssentialProxy poly = essential_proxy(monomial(5), pair, rlevels, gs);
  REQUIRE(poly.rows.size() == rlevels.size());
  for (std::size_t i = 1; i < poly.rows.size(); ++i)
    CHECK(poly.rows[i].bmoa_diff <= poly.rows[i - 1].bmoa_diff + 1e-12);
  CHECK(poly.profile.size() == static_cast<std::size_t>(gs.depth) + 1);

  CHECK_THROWS_AS(essential_proxy(monomial(2), pair, {1.5}, gs),
                  std::invalid_argument);
}

TEST_CASE("estimate serialization") {
  const GridSettings gs = small_grid();
  const OpNormEstimate est =
      opnorm_lower({OpKind::Ig, constant(cd{1, 0})}, SpacePair::morrey_pair(0.5),
                   Family::fb, ParamGrid::family(gs), gs);
  const std::string js = est.to_json();
  CHECK(js.find("\"lower\"") != std::string::npos);
  CHECK(js.find("\"comparator\"") != std::string::npos);
  CHECK(js.find("\"family\":\"fb\"") != std::string::npos);
}
