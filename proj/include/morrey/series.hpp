#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morrey/numeric.hpp"

namespace morrey {

// Truncated Taylor expansion c_0..c_N of an analytic function on the unit
// disc. Immutable in spirit: every operation returns a fresh series.
struct PowerSeries {
  std::vector<cd> coeffs;
  // Set when a product ran into the degree cap and coefficients were
  // discarded. Propagates through further arithmetic.
  bool truncated = false;

  PowerSeries() : coeffs{cd{0.0, 0.0}} {}
  explicit PowerSeries(std::vector<cd> c, bool trunc = false);

  std::size_t degree() const { return coeffs.size() - 1; }
  cd at(std::size_t n) const {
    return n < coeffs.size() ? coeffs[n] : cd{0.0, 0.0};
  }
};

constexpr std::size_t kDefaultTrunc = 256;
constexpr std::size_t kProductCap = 512;

// Horner recurrence with two-sum compensated additions; |z| <= 1 required.
cd evaluate(const PowerSeries& f, cd z);

PowerSeries derivative(const PowerSeries& f);
PowerSeries antiderivative(const PowerSeries& f);

// Coefficients sum_k f_k g_{n-k}; degrees past `cap` are dropped and the
// result is flagged truncated.
PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g,
                           std::size_t cap = kProductCap);

// g_r(z) = g(rz), 0 <= r <= 1.
PowerSeries dilate(const PowerSeries& g, double r);

PowerSeries scale(const PowerSeries& f, cd alpha);
PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries subtract(const PowerSeries& f, const PowerSeries& g);

// Taylor series of (1 - conj(b) z)^(-s) via the coefficient recurrence
// c_n = c_{n-1} (s+n-1)/n conj(b); single-valued by construction.
PowerSeries binomial_series(double s, cd b, std::size_t n);

PowerSeries monomial(std::size_t n, cd coeff = cd{1.0, 0.0});
PowerSeries constant(cd c);
// Coefficients conj(b)^n, i.e. 1/(1 - conj(b) z).
PowerSeries geometric(cd b, std::size_t n);
// Coefficient c_k placed at z^(2^k), k = 0..K.
PowerSeries lacunary(const std::vector<cd>& c, std::size_t cap = kProductCap);

// The disc automorphism sigma_a(z) = (a - z)/(1 - conj(a) z).
struct MobiusMap {
  cd a;
  explicit MobiusMap(cd a_);
  cd operator()(cd z) const;
};

cd mobius_evaluate(const MobiusMap& m, cd z);

// Extremal families used in the operator lower bounds.
//   fb(lambda):     (1-|b|^2)^((lambda-1)/2) (sigma_b(z) - b)
//   Fb(lambda):     (1-|b|^2) (1 - conj(b) z)^((lambda-3)/2)
//   hb(p):          (1-|b|^2) / (1 - conj(b) z)^(1 + 1/p)
//   kernel(p):      (1-|b|^2)^(1-1/p) / (conj(b) (1 - conj(b) z)),  |b| >= 1/2
enum class FamilyKind { fb, Fb, hb, kernel };

struct TestFamily {
  FamilyKind kind;
  cd b;
  double param;  // lambda in (0,1) for fb/Fb, p in [2,inf] for hb/kernel

  TestFamily(FamilyKind k, cd b_, double param_);
};

// Refusal threshold for the discarded coefficient tail of a test family.
constexpr double kFamilyTailTol = 1e-3;

// Bound on sum_{n>N} |c_n| obtained from the coefficient recurrence.
double family_tail_bound(const TestFamily& fam, std::size_t n);

// Throws std::invalid_argument with a required-N hint when |b| is too close
// to 1 for the requested truncation.
PowerSeries test_function(const TestFamily& fam, std::size_t n,
                          double tail_tol = kFamilyTailTol);

std::string format_complex(cd z);
cd parse_complex(const std::string& text);

// Named builders: monomial:n, constant:c, geometric:b, lacunary:K:c0,...,
// fb:b:lambda, Fb:b:lambda, hb:b:p, kernel:b:p.
PowerSeries build_series(const std::string& name, std::size_t n = kDefaultTrunc);

std::string series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const std::string& text);
PowerSeries load_series(const std::string& path_or_builder,
                        std::size_t n = kDefaultTrunc);
void save_series(const PowerSeries& f, const std::string& path);

}  // namespace morrey
