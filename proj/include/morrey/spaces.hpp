#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morrey/polar.hpp"
#include "morrey/quadrature.hpp"
#include "morrey/series.hpp"

namespace morrey {

// Non-negative measure on the disc given by a density against normalized
// area. When the density factors as |S(z)|^2 * radial(|z|) the series form
// unlocks the FFT sampling paths.
struct DensityMeasure {
  std::function<double(cd)> pointwise;
  std::optional<PowerSeries> modulus_series;
  std::function<double(double)> radial;  // radial factor, or the whole density

  static DensityMeasure area();
  static DensityMeasure radial_only(std::function<double(double)> w);
  static DensityMeasure from_function(std::function<double(cd)> f);
  // d mu_f = |f'(z)|^2 (1 - |z|^2) dA(z)
  static DensityMeasure mu_f(const PowerSeries& f);
};

struct SpaceSpec {
  enum class Kind { hardy, morrey, bmoa };
  Kind kind = Kind::hardy;
  double param = 2.0;  // p for hardy (p >= 2, inf allowed), lambda for morrey

  static SpaceSpec hardy(double p);
  static SpaceSpec morrey(double lambda);
  static SpaceSpec bmoa();
  static SpaceSpec parse(const std::string& text);  // "hardy:4", "morrey:0.5", "bmoa"
  std::string describe() const;
};

enum class NormForm { box, mobius, log_form, boundary, garsia, circle_sup };
std::string form_name(NormForm f);
NormForm parse_form(const std::string& text);

struct NormReport {
  double value = 0.0;
  double seminorm_sq = 0.0;
  NormForm form = NormForm::box;
  std::string argmax;
  std::string space;
  GridSettings grid;
  std::optional<double> refinement_delta;
  std::optional<double> cross_check;  // Parseval value for p = 2
  bool truncated = false;

  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv() const;
};

// ---- one-level scalar functionals (used by the verify sweeps) ----

// Circle mean of |f|^p at radius r, to the power 1/p (max for p = inf).
double hardy_circle_value(const PowerSeries& f, double p, double r, int angular);
double hardy_value(const PowerSeries& f, double p, const GridSettings& gs,
                   std::string* argmax = nullptr);
double hinf_value(const PowerSeries& f, const GridSettings& gs);
double parseval_norm(const PowerSeries& f);

// sup over arcs of mass / h^lambda from a precomputed mass grid;
// lambda = 1 is the Garsia/BMOA numerator, lambda = 0 the H^2-type one.
double box_sup_sq(const ArcMasses& masses, double lambda, std::string* argmax = nullptr);

double morrey_box_seminorm_sq(const PowerSeries& f, double lambda,
                              const GridSettings& gs, std::string* argmax = nullptr);
// |f(0)| + sqrt(box sup); accepts lambda in [0, 1] (0 and 1 arise as
// codomain parameters of the Hardy -> Morrey pairs).
double morrey_box_norm_value(const PowerSeries& f, double lambda,
                             const GridSettings& gs);

// Boundary circle samples of |f|^2 plus the tools built on them.
struct BoundaryCache {
  const PowerSeries* f = nullptr;
  int m = 0;
  std::vector<double> abs2;

  static BoundaryCache make(const PowerSeries& f, const GridSettings& gs);
  // ||f o sigma_a - f(a)||_{H^2}^2 via the harmonic-measure change of
  // variables: circle mean of |f|^2 against the Poisson kernel at a,
  // minus |f(a)|^2.
  double mobius_diff_sq(cd a) const;
};

// Literal route for the same quantity: compose, sample the pulled-back
// circle grid, average. Kept as the independent cross-check of the Poisson
// route.
double mobius_diff_sq_composed(const PowerSeries& f, cd a, int angular);

double bmoa_mobius_seminorm(const PowerSeries& f, const GridSettings& gs,
                            std::string* argmax = nullptr);
double bmoa_garsia_seminorm_sq(const PowerSeries& f, const GridSettings& gs,
                               std::string* argmax = nullptr);

// Integrals entering Lemma-1-type functionals, all lambda-independent:
// computed once per function and reused across lambda and forms.
struct MorreyProfile {
  ParamGrid grid;                 // a-grid for the mobius/log forms
  std::vector<double> mob;        // int |f'|^2 (1-|sigma_a|^2) dA per a
  std::vector<double> logi;       // int |f'|^2 log(1/|sigma_a|) dA per a
  ArcMasses masses;               // int_{S(I)} |f'|^2 (1-|z|^2) dA per arc
  std::vector<Arc> arcs;          // arc order matching `bnd`
  std::vector<double> bnd;        // (1/2pi) int_I |f - f_I|^2 per arc
};
MorreyProfile morrey_profile(const PowerSeries& f, const GridSettings& gs,
                             bool with_mobius_log = true, bool with_boundary = true);
double seminorm_sq_from_profile(const MorreyProfile& prof, double lambda,
                                NormForm form, std::string* argmax = nullptr);

double carleson_value(const DensityMeasure& mu, double p, const GridSettings& gs,
                      std::string* argmax = nullptr);

// ---- reported norms (value at the base grid plus a refinement delta) ----

NormReport hardy_norm(const PowerSeries& f, double p, const GridSettings& gs,
                      bool with_delta = true);
NormReport bmoa_norm(const PowerSeries& f, NormForm form, const GridSettings& gs,
                     bool with_delta = true);
// lambda in (0, 1]; lambda = 1 is BMOA (box form = Garsia numerator).
NormReport morrey_norm(const PowerSeries& f, double lambda, NormForm form,
                       const GridSettings& gs, bool with_delta = true);
NormReport carleson_constant(const DensityMeasure& mu, double p,
                             const GridSettings& gs, bool with_delta = true);
NormReport space_norm(const PowerSeries& f, const SpaceSpec& spec,
                      const GridSettings& gs, bool with_delta = true);
double space_norm_value(const PowerSeries& f, const SpaceSpec& spec,
                        const GridSettings& gs);

struct ProfilePoint {
  double delta;  // shell width 2^-j
  double value;  // max of ||g o sigma_a - g(a)||_{H^2} over the shell
};
// Pre-limit stand-in for dist(g, VMOA): the profile of shell maxima; the
// deepest admissible level is the reported distance estimate. Levels past
// the grid depth are dropped with a note to stderr.
std::vector<ProfilePoint> vmoa_distance_profile(const PowerSeries& g, int levels,
                                                const GridSettings& gs);

// sup over the a-grid of |f(z)| (1-|z|^2)^((1-lambda)/2) / ||f||,
// denominator the box-form norm.
double growth_ratio(const PowerSeries& f, double lambda, const GridSettings& gs,
                    std::string* argmax = nullptr);

// lhs = ||f||_{H^2}^2 by Parseval, rhs = |f(0)|^2 + 2 int |f'|^2 log(1/|z|) dA.
std::pair<double, double> littlewood_paley_h2(const PowerSeries& f,
                                              const GridSettings& gs);

}  // namespace morrey
