#include "morrey/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace morrey {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string format_radius(double r) {
  std::ostringstream out;
  out.precision(10);
  out << "r=" << r;
  return out.str();
}

std::string format_point(cd a) {
  std::ostringstream out;
  out.precision(10);
  out << "a=" << a.real();
  if (a.imag() != 0.0) out << (a.imag() > 0 ? "+" : "") << a.imag() << "i";
  return out.str();
}

}  // namespace

DensityMeasure DensityMeasure::area() {
  DensityMeasure m;
  m.pointwise = [](cd) { return 1.0; };
  m.radial = [](double) { return 1.0; };
  return m;
}

DensityMeasure DensityMeasure::radial_only(std::function<double(double)> w) {
  DensityMeasure m;
  m.radial = std::move(w);
  m.pointwise = [w = m.radial](cd z) { return w(std::abs(z)); };
  return m;
}

DensityMeasure DensityMeasure::from_function(std::function<double(cd)> f) {
  DensityMeasure m;
  m.pointwise = std::move(f);
  return m;
}

DensityMeasure DensityMeasure::mu_f(const PowerSeries& f) {
  DensityMeasure m;
  m.modulus_series = derivative(f);
  m.radial = [](double r) { return 1.0 - r * r; };
  PowerSeries d = *m.modulus_series;
  m.pointwise = [d](cd z) {
    return std::norm(evaluate(d, z)) * (1.0 - std::norm(z));
  };
  return m;
}

SpaceSpec SpaceSpec::hardy(double p) {
  if (!(p >= 2.0)) fail("hardy space: p must lie in [2, inf]");
  return SpaceSpec{Kind::hardy, p};
}

SpaceSpec SpaceSpec::morrey(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) fail("morrey space: lambda out of range (0, 1]");
  return SpaceSpec{Kind::morrey, lambda};
}

SpaceSpec SpaceSpec::bmoa() { return SpaceSpec{Kind::bmoa, 1.0}; }

SpaceSpec SpaceSpec::parse(const std::string& text) {
  if (text == "bmoa" || text == "BMOA") return bmoa();
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    fail("space spec '" + text + "' must look like hardy:p, morrey:lambda or bmoa");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  double v;
  if (arg == "inf" || arg == "Inf" || arg == "INF")
    v = std::numeric_limits<double>::infinity();
  else {
    try {
      v = std::stod(arg);
    } catch (const std::exception&) {
      fail("space spec '" + text + "': cannot parse parameter '" + arg + "'");
    }
  }
  if (kind == "hardy") return hardy(v);
  if (kind == "morrey") return morrey(v);
  fail("space spec '" + text + "': unknown kind '" + kind + "'");
}

std::string SpaceSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::hardy:
      out << "hardy:";
      if (std::isinf(param)) out << "inf";
      else out << param;
      break;
    case Kind::morrey:
      out << "morrey:" << param;
      break;
    case Kind::bmoa:
      out << "bmoa";
      break;
  }
  return out.str();
}

std::string form_name(NormForm f) {
  switch (f) {
    case NormForm::box: return "box";
    case NormForm::mobius: return "mobius";
    case NormForm::log_form: return "log";
    case NormForm::boundary: return "boundary";
    case NormForm::garsia: return "garsia";
    case NormForm::circle_sup: return "circle-sup";
  }
  return "?";
}

NormForm parse_form(const std::string& text) {
  if (text == "box") return NormForm::box;
  if (text == "mobius") return NormForm::mobius;
  if (text == "log") return NormForm::log_form;
  if (text == "boundary") return NormForm::boundary;
  if (text == "garsia") return NormForm::garsia;
  if (text == "circle-sup") return NormForm::circle_sup;
  fail("unknown norm form '" + text + "'");
}

// ---------------------------------------------------------------- hardy

double hardy_circle_value(const PowerSeries& f, double p, double r, int angular) {
  const auto abs2 = circle_abs2(f, r, angular);
  if (std::isinf(p)) {
    double best = 0.0;
    for (double v : abs2) best = std::max(best, v);
    return std::sqrt(best);
  }
  KahanSum mean;
  if (p == 2.0) {
    for (double v : abs2) mean.add(v);
  } else if (p == 4.0) {
    for (double v : abs2) mean.add(v * v);
  } else {
    const double e = p / 2.0;
    for (double v : abs2) mean.add(std::pow(v, e));
  }
  return std::pow(mean.value() / angular, 1.0 / p);
}

double hardy_value(const PowerSeries& f, double p, const GridSettings& gs,
                   std::string* argmax) {
  if (!(p >= 2.0)) fail("hardy_norm: p must lie in [2, inf]");
  if (std::isinf(p)) {
    if (argmax) *argmax = "r=1";
    return hardy_circle_value(f, p, 1.0, gs.angular);
  }
  std::vector<double> radii;
  for (int j = 0; j <= gs.depth; ++j) radii.push_back(1.0 - std::ldexp(1.0, -j));
  radii.push_back(1.0);
  auto sup = sup_over_grid(radii, [&](double r) {
    return hardy_circle_value(f, p, r, gs.angular);
  });
  if (argmax) *argmax = format_radius(sup.argmax);
  return sup.value;
}

double hinf_value(const PowerSeries& f, const GridSettings& gs) {
  return hardy_circle_value(f, std::numeric_limits<double>::infinity(), 1.0,
                            gs.angular);
}

double parseval_norm(const PowerSeries& f) {
  KahanSum s;
  for (const auto& c : f.coeffs) s.add(std::norm(c));
  return std::sqrt(s.value());
}

// ------------------------------------------------------------- box sups

double box_sup_sq(const ArcMasses& masses, double lambda, std::string* argmax) {
  double best = -std::numeric_limits<double>::infinity();
  Arc best_arc;
  for (const auto& level : masses.levels) {
    const double scale = std::pow(level.h, -lambda);
    for (std::size_t k = 0; k < level.masses.size(); ++k) {
      const double v = level.masses[k] * scale;
      if (v > best) {
        best = v;
        best_arc = Arc(kPi * level.h * k, level.h);
      }
    }
  }
  if (argmax) *argmax = best_arc.describe();
  return std::max(best, 0.0);
}

double morrey_box_seminorm_sq(const PowerSeries& f, double lambda,
                              const GridSettings& gs, std::string* argmax) {
  const auto masses = box_masses_series(
      derivative(f), [](double r) { return 1.0 - r * r; }, gs);
  return box_sup_sq(masses, lambda, argmax);
}

double morrey_box_norm_value(const PowerSeries& f, double lambda,
                             const GridSettings& gs) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    fail("morrey box norm: lambda out of range [0, 1]");
  return std::abs(f.coeffs[0]) + std::sqrt(morrey_box_seminorm_sq(f, lambda, gs));
}

// -------------------------------------------------------- boundary cache

BoundaryCache BoundaryCache::make(const PowerSeries& f, const GridSettings& gs) {
  BoundaryCache c;
  c.f = &f;
  c.m = gs.angular;
  c.abs2 = circle_abs2(f, 1.0, gs.angular);
  return c;
}

double BoundaryCache::mobius_diff_sq(cd a) const {
  const double a2 = std::norm(a);
  KahanSum mean;
  if (a2 == 0.0) {
    for (double v : abs2) mean.add(v);
  } else {
    const double ca = a.real(), sa = a.imag();
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * kPi * k / m;
      // |1 - conj(a) e^{i th}|^2 = 1 + |a|^2 - 2 Re(conj(a) e^{i th})
      const double den = 1.0 + a2 - 2.0 * (ca * std::cos(th) + sa * std::sin(th));
      mean.add(abs2[k] * (1.0 - a2) / den);
    }
  }
  const double fa = std::norm(evaluate(*f, a));
  return std::max(mean.value() / m - fa, 0.0);
}

double mobius_diff_sq_composed(const PowerSeries& f, cd a, int angular) {
  const MobiusMap sigma(a);
  const cd fa = evaluate(f, a);
  KahanSum mean;
  for (int k = 0; k < angular; ++k) {
    const double th = 2.0 * kPi * k / angular;
    const cd w = sigma(cd{std::cos(th), std::sin(th)});
    mean.add(std::norm(evaluate(f, w) - fa));
  }
  return mean.value() / angular;
}

double bmoa_mobius_seminorm(const PowerSeries& f, const GridSettings& gs,
                            std::string* argmax) {
  const auto cache = BoundaryCache::make(f, gs);
  const auto grid = ParamGrid::standard(gs);
  std::vector<double> vals(grid.points.size());
  parallel_for(grid.points.size(), [&](std::size_t i) {
    vals[i] = cache.mobius_diff_sq(grid.points[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[best]) best = i;
  if (argmax) *argmax = format_point(grid.points[best]);
  return std::sqrt(vals[best]);
}

double bmoa_garsia_seminorm_sq(const PowerSeries& f, const GridSettings& gs,
                               std::string* argmax) {
  return morrey_box_seminorm_sq(f, 1.0, gs, argmax);
}

// -------------------------------------------------------- morrey profile

namespace {

// Angular tables reused across rows of a sweep.
struct AngleTables {
  std::vector<double> cos_t, sin_t;
  explicit AngleTables(int m) : cos_t(m), sin_t(m) {
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * kPi * k / m;
      cos_t[k] = std::cos(th);
      sin_t[k] = std::sin(th);
    }
  }
};

// int |f'|^2 (1-|sigma_a|^2) dA and int |f'|^2 log(1/|sigma_a|) dA for one a,
// from plain |f'|^2 samples.
void mobius_log_at(const DiscField& field, const AngleTables& tables, cd a,
                   bool want_mob, bool want_log, double* mob_out, double* log_out) {
  const double amod2 = std::norm(a);
  const double ca = a.real(), sa = a.imag();
  KahanSum mob, lg;
  for (std::size_t i = 0; i < field.radial.size(); ++i) {
    const double r = field.radial[i].r;
    const double w = field.radial[i].w / field.m;
    const double rho = -2.0 * r;  // coefficient of cos term in cross products
    const double* v = field.row(i);
    double mob_row = 0.0, log_row = 0.0;
    const double r2 = r * r;
    if (want_mob && want_log) {
      for (int k = 0; k < field.m; ++k) {
        const double c = ca * tables.cos_t[k] + sa * tables.sin_t[k];
        const double den = 1.0 + amod2 * r2 + rho * c;  // |1 - conj(a) z|^2
        const double num = amod2 + r2 + rho * c;        // |a - z|^2
        mob_row += v[k] / den;
        log_row += v[k] * std::log(num / den);
      }
    } else if (want_mob) {
      for (int k = 0; k < field.m; ++k) {
        const double c = ca * tables.cos_t[k] + sa * tables.sin_t[k];
        mob_row += v[k] / (1.0 + amod2 * r2 + rho * c);
      }
    } else {
      for (int k = 0; k < field.m; ++k) {
        const double c = ca * tables.cos_t[k] + sa * tables.sin_t[k];
        const double den = 1.0 + amod2 * r2 + rho * c;
        const double num = amod2 + r2 + rho * c;
        log_row += v[k] * std::log(num / den);
      }
    }
    if (want_mob) mob.add(w * (1.0 - r2) * mob_row);
    if (want_log) lg.add(w * log_row);
  }
  if (mob_out) *mob_out = (1.0 - amod2) * mob.value();
  if (log_out) *log_out = -0.5 * lg.value();
}

std::vector<double> boundary_oscillations(const PowerSeries& f,
                                          const GridSettings& gs,
                                          const std::vector<Arc>& arcs) {
  const auto vals = circle_values(f, 1.0, gs.angular);
  const int m = gs.angular;
  std::vector<double> out(arcs.size());
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    const Arc& arc = arcs[idx];
    const double span = arc.h * m;  // number of grid intervals in the arc
    const long nodes = std::lround(span);
    if (std::abs(span - static_cast<double>(nodes)) > 1e-9)
      fail("boundary form: angular grid must align with the arc grid "
           "(M divisible by 2^(J+1))");
    const long start = std::lround((arc.center - kPi * arc.h) * m / (2.0 * kPi));
    KahanSum m2;
    KahanSumComplex s1;
    for (long t = 0; t <= nodes; ++t) {
      const long k = ((start + t) % m + m) % m;
      const double w = (t == 0 || t == nodes) ? 0.5 / m : 1.0 / m;
      m2.add(w * std::norm(vals[k]));
      s1.add(w * vals[k]);
    }
    // (1/2pi) int_I |f - f_I|^2 with f_I the same trapezoid mean
    out[idx] = std::max(m2.value() - std::norm(s1.value()) / arc.h, 0.0);
  }
  return out;
}

}  // namespace

MorreyProfile morrey_profile(const PowerSeries& f, const GridSettings& gs,
                             bool with_mobius_log, bool with_boundary) {
  MorreyProfile prof;
  const PowerSeries fp = derivative(f);
  prof.masses = box_masses_series(fp, [](double r) { return 1.0 - r * r; }, gs);
  prof.grid = ParamGrid::standard(gs);
  if (with_mobius_log) {
    const DiscField field = sample_series_abs2(fp, nullptr, gs);
    const AngleTables tables(gs.angular);
    prof.mob.resize(prof.grid.points.size());
    prof.logi.resize(prof.grid.points.size());
    parallel_for(prof.grid.points.size(), [&](std::size_t i) {
      mobius_log_at(field, tables, prof.grid.points[i], true, true, &prof.mob[i],
                    &prof.logi[i]);
    });
  }
  if (with_boundary) {
    prof.arcs = arc_grid(gs);
    prof.bnd = boundary_oscillations(f, gs, prof.arcs);
  }
  return prof;
}

double seminorm_sq_from_profile(const MorreyProfile& prof, double lambda,
                                NormForm form, std::string* argmax) {
  switch (form) {
    case NormForm::box:
    case NormForm::garsia:
      return box_sup_sq(prof.masses, lambda, argmax);
    case NormForm::mobius:
    case NormForm::log_form: {
      const auto& vals = (form == NormForm::mobius) ? prof.mob : prof.logi;
      if (vals.empty()) fail("profile lacks the mobius/log integrals");
      double best = -std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        const double amod2 = std::norm(prof.grid.points[i]);
        const double v = std::pow(1.0 - amod2, 1.0 - lambda) * vals[i];
        if (v > best) {
          best = v;
          arg = i;
        }
      }
      if (argmax) *argmax = format_point(prof.grid.points[arg]);
      return std::max(best, 0.0);
    }
    case NormForm::boundary: {
      if (prof.bnd.empty()) fail("profile lacks the boundary oscillations");
      double best = -std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t i = 0; i < prof.bnd.size(); ++i) {
        const double v = prof.bnd[i] * std::pow(prof.arcs[i].h, -lambda);
        if (v > best) {
          best = v;
          arg = i;
        }
      }
      if (argmax) *argmax = prof.arcs[arg].describe();
      return std::max(best, 0.0);
    }
    case NormForm::circle_sup:
      fail("circle-sup is a Hardy form");
  }
  fail("unknown norm form");
}

// -------------------------------------------------------------- carleson

double carleson_value(const DensityMeasure& mu, double p, const GridSettings& gs,
                      std::string* argmax) {
  if (!(p > 0.0)) fail("carleson_constant: p must be positive");
  ArcMasses masses;
  if (mu.modulus_series) {
    masses = box_masses_series(*mu.modulus_series, mu.radial, gs);
  } else if (mu.radial) {
    // Radial density: the angular integral is trivial, masses repeat
    // around each level.
    for (int j = 0; j <= gs.depth; ++j) {
      const double h = std::ldexp(1.0, -j);
      const auto radial = box_radial_nodes(gs, h);
      KahanSum ring;
      for (const auto& rn : radial) ring.add(rn.w * mu.radial(rn.r));
      ArcMasses::Level level{h, std::vector<double>(std::size_t{1} << (j + 1),
                                                    h * ring.value())};
      masses.levels.push_back(std::move(level));
    }
  } else {
    masses = box_masses_pointwise(mu.pointwise, gs);
  }
  return box_sup_sq(masses, p, argmax);
}

// ------------------------------------------------------- report wrappers

namespace {

nlohmann::json grid_json(const GridSettings& gs) {
  nlohmann::json j;
  j["N"] = gs.trunc;
  j["q"] = gs.gl_order;
  j["radial_panels"] = gs.radial_panels;
  j["inner_panels"] = gs.inner_panels;
  j["box_panels"] = gs.box_panels;
  j["M"] = gs.angular;
  j["J"] = gs.depth;
  j["refine"] = gs.splits;
  return j;
}

double relative_delta(double base, double ref) {
  const double denom = std::max(std::abs(base), std::abs(ref));
  if (denom < 1e-300) return 0.0;
  return std::abs(ref - base) / denom;
}

NormReport finish_report(double value, double seminorm_sq, NormForm form,
                         std::string argmax, std::string space,
                         const GridSettings& gs, bool truncated) {
  NormReport rep;
  rep.value = value;
  rep.seminorm_sq = seminorm_sq;
  rep.form = form;
  rep.argmax = std::move(argmax);
  rep.space = std::move(space);
  rep.grid = gs;
  rep.truncated = truncated;
  return rep;
}

}  // namespace

std::string NormReport::to_json() const {
  nlohmann::json j;
  j["space"] = space;
  j["form"] = form_name(form);
  j["value"] = value;
  j["seminorm_sq"] = seminorm_sq;
  j["argmax"] = argmax;
  j["grid"] = grid_json(grid);
  if (refinement_delta) j["refinement_delta"] = *refinement_delta;
  if (cross_check) j["cross_check"] = *cross_check;
  j["truncated"] = truncated;
  return j.dump();
}

std::string NormReport::csv_header() {
  return "space,form,value,seminorm_sq,argmax,grid,refinement_delta,cross_check,"
         "truncated";
}

std::string NormReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << space << "," << form_name(form) << "," << value << "," << seminorm_sq
      << ",\"" << argmax << "\",\"" << grid.describe() << "\",";
  if (refinement_delta) out << *refinement_delta;
  out << ",";
  if (cross_check) out << *cross_check;
  out << "," << (truncated ? "true" : "false");
  return out.str();
}

NormReport hardy_norm(const PowerSeries& f, double p, const GridSettings& gs,
                      bool with_delta) {
  std::string argmax;
  const double value = hardy_value(f, p, gs, &argmax);
  NormReport rep = finish_report(value, value * value, NormForm::circle_sup,
                                 std::move(argmax), SpaceSpec::hardy(p).describe(),
                                 gs, f.truncated);
  if (p == 2.0) rep.cross_check = parseval_norm(f);
  if (with_delta) {
    const double ref = hardy_value(f, p, refined(gs), nullptr);
    rep.refinement_delta = relative_delta(value, ref);
  }
  return rep;
}

NormReport bmoa_norm(const PowerSeries& f, NormForm form, const GridSettings& gs,
                     bool with_delta) {
  const double head = std::abs(f.coeffs[0]);
  std::string argmax;
  double sem_sq, value;
  auto compute = [&](const GridSettings& g, std::string* arg) {
    if (form == NormForm::mobius) {
      const double s = bmoa_mobius_seminorm(f, g, arg);
      return std::pair<double, double>(head + s, s * s);
    }
    if (form == NormForm::garsia) {
      const double s2 = bmoa_garsia_seminorm_sq(f, g, arg);
      return std::pair<double, double>(head + std::sqrt(s2), s2);
    }
    fail("bmoa_norm: form must be mobius or garsia");
  };
  std::tie(value, sem_sq) = compute(gs, &argmax);
  NormReport rep = finish_report(value, sem_sq, form, std::move(argmax), "bmoa", gs,
                                 f.truncated);
  if (with_delta) {
    const auto ref = compute(refined(gs), nullptr);
    rep.refinement_delta = relative_delta(value, ref.first);
  }
  return rep;
}

NormReport morrey_norm(const PowerSeries& f, double lambda, NormForm form,
                       const GridSettings& gs, bool with_delta) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    fail("morrey_norm: lambda out of range (0, 1]");
  if (form == NormForm::circle_sup) fail("morrey_norm: circle-sup is a Hardy form");
  const double head = std::abs(f.coeffs[0]);
  auto compute = [&](const GridSettings& g, std::string* arg) {
    const bool needs_sweep =
        form == NormForm::mobius || form == NormForm::log_form;
    const MorreyProfile prof =
        morrey_profile(f, g, needs_sweep, form == NormForm::boundary);
    return seminorm_sq_from_profile(prof, lambda, form, arg);
  };
  std::string argmax;
  const double sem_sq = compute(gs, &argmax);
  const double value = head + std::sqrt(sem_sq);
  NormReport rep =
      finish_report(value, sem_sq, form, std::move(argmax),
                    SpaceSpec::morrey(lambda).describe(), gs, f.truncated);
  if (with_delta) {
    const double ref_sq = compute(refined(gs), nullptr);
    rep.refinement_delta = relative_delta(value, head + std::sqrt(ref_sq));
  }
  return rep;
}

NormReport carleson_constant(const DensityMeasure& mu, double p,
                             const GridSettings& gs, bool with_delta) {
  std::string argmax;
  const double value = carleson_value(mu, p, gs, &argmax);
  NormReport rep = finish_report(value, value, NormForm::box, std::move(argmax),
                                 "carleson:" + std::to_string(p), gs, false);
  if (with_delta) {
    const double ref = carleson_value(mu, p, refined(gs), nullptr);
    rep.refinement_delta = relative_delta(value, ref);
  }
  return rep;
}

NormReport space_norm(const PowerSeries& f, const SpaceSpec& spec,
                      const GridSettings& gs, bool with_delta) {
  switch (spec.kind) {
    case SpaceSpec::Kind::hardy:
      return hardy_norm(f, spec.param, gs, with_delta);
    case SpaceSpec::Kind::bmoa:
      return bmoa_norm(f, NormForm::mobius, gs, with_delta);
    case SpaceSpec::Kind::morrey:
      if (spec.param == 1.0) return bmoa_norm(f, NormForm::garsia, gs, with_delta);
      return morrey_norm(f, spec.param, NormForm::box, gs, with_delta);
  }
  fail("space_norm: unknown space kind");
}

double space_norm_value(const PowerSeries& f, const SpaceSpec& spec,
                        const GridSettings& gs) {
  switch (spec.kind) {
    case SpaceSpec::Kind::hardy:
      return hardy_value(f, spec.param, gs);
    case SpaceSpec::Kind::bmoa:
      return std::abs(f.coeffs[0]) + bmoa_mobius_seminorm(f, gs);
    case SpaceSpec::Kind::morrey:
      return morrey_box_norm_value(f, spec.param, gs);
  }
  fail("space_norm_value: unknown space kind");
}

std::vector<ProfilePoint> vmoa_distance_profile(const PowerSeries& g, int levels,
                                                const GridSettings& gs) {
  if (levels < 0) fail("vmoa_distance_profile: levels must be non-negative");
  const auto cache = BoundaryCache::make(g, gs);
  const auto grid = ParamGrid::standard(gs);
  std::vector<ProfilePoint> out;
  for (int j = 0; j <= levels; ++j) {
    if (j >= static_cast<int>(grid.shells.size())) {
      std::cerr << "vmoa_distance_profile: level " << j
                << " is below the grid floor (J=" << gs.depth << "), omitted\n";
      break;
    }
    const auto& shell = grid.shells[j];
    std::vector<double> vals(shell.count);
    parallel_for(shell.count, [&](std::size_t i) {
      vals[i] = cache.mobius_diff_sq(grid.points[shell.first + i]);
    });
    double best = 0.0;
    for (double v : vals) best = std::max(best, v);
    out.push_back({std::ldexp(1.0, -j), std::sqrt(best)});
  }
  return out;
}

double growth_ratio(const PowerSeries& f, double lambda, const GridSettings& gs,
                    std::string* argmax) {
  if (!(lambda > 0.0 && lambda < 1.0)) fail("growth_ratio: lambda out of range (0, 1)");
  const double norm = morrey_box_norm_value(f, lambda, gs);
  if (!(norm > 1e-14)) fail("growth_ratio: zero function");
  const auto grid = ParamGrid::standard(gs);
  const double e = (1.0 - lambda) / 2.0;
  auto sup = sup_over_grid(grid.points, [&](cd z) {
    return std::abs(evaluate(f, z)) * std::pow(1.0 - std::norm(z), e) / norm;
  });
  if (argmax) *argmax = format_point(sup.argmax);
  return sup.value;
}

std::pair<double, double> littlewood_paley_h2(const PowerSeries& f,
                                              const GridSettings& gs) {
  KahanSum lhs;
  for (const auto& c : f.coeffs) lhs.add(std::norm(c));
  const DiscField field = sample_series_abs2(
      derivative(f), [](double r) { return std::log(1.0 / r); }, gs);
  const double rhs = std::norm(f.coeffs[0]) + 2.0 * field.integral();
  return {lhs.value(), rhs};
}

}  // namespace morrey
