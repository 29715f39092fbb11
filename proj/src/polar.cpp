#include "morrey/polar.hpp"

#include <cmath>
#include <stdexcept>

#include "morrey/fft.hpp"

namespace morrey {

std::vector<cd> circle_values(const PowerSeries& s, double r, int m) {
  if (s.coeffs.size() > static_cast<std::size_t>(m))
    throw std::invalid_argument(
        "circle_values: angular grid too small for the series degree");
  std::vector<cd> folded(s.coeffs.size());
  double rn = 1.0;
  for (std::size_t n = 0; n < folded.size(); ++n) {
    folded[n] = s.coeffs[n] * rn;
    rn *= r;
  }
  return fft_eval_circle(folded, static_cast<std::size_t>(m));
}

std::vector<double> circle_abs2(const PowerSeries& s, double r, int m) {
  const auto vals = circle_values(s, r, m);
  std::vector<double> out(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) out[k] = std::norm(vals[k]);
  return out;
}

double DiscField::integral() const {
  KahanSum total;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    KahanSum ring;
    const double* v = row(i);
    for (int k = 0; k < m; ++k) ring.add(v[k]);
    total.add(radial[i].w * ring.value() / m);
  }
  return total.value();
}

DiscField sample_series_abs2(const PowerSeries& s,
                             const std::function<double(double)>& radial_weight,
                             const GridSettings& gs) {
  DiscField field;
  field.radial = disc_radial_nodes(gs);
  field.m = gs.angular;
  field.vals.resize(field.radial.size() * field.m);
  parallel_for(field.radial.size(), [&](std::size_t i) {
    const double r = field.radial[i].r;
    const double w = radial_weight ? radial_weight(r) : 1.0;
    const auto vals = circle_values(s, r, field.m);
    double* out = field.vals.data() + i * field.m;
    for (int k = 0; k < field.m; ++k) out[k] = std::norm(vals[k]) * w;
  });
  return field;
}

DiscField sample_pointwise(const std::function<double(cd)>& density,
                           const GridSettings& gs) {
  DiscField field;
  field.radial = disc_radial_nodes(gs);
  field.m = gs.angular;
  field.vals.resize(field.radial.size() * field.m);
  const double dtheta = 2.0 * kPi / gs.angular;
  parallel_for(field.radial.size(), [&](std::size_t i) {
    const double r = field.radial[i].r;
    double* out = field.vals.data() + i * field.m;
    for (int k = 0; k < field.m; ++k) {
      const double th = dtheta * k;
      const double v = density(cd{r * std::cos(th), r * std::sin(th)});
      if (!std::isfinite(v))
        throw std::runtime_error("sample_pointwise: non-finite density value");
      out[k] = v;
    }
  });
  return field;
}

namespace {

// Shared mass assembly: samples(i, k) supplies density values at box radius
// index i, uniform angle k.
ArcMasses assemble_masses(
    const GridSettings& gs,
    const std::function<std::vector<double>(const std::vector<RadialNode>&,
                                            std::size_t)>& row_sampler) {
  ArcMasses out;
  const int m = gs.angular;
  for (int j = 0; j <= gs.depth; ++j) {
    const double h = std::ldexp(1.0, -j);
    const auto radial = box_radial_nodes(gs, h);

    // Radially reduced Fourier coefficients C_q = sum_i w_i D_q(r_i).
    std::vector<KahanSumComplex> acc(static_cast<std::size_t>(m) / 2 + 1);
    std::vector<std::vector<cd>> rows(radial.size());
    parallel_for(radial.size(), [&](std::size_t i) {
      rows[i] = fft_real_coeffs(row_sampler(radial, i));
    });
    for (std::size_t i = 0; i < radial.size(); ++i)
      for (std::size_t q = 0; q < acc.size(); ++q)
        acc[q].add(radial[i].w * rows[i][q]);

    ArcMasses::Level level;
    level.h = h;
    const int centers = 1 << (j + 1);
    level.masses.resize(centers);
    for (int k = 0; k < centers; ++k) {
      const double thc = kPi * h * k;
      KahanSum mass;
      mass.add(h * acc[0].value().real());
      for (std::size_t q = 1; q < acc.size(); ++q) {
        const cd cq = acc[q].value();
        const double ang = static_cast<double>(q) * thc;
        const double s = std::sin(static_cast<double>(q) * kPi * h) /
                         (static_cast<double>(q) * kPi);
        mass.add(2.0 * s *
                 (cq.real() * std::cos(ang) - cq.imag() * std::sin(ang)));
      }
      level.masses[k] = mass.value();
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace

ArcMasses box_masses_series(const PowerSeries& s,
                            const std::function<double(double)>& radial_weight,
                            const GridSettings& gs) {
  const int m = gs.angular;
  return assemble_masses(gs, [&](const std::vector<RadialNode>& radial,
                                 std::size_t i) {
    const double r = radial[i].r;
    const double w = radial_weight ? radial_weight(r) : 1.0;
    auto vals = circle_abs2(s, r, m);
    for (auto& v : vals) v *= w;
    return vals;
  });
}

ArcMasses box_masses_pointwise(const std::function<double(cd)>& density,
                               const GridSettings& gs) {
  const int m = gs.angular;
  const double dtheta = 2.0 * kPi / m;
  return assemble_masses(gs, [&](const std::vector<RadialNode>& radial,
                                 std::size_t i) {
    const double r = radial[i].r;
    std::vector<double> vals(m);
    for (int k = 0; k < m; ++k) {
      const double th = dtheta * k;
      vals[k] = density(cd{r * std::cos(th), r * std::sin(th)});
      if (!std::isfinite(vals[k]))
        throw std::runtime_error("box_masses: non-finite density value");
    }
    return vals;
  });
}

}  // namespace morrey
