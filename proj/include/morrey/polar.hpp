#pragma once

#include <functional>
#include <vector>

#include "morrey/quadrature.hpp"
#include "morrey/series.hpp"

namespace morrey {

// Polynomial evaluation on uniform circle grids goes through the FFT: the
// values of S at the m-th roots of unity times r are the inverse transform
// of the coefficients folded with r^n. Exact for degree < m.

std::vector<cd> circle_values(const PowerSeries& s, double r, int m);
std::vector<double> circle_abs2(const PowerSeries& s, double r, int m);

// Density samples on the tensor grid (disc radial nodes) x (m angles),
// row-major. The radial weights make integral() the normalized-area
// integral of the sampled density.
struct DiscField {
  std::vector<RadialNode> radial;
  int m = 0;
  std::vector<double> vals;

  double integral() const;
  const double* row(std::size_t i) const { return vals.data() + i * m; }
};

DiscField sample_series_abs2(const PowerSeries& s,
                             const std::function<double(double)>& radial_weight,
                             const GridSettings& gs);
DiscField sample_pointwise(const std::function<double(cd)>& density,
                           const GridSettings& gs);

// Carleson-box masses of a density over the standard arc grid. Radial
// direction uses the dyadic Gauss-Legendre panels of the box rule; the
// angular integral over each arc is the exact integral of the degree-M/2
// trigonometric interpolant, so the whole arc grid at one level comes out
// of m/2 Fourier coefficients per radius.
struct ArcMasses {
  struct Level {
    double h;
    std::vector<double> masses;  // center k sits at angle pi*h*k
  };
  std::vector<Level> levels;
};

ArcMasses box_masses_series(const PowerSeries& s,
                            const std::function<double(double)>& radial_weight,
                            const GridSettings& gs);
ArcMasses box_masses_pointwise(const std::function<double(cd)>& density,
                               const GridSettings& gs);

}  // namespace morrey
