#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morrey/numeric.hpp"

namespace morrey {

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence and cached per order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

// Quadrature and sup-grid parameters shared across the library. `depth` is
// the sup-grid exponent J (radii 1 - 2^-j, j = 0..J); it is tied to the
// truncation by N * 2^-J >= 16 so the series is still trustworthy at the
// deepest radius.
struct GridSettings {
  std::size_t trunc = 256;
  int gl_order = 8;        // Gauss-Legendre order per radial panel
  int radial_panels = 24;  // dyadic panels toward the boundary
  int inner_panels = 28;   // dyadic panels toward 0 (log-type weights)
  int box_panels = 12;     // dyadic panels toward the boundary inside a box
  int angular = 1024;      // uniform angular nodes M
  int depth = 4;           // sup-grid exponent J
  int splits = 0;          // refinement level: each radial panel is cut 2^splits ways

  // Largest J allowed by the truncation coupling.
  static int max_depth(std::size_t trunc);
  // Throws std::invalid_argument when the invariants fail.
  void validate() const;
  std::string describe() const;
};

// One quadrature refinement step: every radial panel is split in two and
// the angular node count doubles. Sup and arc grids are left alone so that
// refinement deltas measure integration error only.
GridSettings refined(const GridSettings& s);

// Radial node with combined weight: integrals over the disc in normalized
// area measure are sum_i w_i * (angular mean of the density at radius r_i);
// w_i already contains the 2r Jacobian and panel scaling.
struct RadialNode {
  double r;
  double w;
};

std::vector<RadialNode> disc_radial_nodes(const GridSettings& s);
// Radial nodes covering [1-h, 1], dyadically refined toward 1.
std::vector<RadialNode> box_radial_nodes(const GridSettings& s, double h);

// Boundary arc of normalized length h centered at angle `center`; h = 1 is
// the full circle.
struct Arc {
  double center = 0.0;
  double h = 1.0;
  Arc() = default;
  Arc(double center_, double h_);
  std::string describe() const;
};

struct DiscRule {
  std::vector<RadialNode> radial;
  int angular;
  static DiscRule make(const GridSettings& s);
};

// Tensor rule on the Carleson box S(I): dyadic radial panels on [1-h, 1]
// times composite Gauss-Legendre panels along the arc.
struct BoxRule {
  Arc arc;
  std::vector<RadialNode> radial;
  std::vector<double> theta;
  std::vector<double> wtheta;  // normalized so they sum to h
  static BoxRule make(const GridSettings& s, const Arc& arc);
};

double integrate_disc(const DiscRule& rule, const std::function<double(cd)>& density);
cd integrate_disc_complex(const DiscRule& rule, const std::function<cd(cd)>& density);
double integrate_box(const BoxRule& rule, const std::function<double(cd)>& density);

// (1/2pi) int_0^2pi h(theta) dtheta by the M-point trapezoid rule.
double integrate_circle(const std::function<double(double)>& h, double r, int angular);

// Discretization of sup over a in D and sup over arcs I.
struct ParamGrid {
  struct Shell {
    int level;              // rho = 1 - 2^-level
    double rho;
    std::size_t first, count;  // span inside `points`
  };
  std::vector<cd> points;
  std::vector<Shell> shells;

  // Radii 1 - 2^-j for j = 0..J, angle count max(16, ceil(2pi/(1-rho)))
  // capped at 4096.
  static ParamGrid standard(const GridSettings& s);
  // Same radii restricted to the real axis (two angles); the grid for
  // family parameter sweeps.
  static ParamGrid family(const GridSettings& s);
};

// Arc-length levels h_j = 2^-j, j = 0..J, centers spaced h_j/2.
std::vector<Arc> arc_grid(const GridSettings& s);

template <typename P>
struct SupResult {
  double value = 0.0;
  P argmax{};
  std::size_t index = 0;
};

// Grid maximum with deterministic first-occurrence tie-break.
template <typename P, typename F>
SupResult<P> sup_over_grid(const std::vector<P>& grid, F&& functional) {
  if (grid.empty()) throw std::invalid_argument("sup_over_grid: empty grid");
  SupResult<P> best;
  best.value = functional(grid[0]);
  best.argmax = grid[0];
  best.index = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = functional(grid[i]);
    if (v > best.value) {
      best.value = v;
      best.argmax = grid[i];
      best.index = i;
    }
  }
  return best;
}

}  // namespace morrey
