#include "morrey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace morrey {

namespace {

// Legendre P_n and its derivative at x.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = (n == 0) ? 1.0 : p1;
  dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i <= (n - 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      const double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.weights[i] = w;
    gl.nodes[n - 1 - i] = x;
    gl.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    double p, dp;
    legendre(n, 0.0, p, dp);
    gl.nodes[n / 2] = 0.0;
    gl.weights[n / 2] = 2.0 / (dp * dp);
  }
  return gl;
}

std::mutex g_gl_mutex;

void append_panel(std::vector<RadialNode>& out, double a, double b,
                  const GaussLegendre& gl, int splits) {
  if (b <= a) return;
  const int pieces = 1 << splits;
  for (int s = 0; s < pieces; ++s) {
    const double lo = a + (b - a) * s / pieces;
    const double hi = a + (b - a) * (s + 1) / pieces;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double r = mid + half * gl.nodes[i];
      out.push_back({r, gl.weights[i] * half * 2.0 * r});
    }
  }
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  if (order < 1 || order > 64)
    throw std::invalid_argument("gauss_legendre: order must lie in [1, 64]");
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

int GridSettings::max_depth(std::size_t trunc) {
  int j = 0;
  while (static_cast<double>(trunc) * std::ldexp(1.0, -(j + 1)) >= 16.0) ++j;
  return j;
}

void GridSettings::validate() const {
  if (trunc < 16) throw std::invalid_argument("truncation N must be >= 16");
  if (static_cast<double>(trunc) * std::ldexp(1.0, -depth) < 16.0)
    throw std::invalid_argument(
        "grid coupling violated: N * 2^-J >= 16 required (N=" +
        std::to_string(trunc) + ", J=" + std::to_string(depth) + ")");
  if (gl_order < 2 || gl_order > 64)
    throw std::invalid_argument("quadrature order must lie in [2, 64]");
  if (radial_panels < 2 || inner_panels < 1 || box_panels < 1)
    throw std::invalid_argument("panel counts must be positive");
  if (angular < 16) throw std::invalid_argument("angular node count must be >= 16");
  if (static_cast<std::size_t>(angular) < 2 * trunc + 4)
    throw std::invalid_argument(
        "angular node count must be >= 2N+4 so products evaluate exactly on "
        "the circle (M=" + std::to_string(angular) + ", N=" + std::to_string(trunc) + ")");
  if (angular % (1 << (depth + 1)) != 0)
    throw std::invalid_argument(
        "angular node count must be divisible by 2^(J+1) so arc endpoints land "
        "on the boundary grid");
}

std::string GridSettings::describe() const {
  std::ostringstream out;
  out << "N=" << trunc << " q=" << gl_order << " panels=" << radial_panels << "+"
      << inner_panels << " M=" << angular << " J=" << depth;
  if (splits > 0) out << " refine=" << splits;
  return out.str();
}

GridSettings refined(const GridSettings& s) {
  GridSettings r = s;
  r.angular = 2 * s.angular;
  r.splits = s.splits + 1;
  return r;
}

std::vector<RadialNode> disc_radial_nodes(const GridSettings& s) {
  const GaussLegendre& gl = gauss_legendre(s.gl_order);
  std::vector<RadialNode> out;
  out.reserve(static_cast<std::size_t>(s.inner_panels + s.radial_panels + 2) *
              gl.nodes.size() << s.splits);
  // Closing panel at 0, then dyadic panels [2^-(k+1), 2^-k] up to [1/4, 1/2].
  const double inner_floor = std::ldexp(1.0, -(s.inner_panels + 1));
  append_panel(out, 0.0, inner_floor, gl, s.splits);
  for (int k = s.inner_panels; k >= 1; --k)
    append_panel(out, std::ldexp(1.0, -(k + 1)), std::ldexp(1.0, -k), gl, s.splits);
  // Dyadic panels toward the boundary, then a closing panel at 1.
  for (int j = 1; j < s.radial_panels; ++j)
    append_panel(out, 1.0 - std::ldexp(1.0, -j), 1.0 - std::ldexp(1.0, -(j + 1)), gl,
                 s.splits);
  append_panel(out, 1.0 - std::ldexp(1.0, -s.radial_panels), 1.0, gl, s.splits);
  return out;
}

std::vector<RadialNode> box_radial_nodes(const GridSettings& s, double h) {
  if (!(h > 0.0 && h <= 1.0))
    throw std::invalid_argument("box radial nodes: h must lie in (0, 1]");
  const GaussLegendre& gl = gauss_legendre(s.gl_order);
  std::vector<RadialNode> out;
  for (int j = 0; j < s.box_panels; ++j)
    append_panel(out, 1.0 - h * std::ldexp(1.0, -j), 1.0 - h * std::ldexp(1.0, -(j + 1)),
                 gl, s.splits);
  append_panel(out, 1.0 - h * std::ldexp(1.0, -s.box_panels), 1.0, gl, s.splits);
  return out;
}

Arc::Arc(double center_, double h_) : center(center_), h(h_) {
  if (!(h > 0.0 && h <= 1.0))
    throw std::invalid_argument("Arc: normalized length must lie in (0, 1]");
}

std::string Arc::describe() const {
  std::ostringstream out;
  out.precision(10);
  out << "arc(h=" << h << ",center=" << center << ")";
  return out.str();
}

DiscRule DiscRule::make(const GridSettings& s) {
  return DiscRule{disc_radial_nodes(s), s.angular};
}

BoxRule BoxRule::make(const GridSettings& s, const Arc& arc) {
  BoxRule rule;
  rule.arc = arc;
  rule.radial = box_radial_nodes(s, arc.h);
  const GaussLegendre& gl = gauss_legendre(s.gl_order);
  const double span = 2.0 * kPi * arc.h;
  // About 2hM angular nodes: pi-ish points per wavelength of the highest
  // resolvable frequency M/2, with margin.
  const int panels = std::max<int>(
      1, static_cast<int>(std::ceil(2.0 * arc.h * s.angular / s.gl_order)));
  const double lo = arc.center - kPi * arc.h;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + span * p / panels;
    const double b = lo + span * (p + 1) / panels;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      rule.theta.push_back(mid + half * gl.nodes[i]);
      rule.wtheta.push_back(gl.weights[i] * half / (2.0 * kPi));
    }
  }
  return rule;
}

double integrate_disc(const DiscRule& rule, const std::function<double(cd)>& density) {
  KahanSum total;
  const double dtheta = 2.0 * kPi / rule.angular;
  for (const auto& rn : rule.radial) {
    KahanSum ring;
    for (int k = 0; k < rule.angular; ++k) {
      const double th = dtheta * k;
      const double v = density(cd{rn.r * std::cos(th), rn.r * std::sin(th)});
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrate_disc: non-finite density at node r=" << rn.r
            << " theta=" << th;
        throw std::runtime_error(msg.str());
      }
      ring.add(v);
    }
    total.add(rn.w * ring.value() / rule.angular);
  }
  return total.value();
}

cd integrate_disc_complex(const DiscRule& rule, const std::function<cd(cd)>& density) {
  KahanSumComplex total;
  const double dtheta = 2.0 * kPi / rule.angular;
  for (const auto& rn : rule.radial) {
    KahanSumComplex ring;
    for (int k = 0; k < rule.angular; ++k) {
      const double th = dtheta * k;
      const cd v = density(cd{rn.r * std::cos(th), rn.r * std::sin(th)});
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("integrate_disc: non-finite density value");
      ring.add(v);
    }
    total.add(rn.w / static_cast<double>(rule.angular) * ring.value());
  }
  return total.value();
}

double integrate_box(const BoxRule& rule, const std::function<double(cd)>& density) {
  KahanSum total;
  for (const auto& rn : rule.radial) {
    KahanSum ring;
    for (std::size_t k = 0; k < rule.theta.size(); ++k) {
      const double v = density(
          cd{rn.r * std::cos(rule.theta[k]), rn.r * std::sin(rule.theta[k])});
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrate_box: non-finite density at node r=" << rn.r
            << " theta=" << rule.theta[k];
        throw std::runtime_error(msg.str());
      }
      ring.add(rule.wtheta[k] * v);
    }
    total.add(rn.w * ring.value());
  }
  return total.value();
}

double integrate_circle(const std::function<double(double)>& h, double r, int angular) {
  if (!(r > 0.0 && r <= 1.0))
    throw std::invalid_argument("integrate_circle: r must lie in (0, 1]");
  KahanSum sum;
  const double dtheta = 2.0 * kPi / angular;
  for (int k = 0; k < angular; ++k) sum.add(h(dtheta * k));
  return sum.value() / angular;
}

ParamGrid ParamGrid::standard(const GridSettings& s) {
  ParamGrid grid;
  for (int j = 0; j <= s.depth; ++j) {
    const double rho = 1.0 - std::ldexp(1.0, -j);
    const int count = std::min(
        4096, std::max(16, static_cast<int>(std::ceil(2.0 * kPi / (1.0 - rho)))));
    Shell shell{j, rho, grid.points.size(), static_cast<std::size_t>(count)};
    for (int k = 0; k < count; ++k) {
      const double th = 2.0 * kPi * k / count;
      grid.points.push_back(rho * cd{std::cos(th), std::sin(th)});
    }
    grid.shells.push_back(shell);
  }
  return grid;
}

ParamGrid ParamGrid::family(const GridSettings& s) {
  ParamGrid grid;
  for (int j = 0; j <= s.depth; ++j) {
    const double rho = 1.0 - std::ldexp(1.0, -j);
    const int count = (j == 0) ? 1 : 2;
    Shell shell{j, rho, grid.points.size(), static_cast<std::size_t>(count)};
    for (int k = 0; k < count; ++k) {
      const double th = 2.0 * kPi * k / count;
      grid.points.push_back(rho * cd{std::cos(th), std::sin(th)});
    }
    grid.shells.push_back(shell);
  }
  return grid;
}

std::vector<Arc> arc_grid(const GridSettings& s) {
  std::vector<Arc> arcs;
  for (int j = 0; j <= s.depth; ++j) {
    const double h = std::ldexp(1.0, -j);
    const int count = 1 << (j + 1);
    for (int k = 0; k < count; ++k) arcs.emplace_back(kPi * h * k, h);
  }
  return arcs;
}

}  // namespace morrey
