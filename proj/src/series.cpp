#include "morrey/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace morrey {

namespace {

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

PowerSeries::PowerSeries(std::vector<cd> c, bool trunc)
    : coeffs(std::move(c)), truncated(trunc) {
  if (coeffs.empty()) coeffs.push_back(cd{0.0, 0.0});
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!finite(coeffs[i]))
      fail("PowerSeries: non-finite coefficient at index " + std::to_string(i));
}

cd evaluate(const PowerSeries& f, cd z) {
  if (!finite(z)) fail("evaluate: non-finite argument");
  const auto& c = f.coeffs;
  // Horner with exact two-sum on each addition; the running compensation is
  // carried through the multiply so the result matches a compensated sum of
  // the monomial terms.
  cd s = c.back();
  cd comp{0.0, 0.0};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const cd p = s * z;
    comp *= z;
    double sr, er, si, ei;
    two_sum(p.real(), c[i].real(), sr, er);
    two_sum(p.imag(), c[i].imag(), si, ei);
    s = {sr, si};
    comp += cd{er, ei};
  }
  return s + comp;
}

PowerSeries derivative(const PowerSeries& f) {
  const auto& c = f.coeffs;
  if (c.size() == 1) return PowerSeries({cd{0.0, 0.0}}, f.truncated);
  std::vector<cd> d(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n)
    d[n - 1] = static_cast<double>(n) * c[n];
  return PowerSeries(std::move(d), f.truncated);
}

PowerSeries antiderivative(const PowerSeries& f) {
  const auto& c = f.coeffs;
  std::vector<cd> d(c.size() + 1, cd{0.0, 0.0});
  for (std::size_t n = 0; n < c.size(); ++n)
    d[n + 1] = c[n] / static_cast<double>(n + 1);
  return PowerSeries(std::move(d), f.truncated);
}

PowerSeries cauchy_product(const PowerSeries& f, const PowerSeries& g,
                           std::size_t cap) {
  const std::size_t full = f.degree() + g.degree();
  const std::size_t deg = std::min(full, cap);
  std::vector<cd> out(deg + 1);
  for (std::size_t n = 0; n <= deg; ++n) {
    KahanSumComplex acc;
    const std::size_t k_lo = n > g.degree() ? n - g.degree() : 0;
    const std::size_t k_hi = std::min(n, f.degree());
    for (std::size_t k = k_lo; k <= k_hi; ++k) acc.add(f.coeffs[k] * g.coeffs[n - k]);
    out[n] = acc.value();
  }
  return PowerSeries(std::move(out), f.truncated || g.truncated || full > cap);
}

PowerSeries dilate(const PowerSeries& g, double r) {
  if (!(r >= 0.0 && r <= 1.0)) fail("dilate: r must lie in [0, 1]");
  std::vector<cd> out(g.coeffs.size());
  double rn = 1.0;
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = g.coeffs[n] * rn;
    rn *= r;
  }
  return PowerSeries(std::move(out), g.truncated);
}

PowerSeries scale(const PowerSeries& f, cd alpha) {
  std::vector<cd> out(f.coeffs.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = alpha * f.coeffs[n];
  return PowerSeries(std::move(out), f.truncated);
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  std::vector<cd> out(std::max(f.coeffs.size(), g.coeffs.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = f.at(n) + g.at(n);
  return PowerSeries(std::move(out), f.truncated || g.truncated);
}

PowerSeries subtract(const PowerSeries& f, const PowerSeries& g) {
  std::vector<cd> out(std::max(f.coeffs.size(), g.coeffs.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = f.at(n) - g.at(n);
  return PowerSeries(std::move(out), f.truncated || g.truncated);
}

PowerSeries binomial_series(double s, cd b, std::size_t n) {
  if (!(s > 0.0)) fail("binomial_series: exponent s must be positive");
  if (!(std::abs(b) < 1.0)) fail("binomial_series: |b| must be < 1");
  std::vector<cd> c(n + 1);
  c[0] = cd{1.0, 0.0};
  const cd bb = std::conj(b);
  for (std::size_t k = 1; k <= n; ++k)
    c[k] = c[k - 1] * ((s + static_cast<double>(k) - 1.0) / static_cast<double>(k)) * bb;
  return PowerSeries(std::move(c));
}

PowerSeries monomial(std::size_t n, cd coeff) {
  std::vector<cd> c(n + 1, cd{0.0, 0.0});
  c[n] = coeff;
  return PowerSeries(std::move(c));
}

PowerSeries constant(cd c) { return PowerSeries({c}); }

PowerSeries geometric(cd b, std::size_t n) { return binomial_series(1.0, b, n); }

PowerSeries lacunary(const std::vector<cd>& c, std::size_t cap) {
  if (c.empty()) fail("lacunary: empty coefficient list");
  std::size_t top = std::size_t{1} << (c.size() - 1);
  if (top > cap) fail("lacunary: 2^K exceeds the degree cap");
  std::vector<cd> out(top + 1, cd{0.0, 0.0});
  for (std::size_t k = 0; k < c.size(); ++k) out[std::size_t{1} << k] = c[k];
  return PowerSeries(std::move(out));
}

MobiusMap::MobiusMap(cd a_) : a(a_) {
  if (!(std::abs(a) < 1.0)) fail("MobiusMap: |a| must be < 1");
}

cd MobiusMap::operator()(cd z) const { return (a - z) / (1.0 - std::conj(a) * z); }

cd mobius_evaluate(const MobiusMap& m, cd z) {
  if (!finite(z)) fail("mobius_evaluate: non-finite argument");
  return m(z);
}

TestFamily::TestFamily(FamilyKind k, cd b_, double param_)
    : kind(k), b(b_), param(param_) {
  if (!(std::abs(b) < 1.0)) fail("test family: |b| must be < 1");
  if (kind == FamilyKind::fb || kind == FamilyKind::Fb) {
    if (!(param > 0.0 && param < 1.0)) fail("test family: lambda must lie in (0, 1)");
  } else {
    if (!(param >= 2.0)) fail("test family: p must lie in [2, inf]");
    if (kind == FamilyKind::kernel && std::abs(b) < 0.5)
      fail("kernel family requires |b| >= 1/2");
  }
}

namespace {

// |c_n| prefactor and binomial exponent of the family written as
// pref * (coefficients of (1 - conj(b) z)^(-s), possibly shifted by z).
void family_shape(const TestFamily& fam, double& pref, double& s) {
  const double bb = std::abs(fam.b);
  const double one_b2 = 1.0 - bb * bb;
  const double inv_p = std::isinf(fam.param) ? 0.0 : 1.0 / fam.param;
  switch (fam.kind) {
    case FamilyKind::fb:
      pref = std::pow(one_b2, (fam.param + 1.0) / 2.0);
      s = 1.0;
      break;
    case FamilyKind::Fb:
      pref = one_b2;
      s = (3.0 - fam.param) / 2.0;
      break;
    case FamilyKind::hb:
      pref = one_b2;
      s = 1.0 + inv_p;
      break;
    case FamilyKind::kernel:
      pref = std::pow(one_b2, 1.0 - inv_p) / bb;
      s = 1.0;
      break;
  }
}

double tail_bound_from_recurrence(double pref, double s, double bmod,
                                  std::size_t n) {
  if (bmod == 0.0) return 0.0;
  // |c_{N+1}| by running the magnitude recurrence, then a geometric bound
  // with ratio q >= |c_{k+1}|/|c_k| for all k > N.
  double mag = pref;
  for (std::size_t k = 1; k <= n + 1; ++k)
    mag *= (s + static_cast<double>(k) - 1.0) / static_cast<double>(k) * bmod;
  const double q =
      bmod * std::max(1.0, (s + static_cast<double>(n) + 1.0) / (static_cast<double>(n) + 2.0));
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return mag / (1.0 - q);
}

}  // namespace

double family_tail_bound(const TestFamily& fam, std::size_t n) {
  double pref, s;
  family_shape(fam, pref, s);
  return tail_bound_from_recurrence(pref, s, std::abs(fam.b), n);
}

PowerSeries test_function(const TestFamily& fam, std::size_t n, double tail_tol) {
  const double tail = family_tail_bound(fam, n);
  if (!(tail < tail_tol)) {
    double pref, s;
    family_shape(fam, pref, s);
    std::size_t hint = n;
    while (hint < (std::size_t{1} << 24) &&
           !(tail_bound_from_recurrence(pref, s, std::abs(fam.b), hint) < tail_tol))
      hint *= 2;
    std::ostringstream msg;
    msg << "test_function: coefficient tail " << tail << " exceeds " << tail_tol
        << " at N=" << n << " for |b|=" << std::abs(fam.b)
        << "; increase truncation to N>=" << hint;
    fail(msg.str());
  }

  const double bmod = std::abs(fam.b);
  const double one_b2 = 1.0 - bmod * bmod;
  const cd bb = std::conj(fam.b);
  const double inv_p = std::isinf(fam.param) ? 0.0 : 1.0 / fam.param;

  switch (fam.kind) {
    case FamilyKind::fb: {
      // sigma_b(z) - b = -(1-|b|^2) z / (1 - conj(b) z)
      const double pref = std::pow(one_b2, (fam.param + 1.0) / 2.0);
      std::vector<cd> c(n + 1, cd{0.0, 0.0});
      cd pw{1.0, 0.0};
      for (std::size_t k = 1; k <= n; ++k) {
        c[k] = -pref * pw;
        pw *= bb;
      }
      return PowerSeries(std::move(c));
    }
    case FamilyKind::Fb:
      return scale(binomial_series((3.0 - fam.param) / 2.0, fam.b, n), one_b2);
    case FamilyKind::hb:
      return scale(binomial_series(1.0 + inv_p, fam.b, n), one_b2);
    case FamilyKind::kernel: {
      const cd pref = std::pow(one_b2, 1.0 - inv_p) / bb;
      std::vector<cd> c(n + 1);
      cd pw{1.0, 0.0};
      for (std::size_t k = 0; k <= n; ++k) {
        c[k] = pref * pw;
        pw *= bb;
      }
      return PowerSeries(std::move(c));
    }
  }
  fail("test_function: unknown family");
}

std::string format_complex(cd z) {
  std::ostringstream out;
  out.precision(12);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return out.str();
}

cd parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return cd{std::stod(text), 0.0};
    return cd{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    fail("cannot parse complex number '" + text + "'");
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF")
    return std::numeric_limits<double>::infinity();
  return std::stod(text);
}

}  // namespace

PowerSeries build_series(const std::string& name, std::size_t n) {
  const auto parts = split(name, ':');
  const std::string& kind = parts[0];
  try {
    if (kind == "monomial" && parts.size() == 2)
      return monomial(static_cast<std::size_t>(std::stoul(parts[1])));
    if (kind == "constant" && parts.size() == 2)
      return constant(parse_complex(parts[1]));
    if (kind == "geometric" && parts.size() == 2)
      return geometric(parse_complex(parts[1]), n);
    if (kind == "lacunary" && parts.size() == 3) {
      const auto k = static_cast<std::size_t>(std::stoul(parts[1]));
      const auto cs = split(parts[2], ',');
      if (cs.size() != k + 1)
        fail("lacunary:K:c0,...,cK expects K+1 coefficients, got " +
             std::to_string(cs.size()));
      std::vector<cd> c;
      for (const auto& t : cs) c.push_back(parse_complex(t));
      return lacunary(c);
    }
    if ((kind == "fb" || kind == "Fb") && parts.size() == 3)
      return test_function(TestFamily(kind == "fb" ? FamilyKind::fb : FamilyKind::Fb,
                                      parse_complex(parts[1]), std::stod(parts[2])),
                           n);
    if ((kind == "hb" || kind == "kernel") && parts.size() == 3)
      return test_function(
          TestFamily(kind == "hb" ? FamilyKind::hb : FamilyKind::kernel,
                     parse_complex(parts[1]), parse_p(parts[2])),
          n);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    fail("malformed series builder '" + name + "'");
  }
  fail("unknown series builder '" + name + "'");
}

std::string series_to_json(const PowerSeries& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : f.coeffs) arr.push_back({c.real(), c.imag()});
  nlohmann::json out;
  out["coeffs"] = std::move(arr);
  if (f.truncated) out["truncated"] = true;
  return out.dump();
}

PowerSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("series JSON parse error: ") + e.what());
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    fail("series JSON must contain a \"coeffs\" array");
  std::vector<cd> c;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 2)
      fail("series JSON coefficients must be [re, im] pairs");
    c.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return PowerSeries(std::move(c), j.value("truncated", false));
}

PowerSeries load_series(const std::string& src, std::size_t n) {
  std::ifstream in(src);
  if (in.good()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return series_from_json(buf.str());
  }
  return build_series(src, n);
}

void save_series(const PowerSeries& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << series_to_json(f) << "\n";
}

}  // namespace morrey
