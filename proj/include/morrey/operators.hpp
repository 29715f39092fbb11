#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morrey/spaces.hpp"

namespace morrey {

// T_g f = int_0^z f g', I_g f = int_0^z f' g, M_g f = f g. All exact on
// coefficients; quadrature only ever enters through the norms.
enum class OpKind { Tg, Ig, Mg };
OpKind parse_op(const std::string& text);
std::string op_name(OpKind k);

struct OperatorSpec {
  OpKind kind;
  PowerSeries g;
};

// {"kind": "Tg"|"Ig"|"Mg", "g": <coefficient object or named builder>}
OperatorSpec operator_spec_from_json(const std::string& text,
                                     std::size_t trunc = kDefaultTrunc);
std::string operator_spec_to_json(const OperatorSpec& op);

PowerSeries apply(const OperatorSpec& op, const PowerSeries& f,
                  std::size_t cap = kProductCap);

// max_n |[M_g f]_n - f(0)g(0) delta_n0 - [I_g f]_n - [T_g f]_n| up to the
// common truncation degree.
double decomposition_check(const PowerSeries& g, const PowerSeries& f,
                           std::size_t cap = kProductCap);

// Admissible pairs: Morrey(lambda) -> Morrey(lambda) for lambda in (0,1),
// and Hardy(p) -> Morrey(1-2/p) for p in [2, inf] (p = 2 lands on the
// H^2-equivalent lambda = 0 box functional).
struct SpacePair {
  SpaceSpec domain;
  double cod_lambda = 0.5;

  bool hardy_domain() const { return domain.kind == SpaceSpec::Kind::hardy; }
  static SpacePair morrey_pair(double lambda);
  static SpacePair hardy_pair(double p);
  static SpacePair parse(const std::string& text);
  std::string describe() const;

  double domain_norm(const PowerSeries& f, const GridSettings& gs) const;
  double codomain_norm(const PowerSeries& f, const GridSettings& gs) const;
};

enum class Family { fb, Fb, hb, kernel, corpus };
Family parse_family(const std::string& text);
std::string family_name(Family f);

struct OpNormEstimate {
  double lower = 0.0;
  double comparator = 0.0;  // ||g||_inf for I_g/M_g, BMOA seminorm for T_g
  double ratio = 0.0;       // lower / comparator (0 when comparator is 0)
  Family family = Family::fb;
  std::string pair;
  std::string argmax;
  int clamped = 0;  // parameters where the measured domain norm exceeded 1
  GridSettings grid;

  std::string to_json() const;
};

// Admissible family parameters drawn from the grid (kernel skips |b| < 1/2,
// shells below min_shell_level are dropped).
std::vector<cd> family_parameters(const SpacePair& pair, Family family,
                                  const ParamGrid& bgrid, int min_shell_level = 0);
// Measured domain norms of the family members, aligned with
// family_parameters; sweeping several symbols against one family can share
// these denominators.
std::vector<double> family_domain_norms(const SpacePair& pair, Family family,
                                        const std::vector<cd>& params,
                                        const GridSettings& gs);

// Best ratio ||op f_b||_cod / denom over the parameter grid. For the paper
// families the denominator is the measured domain norm clamped to the
// uniform bound 1 (flagged via `clamped`); for Family::corpus the entries
// are supplied by the caller and the measured norm is used as is.
OpNormEstimate opnorm_lower(
    const OperatorSpec& op, const SpacePair& pair, Family family,
    const ParamGrid& bgrid, const GridSettings& gs,
    const std::vector<std::pair<std::string, PowerSeries>>* corpus = nullptr,
    int min_shell_level = 0, const std::vector<double>* domain_norms = nullptr);

double theorem_comparator(const OperatorSpec& op, const SpacePair& pair,
                          const GridSettings& gs);

// Desk proxies for the essential norm of T_g: per dilation level r the BMOA
// seminorm of g - g_r and the lower estimate for T_{g-g_r}, reported next
// to the VMOA distance profile of g.
struct EssentialProxyRow {
  double r;
  double bmoa_diff;
  double tg_lower;
};
struct EssentialProxy {
  std::vector<EssentialProxyRow> rows;
  std::vector<ProfilePoint> profile;
};
EssentialProxy essential_proxy(const PowerSeries& g, const SpacePair& pair,
                               const std::vector<double>& r_levels,
                               const GridSettings& gs);

}  // namespace morrey
