// Command-line front end: norms, operator application, operator-norm
// sweeps, theorem verification and calibration.
//
// Exit codes: 0 = success / all rows pass, 1 = violation or computation
// failure, 2 = usage or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "morrey/operators.hpp"
#include "morrey/spaces.hpp"
#include "morrey/verify.hpp"

namespace {

struct CommonOpts {
  morrey::GridSettings grid;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--trunc", opts.grid.trunc, "series truncation degree N");
  cmd->add_option("--quad-order", opts.grid.gl_order,
                  "Gauss-Legendre order per radial panel");
  cmd->add_option("--radial-panels", opts.grid.radial_panels,
                  "dyadic radial panels toward the boundary");
  cmd->add_option("--inner-panels", opts.grid.inner_panels,
                  "dyadic radial panels toward the origin");
  cmd->add_option("--box-panels", opts.grid.box_panels,
                  "dyadic radial panels inside Carleson boxes");
  cmd->add_option("--angular", opts.grid.angular, "angular node count M");
  cmd->add_option("--depth", opts.grid.depth, "sup-grid depth J");
  cmd->add_option("--threads", opts.threads, "worker thread cap (0 = hardware)");
  cmd->add_option("--seed", opts.seed, "seed for randomized corpus rows");
  cmd->add_option("--format", opts.format, "output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--output", opts.output, "output path (default stdout)");
}

void apply_common(const CommonOpts& opts) {
  opts.grid.validate();
  morrey::set_max_threads(opts.threads);
  if (opts.format != "json" && opts.format != "csv")
    throw std::invalid_argument("format must be json or csv");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw std::invalid_argument("cannot open '" + opts.output + "'");
  out << text << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"morrey: norms, integral operators and theorem checks for "
               "analytic function spaces on the unit disc"};
  app.require_subcommand(1);
  const char* env_config = std::getenv("MORREY_CONFIG");
  app.set_config("--config", env_config ? env_config : "",
                 "configuration file (key=value lines)");

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "evaluate a norm functional");
  CommonOpts norm_opts;
  std::string space_arg, form_arg, series_arg;
  norm_cmd->add_option("--space", space_arg,
                       "space spec: hardy:p | morrey:lambda | bmoa")
      ->required();
  norm_cmd->add_option("--form", form_arg,
                       "norm form: box|mobius|log|boundary|garsia|circle-sup");
  norm_cmd->add_option("--series", series_arg, "series file or named builder")
      ->required();
  norm_cmd->fallthrough();
  add_common(norm_cmd, norm_opts);

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "apply T_g, I_g or M_g");
  CommonOpts apply_opts;
  std::string op_arg, g_arg, f_arg, spec_arg;
  apply_cmd->add_option("--op", op_arg, "operator kind: Tg|Ig|Mg");
  apply_cmd->add_option("--g", g_arg, "symbol series (file or builder)");
  apply_cmd->add_option("--spec", spec_arg,
                        "operator spec JSON file {\"kind\":...,\"g\":...}");
  apply_cmd->add_option("--f", f_arg, "argument series (file or builder)")
      ->required();
  apply_cmd->fallthrough();
  add_common(apply_cmd, apply_opts);

  // opnorm
  auto* opnorm_cmd =
      app.add_subcommand("opnorm", "operator-norm lower estimate via test families");
  CommonOpts opnorm_opts;
  std::string on_op, on_g, on_pair, on_family;
  bool on_deep = false;
  opnorm_cmd->add_option("--op", on_op, "operator kind: Tg|Ig|Mg")->required();
  opnorm_cmd->add_option("--g", on_g, "symbol series (file or builder)")->required();
  opnorm_cmd->add_option("--pair", on_pair,
                         "space pair: morrey:lambda | hardy:p (codomain implied)")
      ->required();
  opnorm_cmd->add_option("--family", on_family,
                         "test family: fb|Fb|hb|kernel|corpus (default by pair)");
  opnorm_cmd->add_flag("--deep", on_deep,
                       "restrict the sweep to the deepest parameter shell");
  opnorm_cmd->fallthrough();
  add_common(opnorm_cmd, opnorm_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a theorem/lemma check");
  CommonOpts verify_opts;
  std::string check_arg, calibration_path;
  std::vector<double> lambda_override;
  std::vector<std::string> p_override;
  verify_cmd->add_option("check", check_arg, "check name or 'all'")->required();
  verify_cmd->add_option("--lambda", lambda_override,
                         "lambda values (default 0.25 0.5 0.75)");
  verify_cmd->add_option("--p", p_override, "p values (default 2 3 4 inf)");
  verify_cmd->add_option("--calibration", calibration_path,
                         "calibration window file (required for windowed checks)");
  std::string corpus_name = "std";
  verify_cmd->add_option("--corpus", corpus_name, "corpus name (std)");
  verify_cmd->fallthrough();
  add_common(verify_cmd, verify_opts);

  // calibrate
  auto* cal_cmd =
      app.add_subcommand("calibrate", "record equivalence windows for the corpus");
  CommonOpts cal_opts;
  std::vector<double> cal_lambda;
  std::vector<std::string> cal_p;
  cal_cmd->add_option("--lambda", cal_lambda, "lambda values");
  cal_cmd->add_option("--p", cal_p, "p values");
  cal_cmd->fallthrough();
  add_common(cal_cmd, cal_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto parse_ps = [](const std::vector<std::string>& texts) {
    std::vector<double> ps;
    for (const auto& t : texts)
      ps.push_back(t == "inf" ? std::numeric_limits<double>::infinity()
                              : std::stod(t));
    return ps;
  };

  if (norm_cmd->parsed()) {
    apply_common(norm_opts);
    const morrey::SpaceSpec spec = morrey::SpaceSpec::parse(space_arg);
    const morrey::PowerSeries f =
        morrey::load_series(series_arg, norm_opts.grid.trunc);
    morrey::NormReport report;
    if (form_arg.empty()) {
      report = morrey::space_norm(f, spec, norm_opts.grid);
    } else {
      const morrey::NormForm form = morrey::parse_form(form_arg);
      switch (spec.kind) {
        case morrey::SpaceSpec::Kind::hardy:
          if (form != morrey::NormForm::circle_sup)
            throw std::invalid_argument("hardy norms use form circle-sup");
          report = morrey::hardy_norm(f, spec.param, norm_opts.grid);
          break;
        case morrey::SpaceSpec::Kind::bmoa:
          report = morrey::bmoa_norm(f, form, norm_opts.grid);
          break;
        case morrey::SpaceSpec::Kind::morrey:
          report = morrey::morrey_norm(f, spec.param, form, norm_opts.grid);
          break;
      }
    }
    emit(norm_opts, norm_opts.format == "json"
                        ? report.to_json()
                        : morrey::NormReport::csv_header() + "\n" + report.to_csv());
    return 0;
  }

  if (apply_cmd->parsed()) {
    apply_common(apply_opts);
    morrey::OperatorSpec op{morrey::OpKind::Tg, morrey::PowerSeries{}};
    if (!spec_arg.empty()) {
      std::ifstream in(spec_arg);
      if (!in) throw std::invalid_argument("cannot open '" + spec_arg + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      op = morrey::operator_spec_from_json(buf.str(), apply_opts.grid.trunc);
    } else if (!op_arg.empty() && !g_arg.empty()) {
      op = {morrey::parse_op(op_arg),
            morrey::load_series(g_arg, apply_opts.grid.trunc)};
    } else {
      throw std::invalid_argument("apply needs --op and --g, or --spec");
    }
    const morrey::PowerSeries f = morrey::load_series(f_arg, apply_opts.grid.trunc);
    const morrey::PowerSeries result = morrey::apply(op, f);
    if (apply_opts.output.empty())
      std::cout << morrey::series_to_json(result) << "\n";
    else
      morrey::save_series(result, apply_opts.output);
    return 0;
  }

  if (opnorm_cmd->parsed()) {
    apply_common(opnorm_opts);
    const morrey::OperatorSpec op{morrey::parse_op(on_op),
                                  morrey::load_series(on_g, opnorm_opts.grid.trunc)};
    const morrey::SpacePair pair = morrey::SpacePair::parse(on_pair);
    morrey::Family family;
    if (on_family.empty())
      family = pair.hardy_domain() ? morrey::Family::hb : morrey::Family::fb;
    else
      family = morrey::parse_family(on_family);
    morrey::OpNormEstimate est;
    if (family == morrey::Family::corpus) {
      const morrey::Corpus corpus =
          morrey::Corpus::standard(opnorm_opts.grid, opnorm_opts.seed);
      std::vector<std::pair<std::string, morrey::PowerSeries>> entries;
      for (const auto& e : corpus.entries)
        if (pair.hardy_domain() ? e.hardy_arg : e.morrey_arg)
          entries.emplace_back(e.name, e.series);
      est = morrey::opnorm_lower(op, pair, family,
                                 morrey::ParamGrid::family(opnorm_opts.grid),
                                 opnorm_opts.grid, &entries);
    } else {
      est = morrey::opnorm_lower(op, pair, family,
                                 morrey::ParamGrid::family(opnorm_opts.grid),
                                 opnorm_opts.grid, nullptr,
                                 on_deep ? opnorm_opts.grid.depth : 0);
    }
    emit(opnorm_opts, est.to_json());
    return 0;
  }

  if (verify_cmd->parsed() || cal_cmd->parsed()) {
    const bool calibrating = cal_cmd->parsed();
    CommonOpts& opts = calibrating ? cal_opts : verify_opts;
    apply_common(opts);
    if (corpus_name != "std")
      throw std::invalid_argument("unknown corpus '" + corpus_name +
                                  "' (available: std)");
    morrey::CheckParams params;
    params.seed = opts.seed;
    if (calibrating) {
      if (!cal_lambda.empty()) params.lambdas = cal_lambda;
      if (!cal_p.empty()) params.ps = parse_ps(cal_p);
    } else {
      if (!lambda_override.empty()) params.lambdas = lambda_override;
      if (!p_override.empty()) params.ps = parse_ps(p_override);
    }
    for (double l : params.lambdas)
      if (!(l > 0.0 && l < 1.0))
        throw std::invalid_argument("lambda out of range (0, 1)");
    const morrey::Corpus corpus = morrey::Corpus::standard(opts.grid, opts.seed);

    if (calibrating) {
      const morrey::Windows w = morrey::calibrate(params, corpus, opts.grid);
      const std::string path =
          opts.output.empty() ? "calibration.json" : opts.output;
      w.save(path);
      std::cout << "calibration written to " << path << " (" << w.bounds.size()
                << " windows)\n";
      return 0;
    }

    std::vector<morrey::Check> checks;
    if (check_arg == "all") checks = morrey::all_checks();
    else checks.push_back(morrey::parse_check(check_arg));

    std::optional<morrey::Windows> windows;
    bool needs_windows = false;
    for (morrey::Check c : checks) needs_windows |= morrey::check_windowed(c);
    if (needs_windows) {
      if (calibration_path.empty())
        throw std::invalid_argument(
            "calibration required: windowed checks need --calibration <file> "
            "(run 'morrey calibrate' first)");
      windows = morrey::Windows::load(calibration_path);
    }

    std::vector<morrey::RatioTable> tables;
    for (morrey::Check c : checks) {
      auto part = morrey::run_check(c, params, corpus, opts.grid,
                                    windows ? &*windows : nullptr);
      for (auto& t : part) tables.push_back(std::move(t));
    }
    if (opts.format == "csv") {
      std::ostringstream buf;
      morrey::write_tables_csv(buf, tables);
      std::string text = buf.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      emit(opts, text);
    } else {
      emit(opts, morrey::tables_to_json(tables));
    }
    int failures = 0;
    for (const auto& t : tables) {
      for (const auto& r : t.rows)
        if (!r.pass) {
          std::cerr << "FAIL " << t.check << " " << t.param << " row '" << r.name
                    << "': " << r.verdict << "\n";
          ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
