#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "morrey/operators.hpp"

namespace morrey {

// One runnable experiment per theorem or lemma. Windowed checks compare
// measured quantities against their paper comparator as ratios and assert
// containment in a calibrated window; one-sided and exact checks carry
// their own fixed tolerances.
enum class Check {
  lp,    // Littlewood-Paley identity
  lem1,  // Morrey form equivalence
  lem2,  // growth-rate functional
  lem3,  // weighted disc kernel integral bound
  lem4,  // test family norm uniformity
  lem5,  // dilation proxy vs shell proxy for dist(., VMOA)
  thm1,  // I_g on Morrey: upper inequality + family lower bounds
  thm2,  // T_g on Morrey: family lower bounds vs BMOA seminorm
  thm3,  // I_g: Hardy -> Morrey
  thm4,  // T_g: Hardy -> Morrey
  thm5,  // essential proxy for I_g on Morrey (deep-shell sweep)
  thm6,  // essential proxy for T_g on Morrey vs VMOA distance
  thm7,  // essential proxy for I_g, Hardy domain
  thm8,  // essential proxy for T_g, Hardy domain
  thmA,  // Carleson embedding constant
  thmB,  // Garsia vs Mobius BMOA norm
  cor1,  // multiplier on Morrey + decomposition identity
  cor2,  // multiplier, Hardy domain
  kern,  // boundary kernel inequality
  boxw,  // box weight lower bound
  cm,    // Hardy composition bound
};

std::vector<Check> all_checks();
Check parse_check(const std::string& text);
std::string check_name(Check c);
// Windowed checks need a calibration file; the others are self-contained.
bool check_windowed(Check c);

struct CheckParams {
  std::vector<double> lambdas{0.25, 0.5, 0.75};
  std::vector<double> ps{2.0, 3.0, 4.0,
                         std::numeric_limits<double>::infinity()};
  std::uint64_t seed = 0;
};

struct CorpusEntry {
  std::string name;
  PowerSeries series;
  bool hinf_symbol = false;  // bounded symbols for I_g / M_g
  bool bmoa_symbol = false;  // symbols for T_g and the essential checks
  bool morrey_arg = false;
  bool hardy_arg = false;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<cd> family_b;  // parameter grid for the paper families
  std::uint64_t seed = 0;

  static Corpus standard(const GridSettings& gs, std::uint64_t seed = 0);
  const CorpusEntry& at(const std::string& name) const;
  std::vector<const CorpusEntry*> select(bool CorpusEntry::* tag) const;
};

struct RatioRow {
  std::string name;
  double measured = 0.0;
  double comparator = 0.0;
  double ratio = 0.0;
  double ratio_refined = 0.0;
  double delta = 0.0;
  std::string verdict;
  std::string window_key;  // empty for non-windowed rows
  bool pass = true;
};

struct RatioTable {
  std::string check;
  std::string param;
  std::vector<RatioRow> rows;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  bool stable = true;
  bool pass = true;
};

struct Windows {
  std::string grid;
  std::map<std::string, std::pair<double, double>> bounds;

  void save(const std::string& path) const;
  static Windows load(const std::string& path);
  std::string to_json() const;
  static Windows from_json(const std::string& text);
};

// Runs one check at the given settings plus one refinement step. Windowed
// rows are judged against `windows` when provided; with a null window file
// they are judged on refinement stability alone (the calibration mode).
std::vector<RatioTable> run_check(Check c, const CheckParams& params,
                                  const Corpus& corpus, const GridSettings& gs,
                                  const Windows* windows);

// Runs every windowed check, verifies < 25% refinement drift per row (the
// offending row is named otherwise) and records per-key ratio ranges over
// both refinement levels.
Windows calibrate(const CheckParams& params, const Corpus& corpus,
                  const GridSettings& gs);

void write_tables_csv(std::ostream& out, const std::vector<RatioTable>& tables);
std::string tables_to_json(const std::vector<RatioTable>& tables);
bool all_pass(const std::vector<RatioTable>& tables);

}  // namespace morrey
