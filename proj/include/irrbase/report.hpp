#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "irrbase/action.hpp"
#include "irrbase/bounds.hpp"
#include "irrbase/check_report.hpp"
#include "irrbase/group_stats.hpp"

namespace irrbase {

// One group description: a named family with parameters, or explicit
// generator image arrays. Families: pgl, pgammal (subspace action, needs
// d/m/q), pair-sum, pair-leq (subspace-pair actions of PGL, needs d/m/q),
// sym, alt (natural action, needs degree), explicit (degree + generators).
struct GroupSpec {
  std::string name;  // optional; display_name() falls back to the family
  std::string family;
  int degree = 0;
  int d = 0, m = 0, q = 0;
  std::vector<std::vector<int>> generators;

  std::string display_name() const;
};

GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json group_spec_to_json(const GroupSpec& spec);

// Parses a JSON array of specs; errors carry the offending index.
std::vector<GroupSpec> corpus_from_json(const nlohmann::json& j);

// The shipped corpus: symmetric/alternating up to degree 6, cyclic and
// dihedral up to degree 8, the small projective groups, and both pair
// actions for (d, m, q) = (3, 1, 2).
std::vector<GroupSpec> default_corpus();

// A realized spec: the permutation group plus the bound-suite context
// (action kind and parameters; statistics are filled in by run_stats).
struct BuiltGroup {
  PermGroup group{0, {}};
  StatContext context;
};

BuiltGroup build_group(const GroupSpec& spec);

enum class RcMode { automatic, force, skip };

struct RunOptions {
  SearchBudget budget;
  RcMode rc = RcMode::automatic;
  bool timing = false;  // include wall-clock seconds in the JSON report
};

// All computed statistics for one group, plus the bound-suite outcome.
struct StatsReport {
  long n = 0;
  mpz_class order;
  SequenceResult min_base;
  SequenceResult max_irr;
  SetStats set_stats;  // max minimal base and height
  bool rc_ran = false;
  RcResult rc;
  std::string rc_skip_reason;
  GreedyResult greedy;
  bool transitive = false, primitive = false, soluble = false;
  CheckReport bounds;
  double seconds = 0.0;
};

// Builds the group, runs every enabled search, assembles the bound-suite
// context (including the companion subspace statistic for pair actions),
// and evaluates the suite. RcMode::automatic skips relational complexity
// on groups past the transporter-table caps instead of failing.
StatsReport run_stats(const GroupSpec& spec, const RunOptions& opts);

// Deterministic JSON report (schema "irrbase/1"); orders are decimal
// strings, permutations 0-based image arrays. Timing appears only when
// opts.timing is set so identical inputs give identical bytes.
nlohmann::json report_to_json(const GroupSpec& spec, const StatsReport& rep,
                              const RunOptions& opts);

std::string csv_header();
std::string csv_row(const GroupSpec& spec, const StatsReport& rep);

}  // namespace irrbase
