// bounds.hpp
// Structural detectors (transitivity, primitivity, solubility) and the
// exact inequality suite relating the computed statistics: the statistic
// chain, the 5*log n bounds, the log|G| bounds, the subspace-action and
// pair-action bounds. All comparisons are exact big-integer checks of
// exponentiated forms; no floating point.
#pragma once

#include <gmpxx.h>

#include <optional>

#include "irrbase/check_report.hpp"
#include "irrbase/permgroup.hpp"

namespace irrbase {

bool is_transitive(const PermGroup& g);
// Transitive with no nontrivial block system.
bool is_primitive(const PermGroup& g);
// Derived series reaches the trivial group.
bool is_soluble(const PermGroup& g);

// What the acting group and domain are, for selecting applicable checks.
enum class ContextKind {
  generic,          // plain permutation group
  subspace_points,  // PGL/PGammaL on m-subspaces of F_q^d
  subspace_pairs,   // PGL on direct-sum or contained subspace pairs
};

struct StatContext {
  ContextKind kind = ContextKind::generic;
  long n = 0;
  mpz_class order;
  // -1 marks a statistic as not computed; its checks are skipped.
  int b = -1, B = -1, H = -1, I = -1, rc = -1, greedy = -1;
  bool transitive = false, primitive = false, soluble = false;
  // Set for subspace actions (f from q = p^f).
  std::optional<int> d, m, q, f;
  // I of PGL_d(q) on m-subspaces, for the pair-action comparison.
  std::optional<int> companion_I;
};

CheckReport run_bound_suite(const StatContext& c);

}  // namespace irrbase
