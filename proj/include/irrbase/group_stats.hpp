// group_stats.hpp
// Exact base-related statistics of a permutation group by pruned
// exhaustive search: minimum base, maximum irredundant base, maximum
// minimal base, height, relational complexity, and a greedy base.
// Searches are budgeted; exhaustion is a hard, reported failure.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrbase/permgroup.hpp"

namespace irrbase {

struct budget_exhausted : std::runtime_error {
  explicit budget_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Caps for the exhaustive searches. The node cap applies per statistic
// and is the deterministic budget; the wall-clock cap (0 = disabled) is
// an escape hatch whose trigger point is inherently nondeterministic.
struct SearchBudget {
  std::uint64_t node_cap = 20000000;
  double time_cap_seconds = 0;
  bool run_min_base = true;
  bool run_max_irredundant = true;
  bool run_max_minimal = true;
  bool run_height = true;
  bool run_rc = true;
  bool run_greedy = true;
  bool parallel = true;
  int rc_max_len = 0;  // 0: use the degree

  void validate() const;
};

struct SequenceResult {
  int value = 0;
  std::vector<int> witness;
  std::uint64_t nodes = 0;
};

struct SetResult {
  int value = 0;
  std::vector<int> witness;  // ascending point set
  std::uint64_t nodes = 0;
};

struct RcCertificate {
  std::vector<int> lambda, sigma;  // inequivalent but k-subtuple complete
  int k = 0;
};

struct RcResult {
  int value = 1;
  std::optional<RcCertificate> certificate;  // witnesses value-1 completeness
  std::uint64_t nodes = 0;
};

struct GreedyResult {
  std::vector<int> sequence;
  int stabilizer_builds = 0;
};

mpz_class group_order(const PermGroup& g);

// Shortest base: iterative deepening over point sequences, candidates
// restricted to orbit representatives of the current stabilizer.
SequenceResult min_base(const PermGroup& g, const SearchBudget& budget = {});

// Longest irredundant base (every point strictly shrinks the stabilizer,
// final stabilizer trivial). Depth-first over orbit representatives.
SequenceResult max_irredundant_base(const PermGroup& g, const SearchBudget& budget = {});

// Largest minimal base: subsets searched in ascending point order,
// maintaining that removing any chosen point strictly enlarges the
// stabilizer, pruned by stabilizer-order bounds.
SetResult max_minimal_base(const PermGroup& g, const SearchBudget& budget = {});

// Largest subset all of whose proper subsets have strictly larger
// pointwise stabilizers; same engine as max_minimal_base.
SetResult height(const PermGroup& g, const SearchBudget& budget = {});

// Both set statistics from a single engine run (they share the search
// tree, so computing them together halves the work).
struct SetStats {
  SetResult max_minimal, height;
};
SetStats minimal_base_and_height(const PermGroup& g, const SearchBudget& budget = {});

// Smallest k such that any two k-subtuple-complete tuples (length <=
// max_len) lie in the same orbit. Distinct-entry tuples only (sound for
// k >= 2; repeated entries reduce to shorter distinct tuples); tuples
// enumerated as orbit representatives extended a point at a time;
// completeness tested by transporter queries on stabilizer chains.
RcResult relational_complexity(const PermGroup& g, int max_len, const SearchBudget& budget = {});

// Greedy base: repeatedly pick the smallest point of a largest orbit of
// the current stabilizer until it is trivial.
GreedyResult greedy_base(const PermGroup& g);

}  // namespace irrbase
