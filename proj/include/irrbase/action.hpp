// action.hpp
// Permutation actions of projective groups on the m-subspaces of F_q^d
// and on subspace pairs (complementary or nested), as indexed point
// tables with induced generator permutations.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "irrbase/permgroup.hpp"
#include "irrbase/subspace.hpp"

namespace irrbase {

enum class ActionKind { points, pair_direct_sum, pair_contained };
enum class GroupKind { pgl, pgammal };

// Unordered subspace pair in canonical ordered form: the m-dimensional
// member first, its (d-m)-dimensional partner second. Requires m < d/2,
// so the dimensions differ and the ordered form is unique.
struct PairPoint {
  Subspace small, big;
  ActionKind kind = ActionKind::pair_direct_sum;

  bool operator==(const PairPoint& o) const { return small == o.small && big == o.big; }
  bool operator<(const PairPoint& o) const {
    if (small < o.small) return true;
    if (o.small < small) return false;
    return big < o.big;
  }
};

// Immutable once built; points are sorted, so index lookups are binary
// searches. The table keeps its field alive via shared ownership.
struct ActionTable {
  ActionKind kind = ActionKind::points;
  GroupKind group_kind = GroupKind::pgl;
  int d = 0, m = 0;
  std::shared_ptr<const Field> field;
  std::vector<Subspace> points;   // when kind == points
  std::vector<PairPoint> pairs;   // otherwise
  std::vector<Perm> generators;
  std::vector<std::string> labels;  // generator provenance, parallel to generators

  int n() const {
    return kind == ActionKind::points ? (int)points.size() : (int)pairs.size();
  }
  int index_of(const Subspace& u) const;   // throws when absent
  int index_of(const PairPoint& pt) const;
  PermGroup group() const { return PermGroup{n(), generators}; }
};

// Action of PGL_d(q) (or PGammaL_d(q): same plus the Frobenius map when
// f > 1) on the m-subspaces. 1 <= m <= d-1.
ActionTable build_action(GroupKind kind, int d, int m, int q, std::size_t cap = 100000);

// Action on pairs {U, W} with dim U = m, dim W = d-m and either
// U + W = F_q^d (direct sum) or U <= W (contained). Requires d >= 3 and
// 1 <= m < d/2. The per-U partner count is checked to be constant.
ActionTable build_pair_action(ActionKind kind, int d, int m, int q,
                              GroupKind group_kind = GroupKind::pgl,
                              std::size_t cap = 100000);

}  // namespace irrbase
