#include <doctest.h>

#include <set>
#include <stdexcept>
#include <utility>

#include "irrbase/action.hpp"
#include "irrbase/group_stats.hpp"
#include "irrbase/reference.hpp"
#include "irrbase/stab_chain.hpp"

using namespace irrbase;

namespace {

PermGroup sym(int n) {
  std::vector<int> t(n), c(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  if (n <= 2) return PermGroup::from_images(n, {t});
  return PermGroup::from_images(n, {t, c});
}

PermGroup alt(int n) {
  std::vector<int> three(n), c(n);
  for (int i = 0; i < n; ++i) three[i] = c[i] = i;
  three[0] = 1, three[1] = 2, three[2] = 0;
  if (n % 2 == 1)
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  else
    for (int i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));  // fix 0, cycle the rest
  if (n <= 3) return PermGroup::from_images(n, {three});
  return PermGroup::from_images(n, {three, c});
}

PermGroup cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup::from_images(n, {c});
}

PermGroup dihedral(int n) {
  std::vector<int> c(n), r(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n, r[i] = (n - i) % n;
  return PermGroup::from_images(n, {c, r});
}

struct AllStats {
  int b, B, H, I;
};

AllStats pruned(const PermGroup& g, const SearchBudget& budget = {}) {
  SetStats s = minimal_base_and_height(g, budget);
  return AllStats{min_base(g, budget).value, s.max_minimal.value, s.height.value,
                  max_irredundant_base(g, budget).value};
}

// Is there a group element mapping lam[i] -> sig[i] for every i in idx?
bool transports(const std::vector<Perm>& elems, const std::vector<int>& lam,
                const std::vector<int>& sig, const std::vector<int>& idx) {
  for (const auto& g : elems) {
    bool ok = true;
    for (int i : idx)
      if (g[lam[i]] != sig[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// The certificate for value k+1 must be a pair of tuples that agree on
// every k-subtuple's orbit but not as whole tuples.
void check_certificate(const PermGroup& g, const RcCertificate& cert) {
  auto elems = reference::element_list(g);
  int l = (int)cert.lambda.size();
  REQUIRE(cert.sigma.size() == cert.lambda.size());
  REQUIRE(cert.k < l);
  std::vector<int> all(l);
  for (int i = 0; i < l; ++i) all[i] = i;
  CHECK_FALSE(transports(elems, cert.lambda, cert.sigma, all));
  // every k-subset transports
  std::vector<int> idx(cert.k);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != cert.k) continue;
    idx.clear();
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    CHECK(transports(elems, cert.lambda, cert.sigma, idx));
  }
}

}  // namespace

TEST_CASE("symmetric and alternating frozen values") {
  for (int n = 2; n <= 6; ++n) {
    AllStats s = pruned(sym(n));
    CHECK(s.b == n - 1);
    CHECK(s.B == n - 1);
    CHECK(s.H == n - 1);
    CHECK(s.I == n - 1);
    CHECK(relational_complexity(sym(n), n).value == 2);
  }
  int expect_b[] = {1, 2, 3, 4};  // A_3..A_6
  int expect_rc[] = {2, 3, 4, 5};
  for (int n = 3; n <= 6; ++n) {
    AllStats s = pruned(alt(n));
    CHECK(s.b == expect_b[n - 3]);
    CHECK(s.I == expect_b[n - 3]);
    CHECK(s.B == expect_b[n - 3]);
    CHECK(s.H == expect_b[n - 3]);
    CHECK(relational_complexity(alt(n), n).value == expect_rc[n - 3]);
  }
}

TEST_CASE("projective groups: frozen values") {
  PermGroup g32 = build_action(GroupKind::pgl, 3, 1, 2).group();
  AllStats s32 = pruned(g32);
  CHECK(s32.b == 3);
  CHECK(s32.B == 3);
  CHECK(s32.H == 3);
  CHECK(s32.I == 3);
  CHECK(relational_complexity(g32, 7).value == 3);

  PermGroup g33 = build_action(GroupKind::pgl, 3, 1, 3).group();
  CHECK(group_order(g33) == 5616);
  AllStats s33 = pruned(g33);
  CHECK(s33.b == 4);
  CHECK(s33.B == 4);
  CHECK(s33.H == 4);
  CHECK(s33.I == 5);  // strictly above the height: I > H happens here
  CHECK(relational_complexity(g33, 13).value == 3);
}

TEST_CASE("pair actions: frozen values") {
  PermGroup sum = build_pair_action(ActionKind::pair_direct_sum, 3, 1, 2).group();
  PermGroup leq = build_pair_action(ActionKind::pair_contained, 3, 1, 2).group();
  AllStats ss = pruned(sum);
  CHECK(ss.b == 2);
  CHECK(ss.B == 3);
  CHECK(ss.H == 3);
  CHECK(ss.I == 3);
  CHECK(relational_complexity(sum, 6).value == 3);
  AllStats sl = pruned(leq);
  CHECK(sl.b == 2);
  CHECK(sl.B == 3);
  CHECK(sl.H == 3);
  CHECK(sl.I == 4);
  CHECK(relational_complexity(leq, 6).value == 3);
}

TEST_CASE("intransitive direct products add across orbits") {
  // <(01)> x <(23)>: every statistic is the sum of the per-orbit values
  PermGroup g = PermGroup::from_images(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  AllStats s = pruned(g);
  CHECK(s.b == 2);
  CHECK(s.B == 2);
  CHECK(s.H == 2);
  CHECK(s.I == 2);
  // <(01)(23)>: diagonal C_2, one point forces the rest
  PermGroup diag = PermGroup::from_images(4, {{1, 0, 3, 2}});
  AllStats sd = pruned(diag);
  CHECK(sd.b == 1);
  CHECK(sd.B == 1);
  CHECK(sd.H == 1);
  CHECK(sd.I == 1);
}

TEST_CASE("pruned searches match the unpruned reference") {
  std::vector<PermGroup> groups;
  groups.push_back(sym(4));
  groups.push_back(alt(4));
  groups.push_back(cyclic(6));
  groups.push_back(dihedral(5));
  groups.push_back(PermGroup::from_images(4, {{1, 0, 3, 2}}));
  groups.push_back(build_action(GroupKind::pgl, 2, 1, 3).group());
  for (const auto& g : groups) {
    reference::Stats ref = reference::stats(g);
    AllStats s = pruned(g);
    CHECK(s.b == ref.b);
    CHECK(s.B == ref.B);
    CHECK(s.H == ref.H);
    CHECK(s.I == ref.I);
    int ref_rc = reference::relational_complexity(g, 5);
    RcResult rc = relational_complexity(g, 5);
    CHECK(rc.value == ref_rc);
  }
}

TEST_CASE("serial and parallel runs agree, including node counts") {
  SearchBudget ser, par;
  ser.parallel = false;
  par.parallel = true;
  std::vector<PermGroup> groups;
  groups.push_back(sym(6));
  groups.push_back(alt(6));
  groups.push_back(build_action(GroupKind::pgl, 3, 1, 2).group());
  groups.push_back(build_pair_action(ActionKind::pair_contained, 3, 1, 2).group());
  for (const auto& g : groups) {
    SequenceResult b1 = min_base(g, ser), b2 = min_base(g, par);
    CHECK(b1.value == b2.value);
    CHECK(b1.witness == b2.witness);
    CHECK(b1.nodes == b2.nodes);
    SequenceResult i1 = max_irredundant_base(g, ser), i2 = max_irredundant_base(g, par);
    CHECK(i1.value == i2.value);
    CHECK(i1.witness == i2.witness);
    CHECK(i1.nodes == i2.nodes);
    SetStats s1 = minimal_base_and_height(g, ser), s2 = minimal_base_and_height(g, par);
    CHECK(s1.max_minimal.value == s2.max_minimal.value);
    CHECK(s1.max_minimal.witness == s2.max_minimal.witness);
    CHECK(s1.max_minimal.nodes == s2.max_minimal.nodes);
    CHECK(s1.height.value == s2.height.value);
    CHECK(s1.height.nodes == s2.height.nodes);
    RcResult r1 = relational_complexity(g, g.degree, ser);
    RcResult r2 = relational_complexity(g, g.degree, par);
    CHECK(r1.value == r2.value);
    CHECK(r1.nodes == r2.nodes);
  }
}

TEST_CASE("witnesses have the stated properties") {
  PermGroup g = build_action(GroupKind::pgl, 3, 1, 2).group();

  SequenceResult b = min_base(g);
  StabChain bchain(g, b.witness);
  CHECK(bchain.level_order((int)b.witness.size()) == 1);  // a base
  CHECK((int)b.witness.size() == b.value);

  SequenceResult irr = max_irredundant_base(g);
  StabChain ichain(g, irr.witness);
  CHECK(ichain.level_order((int)irr.witness.size()) == 1);
  for (size_t i = 0; i < irr.witness.size(); ++i)
    CHECK(ichain.level_order((int)i) > ichain.level_order((int)i + 1));  // strict descent

  SetStats s = minimal_base_and_height(g);
  // B's witness: a base where every point is needed
  std::vector<int> w = s.max_minimal.witness;
  CHECK(StabChain(g, w).level_order((int)w.size()) == 1);
  for (size_t drop = 0; drop < w.size(); ++drop) {
    std::vector<int> rest;
    for (size_t i = 0; i < w.size(); ++i)
      if (i != drop) rest.push_back(w[i]);
    CHECK(StabChain(g, rest).level_order((int)rest.size()) > 1);
  }
  // H's witness: an independent set (every point needed, base or not)
  std::vector<int> h = s.height.witness;
  CHECK((int)h.size() == s.height.value);
  for (size_t drop = 0; drop < h.size(); ++drop) {
    std::vector<int> rest;
    for (size_t i = 0; i < h.size(); ++i)
      if (i != drop) rest.push_back(h[i]);
    CHECK(StabChain(g, rest).level_order((int)rest.size()) >
          StabChain(g, h).level_order((int)h.size()));
  }
}

TEST_CASE("relational complexity certificates check out") {
  for (auto [make, len] : std::initializer_list<std::pair<PermGroup, int>>{
           {alt(5), 5}, {alt(6), 6}, {build_action(GroupKind::pgl, 3, 1, 2).group(), 7}}) {
    RcResult rc = relational_complexity(make, len);
    REQUIRE(rc.value >= 3);  // certificate present past the base case
    REQUIRE(rc.certificate.has_value());
    CHECK(rc.certificate->k == rc.value - 1);
    check_certificate(make, *rc.certificate);
  }
  // value 2 carries no certificate: the level-1 round is never searched
  RcResult s4 = relational_complexity(sym(4), 4);
  CHECK(s4.value == 2);
  CHECK_FALSE(s4.certificate.has_value());
  // trivial group: complexity 1 by convention
  CHECK(relational_complexity(PermGroup{3, {}}, 3).value == 1);
}

TEST_CASE("irredundant length is monotone in the group") {
  // subgroup: I cannot exceed the overgroup's value
  int i_a4 = max_irredundant_base(alt(4)).value;
  int i_s4 = max_irredundant_base(sym(4)).value;
  CHECK(i_a4 <= i_s4);
  // index-2 subgroup: at most one extra step for the overgroup
  CHECK(i_s4 <= i_a4 + 1);

  // adjoining a field automorphism of order 2: exactly one extra step here
  int i_pgl = max_irredundant_base(build_action(GroupKind::pgl, 2, 1, 4).group()).value;
  int i_pgml = max_irredundant_base(build_action(GroupKind::pgammal, 2, 1, 4).group()).value;
  CHECK(i_pgl == 3);
  CHECK(i_pgml == 4);
}

TEST_CASE("greedy base") {
  GreedyResult g4 = greedy_base(sym(4));
  CHECK(g4.sequence.size() == 3);
  CHECK(g4.stabilizer_builds == 3);
  CHECK(StabChain(sym(4), g4.sequence).level_order(3) == 1);

  GreedyResult trivial = greedy_base(PermGroup{5, {}});
  CHECK(trivial.sequence.empty());

  GreedyResult g33 = greedy_base(build_action(GroupKind::pgl, 3, 1, 3).group());
  CHECK(g33.sequence.size() == 4);
}

TEST_CASE("budget exhaustion throws") {
  SearchBudget tiny;
  tiny.node_cap = 5;
  CHECK_THROWS_AS(min_base(sym(6), tiny), budget_exhausted);
  CHECK_THROWS_AS(max_irredundant_base(sym(6), tiny), budget_exhausted);
  CHECK_THROWS_AS(minimal_base_and_height(sym(6), tiny), budget_exhausted);
  CHECK_THROWS_AS(relational_complexity(sym(6), 6, tiny), budget_exhausted);
}
