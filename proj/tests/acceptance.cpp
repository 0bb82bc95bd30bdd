// acceptance.cpp
// One PASS/FAIL line per shipped acceptance criterion, with timings.
// Exits with the number of failing criteria. The checks pin the library
// against exact small-instance values and property suites: counting
// formulas, the two-sided irredundant bounds, witness-chain certificates
// and algebra dimensions, the statistic chain and 5*log2(n) bounds over
// the default corpus, the pair-action comparison, greedy guarantees,
// unpruned-oracle equivalence, and the tail minimal-base claim.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "irrbase/action.hpp"
#include "irrbase/field.hpp"
#include "irrbase/group_stats.hpp"
#include "irrbase/reference.hpp"
#include "irrbase/report.hpp"
#include "irrbase/subspace.hpp"
#include "irrbase/witness.hpp"

using namespace irrbase;

namespace {

mpz_class pow_z(long base, unsigned long e) {
  mpz_class b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

struct CorpusRun {
  std::vector<GroupSpec> specs;
  std::vector<StatsReport> reports;
};
CorpusRun corpus_run;  // filled by criterion 5, reused by 6/7/8/9

void note(std::string& why, const std::string& msg) {
  if (!why.empty()) why += "; ";
  why += msg;
}

bool crit1_counting(std::string& why) {
  bool ok = gaussian_binomial(4, 2, 2) == 35;
  if (!ok) note(why, "count(4,2,2) != 35");
  for (int d = 2; d <= 5; ++d)
    for (int m = 1; m <= d - 1; ++m)
      for (int q : {2, 3, 4}) {
        auto [p, f] = *prime_power_split(q);
        Field F = Field::make(p, f);
        if (mpz_class((long)enumerate_subspaces(d, m, F).size()) != gaussian_binomial(d, m, q)) {
          ok = false;
          note(why, "enumeration mismatch at (" + std::to_string(d) + "," + std::to_string(m) +
                        "," + std::to_string(q) + ")");
        }
      }
  return ok;
}

bool crit2_two_sided(std::string& why) {
  struct Cell {
    int d, m, q, exact;  // exact = -1: only the range is pinned
  };
  const Cell cells[] = {{2, 1, 2, -1}, {2, 1, 3, 3}, {3, 1, 2, -1}, {3, 1, 3, 5},
                        {2, 1, 4, -1}, {4, 1, 2, -1}, {4, 2, 2, -1}};
  bool ok = true;
  for (const Cell& c : cells) {
    auto [lo, hi] = irredundant_base_bounds(c.d, c.m, c.q);
    int I = max_irredundant_base(build_action(GroupKind::pgl, c.d, c.m, c.q).group()).value;
    std::string cell = "(" + std::to_string(c.d) + "," + std::to_string(c.m) + "," +
                       std::to_string(c.q) + ")";
    if (I < lo || I > hi) {
      ok = false;
      note(why, "I=" + std::to_string(I) + " outside [" + std::to_string(lo) + "," +
                    std::to_string(hi) + "] at " + cell);
    }
    if (c.exact >= 0 && I != c.exact) {
      ok = false;
      note(why, "I=" + std::to_string(I) + " != " + std::to_string(c.exact) + " at " + cell);
    }
  }
  return ok;
}

template <typename Fn>
bool over_witness_grid(std::string& why, Fn&& check) {
  bool ok = true;
  for (int d = 2; d <= 6; ++d)
    for (int m = 1; 2 * m <= d; ++m)
      for (int q : {2, 3, 4, 5}) {
        WitnessChain ch = build_witness_chain(d, m, q);
        if (!check(ch)) {
          ok = false;
          note(why, "fails at (" + std::to_string(d) + "," + std::to_string(m) + "," +
                        std::to_string(q) + ")");
        }
      }
  return ok;
}

bool crit3_certificates(std::string& why) {
  return over_witness_grid(why, [](const WitnessChain& ch) {
    int lower = irredundant_base_bounds(ch.d, ch.m, ch.q).first;
    return verify_witness_certificates(ch).all_pass() && ch.claimed_length == lower;
  });
}

bool crit4_algebra_dims(std::string& why) {
  return over_witness_grid(
      why, [](const WitnessChain& ch) { return check_algebra_dims(ch).all_pass(); });
}

bool crit5_statistic_chain(std::string& why) {
  corpus_run.specs = default_corpus();
  RunOptions opts;
  bool ok = true;
  for (const auto& spec : corpus_run.specs) {
    StatsReport r = run_stats(spec, opts);
    int b = r.min_base.value, B = r.set_stats.max_minimal.value, H = r.set_stats.height.value,
        I = r.max_irr.value;
    bool chain = b <= B && B <= H && H <= I &&
                 pow_z(2, (unsigned long)I) <= pow_z(r.n, (unsigned long)b);
    bool rc = r.rc_ran && r.rc.value <= H + 1;
    if (!chain || !rc) {
      ok = false;
      note(why, spec.display_name() + (chain ? " rc" : " chain"));
    }
    corpus_run.reports.push_back(std::move(r));
  }
  return ok;
}

bool crit6_five_log(std::string& why) {
  bool ok = true;
  for (size_t i = 0; i < corpus_run.reports.size(); ++i) {
    const StatsReport& r = corpus_run.reports[i];
    if (!r.primitive) continue;
    if (pow_z(2, (unsigned long)r.max_irr.value) >= pow_z(r.n, 5)) {
      ok = false;
      note(why, corpus_run.specs[i].display_name());
    }
  }
  return ok;
}

bool crit7_pair_actions(std::string& why) {
  ActionTable sum = build_pair_action(ActionKind::pair_direct_sum, 3, 1, 2);
  ActionTable leq = build_pair_action(ActionKind::pair_contained, 3, 1, 2);
  bool ok = true;
  if (leq.n() != 21 || sum.n() != 28) {
    ok = false;
    note(why, "pair domain sizes " + std::to_string(leq.n()) + "/" + std::to_string(sum.n()));
  }
  int companion = max_irredundant_base(build_action(GroupKind::pgl, 3, 1, 2).group()).value;
  for (const ActionTable* at : {&sum, &leq}) {
    int I = max_irredundant_base(at->group()).value;
    if (I > 2 * companion + 1) {
      ok = false;
      note(why, "pair I=" + std::to_string(I) + " exceeds 2*" + std::to_string(companion) + "+1");
    }
  }
  return ok;
}

bool crit8_greedy(std::string& why) {
  bool ok = true;
  for (size_t i = 0; i < corpus_run.reports.size(); ++i) {
    const StatsReport& r = corpus_run.reports[i];
    int g = (int)r.greedy.sequence.size();
    bool in_range = r.min_base.value <= g && g <= r.max_irr.value;
    bool log_bound = !r.primitive || pow_z(2, (unsigned long)g) < pow_z(r.n, 5);
    bool poly = r.greedy.stabilizer_builds <= (int)(r.n * r.n);
    if (!in_range || !log_bound || !poly) {
      ok = false;
      note(why, corpus_run.specs[i].display_name());
    }
  }
  return ok;
}

bool crit9_oracles(std::string& why) {
  RunOptions opts;
  int checked = 0;
  bool ok = true;
  for (const auto& spec : corpus_run.specs) {
    BuiltGroup built = build_group(spec);
    const PermGroup& g = built.group;
    if (g.degree > 8 || group_order(g) > 2000) continue;
    ++checked;
    reference::Stats ref = reference::stats(g);
    SetStats set = minimal_base_and_height(g);
    bool same = min_base(g).value == ref.b && max_irredundant_base(g).value == ref.I &&
                set.max_minimal.value == ref.B && set.height.value == ref.H &&
                relational_complexity(g, 5).value == reference::relational_complexity(g, 5);
    if (!same) {
      ok = false;
      note(why, spec.display_name());
    }
  }
  if (checked != 18) {
    ok = false;
    note(why, "expected 18 oracle groups, saw " + std::to_string(checked));
  }
  return ok;
}

bool crit10_tail_minimal_base(std::string& why) {
  struct Cell {
    int d, m, q, size;
  };
  bool ok = true;
  for (Cell c : {Cell{3, 1, 2, 2}, Cell{3, 1, 3, 4}}) {
    WitnessChain ch = build_witness_chain(c.d, c.m, c.q);
    ActionTable at = build_action(GroupKind::pgl, c.d, c.m, c.q);
    int first = c.q == 2 ? 2 : c.m + 1;
    int last = c.q == 2 ? c.m * c.d - c.m * c.m + 1 : c.m * c.d - c.m * c.m + c.d;
    int size = last - first + 1;
    std::string cell =
        "(" + std::to_string(c.d) + "," + std::to_string(c.m) + "," + std::to_string(c.q) + ")";
    if (size != c.size) {
      ok = false;
      note(why, "tail size " + std::to_string(size) + " != " + std::to_string(c.size) + " at " + cell);
    }
    if (!check_witness_minimal_base(ch, at).all_pass()) {
      ok = false;
      note(why, "tail is not a minimal base at " + cell);
    }
  }
  return ok;
}

int run_criterion(int num, const char* label, bool (*fn)(std::string&)) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  bool ok;
  try {
    ok = fn(why);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", num, ok ? "PASS" : "FAIL", label, sec,
              why.empty() ? "" : " -- ", why.c_str());
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int fails = 0;
  fails += run_criterion(1, "subspace counting matches the closed form", crit1_counting);
  fails += run_criterion(2, "brute-forced I lies in the two-sided bounds", crit2_two_sided);
  fails += run_criterion(3, "witness certificates and certified length", crit3_certificates);
  fails += run_criterion(4, "invariant algebra dimension drops", crit4_algebra_dims);
  fails += run_criterion(5, "statistic chain over the default corpus", crit5_statistic_chain);
  fails += run_criterion(6, "2^I < n^5 on the primitive corpus groups", crit6_five_log);
  fails += run_criterion(7, "pair domains and the companion comparison", crit7_pair_actions);
  fails += run_criterion(8, "greedy length range, log bound, build count", crit8_greedy);
  fails += run_criterion(9, "pruned equals unpruned on all small groups", crit9_oracles);
  fails += run_criterion(10, "tail subsequence is a minimal base", crit10_tail_minimal_base);
  if (fails == 0)
    std::printf("all criteria pass\n");
  else
    std::printf("%d criteria fail\n", fails);
  return fails;
}
