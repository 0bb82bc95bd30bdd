// bench_search.cpp
// Times the three search engines against each other: the unpruned
// reference oracles, the pruned serial search, and the pruned parallel
// search. Also re-checks that all engines agree on every value and that
// serial and parallel node counts are identical. Exits nonzero on any
// disagreement, so this doubles as a coarse consistency check.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrbase/group_stats.hpp"
#include "irrbase/reference.hpp"
#include "irrbase/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double time_best(int repeat, F&& fn) {
  double best = 0;
  for (int i = 0; i < repeat; ++i) {
    auto t0 = Clock::now();
    fn();
    double t = ms_since(t0);
    if (i == 0 || t < best) best = t;
  }
  return best;
}

struct Row {
  std::string name;
  long n = 0;
  std::string order;
  double ref_ms = -1, serial_ms = 0, parallel_ms = 0;
  std::uint64_t nodes = 0;
  bool ok = true;
};

struct PrunedOut {
  irrbase::SequenceResult b, I;
  irrbase::SetStats set;
  irrbase::RcResult rc;
};

PrunedOut run_pruned(const irrbase::PermGroup& g, int rc_len, bool parallel) {
  irrbase::SearchBudget budget;
  budget.parallel = parallel;
  PrunedOut out;
  out.b = irrbase::min_base(g, budget);
  out.I = irrbase::max_irredundant_base(g, budget);
  out.set = irrbase::minimal_base_and_height(g, budget);
  out.rc = irrbase::relational_complexity(g, rc_len, budget);
  return out;
}

std::uint64_t total_nodes(const PrunedOut& o) {
  return o.b.nodes + o.I.nodes + o.set.max_minimal.nodes + o.set.height.nodes + o.rc.nodes;
}

Row bench_group(const irrbase::GroupSpec& spec, int repeat, bool with_reference) {
  irrbase::BuiltGroup built = irrbase::build_group(spec);
  const irrbase::PermGroup& g = built.group;
  int rc_len = g.degree > 2 ? g.degree : 2;

  Row row;
  row.name = spec.display_name();
  row.n = g.degree;
  row.order = irrbase::group_order(g).get_str();

  irrbase::reference::Stats ref{};
  int ref_rc = 0;
  if (with_reference)
    row.ref_ms = time_best(repeat, [&] {
      ref = irrbase::reference::stats(g);
      ref_rc = irrbase::reference::relational_complexity(g, 5);
    });

  PrunedOut serial, parallel;
  row.serial_ms = time_best(repeat, [&] { serial = run_pruned(g, rc_len, false); });
  row.parallel_ms = time_best(repeat, [&] { parallel = run_pruned(g, rc_len, true); });
  row.nodes = total_nodes(serial);

  row.ok = serial.b.value == parallel.b.value && serial.I.value == parallel.I.value &&
           serial.set.max_minimal.value == parallel.set.max_minimal.value &&
           serial.set.height.value == parallel.set.height.value && serial.rc.value == parallel.rc.value &&
           total_nodes(serial) == total_nodes(parallel);
  if (with_reference)
    row.ok = row.ok && ref.b == serial.b.value && ref.I == serial.I.value &&
             ref.B == serial.set.max_minimal.value && ref.H == serial.set.height.value &&
             (serial.rc.value > 5 ? ref_rc == 6 : ref_rc == serial.rc.value);
  return row;
}

void print_row(const Row& r) {
  char ref[32];
  if (r.ref_ms < 0)
    std::snprintf(ref, sizeof ref, "%10s", "-");
  else
    std::snprintf(ref, sizeof ref, "%10.2f", r.ref_ms);
  std::printf("%-22s %5ld %10s %s %10.2f %10.2f %12llu  %s\n", r.name.c_str(), r.n,
              r.order.c_str(), ref, r.serial_ms, r.parallel_ms, (unsigned long long)r.nodes,
              r.ok ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int repeat = 3;
  CLI::App app{"search engine benchmark: unpruned reference vs pruned serial vs pruned parallel"};
  app.add_option("--repeat", repeat, "time each engine this many times, report the best (default 3)");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d, repeats: %d, times in ms (b + I + B/H + RC per engine run)\n",
              omp_get_max_threads(), repeat);
  std::printf("%-22s %5s %10s %10s %10s %10s %12s\n", "group", "n", "order", "reference",
              "serial", "parallel", "nodes");

  auto sym = [](int n) {
    irrbase::GroupSpec s;
    s.family = "sym";
    s.degree = n;
    return s;
  };
  auto alt = [](int n) {
    irrbase::GroupSpec s;
    s.family = "alt";
    s.degree = n;
    return s;
  };
  auto proj = [](const std::string& family, int d, int m, int q) {
    irrbase::GroupSpec s;
    s.family = family;
    s.d = d;
    s.m = m;
    s.q = q;
    return s;
  };

  bool all_ok = true;
  // Small groups: the unpruned oracles are feasible, so all three run.
  for (const auto& spec : {sym(5), sym(6), alt(6), proj("pgl", 3, 1, 2), proj("pgl", 2, 1, 4)}) {
    Row r = bench_group(spec, repeat, true);
    print_row(r);
    all_ok = all_ok && r.ok;
  }
  // Larger groups: reference is far too slow, pruned engines only.
  for (const auto& spec :
       {proj("pgl", 3, 1, 3), proj("pair-sum", 3, 1, 2), proj("pair-leq", 3, 1, 2)}) {
    Row r = bench_group(spec, repeat, false);
    print_row(r);
    all_ok = all_ok && r.ok;
  }

  if (!all_ok) {
    std::printf("engine disagreement detected\n");
    return 1;
  }
  return 0;
}
