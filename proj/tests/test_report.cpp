#include <doctest.h>

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "irrbase/report.hpp"

using namespace irrbase;
using nlohmann::json;

namespace {

GroupSpec family_spec(const std::string& family, int d, int m, int q) {
  GroupSpec s;
  s.family = family;
  s.d = d;
  s.m = m;
  s.q = q;
  return s;
}

}  // namespace

TEST_CASE("display names") {
  GroupSpec s;
  s.family = "sym";
  s.degree = 4;
  CHECK(s.display_name() == "sym-4");
  CHECK(family_spec("pgl", 3, 1, 2).display_name() == "pgl-d3-m1-q2");
  s.name = "mine";
  CHECK(s.display_name() == "mine");
}

TEST_CASE("spec json round trip") {
  json fam = {{"family", "pair-leq"}, {"d", 3}, {"m", 1}, {"q", 2}, {"name", "L"}};
  GroupSpec s = group_spec_from_json(fam);
  CHECK(s.family == "pair-leq");
  CHECK(s.name == "L");
  CHECK(group_spec_to_json(s) == group_spec_to_json(group_spec_from_json(group_spec_to_json(s))));

  json expl = {{"degree", 4}, {"generators", {{1, 0, 3, 2}, {2, 3, 0, 1}}}};
  GroupSpec e = group_spec_from_json(expl);
  CHECK(e.family == "explicit");
  CHECK(e.degree == 4);
  REQUIRE(e.generators.size() == 2);
  CHECK(group_spec_to_json(e) == group_spec_to_json(group_spec_from_json(group_spec_to_json(e))));
}

TEST_CASE("spec json validation") {
  CHECK_THROWS_AS(group_spec_from_json(json{{"family", "nope"}}), std::invalid_argument);
  CHECK_THROWS_AS(group_spec_from_json(json{{"family", "sym"}}), std::invalid_argument);  // no degree
  CHECK_THROWS_AS(group_spec_from_json(json{{"family", "pgl"}, {"d", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(group_spec_from_json(json{{"generators", {{0, 1}}}}), std::invalid_argument);

  json bad_corpus = json::array({json{{"family", "sym"}, {"degree", 3}}, json{{"family", "x"}}});
  try {
    corpus_from_json(bad_corpus);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("entry 1") != std::string::npos);
  }
}

TEST_CASE("default corpus shape") {
  auto corpus = default_corpus();
  CHECK(corpus.size() == 21);
  std::set<std::string> names;
  for (const auto& s : corpus) names.insert(s.display_name());
  CHECK(names.size() == corpus.size());  // unique display names
}

TEST_CASE("shipped corpus file matches the built-in corpus") {
  std::ifstream in(std::string(IRRBASE_SOURCE_DIR) + "/data/default_corpus.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  auto from_file = corpus_from_json(j);
  auto built_in = default_corpus();
  REQUIRE(from_file.size() == built_in.size());
  for (size_t i = 0; i < built_in.size(); ++i)
    CHECK(group_spec_to_json(from_file[i]) == group_spec_to_json(built_in[i]));
}

TEST_CASE("build_group fills the bound-suite context") {
  BuiltGroup sym4 = build_group([] {
    GroupSpec s;
    s.family = "sym";
    s.degree = 4;
    return s;
  }());
  CHECK(sym4.group.degree == 4);
  CHECK(sym4.context.kind == ContextKind::generic);

  BuiltGroup lines = build_group(family_spec("pgl", 3, 1, 3));
  CHECK(lines.group.degree == 13);
  CHECK(lines.context.kind == ContextKind::subspace_points);
  CHECK(lines.context.q == 3);
  CHECK(lines.context.f == 1);

  BuiltGroup pairs = build_group(family_spec("pair-sum", 3, 1, 2));
  CHECK(pairs.group.degree == 28);
  CHECK(pairs.context.kind == ContextKind::subspace_pairs);

  BuiltGroup gamma = build_group(family_spec("pgammal", 2, 1, 4));
  CHECK(group_order(gamma.group) == 120);
  CHECK(gamma.context.f == 2);
}

TEST_CASE("run_stats on S_4") {
  GroupSpec s;
  s.family = "sym";
  s.degree = 4;
  RunOptions opts;
  StatsReport rep = run_stats(s, opts);
  CHECK(rep.n == 4);
  CHECK(rep.order == 24);
  CHECK(rep.min_base.value == 3);
  CHECK(rep.max_irr.value == 3);
  CHECK(rep.set_stats.max_minimal.value == 3);
  CHECK(rep.set_stats.height.value == 3);
  CHECK(rep.rc_ran);
  CHECK(rep.rc.value == 2);
  CHECK(rep.greedy.sequence.size() == 3);
  CHECK(rep.transitive);
  CHECK(rep.primitive);
  CHECK(rep.soluble);
  CHECK(rep.bounds.all_pass());
}

TEST_CASE("relational complexity skip modes") {
  GroupSpec big;  // C_70: past the automatic degree heuristic, tiny when forced
  big.family = "explicit";
  big.name = "C70";
  big.degree = 70;
  std::vector<int> c(70);
  for (int i = 0; i < 70; ++i) c[i] = (i + 1) % 70;
  big.generators.push_back(c);

  RunOptions opts;
  StatsReport skipped = run_stats(big, opts);
  CHECK_FALSE(skipped.rc_ran);
  CHECK(skipped.rc_skip_reason.find("skipped") == 0);
  CHECK(skipped.bounds.all_pass());  // rc checks gated off, the rest still judged

  opts.rc = RcMode::force;
  StatsReport forced = run_stats(big, opts);
  CHECK(forced.rc_ran);
  CHECK(forced.rc.value == 2);

  opts.rc = RcMode::skip;
  GroupSpec s4;
  s4.family = "sym";
  s4.degree = 4;
  StatsReport off = run_stats(s4, opts);
  CHECK_FALSE(off.rc_ran);
  CHECK(off.rc_skip_reason == "skipped: disabled");
}

TEST_CASE("json report is deterministic and schema-tagged") {
  GroupSpec s = family_spec("pair-leq", 3, 1, 2);
  RunOptions opts;
  json a = report_to_json(s, run_stats(s, opts), opts);
  json b = report_to_json(s, run_stats(s, opts), opts);
  CHECK(a.dump() == b.dump());  // byte-stable end to end
  CHECK(a["schema"] == "irrbase/1");
  CHECK(a["stats"]["I"]["value"] == 4);
  CHECK(a["stats"]["rc"]["value"] == 3);
  CHECK(a["bounds"]["all_pass"] == true);
  CHECK_FALSE(a.contains("timing_seconds"));

  opts.timing = true;
  json t = report_to_json(s, run_stats(s, opts), opts);
  CHECK(t.contains("timing_seconds"));
}

TEST_CASE("csv output") {
  CHECK(csv_header() == "name,n,order,b,B,H,I,RC,greedy,5log2n,all-bounds-pass");
  GroupSpec s;
  s.family = "sym";
  s.degree = 4;
  RunOptions opts;
  StatsReport rep = run_stats(s, opts);
  CHECK(csv_row(s, rep) == "sym-4,4,24,3,3,3,3,2,3,10.00,true");

  opts.rc = RcMode::skip;
  StatsReport norc = run_stats(s, opts);
  CHECK(csv_row(s, norc) == "sym-4,4,24,3,3,3,3,-,3,10.00,true");
}

TEST_CASE("pair reports carry the companion comparison") {
  GroupSpec s = family_spec("pair-sum", 3, 1, 2);
  RunOptions opts;
  StatsReport rep = run_stats(s, opts);
  bool found = false;
  for (const auto& line : rep.bounds.lines)
    if (line.name == "pair-I-le-twice") found = true;
  CHECK(found);
  CHECK(rep.bounds.all_pass());
}
