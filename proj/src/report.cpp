#include "irrbase/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "irrbase/field.hpp"

namespace irrbase {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<int> cycle_images(int n, int from) {
  // (from, from+1, ..., n-1) as an image array on n points.
  std::vector<int> im((std::size_t)n);
  for (int i = 0; i < n; ++i) im[(std::size_t)i] = i;
  for (int i = from; i < n; ++i) im[(std::size_t)i] = i + 1 < n ? i + 1 : from;
  return im;
}

std::vector<int> swap01_images(int n) {
  std::vector<int> im((std::size_t)n);
  for (int i = 0; i < n; ++i) im[(std::size_t)i] = i;
  im[0] = 1;
  im[1] = 0;
  return im;
}

std::vector<int> three_cycle_images(int n) {
  std::vector<int> im((std::size_t)n);
  for (int i = 0; i < n; ++i) im[(std::size_t)i] = i;
  im[0] = 1;
  im[1] = 2;
  im[2] = 0;
  return im;
}

std::vector<int> reflection_images(int n) {
  std::vector<int> im((std::size_t)n);
  for (int i = 0; i < n; ++i) im[(std::size_t)i] = (n - i) % n;
  return im;
}

void check_dmq(const GroupSpec& s) {
  require(s.d >= 2, s.family + ": d must be >= 2");
  require(s.m >= 1 && s.m <= s.d - 1, s.family + ": m must be in [1, d-1]");
  require(prime_power_split(s.q).has_value(), s.family + ": q must be a prime power");
}

nlohmann::json seq_json(const SequenceResult& s) {
  return nlohmann::json{{"value", s.value}, {"witness", s.witness}, {"nodes", s.nodes}};
}

nlohmann::json set_json(const SetResult& s) {
  return nlohmann::json{{"value", s.value}, {"witness", s.witness}, {"nodes", s.nodes}};
}

}  // namespace

std::string GroupSpec::display_name() const {
  if (!name.empty()) return name;
  if (family == "sym") return "sym-" + std::to_string(degree);
  if (family == "alt") return "alt-" + std::to_string(degree);
  if (family == "explicit") return "explicit-deg" + std::to_string(degree);
  return family + "-d" + std::to_string(d) + "-m" + std::to_string(m) + "-q" + std::to_string(q);
}

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  require(j.is_object(), "group spec must be a JSON object");
  GroupSpec s;
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  if (j.contains("generators")) {
    s.family = "explicit";
    if (j.contains("family"))
      require(j.at("family") == "explicit", "generator lists belong to the explicit form");
    require(j.contains("degree"), "explicit form needs a degree");
    s.degree = j.at("degree").get<int>();
    s.generators = j.at("generators").get<std::vector<std::vector<int>>>();
    return s;
  }
  require(j.contains("family"), "group spec needs a family or generators");
  s.family = j.at("family").get<std::string>();
  if (s.family == "sym" || s.family == "alt") {
    require(j.contains("degree"), s.family + " needs a degree");
    s.degree = j.at("degree").get<int>();
  } else if (s.family == "pgl" || s.family == "pgammal" || s.family == "pair-sum" ||
             s.family == "pair-leq") {
    require(j.contains("d") && j.contains("q"), s.family + " needs d and q");
    s.d = j.at("d").get<int>();
    s.m = j.value("m", 1);
    s.q = j.at("q").get<int>();
  } else if (s.family == "explicit") {
    throw std::invalid_argument("explicit form needs generators");
  } else {
    throw std::invalid_argument("unknown family: " + s.family);
  }
  return s;
}

nlohmann::json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["family"] = spec.family;
  if (spec.family == "sym" || spec.family == "alt") {
    j["degree"] = spec.degree;
  } else if (spec.family == "explicit") {
    j["degree"] = spec.degree;
    j["generators"] = spec.generators;
  } else {
    j["d"] = spec.d;
    j["m"] = spec.m;
    j["q"] = spec.q;
  }
  return j;
}

std::vector<GroupSpec> corpus_from_json(const nlohmann::json& j) {
  require(j.is_array(), "corpus must be a JSON array of group specs");
  std::vector<GroupSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(group_spec_from_json(j[i]));
    } catch (const std::exception& e) {
      throw std::invalid_argument("corpus entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GroupSpec> default_corpus() {
  std::vector<GroupSpec> out;
  auto fam = [&](std::string name, std::string family, int degree, int d, int m, int q) {
    GroupSpec s;
    s.name = std::move(name);
    s.family = std::move(family);
    s.degree = degree;
    s.d = d;
    s.m = m;
    s.q = q;
    out.push_back(std::move(s));
  };
  auto expl = [&](std::string name, int degree, std::vector<std::vector<int>> gens) {
    GroupSpec s;
    s.name = std::move(name);
    s.family = "explicit";
    s.degree = degree;
    s.generators = std::move(gens);
    out.push_back(std::move(s));
  };
  for (int n = 2; n <= 6; ++n) fam("S" + std::to_string(n), "sym", n, 0, 0, 0);
  for (int n = 3; n <= 6; ++n) fam("A" + std::to_string(n), "alt", n, 0, 0, 0);
  for (int n : {4, 7, 8}) expl("C" + std::to_string(n), n, {cycle_images(n, 0)});
  for (int n : {4, 5, 8})
    expl("D" + std::to_string(n), n, {cycle_images(n, 0), reflection_images(n)});
  fam("PGL2q3", "pgl", 0, 2, 1, 3);
  fam("PGL2q4", "pgl", 0, 2, 1, 4);
  fam("PGL3q2", "pgl", 0, 3, 1, 2);
  fam("PGL3q3", "pgl", 0, 3, 1, 3);
  fam("PGL3q2-pairs-sum", "pair-sum", 0, 3, 1, 2);
  fam("PGL3q2-pairs-leq", "pair-leq", 0, 3, 1, 2);
  return out;
}

BuiltGroup build_group(const GroupSpec& s) {
  BuiltGroup out;
  if (s.family == "sym") {
    require(s.degree >= 1, "sym: degree must be >= 1");
    std::vector<std::vector<int>> gens;
    if (s.degree >= 2) gens.push_back(swap01_images(s.degree));
    if (s.degree >= 3) gens.push_back(cycle_images(s.degree, 0));
    out.group = PermGroup::from_images(s.degree, gens);
  } else if (s.family == "alt") {
    require(s.degree >= 1, "alt: degree must be >= 1");
    std::vector<std::vector<int>> gens;
    if (s.degree >= 3) gens.push_back(three_cycle_images(s.degree));
    // Even permutation moving every point past the 3-cycle: the full cycle
    // when the degree is odd, the cycle fixing point 0 when it is even.
    if (s.degree >= 4)
      gens.push_back(s.degree % 2 == 1 ? cycle_images(s.degree, 0) : cycle_images(s.degree, 1));
    out.group = PermGroup::from_images(s.degree, gens);
  } else if (s.family == "pgl" || s.family == "pgammal") {
    check_dmq(s);
    ActionTable at =
        build_action(s.family == "pgl" ? GroupKind::pgl : GroupKind::pgammal, s.d, s.m, s.q);
    out.group = at.group();
    out.context.kind = ContextKind::subspace_points;
  } else if (s.family == "pair-sum" || s.family == "pair-leq") {
    check_dmq(s);
    ActionTable at = build_pair_action(
        s.family == "pair-sum" ? ActionKind::pair_direct_sum : ActionKind::pair_contained, s.d,
        s.m, s.q, GroupKind::pgl);
    out.group = at.group();
    out.context.kind = ContextKind::subspace_pairs;
  } else if (s.family == "explicit") {
    require(s.degree >= 1, "explicit: degree must be >= 1");
    out.group = PermGroup::from_images(s.degree, s.generators);
  } else {
    throw std::invalid_argument("unknown family: " + s.family);
  }
  if (out.context.kind != ContextKind::generic) {
    out.context.d = s.d;
    out.context.m = s.m;
    out.context.q = s.q;
    out.context.f = prime_power_split(s.q)->second;
  }
  return out;
}

StatsReport run_stats(const GroupSpec& spec, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  BuiltGroup bg = build_group(spec);
  const PermGroup& g = bg.group;
  StatsReport r;
  r.n = g.degree;
  r.order = group_order(g);
  r.min_base = min_base(g, opts.budget);
  r.max_irr = max_irredundant_base(g, opts.budget);
  r.set_stats = minimal_base_and_height(g, opts.budget);
  r.greedy = greedy_base(g);
  r.transitive = is_transitive(g);
  r.primitive = is_primitive(g);
  r.soluble = is_soluble(g);

  if (opts.rc == RcMode::skip) {
    r.rc_skip_reason = "skipped: disabled";
  } else if (opts.rc == RcMode::automatic && (r.order > (1 << 20) || g.degree > 64)) {
    r.rc_skip_reason =
        "skipped: too large (order " + r.order.get_str() + ", degree " + std::to_string(g.degree) + ")";
  } else {
    r.rc = relational_complexity(g, std::max(2, g.degree), opts.budget);
    r.rc_ran = true;
  }

  StatContext c = bg.context;
  c.n = r.n;
  c.order = r.order;
  c.b = r.min_base.value;
  c.I = r.max_irr.value;
  c.B = r.set_stats.max_minimal.value;
  c.H = r.set_stats.height.value;
  c.rc = r.rc_ran ? r.rc.value : -1;
  c.greedy = (int)r.greedy.sequence.size();
  c.transitive = r.transitive;
  c.primitive = r.primitive;
  c.soluble = r.soluble;
  if (c.kind == ContextKind::subspace_pairs) {
    ActionTable companion = build_action(GroupKind::pgl, spec.d, spec.m, spec.q);
    c.companion_I = max_irredundant_base(companion.group(), opts.budget).value;
  }
  r.bounds = run_bound_suite(c);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::json report_to_json(const GroupSpec& spec, const StatsReport& r,
                              const RunOptions& opts) {
  nlohmann::json stats;
  stats["b"] = seq_json(r.min_base);
  stats["I"] = seq_json(r.max_irr);
  stats["B"] = set_json(r.set_stats.max_minimal);
  stats["H"] = set_json(r.set_stats.height);
  if (r.rc_ran) {
    nlohmann::json rc{{"value", r.rc.value}, {"nodes", r.rc.nodes}};
    if (r.rc.certificate) {
      rc["certificate"] = {{"k", r.rc.certificate->k},
                           {"lambda", r.rc.certificate->lambda},
                           {"sigma", r.rc.certificate->sigma}};
    }
    stats["rc"] = rc;
  } else {
    stats["rc"] = nlohmann::json{{"skipped", r.rc_skip_reason}};
  }
  stats["greedy"] = {{"sequence", r.greedy.sequence},
                     {"stabilizer_builds", r.greedy.stabilizer_builds}};

  nlohmann::json checks = nlohmann::json::array();
  for (const CheckLine& line : r.bounds.lines)
    checks.push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});

  nlohmann::json j;
  j["schema"] = "irrbase/1";
  j["spec"] = group_spec_to_json(spec);
  j["n"] = r.n;
  j["order"] = r.order.get_str();
  j["transitive"] = r.transitive;
  j["primitive"] = r.primitive;
  j["soluble"] = r.soluble;
  j["stats"] = stats;
  j["bounds"] = {{"all_pass", r.bounds.all_pass()}, {"checks", checks}};
  if (opts.timing) j["timing_seconds"] = r.seconds;
  return j;
}

std::string csv_header() { return "name,n,order,b,B,H,I,RC,greedy,5log2n,all-bounds-pass"; }

std::string csv_row(const GroupSpec& spec, const StatsReport& r) {
  char log5[32];
  std::snprintf(log5, sizeof log5, "%.2f", 5.0 * std::log2((double)r.n));
  std::string rc = r.rc_ran ? std::to_string(r.rc.value) : "-";
  return spec.display_name() + "," + std::to_string(r.n) + "," + r.order.get_str() + "," +
         std::to_string(r.min_base.value) + "," + std::to_string(r.set_stats.max_minimal.value) +
         "," + std::to_string(r.set_stats.height.value) + "," + std::to_string(r.max_irr.value) +
         "," + rc + "," + std::to_string(r.greedy.sequence.size()) + "," + log5 + "," +
         (r.bounds.all_pass() ? "true" : "false");
}

}  // namespace irrbase
