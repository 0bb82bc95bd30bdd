#include "irrbase/group_stats.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "irrbase/stab_chain.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irrbase {
namespace {

using Clock = std::chrono::steady_clock;

// Budget bookkeeping shared by all threads of one search. A node is one
// visited search-tree vertex; counts are schedule-independent because
// branches never cancel each other.
struct Ctx {
  std::uint64_t node_cap;
  double time_cap;
  Clock::time_point start;
  const char* what;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};

  Ctx(const SearchBudget& b, const char* w)
      : node_cap(b.node_cap), time_cap(b.time_cap_seconds), start(Clock::now()), what(w) {}

  // Returns false once the budget is blown; callers unwind quietly and
  // the driver throws after the search joins.
  bool tick() {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > node_cap) abort.store(true, std::memory_order_relaxed);
    if (time_cap > 0 && (n & 4095) == 0) {
      double el = std::chrono::duration<double>(Clock::now() - start).count();
      if (el > time_cap) abort.store(true, std::memory_order_relaxed);
    }
    return !abort.load(std::memory_order_relaxed);
  }
  bool ok() const { return !abort.load(std::memory_order_relaxed); }
  [[noreturn]] void blow() const {
    throw budget_exhausted(std::string(what) + ": search budget exhausted after " +
                           std::to_string(nodes.load()) + " nodes");
  }
};

// A subgroup in the descent: generators plus exact order. Stabilizers
// are derived by Schreier generators and orbit-stabilizer division, so
// no chain is rebuilt per search node.
struct Grp {
  std::vector<Perm> gens;  // non-identity, deduplicated
  mpz_class order;

  bool trivial() const { return gens.empty(); }
};

Grp root_group(const PermGroup& g) {
  Grp r;
  std::set<std::vector<int>> seen;
  for (const Perm& p : g.generators)
    if (!p.is_identity() && seen.insert(p.img).second) r.gens.push_back(p);
  StabChain chain(g);
  r.order = chain.order();
  return r;
}

Grp stabilizer_of(int degree, const Grp& g, int pt) {
  // Orbit BFS carrying the transversal along, then Schreier generators.
  std::vector<int> position((std::size_t)degree, -1);
  std::vector<int> points{pt};
  std::vector<Perm> trans{Perm::identity(degree)};
  position[(std::size_t)pt] = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const Perm& gen : g.gens) {
      int q = gen[points[i]];
      if (position[(std::size_t)q] < 0) {
        position[(std::size_t)q] = (int)points.size();
        points.push_back(q);
        trans.push_back(trans[i].then(gen));
      }
    }
  }
  std::vector<Perm> trans_inv;
  trans_inv.reserve(trans.size());
  for (const Perm& t : trans) trans_inv.push_back(t.inverse());
  Grp s;
  s.order = g.order / (long)points.size();
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const Perm& gen : g.gens) {
      int q = gen[points[i]];
      Perm sch = trans[i].then(gen).then(trans_inv[(std::size_t)position[(std::size_t)q]]);
      if (!sch.is_identity() && seen.insert(sch.img).second) s.gens.push_back(std::move(sch));
    }
  }
  return s;
}

bool moves(const Grp& g, int pt) {
  for (const Perm& p : g.gens)
    if (p[pt] != pt) return true;
  return false;
}

// Smallest point of each orbit of size >= 2.
std::vector<int> moved_orbit_reps(int degree, const Grp& g) {
  std::vector<int> reps;
  for (const std::vector<int>& o : orbits_of(degree, g.gens))
    if (o.size() >= 2) reps.push_back(o.front());
  return reps;
}

int largest_orbit_size(int degree, const Grp& g) {
  std::size_t best = 1;
  for (const std::vector<int>& o : orbits_of(degree, g.gens)) best = std::max(best, o.size());
  return (int)best;
}

// ---------------------------------------------------------------- min base

bool min_base_dfs(Ctx& ctx, int degree, const Grp& h, int left, std::vector<int>& prefix) {
  if (!ctx.tick()) return false;
  if (left == 0) return h.trivial();
  if (h.trivial()) return false;  // a shorter base existed; wrong length
  // Orbit-stabilizer: each chosen point divides the order by at most its
  // orbit size, so `left` more points reduce it by at most maxorb^left.
  mpz_class reach = 1;
  int maxorb = largest_orbit_size(degree, h);
  for (int i = 0; i < left; ++i) reach *= maxorb;
  if (reach < h.order) return false;
  for (int rep : moved_orbit_reps(degree, h)) {
    prefix.push_back(rep);
    if (min_base_dfs(ctx, degree, stabilizer_of(degree, h, rep), left - 1, prefix)) return true;
    prefix.pop_back();
  }
  return false;
}

// ------------------------------------------------- max irredundant base

struct IrrMemo {
  std::map<std::vector<int>, std::pair<int, std::vector<int>>> table;  // set -> (depth, tail)
};

// Longest strictly-decreasing stabilizer chain from h down to the
// trivial group. The answer depends only on the set of points fixed so
// far, which makes the sorted set a sound memo key.
std::pair<int, std::vector<int>> irr_dfs(Ctx& ctx, int degree, const Grp& h,
                                         std::vector<int>& sorted_set, IrrMemo& memo) {
  if (!ctx.tick()) return {0, {}};
  if (h.trivial()) return {0, {}};
  auto it = memo.table.find(sorted_set);
  if (it != memo.table.end()) return it->second;
  int best = 0;
  std::vector<int> tail;
  for (int rep : moved_orbit_reps(degree, h)) {
    sorted_set.insert(std::lower_bound(sorted_set.begin(), sorted_set.end(), rep), rep);
    auto [sub, subtail] = irr_dfs(ctx, degree, stabilizer_of(degree, h, rep), sorted_set, memo);
    sorted_set.erase(std::lower_bound(sorted_set.begin(), sorted_set.end(), rep));
    if (1 + sub > best) {
      best = 1 + sub;
      tail.assign(1, rep);
      tail.insert(tail.end(), subtail.begin(), subtail.end());
    }
  }
  if (ctx.ok()) memo.table[sorted_set] = {best, tail};
  return {best, tail};
}

// -------------------------------------- set engine (minimal bases, height)

// Subsets S such that removing any chosen point strictly enlarges the
// pointwise stabilizer. The property is inherited by subsets, so
// extending in ascending point order visits every such set exactly once.
// Height is the largest such S; a minimal base is such an S with trivial
// stabilizer.
struct SetSearchOut {
  int height = 0;
  std::vector<int> height_wit;
  int max_minimal = 0;
  std::vector<int> max_minimal_wit;
};

struct SetCtx {
  Ctx& ctx;
  int degree;
  // Pair-orbit BFS scratch, epoch-stamped to avoid clearing.
  std::vector<int> stamp;
  std::vector<int> bfs_queue;
  int epoch = 0;
};

// Does the stabilizer of x in <gens> move y? Walks the orbit of the
// pair (x, y); any reached pair (x, z) with z != y is a witness. This
// answers irredundance questions without building any stabilizer.
bool stab_moves(SetCtx& sc, const std::vector<Perm>& gens, int x, int y) {
  int n = sc.degree;
  if ((int)sc.stamp.size() != n * n) {
    sc.stamp.assign((std::size_t)(n * n), 0);
    sc.epoch = 0;
  }
  ++sc.epoch;
  sc.bfs_queue.clear();
  auto push = [&sc, n](int a, int b) {
    int code = a * n + b;
    if (sc.stamp[(std::size_t)code] != sc.epoch) {
      sc.stamp[(std::size_t)code] = sc.epoch;
      sc.bfs_queue.push_back(code);
    }
  };
  push(x, y);
  for (std::size_t qi = 0; qi < sc.bfs_queue.size(); ++qi) {
    int a = sc.bfs_queue[qi] / n, b = sc.bfs_queue[qi] % n;
    for (const Perm& g : gens) {
      int a2 = g[a], b2 = g[b];
      if (a2 == x && b2 != y) return true;
      push(a2, b2);
    }
  }
  return false;
}

// drops[i] is the pointwise stabilizer of s minus its i-th point, kept
// incrementally along the path. Extending s by x keeps point s[i]
// necessary iff the stabilizer of x inside drops[i] still moves s[i].
void set_dfs(SetCtx& sc, const Grp& h, std::vector<int>& s, const std::vector<Grp>& drops,
             SetSearchOut& out) {
  if (!sc.ctx.tick()) return;
  if ((int)s.size() > out.height) {
    out.height = (int)s.size();
    out.height_wit = s;
  }
  if (h.trivial()) {
    // No proper extension stays irredundant, and s is a minimal base.
    if ((int)s.size() > out.max_minimal) {
      out.max_minimal = (int)s.size();
      out.max_minimal_wit = s;
    }
    return;
  }
  // Each further point at least halves the stabilizer order.
  int room = 0;
  for (mpz_class o = h.order; o > 1; o >>= 1) ++room;
  int cap = (int)s.size() + room;
  if (cap <= out.height && cap <= out.max_minimal) return;
  for (int x = s.back() + 1; x < sc.degree; ++x) {
    if (!moves(h, x)) continue;
    bool irred = true;
    for (std::size_t i = 0; i < s.size() && irred; ++i)
      irred = stab_moves(sc, drops[i].gens, x, s[i]);
    if (!irred) continue;
    std::vector<Grp> next_drops;
    next_drops.reserve(drops.size() + 1);
    for (const Grp& d : drops) next_drops.push_back(stabilizer_of(sc.degree, d, x));
    next_drops.push_back(h);
    s.push_back(x);
    set_dfs(sc, stabilizer_of(sc.degree, h, x), s, next_drops, out);
    s.pop_back();
  }
}

void merge_set_out(SetSearchOut& into, const SetSearchOut& from) {
  if (from.height > into.height) {
    into.height = from.height;
    into.height_wit = from.height_wit;
  }
  if (from.max_minimal > into.max_minimal) {
    into.max_minimal = from.max_minimal;
    into.max_minimal_wit = from.max_minimal_wit;
  }
}

SetSearchOut run_set_search(Ctx& ctx, int degree, const Grp& root, bool parallel) {
  SetSearchOut out;
  if (!ctx.tick()) return out;
  if (root.trivial()) return out;

  // Frontier decomposition: fan out on the first two points, then run
  // each subtree independently (branch-local memo and bests) so the
  // outcome never depends on the thread schedule.
  struct Task {
    int x0, x1;
    const Grp* h1;
  };
  std::vector<std::pair<int, Grp>> firsts;
  for (int x0 = 0; x0 < degree; ++x0) {
    if (!moves(root, x0)) continue;
    if (!ctx.tick()) return out;
    firsts.emplace_back(x0, stabilizer_of(degree, root, x0));
  }
  std::vector<Task> tasks;
  for (auto& [x0, h1] : firsts) {
    if (h1.trivial()) {
      SetSearchOut leaf;
      leaf.height = leaf.max_minimal = 1;
      leaf.height_wit = leaf.max_minimal_wit = {x0};
      merge_set_out(out, leaf);
      continue;
    }
    if (out.height < 1) {
      out.height = 1;
      out.height_wit = {x0};
    }
    for (int x1 = x0 + 1; x1 < degree; ++x1)
      if (moves(h1, x1)) tasks.push_back({x0, x1, &h1});
  }

  std::vector<SetSearchOut> results(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long t = 0; t < (long)tasks.size(); ++t) {
    if (!ctx.ok()) continue;
    const Task& tk = tasks[(std::size_t)t];
    SetCtx sc{ctx, degree, {}, {}, 0};
    Grp g_x1 = stabilizer_of(degree, root, tk.x1);
    // x1 is necessary because tk.h1 moves it; x0 is necessary iff the
    // stabilizer of x1 alone still moves it.
    if (!moves(g_x1, tk.x0)) continue;
    Grp h2 = stabilizer_of(degree, *tk.h1, tk.x1);
    std::vector<int> s{tk.x0, tk.x1};
    std::vector<Grp> drops{std::move(g_x1), *tk.h1};
    set_dfs(sc, h2, s, drops, results[(std::size_t)t]);
  }
  (void)parallel;
  for (const SetSearchOut& r : results) merge_set_out(out, r);
  return out;
}

// ------------------------------------------------ relational complexity
//
// A pair (lambda, sigma) of l-tuples is a violation at level k when every
// k-subtuple transports but the whole tuple does not. Writing T[p][s] for
// the transporter set {g : p^g = s}, the subtuple condition says every
// k-wise intersection of the chosen T[lambda_i][sigma_i] is nonempty while
// the full intersection is empty. That view gives three exact reductions:
//   - only the *set* of (point, image) pairs matters, not the tuple order,
//     so lambda is enumerated as an ascending point sequence;
//   - an extension whose transporter contains the current full intersection
//     is removable from any violation through it, so it can be skipped; the
//     surviving prefixes have strictly descending intersection cosets, which
//     bounds the depth by the subgroup chain length of G;
//   - left/right translation lets the first point be its orbit minimum and
//     its image equal itself.
// Transporter sets are bitsets over an enumeration of G, so every test is
// a word-parallel AND.

struct RcFound {
  std::vector<int> lambda, sigma;
};

struct RcTables {
  int degree = 0;
  std::size_t order = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;  // [(p * degree + s) * words ...]

  const std::uint64_t* at(int p, int s) const {
    return bits.data() + ((std::size_t)p * (std::size_t)degree + (std::size_t)s) * words;
  }
  bool empty_at(int p, int s) const {
    const std::uint64_t* b = at(p, s);
    for (std::size_t w = 0; w < words; ++w)
      if (b[w]) return false;
    return true;
  }
};

// Stream every element of the chain's group in a fixed order: depth-first
// over transversal choices, composing level i's coset representative onto
// the partial product of levels < i.
template <typename F>
void for_each_element(const StabChain& ch, int degree, int level, const Perm& acc, F&& emit) {
  if (level == (int)ch.base().size()) {
    emit(acc);
    return;
  }
  for (int p : ch.level_orbit(level).points)
    for_each_element(ch, degree, level + 1, ch.transversal_element(level, p).then(acc), emit);
}

RcTables build_rc_tables(const PermGroup& g) {
  StabChain ch(g);
  mpz_class ord = ch.order();
  // Table size is degree^2 * |G| bits; keep it at desk scale.
  const mpz_class elem_cap = 1 << 22;
  if (ord > elem_cap)
    throw budget_exhausted("relational_complexity: group too large for transporter tables");
  RcTables t;
  t.degree = g.degree;
  t.order = (std::size_t)ord.get_ui();
  if ((std::size_t)g.degree * (std::size_t)g.degree * t.order > (std::size_t)1 << 31)
    throw budget_exhausted("relational_complexity: transporter tables exceed memory cap");
  t.words = (t.order + 63) / 64;
  t.bits.assign((std::size_t)g.degree * (std::size_t)g.degree * t.words, 0);
  std::size_t idx = 0;
  for_each_element(ch, g.degree, 0, Perm::identity(g.degree), [&](const Perm& e) {
    for (int p = 0; p < g.degree; ++p)
      t.bits[((std::size_t)p * (std::size_t)g.degree + (std::size_t)e[p]) * t.words + idx / 64] |=
          (std::uint64_t)1 << (idx % 64);
    ++idx;
  });
  return t;
}

struct RcTaskState {
  Ctx& ctx;
  const RcTables& tab;
  int k, max_len;
  const std::vector<int>& orbit_id;
  std::vector<int> pts, sig;
  std::vector<char> used_s;
  std::vector<std::vector<std::uint64_t>> kstack;  // intersection per depth
  std::vector<std::uint64_t> scratch;
};

bool rc_subsets_pass(RcTaskState& st, const std::uint64_t* tnew) {
  int j = (int)st.pts.size();  // positions 0..j-1 chosen; new entry at j
  int k = st.k;
  if (j + 1 < k) return true;
  if (j + 1 == k) return true;  // the single subset equals the running intersection
  std::size_t words = st.tab.words;
  std::vector<int> idx((std::size_t)(k - 1));
  for (int i = 0; i < k - 1; ++i) idx[(std::size_t)i] = i;
  while (true) {
    // AND of the k-1 chosen older transporters with the new one.
    for (std::size_t w = 0; w < words; ++w) st.scratch[w] = tnew[w];
    bool nonzero = false;
    for (int i : idx) {
      const std::uint64_t* b = st.tab.at(st.pts[(std::size_t)i], st.sig[(std::size_t)i]);
      nonzero = false;
      for (std::size_t w = 0; w < words; ++w) {
        st.scratch[w] &= b[w];
        if (st.scratch[w]) nonzero = true;
      }
      if (!nonzero) break;
    }
    if (!nonzero) return false;
    int i = k - 2;
    while (i >= 0 && idx[(std::size_t)i] == j - 1 - (k - 2 - i)) --i;
    if (i < 0) break;
    ++idx[(std::size_t)i];
    for (int a = i + 1; a < k - 1; ++a) idx[(std::size_t)a] = idx[(std::size_t)(a - 1)] + 1;
  }
  return true;
}

bool rc_dfs(RcTaskState& st, RcFound& found) {
  int j = (int)st.pts.size();
  if (j == st.max_len) return false;
  const std::size_t words = st.tab.words;
  const std::uint64_t* kcur = st.kstack[(std::size_t)j].data();
  for (int p = st.pts.back() + 1; p < st.tab.degree; ++p) {
    for (int s = 0; s < st.tab.degree; ++s) {
      if (st.used_s[(std::size_t)s] || st.orbit_id[(std::size_t)s] != st.orbit_id[(std::size_t)p])
        continue;
      if (!st.ctx.tick()) return false;
      const std::uint64_t* t = st.tab.at(p, s);
      // Skip extensions that cannot change the intersection: any violation
      // through them stays one after deleting the extension.
      bool covers = true;
      bool nonzero = false;
      std::uint64_t* knext = st.kstack[(std::size_t)j + 1].data();
      for (std::size_t w = 0; w < words; ++w) {
        knext[w] = kcur[w] & t[w];
        if (knext[w] != kcur[w]) covers = false;
        if (knext[w]) nonzero = true;
      }
      if (covers) continue;
      if (!rc_subsets_pass(st, t)) continue;
      if (!nonzero) {
        if (j + 1 <= st.k) continue;  // some k-subset through this prefix is empty
        found.lambda = st.pts;
        found.sigma = st.sig;
        found.lambda.push_back(p);
        found.sigma.push_back(s);
        return true;
      }
      st.pts.push_back(p);
      st.sig.push_back(s);
      st.used_s[(std::size_t)s] = 1;
      bool done = rc_dfs(st, found);
      st.pts.pop_back();
      st.sig.pop_back();
      st.used_s[(std::size_t)s] = 0;
      if (done) return true;
    }
  }
  return false;
}

// One round: does any k-subtuple-complete inequivalent pair of length
// <= max_len exist? Tasks are the (second point, second image) choices;
// each runs to its own first hit and the lowest-index hit wins, keeping
// certificates and node counts schedule-independent.
std::optional<RcFound> rc_round(Ctx& ctx, const PermGroup& g, const RcTables& tab, int k,
                                int max_len, const std::vector<int>& orbit_id, bool parallel) {
  struct Task {
    int p0, p1, s1;
  };
  std::vector<char> orbit_min((std::size_t)g.degree, 0);
  for (const std::vector<int>& o : orbits_of(g.degree, g.generators))
    orbit_min[(std::size_t)*std::min_element(o.begin(), o.end())] = 1;
  std::vector<Task> tasks;
  for (int p0 = 0; p0 < g.degree; ++p0) {
    if (!orbit_min[(std::size_t)p0]) continue;
    for (int p1 = p0 + 1; p1 < g.degree; ++p1)
      for (int s1 = 0; s1 < g.degree; ++s1) {
        if (s1 == p0 || orbit_id[(std::size_t)s1] != orbit_id[(std::size_t)p1]) continue;
        tasks.push_back({p0, p1, s1});
      }
  }
  std::vector<std::optional<RcFound>> results(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long t = 0; t < (long)tasks.size(); ++t) {
    if (!ctx.ok()) continue;
    if (!ctx.tick()) continue;
    const Task& tk = tasks[(std::size_t)t];
    RcTaskState st{ctx, tab, k, max_len, orbit_id, {}, {}, {}, {}, {}};
    st.used_s.assign((std::size_t)g.degree, 0);
    st.kstack.assign((std::size_t)max_len + 1, std::vector<std::uint64_t>(tab.words, 0));
    st.scratch.assign(tab.words, 0);
    // First point: its orbit minimum, mapped to itself.
    const std::uint64_t* t0 = tab.at(tk.p0, tk.p0);
    const std::uint64_t* t1 = tab.at(tk.p1, tk.s1);
    bool nonzero = false;
    for (std::size_t w = 0; w < tab.words; ++w) {
      st.kstack[2][w] = t0[w] & t1[w];
      if (st.kstack[2][w]) nonzero = true;
    }
    if (!nonzero) continue;  // the pair {1,2} is itself a k-subset prefix
    st.pts = {tk.p0, tk.p1};
    st.sig = {tk.p0, tk.s1};
    st.used_s[(std::size_t)tk.p0] = st.used_s[(std::size_t)tk.s1] = 1;
    RcFound f;
    if (rc_dfs(st, f)) results[(std::size_t)t] = std::move(f);
  }
  (void)parallel;
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace

void SearchBudget::validate() const {
  if (node_cap == 0) throw std::invalid_argument("node_cap must be positive");
  if (time_cap_seconds < 0) throw std::invalid_argument("time_cap_seconds must be >= 0");
  if (rc_max_len < 0) throw std::invalid_argument("rc_max_len must be >= 0");
}

mpz_class group_order(const PermGroup& g) { return StabChain(g).order(); }

SequenceResult min_base(const PermGroup& g, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "min_base");
  Grp root = root_group(g);
  for (int len = 0; len <= g.degree; ++len) {
    std::vector<int> prefix;
    if (min_base_dfs(ctx, g.degree, root, len, prefix)) return {len, prefix, ctx.nodes.load()};
    if (!ctx.ok()) ctx.blow();
  }
  throw std::logic_error("min_base: no base below the degree");
}

SequenceResult max_irredundant_base(const PermGroup& g, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "max_irredundant_base");
  Grp root = root_group(g);
  SequenceResult res;
  if (!ctx.tick()) ctx.blow();
  if (root.trivial()) return {0, {}, ctx.nodes.load()};

  struct Task {
    int r0, r1;
    const Grp* h1;
  };
  std::vector<std::pair<int, Grp>> firsts;
  std::vector<std::pair<int, std::vector<int>>> shallow;  // finished at depth 1
  for (int r0 : moved_orbit_reps(g.degree, root)) {
    if (!ctx.tick()) ctx.blow();
    firsts.emplace_back(r0, stabilizer_of(g.degree, root, r0));
  }
  std::vector<Task> tasks;
  for (auto& [r0, h1] : firsts) {
    if (h1.trivial()) {
      shallow.push_back({1, {r0}});
      continue;
    }
    for (int r1 : moved_orbit_reps(g.degree, h1)) tasks.push_back({r0, r1, &h1});
  }
  std::vector<std::pair<int, std::vector<int>>> results(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (budget.parallel)
#endif
  for (long t = 0; t < (long)tasks.size(); ++t) {
    if (!ctx.ok()) continue;
    const Task& tk = tasks[(std::size_t)t];
    Grp h2 = stabilizer_of(g.degree, *tk.h1, tk.r1);
    IrrMemo memo;
    std::vector<int> sorted_set{tk.r0, tk.r1};
    std::sort(sorted_set.begin(), sorted_set.end());
    auto [sub, tail] = irr_dfs(ctx, g.degree, h2, sorted_set, memo);
    std::vector<int> wit{tk.r0, tk.r1};
    wit.insert(wit.end(), tail.begin(), tail.end());
    results[(std::size_t)t] = {2 + sub, wit};
  }
  if (!ctx.ok()) ctx.blow();
  for (auto& [v, w] : shallow)
    if (v > res.value) {
      res.value = v;
      res.witness = w;
    }
  for (auto& [v, w] : results)
    if (v > res.value) {
      res.value = v;
      res.witness = w;
    }
  res.nodes = ctx.nodes.load();
  return res;
}

SetResult max_minimal_base(const PermGroup& g, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "max_minimal_base");
  Grp root = root_group(g);
  SetSearchOut out = run_set_search(ctx, g.degree, root, budget.parallel);
  if (!ctx.ok()) ctx.blow();
  return {out.max_minimal, out.max_minimal_wit, ctx.nodes.load()};
}

SetResult height(const PermGroup& g, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "height");
  Grp root = root_group(g);
  SetSearchOut out = run_set_search(ctx, g.degree, root, budget.parallel);
  if (!ctx.ok()) ctx.blow();
  return {out.height, out.height_wit, ctx.nodes.load()};
}

SetStats minimal_base_and_height(const PermGroup& g, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "set_search");
  Grp root = root_group(g);
  SetSearchOut out = run_set_search(ctx, g.degree, root, budget.parallel);
  if (!ctx.ok()) ctx.blow();
  std::uint64_t nodes = ctx.nodes.load();
  return {{out.max_minimal, out.max_minimal_wit, nodes}, {out.height, out.height_wit, nodes}};
}

RcResult relational_complexity(const PermGroup& g, int max_len, const SearchBudget& budget) {
  budget.validate();
  Ctx ctx(budget, "relational_complexity");
  Grp root = root_group(g);
  if (!ctx.tick()) ctx.blow();
  if (root.trivial()) return {1, std::nullopt, ctx.nodes.load()};
  if (max_len < 2) throw std::invalid_argument("relational_complexity: max_len must be >= 2");

  std::vector<int> orbit_id((std::size_t)g.degree, -1);
  {
    int id = 0;
    for (const std::vector<int>& o : orbits_of(g.degree, root.gens)) {
      for (int p : o) orbit_id[(std::size_t)p] = id;
      ++id;
    }
  }
  RcTables tab = build_rc_tables(g);
  std::optional<RcCertificate> cert;
  for (int k = 2; k <= max_len; ++k) {
    std::optional<RcFound> f = rc_round(ctx, g, tab, k, max_len, orbit_id, budget.parallel);
    if (!ctx.ok()) ctx.blow();
    if (!f) return {k, cert, ctx.nodes.load()};
    cert = RcCertificate{f->lambda, f->sigma, k};
  }
  // A full-length tuple is max_len-subtuple complete only if the whole
  // tuple transports, so the loop always returns by k = max_len.
  return {max_len + 1, cert, ctx.nodes.load()};
}

GreedyResult greedy_base(const PermGroup& g) {
  Grp h = root_group(g);
  GreedyResult res;
  while (!h.trivial()) {
    int best = -1;
    std::size_t best_size = 1;
    for (const std::vector<int>& o : orbits_of(g.degree, h.gens))
      if (o.size() > best_size) {
        best_size = o.size();
        best = o.front();
      }
    res.sequence.push_back(best);
    h = stabilizer_of(g.degree, h, best);
    ++res.stabilizer_builds;
  }
  return res;
}

}  // namespace irrbase
