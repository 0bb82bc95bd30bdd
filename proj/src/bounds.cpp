// bounds.cpp
#include "irrbase/bounds.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "irrbase/stab_chain.hpp"

namespace irrbase {

bool is_transitive(const PermGroup& g) {
  if (g.degree <= 1) return true;
  return (int)orbit_of(g.degree, g.generators, 0).points.size() == g.degree;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Size of the minimal block containing {0, seed}.
int minimal_block_size(const PermGroup& g, int seed) {
  int n = g.degree;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> work{{0, seed}};
  parent[find_root(parent, seed)] = find_root(parent, 0);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (const Perm& p : g.generators) {
      int ra = find_root(parent, p[a]), rb = find_root(parent, p[b]);
      if (ra != rb) {
        parent[rb] = ra;
        work.push_back({ra, rb});
      }
    }
  }
  int r0 = find_root(parent, 0), size = 0;
  for (int i = 0; i < n; ++i)
    if (find_root(parent, i) == r0) ++size;
  return size;
}

}  // namespace

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  if (g.degree <= 2) return true;
  for (int seed = 1; seed < g.degree; ++seed)
    if (minimal_block_size(g, seed) < g.degree) return false;
  return true;
}

namespace {

// Normal closure in g of the subgroup generated by seed.
PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seed) {
  std::vector<Perm> gens;
  for (auto& s : seed)
    if (!s.is_identity()) gens.push_back(std::move(s));
  if (gens.empty()) return PermGroup{g.degree, {}};
  StabChain chain(PermGroup{g.degree, gens});
  std::size_t next = 0;
  while (next < gens.size()) {
    Perm k = gens[next++];
    for (const Perm& c : g.generators) {
      Perm conj = c.inverse().then(k).then(c);
      if (!chain.contains(conj)) {
        gens.push_back(conj);
        chain = StabChain(PermGroup{g.degree, gens});
      }
    }
  }
  return PermGroup{g.degree, gens};
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  for (const Perm& a : g.generators)
    for (const Perm& b : g.generators) {
      Perm c = a.inverse().then(b.inverse()).then(a).then(b);
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, std::move(comms));
}

}  // namespace

bool is_soluble(const PermGroup& g) {
  PermGroup h = g;
  mpz_class order = StabChain(h).order();
  while (order != 1) {
    PermGroup d = derived_subgroup(h);
    mpz_class dorder = StabChain(d).order();
    if (dorder == order) return false;  // perfect and nontrivial
    h = std::move(d);
    order = std::move(dorder);
  }
  return true;
}

namespace {

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::string cmp_detail(const mpz_class& lhs, const char* rel, const mpz_class& rhs) {
  std::ostringstream os;
  os << lhs.get_str() << " " << rel << " " << rhs.get_str();
  return os.str();
}

}  // namespace

CheckReport run_bound_suite(const StatContext& c) {
  CheckReport rep;
  const long n = c.n;
  const bool subspace = c.kind == ContextKind::subspace_points;
  const bool pairs = c.kind == ContextKind::subspace_pairs;

  // Statistic chain: b <= B <= H <= I <= b log n, and RC <= H + 1.
  if (c.b >= 0 && c.B >= 0) rep.add("chain-b-le-B", c.b <= c.B, std::to_string(c.b) + " <= " + std::to_string(c.B));
  if (c.B >= 0 && c.H >= 0) rep.add("chain-B-le-H", c.B <= c.H, std::to_string(c.B) + " <= " + std::to_string(c.H));
  if (c.H >= 0 && c.I >= 0) rep.add("chain-H-le-I", c.H <= c.I, std::to_string(c.H) + " <= " + std::to_string(c.I));
  if (c.I >= 0 && c.b >= 0 && n >= 2) {
    mpz_class lhs = pow_ui(2, c.I), rhs = pow_ui(n, c.b);
    rep.add("chain-I-le-b-log-n", lhs <= rhs, cmp_detail(lhs, "<=", rhs));
  }
  if (c.rc >= 0 && c.H >= 0)
    rep.add("rc-le-H-plus-1", c.rc <= c.H + 1, std::to_string(c.rc) + " <= " + std::to_string(c.H + 1));
  if (c.greedy >= 0 && c.b >= 0 && c.I >= 0)
    rep.add("greedy-in-chain", c.b <= c.greedy && c.greedy <= c.I,
            std::to_string(c.b) + " <= " + std::to_string(c.greedy) + " <= " + std::to_string(c.I));

  // 5 log n bounds for primitive groups: 2^I < n^5 and corollaries.
  if (c.primitive && n >= 2) {
    mpz_class n5 = pow_ui(n, 5);
    if (c.I >= 0) {
      mpz_class lhs = pow_ui(2, c.I);
      rep.add("primitive-I-5log", lhs < n5, cmp_detail(lhs, "<", n5));
    }
    if (c.B >= 0) {
      mpz_class lhs = pow_ui(2, c.B);
      rep.add("primitive-B-5log", lhs < n5, cmp_detail(lhs, "<", n5));
    }
    if (c.H >= 0) {
      mpz_class lhs = pow_ui(2, c.H);
      rep.add("primitive-H-5log", lhs < n5, cmp_detail(lhs, "<", n5));
    }
    if (c.rc >= 1) {
      mpz_class lhs = pow_ui(2, c.rc - 1);
      rep.add("primitive-rc-5log", lhs < n5, cmp_detail(lhs, "<", n5));
    }
    if (c.greedy >= 0) {
      mpz_class lhs = pow_ui(2, c.greedy);
      rep.add("primitive-greedy-5log", lhs < n5, cmp_detail(lhs, "<", n5));
    }
  }

  // log|G| bounds on I.
  if (c.I >= 0 && !c.soluble) {
    mpz_class lhs = pow_ui(2, c.I + 1);
    rep.add("insoluble-I", lhs < c.order, cmp_detail(lhs, "<", c.order));
  }
  if (c.I >= 0 && c.transitive && n >= 5) {
    mpz_class lhs = pow_ui(2, c.I + 1);
    rep.add("transitive-I", lhs <= c.order, cmp_detail(lhs, "<=", c.order));
  }
  if (c.I >= 1 && c.b >= 1 && c.transitive && n >= 2) {
    mpz_class lhs = pow_ui(2, c.I - 1), rhs = pow_ui(n, c.b - 1);
    rep.add("transitive-I-min-base", lhs <= rhs, cmp_detail(lhs, "<=", rhs));
  }

  if (subspace && c.d && c.m && c.q && c.f) {
    const int d = *c.d, m = *c.m, q = *c.q, f = *c.f;
    {
      mpz_class rhs = pow_ui(q, (unsigned long)m * (d - m));
      rep.add("domain-size", n > rhs, cmp_detail(n, ">", rhs));
    }
    if (q == 2 && m >= 2 && 2 * m == d) {
      mpz_class lhs = mpz_class(n) * n, rhs = pow_ui(2, (unsigned long)d * d / 2 + 1);
      rep.add("domain-size-half", lhs > rhs, cmp_detail(lhs, ">", rhs));
    }
    if (c.I >= 0 && 2 * m <= d) {
      // Four-case upper bound on I for the full projective semilinear group;
      // the computed group is a subgroup, so its I obeys the same bound.
      if (m == 1 && q == 2) {
        rep.add("subspace-I-upper", c.I <= 2 * d - 1,
                std::to_string(c.I) + " <= " + std::to_string(2 * d - 1));
      } else if (m == 1) {
        mpz_class lhs = pow_ui(2, 3ul * c.I);
        mpz_class rhs = pow_ui(q, 4ul * (d - 1)) * 8 * pow_ui(f, 3);
        rep.add("subspace-I-upper", lhs <= rhs, cmp_detail(lhs, "<=", rhs));
      } else if (q == 2 && 2 * m == d) {
        rep.add("subspace-I-upper", c.I <= d * d / 2 + 1,
                std::to_string(c.I) + " <= " + std::to_string(d * d / 2 + 1));
      } else {
        mpz_class lhs = pow_ui(2, c.I);
        mpz_class rhs = pow_ui(q, 2ul * m * (d - m)) * f;
        rep.add("subspace-I-upper", lhs <= rhs, cmp_detail(lhs, "<=", rhs));
      }
    }
    if (c.I >= 0 && n >= 2) {
      mpz_class lhs = pow_ui(2, c.I), rhs = pow_ui(n, 3);
      rep.add("subspace-I-3log", lhs < rhs, cmp_detail(lhs, "<", rhs));
    }
    if (2 * m <= d) {
      mpz_class lhs = pow_ui(q, (unsigned long)m * (d - m));
      mpz_class rhs = (m == 1) ? mpz_class(2 * f) : mpz_class(16) * pow_ui(f, 3);
      rep.add("field-degree-bound", lhs >= rhs, cmp_detail(lhs, ">=", rhs));
    }
  }

  if (pairs && c.I >= 0) {
    if (c.companion_I) {
      int rhs = 2 * *c.companion_I + 1;
      rep.add("pair-I-le-twice", c.I <= rhs, std::to_string(c.I) + " <= " + std::to_string(rhs));
    }
    if (n >= 3) {
      mpz_class lhs = pow_ui(2, c.I + 5), rhs = pow_ui(n, 5);
      rep.add("pair-I-5log", lhs < rhs, cmp_detail(lhs, "<", rhs));
    }
  }

  return rep;
}

}  // namespace irrbase
