// reference.cpp
#include "irrbase/reference.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace irrbase {
namespace reference {

std::vector<Perm> element_list(const PermGroup& g, std::size_t cap) {
  std::vector<Perm> els{Perm::identity(g.degree)};
  std::set<std::vector<int>> seen{els[0].img};
  for (std::size_t next = 0; next < els.size(); ++next) {
    for (const Perm& gen : g.generators) {
      Perm p = els[next].then(gen);
      if (seen.insert(p.img).second) {
        if (els.size() >= cap) throw std::runtime_error("element_list: group exceeds cap");
        els.push_back(std::move(p));
      }
    }
  }
  return els;
}

namespace {

using Filter = std::vector<int>;  // indices into the element list

Filter filter_fixing(const std::vector<Perm>& els, const Filter& cur, int point) {
  Filter out;
  for (int e : cur)
    if (els[e][point] == point) out.push_back(e);
  return out;
}

bool min_base_at_depth(const std::vector<Perm>& els, int n, const Filter& cur, int depth) {
  if (cur.size() == 1) return true;
  if (depth == 0) return false;
  for (int p = 0; p < n; ++p)
    if (min_base_at_depth(els, n, filter_fixing(els, cur, p), depth - 1)) return true;
  return false;
}

int max_irredundant_from(const std::vector<Perm>& els, int n, const Filter& cur) {
  if (cur.size() == 1) return 0;
  int best = 0;
  for (int p = 0; p < n; ++p) {
    Filter next = filter_fixing(els, cur, p);
    if (next.size() < cur.size()) best = std::max(best, 1 + max_irredundant_from(els, n, next));
  }
  return best;
}

}  // namespace

Stats stats(const PermGroup& g) {
  const int n = g.degree;
  if (n > 16) throw std::invalid_argument("reference::stats: degree too large for subset scan");
  std::vector<Perm> els = element_list(g);
  Filter all(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) all[i] = (int)i;

  Stats st;
  while (!min_base_at_depth(els, n, all, st.b)) ++st.b;
  st.I = max_irredundant_from(els, n, all);

  // Pointwise stabilizer of every subset, built from the subset minus its
  // lowest point.
  std::vector<Filter> stab(std::size_t(1) << n);
  stab[0] = all;
  for (std::size_t mask = 1; mask < stab.size(); ++mask) {
    int low = __builtin_ctzll(mask);
    stab[mask] = filter_fixing(els, stab[mask ^ (std::size_t(1) << low)], low);
  }
  for (std::size_t mask = 0; mask < stab.size(); ++mask) {
    bool strict = true;
    for (int p = 0; p < n && strict; ++p)
      if (mask & (std::size_t(1) << p))
        if (stab[mask ^ (std::size_t(1) << p)].size() == stab[mask].size()) strict = false;
    if (!strict) continue;
    int size = __builtin_popcountll(mask);
    st.H = std::max(st.H, size);
    if (stab[mask].size() == 1) st.B = std::max(st.B, size);
  }
  return st;
}

namespace {

struct TupleSpace {
  int n = 0, l = 0, total = 0;

  void decode(int code, std::vector<int>& out) const {
    for (int i = 0; i < l; ++i) {
      out[i] = code % n;
      code /= n;
    }
  }
  int encode(const std::vector<int>& t) const {
    int code = 0;
    for (int i = l - 1; i >= 0; --i) code = code * n + t[i];
    return code;
  }
};

bool violation_at(const std::vector<Perm>& els, const PermGroup& g, int k, int l) {
  const int n = g.degree;
  TupleSpace ts{n, l, 1};
  for (int i = 0; i < l; ++i) ts.total *= n;

  // All k-subsets of positions, grouped by their largest position.
  std::vector<std::vector<std::vector<int>>> by_max(l);
  std::vector<int> subset;
  auto gen_subsets = [&](auto&& self, int start) -> void {
    if ((int)subset.size() == k) {
      by_max[subset.back()].push_back(subset);
      return;
    }
    for (int i = start; i < l; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  gen_subsets(gen_subsets, 0);

  std::vector<char> visited(ts.total, 0);
  std::vector<int> lam(l), sig(l), work(l);
  for (int code = 0; code < ts.total; ++code) {
    if (visited[code]) continue;
    // orbit of this tuple under the generators, acting positionwise
    std::unordered_set<int> orbit;
    std::vector<int> queue{code};
    visited[code] = 1;
    orbit.insert(code);
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      ts.decode(cur, lam);
      for (const Perm& gen : g.generators) {
        for (int i = 0; i < l; ++i) work[i] = gen[lam[i]];
        int img = ts.encode(work);
        if (!visited[img]) {
          visited[img] = 1;
          orbit.insert(img);
          queue.push_back(img);
        }
      }
    }
    ts.decode(code, lam);

    // projections of the orbit of lam onto each k-subset of positions
    std::vector<std::vector<std::unordered_set<std::uint32_t>>> proj(l);
    for (int i = 0; i < l; ++i) {
      proj[i].resize(by_max[i].size());
      for (std::size_t s = 0; s < by_max[i].size(); ++s) {
        const auto& sub = by_max[i][s];
        for (const Perm& e : els) {
          std::uint32_t key = 0;
          for (std::size_t j = 0; j < sub.size(); ++j)
            key |= std::uint32_t(e[lam[sub[j]]]) << (4 * j);
          proj[i][s].insert(key);
        }
      }
    }

    // depth-first over candidate partners, pruned as each subset completes
    auto dfs = [&](auto&& self, int depth) -> bool {
      if (depth == l) return orbit.find(ts.encode(sig)) == orbit.end();
      for (int v = 0; v < n; ++v) {
        sig[depth] = v;
        bool ok = true;
        for (std::size_t s = 0; ok && s < by_max[depth].size(); ++s) {
          const auto& sub = by_max[depth][s];
          std::uint32_t key = 0;
          for (std::size_t j = 0; j < sub.size(); ++j)
            key |= std::uint32_t(sig[sub[j]]) << (4 * j);
          if (proj[depth][s].find(key) == proj[depth][s].end()) ok = false;
        }
        if (ok && self(self, depth + 1)) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) return true;
  }
  return false;
}

}  // namespace

int relational_complexity(const PermGroup& g, int max_len) {
  if (g.degree > 8) throw std::invalid_argument("reference::relational_complexity: degree too large");
  std::vector<Perm> els = element_list(g);
  for (int k = 1; k <= max_len; ++k) {
    bool violated = false;
    // length-k pairs never violate (k-subtuple completeness there is full
    // transport), so start at k + 1
    for (int l = k + 1; l <= max_len && !violated; ++l)
      violated = violation_at(els, g, k, l);
    if (!violated) return k;
  }
  return max_len + 1;
}

}  // namespace reference
}  // namespace irrbase
