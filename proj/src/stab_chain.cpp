#include "irrbase/stab_chain.hpp"

#include <set>
#include <stdexcept>

namespace irrbase {

namespace {
int smallest_moved(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return -1;
}
}  // namespace

StabChain::StabChain(const PermGroup& g, const std::vector<int>& base_prefix) {
  degree_ = g.degree;
  if (degree_ < 1) throw std::invalid_argument("chain: degree must be positive");
  for (int b : base_prefix)
    if (b < 0 || b >= degree_) throw std::invalid_argument("chain: prefix point out of range");

  base_ = base_prefix;
  std::set<std::vector<int>> seen;
  for (const Perm& p : g.generators) {
    if ((int)p.img.size() != degree_) throw std::invalid_argument("chain: generator degree mismatch");
    if (!p.is_identity() && seen.insert(p.img).second) strong_.push_back(p);
  }

  // Extend the base until every strong generator moves some base point.
  auto extend_base = [&]() {
    for (const Perm& s : strong_) {
      bool fixes_all = true;
      for (int b : base_)
        if (s[b] != b) {
          fixes_all = false;
          break;
        }
      if (fixes_all) base_.push_back(smallest_moved(s));
    }
  };
  extend_base();

  levels_.clear();
  for (int b : base_) levels_.push_back(Level{b, {}, {}});
  for (int i = 0; i < (int)levels_.size(); ++i) rebuild_level(i);

  // Fixed-point closure: keep sifting Schreier generators until no new
  // strong generator appears anywhere.
  const size_t gen_guard = 50000;
  while (close_once()) {
    if (strong_.size() > gen_guard)
      throw std::runtime_error("chain: strong generator set grew unreasonably");
  }

  order_ = 1;
  for (const Level& lv : levels_) order_ *= (long)lv.orbit.points.size();
}

void StabChain::rebuild_level(int i) {
  Level& lv = levels_[i];
  lv.gens.clear();
  for (const Perm& s : strong_) {
    bool ok = true;
    for (int j = 0; j < i; ++j)
      if (s[base_[j]] != base_[j]) {
        ok = false;
        break;
      }
    if (ok) lv.gens.push_back(s);
  }
  lv.orbit = orbit_of(degree_, lv.gens, lv.beta);
}

bool StabChain::close_once() {
  // Rebuild everything first so each sift below runs against current
  // orbits; then stop at the first non-sifting Schreier generator. The
  // caller restarts, so a pass never works with stale transversals.
  for (int i = 0; i < (int)levels_.size(); ++i) rebuild_level(i);
  for (int i = 0; i < (int)levels_.size(); ++i) {
    Level& lv = levels_[i];
    for (int pi = 0; pi < (int)lv.orbit.points.size(); ++pi) {
      int p = lv.orbit.points[pi];
      Perm up = lv.orbit.rep_to(lv.gens, p);
      for (const Perm& s : lv.gens) {
        Perm schreier = up.then(s).then(lv.orbit.rep_to(lv.gens, s[p]).inverse());
        if (schreier.is_identity()) continue;
        Perm residue = sift(schreier, i + 1);
        if (residue.is_identity()) continue;
        // New strong generator; extend the base if it fixes all of it.
        bool fixes_all = true;
        for (int b : base_)
          if (residue[b] != b) {
            fixes_all = false;
            break;
          }
        if (fixes_all) {
          base_.push_back(smallest_moved(residue));
          levels_.push_back(Level{base_.back(), {}, {}});
        }
        strong_.push_back(std::move(residue));
        return true;
      }
    }
  }
  return false;
}

Perm StabChain::sift(const Perm& p, int from) const {
  Perm r = p;
  for (int i = from; i < (int)levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int t = r[lv.beta];
    if (t == lv.beta) continue;
    if (!lv.orbit.contains(t)) return r;
    r = r.then(lv.orbit.rep_to(lv.gens, t).inverse());
  }
  return r;
}

bool StabChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("chain: degree mismatch");
  return sift(p).is_identity();
}

int StabChain::transversal_size(int level) const {
  return (int)levels_.at(level).orbit.points.size();
}

PermGroup StabChain::level_stabilizer(int level) const {
  if (level < 0 || level > (int)levels_.size())
    throw std::invalid_argument("chain: level out of range");
  PermGroup g;
  g.degree = degree_;
  if (level == (int)levels_.size()) return g;
  g.generators = levels_[level].gens;
  return g;
}

mpz_class StabChain::level_order(int level) const {
  if (level < 0 || level > (int)levels_.size())
    throw std::invalid_argument("chain: level out of range");
  mpz_class o = 1;
  for (int i = level; i < (int)levels_.size(); ++i)
    o *= (long)levels_[i].orbit.points.size();
  return o;
}

const OrbitData& StabChain::level_orbit(int level) const { return levels_.at(level).orbit; }

Perm StabChain::transversal_element(int level, int pt) const {
  const Level& lv = levels_.at(level);
  return lv.orbit.rep_to(lv.gens, pt);
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  StabChain chain(g, points);
  return chain.level_stabilizer((int)points.size());
}

}  // namespace irrbase
