#include "irrbase/permgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrbase {

PermGroup PermGroup::from_images(int degree, const std::vector<std::vector<int>>& images) {
  PermGroup g;
  g.degree = degree;
  for (const auto& im : images) {
    if ((int)im.size() != degree)
      throw std::invalid_argument("permgroup: generator degree mismatch");
    g.generators.push_back(Perm::checked(im));
  }
  return g;
}

bool PermGroup::trivial() const {
  for (const Perm& g : generators)
    if (!g.is_identity()) return false;
  return true;
}

Perm OrbitData::rep_to(const std::vector<Perm>& gens, int pt) const {
  if (!contains(pt)) throw std::invalid_argument("orbit: point not in orbit");
  std::vector<int> word;  // generator indices applied from seed outward
  int idx = position[pt];
  while (parent[idx] != -1) {
    word.push_back(via_gen[idx]);
    idx = parent[idx];
  }
  Perm u = Perm::identity((int)position.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u.then(gens[*it]);
  return u;
}

OrbitData orbit_of(int degree, const std::vector<Perm>& gens, int seed) {
  if (seed < 0 || seed >= degree) throw std::invalid_argument("orbit: seed out of range");
  OrbitData o;
  o.seed = seed;
  o.position.assign(degree, -1);
  o.points.push_back(seed);
  o.position[seed] = 0;
  o.parent.push_back(-1);
  o.via_gen.push_back(-1);
  for (size_t i = 0; i < o.points.size(); ++i) {
    int p = o.points[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int q = gens[gi][p];
      if (o.position[q] < 0) {
        o.position[q] = (int)o.points.size();
        o.points.push_back(q);
        o.parent.push_back((int)i);
        o.via_gen.push_back((int)gi);
      }
    }
  }
  return o;
}

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens) {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(degree, false);
  for (int s = 0; s < degree; ++s) {
    if (seen[s]) continue;
    OrbitData o = orbit_of(degree, gens, s);
    std::vector<int> pts = o.points;
    std::sort(pts.begin(), pts.end());
    for (int p : pts) seen[p] = true;
    result.push_back(std::move(pts));
  }
  return result;
}

}  // namespace irrbase
