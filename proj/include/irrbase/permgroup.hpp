// permgroup.hpp
// Permutation groups given by generators; orbits with Schreier vectors.
#pragma once

#include <vector>

#include "irrbase/perm.hpp"

namespace irrbase {

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;  // identity generators are allowed but ignored

  static PermGroup from_images(int degree, const std::vector<std::vector<int>>& images);
  bool trivial() const;
};

// Orbit of a seed point with a Schreier vector: for each orbit point the
// generator and predecessor that reached it, so a transporting element
// can be rebuilt on demand.
struct OrbitData {
  int seed = -1;
  std::vector<int> points;       // BFS discovery order, points[0] == seed
  std::vector<int> position;     // degree-sized; -1 when not in orbit
  std::vector<int> parent;       // per orbit point (index into points); -1 for seed
  std::vector<int> via_gen;      // generator index used from parent; -1 for seed

  bool contains(int pt) const { return position[pt] >= 0; }
  // Element u with seed^u = pt.
  Perm rep_to(const std::vector<Perm>& gens, int pt) const;
};

OrbitData orbit_of(int degree, const std::vector<Perm>& gens, int seed);
// Orbit partition, orbits ordered by smallest element, points ascending.
std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens);

}  // namespace irrbase
