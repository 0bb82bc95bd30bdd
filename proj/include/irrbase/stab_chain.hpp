// stab_chain.hpp
// Deterministic Schreier-Sims stabilizer chains with a prescribed base
// prefix. Supports order, membership, sifting, and pointwise stabilizers.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "irrbase/permgroup.hpp"

namespace irrbase {

class StabChain {
 public:
  // Builds a chain whose base starts with base_prefix (every prefix point
  // is retained as a level; redundant ones get a trivial transversal) and
  // is then extended by smallest moved points until the last stabilizer
  // is trivial. Fully deterministic for a fixed generator list.
  StabChain(const PermGroup& g, const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  const mpz_class& order() const { return order_; }
  const std::vector<int>& base() const { return base_; }
  int levels() const { return (int)base_.size(); }
  int transversal_size(int level) const;

  bool contains(const Perm& p) const;
  // Sifts p through levels [from, end); returns the residue.
  Perm sift(const Perm& p, int from = 0) const;

  // Generators of the stabilizer of base()[0..level-1] (level == levels()
  // yields the trivial group). With a chain built on a prefix, level =
  // prefix length gives the pointwise stabilizer of the prefix.
  PermGroup level_stabilizer(int level) const;
  mpz_class level_order(int level) const;

  // Orbit of base()[level] under the level stabilizer, with transversal.
  const OrbitData& level_orbit(int level) const;
  // Transversal element u with base()[level]^u = pt.
  Perm transversal_element(int level, int pt) const;

 private:
  struct Level {
    int beta;
    std::vector<Perm> gens;  // strong generators fixing base[0..i-1]
    OrbitData orbit;
  };
  void rebuild_level(int i);
  bool close_once();

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<Perm> strong_;  // deduplicated strong generating set
  mpz_class order_ = 1;
};

// Pointwise stabilizer of a point sequence, via a chain with that prefix.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

}  // namespace irrbase
