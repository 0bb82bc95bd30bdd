// witness.hpp
// Explicit strict-descent chains of m-subspaces of F_q^d. Each step k >= 2
// carries a small invertible matrix that fixes every earlier subspace and
// moves the current one, so successive pointwise stabilizers in PGL_d(q)
// strictly shrink and the chain length is a lower bound on the maximal
// irredundant base length. Also: the matching closed-form bounds, the
// dimension sequence of the invariant matrix algebras along a chain, and
// the minimal-base check for the chain's tail subsequence.
#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "irrbase/action.hpp"
#include "irrbase/check_report.hpp"
#include "irrbase/field.hpp"
#include "irrbase/matrix.hpp"
#include "irrbase/subspace.hpp"

namespace irrbase {

struct WitnessCertificate {
  int x = 0, y = 0;  // 1-based coordinates
  // x != y: the transvection I + E_{x,y}. x == y: the diagonal map scaling
  // coordinate x by a generator of F_q^* (I + E_{x,x} is singular in
  // characteristic 2; any diagonal entry outside {0,1} certifies the same
  // descent, and such an entry exists exactly when q > 2).
  FqMatrix mat;
};

struct WitnessStep {
  int k = 0;                             // 1-based step index
  std::vector<std::vector<Fq>> vectors;  // the m spanning vectors
  Subspace omega;
  std::optional<WitnessCertificate> certificate;  // absent for k = 1 and the uncertified q = 2 tail
  std::optional<int> r, s, t;                     // step variables on their defining ranges
};

struct WitnessChain {
  int d = 0, m = 0, q = 0;
  std::shared_ptr<const Field> field;
  std::vector<WitnessStep> steps;  // all md - m^2 + d steps
  int claimed_length = 0;          // certified strict-descent prefix
};

// (lower, upper) bounds on the maximal irredundant base length of
// PGL_d(q) acting on m-subspaces: upper (m+1)d - 2m + 1, lower
// md - m^2 + 1 for q = 2 and (m+1)d - m^2 otherwise.
std::pair<int, int> irredundant_base_bounds(int d, int m, int q);

WitnessChain build_witness_chain(int d, int m, int q);

// Certificate mode: pure matrix checks, no group search. Verifies each
// certificate is invertible, fixes omega_j for j < k, moves omega_k;
// checks certificate coverage and the claimed length formula.
CheckReport verify_witness_certificates(const WitnessChain& chain);

// Chain mode: builds a stabilizer chain with the witness points as base
// prefix and confirms the pointwise stabilizer strictly shrinks at every
// step of the certified prefix.
CheckReport verify_witness_descent(const WitnessChain& chain, const ActionTable& action);

// The chain's tail subsequence (steps 2..md-m^2+1 for q = 2, steps
// m+1..md-m^2+d otherwise): checks it is a base, that removing any one
// point leaves a nontrivial stabilizer, and that its size matches the
// predicted maximal-minimal-base lower bound. The claim is a reported
// conjecture, not a proved theorem; callers decide how failures gate.
CheckReport check_witness_minimal_base(const WitnessChain& chain, const ActionTable& action);

// dim { g in M_d(F_q) : u g in <U> for every U in the prefix and basis
// vector u of U }, for every prefix length 0..subspaces.size().
std::vector<int> invariant_algebra_dims(const std::vector<Subspace>& subspaces, const Field& F,
                                        int d);

// Dimension checks along the full chain: first drop m(d-m), second drop
// b_1(d-b_1), later drops >= max(1, b_k(d-m)) where b_k is the growth of
// the join of the first k subspaces, terminal dimension 1 (scalars only).
CheckReport check_algebra_dims(const WitnessChain& chain);

// Longest subgroup chain of a cyclic group of order f: the number of
// prime divisors of f counted with multiplicity.
int cyclic_chain_length(long f);

}  // namespace irrbase
