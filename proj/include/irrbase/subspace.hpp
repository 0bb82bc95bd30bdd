// subspace.hpp
// Points of PG_m(F_q^d): subspaces in RREF-canonical form, enumeration,
// and images under invertible matrices and the Frobenius map.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "irrbase/matrix.hpp"

namespace irrbase {

// An m-dimensional subspace of F_q^d, identified by the unique RREF basis
// matrix (m x d, rank m). Comparison is lexicographic on the row-major
// entry sequence, which fixes a deterministic point order.
struct Subspace {
  FqMatrix basis;

  int dim() const { return basis.rows; }
  int ambient() const { return basis.cols; }

  // Canonicalize arbitrary spanning rows (zero rows dropped).
  static Subspace span(const FqMatrix& rows);

  bool operator==(const Subspace& o) const { return basis.a == o.basis.a && basis.cols == o.basis.cols; }
  bool operator<(const Subspace& o) const;
};

// Number of m-dimensional subspaces of F_q^d:
// prod_{i<m} (q^(d-i) - 1) / (q^(i+1) - 1).
mpz_class gaussian_binomial(int d, int m, int q);

// All m-subspaces of F_q^d in ascending (lexicographic) order.
// Throws when the count exceeds cap.
std::vector<Subspace> enumerate_subspaces(int d, int m, const Field& F,
                                          std::size_t cap = 100000);

// Image of U under invertible g (right action on rows), re-canonicalized.
Subspace subspace_image(const Subspace& U, const FqMatrix& g);
// Entrywise x -> x^p on the basis, re-canonicalized.
Subspace subspace_frobenius(const Subspace& U);

bool is_subspace_of(const Subspace& U, const Subspace& W);
// dim U + dim W == d and U + W = F_q^d.
bool spans_with(const Subspace& U, const Subspace& W);

}  // namespace irrbase
