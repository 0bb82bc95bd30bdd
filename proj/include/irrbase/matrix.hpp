// matrix.hpp
// Dense matrices over a Field: multiplication, RREF, GL generators, orders.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "irrbase/field.hpp"

namespace irrbase {

// Row-major matrix over a caller-owned Field. Vectors act as rows,
// maps act on the right: image of v under g is v*g.
struct FqMatrix {
  const Field* field = nullptr;
  int rows = 0, cols = 0;
  std::vector<Fq> a;

  FqMatrix() = default;
  FqMatrix(const Field& F, int r, int c) : field(&F), rows(r), cols(c), a(r * c) {}

  Fq& at(int r, int c) { return a[r * cols + c]; }
  Fq at(int r, int c) const { return a[r * cols + c]; }

  bool operator==(const FqMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

FqMatrix mat_identity(const Field& F, int d);
FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_stack(const FqMatrix& top, const FqMatrix& bottom);
// Entrywise x -> x^p.
FqMatrix mat_frobenius(const FqMatrix& A);

// In-place Gauss-Jordan reduction; returns rank. Deterministic: pivots
// are chosen as the first nonzero entry in column order.
int mat_rref_inplace(FqMatrix& A);
FqMatrix mat_rref(const FqMatrix& A);
int mat_rank(const FqMatrix& A);
bool mat_invertible(const FqMatrix& A);

// I + E_{x,y} (1-based x != y): e_x -> e_x + e_y, other rows fixed.
FqMatrix transvection(const Field& F, int d, int x, int y);

// Generators of GL_d(q): diag(zeta,1,...,1) (omitted when q = 2, where it
// is the identity), the cyclic coordinate map e_1->e_2->...->e_d->±e_1
// with the sign chosen to land in SL, and the transvection I + E_{2,1}.
// Labels parallel the matrices ("diag", "cycle", "transvection").
std::vector<std::pair<FqMatrix, std::string>> gl_generators(const Field& F, int d);

// |GL_d(q)| = prod_{i<d} (q^d - q^i); divided by q-1 when projective.
mpz_class gl_order(int d, int q, bool projective);

inline constexpr int kMaxDim = 12;

}  // namespace irrbase
