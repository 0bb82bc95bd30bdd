#include "irrbase/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrbase {

Subspace Subspace::span(const FqMatrix& rows) {
  FqMatrix R = rows;
  int rank = mat_rref_inplace(R);
  FqMatrix B(*R.field, rank, R.cols);
  std::copy(R.a.begin(), R.a.begin() + (size_t)rank * R.cols, B.a.begin());
  return Subspace{std::move(B)};
}

bool Subspace::operator<(const Subspace& o) const {
  if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
  return basis.a < o.basis.a;
}

mpz_class gaussian_binomial(int d, int m, int q) {
  if (m < 0 || m > d) throw std::invalid_argument("subspace: need 0 <= m <= d");
  if (!prime_power_split(q)) throw std::invalid_argument("subspace: q must be a prime power");
  mpz_class num = 1, den = 1, qe;
  for (int i = 0; i < m; ++i) {
    mpz_ui_pow_ui(qe.get_mpz_t(), q, d - i);
    num *= qe - 1;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, i + 1);
    den *= qe - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(int d, int m, const Field& F, std::size_t cap) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("subspace: dimension out of range");
  if (m < 0 || m > d) throw std::invalid_argument("subspace: need 0 <= m <= d");
  mpz_class count = gaussian_binomial(d, m, F.q());
  if (count > (unsigned long)cap)
    throw std::invalid_argument("subspace: enumeration count " + count.get_str() +
                                " exceeds cap " + std::to_string(cap));

  std::vector<Subspace> out;
  out.reserve(count.get_ui());

  // Pivot columns j_0 < ... < j_{m-1}; entry (r, c) is free iff c > j_r and
  // c is not a pivot column. Everything else is forced by RREF shape.
  std::vector<int> piv(m);
  for (int i = 0; i < m; ++i) piv[i] = i;
  bool more = (m <= d);
  while (more) {
    std::vector<std::pair<int, int>> free_cells;
    std::vector<bool> is_piv(d, false);
    for (int r = 0; r < m; ++r) is_piv[piv[r]] = true;
    for (int r = 0; r < m; ++r)
      for (int c = piv[r] + 1; c < d; ++c)
        if (!is_piv[c]) free_cells.emplace_back(r, c);

    FqMatrix B(F, m, d);
    for (int r = 0; r < m; ++r) B.at(r, piv[r]) = F.one();
    size_t nfree = free_cells.size();
    std::vector<int> fill(nfree, 0);
    while (true) {
      for (size_t i = 0; i < nfree; ++i)
        B.at(free_cells[i].first, free_cells[i].second) = F.elem(fill[i]);
      out.push_back(Subspace{B});
      size_t i = 0;
      for (; i < nfree; ++i) {
        if (++fill[i] < F.q()) break;
        fill[i] = 0;
      }
      if (i == nfree) break;
    }

    // next pivot combination
    int r = m - 1;
    while (r >= 0 && piv[r] == d - m + r) --r;
    if (r < 0)
      more = false;
    else {
      ++piv[r];
      for (int i = r + 1; i < m; ++i) piv[i] = piv[i - 1] + 1;
    }
    if (m == 0) more = false;
  }

  std::sort(out.begin(), out.end());
  if (out.size() != count.get_ui())
    throw std::logic_error("subspace: enumeration disagrees with the closed-form count");
  return out;
}

Subspace subspace_image(const Subspace& U, const FqMatrix& g) {
  if (g.rows != g.cols || g.rows != U.ambient())
    throw std::invalid_argument("subspace: map has wrong shape");
  return Subspace::span(mat_mul(U.basis, g));
}

Subspace subspace_frobenius(const Subspace& U) {
  return Subspace::span(mat_frobenius(U.basis));
}

bool is_subspace_of(const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient()) return false;
  return mat_rank(mat_stack(W.basis, U.basis)) == W.dim();
}

bool spans_with(const Subspace& U, const Subspace& W) {
  if (U.ambient() != W.ambient()) return false;
  return U.dim() + W.dim() == U.ambient() &&
         mat_rank(mat_stack(U.basis, W.basis)) == U.ambient();
}

}  // namespace irrbase
