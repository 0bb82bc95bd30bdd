#include "irrbase/matrix.hpp"

#include <stdexcept>

namespace irrbase {

FqMatrix mat_identity(const Field& F, int d) {
  FqMatrix I(F, d, d);
  for (int i = 0; i < d; ++i) I.at(i, i) = F.one();
  return I;
}

FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B) {
  if (A.cols != B.rows || A.field != B.field)
    throw std::invalid_argument("matrix: incompatible product");
  const Field& F = *A.field;
  FqMatrix C(F, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      Fq aik = A.at(i, k);
      if (aik.v == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

FqMatrix mat_stack(const FqMatrix& top, const FqMatrix& bottom) {
  if (top.cols != bottom.cols || top.field != bottom.field)
    throw std::invalid_argument("matrix: incompatible stack");
  FqMatrix S(*top.field, top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), S.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), S.a.begin() + top.a.size());
  return S;
}

FqMatrix mat_frobenius(const FqMatrix& A) {
  FqMatrix B = A;
  for (Fq& x : B.a) x = A.field->frobenius(x);
  return B;
}

int mat_rref_inplace(FqMatrix& A) {
  const Field& F = *A.field;
  int lead = 0;
  for (int col = 0; col < A.cols && lead < A.rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < A.rows; ++r)
      if (A.at(r, col).v != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < A.cols; ++c) std::swap(A.at(pivot, c), A.at(lead, c));
    Fq s = F.inv(A.at(lead, col));
    for (int c = 0; c < A.cols; ++c) A.at(lead, c) = F.mul(A.at(lead, c), s);
    for (int r = 0; r < A.rows; ++r) {
      if (r == lead) continue;
      Fq t = A.at(r, col);
      if (t.v == 0) continue;
      for (int c = 0; c < A.cols; ++c)
        A.at(r, c) = F.sub(A.at(r, c), F.mul(t, A.at(lead, c)));
    }
    ++lead;
  }
  return lead;
}

FqMatrix mat_rref(const FqMatrix& A) {
  FqMatrix R = A;
  mat_rref_inplace(R);
  return R;
}

int mat_rank(const FqMatrix& A) {
  FqMatrix R = A;
  return mat_rref_inplace(R);
}

bool mat_invertible(const FqMatrix& A) {
  return A.rows == A.cols && mat_rank(A) == A.rows;
}

FqMatrix transvection(const Field& F, int d, int x, int y) {
  if (x < 1 || y < 1 || x > d || y > d)
    throw std::invalid_argument("matrix: transvection index out of range");
  FqMatrix T = mat_identity(F, d);
  T.at(x - 1, y - 1) = F.add(T.at(x - 1, y - 1), F.one());
  return T;
}

std::vector<std::pair<FqMatrix, std::string>> gl_generators(const Field& F, int d) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("matrix: dimension out of range");
  std::vector<std::pair<FqMatrix, std::string>> gens;

  if (F.q() > 2) {
    FqMatrix D = mat_identity(F, d);
    D.at(0, 0) = F.mul_generator();
    gens.emplace_back(std::move(D), "diag");
  }
  if (d >= 2) {
    FqMatrix C(F, d, d);
    for (int i = 0; i + 1 < d; ++i) C.at(i, i + 1) = F.one();
    // sign on the wrap-around entry puts the cycle in SL
    C.at(d - 1, 0) = (d % 2 == 0) ? F.neg(F.one()) : F.one();
    gens.emplace_back(std::move(C), "cycle");
    gens.emplace_back(transvection(F, d, 2, 1), "transvection");
  }
  if (gens.empty()) gens.emplace_back(mat_identity(F, 1), "identity");
  return gens;
}

mpz_class gl_order(int d, int q, bool projective) {
  if (d < 1) throw std::invalid_argument("matrix: dimension must be positive");
  if (!prime_power_split(q)) throw std::invalid_argument("matrix: q must be a prime power");
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), q, d);
  mpz_class order = 1, qi = 1;
  for (int i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= q;
  }
  if (projective) order /= q - 1;
  return order;
}

}  // namespace irrbase
