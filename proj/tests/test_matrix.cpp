#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "irrbase/field.hpp"
#include "irrbase/matrix.hpp"

using namespace irrbase;

namespace {

// All d x d matrices over F, by counting in base q.
template <typename Fn>
void for_all_matrices(const Field& F, int d, Fn&& fn) {
  int cells = d * d;
  std::vector<int> digits(cells, 0);
  for (;;) {
    FqMatrix A(F, d, d);
    for (int i = 0; i < cells; ++i) A.a[i] = F.elem(digits[i]);
    fn(A);
    int i = 0;
    while (i < cells && ++digits[i] == F.q()) digits[i++] = 0;
    if (i == cells) break;
  }
}

}  // namespace

TEST_CASE("gl orders") {
  CHECK(gl_order(2, 2, false) == 6);
  CHECK(gl_order(2, 3, false) == 48);
  CHECK(gl_order(3, 2, false) == 168);
  CHECK(gl_order(2, 3, true) == 24);    // PGL_2(3)
  CHECK(gl_order(3, 3, true) == 5616);  // PGL_3(3)
  CHECK(gl_order(5, 2, true) == 9999360);
}

TEST_CASE("rref is idempotent and rank-correct, exhaustively") {
  for (int q : {2, 3}) {
    Field F = Field::make(q, 1);
    for (int d : {1, 2, 3}) {
      if (d == 3 && q == 3) continue;  // 3^9 matrices: covered at q = 2
      int invertible = 0;
      for_all_matrices(F, d, [&](const FqMatrix& A) {
        FqMatrix R = mat_rref(A);
        CHECK(mat_rref(R) == R);
        CHECK(mat_rank(A) == mat_rank(R));
        if (mat_invertible(A)) ++invertible;
      });
      CHECK(invertible == gl_order(d, q, false));
    }
  }
}

TEST_CASE("equal row spaces iff equal rref") {
  // Spot-check over F_2, d = 2: row space of A equals row space of B
  // exactly when their RREFs agree.
  Field F = Field::make(2, 1);
  std::vector<FqMatrix> mats;
  for_all_matrices(F, 2, [&](const FqMatrix& A) { mats.push_back(A); });
  auto row_space = [&](const FqMatrix& A) {
    // All F_2 combinations of the rows.
    std::vector<std::vector<int>> vecs;
    for (int c0 = 0; c0 < 2; ++c0)
      for (int c1 = 0; c1 < 2; ++c1) {
        std::vector<int> v(2, 0);
        for (int j = 0; j < 2; ++j) v[j] = (c0 * A.at(0, j).v + c1 * A.at(1, j).v) % 2;
        vecs.push_back(v);
      }
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    return vecs;
  };
  for (const auto& A : mats)
    for (const auto& B : mats)
      CHECK((row_space(A) == row_space(B)) == (mat_rref(A) == mat_rref(B)));
}

TEST_CASE("matrix product and identity") {
  Field F = Field::make(3, 1);
  FqMatrix I = mat_identity(F, 3);
  FqMatrix A(F, 3, 3);
  int vals[9] = {1, 2, 0, 0, 1, 1, 2, 0, 1};
  for (int i = 0; i < 9; ++i) A.a[i] = F.elem(vals[i]);
  CHECK(mat_mul(A, I) == A);
  CHECK(mat_mul(I, A) == A);
  CHECK(mat_invertible(A));
}

TEST_CASE("transvection fixes all basis vectors except one") {
  Field F = Field::make(3, 1);
  FqMatrix T = transvection(F, 3, 1, 2);  // I + E_{1,2}, 1-based indices
  CHECK(T.at(0, 1) == F.one());
  CHECK(T.at(1, 0) == F.zero());
  CHECK(mat_invertible(T));
  FqMatrix T2 = mat_mul(T, T);
  FqMatrix T3 = mat_mul(T2, T);
  CHECK(T3 == mat_identity(F, 3));  // order p = 3
}

TEST_CASE("gl generators generate: closure reaches the full order") {
  for (auto [d, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    Field F = Field::make(prime_power_split(q)->first, prime_power_split(q)->second);
    auto gens = gl_generators(F, d);
    for (const auto& [g, name] : gens) {
      CHECK(mat_invertible(g));
      CHECK(!name.empty());
    }
    // breadth-first closure over matrix products
    std::vector<FqMatrix> seen{mat_identity(F, d)};
    for (size_t i = 0; i < seen.size(); ++i)
      for (const auto& [g, name] : gens) {
        FqMatrix h = mat_mul(seen[i], g);
        bool found = false;
        for (const auto& s : seen)
          if (s == h) {
            found = true;
            break;
          }
        if (!found) seen.push_back(h);
      }
    CHECK(mpz_class((long)seen.size()) == gl_order(d, q, false));
  }
}

TEST_CASE("dimension cap") {
  Field F = Field::make(2, 1);
  CHECK_THROWS_AS(gl_generators(F, kMaxDim + 1), std::invalid_argument);
  CHECK_THROWS_AS(gl_order(0, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(gl_order(2, 6, false), std::invalid_argument);
}
