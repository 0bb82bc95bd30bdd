#include "irrbase/field.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace irrbase {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power_split(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int f = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, f);
}

namespace {

// Built-in irreducible monic moduli (ascending coefficients c_0..c_f)
// for every non-prime q <= 81.
const std::map<int, std::vector<int>>& builtin_moduli() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},           // x^2+x+1
      {8, {1, 1, 0, 1}},        // x^3+x+1
      {9, {2, 2, 1}},           // x^2+2x+2
      {16, {1, 1, 0, 0, 1}},    // x^4+x+1
      {25, {2, 4, 1}},          // x^2+4x+2
      {27, {1, 2, 0, 1}},       // x^3+2x+1
      {32, {1, 0, 1, 0, 0, 1}},      // x^5+x^2+1
      {49, {3, 6, 1}},               // x^2+6x+3
      {64, {1, 1, 0, 1, 1, 0, 1}},   // x^6+x^4+x^3+x+1
      {81, {2, 0, 0, 2, 1}},         // x^4+2x^3+2
  };
  return table;
}

using Poly = std::vector<int>;  // ascending coefficients mod p

Poly poly_mod(Poly a, const Poly& m, int p) {
  int dm = (int)m.size() - 1;
  for (int i = (int)a.size() - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    // subtract c * x^(i-dm) * m  (m is monic)
    for (int j = 0; j <= dm; ++j) {
      int& t = a[i - dm + j];
      t = ((t - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Remainder of monic m divided by monic divisor d over F_p.
Poly poly_rem(Poly a, const Poly& d, int p) {
  int dd = (int)d.size() - 1;
  for (int i = (int)a.size() - 1; i >= dd; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      int& t = a[i - dd + j];
      t = ((t - c * d[j]) % p + p) % p;
    }
  }
  a.resize(std::max(dd, 1));
  return a;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool poly_irreducible(const Poly& m, int p) {
  int f = (int)m.size() - 1;
  for (int deg = 1; deg <= f / 2; ++deg) {
    // iterate all p^deg monic candidates
    long total = 1;
    for (int i = 0; i < deg; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      Poly d(deg + 1, 0);
      long c = code;
      for (int i = 0; i < deg; ++i) {
        d[i] = (int)(c % p);
        c /= p;
      }
      d[deg] = 1;
      if (poly_is_zero(poly_rem(m, d, p))) return false;
    }
  }
  return true;
}

int pack(const Poly& a, int p, int f) {
  int idx = 0;
  for (int i = f - 1; i >= 0; --i) idx = idx * p + (i < (int)a.size() ? a[i] : 0);
  return idx;
}

Poly unpack(int idx, int p, int f) {
  Poly a(f, 0);
  for (int i = 0; i < f; ++i) {
    a[i] = idx % p;
    idx /= p;
  }
  return a;
}

}  // namespace

Field Field::make(int p, int f, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime, got " + std::to_string(p));
  if (f < 1) throw std::invalid_argument("field: f must be >= 1");
  long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > 81) throw std::invalid_argument("field: q = p^f exceeds the cap of 81");
  }

  Field F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = (int)q;

  if (f == 1) {
    if (modulus) throw std::invalid_argument("field: modulus only applies when f > 1");
  } else {
    if (modulus) {
      if ((int)modulus->size() != f + 1 || (*modulus)[f] != 1)
        throw std::invalid_argument("field: modulus must be monic of degree f");
      for (int c : *modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("field: modulus coefficients must lie in [0, p)");
      F.modulus_ = *modulus;
    } else {
      F.modulus_ = builtin_moduli().at((int)q);
    }
    if (!poly_irreducible(F.modulus_, p))
      throw std::invalid_argument("field: modulus is reducible");
  }

  const int n = F.q_;
  F.add_.resize(n * n);
  F.mul_.resize(n * n);
  F.neg_.resize(n);
  F.inv_.assign(n, 0);
  F.frob_.resize(n);

  for (int a = 0; a < n; ++a) {
    Poly pa = unpack(a, p, f);
    Poly na(f);
    for (int i = 0; i < f; ++i) na[i] = (p - pa[i]) % p;
    F.neg_[a] = (std::uint8_t)pack(na, p, f);
    for (int b = 0; b < n; ++b) {
      Poly pb = unpack(b, p, f);
      Poly s(f);
      for (int i = 0; i < f; ++i) s[i] = (pa[i] + pb[i]) % p;
      F.add_[a * n + b] = (std::uint8_t)pack(s, p, f);
      Poly m = (f == 1) ? Poly{(pa[0] * pb[0]) % p} : poly_mulmod(pa, pb, F.modulus_, p);
      F.mul_[a * n + b] = (std::uint8_t)pack(m, p, f);
    }
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (F.mul_[a * n + b] == 1) {
        F.inv_[a] = (std::uint8_t)b;
        break;
      }
  for (int a = 0; a < n; ++a) {
    int r = a;
    for (int i = 1; i < p; ++i) r = F.mul_[r * n + a];
    F.frob_[a] = (std::uint8_t)r;
  }

  // smallest element of multiplicative order q-1
  for (int a = 2 - (n == 2 ? 1 : 0); a < n; ++a) {
    int ord = 1, x = a;
    while (x != 1) {
      x = F.mul_[x * n + a];
      ++ord;
    }
    if (ord == n - 1) {
      F.zeta_ = (std::uint8_t)a;
      break;
    }
  }
  if (n == 2) F.zeta_ = 1;
  return F;
}

Fq Field::elem(int index) const {
  if (index < 0 || index >= q_) throw std::invalid_argument("field: element index out of range");
  return Fq{(std::uint8_t)index};
}

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw std::invalid_argument("field: inverse of zero");
  return Fq{inv_[a.v]};
}

Fq Field::pow(Fq a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Fq r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> Field::coeffs(Fq a) const {
  std::vector<int> c(f_);
  int idx = a.v;
  for (int i = 0; i < f_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

Fq Field::from_coeffs(const std::vector<int>& c) const {
  if ((int)c.size() > f_) throw std::invalid_argument("field: too many coefficients");
  int idx = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("field: coefficient out of range");
    idx = idx * p_ + c[i];
  }
  return Fq{(std::uint8_t)idx};
}

}  // namespace irrbase
