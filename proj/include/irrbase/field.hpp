// field.hpp
// Exact arithmetic in F_{p^f} for prime powers q = p^f <= 81.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace irrbase {

// One field element, stored as an index in [0, q).
// For f > 1 the index packs the polynomial representative's coefficient
// vector (c_0, ..., c_{f-1}) as c_0 + c_1*p + ... + c_{f-1}*p^(f-1).
// Index order is the canonical deterministic order used everywhere.
struct Fq {
  std::uint8_t v = 0;
  friend auto operator<=>(const Fq&, const Fq&) = default;
};

// Immutable description of F_{p^f}; all element arithmetic dispatches
// through it (no global field state). Safe to share between threads.
class Field {
 public:
  // p prime, f >= 1, p^f <= 81. For f > 1 an irreducible monic modulus
  // (coefficients c_0..c_f, ascending) may be supplied; otherwise a
  // built-in one is used. Irreducibility is verified by trial division.
  static Field make(int p, int f,
                    std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq elem(int index) const;

  Fq add(Fq a, Fq b) const { return Fq{add_[a.v * q_ + b.v]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[a.v * q_ + b.v]}; }
  Fq neg(Fq a) const { return Fq{neg_[a.v]}; }
  Fq inv(Fq a) const;          // error on zero
  Fq frobenius(Fq a) const { return Fq{frob_[a.v]}; }  // a^p
  Fq pow(Fq a, long e) const;

  // Fixed generator of the multiplicative group (smallest by index).
  Fq mul_generator() const { return Fq{zeta_}; }

  // Coefficient vector (c_0, ..., c_{f-1}) of an element.
  std::vector<int> coeffs(Fq a) const;
  Fq from_coeffs(const std::vector<int>& c) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  Field() = default;
  int p_ = 0, f_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
  std::uint8_t zeta_ = 0;
};

bool is_prime(int n);
// If q = p^f for a prime p, returns {p, f}.
std::optional<std::pair<int, int>> prime_power_split(int q);

}  // namespace irrbase
