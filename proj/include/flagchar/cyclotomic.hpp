#ifndef FLAGCHAR_CYCLOTOMIC_HPP
#define FLAGCHAR_CYCLOTOMIC_HPP

// Exact arithmetic in Z[zeta_p], p prime, plus a small exact rational type
// for inner products.
//
// A value is stored by its unique coordinates over the Z-basis
// 1, zeta, ..., zeta^(p-2); the relation 1 + zeta + ... + zeta^(p-1) = 0
// eliminates zeta^(p-1). Equality is therefore componentwise.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "flagchar/error.hpp"

namespace flagchar {

class CycInt {
 public:
  CycInt() : p_(2), c_(1, 0) {}
  explicit CycInt(int p) : p_(p), c_(size_t(p - 1), 0) {
    require(p >= 2, Errc::invalid_argument, "cyclotomic order must be a prime >= 2");
  }

  static CycInt zero(int p) { return CycInt(p); }
  static CycInt integer(int p, std::int64_t n) {
    CycInt z(p);
    z.c_[0] = n;
    return z;
  }
  static CycInt one(int p) { return integer(p, 1); }
  // zeta_p^k for any integer k.
  static CycInt root(int p, std::int64_t k) {
    CycInt z(p);
    std::int64_t r = ((k % p) + p) % p;
    if (r == p - 1) {
      for (auto& x : z.c_) x = -1;
    } else {
      z.c_[size_t(r)] = 1;
    }
    return z;
  }

  int p() const { return p_; }
  const std::vector<std::int64_t>& coords() const { return c_; }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  std::int64_t rational_value() const {
    require(is_rational_integer(), Errc::non_integral_sum, "value is not a rational integer");
    return c_[0];
  }

  CycInt& operator+=(const CycInt& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(const CycInt& a) {
    CycInt r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = -a.c_[i];
    return r;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.match(b);
    const int p = a.p_;
    // Work in exponent space Z[x]/(x^p - 1), then reduce.
    std::vector<std::int64_t> v(size_t(p), 0);
    for (int i = 0; i < p - 1; ++i) {
      if (a.c_[size_t(i)] == 0) continue;
      for (int j = 0; j < p - 1; ++j) v[size_t((i + j) % p)] += a.c_[size_t(i)] * b.c_[size_t(j)];
    }
    return reduce(p, v);
  }

  CycInt scaled(std::int64_t n) const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * n;
    return r;
  }

  // Complex conjugation zeta -> zeta^(p-1).
  CycInt conj() const {
    std::vector<std::int64_t> v(size_t(p_), 0);
    for (int k = 0; k < p_ - 1; ++k) v[size_t((p_ - k) % p_)] = c_[size_t(k)];
    return reduce(p_, v);
  }

  // Componentwise exact division; the divisibility is an invariant of the
  // callers (coefficient extraction against an orthogonal basis).
  CycInt divided_exact(std::int64_t d) const {
    require(d != 0, Errc::division_by_zero, "division by zero");
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
      require(c_[i] % d == 0, Errc::non_integral_sum,
              "coordinate " + std::to_string(c_[i]) + " not divisible by " + std::to_string(d));
      r.c_[i] = c_[i] / d;
    }
    return r;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    a.match(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

 private:
  static CycInt reduce(int p, const std::vector<std::int64_t>& v) {
    CycInt r(p);
    for (int k = 0; k < p - 1; ++k) r.c_[size_t(k)] = v[size_t(k)] - v[size_t(p - 1)];
    return r;
  }
  void match(const CycInt& o) const {
    require(p_ == o.p_, Errc::prime_mismatch, "mixed cyclotomic orders");
  }

  int p_;
  std::vector<std::int64_t> c_;
};

// Exact rational with the small magnitudes this toolkit produces.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    require(d != 0, Errc::division_by_zero, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator==(const Rational& a, std::int64_t n) { return a.den == 1 && a.num == n; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace flagchar

#endif
