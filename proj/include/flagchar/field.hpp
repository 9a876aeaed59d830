#ifndef FLAGCHAR_FIELD_HPP
#define FLAGCHAR_FIELD_HPP

// Exact arithmetic in F_q, q = p^e <= 2^16, with the additive character
// theta(a) = zeta_p ^ (Tr_{F_q/F_p}(a)) exposed through its exponent.
//
// Elements are stored as integer reprs: the base-p digit string of the
// polynomial coordinates, repr = sum c_i p^i with c_0 the constant term.
// For prime fields the repr is just the residue.

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "flagchar/error.hpp"

namespace flagchar {

using fq_repr = std::uint16_t;

namespace detail {

inline bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Dense polynomial over F_p, coefficients low degree first.
using Poly = std::vector<int>;

inline Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// Remainder of a by monic m.
inline Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(std::move(a));
  const int dm = int(m.size()) - 1;
  while (int(a.size()) - 1 >= dm) {
    int shift = int(a.size()) - 1 - dm;
    int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      int& t = a[shift + i];
      t = ((t - lead * m[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

inline bool poly_divides(const Poly& d, const Poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

}  // namespace detail

class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> make(int p, int e = 1, std::vector<int> modulus = {}) {
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, e, std::move(modulus)));
  }

  int p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  bool is_valid(std::uint32_t v) const { return v < q_; }

  fq_repr add(fq_repr a, fq_repr b) const {
    if (e_ == 1) { int s = a + b; return fq_repr(s >= p_ ? s - p_ : s); }
    if (!add_tab_.empty()) return add_tab_[size_t(a) * q_ + b];
    return add_slow(a, b);
  }
  fq_repr neg(fq_repr a) const {
    if (e_ == 1) return fq_repr(a ? p_ - a : 0);
    if (!neg_tab_.empty()) return neg_tab_[a];
    return neg_slow(a);
  }
  fq_repr sub(fq_repr a, fq_repr b) const { return add(a, neg(b)); }
  fq_repr mul(fq_repr a, fq_repr b) const {
    if (!mul_tab_.empty()) return mul_tab_[size_t(a) * q_ + b];
    return mul_slow(a, b);
  }
  fq_repr inv(fq_repr a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero in F_" + std::to_string(q_));
    if (!inv_tab_.empty()) return inv_tab_[a];
    // q is tiny whenever tables are absent in practice; brute scan stays exact.
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, fq_repr(b)) == 1) return fq_repr(b);
    fail(Errc::check_failed, "no inverse found; field tables corrupt");
  }

  // Exponent k with theta(a) = zeta_p^k, i.e. k = Tr_{F_q/F_p}(a) as a residue.
  int theta_exp(fq_repr a) const { return theta_tab_[a]; }

  std::string repr_string(fq_repr a) const {
    std::string s;
    for (int i = 0; i < e_; ++i) { s += char('0' + a % p_); a = fq_repr(a / p_); }
    return s;
  }

 private:
  FieldSpec(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    require(detail::is_prime(p), Errc::not_prime, std::to_string(p) + " is not prime");
    require(e >= 1, Errc::invalid_argument, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      require(q <= 65536, Errc::unsupported_size, "q exceeds 2^16");
    }
    q_ = std::uint32_t(q);
    if (e == 1) {
      require(modulus_.empty(), Errc::invalid_argument, "prime field takes no modulus");
    } else {
      if (modulus_.empty()) modulus_ = builtin_modulus(p, e);
      require(int(modulus_.size()) == e + 1 && modulus_.back() == 1, Errc::invalid_argument,
              "modulus must be monic of degree e");
      for (int c : modulus_)
        require(0 <= c && c < p, Errc::invalid_argument, "modulus coefficient out of range");
      check_irreducible();
    }
    build_tables();
  }

  static std::vector<int> builtin_modulus(int p, int e) {
    if (p == 2 && e == 2) return {1, 1, 1};     // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0, 1};  // x^3 + x + 1
    if (p == 3 && e == 2) return {1, 0, 1};     // x^2 + 1
    fail(Errc::invalid_argument,
         "no built-in modulus for p=" + std::to_string(p) + ", e=" + std::to_string(e) +
             "; supply one");
  }

  void check_irreducible() const {
    using detail::Poly;
    // Degree 2 and 3 are reducible iff they have a root; higher degrees also
    // get trial division by every monic polynomial of degree <= e/2.
    for (int r = 0; r < p_; ++r) {
      int v = 0;
      for (int i = e_; i >= 0; --i) v = (v * r + modulus_[i]) % p_;
      require(v != 0, Errc::reducible_modulus, "modulus has root " + std::to_string(r));
    }
    for (int d = 2; 2 * d <= e_; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long long code = 0; code < count; ++code) {
        Poly cand(d + 1, 0);
        long long c = code;
        for (int i = 0; i < d; ++i) { cand[i] = int(c % p_); c /= p_; }
        cand[d] = 1;
        require(!detail::poly_divides(cand, modulus_, p_), Errc::reducible_modulus,
                "modulus has a degree-" + std::to_string(d) + " factor");
      }
    }
  }

  detail::Poly to_poly(fq_repr a) const {
    detail::Poly c(e_, 0);
    for (int i = 0; i < e_; ++i) { c[i] = a % p_; a = fq_repr(a / p_); }
    return detail::poly_trim(std::move(c));
  }
  fq_repr from_poly(const detail::Poly& c) const {
    std::uint32_t v = 0, f = 1;
    for (size_t i = 0; i < c.size(); ++i) { v += std::uint32_t(c[i]) * f; f *= p_; }
    return fq_repr(v);
  }

  fq_repr add_slow(fq_repr a, fq_repr b) const {
    std::uint32_t v = 0, f = 1;
    for (int i = 0; i < e_; ++i) {
      v += ((a % p_ + b % p_) % p_) * f;
      a = fq_repr(a / p_); b = fq_repr(b / p_); f *= p_;
    }
    return fq_repr(v);
  }
  fq_repr neg_slow(fq_repr a) const {
    std::uint32_t v = 0, f = 1;
    for (int i = 0; i < e_; ++i) {
      int d = a % p_;
      v += (d ? p_ - d : 0) * f;
      a = fq_repr(a / p_); f *= p_;
    }
    return fq_repr(v);
  }
  fq_repr mul_slow(fq_repr a, fq_repr b) const {
    if (e_ == 1) return fq_repr((std::uint32_t(a) * b) % p_);
    auto prod = detail::poly_mod(detail::poly_mul(to_poly(a), to_poly(b), p_), modulus_, p_);
    return from_poly(prod);
  }

  void build_tables() {
    theta_tab_.resize(q_);
    if (e_ == 1) {
      for (std::uint32_t a = 0; a < q_; ++a) theta_tab_[a] = int(a);
    } else {
      for (std::uint32_t a = 0; a < q_; ++a) {
        // Tr(a) = a + a^p + ... + a^(p^(e-1)), lands in the prime subfield.
        fq_repr acc = 0, frob = fq_repr(a);
        for (int i = 0; i < e_; ++i) {
          acc = add_slow(acc, frob);
          fq_repr next = frob;
          for (int k = 1; k < p_; ++k) next = mul_slow(next, frob);
          frob = next;
        }
        require(acc < p_, Errc::check_failed, "trace left the prime subfield");
        theta_tab_[a] = int(acc);
      }
    }
    if (q_ > 1024) return;  // slow paths stay available and exact
    mul_tab_.resize(size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        mul_tab_[size_t(a) * q_ + b] = mul_slow(fq_repr(a), fq_repr(b));
    if (e_ > 1) {
      add_tab_.resize(size_t(q_) * q_);
      neg_tab_.resize(q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        neg_tab_[a] = neg_slow(fq_repr(a));
        for (std::uint32_t b = 0; b < q_; ++b)
          add_tab_[size_t(a) * q_ + b] = add_slow(fq_repr(a), fq_repr(b));
      }
    }
    inv_tab_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
      fq_repr found = 0;
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_tab_[size_t(a) * q_ + b] == 1) { found = fq_repr(b); break; }
      require(found != 0, Errc::check_failed, "non-invertible nonzero element");
      inv_tab_[a] = found;
    }
  }

  int p_, e_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<fq_repr> mul_tab_, add_tab_, neg_tab_, inv_tab_;
  std::vector<int> theta_tab_;
};

using Fq = std::shared_ptr<const FieldSpec>;

inline Fq fq_make(int p, int e = 1, std::vector<int> modulus = {}) {
  return FieldSpec::make(p, e, std::move(modulus));
}

// Factor q = p^e; rejects non prime powers.
inline Fq fq_from_q(std::uint32_t q) {
  require(q >= 2, Errc::invalid_argument, "q must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  int e = 0;
  std::uint32_t m = q;
  while (m % p == 0) { m /= p; ++e; }
  require(m == 1, Errc::invalid_argument, std::to_string(q) + " is not a prime power");
  return fq_make(int(p), e);
}

// Checked element handle for the public API; hot loops use raw reprs.
struct FieldElem {
  const FieldSpec* f = nullptr;
  fq_repr v = 0;
};

inline FieldElem fq_elem(const Fq& f, std::uint32_t v) {
  require(f->is_valid(v), Errc::invalid_argument, "element repr out of range");
  return FieldElem{f.get(), fq_repr(v)};
}

namespace detail {
inline const FieldSpec* same_field(const FieldElem& a, const FieldElem& b) {
  require(a.f && b.f, Errc::field_mismatch, "unbound field element");
  require(a.f == b.f, Errc::field_mismatch, "elements from different field specs");
  return a.f;
}
}  // namespace detail

inline FieldElem operator+(FieldElem a, FieldElem b) {
  return {a.f, detail::same_field(a, b)->add(a.v, b.v)};
}
inline FieldElem operator-(FieldElem a, FieldElem b) {
  return {a.f, detail::same_field(a, b)->sub(a.v, b.v)};
}
inline FieldElem operator*(FieldElem a, FieldElem b) {
  return {a.f, detail::same_field(a, b)->mul(a.v, b.v)};
}
inline FieldElem operator/(FieldElem a, FieldElem b) {
  return {a.f, detail::same_field(a, b)->mul(a.v, b.f->inv(b.v))};
}
inline FieldElem operator-(FieldElem a) { return {a.f, a.f->neg(a.v)}; }
inline bool operator==(FieldElem a, FieldElem b) {
  detail::same_field(a, b);
  return a.v == b.v;
}

inline int theta(FieldElem a) {
  require(a.f != nullptr, Errc::field_mismatch, "unbound field element");
  return a.f->theta_exp(a.v);
}

}  // namespace flagchar

#endif
