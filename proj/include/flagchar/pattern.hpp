#ifndef FLAGCHAR_PATTERN_HPP
#define FLAGCHAR_PATTERN_HPP

// Pattern subgroups U_J of the lower unitriangular group over F_q, the
// truncation maps between them, and the 1-cocycle that linearises the right
// multiplication action on group algebra bases.
//
// A split (J, L) consists of disjoint closed lower root sets with K = J u L
// closed and U_J normal in U_K; every constructor re-verifies this.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagchar/combinat.hpp"
#include "flagchar/error.hpp"
#include "flagchar/field.hpp"

namespace flagchar {

class Mat {
 public:
  Mat() = default;
  Mat(Fq F, int n) : F_(std::move(F)), n_(n), e_(size_t(n) * size_t(n), 0) {
    require(1 <= n && n <= kMaxN, Errc::unsupported_size, "matrix dimension out of range");
  }

  static Mat identity(Fq F, int n) {
    Mat m(std::move(F), n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }
  // E + alpha * e_ij.
  static Mat root_element(const Fq& F, int n, int i, int j, fq_repr alpha) {
    Mat m = identity(F, n);
    require(i != j, Errc::invalid_argument, "root element needs i != j");
    m.at(i, j) = alpha;
    return m;
  }

  int n() const { return n_; }
  const Fq& field() const { return F_; }
  fq_repr& at(int i, int j) { return e_[size_t(i - 1) * size_t(n_) + size_t(j - 1)]; }
  fq_repr at(int i, int j) const { return e_[size_t(i - 1) * size_t(n_) + size_t(j - 1)]; }

  bool is_lower_unitriangular() const {
    for (int i = 1; i <= n_; ++i) {
      if (at(i, i) != 1) return false;
      for (int j = i + 1; j <= n_; ++j)
        if (at(i, j) != 0) return false;
    }
    return true;
  }

  // Support of the off-diagonal entries.
  RootSet supp_off_diagonal() const {
    RootSet s(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j && at(i, j) != 0) s.insert(i, j);
    return s;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    a.match(b);
    const FieldSpec& f = *a.F_;
    Mat c(a.F_, a.n_);
    for (int i = 1; i <= a.n_; ++i)
      for (int k = 1; k <= a.n_; ++k) {
        fq_repr aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 1; j <= a.n_; ++j) {
          fq_repr bkj = b.at(k, j);
          if (bkj == 0) continue;
          c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
        }
      }
    return c;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    a.match(b);
    Mat c(a.F_, a.n_);
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.F_->add(a.e_[k], b.e_[k]);
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.match(b);
    Mat c(a.F_, a.n_);
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.F_->sub(a.e_[k], b.e_[k]);
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    a.match(b);
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transposed() const {
    Mat t(F_, n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  // Inverse of a lower unitriangular matrix by forward substitution; no
  // pivoting ever happens.
  Mat inverse_unitriangular() const {
    require(is_lower_unitriangular(), Errc::invalid_argument,
            "inverse_unitriangular needs a lower unitriangular matrix");
    const FieldSpec& f = *F_;
    Mat x = identity(F_, n_);
    for (int j = 1; j <= n_; ++j)
      for (int i = j + 1; i <= n_; ++i) {
        fq_repr s = 0;
        for (int k = j; k < i; ++k) s = f.add(s, f.mul(at(i, k), x.at(k, j)));
        x.at(i, j) = f.neg(s);
      }
    return x;
  }

  std::string str() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        s += std::to_string(int(at(i, j)));
        s += (j == n_) ? (i == n_ ? "" : ";") : " ";
      }
    }
    return s;
  }

 private:
  void match(const Mat& o) const {
    require(F_ && o.F_, Errc::field_mismatch, "matrix without field");
    require(F_.get() == o.F_.get(), Errc::field_mismatch, "matrices over different fields");
    require(n_ == o.n_, Errc::dimension_mismatch, "matrix dimensions differ");
  }

  Fq F_;
  int n_ = 0;
  std::vector<fq_repr> e_;
};

// Keep only the entries at positions of S (applied to "Lie algebra" matrices
// whose meaningful entries are off-diagonal).
inline Mat pi_truncate(const Mat& a, const RootSet& s) {
  require(a.n() == s.n(), Errc::dimension_mismatch, "truncation set over wrong n");
  Mat b(a.field(), a.n());
  for (Pos p : s.positions()) b.at(p.i, p.j) = a.at(p.i, p.j);
  return b;
}

// A closed lower root set J together with the field; enumerates U_J by
// base-q codes over the row-major position order.
class PatternGroup {
 public:
  PatternGroup(Fq F, RootSet J) : F_(std::move(F)), J_(std::move(J)), pos_(J_.positions()) {
    require(J_.is_lower(), Errc::not_negative_root, "pattern must be strictly lower");
    require(is_closed(J_), Errc::not_closed, "pattern must be closed");
    size_ = 1;
    for (size_t k = 0; k < pos_.size(); ++k) {
      require(size_ <= (std::uint64_t(1) << 62) / F_->q(), Errc::too_large,
              "group order exceeds the representable range");
      size_ *= F_->q();
    }
  }

  const Fq& field() const { return F_; }
  const RootSet& roots() const { return J_; }
  const std::vector<Pos>& positions() const { return pos_; }
  int n() const { return J_.n(); }
  std::uint64_t order() const { return size_; }

  // Element with the given coefficient code: digits over positions in
  // row-major order, least significant first.
  Mat element(std::uint64_t code) const {
    Mat m = Mat::identity(F_, n());
    for (const Pos& p : pos_) {
      m.at(p.i, p.j) = fq_repr(code % F_->q());
      code /= F_->q();
    }
    require(code == 0, Errc::invalid_argument, "element code out of range");
    return m;
  }

  std::uint64_t code_of(const Mat& g) const {
    require(g.n() == n(), Errc::dimension_mismatch, "wrong dimension");
    require(g.is_lower_unitriangular(), Errc::invalid_argument, "not unitriangular");
    require(g.supp_off_diagonal().subset_of(J_), Errc::invalid_argument,
            "support leaves the pattern");
    std::uint64_t code = 0;
    for (size_t k = pos_.size(); k-- > 0;) code = code * F_->q() + g.at(pos_[k].i, pos_[k].j);
    return code;
  }

  bool contains(const Mat& g) const {
    return g.n() == n() && g.is_lower_unitriangular() &&
           g.supp_off_diagonal().subset_of(J_);
  }

  // Materialize all q^[J] elements in code order; guarded by the budget.
  std::vector<Mat> elements(std::uint64_t budget = kDefaultBudget) const {
    check_budget(size_, budget, "pattern group enumeration");
    std::vector<Mat> out;
    out.reserve(size_t(size_));
    for (std::uint64_t c = 0; c < size_; ++c) out.push_back(element(c));
    return out;
  }

 private:
  Fq F_;
  RootSet J_;
  std::vector<Pos> pos_;
  std::uint64_t size_ = 1;
};

// Unique factorization of g in U_J as a product of root elements
// x_{ij}(alpha), peeled column by column from the left. Returns only the
// nonzero factors, in product order.
inline std::vector<std::pair<Pos, fq_repr>> factor_unitriangular(const Mat& g, const RootSet& J) {
  require(g.is_lower_unitriangular(), Errc::invalid_argument, "not unitriangular");
  require(g.supp_off_diagonal().subset_of(J), Errc::invalid_argument,
          "support leaves the pattern");
  const FieldSpec& f = *g.field();
  Mat h = g;
  std::vector<std::pair<Pos, fq_repr>> word;
  for (int j = 1; j < g.n(); ++j)
    for (int i = j + 1; i <= g.n(); ++i) {
      fq_repr beta = h.at(i, j);
      if (beta == 0) continue;
      // Row j of h equals e_j at this point, so the update clears (i,j)
      // and touches nothing else.
      for (int c = 1; c <= g.n(); ++c)
        h.at(i, c) = f.sub(h.at(i, c), f.mul(beta, h.at(j, c)));
      word.push_back({Pos{i, j}, beta});
    }
  require(h == Mat::identity(g.field(), g.n()), Errc::check_failed,
          "factorization residue not identity");
  return word;
}

// A monomial-linearisation context: disjoint closed J, L with K = J u L
// closed and U_J normal in U_K.
struct Split {
  Fq F;
  RootSet J, L, K;

  Split(Fq field, RootSet j, RootSet l)
      : F(std::move(field)), J(std::move(j)), L(std::move(l)), K(J | L) {
    verify();
  }

  int n() const { return J.n(); }

  void verify() const {
    auto check = [](bool ok, const char* what) {
      require(ok, Errc::hypothesis_violated, what);
    };
    check(J.is_lower() && L.is_lower(), "J and L must be strictly lower");
    check(J.disjoint_from(L), "J and L must be disjoint");
    check(is_closed(J), "J must be closed");
    check(is_closed(L), "L must be closed");
    check(is_closed(K), "K = J u L must be closed");
    check(normality_check(J, K), "U_J must be normal in U_K");
  }

  // The full-group context J = Phi^-, L = empty.
  static Split full(Fq field, int n) {
    return Split(std::move(field), RootSet::phi_minus(n), RootSet(n));
  }

  bool is_full() const { return J == RootSet::phi_minus(n()) && L.empty(); }
};

// Split attached to a row-standard tableau: J(s), L(s).
inline Split tableau_split(Fq F, const Tableau& s) {
  auto r = root_sets(s);
  return Split(std::move(F), r.J, r.L);
}

// rho(g): keep the L-part of g - E and restore the diagonal. This is a group
// homomorphism U_K -> U_L with kernel U_J.
inline Mat rho(const Mat& g, const Split& sp) {
  return pi_truncate(g - Mat::identity(g.field(), g.n()), sp.L) +
         Mat::identity(g.field(), g.n());
}

// The 1-cocycle f(g) = rho(g^-1) g - E; its values have support in J.
inline Mat cocycle_f(const Mat& g, const Split& sp) {
  Mat v = rho(g.inverse_unitriangular(), sp) * g - Mat::identity(g.field(), g.n());
  require(v.supp_off_diagonal().subset_of(sp.J), Errc::check_failed,
          "cocycle value leaves V_J");
  return v;
}

// The twisted conjugation A o g = rho(g^-1) A g on V (no truncation); the
// cocycle rule reads f(xg) = f(x) o g + f(g).
inline Mat circ_action(const Mat& a, const Mat& g, const Split& sp) {
  return rho(g.inverse_unitriangular(), sp) * a * g;
}

// Label action on V_J: B . g = pi_J(rho(g)^t B g^(-t)).
inline Mat dot_action(const Mat& b, const Mat& g, const Split& sp) {
  Mat gmt = g.inverse_unitriangular().transposed();
  return pi_truncate(rho(g, sp).transposed() * b * gmt, sp.J);
}

}  // namespace flagchar

#endif
