#include "flagchar/pattern.hpp"
#include "test_util.hpp"

using namespace flagchar;
using testutil::throws_errc;

TEST_CASE("matrix arithmetic basics") {
  auto F = fq_make(3);
  Mat e = Mat::identity(F, 3);
  Mat a = Mat::root_element(F, 3, 2, 1, 1);
  Mat b = Mat::root_element(F, 3, 2, 1, 2);
  REQUIRE(a * b == e);  // x_21(1) x_21(2) = x_21(0)
  REQUIRE((a * a) == b);
  REQUIRE(a.transposed().at(1, 2) == 1);
  REQUIRE(a.is_lower_unitriangular());
  REQUIRE(!a.transposed().is_lower_unitriangular());
  REQUIRE(throws_errc(Errc::field_mismatch, [&] { (void)(a * Mat::identity(fq_make(2), 3)); }));
  REQUIRE(throws_errc(Errc::dimension_mismatch, [&] { (void)(a * Mat::identity(F, 4)); }));
}

TEST_CASE("unitriangular inverse: frozen example and round trips") {
  auto F = fq_make(3);
  // (E + e21 + e32)^(-1) = E - e21 - e32 + e31
  Mat g = Mat::identity(F, 3);
  g.at(2, 1) = 1;
  g.at(3, 2) = 1;
  Mat inv = g.inverse_unitriangular();
  REQUIRE(inv.at(2, 1) == 2);
  REQUIRE(inv.at(3, 2) == 2);
  REQUIRE(inv.at(3, 1) == 1);
  REQUIRE(g * inv == Mat::identity(F, 3));

  PatternGroup u43(fq_make(2), RootSet::phi_minus(4));
  for (std::uint64_t c = 0; c < u43.order(); ++c) {
    Mat x = u43.element(c);
    REQUIRE(x * x.inverse_unitriangular() == Mat::identity(u43.field(), 4));
  }
  Mat upper = Mat::identity(F, 3);
  upper.at(1, 3) = 1;
  REQUIRE(throws_errc(Errc::invalid_argument, [&] { upper.inverse_unitriangular(); }));
}

TEST_CASE("pattern group enumeration and codes") {
  RootSet j(4);
  j.insert(2, 1);
  j.insert(3, 1);
  j.insert(3, 2);
  PatternGroup g(fq_make(3), j);
  REQUIRE(g.order() == 27);
  for (std::uint64_t c = 0; c < g.order(); ++c) {
    Mat m = g.element(c);
    REQUIRE(g.contains(m));
    REQUIRE(g.code_of(m) == c);
  }
  auto all = g.elements();
  REQUIRE(all.size() == 27);
  REQUIRE(all[0] == Mat::identity(g.field(), 4));
  // Code order is lexicographic in the coefficient vector (2,1) < (3,1) < (3,2).
  REQUIRE(all[1].at(2, 1) == 1);
  REQUIRE(throws_errc(Errc::too_large, [&] { g.elements(10); }));
  REQUIRE(throws_errc(Errc::invalid_argument, [&] { g.element(27); }));

  RootSet open(3);
  open.insert(2, 1);
  open.insert(3, 2);
  REQUIRE(throws_errc(Errc::not_closed, [&] { PatternGroup(fq_make(2), open); }));
}

TEST_CASE("factorization into root elements") {
  for (auto F : {fq_make(2), fq_make(3)}) {
    PatternGroup u(F, RootSet::phi_minus(4));
    for (std::uint64_t c = 0; c < u.order(); ++c) {
      Mat g = u.element(c);
      auto word = factor_unitriangular(g, u.roots());
      Mat prod = Mat::identity(F, 4);
      for (auto& [pos, alpha] : word) {
        REQUIRE(alpha != 0);
        prod = prod * Mat::root_element(F, 4, pos.i, pos.j, alpha);
      }
      REQUIRE(prod == g);
    }
  }
  // Factoring inside a proper pattern keeps the factors there.
  RootSet j(4);
  j.insert(3, 1);
  j.insert(4, 1);
  j.insert(4, 2);
  PatternGroup uj(fq_make(3), j);
  for (std::uint64_t c = 0; c < uj.order(); ++c)
    for (auto& [pos, alpha] : factor_unitriangular(uj.element(c), j))
      REQUIRE(j.contains(pos));
}

TEST_CASE("split validation enforces the linearisation hypothesis") {
  auto F = fq_make(2);
  // K = {(3,2),(2,1)} is not closed.
  RootSet j1(3), l1(3);
  j1.insert(3, 2);
  l1.insert(2, 1);
  REQUIRE(throws_errc(Errc::hypothesis_violated, [&] { Split(F, j1, l1); }));
  // K closed but U_J not normal: (3,2)(2,1) lands in (3,1) outside J.
  RootSet j2(3), l2(3);
  j2.insert(2, 1);
  l2.insert(3, 2);
  l2.insert(3, 1);
  REQUIRE(throws_errc(Errc::hypothesis_violated, [&] { Split(F, j2, l2); }));
  // Overlap.
  RootSet j3(3), l3(3);
  j3.insert(2, 1);
  l3.insert(2, 1);
  REQUIRE(throws_errc(Errc::hypothesis_violated, [&] { Split(F, j3, l3); }));

  // Every tableau split satisfies the hypothesis by construction.
  for (int n = 2; n <= 5; ++n)
    for (auto& lam : compositions(n))
      for (auto& s : enumerate_rstd(lam)) (void)tableau_split(F, s);
}

TEST_CASE("rho is a homomorphism onto U_L with kernel U_J") {
  for (auto F : {fq_make(2), fq_make(3)}) {
    Tableau s(Composition{2, 2}, {{1, 3}, {2, 4}});
    Split sp = tableau_split(F, s);
    PatternGroup uk(F, sp.K);
    Mat e = Mat::identity(F, 4);
    for (std::uint64_t a = 0; a < uk.order(); ++a) {
      Mat x = uk.element(a);
      Mat rx = rho(x, sp);
      REQUIRE(rx.supp_off_diagonal().subset_of(sp.L));
      bool in_uj = x.supp_off_diagonal().subset_of(sp.J);
      REQUIRE((rx == e) == in_uj);
      for (std::uint64_t b = 0; b < uk.order(); ++b) {
        Mat y = uk.element(b);
        REQUIRE(rho(x * y, sp) == rx * rho(y, sp));
      }
    }
  }
}

TEST_CASE("cocycle identity and restriction to U_J") {
  auto F = fq_make(3);
  Tableau s(Composition{1, 2}, {{2}, {1, 3}});
  Split sp = tableau_split(F, s);
  PatternGroup uk(F, sp.K);
  Mat e = Mat::identity(F, 3);
  for (std::uint64_t a = 0; a < uk.order(); ++a) {
    Mat x = uk.element(a);
    Mat fx = cocycle_f(x, sp);
    // ker f = U_L, and f restricted to U_J is g -> g - E.
    REQUIRE((fx == Mat(F, 3)) == x.supp_off_diagonal().subset_of(sp.L));
    if (x.supp_off_diagonal().subset_of(sp.J)) REQUIRE(fx == x - e);
    for (std::uint64_t b = 0; b < uk.order(); ++b) {
      Mat g = uk.element(b);
      Mat lhs = cocycle_f(x * g, sp);
      Mat rhs = circ_action(fx, g, sp) + cocycle_f(g, sp);
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("dot action is a right action preserving V_J") {
  auto F = fq_make(2);
  Tableau s(Composition{2, 2}, {{1, 2}, {3, 4}});
  Split sp = tableau_split(F, s);
  PatternGroup uk(F, sp.K);
  PatternGroup vj(F, sp.J);  // V_J labels share the coefficient coding
  for (std::uint64_t lc = 0; lc < vj.order(); ++lc) {
    Mat b = vj.element(lc) - Mat::identity(F, 4);
    for (std::uint64_t a = 0; a < uk.order(); ++a) {
      Mat g = uk.element(a);
      Mat bg = dot_action(b, g, sp);
      REQUIRE(bg.supp_off_diagonal().subset_of(sp.J));
      for (std::uint64_t b2 = 0; b2 < uk.order(); ++b2) {
        Mat h = uk.element(b2);
        REQUIRE(dot_action(bg, h, sp) == dot_action(b, g * h, sp));
      }
    }
  }
}
