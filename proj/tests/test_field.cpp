#include <random>

#include "flagchar/cyclotomic.hpp"
#include "flagchar/field.hpp"
#include "test_util.hpp"

using namespace flagchar;
using testutil::throws_errc;

TEST_CASE("prime field arithmetic") {
  auto f3 = fq_make(3);
  REQUIRE(f3->q() == 3);
  REQUIRE(f3->add(2, 2) == 1);
  REQUIRE(f3->mul(2, 2) == 1);
  REQUIRE(f3->neg(1) == 2);
  REQUIRE(f3->inv(2) == 2);
  REQUIRE(f3->sub(0, 1) == 2);

  auto f7 = fq_make(7);
  for (fq_repr a = 1; a < 7; ++a) REQUIRE(f7->mul(a, f7->inv(a)) == 1);
}

TEST_CASE("construction rejects bad parameters") {
  REQUIRE(throws_errc(Errc::not_prime, [] { fq_make(4); }));
  REQUIRE(throws_errc(Errc::not_prime, [] { fq_make(6); }));
  REQUIRE(throws_errc(Errc::not_prime, [] { fq_make(1); }));
  REQUIRE(throws_errc(Errc::unsupported_size, [] { fq_make(2, 17); }));
  // x^2 + 1 = (x+1)^2 over F_2
  REQUIRE(throws_errc(Errc::reducible_modulus, [] { fq_make(2, 2, {1, 0, 1}); }));
  // x^2 + x = x(x+1)
  REQUIRE(throws_errc(Errc::reducible_modulus, [] { fq_make(2, 2, {0, 1, 1}); }));
  REQUIRE(throws_errc(Errc::invalid_argument, [] { fq_make(5, 2); }));  // no built-in modulus
  REQUIRE(throws_errc(Errc::division_by_zero, [] { fq_make(3)->inv(0); }));
}

TEST_CASE("GF(4) values against hand computation") {
  // Basis 1, x with x^2 = x + 1; reprs: 0, 1, x = 2, x+1 = 3.
  auto f4 = fq_make(2, 2);
  REQUIRE(f4->q() == 4);
  REQUIRE(f4->mul(2, 3) == 1);  // x(x+1) = x^2 + x = 1
  REQUIRE(f4->mul(2, 2) == 3);  // x^2 = x + 1
  REQUIRE(f4->add(2, 3) == 1);
  REQUIRE(f4->inv(2) == 3);
  REQUIRE(f4->neg(3) == 3);
  // Tr(x) = x + x^2 = 1, Tr(1) = 0, Tr(x+1) = 1.
  REQUIRE(f4->theta_exp(0) == 0);
  REQUIRE(f4->theta_exp(1) == 0);
  REQUIRE(f4->theta_exp(2) == 1);
  REQUIRE(f4->theta_exp(3) == 1);
}

TEST_CASE("GF(8) and GF(9) traces against hand computation") {
  auto f8 = fq_make(2, 3);  // x^3 = x + 1
  // Tr(a) = a + a^2 + a^4; Tr(x) = x + x^2 + (x^2+x) = 0, Tr(1) = 1.
  REQUIRE(f8->theta_exp(2) == 0);
  REQUIRE(f8->theta_exp(1) == 1);

  auto f9 = fq_make(3, 2);  // x^2 = -1
  // Tr(a) = a + a^3; Tr(x) = x - x = 0, Tr(1) = 2, Tr(x+1) = 2.
  REQUIRE(f9->theta_exp(3) == 0);
  REQUIRE(f9->theta_exp(1) == 2);
  REQUIRE(f9->theta_exp(4) == 2);
}

TEST_CASE("theta is additive, exhaustively for q <= 81") {
  std::vector<Fq> fields;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79})
    fields.push_back(fq_make(p));
  fields.push_back(fq_make(2, 2));
  fields.push_back(fq_make(2, 3));
  fields.push_back(fq_make(3, 2));
  for (const auto& f : fields) {
    for (std::uint32_t a = 0; a < f->q(); ++a)
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        int lhs = f->theta_exp(f->add(fq_repr(a), fq_repr(b)));
        int rhs = (f->theta_exp(fq_repr(a)) + f->theta_exp(fq_repr(b))) % f->p();
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("character sum over the field vanishes") {
  for (auto f : {fq_make(2), fq_make(3), fq_make(5), fq_make(2, 2), fq_make(2, 3), fq_make(3, 2)}) {
    CycInt s = CycInt::zero(f->p());
    for (std::uint32_t a = 0; a < f->q(); ++a) s += CycInt::root(f->p(), f->theta_exp(fq_repr(a)));
    REQUIRE(s.is_zero());
  }
}

TEST_CASE("field element handles detect misuse") {
  auto f2 = fq_make(2);
  auto f3 = fq_make(3);
  auto a = fq_elem(f2, 1);
  auto b = fq_elem(f3, 2);
  REQUIRE(throws_errc(Errc::field_mismatch, [&] { (void)(a + b); }));
  REQUIRE(throws_errc(Errc::invalid_argument, [&] { fq_elem(f2, 2); }));
  auto c = fq_elem(f3, 2);
  REQUIRE((b * c).v == 1);
  REQUIRE(theta(c) == 2);
  REQUIRE(throws_errc(Errc::division_by_zero, [&] { (void)(b / fq_elem(f3, 0)); }));
}

TEST_CASE("fq_from_q factors prime powers") {
  auto f8 = fq_from_q(8);
  REQUIRE(f8->p() == 2);
  REQUIRE(f8->e() == 3);
  auto f9 = fq_from_q(9);
  REQUIRE(f9->p() == 3);
  REQUIRE(f9->e() == 2);
  REQUIRE(throws_errc(Errc::invalid_argument, [] { fq_from_q(12); }));
  REQUIRE(throws_errc(Errc::invalid_argument, [] { fq_from_q(1); }));
}

TEST_CASE("cyclotomic integers form a commutative ring") {
  std::mt19937_64 rng(20240817);
  for (int p : {2, 3, 5, 7}) {
    auto rnd = [&] {
      CycInt z(p);
      CycInt acc = CycInt::zero(p);
      for (int k = 0; k < p; ++k)
        acc += CycInt::root(p, k).scaled(std::int64_t(rng() % 21) - 10);
      return acc;
    };
    for (int trial = 0; trial < 50; ++trial) {
      CycInt a = rnd(), b = rnd(), c = rnd();
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) * c == a * c + b * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a - a == CycInt::zero(p));
      REQUIRE(a * CycInt::one(p) == a);
      REQUIRE(a.conj().conj() == a);
      REQUIRE((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("cyclotomic identities at p = 3") {
  CycInt s = CycInt::one(3) + CycInt::root(3, 1) + CycInt::root(3, 2);
  REQUIRE(s.is_zero());
  REQUIRE(CycInt::root(3, 1) * CycInt::root(3, 2) == CycInt::one(3));
  REQUIRE(CycInt::root(3, 1).conj() == CycInt::root(3, 2));
  REQUIRE(CycInt::root(3, 5) == CycInt::root(3, 2));
  REQUIRE(!CycInt::root(3, 1).is_rational_integer());
  REQUIRE(CycInt::integer(3, 42).rational_value() == 42);
  REQUIRE(throws_errc(Errc::non_integral_sum, [] { CycInt::root(3, 1).rational_value(); }));
  REQUIRE(throws_errc(Errc::prime_mismatch, [] { (void)(CycInt::one(3) + CycInt::one(5)); }));
}

TEST_CASE("exact division and rationals") {
  CycInt z = CycInt::root(5, 2).scaled(6) + CycInt::integer(5, 9);
  REQUIRE(z.divided_exact(3) == CycInt::root(5, 2).scaled(2) + CycInt::integer(5, 3));
  REQUIRE(throws_errc(Errc::non_integral_sum, [&] { z.divided_exact(2); }));

  Rational r(6, -4);
  REQUIRE(r.num == -3);
  REQUIRE(r.den == 2);
  REQUIRE(Rational(8, 4) == 2);
  REQUIRE(Rational(8, 4).is_integer());
  REQUIRE(Rational(1, 3).str() == "1/3");
  REQUIRE(throws_errc(Errc::division_by_zero, [] { Rational(1, 0); }));
}
