#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "anfield/cyclotomic.hpp"

using namespace anfield;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).str() == "x - 1");
  CHECK(cyclotomic_polynomial(4).str() == "x^2 + 1");
  CHECK(cyclotomic_polynomial(12).str() == "x^4 - x^2 + 1");
  for (long n : {2, 3, 5, 6, 8, 9, 10, 15, 24, 36, 60})
    CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CyclotomicNumber(Rational(-1), 4));
  CHECK(root_of_unity(1, 0) == CyclotomicNumber::one(1));
  // zeta_3 inside Q(zeta_12) satisfies x^2 + x + 1 = 0
  CyclotomicNumber z3 = root_of_unity(12, 4);
  CHECK((z3 * z3 + z3 + CyclotomicNumber::one(12)).is_zero());
  // multiplicative orders
  for (long n = 1; n <= 40; ++n) {
    CHECK(root_of_unity(n, 1).pow(n) == CyclotomicNumber::one(n));
    for (long j = 1; j < n; ++j) {
      long want = n / std::gcd(n, j);
      CHECK(root_of_unity(n, j).multiplicative_order(n) == want);
    }
  }
}

TEST_CASE("field arithmetic and automorphisms") {
  CyclotomicNumber z5 = root_of_unity(5, 1);
  // golden ratio identity
  CHECK((z5 + z5.pow(4)) * (z5.pow(2) + z5.pow(3)) == CyclotomicNumber(Rational(-1), 5));
  CyclotomicNumber z12 = root_of_unity(12, 1);
  CHECK(z12.galois_apply(5) == z12.pow(5));
  CHECK_THROWS_AS(z12.galois_apply(4), DomainError);
  CHECK_THROWS_AS(CyclotomicNumber::zero(5).inverse(), PoleError);
  CHECK(z5.conjugate() == z5.pow(4));
  // mixed orders require explicit promotion
  CHECK_THROWS_AS(root_of_unity(5, 1) * root_of_unity(7, 1), DomainError);
  CHECK(root_of_unity(5, 1).embedded(35) * root_of_unity(7, 1).embedded(35) ==
        root_of_unity(35, 12));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<long> order_pick(1, 60);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    long n = order_pick(rng);
    auto rnd = [&] {
      CyclotomicNumber x = CyclotomicNumber::zero(n);
      long deg = euler_phi(n);
      for (long i = 0; i < deg; ++i)
        x = x + CyclotomicNumber::power_of_zeta(n, i) * Rational(coef(rng));
      return x;
    };
    CyclotomicNumber a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicNumber::one(n));
  }
}

TEST_CASE("certified decimal approximation") {
  auto [r1, i1] = approx_complex(CyclotomicNumber::one(1), 6);
  CHECK(r1 == "1");
  CHECK(i1 == "0");
  auto [r2, i2] = approx_complex(root_of_unity(4, 1), 6);
  CHECK(r2 == "0");
  CHECK(i2 == "1");
  auto [r3, i3] = approx_complex(root_of_unity(8, 1) + root_of_unity(8, -1), 9);
  CHECK(r3.substr(0, 7) == "1.41421");
  CHECK(i3 == "0");
  CHECK_THROWS_AS(approx_complex(CyclotomicNumber::one(1), 0), DomainError);
}

TEST_CASE("approximation respects products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3);
  const int digits = 10;
  for (int trial = 0; trial < 20; ++trial) {
    long n = 1 + (rng() % 24);
    auto rnd = [&] {
      CyclotomicNumber x = CyclotomicNumber::zero(n);
      for (long i = 0; i < euler_phi(n); ++i)
        x = x + CyclotomicNumber::power_of_zeta(n, i) * Rational(coef(rng));
      return x;
    };
    CyclotomicNumber a = rnd(), b = rnd();
    auto [ar, ai] = approx_double(a);
    auto [br, bi] = approx_double(b);
    auto [pr, pi] = approx_double(a * b);
    double er = ar * br - ai * bi - pr;
    double ei = ar * bi + ai * br - pi;
    double bound = 1.0;
    for (int d = 0; d < digits - 2; ++d) bound /= 10;
    // scale the tolerance with the magnitudes involved
    double scale = std::max(1.0, std::abs(ar) + std::abs(ai) + std::abs(br) + std::abs(bi));
    CHECK(std::abs(er) <= bound * scale);
    CHECK(std::abs(ei) <= bound * scale);
  }
}

TEST_CASE("canonical serialization invariants") {
  CyclotomicNumber x = root_of_unity(12, 7) + root_of_unity(12, 2) * Rational(1, 3);
  CHECK(x == x);
  // equality is canonical coefficient equality: rebuild from coefficients
  CHECK(CyclotomicNumber::from_coeffs(12, x.coeffs()) == x);
}
