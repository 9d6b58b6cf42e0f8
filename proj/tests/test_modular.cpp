#include <catch2/catch_amalgamated.hpp>

#include "anfield/modular.hpp"

using namespace anfield;

TEST_CASE("S and T matrix basics") {
  ModularData md(BraidingParams::make(2, 1));
  CycloMatrix s = md.s_matrix();
  CHECK(s[0][0] == CyclotomicNumber::one(16));
  CHECK(md.twist(0) == CyclotomicNumber::one(16));
  // S_{a,0} equals the quantum dimension
  for (long a = 0; a <= 2; ++a) CHECK(s[a][0] == md.qdim(a));
  // symmetry
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b) CHECK(s[a][b] == s[b][a]);
}

TEST_CASE("A_2 braided categories") {
  // sVec: T = diag(1, -s^3) with s = zeta_3, so T^2 = 1
  ModularData svec(BraidingParams::make(1, 1));
  CHECK(svec.params().s == root_of_unity(12, 4));
  CHECK(svec.twist(1) == -svec.s_power(3));
  CHECK(svec.conductor() == 2);
  ModularData repz2(BraidingParams::make(1, 7));
  CHECK(repz2.conductor() == 1);
  CHECK(repz2.modularity_rank() == 1);
  ModularData sem(BraidingParams::make(1, 4));
  CHECK(sem.conductor() == 4);
  ModularData sembar(BraidingParams::make(1, 2));
  CHECK(sembar.conductor() == 4);
  // twists of the nontrivial objects are the four 4th roots of unity
  CHECK(repz2.twist(1) == CyclotomicNumber::one(12));
  CHECK(svec.twist(1) == CyclotomicNumber(Rational(-1), 12));
  CHECK(sem.twist(1) == root_of_unity(12, 3));
  CHECK(sembar.twist(1) == root_of_unity(12, -3));
}

TEST_CASE("r coefficients") {
  ModularData md(BraidingParams::make(2, 1));
  CHECK(md.r_coeff(1, 1, 0) == -md.s_power(-3));
  CHECK(md.r_coeff(1, 1, 2) == md.s_power(1));
  CHECK_THROWS_AS(md.r_coeff(1, 1, 1), DomainError);
  CHECK_THROWS_AS(md.r_coeff(2, 2, 2), DomainError);  // cutoff at k=2
  // ribbon relation, spot check across k
  for (long k = 1; k <= 6; ++k) {
    ModularData m(BraidingParams::make(k, 1));
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (long c : fuse(k, a, b))
          CHECK(m.r_coeff(a, b, c) * m.r_coeff(b, a, c) * m.twist(a) * m.twist(b) == m.twist(c));
  }
}

TEST_CASE("conductor table") {
  CHECK(ModularData(BraidingParams::make(2, 1)).conductor() == 16);
  CHECK(ModularData(BraidingParams::make(4, 1)).conductor() == 24);
  CHECK(ModularData(BraidingParams::make(3, 9)).conductor() == 5);   // k+ell = 0 mod 4
  CHECK(ModularData(BraidingParams::make(5, 1)).conductor() == 14);  // k+ell = 2 mod 4
  // conductor equals the generic multiplicative order of the T entries
  for (long k = 2; k <= 5; ++k)
    for (long ell : valid_ells(k)) {
      ModularData md(BraidingParams::make(k, ell));
      long big = 4 * (k + 2);
      long lcm = 1;
      for (long a = 0; a <= k; ++a)
        lcm = std::lcm(lcm, md.twist(a).multiplicative_order(big));
      CHECK(md.conductor() == lcm);
    }
}

TEST_CASE("modularity rank") {
  CHECK(ModularData(BraidingParams::make(3, 1)).modularity_rank() == 2);
  CHECK(ModularData(BraidingParams::make(2, 1)).modularity_rank() == 3);
  CHECK(ModularData(BraidingParams::make(1, 7)).modularity_rank() == 1);
  CHECK(ModularData(BraidingParams::make(2, 1)).is_modular());
  CHECK_FALSE(ModularData(BraidingParams::make(3, 1)).is_modular());
}

TEST_CASE("verlinde recovers fusion") {
  for (long k : {2L, 6L}) {
    ModularData md(BraidingParams::make(k, 1));
    CheckReport rep = md.verlinde_check();
    CHECK(rep.pass);
    CHECK(rep.checked == (k + 1) * (k + 1) * (k + 1));
  }
  // fault injection
  ModularData md(BraidingParams::make(2, 1));
  CycloMatrix s = md.s_matrix();
  s[0][1] = s[0][1] + CyclotomicNumber::one(16);
  s[1][0] = s[0][1];
  CHECK_FALSE(md.verlinde_check(&s).pass);
}

TEST_CASE("galois conjugation") {
  ModularData md(BraidingParams::make(3, 1));
  CHECK(md.galois_conjugate(1).ell == 1);
  CHECK_THROWS_AS(md.galois_conjugate(2), DomainError);
  // conjugation by j sends s to s^j
  BraidingParams c = md.galois_conjugate(3);
  CHECK(c.s == md.params().s.pow(3));
  // orbit partitions
  auto o2 = galois_orbits(2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].size() == 8);
  auto o3 = galois_orbits(3);
  REQUIRE(o3.size() == 3);
  CHECK(o3[0] == std::vector<long>{1, 9, 13, 17});
  CHECK(o3[1] == std::vector<long>{2, 4, 6, 8, 12, 14, 16, 18});
  CHECK(o3[2] == std::vector<long>{3, 7, 11, 19});
}

TEST_CASE("S depends only on the monoidal invariant") {
  // ell1 = +-ell2 mod 2(k+2) gives equal delta, hence equal S matrices
  for (long k : {3L, 4L, 6L}) {
    for (long ell : valid_ells(k)) {
      for (long ell2 : {mod_pos(-ell, 4 * (k + 2)), ell + 2 * (k + 2)}) {
        ell2 = mod_pos(ell2, 4 * (k + 2));
        if (std::gcd(ell2, k + 2) != 1) continue;
        BraidingParams b1 = BraidingParams::make(k, ell);
        BraidingParams b2 = BraidingParams::make(k, ell2);
        CHECK(b1.delta == b2.delta);
        CHECK(ModularData(b1).s_matrix() == ModularData(b2).s_matrix());
      }
    }
  }
}

TEST_CASE("minus pivotal data") {
  ModularData plus(BraidingParams::make(2, 1, PivotalSign::plus));
  ModularData minus(BraidingParams::make(2, 1, PivotalSign::minus));
  // dims flip sign in odd degree, S entries lose the sign factor
  CHECK(minus.qdim(1) == -plus.qdim(1));
  CHECK(minus.qdim(2) == plus.qdim(2));
  CHECK(minus.s_matrix()[1][0] == -plus.s_matrix()[1][0]);
  CHECK(minus.twist(1) == -plus.twist(1));
  // rank is pivotal-independent
  CHECK(minus.modularity_rank() == plus.modularity_rank());
}
