#include <catch2/catch_amalgamated.hpp>

#include "anfield/fusion.hpp"
#include "anfield/recoupling_oracle.hpp"

using namespace anfield;

TEST_CASE("fusion rules") {
  CHECK(fuse(2, 1, 1) == std::vector<long>{0, 2});
  CHECK(fuse(5, 5, 1) == std::vector<long>{4});
  CHECK(fuse(3, 2, 2) == std::vector<long>{0, 2});
  CHECK(fuse(4, 0, 3) == std::vector<long>{3});
  CHECK_THROWS_AS(fuse(2, 3, 0), DomainError);
  // commutativity and associativity of the fusion ring, exhaustively
  for (long k = 1; k <= 8; ++k) {
    auto mult = [&](long a, long b, long c) {
      auto ch = fuse(k, a, b);
      return (long)std::count(ch.begin(), ch.end(), c);
    };
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b) {
        CHECK(fuse(k, a, b) == fuse(k, b, a));
        CHECK(fuse(k, 0, a) == std::vector<long>{a});
        for (long c = 0; c <= k; ++c)
          for (long t = 0; t <= k; ++t) {
            long lhs = 0, rhs = 0;
            for (long e = 0; e <= k; ++e) {
              lhs += mult(a, b, e) * mult(e, c, t);
              rhs += mult(b, c, e) * mult(a, e, t);
            }
            CHECK(lhs == rhs);
          }
      }
  }
}

TEST_CASE("admissibility") {
  CHECK(admissible(2, 1, 1, 2));
  CHECK_FALSE(admissible(2, 1, 1, 1));   // odd sum
  CHECK_FALSE(admissible(2, 2, 2, 2));   // exceeds the level cutoff 2k
  CHECK(admissible(3, 2, 2, 2));
  CHECK_FALSE(admissible(2, 0, 1, 3));   // label out of range
  auto t = AdmissibleTriple::make(3, 1, 2, 3);
  CHECK(t.u == 2);
  CHECK(t.v == 1);
  CHECK(t.w == 0);
}

TEST_CASE("quantum dimensions") {
  FusionData fd(CategoryParams::make(3, 1));
  CHECK(fd.qdim(0) == CyclotomicNumber::one(fd.params().order()));
  // n = 1, pivotal +: q + q^{-1}
  CHECK(fd.qdim(1) == fd.params().delta);
  FusionData fm(CategoryParams::make(3, 1, PivotalSign::minus));
  CHECK(fm.qdim(1) == -fd.params().delta);
  CHECK_THROWS_AS(fd.qdim(4), DomainError);
}

TEST_CASE("global dimension identity") {
  // k=2: 1 + delta^2 + 1 = 4
  FusionData fd(CategoryParams::make(2, 1));
  CHECK(fd.global_dim() == CyclotomicNumber(Rational(4), fd.params().order()));
  for (long k = 1; k <= 9; ++k)
    for (long m : units_mod(k + 2)) {
      if (m == 0) continue;
      FusionData f(CategoryParams::make(k, m));
      CyclotomicNumber sum = CyclotomicNumber::zero(f.params().order());
      for (long n = 0; n <= k; ++n) sum = sum + f.qdim(n) * f.qdim(n);
      CHECK(sum == f.global_dim());
    }
}

TEST_CASE("theta symbols") {
  FusionData fd(CategoryParams::make(4, 1));
  // theta(a, a, 0) is the categorical dimension
  for (long a = 0; a <= 4; ++a) CHECK(fd.theta(a, a, 0) == fd.qdim(a));
  // odd sum is not admissible
  CHECK(fd.theta(1, 1, 1).is_zero());
  // theta(1,1,2) = [3] in the s-convention
  CHECK(fd.theta(1, 1, 2) == fd.bracket(3));
  // full permutation symmetry
  for (long k = 1; k <= 6; ++k) {
    FusionData f(CategoryParams::make(k, 1));
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (long c = 0; c <= k; ++c) {
          CyclotomicNumber v = f.theta(a, b, c);
          CHECK(v == f.theta(b, a, c));
          CHECK(v == f.theta(c, b, a));
          CHECK(v == f.theta(a, c, b));
        }
  }
  // strict mode flags triples that only violate the level cutoff
  FusionData f2(CategoryParams::make(2, 1));
  CHECK(f2.theta(2, 2, 2).is_zero());
  CHECK_THROWS_AS(f2.theta(2, 2, 2, true), DomainError);
  // minus pivotal: theta(a,a,0) still matches the minus dimension
  FusionData fm(CategoryParams::make(4, 1, PivotalSign::minus));
  for (long a = 0; a <= 4; ++a) CHECK(fm.theta(a, a, 0) == fm.qdim(a));
}

TEST_CASE("six-j values at k=2") {
  FusionData fd(CategoryParams::make(2, 1));
  CyclotomicNumber inv_delta = fd.params().delta.inverse();
  CHECK(fd.six_j(1, 1, 0, 1, 1, 0) == inv_delta);
  CHECK(fd.six_j(1, 1, 2, 1, 1, 0) == CyclotomicNumber::one(fd.params().order()));
  CHECK(fd.six_j(1, 1, 2, 1, 1, 2) == -inv_delta);
  // {1 1 0; 1 1 2} = (delta^2 - 1)/delta^2
  CyclotomicNumber d2 = fd.params().delta * fd.params().delta;
  CyclotomicNumber one = CyclotomicNumber::one(fd.params().order());
  CHECK(fd.six_j(1, 1, 0, 1, 1, 2) == (d2 - one) * d2.inverse());
}

TEST_CASE("six-j vanishes off admissibility") {
  for (long k = 1; k <= 4; ++k) {
    FusionData fd(CategoryParams::make(k, 1));
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (long e = 0; e <= k; ++e)
          for (long c = 0; c <= k; ++c)
            for (long d = 0; d <= k; ++d)
              for (long f = 0; f <= k; ++f) {
                SixJLabels L = SixJLabels::make(a, b, e, c, d, f);
                if (!L.vertices_admissible(k)) CHECK(fd.six_j(L).is_zero());
              }
  }
}

TEST_CASE("six-j equals the diagrammatic oracle at small levels") {
  for (long k = 1; k <= 3; ++k)
    for (long m : units_mod(k + 2)) {
      if (m == 0) continue;
      CategoryParams p = CategoryParams::make(k, m);
      FusionData fd(p);
      RecouplingOracle oracle(p);
      for (const auto& L : fd.all_six_j_labels()) {
        CAPTURE(k, m, L.a, L.b, L.e, L.c, L.d, L.f);
        CHECK(oracle.six_j_oracle(L) == fd.six_j(L));
      }
    }
}

TEST_CASE("oracle rejects inadmissible input and large levels") {
  CategoryParams p = CategoryParams::make(2, 1);
  RecouplingOracle oracle(p);
  CHECK_THROWS_AS(oracle.six_j_oracle(SixJLabels::make(1, 1, 1, 1, 1, 0)), DomainError);
  CHECK_THROWS_AS(RecouplingOracle(CategoryParams::make(9, 1)), DomainError);
}

TEST_CASE("theta network oracle at small levels") {
  for (long k = 1; k <= 4; ++k) {
    CategoryParams p = CategoryParams::make(k, 1);
    FusionData fd(p);
    RecouplingOracle oracle(p);
    for (long a = 0; a <= k; ++a)
      for (long b = 0; b <= k; ++b)
        for (long c = 0; c <= k; ++c)
          if (admissible(k, a, b, c)) CHECK(fd.theta(a, b, c) == oracle.theta_net(a, b, c));
  }
}

TEST_CASE("pentagon holds and detects faults") {
  FusionData fd(CategoryParams::make(2, 1));
  CheckReport rep = pentagon_check(fd);
  CHECK(rep.pass);
  CHECK(rep.checked > 0);
  std::map<std::array<long, 6>, CyclotomicNumber> bad;
  bad[{1, 1, 0, 1, 1, 0}] =
      fd.six_j(1, 1, 0, 1, 1, 0) + CyclotomicNumber::one(fd.params().order());
  CheckReport faulty = pentagon_check(fd, &bad);
  CHECK_FALSE(faulty.pass);
  CHECK_FALSE(faulty.failures.empty());
}

TEST_CASE("six-j table materialization") {
  FusionData fd(CategoryParams::make(2, 1));
  fd.materialize_six_j_table();
  CHECK(fd.table().size() == fd.all_six_j_labels().size());
}
