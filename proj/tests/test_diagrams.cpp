#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "anfield/jw_symbolic.hpp"
#include "anfield/params.hpp"
#include "anfield/tl.hpp"

using namespace anfield;
using RF = RationalFunction;
using MRF = TLMorphism<RF>;
using MC = TLMorphism<CyclotomicNumber>;

namespace {

RF d() { return RF::variable("d"); }

MRF random_morphism(std::mt19937& rng, int nb, int nt) {
  const auto& ds = all_diagrams(nb, nt);
  MRF m(nb, nt, d());
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& dia : ds) {
    int c = coef(rng);
    if (c != 0) m.add_term(dia, RF::constant(c));
  }
  return m;
}

}  // namespace

TEST_CASE("diagram counts are Catalan numbers") {
  for (int n = 0; n <= 7; ++n)
    CHECK(BigInt(all_diagrams(n, n).size()) == catalan_number(n));
  CHECK(all_diagrams(2, 4).size() == 5);  // C_3 pairings of 6 boundary points
}

TEST_CASE("diagram validity") {
  CHECK_THROWS_AS(PlanarDiagram(2, 2, {{0, 2}, {1, 3}}), DomainError);  // crossing
  CHECK_THROWS_AS(PlanarDiagram(1, 2, {{0, 1}}), DomainError);         // odd points
  PlanarDiagram good(2, 2, {{0, 1}, {2, 3}});
  CHECK(good.non_crossing());
  CHECK(good.pair_list() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("composition relations") {
  auto cup = MRF::from_diagram(PlanarDiagram::cup(), d());
  auto cap = MRF::from_diagram(PlanarDiagram::cap(), d());
  auto id1 = MRF::identity(1, d());
  // circle
  CHECK(compose(cap, cup).scalar_value() == d());
  // zig-zags
  CHECK(compose(tensor(cap, id1), tensor(id1, cup)) == id1);
  CHECK(compose(tensor(id1, cap), tensor(cup, id1)) == id1);
  // e_1 e_1 = delta e_1
  auto e1 = MRF::e_generator(2, 1, d());
  CHECK(compose(e1, e1) == e1 * d());
  CHECK_THROWS_AS(compose(e1, id1), DomainError);
}

TEST_CASE("tensor structure") {
  auto id1 = MRF::identity(1, d());
  CHECK(tensor(id1, id1) == MRF::identity(2, d()));
  auto cup = MRF::from_diagram(PlanarDiagram::cup(), d());
  auto cap = MRF::from_diagram(PlanarDiagram::cap(), d());
  MRF cc = tensor(cup, cap);
  CHECK(cc.bottom_points() == 2);
  CHECK(cc.top_points() == 2);
  // interchange law on random morphisms
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    int a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3, e = 1 + rng() % 3;
    if ((a + b) % 2) b++;
    if ((c + e) % 2) e++;
    MRF f = random_morphism(rng, b, a);
    MRF fp = random_morphism(rng, a, b);
    MRF g = random_morphism(rng, e, c);
    MRF gp = random_morphism(rng, c, e);
    CHECK(compose(tensor(fp, gp), tensor(f, g)) == tensor(compose(fp, f), compose(gp, g)));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    int a = rng() % 4, b = rng() % 4, c = rng() % 4, e = rng() % 4;
    if ((a + b) % 2) b++;
    if ((b + c) % 2) c++;
    if ((c + e) % 2) e++;
    MRF f = random_morphism(rng, b, a);
    MRF g = random_morphism(rng, c, b);
    MRF h = random_morphism(rng, e, c);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("markov traces") {
  auto id1 = MRF::identity(1, d());
  CHECK(markov_trace(id1) == d());
  auto e1 = MRF::e_generator(2, 1, d());
  CHECK(markov_trace(e1) == d());
  TLContext<RF> ctx(d());
  for (int n = 0; n <= 6; ++n) {
    // closed Jones-Wenzl loop is the Chebyshev value [n+1]
    CHECK(markov_trace(ctx.jones_wenzl(n)) == ctx.chebyshev(n));
  }
}

TEST_CASE("partial traces and sphericality") {
  TLContext<RF> ctx(d());
  CHECK(partial_trace_right(MRF::identity(2, d())) == MRF::identity(1, d()) * d());
  for (int n = 1; n <= 5; ++n) {
    MRF f = ctx.jones_wenzl(n);
    MRF left = partial_trace_left(f);
    MRF right = partial_trace_right(f);
    CHECK(left == right);
    RF ratio = ctx.chebyshev(n) / ctx.chebyshev(n - 1);
    CHECK(right == ctx.jones_wenzl(n - 1) * ratio);
  }
}

TEST_CASE("jones-wenzl projectors, symbolic") {
  TLContext<RF> ctx(d());
  CHECK(ctx.jones_wenzl(1) == MRF::identity(1, d()));
  auto e1 = MRF::e_generator(2, 1, d());
  CHECK(ctx.jones_wenzl(2) == MRF::identity(2, d()) - e1 * (RF::constant(1) / d()));
  for (int n = 1; n <= 6; ++n) {
    const MRF& f = ctx.jones_wenzl(n);
    CHECK(compose(f, f) == f);
    for (int i = 1; i < n; ++i) {
      CAPTURE(n, i);
      CHECK(compose(MRF::e_generator(n, i, d()), f).is_zero());
      CHECK(compose(f, MRF::e_generator(n, i, d())).is_zero());
    }
  }
}

TEST_CASE("cleared jones-wenzl matches the fraction form") {
  TLContext<RF> ctx(d());
  for (int n = 1; n <= 6; ++n) {
    ClearedJW f = cleared_jones_wenzl(n);
    const MRF& g = ctx.jones_wenzl(n);
    REQUIRE(f.num.term_count() == g.term_count());
    RF den(f.den.to_laurent());
    for (const auto& [dia, c] : f.num.terms()) {
      auto it = g.terms().find(dia);
      REQUIRE(it != g.terms().end());
      CHECK(RF(c.to_laurent()) / den == it->second);
    }
  }
}

TEST_CASE("level quotient: f^(k+1) is negligible") {
  std::mt19937 rng(55);
  for (long k = 1; k <= 4; ++k) {
    CategoryParams p = CategoryParams::make(k, 1);
    TLContext<CyclotomicNumber> ctx(p.delta);
    const MC& f = ctx.jones_wenzl((int)k + 1);
    const auto& ds = all_diagrams((int)k + 1, (int)k + 1);
    for (int trial = 0; trial < 8; ++trial) {
      MC g(k + 1, k + 1, p.delta);
      std::uniform_int_distribution<int> coef(-2, 2);
      for (const auto& dia : ds) {
        int c = coef(rng);
        if (c) g.add_term(dia, CyclotomicNumber(Rational(c), p.order()));
      }
      CHECK(markov_trace(compose(g, f)).is_zero());
      CHECK(markov_trace(compose(f, g)).is_zero());
    }
    // the recursion cannot continue past k+1 at this loop value
    CHECK_THROWS_AS(ctx.jones_wenzl((int)k + 2), PoleError);
  }
}

TEST_CASE("closed network evaluation") {
  using Net = Network<RF>;
  auto cup = MRF::from_diagram(PlanarDiagram::cup(), d());
  auto cap = MRF::from_diagram(PlanarDiagram::cap(), d());
  // circle
  CHECK(evaluate_closed_network(Net::seq({Net::leaf(cap), Net::leaf(cup)})) == d());
  // bent trace of f^(2): caps o (f ox id_2) o cups with nested fans
  TLContext<RF> ctx(d());
  PlanarDiagram cupfan(0, 4, {{0, 3}, {1, 2}});
  PlanarDiagram capfan(4, 0, {{0, 3}, {1, 2}});
  auto net = Net::seq({Net::leaf(MRF::from_diagram(capfan, d())),
                       Net::side_by_side({Net::leaf(ctx.jones_wenzl(2)),
                                          Net::leaf(MRF::identity(2, d()))}),
                       Net::leaf(MRF::from_diagram(cupfan, d()))});
  CHECK(evaluate_closed_network(net) == ctx.chebyshev(2));
  // arity misuse is rejected
  CHECK_THROWS_AS(evaluate_closed_network(Net::leaf(cup)), DomainError);
}

TEST_CASE("diagram serialization order") {
  PlanarDiagram e1(2, 2, {{0, 1}, {2, 3}});
  auto pairs = e1.pair_list();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] < pairs[1]);
}
