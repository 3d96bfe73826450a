#include "dgla/enveloping.hpp"
#include "dgla/free_lie.hpp"
#include "doctest.h"

using namespace dgla;

TEST_CASE("enveloping of an abelian algebra is the free graded-commutative algebra") {
  GradedSpace s;
  s.add(1, "u");  // odd
  s.add(2, "v");  // even
  auto L = abelian_lie(s);
  EnvelopingAlgebra U(L, 4);
  // monomials u^a v^b with a <= 1, a + b <= 4
  std::map<int, int> expect;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; a + b <= 4; ++b) expect[a + 2 * b] += 1;
  for (const auto& [deg, n] : expect) CHECK(U.complex().dim(deg) == n);
}

TEST_CASE("enveloping of the free Lie algebra on one odd generator") {
  FreeLiePresentation F({{"x", 1}}, 6);
  EnvelopingAlgebra U(F.lie(), 6);
  // PBW monomials x^a [x,x]^b, a <= 1: one per degree a+2b
  for (int deg = 0; deg <= 6; ++deg) CHECK(U.complex().dim(deg) == 1);
  // x*x = 1/2 [x,x]
  Key x = F.generator_key(0);
  Vec xs = U.include_lie(x);
  Vec sq = U.product_vec(xs, xs);
  REQUIRE(sq.size() == 1);
  CHECK(sq.begin()->second == Rational(1, 2));
  CHECK(U.weight(sq.begin()->first) == 1);
}

TEST_CASE("sl2 enveloping dimensions follow the symmetric algebra weight by weight") {
  EnvelopingAlgebra U(sl2(), 4);
  std::map<int, int> by_weight;
  for (const auto& [d, labels] : U.complex().space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      by_weight[U.weight({d, i})] += 1;
  CHECK(by_weight[0] == 1);
  CHECK(by_weight[1] == 3);
  CHECK(by_weight[2] == 6);
  CHECK(by_weight[3] == 10);
  CHECK(by_weight[4] == 15);
}

TEST_CASE("enveloping product is associative within the weight bound") {
  EnvelopingAlgebra U(sl2(), 4);
  std::vector<Key> letters;
  for (int i = 0; i < U.complex().dim(0); ++i)
    if (U.weight({0, i}) == 1) letters.push_back({0, i});
  for (const auto& a : letters)
    for (const auto& b : letters)
      for (const auto& c : letters) {
        Vec ab_c = U.product_vec(U.product(a, b), Vec{{c, Rational(1)}});
        Vec a_bc = U.product_vec(Vec{{a, Rational(1)}}, U.product(b, c));
        vec_axpy(ab_c, -1, a_bc);
        CHECK(ab_c.empty());
      }
  // exhaustive over weight-2 x weight-1 pairs too
  std::vector<Key> weight2;
  for (const auto& [d, labels] : U.complex().space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (U.weight({d, i}) == 2) weight2.push_back({d, i});
  for (const auto& m : weight2)
    for (const auto& a : letters)
      for (const auto& b : letters) {
        Vec lhs = U.product_vec(U.product(m, a), Vec{{b, Rational(1)}});
        Vec rhs = U.product_vec(Vec{{m, Rational(1)}}, U.product(a, b));
        vec_axpy(lhs, -1, rhs);
        CHECK(lhs.empty());
      }
}

TEST_CASE("enveloping differential is a derivation (d^2 = 0 holds by construction)") {
  // the complex constructor inside EnvelopingAlgebra enforces d^2 = 0; check
  // the derivation rule on a sample product in a dg case
  GradedSpace s;
  Key a = s.add(1, "a");
  Key b = s.add(2, "b");
  GradedMap d(s, s, 1);
  d.set_entry(b, a, 1);
  BracketTable t;
  t[{a, a}] = Vec{{b, Rational(1)}};
  DgLieAlgebra L(Complex(s, d), std::move(t));
  REQUIRE(validate_lie(L).ok());
  EnvelopingAlgebra U(L, 4);
  Vec va = U.include_lie(a), vb = U.include_lie(b);
  Vec ab = U.product_vec(va, vb);
  // d(ab) = (da)b + (-1)^{|a|} a(db) = b*b
  Vec lhs;
  for (const auto& [k, c] : ab) vec_axpy(lhs, c, U.complex().d().apply_key(k));
  Vec rhs = U.product_vec(vb, vb);
  vec_axpy(lhs, -1, rhs);
  CHECK(lhs.empty());
}

TEST_CASE("pbw map: weight 1 is the inclusion, abelian case is an isomorphism") {
  GradedSpace s;
  s.add(1, "u");
  s.add(2, "v");
  auto L = abelian_lie(s);
  EnvelopingAlgebra U(L, 3);
  auto pbw = pbw_map(L, U);
  CHECK(pbw.bijective);
  for (const auto& [dw, rd] : pbw.blocks) CHECK(rd.first == rd.second);
}

TEST_CASE("pbw map is bijective for the free Lie algebra on one odd generator") {
  FreeLiePresentation F({{"x", 1}}, 4);
  EnvelopingAlgebra U(F.lie(), 4);
  auto pbw = pbw_map(F.lie(), U);
  CHECK(pbw.bijective);
}

TEST_CASE("pbw map is bijective for sl2 and is a chain map in dg cases") {
  EnvelopingAlgebra U(sl2(), 3);
  auto pbw = pbw_map(sl2(), U);
  CHECK(pbw.bijective);

  GradedSpace s;
  Key a = s.add(1, "a");
  Key b = s.add(2, "b");
  GradedMap d(s, s, 1);
  d.set_entry(b, a, 1);
  BracketTable t;
  t[{a, a}] = Vec{{b, Rational(1)}};
  DgLieAlgebra L(Complex(s, d), std::move(t));
  EnvelopingAlgebra UL(L, 4);
  auto p2 = pbw_map(L, UL);
  CHECK(p2.bijective);
  CHECK(is_chain_map(p2.map, p2.sym.complex(), UL.complex()));
}

TEST_CASE("the Lie algebra embeds in its enveloping algebra (injectivity per degree)") {
  FreeLiePresentation F({{"x", 1}}, 4);
  EnvelopingAlgebra U(F.lie(), 4);
  for (const auto& [d, labels] : F.lie().space().components()) {
    SparseMatrix m(U.complex().dim(d), static_cast<int>(labels.size()));
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      for (const auto& [k, v] : U.include_lie({d, i})) m.add_to(k.second, i, v);
    CHECK(m.rank() == static_cast<int>(labels.size()));
  }
}
