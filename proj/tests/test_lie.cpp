#include "dgla/lie.hpp"
#include "dgla/representation.hpp"
#include "doctest.h"

using namespace dgla;

TEST_CASE("abelian and sl2 validate cleanly") {
  GradedSpace s;
  s.add(2, "v");
  CHECK(validate_lie(abelian_lie(s)).ok());
  CHECK(validate_lie(sl2()).ok());
  CHECK(validate_lie(heisenberg_graded()).ok());
}

TEST_CASE("corrupted sl2 reports a Jacobi violation naming e, f and h") {
  DgLieAlgebra L = sl2();
  BracketTable t = L.table();
  Key e{0, 0}, f{0, 1}, h{0, 2};
  // only the [e,f] table entry is replaced; [f,e] keeps -h
  t[{e, f}] = Vec{{h, Rational(2)}};
  DgLieAlgebra bad(L.complex(), std::move(t));
  auto rep = validate_lie(bad);
  CHECK(!rep.ok());
  bool witnessed = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "jacobi") {
      bool has_e = false, has_f = false, has_h = false;
      for (const auto& w : v.witness) {
        if (w == "e") has_e = true;
        if (w == "f") has_f = true;
        if (w == "h") has_h = true;
      }
      if (has_e && has_f && has_h) witnessed = true;
    }
  CHECK(witnessed);
}

TEST_CASE("eta-cone of a Lie algebra is again a dg-Lie algebra") {
  CHECK(validate_lie(cone_lie(sl2()).lie).ok());
  CHECK(validate_lie(cone_lie(heisenberg_graded()).lie).ok());
  // and it is acyclic
  auto cone = cone_lie(sl2());
  CHECK(homology_dims(cone.lie.complex()).empty());
}

TEST_CASE("a dg-Lie algebra with nonzero differential validates") {
  // a in degree 1, b in degree 2, da = b, [a,a] = b
  GradedSpace s;
  Key a = s.add(1, "a");
  Key b = s.add(2, "b");
  GradedMap d(s, s, 1);
  d.set_entry(b, a, 1);
  BracketTable t;
  t[{a, a}] = Vec{{b, Rational(1)}};
  DgLieAlgebra L(Complex(s, d), std::move(t));
  CHECK(validate_lie(L).ok());
  CHECK(validate_lie(cone_lie(L).lie).ok());
}

TEST_CASE("adjoint representation satisfies the module axioms") {
  CHECK(validate_representation(adjoint_rep(sl2())).ok());
  CHECK(validate_representation(adjoint_rep(heisenberg_graded())).ok());
  // zero action for abelian
  GradedSpace s;
  s.add(1, "u");
  s.add(2, "v");
  auto L = abelian_lie(s);
  auto ad = adjoint_rep(L);
  CHECK(ad.table().empty());
  CHECK(validate_representation(ad).ok());
}

TEST_CASE("dual representation is a representation") {
  CHECK(validate_representation(dual_rep(adjoint_rep(sl2()))).ok());
  CHECK(validate_representation(dual_rep(adjoint_rep(heisenberg_graded()))).ok());
}

TEST_CASE("rep_tensor carries the diagonal action") {
  auto L = sl2();
  auto ad = adjoint_rep(L);
  auto t = rep_tensor(ad, ad);
  CHECK(validate_representation(t).ok());
  // trivial (x) trivial = trivial
  auto tt = rep_tensor(trivial_rep(L), trivial_rep(L));
  CHECK(tt.table().empty());
  // trivial (x) M has the action of M
  auto tm = rep_tensor(trivial_rep(L), ad);
  CHECK(validate_representation(tm).ok());
  CHECK(tm.complex().dim(0) == 3);

  // sl2: ad (x) ad has a one-dimensional invariant subspace in degree 0
  // (the Casimir dual): kernel of the total action map
  std::vector<Key> lk;
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) lk.push_back({d, i});
  int n = t.complex().dim(0);
  SparseMatrix total(3 * n, n);
  int blk = 0;
  for (const auto& x : lk) {
    for (int j = 0; j < n; ++j) {
      Vec img = t.act(x, {0, j});
      for (const auto& [k, v] : img) total.add_to(blk * n + k.second, j, v);
    }
    ++blk;
  }
  CHECK(total.kernel_basis().size() == 1);
}

TEST_CASE("restriction along the identity is the adjoint") {
  auto L = sl2();
  auto r = restrict_along(identity_map(L.space()), L, L);
  CHECK(validate_representation(r).ok());
  CHECK(r.table() == adjoint_rep(L).table());
}
