#include <random>

#include "dgla/matrix.hpp"
#include "doctest.h"

using namespace dgla;

TEST_CASE("sparse product and transpose") {
  SparseMatrix a(2, 3), b(3, 2);
  a.set(0, 0, 1);
  a.set(0, 2, Rational(1, 2));
  a.set(1, 1, -3);
  b.set(0, 0, 2);
  b.set(1, 1, 4);
  b.set(2, 0, -2);
  SparseMatrix p = a * b;
  CHECK(p.get(0, 0) == Rational(1));
  CHECK(p.get(1, 1) == Rational(-12));
  CHECK(p.transpose().get(1, 1) == Rational(-12));
}

TEST_CASE("bareiss rank matches dense oracle on random matrices") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    SparseMatrix m(rows, cols);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        int num = dist(rng);
        if (num == 0) continue;
        int den = 1 + static_cast<int>(rng() % 3);
        Rational v(num, den);
        v.canonicalize();
        m.set(i, j, v);
        dense[i][j] = v;
      }
    CHECK(m.rank() == dense_rank(dense));
  }
}

TEST_CASE("kernel vectors really lie in the kernel and span it") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        int v = dist(rng);
        if (v) m.set(i, j, v);
      }
    auto ker = m.kernel_basis();
    CHECK(static_cast<long>(ker.size()) == cols - m.rank());
    for (const auto& k : ker) CHECK(m.apply(k).empty());
  }
}

TEST_CASE("solve finds solutions exactly when consistent") {
  SparseMatrix m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  SparseRow b{{0, Rational(3)}, {1, Rational(6)}};
  auto x = m.solve(b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);
  SparseRow bad{{0, Rational(3)}, {1, Rational(7)}};
  CHECK(!m.solve(bad).has_value());
}

TEST_CASE("linsolver express tracks combinations") {
  LinSolver s;
  SparseRow v0{{0, Rational(1)}, {1, Rational(1)}};
  SparseRow v1{{1, Rational(2)}};
  CHECK(s.insert(v0));
  CHECK(s.insert(v1));
  SparseRow w{{0, Rational(3)}, {1, Rational(5)}};
  auto combo = s.express(w);
  REQUIRE(combo.has_value());
  CHECK((*combo)[0] == Rational(3));
  CHECK((*combo)[1] == Rational(1));
  SparseRow dep{{0, Rational(1)}, {1, Rational(3)}};
  CHECK(!s.insert(dep));
  CHECK(s.rank() == 2);
}
