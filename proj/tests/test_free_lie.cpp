#include "dgla/free_lie.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgla;

TEST_CASE("free Lie on one even generator is abelian") {
  FreeLiePresentation F({{"x", 2}}, 4);
  auto dims = F.dims();
  CHECK(dims.size() == 1);
  CHECK(dims[{2, 1}] == 1);
  Key x = F.generator_key(0);
  CHECK(F.lie().bracket(x, x).empty());
  CHECK(validate_lie(F.lie()).ok());
}

TEST_CASE("free Lie on one odd generator: x, [x,x], nothing else") {
  FreeLiePresentation F({{"x", 1}}, 5);
  auto dims = F.dims();
  CHECK(dims[{1, 1}] == 1);
  CHECK(dims[{2, 2}] == 1);
  CHECK(dims.size() == 2);  // [x,[x,x]] = 0 by the graded Jacobi identity
  Key x = F.generator_key(0);
  Vec xx = F.lie().bracket(x, x);
  REQUIRE(xx.size() == 1);
  Key z = xx.begin()->first;
  CHECK(F.lie().bracket(x, z).empty());
  CHECK(validate_lie(F.lie()).ok());
}

TEST_CASE("free Lie on two odd generators has weight-2 dimension 3") {
  FreeLiePresentation F({{"x", 1}, {"y", 1}}, 4);
  auto dims = F.dims();
  CHECK(dims[{1, 1}] == 2);
  CHECK(dims[{2, 2}] == 3);  // [x,x], [x,y], [y,y]
  CHECK(validate_lie(F.lie()).ok());
}

TEST_CASE("free Lie dimensions match the bracket-word brute force to weight 5") {
  std::vector<std::vector<std::pair<std::string, int>>> cases = {
      {{"x", 1}},
      {{"x", 1}, {"y", 1}},
      {{"x", 1}, {"y", 2}},
      {{"x", 2}, {"y", 2}},
      {{"x", 2}, {"y", 3}},
  };
  for (const auto& gens : cases) {
    int W = 5;
    FreeLiePresentation F(gens, W);
    auto got = F.dims();
    auto want = oracles::free_lie_dims_bruteforce(gens, W);
    for (auto& [k, n] : want) CHECK(got[k] == n);
    for (auto& [k, n] : got) CHECK(want[k] == n);
  }
}

TEST_CASE("degree <= 0 generators are rejected") {
  CHECK_THROWS(FreeLiePresentation({{"x", 0}}, 3));
  CHECK_THROWS(FreeLiePresentation({{"x", -1}}, 3));
}
