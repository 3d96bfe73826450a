#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/lie.hpp"
#include "dgla/sym.hpp"

namespace dgla {

// Universal enveloping algebra of a validated dg-Lie algebra, truncated at
// PBW-monomial length maxWeight: T(L) / (xy - (-1)^{|x||y|}yx - [x,y]) with the
// PBW monomial basis over a fixed ordered Lie basis (even letters unbounded,
// odd letters squarefree). Products are defined when the combined length stays
// within the bound.
class EnvelopingAlgebra {
 public:
  // order: permutation of the Lie basis keys fixing the PBW letter order;
  // defaults to (degree, index) order.
  EnvelopingAlgebra(DgLieAlgebra L, int max_weight, std::vector<Key> order = {});

  const DgLieAlgebra& lie() const { return lie_; }
  int max_weight() const { return max_weight_; }
  const Complex& complex() const { return cx_; }
  const std::vector<Key>& order() const { return order_; }

  Key unit() const { return unit_; }
  int weight(const Key& k) const { return static_cast<int>(mono(k).size()); }
  // letters of the basis monomial, as indices into order()
  const std::vector<int>& mono(const Key& k) const { return key_to_mono_.at(k); }
  std::optional<Key> key_of(const std::vector<int>& mono) const;

  int letter_degree(int letter) const { return order_[letter].first; }

  // Straightened product; throws when the combined length exceeds the bound.
  Vec product(const Key& a, const Key& b) const;
  Vec product_vec(const Vec& a, const Vec& b) const;

  // Straightens an arbitrary word of letters into the PBW basis. Terminal
  // monomials beyond the weight bound throw, or are dropped when
  // drop_overflow is set (the weight-filtered quotient).
  Vec straighten(const std::vector<int>& word, const Rational& coeff,
                 bool drop_overflow = false) const;

  // Left multiplication by a Lie element (weight-1 letter).
  Vec lie_left_mul(const Key& lie_key, const Key& mono_key,
                   bool drop_overflow = false) const;

  // Weight-1 inclusion of the Lie algebra.
  Vec include_lie(const Key& lie_key) const;

  // Coproduct of a basis monomial (letters are primitive), as (sign, left, right).
  std::vector<std::tuple<Rational, Key, Key>> coproduct(const Key& k) const;

 private:
  DgLieAlgebra lie_;
  int max_weight_ = 0;
  std::vector<Key> order_;
  std::map<Key, int> key_to_letter_;
  Complex cx_;
  Key unit_;
  std::map<std::vector<int>, Key> mono_to_key_;
  std::map<Key, std::vector<int>> key_to_mono_;
};

// The symmetrization map Sym(L) -> U(L), monomial-wise
// (1/n!) sum_sigma eps(sigma, letters) straighten(sigma(letters)), with the
// per-(degree, weight) bijectivity data demanded by the PBW theorem.
struct PbwResult {
  SymComplex sym;
  GradedMap map;  // sym complex -> U complex
  bool bijective = false;
  // (degree, weight) -> (rank of the graded block, its square dimension)
  std::map<std::pair<int, int>, std::pair<long, long>> blocks;
};

PbwResult pbw_map(const DgLieAlgebra& L, const EnvelopingAlgebra& U);

}  // namespace dgla
