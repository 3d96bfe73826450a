#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgla/lie.hpp"

namespace dgla {

// Tensor-algebra word in generator indices.
using TWord = std::vector<int>;
using TensorElt = std::map<TWord, Rational>;

// Free graded Lie algebra on generators of degree >= 1, truncated at a bracket
// weight: bracket words are expanded in the tensor algebra (the ground truth),
// a maximal independent family indexes the basis, and structure constants come
// from exact linear solves against those expansions. Brackets that would
// exceed maxWeight are zero (the free nilpotent quotient).
class FreeLiePresentation {
 public:
  FreeLiePresentation(std::vector<std::pair<std::string, int>> generators,
                      int max_weight);

  int max_weight() const { return max_weight_; }
  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }

  const DgLieAlgebra& lie() const { return lie_; }

  int weight(const Key& k) const { return weight_.at(k); }
  // (degree, weight) -> dimension
  std::map<std::pair<int, int>, int> dims() const;
  const TensorElt& expansion(const Key& k) const { return expansion_.at(k); }
  Key generator_key(int i) const { return gen_key_.at(i); }

 private:
  std::vector<std::pair<std::string, int>> gens_;
  int max_weight_ = 0;
  DgLieAlgebra lie_;
  std::map<Key, int> weight_;
  std::map<Key, TensorElt> expansion_;
  std::vector<Key> gen_key_;
};

// Concatenation product in the tensor algebra (no signs: scalars commute).
TensorElt tensor_concat(const TensorElt& a, const TensorElt& b);
// [a, b] = ab - (-1)^{|a||b|} ba for homogeneous inputs of the given degrees.
TensorElt tensor_bracket(const TensorElt& a, const TensorElt& b, int deg_a, int deg_b);
int tword_degree(const TWord& w, const std::vector<int>& gen_degrees);

}  // namespace dgla
