#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgla/complex_ops.hpp"
#include "dgla/graded.hpp"

namespace dgla {

using Word = std::vector<Key>;

// Koszul sign picked up when sorting `w` into non-decreasing key order by
// adjacent swaps; nullopt when two equal odd-degree letters collide.
std::optional<std::pair<Rational, Word>> normalize_word(const GradedSpace& space,
                                                        Word w);

// Koszul sign of permuting the letters of w by sigma (w[i] moves to slot
// sigma[i]): product of (-1)^{|w_i||w_j|} over inverted pairs.
Rational permutation_koszul_sign(const std::vector<int>& degrees,
                                 const std::vector<int>& sigma);

int word_degree(const GradedSpace& space, const Word& w);
std::string word_label(const GradedSpace& space, const Word& w);

// Weight-truncated symmetric algebra on a complex: basis = sorted words of
// length <= maxWeight in the basis of C (odd letters squarefree), with the
// derivation extension of C's differential.
class SymComplex {
 public:
  SymComplex() = default;
  SymComplex(const Complex& base, int max_weight);

  const Complex& complex() const { return cx_; }
  const Complex& base() const { return base_; }
  int max_weight() const { return max_weight_; }

  const Word& word(const Key& k) const;
  int weight(const Key& k) const { return static_cast<int>(word(k).size()); }
  Key unit() const { return unit_; }
  std::optional<Key> key_of(const Word& sorted_word) const;

  // Normalized product of a word with the basis word of k; nullopt when the
  // result is zero or exceeds the weight bound.
  std::optional<std::pair<Rational, Key>> multiply(const Word& w, const Key& k) const;
  // Product of two vectors, dropping weight overflow (truncated product).
  Vec multiply_vec(const Vec& a, const Vec& b) const;

  // Coproduct of a basis monomial: all (left, right) splits with unshuffle
  // Koszul signs, as keys of this same SymComplex.
  std::vector<std::tuple<Rational, Key, Key>> coproduct(const Key& k) const;

 private:
  Complex base_;
  Complex cx_;
  int max_weight_ = 0;
  Key unit_;
  std::map<Word, Key> word_to_key_;
  std::map<Key, Word> key_to_word_;
};

// Plain symmetric-power view used by the projector byproducts and tests.
struct TensorPower {
  Complex cx;
  std::map<Word, Key> word_to_key;
  std::map<Key, Word> key_to_word;
};

TensorPower tensor_power(const Complex& base, int weight);

// Symmetrization projector (1/n! sum_sigma eps(sigma) sigma) inside the n-th
// tensor power, plus the section/quotient pair against the Sym basis.
struct Symmetrization {
  GradedMap projector;  // T^n -> T^n
  GradedMap section;    // Sym^n -> T^n  (eps-symmetrized tensors)
  GradedMap quotient;   // T^n -> Sym^n  (algebra quotient map)
};

Symmetrization symmetrization(const SymComplex& sym, const TensorPower& tp, int weight);

// The weight-w graded piece of a SymComplex as a standalone space.
GradedSpace sym_weight_component(const SymComplex& sym, int weight);

}  // namespace dgla
