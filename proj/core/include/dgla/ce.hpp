#pragma once

#include <optional>
#include <tuple>

#include "dgla/enveloping.hpp"
#include "dgla/lie.hpp"
#include "dgla/representation.hpp"
#include "dgla/sym.hpp"

namespace dgla {

// Weight-truncation disclosure carried by every CE-side result.
struct Truncation {
  bool exact = false;  // per-degree complete (all generators in degrees >= 2)
  int max_weight = 0;
  std::string tag() const {
    return exact ? "exact" : "weight-truncated(" + std::to_string(max_weight) + ")";
  }
};

// Homological Chevalley-Eilenberg complex: Sym(L[1]) as a graded module, with
//   d(s(x_1)...s(x_n)) =
//       sum_{i<j} (-1)^{T_ij + |x_i|} s[x_i,x_j]*s(x_1)...^i...^j...s(x_n)
//     - sum_i    (-1)^{S_i}          s(x_1)...s(dx_i)...s(x_n)
// where S_i = i-1+|x_1|+...+|x_{i-1}| and
// T_ij = (|x_i|-1)S_i + (|x_j|-1)S_j + (|x_i|-1)(|x_j|-1).
// The +|x_i| in the bracket exponent is forced: it is the unique correction
// for which this formula reproduces the differential of U(Q[eta] (x) L) ⊗_{U L} Q
// on shadow monomials (and the only one with d^2 = 0 across our test algebras).
class CEChainComplex {
 public:
  CEChainComplex() = default;
  CEChainComplex(const DgLieAlgebra& L, int max_weight);

  const Complex& complex() const { return cx_; }
  const DgLieAlgebra& lie() const { return lie_; }
  int max_weight() const { return trunc_.max_weight; }
  Truncation truncation() const { return trunc_; }

  // basis monomial as a sorted word of original Lie keys; empty = unit
  const std::vector<Key>& word(const Key& k) const { return key_to_word_.at(k); }
  int weight(const Key& k) const { return static_cast<int>(word(k).size()); }
  std::optional<Key> key_of_word(const std::vector<Key>& sorted_original_keys) const;
  Key unit() const { return unit_; }

  // coalgebra structure (letters are primitive): (sign, left, right) splits
  std::vector<std::tuple<Rational, Key, Key>> coproduct(const Key& k) const;

  // normalized product of two monomial words (original keys, shifted parities);
  // nullopt when zero or out of the weight window
  std::optional<std::pair<Rational, Key>> multiply_words(std::vector<Key> a,
                                                         const std::vector<Key>& b) const;

 private:
  DgLieAlgebra lie_;
  Complex cx_;
  Truncation trunc_;
  Key unit_;
  std::map<std::vector<Key>, Key> word_to_key_;
  std::map<Key, std::vector<Key>> key_to_word_;
};

CEChainComplex ce_homological(const DgLieAlgebra& L, int max_weight);

// Homology dimensions that survive the weight step W -> W+1 (rank of the map
// induced by the inclusion of chain complexes). For weight-incomplete degrees
// this is the honest reading of the truncated homology: classes killed by a
// one-step-deeper boundary are discarded.
std::map<int, int> ce_stable_homology_dims(const DgLieAlgebra& L, int max_weight);

// Cohomological CE algebra: degreewise dual of the chain complex, with the
// convolution product dual to the coproduct and the weight-0 augmentation.
class CECochainAlgebra {
 public:
  CECochainAlgebra() = default;
  CECochainAlgebra(const DgLieAlgebra& L, int max_weight);

  const Complex& complex() const { return cx_; }
  const CEChainComplex& chains() const { return chains_; }
  Truncation truncation() const { return chains_.truncation(); }

  // dual basis key of a chain monomial and back
  Key dual_key(const Key& chain_key) const;
  Key chain_key(const Key& dual_key) const;
  int weight(const Key& dual_key) const { return chains_.weight(chain_key(dual_key)); }

  Key unit() const;  // dual of the weight-0 monomial
  Vec product(const Key& a, const Key& b) const;
  Vec product_vec(const Vec& a, const Vec& b) const;
  Rational augmentation(const Vec& v) const;

 private:
  CEChainComplex chains_;
  Complex cx_;
};

CECochainAlgebra ce_cohomological(const DgLieAlgebra& L, int max_weight);

// CE cochains with coefficients: Hom(Sym(L[1]), M) with the Hom differential
// plus the action term. Basis elements are pairs (chain monomial, M basis).
class CECoefficients {
 public:
  CECoefficients() = default;
  CECoefficients(const DgLieAlgebra& L, const Representation& M, int max_weight);

  const Complex& complex() const { return cx_; }
  const CEChainComplex& chains() const { return chains_; }
  const Representation& coefficients() const { return rep_; }
  Truncation truncation() const { return chains_.truncation(); }

  Key pair_key(const Key& chain_key, const Key& m_key) const;
  std::pair<Key, Key> unpair(const Key& k) const;

 private:
  CEChainComplex chains_;
  Representation rep_;
  Complex cx_;
  std::map<std::pair<Key, Key>, Key> pair_to_key_;
  std::map<Key, std::pair<Key, Key>> key_to_pair_;
};

CECoefficients ce_with_coefficients(const DgLieAlgebra& L, const Representation& M,
                                    int max_weight);

// Functoriality on cochains: the restriction C(L) -> C(L0) along a Lie
// morphism alpha: L0 -> L (dual of Sym(alpha[1])).
GradedMap cochain_restriction(const GradedMap& alpha, const CECochainAlgebra& CL,
                              const CECochainAlgebra& CL0);

// Free Hom-induced representation U(Q[eta] (x) L) ⊗_{C(L)} V for V a free
// C(L)-module of finite type: basis pairs (U-monomial, generator); C(L) acts
// on U through the shadow-monomial comodule structure, L acts by left
// multiplication.
struct FreeCEModuleSpec {
  // generator label, degree, and differential rows d(g_i) = sum_j c_ij g_j
  // with c_ij a cochain element (Vec over the cochain complex of L)
  std::vector<std::pair<std::string, int>> generators;
  std::map<std::pair<int, int>, Vec> differential;  // (i, j) -> c_ij
};

class FreeCEModule {
 public:
  FreeCEModule() = default;
  FreeCEModule(const DgLieAlgebra& L, const FreeCEModuleSpec& spec, int max_weight);

  const Representation& representation() const { return rep_; }
  const Complex& complex() const { return rep_.complex(); }

 private:
  Representation rep_;
};

FreeCEModule free_ce_module(const DgLieAlgebra& L, const FreeCEModuleSpec& spec,
                            int max_weight);

// The derivation delta: C(L) -> C(L0; L-dual)[-1] attached to a Lie morphism
// alpha: L0 -> L, given on a cochain xi by
//   (delta xi)(m0)(y) = (-1)^{|y|} xi(alpha(m0) * s(y)).
// Construction aborts unless the chain-map residual vanishes identically on
// cochains of weight <= maxWeight-1 (the top weight only sees a truncated
// differential and is excluded from the certificate).
struct AdjointDerivation {
  CECochainAlgebra source;
  CECoefficients target_unshifted;  // ce_with_coefficients(L0, dual of L-rep)
  Complex target;                   // the [-1] shift of the above
  GradedMap delta;                  // source.complex() -> target
  int certified_weight = 0;         // residual checked for weights <= this
};

// Cup product of a C(L0) cochain (as a dual chain key) with a coefficient
// cochain (as a pair key), inside the same CECoefficients complex.
Vec coef_cup(const CECoefficients& coef, const Key& cochain_dual_key,
             const Key& pair_key);

AdjointDerivation adjoint_derivation(const GradedMap& alpha, const DgLieAlgebra& L0,
                                     const DgLieAlgebra& L, int max_weight);

}  // namespace dgla
