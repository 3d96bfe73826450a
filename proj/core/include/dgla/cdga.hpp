#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/complex_ops.hpp"
#include "dgla/graded.hpp"

namespace dgla {

// ---- free graded-commutative polynomial layer (generators in degrees <= 0) --

// Sorted exponent list (generator index, exponent>0); odd generators are
// squarefree, enforced at multiplication time.
using Monomial = std::vector<std::pair<int, int>>;
using Poly = std::map<Monomial, Rational>;

struct CdgaGen {
  std::string label;
  int degree = 0;  // <= 0
};

int mono_gen_count(const Monomial& m);

class CdgaPresentation {
 public:
  CdgaPresentation() = default;
  CdgaPresentation(std::vector<CdgaGen> gens, std::map<int, Poly> differential);

  const std::vector<CdgaGen>& gens() const { return gens_; }
  const Poly& d_gen(int i) const;

  int mono_degree(const Monomial& m) const;
  bool gen_odd(int i) const { return (gens_[i].degree & 1) != 0; }

  // Koszul-signed product; nullopt when an odd generator squares.
  std::optional<std::pair<Rational, Monomial>> mono_mul(const Monomial& a,
                                                        const Monomial& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly d(const Poly& p) const;
  Poly d_mono(const Monomial& m) const;

  std::string mono_label(const Monomial& m) const;
  std::string poly_str(const Poly& p) const;

  // d is degree +1, homogeneous, with d(d(gen)) = 0; throws otherwise.
  void validate() const;

  // all monomials of the given degree with generator count <= cap
  std::vector<Monomial> monomials(int degree, int count_cap) const;

 private:
  std::vector<CdgaGen> gens_;
  std::map<int, Poly> d_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scaled(const Poly& a, const Rational& c);

// ---- finite-dimensional cdgas in structure constants ----

struct AlgebraViolation {
  std::string rule;
  std::vector<std::string> witness;
};

// Finite-dimensional graded-commutative dg-algebra with unit, multiplication
// table, and augmentation; degrees <= 0. The substrate for artinian
// coefficients and cellular-resolution targets.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(Complex cx, Key unit, std::map<std::pair<Key, Key>, Vec> mult,
                std::map<Key, Rational> augmentation);

  static FiniteAlgebra base_field();  // Q, unit only

  const Complex& complex() const { return cx_; }
  const GradedSpace& space() const { return cx_.space(); }
  Key unit() const { return unit_; }

  Vec mul(const Key& a, const Key& b) const;
  Vec mul_vec(const Vec& a, const Vec& b) const;
  Rational aug(const Vec& v) const;

  std::vector<AlgebraViolation> validate() const;

  // basis of the augmentation ideal (kernel of aug), echelon order
  std::vector<Vec> aug_ideal_basis() const;

  // least k with m^k = 0, or nullopt if the ideal is not nilpotent
  std::optional<int> nilpotency_order() const;

 private:
  Complex cx_;
  Key unit_;
  std::map<std::pair<Key, Key>, Vec> mult_;
  std::map<Key, Rational> aug_;
};

struct ArtinianCheck {
  bool artinian = false;
  int order = 0;  // nilpotency order when artinian
  std::string reason;
};

ArtinianCheck is_artinian(const FiniteAlgebra& b);

// Trivial square-zero extension Q + M for a complex M in degrees <= 0.
FiniteAlgebra square_zero(const Complex& m);

// Q + Q eps_n with eps in degree -n (n >= 0).
FiniteAlgebra epsilon_algebra(int n);

// Augmentation-compatible algebra map given on basis elements.
struct AlgebraMap {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::map<Key, Vec> values;

  Vec apply(const Vec& v) const;
  std::vector<AlgebraViolation> validate() const;
};

// B x_E Q along phi: B -> E and the unit section Q -> E: the subalgebra
// phi^{-1}(Q 1_E) of B.
FiniteAlgebra fiber_product_over(const FiniteAlgebra& b, const AlgebraMap& phi,
                                 const FiniteAlgebra& e);

}  // namespace dgla
