#pragma once

#include "dgla/lie.hpp"

namespace dgla {

using ActionTable = std::map<std::pair<Key, Key>, Vec>;  // (lie key, module key) -> value

// Dg-representation of a dg-Lie algebra: a complex with a degree-0 action map.
class Representation {
 public:
  Representation() = default;
  Representation(DgLieAlgebra lie, Complex underlying, ActionTable action)
      : lie_(std::move(lie)), m_(std::move(underlying)), act_(std::move(action)) {}

  const DgLieAlgebra& lie() const { return lie_; }
  const Complex& complex() const { return m_; }
  const GradedSpace& space() const { return m_.space(); }
  const ActionTable& table() const { return act_; }

  Vec act(const Key& x, const Key& v) const;
  Vec act_vec(const Vec& x, const Vec& v) const;

 private:
  DgLieAlgebra lie_;
  Complex m_;
  ActionTable act_;
};

// Chain-map and module-axiom check, witness-valued like validate_lie.
ValidationReport validate_representation(const Representation& rep);

// underlying = L, action = bracket.
Representation adjoint_rep(const DgLieAlgebra& L);

// One-dimensional trivial representation k in degree 0.
Representation trivial_rep(const DgLieAlgebra& L);

// Zero action on an arbitrary complex.
Representation zero_action_rep(const DgLieAlgebra& L, Complex m);

// Dual module: (x·f)(v) = -(-1)^{|x||f|} f(x·v).
Representation dual_rep(const Representation& rep);

// Diagonal action on the tensor product; both factors must share the Lie algebra.
Representation rep_tensor(const Representation& a, const Representation& b);

// L' as a representation of L along a Lie morphism alpha: L -> L'.
Representation restrict_along(const GradedMap& alpha, const DgLieAlgebra& L,
                              const DgLieAlgebra& Lp);

}  // namespace dgla
