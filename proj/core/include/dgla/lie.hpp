#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgla/complex_ops.hpp"
#include "dgla/graded.hpp"

namespace dgla {

using BracketTable = std::map<std::pair<Key, Key>, Vec>;

// Dg-Lie algebra over Q: a complex plus a degree-0 bracket given by structure
// constants on basis pairs. Axioms are not assumed here; validate_lie reports
// violations with witnesses.
class DgLieAlgebra {
 public:
  DgLieAlgebra() = default;
  DgLieAlgebra(Complex underlying, BracketTable table)
      : c_(std::move(underlying)), table_(std::move(table)) {}

  const Complex& complex() const { return c_; }
  const GradedSpace& space() const { return c_.space(); }
  const BracketTable& table() const { return table_; }

  Vec bracket(const Key& a, const Key& b) const;
  Vec bracket_vec(const Vec& x, const Vec& y) const;

  // Fills missing opposite-order entries via graded antisymmetry.
  void complete_antisymmetric();

 private:
  Complex c_;
  BracketTable table_;
};

struct LieViolation {
  std::string axiom;                 // "antisymmetry" | "jacobi" | "leibniz" | "grading"
  std::vector<std::string> witness;  // offending basis labels
  std::string residual;
};

struct ValidationReport {
  std::vector<LieViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_lie(const DgLieAlgebra& L);

// ---- builders ----

DgLieAlgebra abelian_lie(GradedSpace space);
DgLieAlgebra abelian_lie(Complex underlying);

// e, f, h in degree 0 with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
DgLieAlgebra sl2();

// x, y in degree 1, z in degree 2, [x,y] = z, everything else zero.
DgLieAlgebra heisenberg_graded();

// Direct sum with zero cross-bracket.
DgLieAlgebra direct_sum(const DgLieAlgebra& a, const DgLieAlgebra& b);

// The contractible extension Q[eta] (x) L: one shadow copy e(x) of each basis
// element in degree |x|-1, d e(x) = x - e(dx), [e(x), y] = e[x,y],
// [x, e(y)] = (-1)^{|x|} e[x,y], [e(x), e(y)] = 0.
struct ConeLie {
  DgLieAlgebra lie;
  std::map<Key, Key> bare;  // original key -> cone key
  std::map<Key, Key> eta;   // original key -> cone key of the shadow copy
};
ConeLie cone_lie(const DgLieAlgebra& L);

// A dg-Lie morphism is a degree-0 chain map respecting brackets.
bool is_lie_morphism(const GradedMap& f, const DgLieAlgebra& source,
                     const DgLieAlgebra& target);

GradedMap identity_map(const GradedSpace& s);

}  // namespace dgla
