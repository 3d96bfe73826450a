#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgla/graded.hpp"

namespace dgla {

// M[n]^i = M^{n+i}, d_{M[n]} = (-1)^n d_M.
Complex shift(const Complex& c, int n);

// (C∨)^{-i} = (C^i)∨ with (d∨f) = -(-1)^{|f|} f∘d. Labels get a "'" suffix.
Complex dual(const Complex& c);

// Canonical chain isomorphism C -> (C∨)∨, degree-wise (-1)^i * identity.
GradedMap double_dual_iso(const Complex& c, const Complex& ddual);

struct TensorComplex {
  Complex cx;
  std::map<std::pair<Key, Key>, Key> pair_to_key;
  std::map<Key, std::pair<Key, Key>> key_to_pair;
};

// d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy.
TensorComplex tensor(const Complex& c, const Complex& d);

// τ(x⊗y) = (-1)^{|x||y|} y⊗x, as a map tensor(C,D) -> tensor(D,C).
GradedMap braiding(const TensorComplex& cd, const TensorComplex& dc);

struct ConeComplex {
  Complex cx;
  GradedMap include_target;  // D -> cone(f)
  GradedMap project_shift;   // cone(f) -> C[1]
  Complex shifted_source;    // C[1]
};

// Mapping cone of a degree-0 chain map f: C -> D. Throws if f is not a chain map.
ConeComplex cone(const GradedMap& f, const Complex& c, const Complex& d);

// Exact homology with chosen representative cycles and class projection.
class Homology {
 public:
  Homology() = default;
  explicit Homology(const Complex& c);

  const GradedSpace& space() const { return space_; }
  int dim(int degree) const { return space_.dim(degree); }
  std::map<int, int> dims() const;

  // Representative cycle of a class basis element.
  const Vec& representative(const Key& class_key) const;

  // Class coordinates of a homogeneous cycle. Throws if not a cycle.
  Vec project(const Vec& cycle) const;

 private:
  struct DegreeData {
    LinSolver solver;          // boundaries first, then representatives
    int boundary_rank = 0;
    std::vector<Key> class_keys;  // in solver insertion order after boundaries
  };
  GradedSpace space_;
  std::map<Key, Vec> reps_;
  std::map<int, DegreeData> per_degree_;
};

std::map<int, int> homology_dims(const Complex& c);

}  // namespace dgla
