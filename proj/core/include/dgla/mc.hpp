#pragma once

#include "dgla/cdga.hpp"
#include "dgla/ce.hpp"
#include "dgla/cellular.hpp"
#include "dgla/errors.hpp"
#include "dgla/lie.hpp"

namespace dgla {

// The nilpotent dg-Lie algebra m (x) L for m the augmentation ideal of an
// artinian algebra, with a named basis m_i (x) x_j.
struct NilpotentTensor {
  DgLieAlgebra lie;
  std::vector<Vec> ideal_basis;                // in the coefficient algebra
  std::map<std::pair<int, Key>, Key> pair_to_key;  // (ideal idx, L key) -> key
};

NilpotentTensor nilpotent_tensor(const DgLieAlgebra& L, const FiniteAlgebra& B);

struct MCEvaluation {
  bool affine_linear = false;
  long pi0_dim = -1;                  // census when affine-linear, else -1
  std::map<int, int> tangent_dims;    // dim H^k(m (x) L)
  long solution_dim = 0;              // dim ker of the linear part (degree 1)
  long gauge_rank = 0;                // rank of d^0 (translation directions)
  std::vector<std::string> equations;  // the MC system, symbolically
  std::string flag;                   // "affine-linear" | "nonlinear" | "point"
};

// Equations dx + (1/2)[x,x] = 0 on (m (x) L)^1 with gauge by (m (x) L)^0;
// the census is exact in the affine-linear regime, symbolic otherwise.
MCEvaluation mc_set(const DgLieAlgebra& L, const FiniteAlgebra& B);

struct TangentRow {
  int n = 0;
  long pi0 = 0;
  long h_dim = 0;  // dim H^{n+1}(L)
  bool match = false;
};

// pi0 of MC over Q + Q eps_n against dim H^{n+1}(L), n = 1..n_max.
std::vector<TangentRow> mc_tangent(const DgLieAlgebra& L, int n_max);

struct SchlessingerReport {
  bool applicable = false;  // all three coefficient algebras affine-linear
  long lhs = -1;            // pi0 census of X(B x_{A[eps_n]} Q)
  long rhs = -1;  // dim ker(H^1(m_B L) -> H^1(m_E L)) + dim coker(H^0 -> H^0)
  bool match = false;
  std::string flag;
};

// (F1) at the pi0 level for the square B -> A[eps_n] <- Q.
SchlessingerReport schlessinger_check(const DgLieAlgebra& L, const FiniteAlgebra& B,
                                      const AlgebraMap& to_epsilon, int n);

struct UnitCheckResult {
  bool passed = false;
  // degree -> (dim H(L), dim H(fiber[1] dual)) over the certified window
  std::map<int, std::pair<int, int>> dims;
  int window_lo = 1, window_hi = 0;
  Truncation truncation;
  std::string model_summary;  // the artinian model extracted from C(L)
  CellularTower tower;
};

// The adjunction-unit pipeline: C(L) -> stable cohomology algebra ->
// cellular resolution -> cotangent fiber -> [1] -> dual -> compare with L.
// Throws TruncationError when the truncated cochain algebra does not yield an
// artinian model or fails to stabilize.
UnitCheckResult unit_check(const DgLieAlgebra& L, int max_weight, int depth);

// The stable cohomology algebra of the weight-truncated cochain algebra:
// classes surviving the restriction H(C_{W+1}) -> H(C_W), with their products.
FiniteAlgebra stable_cochain_algebra(const DgLieAlgebra& L, int max_weight);

}  // namespace dgla
