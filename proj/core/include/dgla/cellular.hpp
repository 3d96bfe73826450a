#pragma once

#include "dgla/cdga.hpp"

namespace dgla {

struct CellInfo {
  std::string label;
  int degree = 0;
  bool is_x = false;  // X-cells carry d = 0; U-cells carry an attaching cycle
  Poly attaching;     // in the cells of earlier stages
};

struct StageCertificate {
  int degree = 0;          // the -i being compared
  long stage_dim = 0;      // stable homology dimension of the stage
  long target_dim = 0;     // dim H^{-i}(B)
  long map_rank = 0;       // rank of the comparison map
  bool require_iso = false;
  bool ok = false;
};

struct TowerStage {
  int index = 0;
  std::vector<CellInfo> new_cells;
  std::vector<StageCertificate> certificates;
};

struct CellularTower {
  CdgaPresentation presentation;  // all cells with their attaching maps
  std::vector<TowerStage> stages;
  int depth = 0;
  int count_cap = 0;        // generator-count cap used for stage homology
  int count_bump = 0;       // extra cap used for the stable-image certificate
  bool certified = false;
  int certified_through = -1;  // last stage whose certificates all hold
  std::string failure;
};

struct ResolveOptions {
  int count_cap = 0;   // 0 = derive from nilpotency order and depth
  int count_bump = 2;
};

// Attach cells to a presentation: relations must be cycles of degree -(n-1),
// each getting a U-cell of degree -n, plus X-cells of degree -n with d = 0.
CdgaPresentation attach_cells(const CdgaPresentation& prev,
                              const std::vector<Poly>& relations,
                              const std::vector<std::string>& u_labels,
                              const std::vector<std::string>& x_labels, int n);

// The recursive cellular resolution of an artinian algebra: stage 0 presents
// H^0(B) on minimal algebra generators, stage n attaches U-cells for minimal
// module generators of ker(H^{-(n-1)}(B_{n-1}) -> H^{-(n-1)}(B)) and X-cells
// for minimal module generators of H^{-n}(B). Stage homology is computed on
// generator-count-capped quotients, with classes certified stable across a
// cap bump. Throws on certification failure, naming the failing degree.
CellularTower cellular_resolve(const FiniteAlgebra& b, int depth,
                               ResolveOptions opt = {});

// One basis element per cell; the differential is the count-1 linear part of
// the attaching polynomials. Valid in degrees > -depth.
Complex cotangent_fiber(const CellularTower& tower);

}  // namespace dgla
