#include "dgla/cellular.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace dgla {

namespace {

// Bounded model of a presentation: all monomials of gen-count <= cap in a
// degree window, with the count-truncated differential.
struct BoundedModel {
  Complex cx;
  std::map<Monomial, Key> mono_to_key;
  std::map<Key, Monomial> key_to_mono;

  BoundedModel() = default;
  BoundedModel(const CdgaPresentation& pres, int lo_degree, int cap) {
    GradedSpace s;
    for (int deg = lo_degree; deg <= 0; ++deg)
      for (const auto& m : pres.monomials(deg, cap)) {
        Key k = s.add(deg, pres.mono_label(m));
        mono_to_key.emplace(m, k);
        key_to_mono.emplace(k, m);
      }
    GradedMap dd(s, s, 1);
    for (const auto& [m, k] : mono_to_key) {
      if (k.first + 1 > 0) continue;
      for (const auto& [tm, c] : pres.d_mono(m)) {
        auto it = mono_to_key.find(tm);
        if (it == mono_to_key.end()) continue;  // count or window overflow
        dd.add_entry(it->second, k, c);
      }
    }
    cx = Complex(std::move(s), std::move(dd));
  }

  Vec project(const Poly& p) const {
    Vec out;
    for (const auto& [m, c] : p) {
      auto it = mono_to_key.find(m);
      if (it != mono_to_key.end()) out.emplace(it->second, c);
    }
    return out;
  }

  Poly lift(const Vec& v) const {
    Poly out;
    for (const auto& [k, c] : v) out.emplace(key_to_mono.at(k), c);
    return out;
  }
};

Vec evaluate_mono(const FiniteAlgebra& b, const std::vector<Vec>& cell_values,
                  const Monomial& m) {
  Vec acc{{b.unit(), Rational(1)}};
  for (const auto& [g, e] : m)
    for (int k = 0; k < e; ++k) acc = b.mul_vec(acc, cell_values[g]);
  return acc;
}

Vec evaluate_poly(const FiniteAlgebra& b, const std::vector<Vec>& cell_values,
                  const Poly& p) {
  Vec out;
  for (const auto& [m, c] : p) vec_axpy(out, c, evaluate_mono(b, cell_values, m));
  return out;
}

SparseRow flat(const Vec& v) {
  SparseRow r;
  for (const auto& [k, c] : v) r.emplace(k.second + 100000 * (k.first + 500), c);
  return r;
}

// Per-stage homology analysis with honest-cycle representatives, stabilized
// across a generator-count bump.
class StageAnalysis {
 public:
  StageAnalysis(const CdgaPresentation& pres, int lo, int cap, int bump)
      : pres_(pres),
        grow_(1),
        big_cap_(cap + bump),
        small_(pres, lo, cap),
        big_(pres, lo, cap + bump) {
    for (int i = 0; i < static_cast<int>(pres.gens().size()); ++i) {
      for (const auto& [m, c] : pres.d_gen(i))
        grow_ = std::max(grow_, mono_gen_count(m) - 1);
    }
    deep_ = BoundedModel(pres, lo, cap + bump + grow_);
    hs_.emplace(small_.cx);
    hb_.emplace(big_.cx);
    hd_.emplace(deep_.cx);
  }

  struct Stable {
    std::vector<Poly> reps;        // honest cycles in the presentation
    std::vector<Vec> classes;      // classes in the small-model homology
    long dim() const { return static_cast<long>(reps.size()); }
  };

  // classes of H(small) that lift along the cap bump, reps repaired to honest
  // cycles; throws when one more cap step still shrinks the image
  const Stable& stable(int degree) {
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;
    Stable out;
    LinSolver span;
    for (int i = 0; i < hb_->space().dim(degree); ++i) {
      const Vec& rb = hb_->representative({degree, i});
      Vec cls = project_class(big_, rb);
      if (cls.empty()) continue;
      if (!span.insert(flat(cls))) continue;
      out.classes.push_back(cls);
      out.reps.push_back(repair(big_.lift(rb), degree, big_cap_));
    }
    LinSolver span2;
    long rank2 = 0;
    for (int i = 0; i < hd_->space().dim(degree); ++i) {
      Vec cls = project_class(deep_, hd_->representative({degree, i}));
      if (!cls.empty() && span2.insert(flat(cls))) ++rank2;
    }
    if (rank2 != out.dim())
      throw std::runtime_error(
          "cellular_resolve: stage homology did not stabilize at degree " +
          std::to_string(degree) + "; increase the count cap");
    return cache_.emplace(degree, std::move(out)).first->second;
  }

  // class of an honest presentation cycle in the small-model homology
  Vec small_class(const Poly& z) { return hs_->project(small_.project(z)); }
  const Homology& small_homology() const { return *hs_; }
  const BoundedModel& deep_model() const { return deep_; }

 private:
  Vec project_class(const BoundedModel& from, const Vec& rep) {
    Vec in_small;
    for (const auto& [k, c] : rep) {
      auto it = small_.mono_to_key.find(from.key_to_mono.at(k));
      if (it != small_.mono_to_key.end()) in_small.emplace(it->second, c);
    }
    return hs_->project(in_small);
  }

  // Makes a cap-bounded cycle honest by a bounded solve in the deep model.
  // The correction is restricted to monomials beyond the big cap, so the
  // class of z in the small model is untouched.
  Poly repair(Poly z, int degree, int big_cap) {
    Poly dz = pres_.d(z);
    if (dz.empty()) return z;
    Vec rhs = deep_.project(dz);
    if (deep_.lift(rhs) != dz)
      throw std::runtime_error(
          "cellular_resolve: cycle residual escaped the repair window; "
          "increase the count cap");
    const SparseMatrix& blk = deep_.cx.d().block(degree);
    std::vector<int> high_cols;
    for (int j = 0; j < deep_.cx.dim(degree); ++j)
      if (mono_gen_count(deep_.key_to_mono.at({degree, j})) > big_cap)
        high_cols.push_back(j);
    SparseMatrix restricted(blk.rows() > 0 ? blk.rows() : deep_.cx.dim(degree + 1),
                            static_cast<int>(high_cols.size()));
    for (int r = 0; r < blk.rows(); ++r)
      for (int jj = 0; jj < static_cast<int>(high_cols.size()); ++jj) {
        Rational v = blk.get(r, high_cols[jj]);
        if (!is_zero(v)) restricted.set(r, jj, v);
      }
    SparseRow rhs_row;
    for (const auto& [k, c] : rhs) rhs_row.emplace(k.second, c);
    auto sol = restricted.solve(rhs_row);
    if (!sol)
      throw std::runtime_error(
          "cellular_resolve: could not repair a stage cycle; increase the "
          "count cap");
    for (const auto& [jj, c] : *sol) {
      Monomial m = deep_.key_to_mono.at({degree, high_cols[jj]});
      Poly t{{m, -c}};
      z = poly_add(z, t);
    }
    if (!pres_.d(z).empty())
      throw std::logic_error("cellular_resolve: cycle repair failed");
    return z;
  }

  const CdgaPresentation& pres_;
  int grow_;
  int big_cap_;
  BoundedModel small_, big_, deep_;
  std::optional<Homology> hs_, hb_, hd_;
  std::map<int, Stable> cache_;
};

}  // namespace

CdgaPresentation attach_cells(const CdgaPresentation& prev,
                              const std::vector<Poly>& relations,
                              const std::vector<std::string>& u_labels,
                              const std::vector<std::string>& x_labels, int n) {
  if (relations.size() != u_labels.size())
    throw std::invalid_argument("attach_cells: one U label per relation");
  std::vector<CdgaGen> gens = prev.gens();
  std::map<int, Poly> diff;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    const Poly& dg = prev.d_gen(i);
    if (!dg.empty()) diff[i] = dg;
  }
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const auto& [m, c] : relations[r]) {
      if (prev.mono_degree(m) != -(n - 1))
        throw std::invalid_argument("attach_cells: relation is not of degree -(n-1)");
    }
    if (!prev.d(relations[r]).empty())
      throw std::invalid_argument("attach_cells: relation is not a cycle");
    int idx = static_cast<int>(gens.size());
    gens.push_back({u_labels[r], -n});
    if (!relations[r].empty()) diff[idx] = relations[r];
  }
  for (const auto& xl : x_labels) gens.push_back({xl, -n});
  CdgaPresentation next(std::move(gens), std::move(diff));
  next.validate();
  return next;
}

CellularTower cellular_resolve(const FiniteAlgebra& b, int depth, ResolveOptions opt) {
  CellularTower tower;
  tower.depth = depth;

  ArtinianCheck art = is_artinian(b);
  if (!art.artinian)
    throw std::invalid_argument("cellular_resolve: input is not artinian (" +
                                art.reason + ")");
  int cap = opt.count_cap > 0 ? opt.count_cap : art.order + depth + 1;
  int bump = opt.count_bump > 0 ? opt.count_bump : 2;
  tower.count_cap = cap;
  tower.count_bump = bump;
  int lo = -(depth + 2);

  Homology hb(b.complex());
  Vec unit_class = hb.project(Vec{{b.unit(), Rational(1)}});

  auto class_rep = [&](const Vec& cls) {
    Vec rep;
    for (const auto& [k, c] : cls) vec_axpy(rep, c, hb.representative(k));
    return rep;
  };

  // augmentation ideal of H^0(B)
  std::vector<Vec> m0_classes;
  {
    LinSolver solver;
    for (int i = 0; i < hb.space().dim(0); ++i) {
      Vec cls{{Key{0, i}, Rational(1)}};
      Rational e = b.aug(hb.representative({0, i}));
      vec_axpy(cls, -e, unit_class);
      if (cls.empty()) continue;
      if (solver.insert(flat(cls))) m0_classes.push_back(cls);
    }
  }
  auto h0_mul = [&](const Vec& cls_a, const Vec& cls_b) {
    return hb.project(b.mul_vec(class_rep(cls_a), class_rep(cls_b)));
  };

  // minimal algebra generators of H^0(B): a complement of m0^2 inside m0
  std::vector<Vec> x0_classes;
  {
    LinSolver span;
    for (const auto& a : m0_classes)
      for (const auto& c : m0_classes) {
        Vec p = h0_mul(a, c);
        if (!p.empty()) span.insert(flat(p));
      }
    for (const auto& cls : m0_classes)
      if (span.insert(flat(cls))) x0_classes.push_back(cls);
  }

  std::vector<CdgaGen> gens;
  std::vector<Vec> cell_values;
  std::vector<CellInfo> stage0_cells;
  for (std::size_t i = 0; i < x0_classes.size(); ++i) {
    std::string label = "X0_" + std::to_string(i);
    gens.push_back({label, 0});
    cell_values.push_back(class_rep(x0_classes[i]));
    stage0_cells.push_back({label, 0, true, {}});
  }
  CdgaPresentation pres(gens, {});
  pres.validate();

  // the action of the degree-0 cells on classes of H(B)
  auto cell_action_span = [&](const std::vector<Vec>& classes) {
    LinSolver span;
    for (const auto& cv : cell_values) {
      if (cv.empty()) continue;
      if (cv.begin()->first.first != 0) continue;
      for (const auto& cls : classes) {
        Vec p = hb.project(b.mul_vec(cv, class_rep(cls)));
        if (!p.empty()) span.insert(flat(p));
      }
    }
    return span;
  };

  auto analysis = std::make_unique<StageAnalysis>(pres, lo, cap, bump);

  // stage-0 certificate: surjectivity in degree 0
  {
    TowerStage st{0, stage0_cells, {}};
    const auto& stable0 = analysis->stable(0);
    LinSolver rank;
    long r = 0;
    for (const auto& rep : stable0.reps) {
      Vec img = hb.project(evaluate_poly(b, cell_values, rep));
      if (!img.empty() && rank.insert(flat(img))) ++r;
    }
    StageCertificate cert;
    cert.degree = 0;
    cert.stage_dim = stable0.dim();
    cert.target_dim = hb.space().dim(0);
    cert.map_rank = r;
    cert.require_iso = false;
    cert.ok = (r == cert.target_dim);
    st.certificates.push_back(cert);
    if (!cert.ok)
      throw std::runtime_error(
          "cellular_resolve: stage 0 fails surjectivity in degree 0");
    tower.stages.push_back(std::move(st));
    tower.certified_through = 0;
  }

  for (int n = 1; n <= depth; ++n) {
    // kernel of stable H^{-(n-1)}(B_{n-1}) -> H^{-(n-1)}(B)
    const auto& st_prev = analysis->stable(-(n - 1));
    std::vector<Vec> psi;  // image classes in H(B)
    for (const auto& rep : st_prev.reps)
      psi.push_back(hb.project(evaluate_poly(b, cell_values, rep)));
    // kernel combos over the stable basis
    std::vector<std::map<int, Rational>> kernel_combos;
    {
      LinSolver ls;
      std::vector<int> kept;
      for (std::size_t j = 0; j < psi.size(); ++j) {
        auto [res, combo] = ls.reduce(flat(psi[j]));
        if (res.empty()) {
          std::map<int, Rational> v;
          for (const auto& [kid, c] : combo) v[kept[kid]] -= c;
          v[static_cast<int>(j)] += 1;
          kernel_combos.push_back(std::move(v));
        } else {
          ls.insert(flat(psi[j]));
          kept.push_back(static_cast<int>(j));
        }
      }
    }
    auto combo_poly = [&](const std::map<int, Rational>& combo) {
      Poly z;
      for (const auto& [j, c] : combo)
        z = poly_add(z, poly_scaled(st_prev.reps[j], c));
      return z;
    };
    // minimal module generators of the kernel: complement of the span of
    // (degree-0 cells) . kernel inside the kernel
    std::vector<Poly> relations;
    {
      // coordinates: kernel classes expressed in the stable-class span of the
      // small model; the cell action computed on honest representatives
      LinSolver stable_span;
      for (const auto& cls : st_prev.classes) stable_span.insert(flat(cls));
      auto stable_coords = [&](const Poly& z) -> std::optional<SparseRow> {
        Vec cls = analysis->small_class(z);
        auto combo = stable_span.express(flat(cls));
        if (!combo) return std::nullopt;
        return *combo;
      };
      LinSolver acted;
      for (const auto& combo : kernel_combos) {
        Poly z = combo_poly(combo);
        for (std::size_t g = 0; g < cell_values.size(); ++g) {
          if (pres.gens()[g].degree != 0) continue;
          Poly gz = pres.mul(Poly{{Monomial{{static_cast<int>(g), 1}}, Rational(1)}}, z);
          auto coords = stable_coords(gz);
          if (!coords)
            throw std::runtime_error(
                "cellular_resolve: module action left the stable span at degree " +
                std::to_string(-(n - 1)) + "; increase the count cap");
          if (!coords->empty()) acted.insert(*coords);
        }
      }
      for (const auto& combo : kernel_combos) {
        SparseRow row;
        for (const auto& [j, c] : combo) row.emplace(j, c);
        if (acted.insert(row)) relations.push_back(combo_poly(combo));
      }
    }

    // minimal module generators of H^{-n}(B)
    std::vector<Vec> xn_classes;
    {
      std::vector<Vec> hn;
      for (int i = 0; i < hb.space().dim(-n); ++i)
        hn.push_back(Vec{{Key{-n, i}, Rational(1)}});
      LinSolver span = cell_action_span(hn);
      // also the action of positive augmentation-ideal elements of H^0(B)
      for (const auto& m0 : m0_classes)
        for (const auto& cls : hn) {
          Vec p = hb.project(b.mul_vec(class_rep(m0), class_rep(cls)));
          if (!p.empty()) span.insert(flat(p));
        }
      for (const auto& cls : hn)
        if (span.insert(flat(cls))) xn_classes.push_back(cls);
    }

    // attach
    std::vector<std::string> u_labels, x_labels;
    for (std::size_t i = 0; i < relations.size(); ++i)
      u_labels.push_back("U" + std::to_string(n) + "_" + std::to_string(i));
    for (std::size_t i = 0; i < xn_classes.size(); ++i)
      x_labels.push_back("X" + std::to_string(n) + "_" + std::to_string(i));
    CdgaPresentation next = attach_cells(pres, relations, u_labels, x_labels, n);

    TowerStage st{n, {}, {}};
    for (std::size_t i = 0; i < relations.size(); ++i) {
      // cell value: solve d(u) = value of the relation in B
      Vec rhs = evaluate_poly(b, cell_values, relations[i]);
      const SparseMatrix& blk = b.complex().d().block(-n);
      SparseRow rhs_row;
      for (const auto& [k, c] : rhs) rhs_row.emplace(k.second, c);
      std::optional<SparseRow> sol;
      if (blk.rows() > 0)
        sol = blk.solve(rhs_row);
      else if (rhs_row.empty())
        sol = SparseRow{};
      if (!sol)
        throw std::logic_error(
            "cellular_resolve: attaching value has no primitive in the target");
      Vec uval;
      for (const auto& [j, c] : *sol) uval.emplace(Key{-n, j}, c);
      cell_values.push_back(uval);
      st.new_cells.push_back({u_labels[i], -n, false, relations[i]});
    }
    for (std::size_t i = 0; i < xn_classes.size(); ++i) {
      cell_values.push_back(class_rep(xn_classes[i]));
      st.new_cells.push_back({x_labels[i], -n, true, {}});
    }
    pres = std::move(next);
    analysis = std::make_unique<StageAnalysis>(pres, lo, cap, bump);

    // certification: iso in degrees 0..n-1, surjectivity at -n
    bool all_ok = true;
    for (int i = 0; i <= n; ++i) {
      const auto& stb = analysis->stable(-i);
      LinSolver rank;
      long r = 0;
      for (const auto& rep : stb.reps) {
        Vec img = hb.project(evaluate_poly(b, cell_values, rep));
        if (!img.empty() && rank.insert(flat(img))) ++r;
      }
      StageCertificate cert;
      cert.degree = -i;
      cert.stage_dim = stb.dim();
      cert.target_dim = hb.space().dim(-i);
      cert.map_rank = r;
      cert.require_iso = (i <= n - 1);
      cert.ok = cert.require_iso
                    ? (cert.stage_dim == cert.target_dim && r == cert.target_dim)
                    : (r == cert.target_dim);
      if (!cert.ok) all_ok = false;
      st.certificates.push_back(cert);
    }
    tower.stages.push_back(std::move(st));
    if (!all_ok) {
      for (const auto& cert : tower.stages.back().certificates)
        if (!cert.ok)
          throw std::runtime_error("cellular_resolve: certification failed at stage " +
                                   std::to_string(n) + ", degree " +
                                   std::to_string(cert.degree));
    }
    tower.certified_through = n;
  }

  tower.presentation = pres;
  tower.certified = true;
  return tower;
}

Complex cotangent_fiber(const CellularTower& tower) {
  GradedSpace s;
  std::map<std::string, Key> by_label;
  for (const auto& st : tower.stages)
    for (const auto& c : st.new_cells) by_label[c.label] = s.add(c.degree, c.label);
  GradedMap dd(s, s, 1);
  const CdgaPresentation& p = tower.presentation;
  for (const auto& st : tower.stages)
    for (const auto& c : st.new_cells) {
      if (c.is_x) continue;
      for (const auto& [m, coeff] : c.attaching) {
        if (mono_gen_count(m) != 1) continue;  // linearization
        const auto& [g, e] = m[0];
        dd.add_entry(by_label.at(p.gens()[g].label), by_label.at(c.label), coeff);
      }
    }
  return Complex(std::move(s), std::move(dd));
}

}  // namespace dgla
