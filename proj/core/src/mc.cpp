#include "dgla/mc.hpp"

#include <sstream>

namespace dgla {

namespace {
SparseRow flat(const Vec& v) {
  SparseRow r;
  for (const auto& [k, c] : v) r.emplace(k.second + 100000 * (k.first + 500), c);
  return r;
}
}  // namespace

NilpotentTensor nilpotent_tensor(const DgLieAlgebra& L, const FiniteAlgebra& B) {
  NilpotentTensor out;
  out.ideal_basis = B.aug_ideal_basis();
  // express an ideal element back in the ideal basis
  LinSolver ideal_span;
  for (const auto& v : out.ideal_basis) ideal_span.insert(flat(v));
  auto in_ideal = [&](const Vec& v) {
    auto combo = ideal_span.express(flat(v));
    if (!combo)
      throw std::logic_error("nilpotent_tensor: element escaped the ideal");
    return *combo;  // index -> coefficient
  };

  std::vector<Key> lkeys;
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) lkeys.push_back({d, i});

  GradedSpace s;
  auto ideal_degree = [&](int i) { return out.ideal_basis[i].begin()->first.first; };
  for (int i = 0; i < static_cast<int>(out.ideal_basis.size()); ++i)
    for (const auto& x : lkeys) {
      std::ostringstream label;
      label << "m" << i << "⊗" << L.space().label(x);
      out.pair_to_key[{i, x}] = s.add(ideal_degree(i) + x.first, label.str());
    }

  GradedMap dd(s, s, 1);
  for (const auto& [pr, k] : out.pair_to_key) {
    const auto& [i, x] = pr;
    // d(a (x) x) = da (x) x + (-1)^{|a|} a (x) dx
    Vec da = B.complex().d().apply(out.ideal_basis[i]);
    if (!da.empty()) {
      for (const auto& [j, c] : in_ideal(da))
        dd.add_entry(out.pair_to_key.at({static_cast<int>(j), x}), k, c);
    }
    Rational sa = (ideal_degree(i) % 2 == 0) ? 1 : -1;
    for (const auto& [tx, c] : L.complex().d().apply_key(x))
      dd.add_entry(out.pair_to_key.at({i, tx}), k, sa * c);
  }

  BracketTable table;
  for (const auto& [pa, ka] : out.pair_to_key)
    for (const auto& [pb, kb] : out.pair_to_key) {
      const auto& [i, x] = pa;
      const auto& [j, y] = pb;
      Vec br = L.bracket(x, y);
      if (br.empty()) continue;
      Vec ab = B.mul_vec(out.ideal_basis[i], out.ideal_basis[j]);
      if (ab.empty()) continue;
      Rational sign = (x.first * ideal_degree(j)) % 2 == 0 ? 1 : -1;
      Vec val;
      for (const auto& [p, cp] : in_ideal(ab))
        for (const auto& [z, cz] : br)
          vec_axpy(val, sign * cp * cz,
                   Vec{{out.pair_to_key.at({static_cast<int>(p), z}), Rational(1)}});
      if (!val.empty()) table[{ka, kb}] = std::move(val);
    }
  out.lie = DgLieAlgebra(Complex(std::move(s), std::move(dd)), std::move(table));
  return out;
}

MCEvaluation mc_set(const DgLieAlgebra& L, const FiniteAlgebra& B) {
  ArtinianCheck art = is_artinian(B);
  if (!art.artinian)
    throw InputError("mc_set: coefficient algebra is not artinian (" + art.reason + ")");
  MCEvaluation out;
  NilpotentTensor nt = nilpotent_tensor(L, B);
  const Complex& cx = nt.lie.complex();
  out.tangent_dims = homology_dims(cx);

  std::vector<Key> deg1, deg0;
  for (int i = 0; i < cx.dim(1); ++i) deg1.push_back({1, i});
  for (int i = 0; i < cx.dim(0); ++i) deg0.push_back({0, i});
  if (deg1.empty() && deg0.empty()) {
    out.affine_linear = true;
    out.pi0_dim = 0;
    out.flag = "point";
    return out;
  }

  // quadratic term (1/2)[x,x] on coordinates of degree 1
  bool quadratic_zero = true;
  std::map<std::pair<int, int>, Vec> quad;
  for (std::size_t j = 0; j < deg1.size(); ++j)
    for (std::size_t k = j; k < deg1.size(); ++k) {
      Vec q = nt.lie.bracket(deg1[j], deg1[k]);
      if (j != k) vec_axpy(q, 1, nt.lie.bracket(deg1[k], deg1[j]));
      if (!q.empty()) {
        quadratic_zero = false;
        quad[{static_cast<int>(j), static_cast<int>(k)}] = q;
      }
    }

  // gauge corrections: brackets (m L)^0 x (m L)^1 -> (m L)^1
  bool gauge_linear = true;
  for (const auto& l : deg0)
    for (const auto& v : deg1)
      if (!nt.lie.bracket(l, v).empty()) gauge_linear = false;

  long ker = 0, im = 0;
  {
    const SparseMatrix& d1 = cx.d().block(1);
    if (d1.rows() == 0)
      ker = static_cast<long>(deg1.size());
    else
      ker = static_cast<long>(deg1.size()) - d1.rank();
    const SparseMatrix& d0 = cx.d().block(0);
    im = d0.rows() == 0 ? 0 : d0.rank();
  }
  out.solution_dim = ker;
  out.gauge_rank = im;

  // symbolic equations, one per degree-2 target basis element
  {
    std::map<Key, std::string> eq;
    const SparseMatrix& d1 = cx.d().block(1);
    for (std::size_t j = 0; j < deg1.size(); ++j) {
      if (d1.rows() == 0) break;
      for (int r = 0; r < d1.rows(); ++r) {
        Rational c = d1.get(r, static_cast<int>(j));
        if (is_zero(c)) continue;
        auto& s = eq[{2, r}];
        if (!s.empty()) s += " + ";
        s += rat_str(c) + "*t" + std::to_string(j);
      }
    }
    for (const auto& [jk, q] : quad)
      for (const auto& [tk, c] : q) {
        auto& s = eq[tk];
        if (!s.empty()) s += " + ";
        Rational half = c / 2;
        s += rat_str(half) + "*t" + std::to_string(jk.first) + "*t" +
             std::to_string(jk.second);
      }
    for (auto& [tk, s] : eq) out.equations.push_back(s + " = 0");
  }

  out.affine_linear = quadratic_zero && gauge_linear;
  if (out.affine_linear) {
    out.pi0_dim = ker - im;
    out.flag = "affine-linear";
  } else {
    out.flag = "nonlinear";
  }
  return out;
}

std::vector<TangentRow> mc_tangent(const DgLieAlgebra& L, int n_max) {
  std::vector<TangentRow> out;
  auto hl = homology_dims(L.complex());
  for (int n = 1; n <= n_max; ++n) {
    FiniteAlgebra B = epsilon_algebra(n);
    MCEvaluation ev = mc_set(L, B);
    TangentRow row;
    row.n = n;
    row.pi0 = ev.pi0_dim;
    row.h_dim = hl.count(n + 1) ? hl[n + 1] : 0;
    row.match = ev.affine_linear && row.pi0 == row.h_dim;
    out.push_back(row);
  }
  return out;
}

SchlessingerReport schlessinger_check(const DgLieAlgebra& L, const FiniteAlgebra& B,
                                      const AlgebraMap& to_epsilon, int n) {
  SchlessingerReport out;
  FiniteAlgebra E = epsilon_algebra(n);
  auto mapviol = to_epsilon.validate();
  if (!mapviol.empty())
    throw InputError("schlessinger: the map to the epsilon algebra is not an "
                     "augmented algebra map (" +
                     mapviol.front().rule + ")");
  // (F1) presumes a small map: the projection to the epsilon algebra must be
  // degreewise surjective, else the strict fiber product is not a homotopy
  // pullback and the comparison is vacuous.
  for (int d : E.space().degrees()) {
    SparseMatrix m(E.space().dim(d), B.space().dim(d));
    for (int j = 0; j < B.space().dim(d); ++j)
      for (const auto& [k, c] : to_epsilon.apply(Vec{{Key{d, j}, Rational(1)}}))
        if (k.first == d) m.add_to(k.second, j, c);
    if (m.rank() != E.space().dim(d)) {
      out.applicable = false;
      out.flag = "map to the epsilon algebra is not surjective; refused";
      return out;
    }
  }
  FiniteAlgebra C = fiber_product_over(B, to_epsilon, E);

  MCEvaluation evC = mc_set(L, C);
  MCEvaluation evB = mc_set(L, B);
  MCEvaluation evE = mc_set(L, E);
  if (!evC.affine_linear || !evB.affine_linear || !evE.affine_linear) {
    out.applicable = false;
    out.flag = "outside the affine-linear regime; refused";
    return out;
  }
  out.applicable = true;
  out.lhs = evC.pi0_dim;

  // induced maps H^k(m_B L) -> H^k(m_E L)
  NilpotentTensor nb = nilpotent_tensor(L, B);
  NilpotentTensor ne = nilpotent_tensor(L, E);
  LinSolver espan;
  for (const auto& v : ne.ideal_basis) espan.insert(flat(v));
  GradedMap f(nb.lie.space(), ne.lie.space(), 0);
  for (const auto& [pr, k] : nb.pair_to_key) {
    const auto& [i, x] = pr;
    Vec img = to_epsilon.apply(nb.ideal_basis[i]);
    Rational eaug = E.aug(img);
    vec_axpy(img, -eaug, Vec{{E.unit(), Rational(1)}});
    if (img.empty()) continue;
    auto combo = espan.express(flat(img));
    if (!combo) throw std::logic_error("schlessinger: image escaped the ideal");
    for (const auto& [j, c] : *combo)
      f.add_entry(ne.pair_to_key.at({static_cast<int>(j), x}), k, c);
  }
  if (!is_chain_map(f, nb.lie.complex(), ne.lie.complex()))
    throw std::logic_error("schlessinger: induced map is not a chain map");

  Homology hbB(nb.lie.complex());
  Homology hbE(ne.lie.complex());
  long ker1 = 0, coker0 = 0;
  {
    LinSolver rank;
    long r = 0;
    int dimB1 = hbB.space().dim(1);
    for (int i = 0; i < dimB1; ++i) {
      Vec img = f.apply(hbB.representative({1, i}));
      Vec cls = hbE.project(img);
      if (!cls.empty() && rank.insert(flat(cls))) ++r;
    }
    ker1 = dimB1 - r;
  }
  {
    LinSolver rank;
    long r = 0;
    for (int i = 0; i < hbB.space().dim(0); ++i) {
      Vec img = f.apply(hbB.representative({0, i}));
      Vec cls = hbE.project(img);
      if (!cls.empty() && rank.insert(flat(cls))) ++r;
    }
    coker0 = hbE.space().dim(0) - r;
  }
  out.rhs = ker1 + coker0;
  out.match = (out.lhs == out.rhs);
  return out;
}

FiniteAlgebra stable_cochain_algebra(const DgLieAlgebra& L, int max_weight) {
  CECochainAlgebra Cs(L, max_weight);
  CECochainAlgebra Cb(L, max_weight + 1);
  Homology hs(Cs.complex());
  Homology hb(Cb.complex());

  // restriction C_{W+1} -> C_W: dual monomial keys match by word
  auto restrict_rep = [&](const Vec& rep) {
    Vec out;
    for (const auto& [k, c] : rep) {
      Key chain = Cb.chain_key(k);
      auto sk = Cs.chains().key_of_word(Cb.chains().word(chain));
      if (sk) out.emplace(Cs.dual_key(*sk), c);
    }
    return out;
  };

  // stable classes: unit first, then the image of H(C_{W+1})
  std::vector<Vec> classes;       // in H(C_W) coordinates
  std::vector<Vec> reps_small;    // cocycles in C_W
  LinSolver span;
  Vec unit_class = hs.project(Vec{{Cs.unit(), Rational(1)}});
  if (!unit_class.empty() && span.insert(flat(unit_class))) {
    classes.push_back(unit_class);
    reps_small.push_back(Vec{{Cs.unit(), Rational(1)}});
  }
  for (const auto& [deg, labels] : hb.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Vec down = restrict_rep(hb.representative({deg, i}));
      // the restriction of a cocycle is a cocycle of the quotient dga
      Vec cls = hs.project(down);
      if (cls.empty()) continue;
      // normalize away the unit component so the descended augmentation is
      // the coordinate of the unit basis vector
      Rational unit_coeff = Cs.augmentation(down);
      if (!is_zero(unit_coeff)) {
        vec_axpy(down, -unit_coeff, Vec{{Cs.unit(), Rational(1)}});
        vec_axpy(cls, -unit_coeff, unit_class);
        if (cls.empty()) continue;
      }
      if (span.insert(flat(cls))) {
        classes.push_back(cls);
        reps_small.push_back(down);
      }
    }

  auto class_rep = [&](const Vec& cls) -> Vec {
    // representative via the chosen stable reps
    auto combo = span.express(flat(cls));
    if (!combo) throw TruncationError("stable cochain algebra: class escaped the stable span");
    Vec rep;
    for (const auto& [id, c] : *combo) vec_axpy(rep, c, reps_small[id]);
    return rep;
  };

  GradedSpace s;
  std::vector<Key> keys;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    int deg = classes[i].begin()->first.first;
    keys.push_back(s.add(deg, "h" + std::to_string(i)));
  }
  Key unit = keys.at(0);
  std::map<std::pair<Key, Key>, Vec> mult;
  std::map<Key, Rational> aug;
  aug[unit] = Rational(1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      Vec p = Cs.product_vec(class_rep(classes[i]), class_rep(classes[j]));
      Vec cls = hs.project(p);
      if (cls.empty()) continue;
      auto combo = span.express(flat(cls));
      if (!combo)
        throw TruncationError(
            "stable cochain algebra: product escaped the stable span; increase "
            "maxWeight");
      Vec val;
      for (const auto& [id, c] : *combo) val.emplace(keys[id], c);
      if (i == 0 || j == 0) continue;  // unit handled by FiniteAlgebra
      if (!val.empty()) mult[{keys[i], keys[j]}] = std::move(val);
    }
  return FiniteAlgebra(Complex::with_zero_differential(std::move(s)), unit,
                       std::move(mult), std::move(aug));
}

UnitCheckResult unit_check(const DgLieAlgebra& L, int max_weight, int depth) {
  UnitCheckResult out;
  CECochainAlgebra C(L, max_weight);
  out.truncation = C.truncation();

  FiniteAlgebra model = stable_cochain_algebra(L, max_weight);
  {
    std::ostringstream os;
    os << "stable cohomology algebra: dims";
    for (const auto& [d, n] : homology_dims(model.complex())) os << " " << d << ":" << n;
    out.model_summary = os.str();
  }
  ArtinianCheck art = is_artinian(model);
  if (!art.artinian)
    throw TruncationError("unit_check: the truncated cochain model is not artinian (" +
                          art.reason + "); increase maxWeight");

  out.tower = cellular_resolve(model, depth);
  Complex fiber = cotangent_fiber(out.tower);
  Complex compare = dual(shift(fiber, 1));

  auto hl = homology_dims(L.complex());
  auto hc = homology_dims(compare);
  out.window_lo = 1;
  out.window_hi = depth;
  out.passed = true;
  for (int deg = out.window_lo; deg <= out.window_hi; ++deg) {
    int a = hl.count(deg) ? hl[deg] : 0;
    int b = hc.count(deg) ? hc[deg] : 0;
    out.dims[deg] = {a, b};
    if (a != b) out.passed = false;
  }
  return out;
}

}  // namespace dgla
