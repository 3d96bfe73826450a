#include "dgla/representation.hpp"

#include <stdexcept>

#include "dgla/complex_ops.hpp"

namespace dgla {

Vec Representation::act(const Key& x, const Key& v) const {
  auto it = act_.find({x, v});
  return it == act_.end() ? Vec{} : it->second;
}

Vec Representation::act_vec(const Vec& x, const Vec& v) const {
  Vec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : v) {
      auto it = act_.find({a, b});
      if (it == act_.end()) continue;
      vec_axpy(out, ca * cb, it->second);
    }
  return out;
}

ValidationReport validate_representation(const Representation& rep) {
  ValidationReport out;
  const GradedSpace& ls = rep.lie().space();
  const GradedSpace& ms = rep.space();
  std::vector<Key> lk, mk;
  for (const auto& [d, labels] : ls.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) lk.push_back({d, i});
  for (const auto& [d, labels] : ms.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) mk.push_back({d, i});

  auto push = [&](const std::string& axiom, std::vector<std::string> witness,
                  const Vec& residual) {
    out.violations.push_back({axiom, std::move(witness), ms.format_vec(residual)});
  };

  for (const auto& x : lk)
    for (const auto& v : mk) {
      // chain map: d(x v) - (dx) v - (-1)^{|x|} x (dv) = 0
      Vec r = rep.complex().d().apply(rep.act(x, v));
      vec_axpy(r, -1, rep.act_vec(rep.lie().complex().d().apply_key(x), Vec{{v, Rational(1)}}));
      Rational sx = (x.first % 2 == 0) ? 1 : -1;
      vec_axpy(r, -sx, rep.act_vec(Vec{{x, Rational(1)}}, rep.complex().d().apply_key(v)));
      if (!r.empty()) push("action-chain-map", {ls.label(x), ms.label(v)}, r);
    }

  for (const auto& x : lk)
    for (const auto& y : lk)
      for (const auto& v : mk) {
        // [x,y] v - x(y v) + (-1)^{|x||y|} y(x v) = 0
        Vec r = rep.act_vec(rep.lie().bracket(x, y), Vec{{v, Rational(1)}});
        vec_axpy(r, -1, rep.act_vec(Vec{{x, Rational(1)}}, rep.act(y, v)));
        Rational s = (x.first * y.first) % 2 == 0 ? 1 : -1;
        vec_axpy(r, s, rep.act_vec(Vec{{y, Rational(1)}}, rep.act(x, v)));
        if (!r.empty()) push("module-axiom", {ls.label(x), ls.label(y), ms.label(v)}, r);
      }
  return out;
}

Representation adjoint_rep(const DgLieAlgebra& L) {
  ActionTable act;
  for (const auto& [pair, val] : L.table())
    if (!val.empty()) act.emplace(pair, val);
  return Representation(L, L.complex(), std::move(act));
}

Representation trivial_rep(const DgLieAlgebra& L) {
  return Representation(L, Complex::point(0, "1"), {});
}

Representation zero_action_rep(const DgLieAlgebra& L, Complex m) {
  return Representation(L, std::move(m), {});
}

Representation dual_rep(const Representation& rep) {
  Complex dm = dual(rep.complex());
  ActionTable act;
  // (x f)(v) = -(-1)^{|x||f|} f(x v); in the dual basis b' of b:
  // x·b' = sum over a with coeff of b in (x·a): -(-1)^{|x||b'|} coeff * a'
  for (const auto& [pair, val] : rep.table()) {
    const auto& [x, a] = pair;
    for (const auto& [b, c] : val) {
      Key fb{-b.first, b.second};  // b' in the dual space
      Key fa{-a.first, a.second};
      Rational s = (x.first * fb.first) % 2 == 0 ? -1 : 1;
      Vec& slot = act[{x, fb}];
      vec_axpy(slot, s * c, Vec{{fa, Rational(1)}});
    }
  }
  for (auto it = act.begin(); it != act.end();)
    it = it->second.empty() ? act.erase(it) : std::next(it);
  return Representation(rep.lie(), std::move(dm), std::move(act));
}

Representation rep_tensor(const Representation& a, const Representation& b) {
  if (!(a.lie().space() == b.lie().space()) || !(a.lie().table() == b.lie().table()))
    throw std::invalid_argument("rep_tensor: factors over different Lie algebras");
  TensorComplex t = tensor(a.complex(), b.complex());
  ActionTable act;
  std::vector<Key> lk;
  for (const auto& [d, labels] : a.lie().space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) lk.push_back({d, i});
  for (const auto& [k, pq] : t.key_to_pair) {
    const auto& [m, n] = pq;
    for (const auto& x : lk) {
      Vec img;
      for (const auto& [tm, c] : a.act(x, m)) img[t.pair_to_key.at({tm, n})] = c;
      Rational s = (x.first * m.first) % 2 == 0 ? 1 : -1;
      for (const auto& [tn, c] : b.act(x, n)) {
        Key tk = t.pair_to_key.at({m, tn});
        vec_axpy(img, s * c, Vec{{tk, Rational(1)}});
      }
      if (!img.empty()) act[{x, k}] = std::move(img);
    }
  }
  return Representation(a.lie(), t.cx, std::move(act));
}

Representation restrict_along(const GradedMap& alpha, const DgLieAlgebra& L,
                              const DgLieAlgebra& Lp) {
  ActionTable act;
  std::vector<Key> lk, vk;
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) lk.push_back({d, i});
  for (const auto& [d, labels] : Lp.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) vk.push_back({d, i});
  for (const auto& x : lk)
    for (const auto& v : vk) {
      Vec img = Lp.bracket_vec(alpha.apply_key(x), Vec{{v, Rational(1)}});
      if (!img.empty()) act[{x, v}] = std::move(img);
    }
  return Representation(L, Lp.complex(), std::move(act));
}

}  // namespace dgla
