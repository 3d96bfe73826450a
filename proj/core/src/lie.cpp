#include "dgla/lie.hpp"
#include <algorithm>

#include <sstream>

namespace dgla {

Vec DgLieAlgebra::bracket(const Key& a, const Key& b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? Vec{} : it->second;
}

Vec DgLieAlgebra::bracket_vec(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto it = table_.find({a, b});
      if (it == table_.end()) continue;
      vec_axpy(out, ca * cb, it->second);
    }
  return out;
}

void DgLieAlgebra::complete_antisymmetric() {
  BracketTable extra;
  for (const auto& [pair, val] : table_) {
    const auto& [a, b] = pair;
    if (table_.count({b, a}) || extra.count({b, a})) continue;
    Rational sign = (a.first * b.first) % 2 == 0 ? -1 : 1;
    extra.emplace(std::make_pair(b, a), vec_scaled(val, sign));
  }
  for (auto& [k, v] : extra) table_.emplace(k, std::move(v));
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << (i ? "," : "") << v.witness[i];
    os << "): " << v.residual << "\n";
  }
  return os.str();
}

ValidationReport validate_lie(const DgLieAlgebra& L) {
  ValidationReport rep;
  const GradedSpace& s = L.space();
  std::vector<Key> keys;
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});

  auto push = [&](const std::string& axiom, std::initializer_list<Key> witness,
                  const Vec& residual) {
    LieViolation v;
    v.axiom = axiom;
    for (const auto& k : witness) v.witness.push_back(s.label(k));
    v.residual = s.format_vec(residual);
    rep.violations.push_back(std::move(v));
  };

  for (const auto& [pair, val] : L.table()) {
    const auto& [a, b] = pair;
    int want = a.first + b.first;
    for (const auto& [k, c] : val)
      if (k.first != want) {
        push("grading", {a, b}, val);
        break;
      }
  }

  for (const auto& a : keys)
    for (const auto& b : keys) {
      // antisymmetry: [a,b] + (-1)^{|a||b|} [b,a] = 0
      Vec r = L.bracket(a, b);
      Rational sign = (a.first * b.first) % 2 == 0 ? 1 : -1;
      vec_axpy(r, sign, L.bracket(b, a));
      if (!r.empty()) push("antisymmetry", {a, b}, r);
      // Leibniz: d[a,b] - [da,b] - (-1)^{|a|} [a,db] = 0
      Vec l = L.complex().d().apply(L.bracket(a, b));
      vec_axpy(l, -1, L.bracket_vec(L.complex().d().apply_key(a), Vec{{b, Rational(1)}}));
      Rational sa = (a.first % 2 == 0) ? 1 : -1;
      vec_axpy(l, -sa, L.bracket_vec(Vec{{a, Rational(1)}}, L.complex().d().apply_key(b)));
      if (!l.empty()) push("leibniz", {a, b}, l);
    }

  for (const auto& a : keys)
    for (const auto& b : keys)
      for (const auto& c : keys) {
        // [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]] = 0
        Vec r = L.bracket_vec(Vec{{a, Rational(1)}}, L.bracket(b, c));
        vec_axpy(r, -1, L.bracket_vec(L.bracket(a, b), Vec{{c, Rational(1)}}));
        Rational sign = (a.first * b.first) % 2 == 0 ? -1 : 1;
        vec_axpy(r, sign, L.bracket_vec(Vec{{b, Rational(1)}}, L.bracket(a, c)));
        if (!r.empty()) push("jacobi", {a, b, c}, r);
      }
  return rep;
}

DgLieAlgebra abelian_lie(GradedSpace space) {
  return DgLieAlgebra(Complex::with_zero_differential(std::move(space)), {});
}

DgLieAlgebra abelian_lie(Complex underlying) {
  return DgLieAlgebra(std::move(underlying), {});
}

DgLieAlgebra sl2() {
  GradedSpace s;
  Key e = s.add(0, "e");
  Key f = s.add(0, "f");
  Key h = s.add(0, "h");
  BracketTable t;
  t[{h, e}] = Vec{{e, Rational(2)}};
  t[{e, h}] = Vec{{e, Rational(-2)}};
  t[{h, f}] = Vec{{f, Rational(-2)}};
  t[{f, h}] = Vec{{f, Rational(2)}};
  t[{e, f}] = Vec{{h, Rational(1)}};
  t[{f, e}] = Vec{{h, Rational(-1)}};
  return DgLieAlgebra(Complex::with_zero_differential(s), std::move(t));
}

DgLieAlgebra heisenberg_graded() {
  GradedSpace s;
  Key x = s.add(1, "x");
  Key y = s.add(1, "y");
  Key z = s.add(2, "z");
  BracketTable t;
  t[{x, y}] = Vec{{z, Rational(1)}};
  t[{y, x}] = Vec{{z, Rational(1)}};  // -(-1)^{1*1} [x,y]
  return DgLieAlgebra(Complex::with_zero_differential(s), std::move(t));
}

DgLieAlgebra direct_sum(const DgLieAlgebra& a, const DgLieAlgebra& b) {
  GradedSpace s;
  std::map<Key, Key> ma, mb;
  for (const auto& [d, labels] : a.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      ma[{d, i}] = s.add(d, labels[i]);
  for (const auto& [d, labels] : b.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      mb[{d, i}] = s.add(d, labels[i] + "#2");
  GradedMap dd(s, s, 1);
  for (const auto& [orig, k] : ma)
    for (const auto& [t, v] : a.complex().d().apply_key(orig)) dd.add_entry(ma.at(t), k, v);
  for (const auto& [orig, k] : mb)
    for (const auto& [t, v] : b.complex().d().apply_key(orig)) dd.add_entry(mb.at(t), k, v);
  auto relabel = [](const std::map<Key, Key>& m, const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) out.emplace(m.at(k), c);
    return out;
  };
  BracketTable t;
  for (const auto& [pair, val] : a.table())
    t[{ma.at(pair.first), ma.at(pair.second)}] = relabel(ma, val);
  for (const auto& [pair, val] : b.table())
    t[{mb.at(pair.first), mb.at(pair.second)}] = relabel(mb, val);
  return DgLieAlgebra(Complex(std::move(s), std::move(dd)), std::move(t));
}

ConeLie cone_lie(const DgLieAlgebra& L) {
  ConeLie out;
  GradedSpace s;
  auto fresh = [&s](int degree, std::string base) {
    const auto& used = s.labels(degree);
    std::string candidate = base;
    int n = 1;
    while (std::find(used.begin(), used.end(), candidate) != used.end())
      candidate = base + "~" + std::to_string(++n);
    return s.add(degree, candidate);
  };
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      out.eta[{d, i}] = fresh(d - 1, "e(" + labels[i] + ")");
      out.bare[{d, i}] = fresh(d, labels[i]);
    }
  GradedMap dd(s, s, 1);
  for (const auto& [orig, k] : out.bare) {
    for (const auto& [t, v] : L.complex().d().apply_key(orig))
      dd.add_entry(out.bare.at(t), k, v);
  }
  for (const auto& [orig, k] : out.eta) {
    dd.add_entry(out.bare.at(orig), k, 1);
    for (const auto& [t, v] : L.complex().d().apply_key(orig))
      dd.add_entry(out.eta.at(t), k, -v);
  }
  auto to_bare = [&](const Vec& v) {
    Vec o;
    for (const auto& [k, c] : v) o.emplace(out.bare.at(k), c);
    return o;
  };
  auto to_eta = [&](const Vec& v) {
    Vec o;
    for (const auto& [k, c] : v) o.emplace(out.eta.at(k), c);
    return o;
  };
  BracketTable t;
  for (const auto& [pair, val] : L.table()) {
    const auto& [a, b] = pair;
    if (val.empty()) continue;
    t[{out.bare.at(a), out.bare.at(b)}] = to_bare(val);
    t[{out.eta.at(a), out.bare.at(b)}] = to_eta(val);
    Rational sa = (a.first % 2 == 0) ? 1 : -1;
    t[{out.bare.at(a), out.eta.at(b)}] = vec_scaled(to_eta(val), sa);
  }
  out.lie = DgLieAlgebra(Complex(std::move(s), std::move(dd)), std::move(t));
  return out;
}

bool is_lie_morphism(const GradedMap& f, const DgLieAlgebra& source,
                     const DgLieAlgebra& target) {
  if (!is_chain_map(f, source.complex(), target.complex())) return false;
  std::vector<Key> keys;
  for (const auto& [d, labels] : source.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  for (const auto& a : keys)
    for (const auto& b : keys) {
      Vec lhs = f.apply(source.bracket(a, b));
      Vec rhs = target.bracket_vec(f.apply_key(a), f.apply_key(b));
      vec_axpy(lhs, -1, rhs);
      if (!lhs.empty()) return false;
    }
  return true;
}

GradedMap identity_map(const GradedSpace& s) {
  GradedMap f(s, s, 0);
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) f.add_to(d, i, i, 1);
  return f;
}

}  // namespace dgla
