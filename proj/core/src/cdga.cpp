#include "dgla/cdga.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgla {

int mono_gen_count(const Monomial& m) {
  int c = 0;
  for (const auto& [g, e] : m) c += e;
  return c;
}

CdgaPresentation::CdgaPresentation(std::vector<CdgaGen> gens,
                                   std::map<int, Poly> differential)
    : gens_(std::move(gens)), d_(std::move(differential)) {
  for (const auto& g : gens_)
    if (g.degree > 0)
      throw std::invalid_argument("cdga generator '" + g.label +
                                  "' has positive degree");
}

const Poly& CdgaPresentation::d_gen(int i) const {
  static const Poly zero;
  auto it = d_.find(i);
  return it == d_.end() ? zero : it->second;
}

int CdgaPresentation::mono_degree(const Monomial& m) const {
  int d = 0;
  for (const auto& [g, e] : m) d += e * gens_[g].degree;
  return d;
}

std::optional<std::pair<Rational, Monomial>> CdgaPresentation::mono_mul(
    const Monomial& a, const Monomial& b) const {
  // sign: odd entries of b crossing odd entries of a with larger gen index
  int flips = 0;
  for (const auto& [gb, eb] : b) {
    if (!gen_odd(gb) || eb % 2 == 0) continue;
    for (const auto& [ga, ea] : a)
      if (ga > gb && gen_odd(ga) && ea % 2 == 1) ++flips;
  }
  Monomial out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      int e = ia->second + ib->second;
      if (gen_odd(ia->first) && e > 1) return std::nullopt;
      out.push_back({ia->first, e});
      ++ia;
      ++ib;
    }
  }
  return std::make_pair(Rational(flips % 2 == 0 ? 1 : -1), std::move(out));
}

Poly CdgaPresentation::mul(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto r = mono_mul(ma, mb);
      if (!r) continue;
      auto& slot = out[r->second];
      slot += ca * cb * r->first;
      if (is_zero(slot)) out.erase(r->second);
    }
  return out;
}

Poly CdgaPresentation::d_mono(const Monomial& m) const {
  // d(x_1...x_n) = sum_i (-1)^{|x_1...x_{i-1}|} x_1...dx_i...x_n, each term
  // rewritten as +-e (m / g) dg with dg commuted to the right end.
  Poly out;
  int pre = 0;  // parity of the prefix already passed by d
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& [g, e] = m[i];
    const Poly& dg = d_gen(g);
    if (!dg.empty()) {
      // dg crosses the suffix (entries after i; the leftover g^{e-1} has even
      // parity for even g, and odd g has e = 1)
      int suf = 0;
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (gen_odd(m[j].first) && m[j].second % 2 == 1) ++suf;
      int cross = ((gens_[g].degree + 1) % 2 != 0) ? (suf % 2) : 0;
      Rational sign = ((pre + cross) % 2 == 0) ? 1 : -1;
      Monomial rest;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j == i) {
          if (e > 1) rest.push_back({g, e - 1});
        } else {
          rest.push_back(m[j]);
        }
      }
      Poly term = mul(Poly{{rest, sign * e}}, dg);
      out = poly_add(out, term);
    }
    if (gen_odd(g) && e % 2 == 1) pre ^= 1;
  }
  return out;
}

Poly CdgaPresentation::d(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p) out = poly_add(out, poly_scaled(d_mono(m), c));
  return out;
}

std::string CdgaPresentation::mono_label(const Monomial& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : m) {
    if (!first) os << "*";
    first = false;
    os << gens_[g].label;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::string CdgaPresentation::poly_str(const Poly& p) const {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << mono_label(m);
  }
  return os.str();
}

void CdgaPresentation::validate() const {
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    const Poly& dg = d_gen(i);
    int want = gens_[i].degree + 1;
    for (const auto& [m, c] : dg) {
      if (mono_degree(m) != want)
        throw std::invalid_argument("d(" + gens_[i].label +
                                    ") is not homogeneous of degree +1");
      if (m.empty())
        throw std::invalid_argument("d(" + gens_[i].label +
                                    ") has a constant term");
    }
    Poly dd = d(dg);
    if (!dd.empty())
      throw std::invalid_argument("d^2 != 0 on generator '" + gens_[i].label +
                                  "': " + poly_str(dd));
  }
}

std::vector<Monomial> CdgaPresentation::monomials(int degree, int count_cap) const {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int, int)> rec2 = [&](int g, int target, int cnt_left) {
    if (g == static_cast<int>(gens_.size())) {
      if (target == 0) out.push_back(cur);
      return;
    }
    int dg = gens_[g].degree;
    int emax = gen_odd(g) ? 1 : cnt_left;
    for (int e = 0; e <= emax; ++e) {
      int nt = target - e * dg;
      if (e > cnt_left) break;
      // remaining generators have degrees <= 0: target must stay <= 0
      if (nt > 0) break;
      if (e > 0) cur.push_back({g, e});
      rec2(g + 1, nt, cnt_left - e);
      if (e > 0) cur.pop_back();
    }
  };
  rec2(0, degree, count_cap);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) {
    auto& slot = out[m];
    slot += c;
    if (is_zero(slot)) out.erase(m);
  }
  return out;
}

Poly poly_scaled(const Poly& a, const Rational& c) {
  Poly out;
  if (is_zero(c)) return out;
  for (const auto& [m, v] : a) out.emplace(m, v * c);
  return out;
}

FiniteAlgebra::FiniteAlgebra(Complex cx, Key unit,
                             std::map<std::pair<Key, Key>, Vec> mult,
                             std::map<Key, Rational> augmentation)
    : cx_(std::move(cx)), unit_(unit), mult_(std::move(mult)), aug_(std::move(augmentation)) {}

FiniteAlgebra FiniteAlgebra::base_field() {
  Complex cx = Complex::point(0, "1");
  return FiniteAlgebra(cx, {0, 0}, {}, {{{0, 0}, Rational(1)}});
}

Vec FiniteAlgebra::mul(const Key& a, const Key& b) const {
  if (a == unit_) return Vec{{b, Rational(1)}};
  if (b == unit_) return Vec{{a, Rational(1)}};
  auto it = mult_.find({a, b});
  return it == mult_.end() ? Vec{} : it->second;
}

Vec FiniteAlgebra::mul_vec(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) vec_axpy(out, ca * cb, mul(ka, kb));
  return out;
}

Rational FiniteAlgebra::aug(const Vec& v) const {
  Rational out = 0;
  for (const auto& [k, c] : v) {
    auto it = aug_.find(k);
    if (it != aug_.end()) out += c * it->second;
  }
  return out;
}

std::vector<AlgebraViolation> FiniteAlgebra::validate() const {
  std::vector<AlgebraViolation> out;
  const GradedSpace& s = cx_.space();
  std::vector<Key> keys;
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  for (int d : s.degrees())
    if (d > 0) out.push_back({"degrees", {std::to_string(d)}});
  if (unit_.first != 0) out.push_back({"unit-degree", {}});
  for (const auto& a : keys) {
    for (const auto& b : keys) {
      // graded commutativity
      Vec r = mul(a, b);
      Rational sign = (a.first * b.first) % 2 == 0 ? -1 : 1;
      vec_axpy(r, sign, mul(b, a));
      if (!r.empty()) out.push_back({"commutativity", {s.label(a), s.label(b)}});
      // degree additivity
      for (const auto& [k, c] : mul(a, b))
        if (k.first != a.first + b.first) {
          out.push_back({"grading", {s.label(a), s.label(b)}});
          break;
        }
      // Leibniz
      Vec l = cx_.d().apply(mul(a, b));
      vec_axpy(l, -1, mul_vec(cx_.d().apply_key(a), Vec{{b, Rational(1)}}));
      Rational sa = (a.first % 2 == 0) ? 1 : -1;
      vec_axpy(l, -sa, mul_vec(Vec{{a, Rational(1)}}, cx_.d().apply_key(b)));
      if (!l.empty()) out.push_back({"leibniz", {s.label(a), s.label(b)}});
      // augmentation multiplicative
      Rational e = aug(mul(a, b)) - aug(Vec{{a, Rational(1)}}) * aug(Vec{{b, Rational(1)}});
      if (!is_zero(e)) out.push_back({"augmentation", {s.label(a), s.label(b)}});
    }
    Rational de = aug(cx_.d().apply_key(a));
    if (!is_zero(de)) out.push_back({"augmentation-chain", {s.label(a)}});
  }
  for (const auto& a : keys)
    for (const auto& b : keys)
      for (const auto& c : keys) {
        Vec l = mul_vec(mul(a, b), Vec{{c, Rational(1)}});
        vec_axpy(l, -1, mul_vec(Vec{{a, Rational(1)}}, mul(b, c)));
        if (!l.empty()) {
          out.push_back({"associativity", {s.label(a), s.label(b), s.label(c)}});
        }
      }
  return out;
}

std::vector<Vec> FiniteAlgebra::aug_ideal_basis() const {
  std::vector<Vec> out;
  const GradedSpace& s = cx_.space();
  LinSolver solver;
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Key k{d, i};
      Rational e = aug(Vec{{k, Rational(1)}});
      Vec v{{k, Rational(1)}};
      if (!is_zero(e)) {
        // subtract e * unit to land in the ideal
        if (k == unit_) continue;
        vec_axpy(v, -e, Vec{{unit_, Rational(1)}});
      }
      SparseRow row;
      for (const auto& [kk, c] : v) row.emplace(kk.second + 1000 * (kk.first + 500), c);
      if (solver.insert(row)) out.push_back(v);
    }
  return out;
}

std::optional<int> FiniteAlgebra::nilpotency_order() const {
  std::vector<Vec> power = aug_ideal_basis();
  std::vector<Vec> ideal = power;
  long total = cx_.space().total_dim();
  auto flat = [](const Vec& v) {
    SparseRow r;
    for (const auto& [k, c] : v) r.emplace(k.second + 1000 * (k.first + 500), c);
    return r;
  };
  for (int k = 1; k <= total + 1; ++k) {
    if (power.empty()) return k;
    std::vector<Vec> next;
    LinSolver solver;
    for (const auto& a : ideal)
      for (const auto& b : power) {
        Vec p = mul_vec(a, b);
        if (p.empty()) continue;
        if (solver.insert(flat(p))) next.push_back(p);
      }
    power = std::move(next);
  }
  return std::nullopt;
}

ArtinianCheck is_artinian(const FiniteAlgebra& b) {
  ArtinianCheck out;
  for (int d : b.space().degrees())
    if (d > 0) {
      out.reason = "positive-degree component";
      return out;
    }
  auto violations = b.validate();
  if (!violations.empty()) {
    out.reason = "algebra axioms violated: " + violations.front().rule;
    return out;
  }
  auto ord = b.nilpotency_order();
  if (!ord) {
    out.reason = "augmentation ideal is not nilpotent";
    return out;
  }
  out.artinian = true;
  out.order = *ord;
  return out;
}

FiniteAlgebra square_zero(const Complex& m) {
  for (int d : m.space().degrees())
    if (d > 0)
      throw std::invalid_argument("square_zero: module has positive-degree part");
  GradedSpace s;
  Key unit = s.add(0, "1");
  std::map<Key, Key> of;  // module key -> algebra key
  for (const auto& [d, labels] : m.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      of[{d, i}] = s.add(d, labels[i]);
  GradedMap dd(s, s, 1);
  for (const auto& [orig, k] : of)
    for (const auto& [t, v] : m.d().apply_key(orig)) dd.add_entry(of.at(t), k, v);
  // products of module elements vanish; the unit is handled by FiniteAlgebra
  return FiniteAlgebra(Complex(std::move(s), std::move(dd)), unit, {},
                       {{unit, Rational(1)}});
}

FiniteAlgebra epsilon_algebra(int n) {
  if (n < 0) throw std::invalid_argument("epsilon_algebra: n must be >= 0");
  GradedSpace ms;
  ms.add(-n, "eps" + std::to_string(n));
  return square_zero(Complex::with_zero_differential(ms));
}

Vec AlgebraMap::apply(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) {
    auto it = values.find(k);
    if (it != values.end()) vec_axpy(out, c, it->second);
  }
  return out;
}

std::vector<AlgebraViolation> AlgebraMap::validate() const {
  std::vector<AlgebraViolation> out;
  const GradedSpace& ss = source->space();
  std::vector<Key> keys;
  for (const auto& [d, labels] : ss.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  // unit
  Vec u = apply(Vec{{source->unit(), Rational(1)}});
  vec_axpy(u, -1, Vec{{target->unit(), Rational(1)}});
  if (!u.empty()) out.push_back({"map-unit", {}});
  for (const auto& a : keys) {
    // chain map
    Vec r = target->complex().d().apply(apply(Vec{{a, Rational(1)}}));
    vec_axpy(r, -1, apply(source->complex().d().apply_key(a)));
    if (!r.empty()) out.push_back({"map-chain", {ss.label(a)}});
    // augmentation
    Rational e = target->aug(apply(Vec{{a, Rational(1)}})) -
                 source->aug(Vec{{a, Rational(1)}});
    if (!is_zero(e)) out.push_back({"map-augmentation", {ss.label(a)}});
    for (const auto& b : keys) {
      Vec m = apply(source->mul(a, b));
      vec_axpy(m, -1,
               target->mul_vec(apply(Vec{{a, Rational(1)}}), apply(Vec{{b, Rational(1)}})));
      if (!m.empty()) out.push_back({"map-multiplicative", {ss.label(a), ss.label(b)}});
    }
  }
  return out;
}

FiniteAlgebra fiber_product_over(const FiniteAlgebra& b, const AlgebraMap& phi,
                                 const FiniteAlgebra& e) {
  // subspace {x in B : phi(x) in Q 1_E}
  const GradedSpace& bs = b.space();
  std::vector<Key> bkeys;
  for (const auto& [d, labels] : bs.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) bkeys.push_back({d, i});
  auto flat_e = [&](const Vec& v) {
    SparseRow r;
    for (const auto& [k, c] : v) r.emplace(k.second + 1000 * (k.first + 500), c);
    return r;
  };
  // kernel of x -> phi(x) - aug_E(phi x) 1_E, computed column by column
  std::vector<SparseRow> cols;
  for (const auto& k : bkeys) {
    Vec img = phi.apply(Vec{{k, Rational(1)}});
    Rational eaug = e.aug(img);
    vec_axpy(img, -eaug, Vec{{e.unit(), Rational(1)}});
    cols.push_back(flat_e(img));
  }
  // kernel via incremental solver over columns
  std::vector<Vec> kernel;
  {
    LinSolver ls;
    std::vector<int> kept;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto [res, combo] = ls.reduce(cols[j]);
      if (res.empty()) {
        Vec v{{bkeys[j], Rational(1)}};
        for (const auto& [kid, c] : combo) vec_axpy(v, -c, Vec{{bkeys[kept[kid]], Rational(1)}});
        kernel.push_back(std::move(v));
      } else {
        ls.insert(cols[j]);
        kept.push_back(static_cast<int>(j));
      }
    }
  }
  // assemble the subalgebra on the kernel basis
  GradedSpace s;
  std::vector<Key> new_keys;
  Key unit{};
  LinSolver membership;
  auto flat_b = [&](const Vec& v) {
    SparseRow r;
    for (const auto& [k, c] : v) r.emplace(k.second + 1000 * (k.first + 500), c);
    return r;
  };
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    int deg = kernel[i].begin()->first.first;
    Key nk = s.add(deg, "w" + std::to_string(i));
    new_keys.push_back(nk);
    membership.insert(flat_b(kernel[i]));
  }
  auto express = [&](const Vec& v) -> Vec {
    if (v.empty()) return {};
    auto combo = membership.express(flat_b(v));
    if (!combo)
      throw std::logic_error("fiber product: subspace is not multiplicatively closed");
    Vec out;
    for (const auto& [id, c] : *combo) out.emplace(new_keys[id], c);
    return out;
  };
  GradedMap dd(s, s, 1);
  std::map<std::pair<Key, Key>, Vec> mult;
  std::map<Key, Rational> aug;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    Vec dv = b.complex().d().apply(kernel[i]);
    for (const auto& [k, c] : express(dv)) dd.add_entry(k, new_keys[i], c);
    aug[new_keys[i]] = b.aug(kernel[i]);
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      Vec p = b.mul_vec(kernel[i], kernel[j]);
      Vec pe = express(p);
      if (!pe.empty()) mult[{new_keys[i], new_keys[j]}] = std::move(pe);
    }
  }
  // identify the unit among the kernel vectors: express 1_B
  Vec unit_combo = express(Vec{{b.unit(), Rational(1)}});
  if (unit_combo.size() == 1 && unit_combo.begin()->second == Rational(1)) {
    unit = unit_combo.begin()->first;
  } else {
    throw std::logic_error("fiber product: unit is not a basis vector");
  }
  return FiniteAlgebra(Complex(std::move(s), std::move(dd)), unit, std::move(mult),
                       std::move(aug));
}

}  // namespace dgla
