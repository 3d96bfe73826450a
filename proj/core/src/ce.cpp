#include "dgla/ce.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dgla {

namespace {

inline bool shifted_odd(const Key& lie_key) { return ((lie_key.first - 1) & 1) != 0; }

// Normalizes a word of Lie keys under the suspended parities |x|-1.
std::optional<std::pair<Rational, std::vector<Key>>> normalize_suspended(
    std::vector<Key> w) {
  Rational sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && w[j] < w[j - 1]) {
      if (shifted_odd(w[j]) && shifted_odd(w[j - 1])) sign = -sign;
      std::swap(w[j], w[j - 1]);
      --j;
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && shifted_odd(w[i])) return std::nullopt;
  return std::make_pair(sign, std::move(w));
}

int suspended_degree(const std::vector<Key>& w) {
  int d = 0;
  for (const auto& k : w) d += k.first - 1;
  return d;
}

std::string suspended_label(const GradedSpace& lie_space, const std::vector<Key>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += "s(" + lie_space.label(w[i]) + ")";
  }
  return out;
}

// prefix sign exponent S_i = sum of |x_q|+1 over the slots before p
int prefix_exponent(const std::vector<Key>& w, int p) {
  int s = 0;
  for (int q = 0; q < p; ++q) s += w[q].first + 1;
  return s;
}

std::vector<std::vector<Key>> suspended_words(const GradedSpace& lie_space,
                                              int max_weight) {
  std::vector<Key> keys;
  for (const auto& [d, labels] : lie_space.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  std::vector<std::vector<Key>> out;
  std::vector<Key> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_weight) return;
    for (std::size_t t = from; t < keys.size(); ++t) {
      if (!cur.empty() && cur.back() == keys[t] && shifted_odd(keys[t])) continue;
      cur.push_back(keys[t]);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<Key>& a, const std::vector<Key>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

bool all_generators_deep(const GradedSpace& s) {
  for (int d : s.degrees())
    if (d < 2) return false;
  return true;
}

}  // namespace

CEChainComplex::CEChainComplex(const DgLieAlgebra& L, int max_weight) : lie_(L) {
  if (max_weight < 0) throw std::invalid_argument("ce: maxWeight must be >= 0");
  trunc_.max_weight = max_weight;
  trunc_.exact = all_generators_deep(L.space());

  GradedSpace s;
  for (const auto& w : suspended_words(L.space(), max_weight)) {
    Key k = s.add(suspended_degree(w), suspended_label(L.space(), w));
    word_to_key_.emplace(w, k);
    key_to_word_.emplace(k, w);
    if (w.empty()) unit_ = k;
  }

  GradedMap dd(s, s, 1);
  for (const auto& [w, k] : word_to_key_) {
    int n = static_cast<int>(w.size());
    // internal part: - sum_i (-1)^{S_i} (slot i differentiated)
    for (int p = 0; p < n; ++p) {
      Vec dx = lie_.complex().d().apply_key(w[p]);
      if (dx.empty()) continue;
      Rational s_in = (prefix_exponent(w, p) % 2 == 0) ? -1 : 1;
      for (const auto& [t, c] : dx) {
        std::vector<Key> w2 = w;
        w2[p] = t;
        auto norm = normalize_suspended(std::move(w2));
        if (!norm) continue;
        dd.add_entry(word_to_key_.at(norm->second), k, s_in * c * norm->first);
      }
    }
    // bracket part: sum_{i<j} (-1)^{T_ij + |x_i|} with s[x_i,x_j] in front
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) {
        Vec br = lie_.bracket(w[p], w[r]);
        if (br.empty()) continue;
        long Sp = prefix_exponent(w, p), Sr = prefix_exponent(w, r);
        long yp = w[p].first - 1, yr = w[r].first - 1;
        long expo = yp * Sp + yr * Sr + yp * yr + w[p].first;
        Rational s_br = (expo % 2 == 0) ? 1 : -1;
        for (const auto& [z, c] : br) {
          std::vector<Key> w2;
          w2.reserve(n - 1);
          w2.push_back(z);
          for (int q = 0; q < n; ++q)
            if (q != p && q != r) w2.push_back(w[q]);
          auto norm = normalize_suspended(std::move(w2));
          if (!norm) continue;
          dd.add_entry(word_to_key_.at(norm->second), k, s_br * c * norm->first);
        }
      }
  }
  cx_ = Complex(std::move(s), std::move(dd));
}

std::optional<Key> CEChainComplex::key_of_word(const std::vector<Key>& w) const {
  auto it = word_to_key_.find(w);
  if (it == word_to_key_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::tuple<Rational, Key, Key>> CEChainComplex::coproduct(
    const Key& k) const {
  const auto& w = word(k);
  std::size_t n = w.size();
  std::vector<std::tuple<Rational, Key, Key>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Key> left, right;
    Rational sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        left.push_back(w[i]);
      } else {
        if (shifted_odd(w[i])) {
          for (std::size_t j = i + 1; j < n; ++j)
            if ((mask & (std::size_t(1) << j)) && shifted_odd(w[j])) sign = -sign;
        }
        right.push_back(w[i]);
      }
    }
    out.emplace_back(sign, word_to_key_.at(left), word_to_key_.at(right));
  }
  return out;
}

std::optional<std::pair<Rational, Key>> CEChainComplex::multiply_words(
    std::vector<Key> a, const std::vector<Key>& b) const {
  a.insert(a.end(), b.begin(), b.end());
  if (static_cast<int>(a.size()) > trunc_.max_weight) return std::nullopt;
  auto norm = normalize_suspended(std::move(a));
  if (!norm) return std::nullopt;
  return std::make_pair(norm->first, word_to_key_.at(norm->second));
}

CEChainComplex ce_homological(const DgLieAlgebra& L, int max_weight) {
  return CEChainComplex(L, max_weight);
}

std::map<int, int> ce_stable_homology_dims(const DgLieAlgebra& L, int max_weight) {
  CEChainComplex small(L, max_weight);
  CEChainComplex big(L, max_weight + 1);
  Homology hs(small.complex());
  Homology hb(big.complex());
  std::map<int, int> out;
  std::map<int, LinSolver> rank;
  for (const auto& [deg, labels] : hs.space().components()) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      const Vec& rep = hs.representative({deg, i});
      Vec lifted;
      for (const auto& [k, v] : rep)
        lifted.emplace(big.key_of_word(small.word(k)).value(), v);
      Vec cls = hb.project(lifted);
      SparseRow row;
      for (const auto& [k, v] : cls) row.emplace(k.second, v);
      if (!row.empty() && rank[deg].insert(row)) out[deg] += 1;
    }
  }
  return out;
}

CECochainAlgebra::CECochainAlgebra(const DgLieAlgebra& L, int max_weight)
    : chains_(L, max_weight) {
  cx_ = dual(chains_.complex());
}

Key CECochainAlgebra::dual_key(const Key& k) const { return {-k.first, k.second}; }
Key CECochainAlgebra::chain_key(const Key& k) const { return {-k.first, k.second}; }
Key CECochainAlgebra::unit() const { return dual_key(chains_.unit()); }

Vec CECochainAlgebra::product(const Key& a, const Key& b) const {
  Key ca = chain_key(a), cb = chain_key(b);
  auto prod = chains_.multiply_words(chains_.word(ca), chains_.word(cb));
  if (!prod) return {};
  Key u = prod->second;
  // (f.g)(u) = sum over splits of u: (-1)^{|g||left|} f(left) g(right)
  Rational acc = 0;
  for (const auto& [sign, l, r] : chains_.coproduct(u)) {
    if (l == ca && r == cb) {
      Rational koszul = ((b.first % 2 != 0) && (ca.first % 2 != 0)) ? -1 : 1;
      acc += sign * koszul;
    }
  }
  if (is_zero(acc)) return {};
  return Vec{{dual_key(u), acc}};
}

Vec CECochainAlgebra::product_vec(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) vec_axpy(out, ca * cb, product(ka, kb));
  return out;
}

Rational CECochainAlgebra::augmentation(const Vec& v) const {
  auto it = v.find(unit());
  return it == v.end() ? Rational(0) : it->second;
}

CECochainAlgebra ce_cohomological(const DgLieAlgebra& L, int max_weight) {
  return CECochainAlgebra(L, max_weight);
}

CECoefficients::CECoefficients(const DgLieAlgebra& L, const Representation& M,
                               int max_weight)
    : chains_(L, max_weight), rep_(M) {
  GradedSpace s;
  const GradedSpace& cs = chains_.complex().space();
  const GradedSpace& ms = M.space();
  for (const auto& [cd, clabels] : cs.components())
    for (int ci = 0; ci < static_cast<int>(clabels.size()); ++ci)
      for (const auto& [md, mlabels] : ms.components())
        for (int mi = 0; mi < static_cast<int>(mlabels.size()); ++mi) {
          Key k = s.add(md - cd, "(" + clabels[ci] + ")'⊗" + mlabels[mi]);
          pair_to_key_[{{cd, ci}, {md, mi}}] = k;
          key_to_pair_[k] = {{cd, ci}, {md, mi}};
        }

  GradedMap dd(s, s, 1);
  // 1) coefficient differential: (m, v) -> (m, dv)
  for (const auto& [k, pr] : key_to_pair_) {
    const auto& [m, v] = pr;
    for (const auto& [tv, c] : M.complex().d().apply_key(v))
      dd.add_entry(pair_to_key_.at({m, tv}), k, c);
  }
  // 2) Hom part: -(-1)^{|phi|} phi ∘ d_H
  for (const auto& [srcdeg, blk] : chains_.complex().d().blocks()) {
    for (int r = 0; r < blk.rows(); ++r)
      for (const auto& [col, c] : blk.row(r)) {
        Key u{srcdeg, col};
        Key mt{srcdeg + 1, r};
        for (const auto& [md, mlabels] : rep_.space().components())
          for (int mi = 0; mi < static_cast<int>(mlabels.size()); ++mi) {
            Key v{md, mi};
            Key src = pair_to_key_.at({mt, v});
            Key tgt = pair_to_key_.at({u, v});
            long phi_deg = static_cast<long>(md) - mt.first;
            Rational sign = (phi_deg % 2 == 0) ? -1 : 1;  // -(-1)^{|phi|}
            dd.add_entry(tgt, src, sign * c);
          }
      }
  }
  // 3) action part: on target word u at slot i with letter x: coefficient
  //    from (u minus slot i, v) with sign (-1)^{(|x|+1)(S_i + |phi|)}; the
  //    (|x|+1)|phi| factor is the graded-equivariance cost of pulling x past
  //    the cochain, and this is the unique option (up to an immaterial
  //    (-1)^{|x|}) with d^2 = 0 against the fixed bracket signs.
  for (const auto& [cd, clabels] : cs.components()) {
   for (int ci = 0; ci < static_cast<int>(clabels.size()); ++ci) {
    Key uk{cd, ci};
    const std::vector<Key>& uw = chains_.word(uk);
    int n = static_cast<int>(uw.size());
    for (int p = 0; p < n; ++p) {
      Key x = uw[p];
      std::vector<Key> m = uw;
      m.erase(m.begin() + p);
      Key mk = chains_.key_of_word(m).value();
      long Sp = prefix_exponent(uw, p);
      for (const auto& [md, mlabels] : rep_.space().components())
        for (int mi = 0; mi < static_cast<int>(mlabels.size()); ++mi) {
          Key v{md, mi};
          Vec xv = rep_.act(x, v);
          if (xv.empty()) continue;
          long phi_deg = static_cast<long>(md) - mk.first;
          long expo = (static_cast<long>(x.first) + 1) * (Sp + phi_deg);
          Rational sign = (expo % 2 == 0) ? 1 : -1;
          Key src = pair_to_key_.at({mk, v});
          for (const auto& [tv, c] : xv)
            dd.add_entry(pair_to_key_.at({uk, tv}), src, sign * c);
        }
    }
   }
  }
  cx_ = Complex(std::move(s), std::move(dd));
}

Key CECoefficients::pair_key(const Key& ck, const Key& mk) const {
  return pair_to_key_.at({ck, mk});
}

std::pair<Key, Key> CECoefficients::unpair(const Key& k) const {
  return key_to_pair_.at(k);
}

CECoefficients ce_with_coefficients(const DgLieAlgebra& L, const Representation& M,
                                    int max_weight) {
  return CECoefficients(L, M, max_weight);
}

GradedMap cochain_restriction(const GradedMap& alpha, const CECochainAlgebra& CL,
                              const CECochainAlgebra& CL0) {
  // dual of Sym(alpha[1]): coefficient of m in alpha(m0), letterwise
  const CEChainComplex& chains = CL.chains();
  const CEChainComplex& chains0 = CL0.chains();
  GradedMap f(CL.complex().space(), CL0.complex().space(), 0);
  const GradedSpace& s0 = chains0.complex().space();
  for (const auto& [d0, labels0] : s0.components()) {
    for (int i0 = 0; i0 < static_cast<int>(labels0.size()); ++i0) {
      Key m0{d0, i0};
      const auto& w0 = chains0.word(m0);
      // expand alpha letterwise
      std::map<std::vector<Key>, Rational> acc{{{}, Rational(1)}};
      for (const auto& letter : w0) {
        std::map<std::vector<Key>, Rational> next;
        Vec img = alpha.apply_key(letter);
        for (const auto& [w, c] : acc)
          for (const auto& [t, ct] : img) {
            auto w2 = w;
            w2.push_back(t);
            next[w2] += c * ct;
          }
        acc = std::move(next);
      }
      for (const auto& [w, c] : acc) {
        auto norm = normalize_suspended(w);
        if (!norm) continue;
        auto mk = chains.key_of_word(norm->second);
        if (!mk) continue;
        // entry: (m)' -> (m0)' with that coefficient
        f.add_entry(CL0.dual_key(m0), CL.dual_key(*mk), c * norm->first);
      }
    }
  }
  return f;
}

FreeCEModule::FreeCEModule(const DgLieAlgebra& L, const FreeCEModuleSpec& spec,
                           int max_weight) {
  ConeLie cone = cone_lie(L);
  std::vector<Key> originals;
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) originals.push_back({d, i});
  std::vector<Key> order;
  for (const auto& k : originals) order.push_back(cone.eta.at(k));
  for (const auto& k : originals) order.push_back(cone.bare.at(k));
  EnvelopingAlgebra U(cone.lie, max_weight, order);
  std::map<Key, Key> eta_to_orig;
  for (const auto& k : originals) eta_to_orig[cone.eta.at(k)] = k;

  CEChainComplex chains(L, max_weight);

  // shadow-only projection: U-monomial -> chain monomial key
  auto project = [&](const Key& umono) -> std::optional<Key> {
    std::vector<Key> word;
    for (int letter : U.mono(umono)) {
      Key ck = U.order()[letter];
      auto it = eta_to_orig.find(ck);
      if (it == eta_to_orig.end()) return std::nullopt;
      word.push_back(it->second);
    }
    return chains.key_of_word(word);
  };

  // right action of a dual chain monomial c on a U-monomial u:
  // u.c = sum over splits (left, right) of u with right shadow-only:
  //       (-1)^{|c||left|} c(right) left
  auto act_right = [&](const Key& umono, const Key& chain_mono) -> Vec {
    Vec out;
    int cdeg = -chain_mono.first;  // degree of the functional
    for (const auto& [sign, l, r] : U.coproduct(umono)) {
      auto pr = project(r);
      if (!pr || !(*pr == chain_mono)) continue;
      Rational koszul = ((cdeg % 2 != 0) && (l.first % 2 != 0)) ? -1 : 1;
      vec_axpy(out, sign * koszul, Vec{{l, Rational(1)}});
    }
    return out;
  };

  // assemble the module complex: basis (U-monomial, generator)
  GradedSpace s;
  std::map<std::pair<Key, int>, Key> pk;
  const GradedSpace& us = U.complex().space();
  int ngen = static_cast<int>(spec.generators.size());
  for (const auto& [d, labels] : us.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      for (int g = 0; g < ngen; ++g)
        pk[{{d, i}, g}] = s.add(d + spec.generators[g].second,
                                labels[i] + "⊗" + spec.generators[g].first);

  GradedMap dd(s, s, 1);
  for (const auto& [pair, k] : pk) {
    const auto& [u, g] = pair;
    for (const auto& [tu, c] : U.complex().d().apply_key(u))
      dd.add_entry(pk.at({tu, g}), k, c);
    Rational su = (u.first % 2 == 0) ? 1 : -1;
    for (int j = 0; j < ngen; ++j) {
      auto it = spec.differential.find({g, j});
      if (it == spec.differential.end()) continue;
      for (const auto& [ck, cc] : it->second) {
        // ck is a dual cochain key; act on u from the right
        Vec res = act_right(u, Key{-ck.first, ck.second});
        for (const auto& [lu, lc] : res) dd.add_entry(pk.at({lu, j}), k, su * cc * lc);
      }
    }
  }
  Complex cx(std::move(s), std::move(dd));

  // L acts by left multiplication on the U factor
  ActionTable act;
  for (const auto& x : originals) {
    Key bare = cone.bare.at(x);
    for (const auto& [pair, k] : pk) {
      const auto& [u, g] = pair;
      Vec xu = U.lie_left_mul(bare, u, /*drop_overflow=*/true);
      if (xu.empty()) continue;
      Vec img;
      for (const auto& [tu, c] : xu) img[pk.at({tu, g})] = c;
      act[{x, k}] = std::move(img);
    }
  }
  rep_ = Representation(L, std::move(cx), std::move(act));
}

FreeCEModule free_ce_module(const DgLieAlgebra& L, const FreeCEModuleSpec& spec,
                            int max_weight) {
  return FreeCEModule(L, spec, max_weight);
}

AdjointDerivation adjoint_derivation(const GradedMap& alpha, const DgLieAlgebra& L0,
                                     const DgLieAlgebra& L, int max_weight) {
  if (!is_lie_morphism(alpha, L0, L))
    throw std::invalid_argument("adjoint_derivation: alpha is not a Lie morphism");
  AdjointDerivation out;
  out.source = ce_cohomological(L, max_weight);
  Representation Lrep = restrict_along(alpha, L0, L);
  Representation Ldual = dual_rep(Lrep);
  out.target_unshifted = ce_with_coefficients(L0, Ldual, max_weight);
  out.target = shift(out.target_unshifted.complex(), -1);

  const CEChainComplex& chains = out.source.chains();
  const CEChainComplex& chains0 = out.target_unshifted.chains();

  GradedMap delta(out.source.complex().space(), out.target.space(), 0);
  // delta((m)') over target pairs (m0, y-dual): coefficient of m in the
  // normalized product alpha(m0) * s(y)
  const GradedSpace& s0 = chains0.complex().space();
  for (const auto& [d0, labels0] : s0.components()) {
    for (int i0 = 0; i0 < static_cast<int>(labels0.size()); ++i0) {
      Key m0{d0, i0};
      const auto& w0 = chains0.word(m0);
      // expand alpha(m0) letterwise
      std::map<std::vector<Key>, Rational> acc{{{}, Rational(1)}};
      for (const auto& letter : w0) {
        std::map<std::vector<Key>, Rational> next;
        Vec img = alpha.apply_key(letter);
        for (const auto& [w, c] : acc)
          for (const auto& [t, ct] : img) {
            auto w2 = w;
            w2.push_back(t);
            next[w2] += c * ct;
          }
        acc = std::move(next);
      }
      for (const auto& [yd, ylabels] : L.space().components()) {
        for (int yi = 0; yi < static_cast<int>(ylabels.size()); ++yi) {
          Key y{yd, yi};
          Key ydual{-yd, yi};
          // the (-1)^{|y|} is the suspension bookkeeping of (L[1])v = Lv[-1];
          // on weight 1 the map is the identity pairing valued in (L[1])v
          Rational ysign = (yd % 2 == 0) ? 1 : -1;
          for (const auto& [w, c] : acc) {
            auto w2 = w;
            w2.push_back(y);
            auto norm = normalize_suspended(w2);
            if (!norm) continue;
            auto mk = chains.key_of_word(norm->second);
            if (!mk) continue;
            Key src = out.source.dual_key(*mk);
            Key tgt_pair = out.target_unshifted.pair_key(m0, ydual);
            Key tgt{tgt_pair.first + 1, tgt_pair.second};  // the [-1] shift
            delta.add_entry(tgt, src, ysign * c * norm->first);
          }
        }
      }
    }
  }
  // chain-map enforcement on the certified window: cochains of weight < W see
  // every contribution inside the truncation; the top weight loses the
  // d-raised part and is excluded.
  GradedMap lhs = out.target.d().compose(delta);
  GradedMap rhs = delta.compose(out.source.complex().d());
  GradedMap diff = lhs + rhs.scaled(-1);
  for (const auto& [d, blk] : diff.blocks())
    for (int r = 0; r < blk.rows(); ++r)
      for (const auto& [col, v] : blk.row(r)) {
        if (is_zero(v)) continue;
        Key chain_word{-d, col};
        if (chains.weight(chain_word) <= max_weight - 1)
          throw std::logic_error(
              "adjoint_derivation: chain-map residual nonzero on basis word '" +
              out.source.complex().space().labels(d)[col] + "'");
      }
  out.delta = std::move(delta);
  out.certified_weight = max_weight - 1;
  return out;
}

Vec coef_cup(const CECoefficients& coef, const Key& cochain_dual_key,
             const Key& pair_key) {
  const CEChainComplex& chains = coef.chains();
  Key cw{-cochain_dual_key.first, cochain_dual_key.second};
  auto [m, v] = coef.unpair(pair_key);
  auto prod = chains.multiply_words(chains.word(cw), chains.word(m));
  if (!prod) return {};
  Key u = prod->second;
  long phi_deg = static_cast<long>(v.first) - m.first;
  Rational acc = 0;
  for (const auto& [sign, l, r] : chains.coproduct(u)) {
    if (l == cw && r == m) {
      Rational koszul = ((phi_deg % 2 != 0) && (cw.first % 2 != 0)) ? -1 : 1;
      acc += sign * koszul;
    }
  }
  if (is_zero(acc)) return {};
  return Vec{{coef.pair_key(u, v), acc}};
}

}  // namespace dgla
