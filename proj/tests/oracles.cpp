#include "oracles.hpp"

#include <functional>

#include "dgla/matrix.hpp"

namespace oracles {

using namespace dgla;

std::map<int, int> dense_homology_dims(const Complex& c) {
  std::map<int, int> out;
  for (int deg : c.space().degrees()) {
    int n = c.dim(deg);
    auto to_dense = [](const SparseMatrix& m) {
      std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols(), 0));
      for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) d[i][j] = v;
      return d;
    };
    long rk_out = 0, rk_in = 0;
    if (c.d().block(deg).rows() > 0) rk_out = dense_rank(to_dense(c.d().block(deg)));
    if (c.d().block(deg - 1).rows() > 0) rk_in = dense_rank(to_dense(c.d().block(deg - 1)));
    int h = n - static_cast<int>(rk_out) - static_cast<int>(rk_in);
    if (h != 0) out[deg] = h;
  }
  return out;
}

std::map<std::pair<int, int>, long> free_lie_dims_bruteforce(
    const std::vector<std::pair<std::string, int>>& gens, int max_weight) {
  std::vector<int> gdeg;
  for (const auto& [l, d] : gens) gdeg.push_back(d);
  // all bracket words of weight w as (degree, expansion)
  using Elt = std::pair<int, TensorElt>;
  std::vector<std::vector<Elt>> words(max_weight + 1);
  for (int g = 0; g < static_cast<int>(gens.size()); ++g)
    words[1].push_back({gdeg[g], TensorElt{{TWord{g}, Rational(1)}}});
  for (int w = 2; w <= max_weight; ++w)
    for (int a = 1; a < w; ++a)
      for (const auto& [da, ea] : words[a])
        for (const auto& [db, eb] : words[w - a]) {
          TensorElt ex = tensor_bracket(ea, eb, da, db);
          if (!ex.empty()) words[w].push_back({da + db, std::move(ex)});
        }
  std::map<std::pair<int, int>, long> out;
  for (int w = 1; w <= max_weight; ++w) {
    // one solver per degree
    std::map<int, LinSolver> solver;
    std::map<TWord, int> ids;
    for (const auto& [deg, ex] : words[w]) {
      SparseRow r;
      for (const auto& [word, c] : ex) {
        auto it = ids.find(word);
        int id = it == ids.end() ? ids.emplace(word, static_cast<int>(ids.size())).first->second
                                 : it->second;
        r.emplace(id, c);
      }
      if (solver[deg].insert(r)) out[{deg, w}] += 1;
    }
  }
  return out;
}

QuotientCE quotient_ce(const DgLieAlgebra& L, int max_weight) {
  ConeLie cone = cone_lie(L);
  // order: shadow letters first, then bare, so PBW monomials factor as
  // (shadow part)(bare part) and the quotient by the right ideal (bare) is a
  // monomial projection.
  std::vector<Key> order;
  std::vector<Key> originals;
  for (const auto& [d, labels] : L.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) originals.push_back({d, i});
  for (const auto& k : originals) order.push_back(cone.eta.at(k));
  for (const auto& k : originals) order.push_back(cone.bare.at(k));
  EnvelopingAlgebra U(cone.lie, max_weight, order);

  std::map<Key, Key> eta_letter_to_orig;
  for (const auto& k : originals) eta_letter_to_orig[cone.eta.at(k)] = k;

  QuotientCE out;
  auto is_eta = [&](const Key& cone_key) { return eta_letter_to_orig.count(cone_key) > 0; };
  for (const auto& [d, labels] : U.complex().space().components()) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Key k{d, i};
      const auto& m = U.mono(k);
      std::vector<Key> word;
      bool shadow_only = true;
      for (int letter : m) {
        Key ck = U.order()[letter];
        if (!is_eta(ck)) {
          shadow_only = false;
          break;
        }
        word.push_back(eta_letter_to_orig.at(ck));
      }
      if (!shadow_only) continue;
      std::map<std::vector<Key>, Rational> col;
      for (const auto& [tk, v] : U.complex().d().apply_key(k)) {
        const auto& tm = U.mono(tk);
        std::vector<Key> tword;
        bool t_shadow = true;
        for (int letter : tm) {
          Key ck = U.order()[letter];
          if (!is_eta(ck)) {
            t_shadow = false;
            break;
          }
          tword.push_back(eta_letter_to_orig.at(ck));
        }
        if (t_shadow) col[tword] = v;
      }
      out.d_columns[word] = std::move(col);
    }
  }
  return out;
}

}  // namespace oracles
