#include "dgla/free_lie.hpp"

#include <stdexcept>

namespace dgla {

TensorElt tensor_concat(const TensorElt& a, const TensorElt& b) {
  TensorElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      TWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto it = out.find(w);
      if (it == out.end())
        out.emplace(std::move(w), ca * cb);
      else {
        it->second += ca * cb;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

TensorElt tensor_bracket(const TensorElt& a, const TensorElt& b, int deg_a, int deg_b) {
  TensorElt out = tensor_concat(a, b);
  Rational sign = (deg_a * deg_b) % 2 == 0 ? -1 : 1;
  for (const auto& [w, c] : tensor_concat(b, a)) {
    auto it = out.find(w);
    if (it == out.end())
      out.emplace(w, sign * c);
    else {
      it->second += sign * c;
      if (is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

int tword_degree(const TWord& w, const std::vector<int>& gen_degrees) {
  int d = 0;
  for (int g : w) d += gen_degrees[g];
  return d;
}

FreeLiePresentation::FreeLiePresentation(
    std::vector<std::pair<std::string, int>> generators, int max_weight)
    : gens_(std::move(generators)), max_weight_(max_weight) {
  if (max_weight < 1) throw std::invalid_argument("free_lie: maxWeight must be >= 1");
  for (const auto& [label, deg] : gens_)
    if (deg < 1)
      throw std::invalid_argument("free_lie: generator '" + label +
                                  "' has degree < 1");
  std::vector<int> gdeg;
  for (const auto& [label, deg] : gens_) gdeg.push_back(deg);

  struct BasisWord {
    std::string label;
    int degree;
    TensorElt expansion;
  };
  // per weight: chosen basis words, plus a solver over tensor words
  std::vector<std::vector<BasisWord>> basis(max_weight_ + 1);
  std::vector<LinSolver> solver(max_weight_ + 1);
  std::map<TWord, int> word_id;
  auto flat = [&](const TensorElt& e) {
    SparseRow r;
    for (const auto& [w, c] : e) {
      auto it = word_id.find(w);
      int id;
      if (it == word_id.end()) {
        id = static_cast<int>(word_id.size());
        word_id.emplace(w, id);
      } else {
        id = it->second;
      }
      r.emplace(id, c);
    }
    return r;
  };

  for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
    BasisWord bw{gens_[g].first, gdeg[g], TensorElt{{TWord{g}, Rational(1)}}};
    solver[1].insert(flat(bw.expansion));
    basis[1].push_back(std::move(bw));
  }
  for (int w = 2; w <= max_weight_; ++w) {
    for (int a = 1; a < w; ++a) {
      int b = w - a;
      for (const auto& u : basis[a])
        for (const auto& v : basis[b]) {
          TensorElt ex = tensor_bracket(u.expansion, v.expansion, u.degree, v.degree);
          if (ex.empty()) continue;
          if (solver[w].insert(flat(ex))) {
            basis[w].push_back(
                {"[" + u.label + "," + v.label + "]", u.degree + v.degree, std::move(ex)});
          }
        }
    }
  }

  // assemble the graded space: weight-major, insertion order inside a weight
  GradedSpace s;
  std::vector<std::vector<Key>> keys(max_weight_ + 1);
  for (int w = 1; w <= max_weight_; ++w)
    for (const auto& bw : basis[w]) {
      Key k = s.add(bw.degree, bw.label);
      keys[w].push_back(k);
      weight_[k] = w;
      expansion_[k] = bw.expansion;
    }
  for (std::size_t g = 0; g < gens_.size(); ++g) gen_key_.push_back(keys[1][g]);

  BracketTable table;
  for (int a = 1; a <= max_weight_; ++a)
    for (int b = 1; a + b <= max_weight_; ++b) {
      int w = a + b;
      for (std::size_t i = 0; i < basis[a].size(); ++i)
        for (std::size_t j = 0; j < basis[b].size(); ++j) {
          TensorElt ex = tensor_bracket(basis[a][i].expansion, basis[b][j].expansion,
                                        basis[a][i].degree, basis[b][j].degree);
          if (ex.empty()) continue;
          auto combo = solver[w].express(flat(ex));
          if (!combo)
            throw std::logic_error("free_lie: bracket expansion escaped the basis span");
          Vec val;
          for (const auto& [id, c] : *combo) val.emplace(keys[w][id], c);
          if (!val.empty()) table[{keys[a][i], keys[b][j]}] = std::move(val);
        }
    }
  lie_ = DgLieAlgebra(Complex::with_zero_differential(std::move(s)), std::move(table));
}

std::map<std::pair<int, int>, int> FreeLiePresentation::dims() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [k, w] : weight_) out[{k.first, w}] += 1;
  return out;
}

}  // namespace dgla
