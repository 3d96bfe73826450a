#include "dgla/sym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dgla {

std::optional<std::pair<Rational, Word>> normalize_word(const GradedSpace& space,
                                                        Word w) {
  // insertion sort with Koszul sign bookkeeping
  Rational sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && w[j] < w[j - 1]) {
      if ((w[j].first & 1) && (w[j - 1].first & 1)) sign = -sign;
      std::swap(w[j], w[j - 1]);
      --j;
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && (w[i].first & 1)) return std::nullopt;
  return std::make_pair(sign, std::move(w));
}

Rational permutation_koszul_sign(const std::vector<int>& degrees,
                                 const std::vector<int>& sigma) {
  Rational sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j] && (degrees[i] & 1) && (degrees[j] & 1)) sign = -sign;
  return sign;
}

int word_degree(const GradedSpace& /*space*/, const Word& w) {
  int d = 0;
  for (const auto& k : w) d += k.first;
  return d;
}

std::string word_label(const GradedSpace& space, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += space.label(w[i]);
  }
  return out;
}

namespace {

// Enumerates sorted words (non-decreasing keys, odd keys squarefree) of length
// <= max_weight, in (length, lexicographic) order.
std::vector<Word> sorted_words(const GradedSpace& space, int max_weight) {
  std::vector<Key> keys;
  for (const auto& [d, labels] : space.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  std::vector<Word> out;
  Word cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_weight) return;
    for (std::size_t t = from; t < keys.size(); ++t) {
      if (!cur.empty() && cur.back() == keys[t] && (keys[t].first & 1)) continue;
      cur.push_back(keys[t]);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

SymComplex::SymComplex(const Complex& base, int max_weight)
    : base_(base), max_weight_(max_weight) {
  if (max_weight < 0) throw std::invalid_argument("sym: maxWeight must be >= 0");
  GradedSpace s;
  for (const auto& w : sorted_words(base.space(), max_weight)) {
    Key k = s.add(word_degree(base.space(), w), word_label(base.space(), w));
    word_to_key_.emplace(w, k);
    key_to_word_.emplace(k, w);
    if (w.empty()) unit_ = k;
  }
  GradedMap dd(s, s, 1);
  for (const auto& [w, k] : word_to_key_) {
    Rational prefix = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vec dx = base.d().apply_key(w[i]);
      for (const auto& [t, c] : dx) {
        Word w2 = w;
        w2[i] = t;
        auto norm = normalize_word(base.space(), std::move(w2));
        if (!norm) continue;
        dd.add_entry(word_to_key_.at(norm->second), k, prefix * c * norm->first);
      }
      if (w[i].first & 1) prefix = -prefix;
    }
  }
  cx_ = Complex(std::move(s), std::move(dd));
}

const Word& SymComplex::word(const Key& k) const { return key_to_word_.at(k); }

std::optional<Key> SymComplex::key_of(const Word& w) const {
  auto it = word_to_key_.find(w);
  if (it == word_to_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Rational, Key>> SymComplex::multiply(const Word& w,
                                                             const Key& k) const {
  Word cat = w;
  const Word& rhs = word(k);
  cat.insert(cat.end(), rhs.begin(), rhs.end());
  if (static_cast<int>(cat.size()) > max_weight_) return std::nullopt;
  auto norm = normalize_word(base_.space(), std::move(cat));
  if (!norm) return std::nullopt;
  return std::make_pair(norm->first, word_to_key_.at(norm->second));
}

Vec SymComplex::multiply_vec(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a) {
    const Word& wa = word(ka);
    for (const auto& [kb, cb] : b) {
      auto r = multiply(wa, kb);
      if (!r) continue;
      vec_axpy(out, ca * cb * r->first, Vec{{r->second, Rational(1)}});
    }
  }
  return out;
}

std::vector<std::tuple<Rational, Key, Key>> SymComplex::coproduct(const Key& k) const {
  const Word& w = word(k);
  std::size_t n = w.size();
  std::vector<std::tuple<Rational, Key, Key>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Word left, right;
    // unshuffle sign: each letter sent right passes the later letters sent left
    Rational sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        left.push_back(w[i]);
      } else {
        if (w[i].first & 1) {
          for (std::size_t j = i + 1; j < n; ++j)
            if ((mask & (std::size_t(1) << j)) && (w[j].first & 1)) sign = -sign;
        }
        right.push_back(w[i]);
      }
    }
    out.emplace_back(sign, word_to_key_.at(left), word_to_key_.at(right));
  }
  return out;
}

TensorPower tensor_power(const Complex& base, int weight) {
  TensorPower out;
  std::vector<Key> keys;
  for (const auto& [d, labels] : base.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) keys.push_back({d, i});
  std::vector<Word> words;
  Word cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == weight) {
      words.push_back(cur);
      return;
    }
    for (const auto& k : keys) {
      cur.push_back(k);
      rec();
      cur.pop_back();
    }
  };
  rec();
  GradedSpace s;
  for (const auto& w : words) {
    Key k = s.add(word_degree(base.space(), w), word_label(base.space(), w) + "@t");
    out.word_to_key.emplace(w, k);
    out.key_to_word.emplace(k, w);
  }
  GradedMap dd(s, s, 1);
  for (const auto& [w, k] : out.word_to_key) {
    Rational prefix = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vec dx = base.d().apply_key(w[i]);
      for (const auto& [t, c] : dx) {
        Word w2 = w;
        w2[i] = t;
        dd.add_entry(out.word_to_key.at(w2), k, prefix * c);
      }
      if (w[i].first & 1) prefix = -prefix;
    }
  }
  out.cx = Complex(std::move(s), std::move(dd));
  return out;
}

Symmetrization symmetrization(const SymComplex& sym, const TensorPower& tp,
                              int weight) {
  Symmetrization out;
  const GradedSpace& tsp = tp.cx.space();
  const GradedSpace& ssp = sym.complex().space();
  out.quotient = GradedMap(tsp, ssp, 0);
  for (const auto& [w, k] : tp.word_to_key) {
    auto norm = normalize_word(sym.base().space(), w);
    if (!norm) continue;
    out.quotient.add_entry(sym.key_of(norm->second).value(), k, norm->first);
  }
  out.section = GradedMap(ssp, tsp, 0);
  Rational fact = 1;
  for (int i = 2; i <= weight; ++i) fact *= i;
  for (const auto& [d, labels] : ssp.components()) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Key sk{d, i};
      const Word& sw = sym.word(sk);
      if (static_cast<int>(sw.size()) != weight) continue;
      std::vector<int> degrees(weight);
      for (int p = 0; p < weight; ++p) degrees[p] = sw[p].first;
      std::vector<int> perm(weight);
      for (int p = 0; p < weight; ++p) perm[p] = p;
      do {
        Word pw(weight);
        for (int p = 0; p < weight; ++p) pw[perm[p]] = sw[p];
        Rational sign = permutation_koszul_sign(degrees, perm);
        out.section.add_entry(tp.word_to_key.at(pw), sk, sign / fact);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  out.projector = out.section.compose(out.quotient);
  return out;
}

GradedSpace sym_weight_component(const SymComplex& sym, int weight) {
  GradedSpace out;
  for (const auto& [d, labels] : sym.complex().space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Key k{d, i};
      if (sym.weight(k) == weight) out.add(d, labels[i]);
    }
  return out;
}

}  // namespace dgla
