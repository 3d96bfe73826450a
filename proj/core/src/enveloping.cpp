#include "dgla/enveloping.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace dgla {

namespace {
std::string mono_label(const GradedSpace& lie_space, const std::vector<Key>& order,
                       const std::vector<int>& mono) {
  if (mono.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (i) out += "*";
    out += lie_space.label(order[mono[i]]);
  }
  return out;
}
}  // namespace

EnvelopingAlgebra::EnvelopingAlgebra(DgLieAlgebra L, int max_weight,
                                     std::vector<Key> order)
    : lie_(std::move(L)), max_weight_(max_weight), order_(std::move(order)) {
  if (max_weight < 0) throw std::invalid_argument("enveloping: maxWeight must be >= 0");
  if (order_.empty()) {
    for (const auto& [d, labels] : lie_.space().components())
      for (int i = 0; i < static_cast<int>(labels.size()); ++i) order_.push_back({d, i});
  }
  if (order_.size() != static_cast<std::size_t>(lie_.space().total_dim()))
    throw std::invalid_argument("enveloping: order must list every Lie basis element");
  for (std::size_t i = 0; i < order_.size(); ++i) key_to_letter_[order_[i]] = static_cast<int>(i);

  // PBW monomials: non-decreasing letters, odd letters squarefree
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    monos.push_back(cur);
    if (static_cast<int>(cur.size()) == max_weight_) return;
    for (int t = from; t < static_cast<int>(order_.size()); ++t) {
      if (!cur.empty() && cur.back() == t && (order_[t].first & 1)) continue;
      cur.push_back(t);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(monos.begin(), monos.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  GradedSpace s;
  for (const auto& m : monos) {
    int deg = 0;
    for (int t : m) deg += order_[t].first;
    Key k = s.add(deg, mono_label(lie_.space(), order_, m));
    mono_to_key_.emplace(m, k);
    key_to_mono_.emplace(k, m);
    if (m.empty()) unit_ = k;
  }

  // differential as a derivation, straightened into the basis
  GradedMap dd(s, s, 1);
  for (const auto& [m, k] : mono_to_key_) {
    Rational prefix = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      int deg_i = order_[m[i]].first;
      Vec dx = lie_.complex().d().apply_key(order_[m[i]]);
      for (const auto& [t, c] : dx) {
        std::vector<int> w = m;
        w[i] = key_to_letter_.at(t);
        for (const auto& [mk, mv] : straighten(w, prefix * c)) dd.add_entry(mk, k, mv);
      }
      if (deg_i & 1) prefix = -prefix;
    }
  }
  cx_ = Complex(std::move(s), std::move(dd));
}

std::optional<Key> EnvelopingAlgebra::key_of(const std::vector<int>& mono) const {
  auto it = mono_to_key_.find(mono);
  if (it == mono_to_key_.end()) return std::nullopt;
  return it->second;
}

Vec EnvelopingAlgebra::straighten(const std::vector<int>& word, const Rational& coeff,
                                  bool drop_overflow) const {
  Vec out;
  std::deque<std::pair<std::vector<int>, Rational>> work;
  work.push_back({word, coeff});
  long steps = 0;
  const long cap = 2000000;
  while (!work.empty()) {
    if (++steps > cap)
      throw std::runtime_error(
          "straighten: rewriting did not terminate within the weight bound "
          "(non-Lie structure constants?)");
    auto [w, c] = std::move(work.front());
    work.pop_front();
    bool reduced = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      int a = w[i], b = w[i + 1];
      int da = order_[a].first, db = order_[b].first;
      if (a > b) {
        // x_a x_b = (-1)^{|a||b|} x_b x_a + [x_a, x_b]
        std::vector<int> swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        Rational sign = (da * db) % 2 == 0 ? 1 : -1;
        work.push_back({std::move(swapped), c * sign});
        Vec br = lie_.bracket(order_[a], order_[b]);
        for (const auto& [t, bc] : br) {
          std::vector<int> repl;
          repl.reserve(w.size() - 1);
          repl.insert(repl.end(), w.begin(), w.begin() + i);
          repl.push_back(key_to_letter_.at(t));
          repl.insert(repl.end(), w.begin() + i + 2, w.end());
          work.push_back({std::move(repl), c * bc});
        }
        reduced = true;
        break;
      }
      if (a == b && (da & 1)) {
        // odd square: x x = 1/2 [x,x]
        Vec br = lie_.bracket(order_[a], order_[b]);
        for (const auto& [t, bc] : br) {
          std::vector<int> repl;
          repl.reserve(w.size() - 1);
          repl.insert(repl.end(), w.begin(), w.begin() + i);
          repl.push_back(key_to_letter_.at(t));
          repl.insert(repl.end(), w.begin() + i + 2, w.end());
          work.push_back({std::move(repl), c * bc / 2});
        }
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      if (static_cast<int>(w.size()) > max_weight_) {
        if (drop_overflow) continue;
        throw std::invalid_argument("straighten: word exceeds the weight bound");
      }
      vec_axpy(out, c, Vec{{mono_to_key_.at(w), Rational(1)}});
    }
  }
  return out;
}

Vec EnvelopingAlgebra::product(const Key& a, const Key& b) const {
  const auto& ma = mono(a);
  const auto& mb = mono(b);
  if (static_cast<int>(ma.size() + mb.size()) > max_weight_)
    throw std::invalid_argument("enveloping product exceeds the weight bound");
  std::vector<int> w = ma;
  w.insert(w.end(), mb.begin(), mb.end());
  return straighten(w, 1);
}

Vec EnvelopingAlgebra::product_vec(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) vec_axpy(out, ca * cb, product(ka, kb));
  return out;
}

Vec EnvelopingAlgebra::lie_left_mul(const Key& lie_key, const Key& mono_key,
                                    bool drop_overflow) const {
  std::vector<int> w;
  w.push_back(key_to_letter_.at(lie_key));
  const auto& m = mono(mono_key);
  w.insert(w.end(), m.begin(), m.end());
  return straighten(w, 1, drop_overflow);
}

Vec EnvelopingAlgebra::include_lie(const Key& lie_key) const {
  return Vec{{mono_to_key_.at({key_to_letter_.at(lie_key)}), Rational(1)}};
}

std::vector<std::tuple<Rational, Key, Key>> EnvelopingAlgebra::coproduct(
    const Key& k) const {
  const auto& m = mono(k);
  std::size_t n = m.size();
  std::vector<std::tuple<Rational, Key, Key>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> left, right;
    Rational sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        left.push_back(m[i]);
      } else {
        if (order_[m[i]].first & 1) {
          for (std::size_t j = i + 1; j < n; ++j)
            if ((mask & (std::size_t(1) << j)) && (order_[m[j]].first & 1)) sign = -sign;
        }
        right.push_back(m[i]);
      }
    }
    // both halves of a sorted monomial are sorted: already PBW basis words
    out.emplace_back(sign, mono_to_key_.at(left), mono_to_key_.at(right));
  }
  return out;
}

PbwResult pbw_map(const DgLieAlgebra& L, const EnvelopingAlgebra& U) {
  PbwResult out;
  out.sym = SymComplex(L.complex(), U.max_weight());
  const GradedSpace& ssp = out.sym.complex().space();
  GradedMap f(ssp, U.complex().space(), 0);
  for (const auto& [d, labels] : ssp.components()) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Key sk{d, i};
      const Word& w = out.sym.word(sk);
      int n = static_cast<int>(w.size());
      if (n == 0) {
        f.add_entry(U.unit(), sk, 1);
        continue;
      }
      std::vector<int> degrees(n), letters(n);
      for (int p = 0; p < n; ++p) degrees[p] = w[p].first;
      Rational fact = 1;
      for (int p = 2; p <= n; ++p) fact *= p;
      for (int p = 0; p < n; ++p) {
        auto it = std::find(U.order().begin(), U.order().end(), w[p]);
        letters[p] = static_cast<int>(it - U.order().begin());
      }
      std::vector<int> perm(n);
      for (int p = 0; p < n; ++p) perm[p] = p;
      do {
        std::vector<int> pw(n);
        for (int p = 0; p < n; ++p) pw[perm[p]] = letters[p];
        Rational sign = permutation_koszul_sign(degrees, perm);
        for (const auto& [mk, mv] : U.straighten(pw, sign / fact)) f.add_entry(mk, sk, mv);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  // graded-block bijectivity per (degree, weight)
  out.bijective = true;
  for (const auto& [d, labels] : ssp.components()) {
    if (labels.empty()) continue;
    // group source columns by weight, target rows by weight
    std::map<int, std::vector<int>> src_by_w, tgt_by_w;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      src_by_w[out.sym.weight({d, i})].push_back(i);
    for (int i = 0; i < U.complex().dim(d); ++i)
      tgt_by_w[U.weight({d, i})].push_back(i);
    const SparseMatrix& blk = f.block(d);
    for (const auto& [w, cols] : src_by_w) {
      auto it = tgt_by_w.find(w);
      long nrows = it == tgt_by_w.end() ? 0 : static_cast<long>(it->second.size());
      long ncols = static_cast<long>(cols.size());
      // graded block: rows of weight w only
      SparseMatrix g(static_cast<int>(nrows), static_cast<int>(ncols));
      if (it != tgt_by_w.end() && blk.rows() > 0) {
        for (int r = 0; r < static_cast<int>(it->second.size()); ++r)
          for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            Rational v = blk.get(it->second[r], cols[c]);
            if (!is_zero(v)) g.set(r, c, v);
          }
      }
      long rank = g.rank();
      out.blocks[{d, w}] = {rank, ncols};
      if (rank != ncols || nrows != ncols) out.bijective = false;
    }
    // monomial counts must match weight-by-weight in the other direction too
    for (const auto& [w, rows] : tgt_by_w)
      if (!src_by_w.count(w)) out.bijective = false;
  }
  out.map = std::move(f);
  return out;
}

}  // namespace dgla
