#include "dgla/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace dgla {

void vec_axpy(Vec& dst, const Rational& c, const Vec& src) {
  if (dgla::is_zero(c)) return;
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      Rational w = c * v;
      if (!dgla::is_zero(w)) dst.emplace(k, w);
    } else {
      it->second += c * v;
      if (dgla::is_zero(it->second)) dst.erase(it);
    }
  }
}

bool vec_is_zero(const Vec& v) { return v.empty(); }

Vec vec_scaled(const Vec& v, const Rational& c) {
  Vec out;
  if (dgla::is_zero(c)) return out;
  for (const auto& [k, val] : v) out.emplace(k, val * c);
  return out;
}

Key GradedSpace::add(int degree, const std::string& label) {
  auto& v = comps_[degree];
  for (const auto& l : v)
    if (l == label)
      throw std::invalid_argument("duplicate basis label '" + label + "' in degree " +
                                  std::to_string(degree));
  v.push_back(label);
  return {degree, static_cast<int>(v.size()) - 1};
}

int GradedSpace::dim(int degree) const {
  auto it = comps_.find(degree);
  return it == comps_.end() ? 0 : static_cast<int>(it->second.size());
}

long GradedSpace::total_dim() const {
  long n = 0;
  for (const auto& [d, v] : comps_) n += static_cast<long>(v.size());
  return n;
}

const std::vector<std::string>& GradedSpace::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = comps_.find(degree);
  return it == comps_.end() ? empty : it->second;
}

const std::string& GradedSpace::label(const Key& k) const {
  return comps_.at(k.first).at(k.second);
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, v] : comps_)
    if (!v.empty()) out.push_back(d);
  return out;
}

std::string GradedSpace::format_vec(const Vec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << label(k);
  }
  return os.str();
}

void GradedMap::set(int d, int ti, int si, const Rational& v) {
  ensure_block(d).set(ti, si, v);
}

void GradedMap::add_to(int d, int ti, int si, const Rational& v) {
  ensure_block(d).add_to(ti, si, v);
}

Rational GradedMap::get(int d, int ti, int si) const {
  auto it = blocks_.find(d);
  return it == blocks_.end() ? Rational(0) : it->second.get(ti, si);
}

void GradedMap::set_entry(const Key& tk, const Key& sk, const Rational& v) {
  if (tk.first != sk.first + shift_)
    throw std::invalid_argument("graded map entry violates the degree shift");
  set(sk.first, tk.second, sk.second, v);
}

void GradedMap::add_entry(const Key& tk, const Key& sk, const Rational& v) {
  if (tk.first != sk.first + shift_)
    throw std::invalid_argument("graded map entry violates the degree shift");
  add_to(sk.first, tk.second, sk.second, v);
}

void GradedMap::set_column(const Key& sk, const Vec& image) {
  for (const auto& [tk, c] : image) add_entry(tk, sk, c);
}

SparseMatrix& GradedMap::ensure_block(int d) {
  auto it = blocks_.find(d);
  if (it != blocks_.end()) return it->second;
  int sc = source_.dim(d);
  int tr = target_.dim(d + shift_);
  if (sc == 0 || tr == 0)
    throw std::invalid_argument("graded map block at degree " + std::to_string(d) +
                                " has an empty side");
  return blocks_.emplace(d, SparseMatrix(tr, sc)).first->second;
}

const SparseMatrix& GradedMap::block(int d) const {
  static const SparseMatrix empty;
  auto it = blocks_.find(d);
  return it == blocks_.end() ? empty : it->second;
}

Vec GradedMap::apply(const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : x) {
    auto it = blocks_.find(k.first);
    if (it == blocks_.end()) continue;
    const SparseMatrix& m = it->second;
    for (int r = 0; r < m.rows(); ++r) {
      Rational e = m.get(r, k.second);
      if (!dgla::is_zero(e)) {
        Key tk{k.first + shift_, r};
        auto jt = out.find(tk);
        if (jt == out.end())
          out.emplace(tk, e * c);
        else {
          jt->second += e * c;
          if (dgla::is_zero(jt->second)) out.erase(jt);
        }
      }
    }
  }
  return out;
}

Vec GradedMap::apply_key(const Key& k) const {
  Vec x{{k, Rational(1)}};
  return apply(x);
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target_ == source_))
    throw std::invalid_argument("graded map composition mismatch");
  GradedMap out(inner.source_, target_, shift_ + inner.shift_);
  for (const auto& [d, b] : inner.blocks_) {
    auto it = blocks_.find(d + inner.shift_);
    if (it == blocks_.end()) continue;
    SparseMatrix prod = it->second * b;
    if (!prod.is_zero()) out.blocks_.emplace(d, std::move(prod));
  }
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_) || shift_ != rhs.shift_)
    throw std::invalid_argument("graded map sum mismatch");
  GradedMap out = *this;
  for (const auto& [d, b] : rhs.blocks_) {
    auto it = out.blocks_.find(d);
    if (it == out.blocks_.end())
      out.blocks_.emplace(d, b);
    else
      it->second = it->second + b;
  }
  return out;
}

GradedMap GradedMap::scaled(const Rational& c) const {
  GradedMap out(source_, target_, shift_);
  if (dgla::is_zero(c)) return out;
  for (const auto& [d, b] : blocks_) out.blocks_.emplace(d, b.scaled(c));
  return out;
}

bool GradedMap::is_zero() const {
  for (const auto& [d, b] : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

bool GradedMap::operator==(const GradedMap& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_) || shift_ != rhs.shift_)
    return false;
  GradedMap diff = *this + rhs.scaled(-1);
  return diff.is_zero();
}

Complex::Complex(GradedSpace space, GradedMap differential)
    : space_(std::move(space)), d_(std::move(differential)) {
  if (!(d_.source() == space_) || !(d_.target() == space_))
    throw std::invalid_argument("differential endpoints disagree with the space");
  if (d_.shift() != 1) throw std::invalid_argument("differential must have degree +1");
  if (!d_.compose(d_).is_zero())
    throw std::invalid_argument("d∘d != 0: not a complex");
}

Complex Complex::zero() {
  GradedSpace s;
  return Complex(s, GradedMap(s, s, 1));
}

Complex Complex::point(int degree, const std::string& label) {
  GradedSpace s;
  s.add(degree, label);
  return Complex(s, GradedMap(s, s, 1));
}

Complex Complex::with_zero_differential(GradedSpace space) {
  GradedMap d(space, space, 1);
  return Complex(std::move(space), std::move(d));
}

bool is_chain_map(const GradedMap& f, const Complex& C, const Complex& D) {
  if (f.shift() != 0) return false;
  GradedMap lhs = D.d().compose(f);
  GradedMap rhs = f.compose(C.d());
  GradedMap diff = lhs + rhs.scaled(-1);
  return diff.is_zero();
}

}  // namespace dgla
