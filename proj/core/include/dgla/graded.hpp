#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgla/matrix.hpp"
#include "dgla/rational.hpp"

namespace dgla {

// Basis element of a graded space: (degree, index within that degree).
using Key = std::pair<int, int>;

// Homogeneous-or-not vector, sparse over basis keys.
using Vec = std::map<Key, Rational>;

void vec_axpy(Vec& dst, const Rational& c, const Vec& src);
bool vec_is_zero(const Vec& v);
Vec vec_scaled(const Vec& v, const Rational& c);

// Finitely supported Z-graded Q-vector space with named basis elements.
// Labels are stable strings so reports stay human-diffable.
class GradedSpace {
 public:
  GradedSpace() = default;

  // Appends a basis element, returns its key.
  Key add(int degree, const std::string& label);

  int dim(int degree) const;
  long total_dim() const;
  const std::vector<std::string>& labels(int degree) const;
  const std::string& label(const Key& k) const;
  std::vector<int> degrees() const;  // degrees with dim > 0, ascending
  bool empty() const { return comps_.empty(); }

  const std::map<int, std::vector<std::string>>& components() const { return comps_; }

  bool operator==(const GradedSpace& rhs) const { return comps_ == rhs.comps_; }

  std::string format_vec(const Vec& v) const;

 private:
  std::map<int, std::vector<std::string>> comps_;
};

// Degree-homogeneous linear map between graded spaces, one sparse block per
// source degree. A missing block is zero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedSpace source, GradedSpace target, int shift)
      : source_(std::move(source)), target_(std::move(target)), shift_(shift) {}

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  int shift() const { return shift_; }

  // Entry: coefficient of target basis (d+shift, ti) in the image of (d, si).
  void set(int d, int ti, int si, const Rational& v);
  void add_to(int d, int ti, int si, const Rational& v);
  Rational get(int d, int ti, int si) const;

  void set_entry(const Key& target_key, const Key& source_key, const Rational& v);
  void add_entry(const Key& target_key, const Key& source_key, const Rational& v);

  // Sets the image of one source basis vector (column) wholesale.
  void set_column(const Key& source_key, const Vec& image);

  bool has_block(int d) const { return blocks_.count(d) > 0; }
  const SparseMatrix& block(int d) const;  // creates nothing; zero block if absent
  const std::map<int, SparseMatrix>& blocks() const { return blocks_; }

  Vec apply(const Vec& x) const;
  Vec apply_key(const Key& k) const;

  GradedMap compose(const GradedMap& inner) const;  // this ∘ inner
  GradedMap operator+(const GradedMap& rhs) const;
  GradedMap scaled(const Rational& c) const;
  bool is_zero() const;
  bool operator==(const GradedMap& rhs) const;

 private:
  SparseMatrix& ensure_block(int d);
  GradedSpace source_, target_;
  int shift_ = 0;
  std::map<int, SparseMatrix> blocks_;
};

// A graded space with a square-zero differential of degree +1 (cohomological
// convention). d∘d = 0 is checked at construction time, exactly.
class Complex {
 public:
  Complex() = default;
  Complex(GradedSpace space, GradedMap differential);

  static Complex zero();
  // Base field in a single degree.
  static Complex point(int degree, const std::string& label = "1");
  static Complex with_zero_differential(GradedSpace space);

  const GradedSpace& space() const { return space_; }
  const GradedMap& d() const { return d_; }

  int dim(int degree) const { return space_.dim(degree); }

  bool operator==(const Complex& rhs) const {
    return space_ == rhs.space_ && d_ == rhs.d_;
  }

 private:
  GradedSpace space_;
  GradedMap d_;
};

// True when f: C -> D (degree-0 graded map) commutes with the differentials.
bool is_chain_map(const GradedMap& f, const Complex& C, const Complex& D);

}  // namespace dgla
