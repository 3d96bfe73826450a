#include "dgla/complex_ops.hpp"

#include <stdexcept>

#include "dgla/parallel.hpp"

namespace dgla {

Complex shift(const Complex& c, int n) {
  GradedSpace s;
  for (const auto& [d, labels] : c.space().components())
    for (const auto& l : labels) s.add(d - n, l);
  GradedMap dd(s, s, 1);
  Rational sign = (n % 2 == 0) ? 1 : -1;
  for (const auto& [d, b] : c.d().blocks()) {
    for (int r = 0; r < b.rows(); ++r)
      for (const auto& [col, v] : b.row(r)) dd.add_to(d - n, r, col, sign * v);
  }
  return Complex(std::move(s), std::move(dd));
}

Complex dual(const Complex& c) {
  GradedSpace s;
  for (const auto& [d, labels] : c.space().components())
    for (const auto& l : labels) s.add(-d, l + "'");
  GradedMap dd(s, s, 1);
  // block at degree j: rows dual to C^{-j-1}, cols dual to C^{-j};
  // entry[a][b] = -(-1)^j * (d_C at -j-1)[b][a]
  for (const auto& [dsrc, b] : c.d().blocks()) {
    int j = -dsrc - 1;
    Rational sign = (j % 2 == 0) ? -1 : 1;
    for (int r = 0; r < b.rows(); ++r)
      for (const auto& [col, v] : b.row(r)) dd.add_to(j, col, r, sign * v);
  }
  return Complex(std::move(s), std::move(dd));
}

GradedMap double_dual_iso(const Complex& c, const Complex& ddual) {
  GradedMap f(c.space(), ddual.space(), 0);
  for (const auto& [d, labels] : c.space().components()) {
    Rational sign = (d % 2 == 0) ? 1 : -1;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) f.add_to(d, i, i, sign);
  }
  return f;
}

TensorComplex tensor(const Complex& c, const Complex& d) {
  TensorComplex out;
  GradedSpace s;
  for (const auto& [p, la] : c.space().components())
    for (int i = 0; i < static_cast<int>(la.size()); ++i)
      for (const auto& [q, lb] : d.space().components())
        for (int j = 0; j < static_cast<int>(lb.size()); ++j) {
          Key k = s.add(p + q, la[i] + "⊗" + lb[j]);
          out.pair_to_key[{{p, i}, {q, j}}] = k;
          out.key_to_pair[k] = {{p, i}, {q, j}};
        }
  GradedMap dd(s, s, 1);
  for (const auto& [k, pq] : out.key_to_pair) {
    const auto& [a, b] = pq;
    Vec da = c.d().apply_key(a);
    for (const auto& [ta, v] : da) dd.add_entry(out.pair_to_key.at({ta, b}), k, v);
    Vec db = d.d().apply_key(b);
    Rational sign = (a.first % 2 == 0) ? 1 : -1;
    for (const auto& [tb, v] : db) dd.add_entry(out.pair_to_key.at({a, tb}), k, sign * v);
  }
  out.cx = Complex(std::move(s), std::move(dd));
  return out;
}

GradedMap braiding(const TensorComplex& cd, const TensorComplex& dc) {
  GradedMap tau(cd.cx.space(), dc.cx.space(), 0);
  for (const auto& [k, pq] : cd.key_to_pair) {
    const auto& [a, b] = pq;
    Rational sign = (a.first * b.first) % 2 == 0 ? 1 : -1;
    tau.add_entry(dc.pair_to_key.at({b, a}), k, sign);
  }
  return tau;
}

ConeComplex cone(const GradedMap& f, const Complex& c, const Complex& d) {
  if (!is_chain_map(f, c, d))
    throw std::invalid_argument("cone: the given map is not a chain map");
  ConeComplex out;
  GradedSpace s;
  std::map<Key, Key> from_c, from_d;  // original key -> cone key
  // C[1]-part first, then D-part, per degree
  std::map<int, std::vector<std::pair<char, Key>>> plan;
  for (const auto& [p, la] : c.space().components())
    for (int i = 0; i < static_cast<int>(la.size()); ++i)
      plan[p - 1].push_back({'c', {p, i}});
  for (const auto& [q, lb] : d.space().components())
    for (int j = 0; j < static_cast<int>(lb.size()); ++j)
      plan[q].push_back({'d', {q, j}});
  for (const auto& [deg, items] : plan)
    for (const auto& [kind, orig] : items) {
      if (kind == 'c')
        from_c[orig] = s.add(deg, c.space().label(orig) + "~");
      else
        from_d[orig] = s.add(deg, d.space().label(orig));
    }
  GradedMap dd(s, s, 1);
  for (const auto& [orig, k] : from_c) {
    Vec dc_ = c.d().apply_key(orig);
    for (const auto& [t, v] : dc_) dd.add_entry(from_c.at(t), k, -v);
    Vec fc = f.apply_key(orig);
    for (const auto& [t, v] : fc) dd.add_entry(from_d.at(t), k, v);
  }
  for (const auto& [orig, k] : from_d) {
    Vec ddv = d.d().apply_key(orig);
    for (const auto& [t, v] : ddv) dd.add_entry(from_d.at(t), k, v);
  }
  out.cx = Complex(s, std::move(dd));
  out.include_target = GradedMap(d.space(), s, 0);
  for (const auto& [orig, k] : from_d) out.include_target.add_entry(k, orig, 1);
  out.shifted_source = shift(c, 1);
  out.project_shift = GradedMap(s, out.shifted_source.space(), 0);
  for (const auto& [orig, k] : from_c)
    out.project_shift.add_entry({orig.first - 1, orig.second}, k, 1);
  return out;
}

Homology::Homology(const Complex& c) {
  std::vector<int> degs = c.space().degrees();
  struct Slot {
    DegreeData data;
    std::vector<std::pair<std::string, Vec>> classes;  // label, representative
  };
  std::vector<Slot> slots(degs.size());
  parallel_for(degs.size(), [&](std::size_t idx) {
    int deg = degs[idx];
    Slot& slot = slots[idx];
    int n = c.dim(deg);
    // boundaries from degree deg-1
    const SparseMatrix& bin = c.d().block(deg - 1);
    if (bin.rows() > 0) {
      SparseMatrix t = bin.transpose();
      for (int j = 0; j < t.rows(); ++j) {
        if (!t.row(j).empty()) slot.data.solver.insert(t.row(j));
      }
    }
    slot.data.boundary_rank = static_cast<int>(slot.data.solver.rank());
    // cycles in degree deg
    std::vector<SparseRow> cycles;
    const SparseMatrix& bout = c.d().block(deg);
    if (bout.rows() == 0) {
      for (int i = 0; i < n; ++i) cycles.push_back(SparseRow{{i, Rational(1)}});
    } else {
      cycles = bout.kernel_basis();
    }
    int k = 0;
    for (const auto& z : cycles) {
      if (slot.data.solver.insert(z)) {
        Vec rep;
        for (const auto& [i, v] : z) rep.emplace(Key{deg, i}, v);
        std::string label = "h(" + std::to_string(deg) + ")_" + std::to_string(k++);
        slot.classes.push_back({label, std::move(rep)});
      }
    }
  });
  for (std::size_t idx = 0; idx < degs.size(); ++idx) {
    int deg = degs[idx];
    Slot& slot = slots[idx];
    if (slot.classes.empty() && slot.data.boundary_rank == 0) continue;
    for (auto& [label, rep] : slot.classes) {
      Key ck = space_.add(deg, label);
      slot.data.class_keys.push_back(ck);
      reps_.emplace(ck, std::move(rep));
    }
    per_degree_.emplace(deg, std::move(slot.data));
  }
}

std::map<int, int> Homology::dims() const {
  std::map<int, int> out;
  for (const auto& [d, labels] : space_.components())
    if (!labels.empty()) out[d] = static_cast<int>(labels.size());
  return out;
}

const Vec& Homology::representative(const Key& class_key) const {
  return reps_.at(class_key);
}

Vec Homology::project(const Vec& cycle) const {
  if (cycle.empty()) return {};
  int deg = cycle.begin()->first.first;
  SparseRow row;
  for (const auto& [k, v] : cycle) {
    if (k.first != deg) throw std::invalid_argument("project: cycle not homogeneous");
    row.emplace(k.second, v);
  }
  auto it = per_degree_.find(deg);
  if (it == per_degree_.end()) {
    // no classes and no boundaries in this degree: only the zero cycle lives here
    throw std::invalid_argument("project: vector is not a cycle in this complex");
  }
  auto combo = it->second.solver.express(row);
  if (!combo) throw std::invalid_argument("project: vector is not a cycle");
  Vec out;
  for (const auto& [id, v] : *combo) {
    if (id < it->second.boundary_rank) continue;
    out.emplace(it->second.class_keys.at(id - it->second.boundary_rank), v);
  }
  return out;
}

std::map<int, int> homology_dims(const Complex& c) { return Homology(c).dims(); }

}  // namespace dgla
