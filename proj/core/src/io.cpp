#include "dgla/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace dgla {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw InputError(origin + ": " + what);
}

Rational coeff_of(const json& j, const std::string& origin) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long>()));
  if (j.is_string()) {
    try {
      return rat_parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(origin, e.what());
    }
  }
  fail(origin, "coefficient must be an integer or a \"p/q\" string");
}

// generators: [{"label","degree"}]
std::vector<std::pair<std::string, int>> parse_generators(const json& j,
                                                          const std::string& origin) {
  std::vector<std::pair<std::string, int>> out;
  if (!j.is_array()) fail(origin, "'generators' must be an array");
  for (const auto& g : j) {
    if (!g.contains("label") || !g.contains("degree"))
      fail(origin, "generator entries need 'label' and 'degree'");
    out.push_back({g["label"].get<std::string>(), g["degree"].get<int>()});
  }
  return out;
}

struct LabelIndex {
  std::map<std::string, Key> key_of;
  GradedSpace space;
};

LabelIndex build_space(const std::vector<std::pair<std::string, int>>& gens,
                       const std::string& origin) {
  LabelIndex out;
  for (const auto& [label, degree] : gens) {
    if (out.key_of.count(label)) fail(origin, "duplicate label '" + label + "'");
    out.key_of[label] = out.space.add(degree, label);
  }
  return out;
}

Vec parse_value(const json& j, const LabelIndex& idx, const std::string& origin) {
  Vec out;
  if (!j.is_array()) fail(origin, "'value' must be an array of {label, coeff}");
  for (const auto& t : j) {
    if (!t.contains("label") || !t.contains("coeff"))
      fail(origin, "value entries need 'label' and 'coeff'");
    std::string label = t["label"].get<std::string>();
    auto it = idx.key_of.find(label);
    if (it == idx.key_of.end()) fail(origin, "unknown label '" + label + "'");
    Rational c = coeff_of(t["coeff"], origin);
    if (!is_zero(c)) vec_axpy(out, c, Vec{{it->second, Rational(1)}});
  }
  return out;
}

GradedMap parse_differential(const json& doc, const LabelIndex& idx,
                             const std::string& origin) {
  GradedMap d(idx.space, idx.space, 1);
  if (!doc.contains("differential")) return d;
  for (const auto& row : doc["differential"]) {
    if (!row.contains("arg")) fail(origin, "differential rows need 'arg'");
    std::string arg = row["arg"].get<std::string>();
    auto it = idx.key_of.find(arg);
    if (it == idx.key_of.end()) fail(origin, "unknown label '" + arg + "'");
    Vec v = parse_value(row["value"], idx, origin + " (differential of " + arg + ")");
    for (const auto& [k, c] : v) {
      if (k.first != it->second.first + 1)
        fail(origin, "differential of '" + arg + "' is not of degree +1");
      d.add_entry(k, it->second, c);
    }
  }
  return d;
}

DgLieAlgebra parse_lie(const json& doc, const std::string& origin) {
  auto gens = parse_generators(doc.at("generators"), origin);
  LabelIndex idx = build_space(gens, origin);
  GradedMap d = parse_differential(doc, idx, origin);
  Complex cx;
  try {
    cx = Complex(idx.space, d);
  } catch (const std::exception& e) {
    fail(origin, e.what());
  }
  BracketTable table;
  if (doc.contains("brackets")) {
    for (const auto& row : doc["brackets"]) {
      auto args = row.at("args");
      if (!args.is_array() || args.size() != 2)
        fail(origin, "bracket rows need exactly two 'args'");
      std::string la = args[0].get<std::string>(), lb = args[1].get<std::string>();
      if (!idx.key_of.count(la) || !idx.key_of.count(lb))
        fail(origin, "bracket over unknown labels [" + la + "," + lb + "]");
      Vec v = parse_value(row.at("value"), idx,
                          origin + " (bracket [" + la + "," + lb + "])");
      table[{idx.key_of.at(la), idx.key_of.at(lb)}] = std::move(v);
    }
  }
  DgLieAlgebra L(std::move(cx), std::move(table));
  L.complete_antisymmetric();
  auto report = validate_lie(L);
  if (!report.ok()) fail(origin, "Lie axioms violated:\n" + report.summary());
  return L;
}

FiniteAlgebra parse_cdga(const json& doc, const std::string& origin) {
  auto gens = parse_generators(doc.at("generators"), origin);
  // implicit unit label "1" unless present
  bool has_unit = false;
  for (const auto& [l, d] : gens)
    if (l == "1") has_unit = true;
  std::vector<std::pair<std::string, int>> basis = gens;
  if (!has_unit) basis.insert(basis.begin(), {"1", 0});
  LabelIndex idx = build_space(basis, origin);
  GradedMap d = parse_differential(doc, idx, origin);
  Complex cx;
  try {
    cx = Complex(idx.space, d);
  } catch (const std::exception& e) {
    fail(origin, e.what());
  }
  std::map<std::pair<Key, Key>, Vec> mult;
  if (doc.contains("products")) {
    for (const auto& row : doc["products"]) {
      auto args = row.at("args");
      std::string la = args[0].get<std::string>(), lb = args[1].get<std::string>();
      if (!idx.key_of.count(la) || !idx.key_of.count(lb))
        fail(origin, "product over unknown labels");
      Vec v = parse_value(row.at("value"), idx, origin + " (product " + la + "*" + lb + ")");
      Key a = idx.key_of.at(la), bk = idx.key_of.at(lb);
      mult[{a, bk}] = v;
      // graded-commutative completion when the opposite order is absent
      Rational sign = (a.first * bk.first) % 2 == 0 ? 1 : -1;
      if (!mult.count({bk, a}) && !(a == bk)) mult[{bk, a}] = vec_scaled(v, sign);
    }
  }
  std::map<Key, Rational> aug{{idx.key_of.at("1"), Rational(1)}};
  if (doc.contains("augmentation")) {
    for (const auto& t : doc["augmentation"]) {
      std::string label = t.at("label").get<std::string>();
      if (!idx.key_of.count(label)) fail(origin, "augmentation over unknown label");
      aug[idx.key_of.at(label)] = coeff_of(t.at("coeff"), origin);
    }
  }
  FiniteAlgebra B(std::move(cx), idx.key_of.at("1"), std::move(mult), std::move(aug));
  auto violations = B.validate();
  if (!violations.empty()) {
    std::ostringstream os;
    os << "cdga axioms violated:";
    for (const auto& v : violations) {
      os << " " << v.rule << "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        os << (i ? "," : "") << v.witness[i];
      os << ")";
    }
    fail(origin, os.str());
  }
  return B;
}

CdgaPresentation parse_presentation(const json& doc, const std::string& origin) {
  auto gens = parse_generators(doc.at("generators"), origin);
  std::vector<CdgaGen> cg;
  std::map<std::string, int> index;
  for (const auto& [l, d] : gens) {
    index[l] = static_cast<int>(cg.size());
    cg.push_back({l, d});
  }
  std::map<int, Poly> diff;
  if (doc.contains("differential")) {
    for (const auto& row : doc["differential"]) {
      std::string arg = row.at("arg").get<std::string>();
      if (!index.count(arg)) fail(origin, "unknown generator '" + arg + "'");
      Poly p;
      for (const auto& term : row.at("value")) {
        // monomial: [{"label","exp"}]
        Monomial m;
        for (const auto& f : term.at("monomial")) {
          std::string l = f.at("label").get<std::string>();
          if (!index.count(l)) fail(origin, "unknown generator '" + l + "'");
          m.push_back({index[l], f.contains("exp") ? f["exp"].get<int>() : 1});
        }
        std::sort(m.begin(), m.end());
        p = poly_add(p, Poly{{m, coeff_of(term.at("coeff"), origin)}});
      }
      diff[index[arg]] = std::move(p);
    }
  }
  CdgaPresentation pres(std::move(cg), std::move(diff));
  try {
    pres.validate();
  } catch (const std::exception& e) {
    fail(origin, e.what());
  }
  return pres;
}

}  // namespace

ParsedInput parse_input_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("JSON parse error: ") + e.what());
  }
  if (!doc.contains("kind")) fail(origin, "missing 'kind'");
  ParsedInput out;
  out.kind = doc["kind"].get<std::string>();
  if (out.kind == "lie") {
    out.lie = parse_lie(doc, origin);
  } else if (out.kind == "free-lie") {
    out.free_generators = parse_generators(doc.at("generators"), origin);
    for (const auto& [l, d] : *out.free_generators)
      if (d < 1) fail(origin, "free-lie generator '" + l + "' has degree < 1");
  } else if (out.kind == "cdga") {
    out.algebra = parse_cdga(doc, origin);
  } else if (out.kind == "cdga-presentation") {
    out.presentation = parse_presentation(doc, origin);
  } else if (out.kind == "representation") {
    out.lie = parse_lie(doc.at("lie"), origin + ".lie");
    auto basis = parse_generators(doc.at("basis"), origin);
    LabelIndex idx = build_space(basis, origin);
    GradedMap d = parse_differential(doc, idx, origin);
    out.rep_underlying = Complex(idx.space, d);
    ActionTable act;
    LabelIndex lidx;
    for (const auto& [dd, labels] : out.lie->space().components())
      for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        lidx.key_of[labels[i]] = {dd, i};
    if (doc.contains("action")) {
      for (const auto& row : doc["action"]) {
        auto args = row.at("args");
        std::string lx = args[0].get<std::string>(), lm = args[1].get<std::string>();
        if (!lidx.key_of.count(lx)) fail(origin, "unknown Lie label '" + lx + "'");
        if (!idx.key_of.count(lm)) fail(origin, "unknown module label '" + lm + "'");
        act[{lidx.key_of.at(lx), idx.key_of.at(lm)}] =
            parse_value(row.at("value"), idx, origin + " (action)");
      }
    }
    out.rep_action = std::move(act);
    Representation rep(*out.lie, *out.rep_underlying, *out.rep_action);
    auto report = validate_representation(rep);
    if (!report.ok()) fail(origin, "representation axioms violated:\n" + report.summary());
  } else if (out.kind == "adjoint") {
    out.rep_is_adjoint = true;
  } else if (out.kind == "mc") {
    out.lie = parse_lie(doc.at("lie"), origin + ".lie");
    out.coefficients = parse_cdga(doc.at("coefficients"), origin + ".coefficients");
  } else if (out.kind == "schlessinger") {
    out.lie = parse_lie(doc.at("lie"), origin + ".lie");
    out.coefficients = parse_cdga(doc.at("coefficients"), origin + ".coefficients");
    out.schlessinger_n = doc.value("n", 1);
    std::map<std::string, Vec> values;
    FiniteAlgebra eps = epsilon_algebra(out.schlessinger_n);
    LabelIndex eidx;
    for (const auto& [dd, labels] : eps.space().components())
      for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        eidx.key_of[labels[i]] = {dd, i};
    eidx.space = eps.space();
    if (doc.contains("map")) {
      for (const auto& row : doc["map"]) {
        std::string arg = row.at("arg").get<std::string>();
        values[arg] = parse_value(row.at("value"), eidx, origin + " (map)");
      }
    }
    out.algebra_map_values = std::move(values);
  } else if (out.kind == "lie-morphism") {
    out.lie = parse_lie(doc.at("source"), origin + ".source");
    out.morphism_target = parse_lie(doc.at("target"), origin + ".target");
    GradedMap alpha(out.lie->space(), out.morphism_target->space(), 0);
    LabelIndex sidx, tidx;
    for (const auto& [dd, labels] : out.lie->space().components())
      for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        sidx.key_of[labels[i]] = {dd, i};
    for (const auto& [dd, labels] : out.morphism_target->space().components())
      for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        tidx.key_of[labels[i]] = {dd, i};
    tidx.space = out.morphism_target->space();
    for (const auto& row : doc.at("map")) {
      std::string arg = row.at("arg").get<std::string>();
      if (!sidx.key_of.count(arg)) fail(origin, "unknown source label '" + arg + "'");
      Vec v = parse_value(row.at("value"), tidx, origin + " (map)");
      for (const auto& [k, c] : v) alpha.add_entry(k, sidx.key_of.at(arg), c);
    }
    if (!is_lie_morphism(alpha, *out.lie, *out.morphism_target))
      fail(origin, "'map' is not a morphism of dg-Lie algebras");
    out.morphism = std::move(alpha);
  } else {
    fail(origin, "unknown kind '" + out.kind + "'");
  }
  return out;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str(), path);
}

std::string serialize_lie(const DgLieAlgebra& L) {
  ojson doc;
  doc["kind"] = "lie";
  doc["generators"] = ojson::array();
  const GradedSpace& s = L.space();
  for (const auto& [d, labels] : s.components())
    for (const auto& l : labels)
      doc["generators"].push_back({{"label", l}, {"degree", d}});
  ojson diff = ojson::array();
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      Vec v = L.complex().d().apply_key({d, i});
      if (v.empty()) continue;
      ojson row;
      row["arg"] = labels[i];
      row["value"] = ojson::array();
      for (const auto& [k, c] : v)
        row["value"].push_back({{"label", s.label(k)}, {"coeff", rat_str(c)}});
      diff.push_back(row);
    }
  if (!diff.empty()) doc["differential"] = diff;
  ojson brackets = ojson::array();
  for (const auto& [pair, val] : L.table()) {
    if (val.empty()) continue;
    ojson row;
    row["args"] = {s.label(pair.first), s.label(pair.second)};
    row["value"] = ojson::array();
    for (const auto& [k, c] : val)
      row["value"].push_back({{"label", s.label(k)}, {"coeff", rat_str(c)}});
    brackets.push_back(row);
  }
  if (!brackets.empty()) doc["brackets"] = brackets;
  return doc.dump(2) + "\n";
}

std::string serialize_algebra(const FiniteAlgebra& B) {
  ojson doc;
  doc["kind"] = "cdga";
  doc["generators"] = ojson::array();
  const GradedSpace& s = B.space();
  for (const auto& [d, labels] : s.components())
    for (const auto& l : labels)
      if (!(Key{d, 0} == B.unit() && l == s.label(B.unit())))
        doc["generators"].push_back({{"label", l}, {"degree", d}});
  ojson products = ojson::array();
  std::vector<Key> keys;
  for (const auto& [d, labels] : s.components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (!(Key{d, i} == B.unit())) keys.push_back({d, i});
  for (const auto& a : keys)
    for (const auto& b : keys) {
      Vec v = B.mul(a, b);
      if (v.empty()) continue;
      ojson row;
      row["args"] = {s.label(a), s.label(b)};
      row["value"] = ojson::array();
      for (const auto& [k, c] : v)
        row["value"].push_back({{"label", s.label(k)}, {"coeff", rat_str(c)}});
      products.push_back(row);
    }
  if (!products.empty()) doc["products"] = products;
  ojson diff = ojson::array();
  for (const auto& k : keys) {
    Vec v = B.complex().d().apply_key(k);
    if (v.empty()) continue;
    ojson row;
    row["arg"] = s.label(k);
    row["value"] = ojson::array();
    for (const auto& [t, c] : v)
      row["value"].push_back({{"label", s.label(t)}, {"coeff", rat_str(c)}});
    diff.push_back(row);
  }
  if (!diff.empty()) doc["differential"] = diff;
  return doc.dump(2) + "\n";
}

std::string content_hash(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<FiniteAlgebra> materialize(const CdgaPresentation& pres) {
  for (const auto& g : pres.gens())
    if (!((g.degree) & 1)) return std::nullopt;  // an even generator: infinite
  // all generators odd: the exterior algebra on them
  int n = static_cast<int>(pres.gens().size());
  GradedSpace s;
  std::map<Monomial, Key> key_of;
  std::function<void(int, Monomial&)> rec = [&](int g, Monomial& cur) {
    if (g == n) {
      int deg = pres.mono_degree(cur);
      key_of[cur] = s.add(deg, pres.mono_label(cur));
      return;
    }
    rec(g + 1, cur);
    cur.push_back({g, 1});
    rec(g + 1, cur);
    cur.pop_back();
  };
  Monomial cur;
  rec(0, cur);
  auto to_vec = [&](const Poly& p) {
    Vec v;
    for (const auto& [m, c] : p) v.emplace(key_of.at(m), c);
    return v;
  };
  GradedMap dd(s, s, 1);
  std::map<std::pair<Key, Key>, Vec> mult;
  std::map<Key, Rational> aug;
  Key unit = key_of.at(Monomial{});
  aug[unit] = 1;
  for (const auto& [m, k] : key_of) {
    Poly dm = pres.d_mono(m);
    for (const auto& [t, c] : to_vec(dm)) dd.add_entry(t, k, c);
    for (const auto& [m2, k2] : key_of) {
      if (k == unit || k2 == unit) continue;
      auto prod = pres.mono_mul(m, m2);
      if (!prod) continue;
      mult[{k, k2}] = Vec{{key_of.at(prod->second), prod->first}};
    }
  }
  return FiniteAlgebra(Complex(std::move(s), std::move(dd)), unit, std::move(mult),
                       std::move(aug));
}

}  // namespace dgla
