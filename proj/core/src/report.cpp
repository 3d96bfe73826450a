#include "dgla/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "dgla/ce.hpp"
#include "dgla/cellular.hpp"
#include "dgla/enveloping.hpp"
#include "dgla/errors.hpp"
#include "dgla/io.hpp"
#include "dgla/mc.hpp"

namespace dgla {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson dims_json(const std::map<int, int>& dims) {
  ojson out = ojson::object();
  for (const auto& [d, n] : dims) out[std::to_string(d)] = n;
  return out;
}

std::map<int, int> window_filter(const std::map<int, int>& dims, const JobSpec& job) {
  if (!job.has_window) return dims;
  std::map<int, int> out;
  for (const auto& [d, n] : dims)
    if (job.window_lo <= d && d <= job.window_hi) out[d] = n;
  return out;
}

DgLieAlgebra lie_of(const ParsedInput& in, const JobSpec& job) {
  if (in.kind == "lie") return *in.lie;
  if (in.kind == "free-lie")
    return FreeLiePresentation(*in.free_generators, job.max_weight).lie();
  throw InputError(job.in_path + ": expected a 'lie' or 'free-lie' document");
}

struct CommandOutcome {
  ojson body = ojson::object();
  std::vector<std::string> flags;
  std::vector<ojson> verdicts;
  bool verdict_failed = false;
};

CommandOutcome cmd_validate(const ParsedInput& in, const JobSpec&) {
  CommandOutcome out;
  // parse_input_file already validated eagerly; report what was checked
  out.body["validated_kind"] = in.kind;
  out.verdicts.push_back(ojson{{"check", "axioms"}, {"ok", true}});
  return out;
}

CommandOutcome cmd_free_lie(const ParsedInput& in, const JobSpec& job) {
  if (in.kind != "free-lie")
    throw InputError(job.in_path + ": free-lie expects a 'free-lie' document");
  FreeLiePresentation F(*in.free_generators, job.max_weight);
  CommandOutcome out;
  ojson dims = ojson::array();
  for (const auto& [dw, n] : F.dims())
    dims.push_back(ojson{{"degree", dw.first}, {"weight", dw.second}, {"dim", n}});
  out.body["dims"] = dims;
  long entries = 0;
  for (const auto& [pair, v] : F.lie().table())
    if (!v.empty()) ++entries;
  out.body["bracket_entries"] = entries;
  return out;
}

CommandOutcome cmd_pbw(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  EnvelopingAlgebra U(L, job.max_weight);
  PbwResult pbw = pbw_map(L, U);
  CommandOutcome out;
  ojson blocks = ojson::array();
  for (const auto& [dw, rd] : pbw.blocks)
    blocks.push_back(ojson{{"degree", dw.first},
                           {"weight", dw.second},
                           {"rank", rd.first},
                           {"dim", rd.second}});
  out.body["blocks"] = blocks;
  out.verdicts.push_back(ojson{{"check", "pbw-bijective"}, {"ok", pbw.bijective}});
  out.verdict_failed = !pbw.bijective;
  return out;
}

CommandOutcome cmd_ce_homology(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  CEChainComplex ce(L, job.max_weight);
  CommandOutcome out;
  out.flags.push_back(ce.truncation().tag());
  out.body["dims"] = dims_json(window_filter(homology_dims(ce.complex()), job));
  out.body["stable_dims"] =
      dims_json(window_filter(ce_stable_homology_dims(L, job.max_weight), job));
  return out;
}

CommandOutcome cmd_ce_cohomology(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  CECochainAlgebra C(L, job.max_weight);
  CommandOutcome out;
  out.flags.push_back(C.truncation().tag());
  out.body["dims"] = dims_json(window_filter(homology_dims(C.complex()), job));
  return out;
}

CommandOutcome cmd_ce_coefficients(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  Representation rep;
  if (job.rep_path.empty())
    throw InputError("ce-coefficients requires --rep");
  ParsedInput rin = parse_input_file(job.rep_path);
  if (rin.kind == "adjoint") {
    rep = adjoint_rep(L);
  } else if (rin.kind == "representation") {
    rep = Representation(L, *rin.rep_underlying, *rin.rep_action);
    auto r = validate_representation(rep);
    if (!r.ok())
      throw InputError(job.rep_path + ": representation axioms violated:\n" +
                       r.summary());
  } else {
    throw InputError(job.rep_path + ": expected 'representation' or 'adjoint'");
  }
  CECoefficients D(L, rep, job.max_weight);
  CommandOutcome out;
  out.flags.push_back(D.truncation().tag());
  out.body["dims"] = dims_json(window_filter(homology_dims(D.complex()), job));
  return out;
}

FiniteAlgebra algebra_of(const ParsedInput& in, const JobSpec& job) {
  if (in.kind == "cdga") return *in.algebra;
  if (in.kind == "cdga-presentation") {
    auto fin = materialize(*in.presentation);
    if (!fin)
      throw InputError(job.in_path +
                       ": presentation is not finite-dimensional (artinian "
                       "input required)");
    return *fin;
  }
  throw InputError(job.in_path + ": expected a 'cdga' or 'cdga-presentation' document");
}

ojson tower_json(const CellularTower& t) {
  ojson stages = ojson::array();
  for (const auto& st : t.stages) {
    ojson cells = ojson::array();
    for (const auto& c : st.new_cells)
      cells.push_back(ojson{{"label", c.label},
                            {"degree", c.degree},
                            {"kind", c.is_x ? "X" : "U"},
                            {"attaching", t.presentation.poly_str(c.attaching)}});
    ojson certs = ojson::array();
    for (const auto& cert : st.certificates)
      certs.push_back(ojson{{"degree", cert.degree},
                            {"stage_dim", cert.stage_dim},
                            {"target_dim", cert.target_dim},
                            {"map_rank", cert.map_rank},
                            {"require_iso", cert.require_iso},
                            {"ok", cert.ok}});
    stages.push_back(
        ojson{{"stage", st.index}, {"cells", cells}, {"certificates", certs}});
  }
  return ojson{{"stages", stages},
               {"count_cap", t.count_cap},
               {"count_bump", t.count_bump},
               {"certified_through", t.certified_through}};
}

CommandOutcome cmd_cellular(const ParsedInput& in, const JobSpec& job) {
  FiniteAlgebra B = algebra_of(in, job);
  CellularTower t = cellular_resolve(B, job.depth);
  CommandOutcome out;
  out.body["tower"] = tower_json(t);
  out.verdicts.push_back(ojson{{"check", "tower-certified"}, {"ok", t.certified}});
  out.verdict_failed = !t.certified;
  return out;
}

CommandOutcome cmd_fiber(const ParsedInput& in, const JobSpec& job) {
  FiniteAlgebra B = algebra_of(in, job);
  CellularTower t = cellular_resolve(B, job.depth);
  Complex fiber = cotangent_fiber(t);
  CommandOutcome out;
  out.body["tower"] = tower_json(t);
  std::map<int, int> dims;
  for (int d : fiber.space().degrees()) dims[d] = fiber.dim(d);
  out.body["fiber_dims"] = dims_json(dims);
  ojson diff = ojson::array();
  for (const auto& [d, blk] : fiber.d().blocks())
    for (int r = 0; r < blk.rows(); ++r)
      for (const auto& [c, v] : blk.row(r))
        diff.push_back(ojson{{"from", fiber.space().labels(d)[c]},
                             {"to", fiber.space().labels(d + 1)[r]},
                             {"coeff", rat_str(v)}});
  out.body["fiber_differential"] = diff;
  out.body["valid_degrees_above"] = -job.depth;
  return out;
}

CommandOutcome cmd_mc(const ParsedInput& in, const JobSpec& job) {
  if (in.kind != "mc") throw InputError(job.in_path + ": expected an 'mc' document");
  MCEvaluation ev = mc_set(*in.lie, *in.coefficients);
  CommandOutcome out;
  out.flags.push_back(ev.flag);
  out.body["affine_linear"] = ev.affine_linear;
  if (ev.affine_linear) out.body["pi0_dim"] = ev.pi0_dim;
  out.body["solution_dim"] = ev.solution_dim;
  out.body["gauge_rank"] = ev.gauge_rank;
  out.body["tangent_dims"] = dims_json(ev.tangent_dims);
  out.body["equations"] = ev.equations;
  return out;
}

CommandOutcome cmd_mc_tangent(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  CommandOutcome out;
  ojson rows = ojson::array();
  bool all = true;
  for (const auto& row : mc_tangent(L, job.depth)) {
    rows.push_back(ojson{{"n", row.n},
                         {"pi0_dim", row.pi0},
                         {"h_dim", row.h_dim},
                         {"match", row.match}});
    if (!row.match) all = false;
  }
  out.body["rows"] = rows;
  out.verdicts.push_back(ojson{{"check", "pi0-equals-H"}, {"ok", all}});
  out.verdict_failed = !all;
  return out;
}

CommandOutcome cmd_schlessinger(const ParsedInput& in, const JobSpec& job) {
  if (in.kind != "schlessinger")
    throw InputError(job.in_path + ": expected a 'schlessinger' document");
  FiniteAlgebra B = *in.coefficients;
  FiniteAlgebra E = epsilon_algebra(in.schlessinger_n);
  AlgebraMap phi;
  phi.source = &B;
  phi.target = &E;
  phi.values[B.unit()] = Vec{{E.unit(), Rational(1)}};
  std::map<std::string, Key> by_label;
  for (const auto& [d, labels] : B.space().components())
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      by_label[labels[i]] = {d, i};
  if (in.algebra_map_values)
    for (const auto& [label, v] : *in.algebra_map_values) {
      if (!by_label.count(label))
        throw InputError(job.in_path + ": map over unknown label '" + label + "'");
      phi.values[by_label.at(label)] = v;
    }
  auto viol = phi.validate();
  if (!viol.empty())
    throw InputError(job.in_path + ": the map to the epsilon algebra violates " +
                     viol.front().rule);
  SchlessingerReport rep = schlessinger_check(*in.lie, B, phi, in.schlessinger_n);
  CommandOutcome out;
  if (!rep.applicable) {
    out.flags.push_back(rep.flag);
    throw TruncationError("schlessinger: " + rep.flag);
  }
  out.body["lhs_pi0"] = rep.lhs;
  out.body["rhs_pi0"] = rep.rhs;
  out.verdicts.push_back(ojson{{"check", "schlessinger-agreement"}, {"ok", rep.match}});
  out.verdict_failed = !rep.match;
  return out;
}

CommandOutcome cmd_unit_check(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L = lie_of(in, job);
  UnitCheckResult r = unit_check(L, job.max_weight, job.depth);
  CommandOutcome out;
  out.flags.push_back(r.truncation.tag());
  out.body["model"] = r.model_summary;
  out.body["tower"] = tower_json(r.tower);
  ojson dims = ojson::array();
  for (const auto& [deg, ab] : r.dims)
    dims.push_back(ojson{{"degree", deg},
                         {"lie_dim", ab.first},
                         {"unit_image_dim", ab.second},
                         {"match", ab.first == ab.second}});
  out.body["window"] = ojson{{"lo", r.window_lo}, {"hi", r.window_hi}};
  out.body["comparison"] = dims;
  out.verdicts.push_back(ojson{{"check", "adjunction-unit"}, {"ok", r.passed}});
  out.verdict_failed = !r.passed;
  return out;
}

CommandOutcome cmd_adjoint_derivation(const ParsedInput& in, const JobSpec& job) {
  DgLieAlgebra L0, L;
  GradedMap alpha;
  if (in.kind == "lie-morphism") {
    L0 = *in.lie;
    L = *in.morphism_target;
    alpha = *in.morphism;
  } else {
    L = lie_of(in, job);
    L0 = L;
    alpha = identity_map(L.space());
  }
  AdjointDerivation der = adjoint_derivation(alpha, L0, L, job.max_weight);
  CommandOutcome out;
  out.body["certified_weight"] = der.certified_weight;
  long entries = 0;
  for (const auto& [d, blk] : der.delta.blocks()) entries += blk.nnz();
  out.body["delta_entries"] = entries;
  out.verdicts.push_back(ojson{{"check", "delta-chain-map"}, {"ok", true}});
  return out;
}

}  // namespace

RunResult run(const JobSpec& job) {
  auto start = std::chrono::steady_clock::now();
  RunResult out;
  ojson& rep = out.report;
  rep["tool"] = "dgla";
  rep["version"] = kVersion;
  rep["command"] = job.command;
  rep["job"] = ojson{{"in", job.in_path},
                     {"rep", job.rep_path},
                     {"max_weight", job.max_weight},
                     {"depth", job.depth},
                     {"degree_window",
                      job.has_window ? (std::to_string(job.window_lo) + ":" +
                                        std::to_string(job.window_hi))
                                     : ""},
                     {"seed", job.seed}};
  try {
    std::string bytes = slurp(job.in_path);
    rep["input_hash"] = content_hash(bytes);
    ParsedInput in = parse_input_text(bytes, job.in_path);

    CommandOutcome body;
    if (job.command == "validate")
      body = cmd_validate(in, job);
    else if (job.command == "free-lie")
      body = cmd_free_lie(in, job);
    else if (job.command == "pbw-check")
      body = cmd_pbw(in, job);
    else if (job.command == "ce-homology")
      body = cmd_ce_homology(in, job);
    else if (job.command == "ce-cohomology")
      body = cmd_ce_cohomology(in, job);
    else if (job.command == "ce-coefficients")
      body = cmd_ce_coefficients(in, job);
    else if (job.command == "cellular-resolve")
      body = cmd_cellular(in, job);
    else if (job.command == "cotangent-fiber")
      body = cmd_fiber(in, job);
    else if (job.command == "mc")
      body = cmd_mc(in, job);
    else if (job.command == "mc-tangent")
      body = cmd_mc_tangent(in, job);
    else if (job.command == "schlessinger")
      body = cmd_schlessinger(in, job);
    else if (job.command == "unit-check")
      body = cmd_unit_check(in, job);
    else if (job.command == "adjoint-derivation")
      body = cmd_adjoint_derivation(in, job);
    else
      throw InputError("unknown command '" + job.command + "'");

    rep["flags"] = body.flags;
    rep["result"] = body.body;
    rep["verdicts"] = body.verdicts;
    rep["status"] = body.verdict_failed ? "verdict-failed" : "ok";
    out.exit_code = body.verdict_failed ? 3 : 0;
  } catch (const InputError& e) {
    rep["status"] = "input-error";
    rep["error"] = e.what();
    out.exit_code = 2;
  } catch (const TruncationError& e) {
    rep["status"] = "truncation-insufficient";
    rep["error"] = e.what();
    out.exit_code = 4;
  } catch (const VerdictError& e) {
    rep["status"] = "verdict-failed";
    rep["error"] = e.what();
    out.exit_code = 3;
  } catch (const std::exception& e) {
    // certification failures and internal aborts surface as verdict failures
    rep["status"] = "verdict-failed";
    rep["error"] = e.what();
    out.exit_code = 3;
  }
  auto end = std::chrono::steady_clock::now();
  rep["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return out;
}

namespace {
void flatten(const std::string& prefix, const ojson& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(prefix.empty() ? k : prefix + "." + k, v, rows);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten(prefix + "[" + std::to_string(i++) + "]", v, rows);
  } else {
    rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}
}  // namespace

std::string render(const nlohmann::ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", report, rows);
  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  } else {  // table
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows)
      os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  }
  return os.str();
}

std::string stable_render(const nlohmann::ordered_json& report,
                          const std::string& format) {
  nlohmann::ordered_json copy = report;
  copy.erase("timing_ms");
  return render(copy, format);
}

}  // namespace dgla
