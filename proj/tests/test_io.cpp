#include <cstdlib>

#include "dgla/io.hpp"
#include "dgla/parallel.hpp"
#include "dgla/report.hpp"
#include "doctest.h"

using namespace dgla;

#ifndef DGLA_TEST_DATA
#define DGLA_TEST_DATA "tests/data"
#endif

static std::string data(const std::string& name) {
  return std::string(DGLA_TEST_DATA) + "/" + name;
}

TEST_CASE("sl2 fixture parses into a validated Lie algebra") {
  ParsedInput in = parse_input_file(data("sl2.json"));
  CHECK(in.kind == "lie");
  REQUIRE(in.lie.has_value());
  CHECK(in.lie->space().total_dim() == 3);
  CHECK(validate_lie(*in.lie).ok());
}

TEST_CASE("corrupted sl2 is rejected with a Jacobi diagnostic naming the triple") {
  try {
    parse_input_file(data("sl2_corrupt.json"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("jacobi") != std::string::npos);
    CHECK(msg.find("h") != std::string::npos);
    CHECK(msg.find("e") != std::string::npos);
    CHECK(msg.find("f") != std::string::npos);
  }
}

TEST_CASE("empty generator list gives the zero Lie algebra") {
  ParsedInput in = parse_input_text(R"({"kind":"lie","generators":[]})", "inline");
  CHECK(in.lie->space().total_dim() == 0);
}

TEST_CASE("schema violations carry the origin") {
  CHECK_THROWS_AS(parse_input_text("{", "inline"), InputError);
  CHECK_THROWS_AS(parse_input_text(R"({"kind":"nope"})", "inline"), InputError);
  CHECK_THROWS_AS(
      parse_input_text(R"({"kind":"lie","generators":[{"label":"x"}]})", "inline"),
      InputError);
  // bad rational
  CHECK_THROWS_AS(parse_input_text(
                      R"({"kind":"lie","generators":[{"label":"x","degree":1}],
              "brackets":[{"args":["x","x"],"value":[{"label":"x","coeff":"1/0"}]}]})",
                      "inline"),
                  InputError);
}

TEST_CASE("round-trip: serialize(parse(x)) is idempotent") {
  ParsedInput in = parse_input_file(data("sl2.json"));
  std::string once = serialize_lie(*in.lie);
  ParsedInput again = parse_input_text(once, "round");
  std::string twice = serialize_lie(*again.lie);
  CHECK(once == twice);

  ParsedInput c = parse_input_file(data("dual_numbers.json"));
  std::string a1 = serialize_algebra(*c.algebra);
  ParsedInput c2 = parse_input_text(a1, "round");
  CHECK(serialize_algebra(*c2.algebra) == a1);
}

TEST_CASE("materialize rejects even generators and builds exterior algebras") {
  ParsedInput line = parse_input_file(data("poly_line.json"));
  CHECK(!materialize(*line.presentation).has_value());
  CdgaPresentation ext({{"u", -1}, {"v", -3}}, {});
  auto fin = materialize(ext);
  REQUIRE(fin.has_value());
  CHECK(fin->space().total_dim() == 4);
  CHECK(fin->validate().empty());
}

TEST_CASE("reports are deterministic across reruns and parallelism levels") {
  JobSpec job;
  job.command = "ce-homology";
  job.in_path = data("sl2.json");
  job.max_weight = 3;
  std::string first;
  for (int threads : {1, 2, 4}) {
    set_thread_cap(threads);
    for (int rerun = 0; rerun < 2; ++rerun) {
      RunResult r = run(job);
      CHECK(r.exit_code == 0);
      std::string body = stable_render(r.report, "json");
      if (first.empty())
        first = body;
      else
        CHECK(body == first);
    }
  }
  set_thread_cap(1);
}

TEST_CASE("run dispatches every command and the exit codes match the contract") {
  {
    JobSpec job;
    job.command = "pbw-check";
    job.in_path = data("free_odd.json");
    job.max_weight = 4;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
    CHECK(r.report["status"] == "ok");
  }
  {
    JobSpec job;
    job.command = "unit-check";
    job.in_path = data("free_even2.json");
    job.max_weight = 3;
    job.depth = 3;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
  }
  {
    JobSpec job;
    job.command = "cellular-resolve";
    job.in_path = data("poly_line.json");
    job.depth = 2;
    RunResult r = run(job);
    CHECK(r.exit_code == 2);  // non-artinian input
  }
  {
    JobSpec job;
    job.command = "mc";
    job.in_path = data("mc_abelian.json");
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["pi0_dim"] == 1);
  }
  {
    JobSpec job;
    job.command = "mc-tangent";
    job.in_path = data("sl2.json");
    job.depth = 3;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
  }
  {
    JobSpec job;
    job.command = "schlessinger";
    job.in_path = data("schlessinger_eps.json");
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["lhs_pi0"] == r.report["result"]["rhs_pi0"]);
  }
  {
    JobSpec job;
    job.command = "adjoint-derivation";
    job.in_path = data("sl2.json");
    job.max_weight = 3;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
  }
  {
    JobSpec job;
    job.command = "ce-coefficients";
    job.in_path = data("sl2.json");
    job.rep_path = data("adjoint.json");
    job.max_weight = 4;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
    // Whitehead: all dims zero
    CHECK(r.report["result"]["dims"].empty());
  }
  {
    JobSpec job;
    job.command = "cotangent-fiber";
    job.in_path = data("dual_numbers.json");
    job.depth = 2;
    RunResult r = run(job);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["fiber_dims"]["0"] == 1);
    CHECK(r.report["result"]["fiber_dims"]["-1"] == 1);
  }
  {
    JobSpec job;
    job.command = "validate";
    job.in_path = data("sl2_corrupt.json");
    RunResult r = run(job);
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("csv and table renderings are available") {
  JobSpec job;
  job.command = "free-lie";
  job.in_path = data("free_odd.json");
  job.max_weight = 3;
  RunResult r = run(job);
  CHECK(render(r.report, "csv").find("key,value") == 0);
  CHECK(!render(r.report, "table").empty());
}
