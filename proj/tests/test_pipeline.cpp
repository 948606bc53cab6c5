#include <string>

#include "doctest.h"
#include "json.hpp"
#include "latdeform/errors.hpp"
#include "latdeform/json_io.hpp"
#include "latdeform/pipeline.hpp"

using namespace latdeform;
using J = nlohmann::json;

namespace {

const char* kBasisDoc = R"({"basis": [["-1","3","-2"],["-1","-1","2"]]})";
const char* kLapDoc =
    R"({"laplacian": [["5","-3","-2"],["-1","3","-2"],["-1","-1","2"]]})";

PipelineConfig cfg(const std::string& command) {
  PipelineConfig c;
  c.command = command;
  return c;
}

J run_json(const PipelineConfig& c, const std::string& input,
           int expect_code = 0) {
  RunResult r = run(c, input);
  CHECK(r.exit_code == expect_code);
  return J::parse(r.output);
}

}  // namespace

TEST_CASE("basis input accepts strings and numbers") {
  BasisInput a = parse_basis_input(kBasisDoc);
  BasisInput b = parse_basis_input(R"({"basis": [[-1,3,-2],[-1,-1,2]]})");
  CHECK(!a.generators);
  CHECK(a.rows == b.rows);
  CHECK(a.rows.rows() == 2);
  CHECK(a.rows.at(0, 1) == 3);

  BasisInput g = parse_basis_input(
      R"({"generators": [[2,-2,0],[-1,3,-2],[-1,-1,2]]})");
  CHECK(g.generators);
  CHECK(g.rows.rows() == 3);
}

TEST_CASE("basis input rejections") {
  CHECK_THROWS_AS(parse_basis_input("not json"), SchemaError);
  CHECK_THROWS_AS(parse_basis_input("{}"), SchemaError);
  CHECK_THROWS_AS(parse_basis_input(R"({"basis": 7})"), SchemaError);
  CHECK_THROWS_AS(parse_basis_input(R"({"basis": [[1,2],[3]]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_basis_input(R"({"basis": [["1.5","2","3"]]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_basis_input(R"({"basis": []})"), SchemaError);
}

TEST_CASE("laplacian input forms agree") {
  IntMat direct = parse_integer_laplacian(kLapDoc);
  IntMat via_edges = parse_integer_laplacian(
      R"({"n": 3, "edges": [[0,1,3],[0,2,2],[1,0,1],[1,2,2],
                            [2,0,1],[2,1,1]]})");
  CHECK(direct == via_edges);
  CHECK(direct.at(0, 0) == 5);

  CHECK_THROWS_AS(parse_integer_laplacian(R"({"laplacian": [[1,2],[3,4]]})"),
                  SchemaError);  // rows do not sum to zero
  CHECK_THROWS_AS(parse_integer_laplacian(R"({"laplacian": [[1,-1]]})"),
                  SchemaError);  // not square
  CHECK_THROWS_AS(
      parse_integer_laplacian(R"({"n": 2, "edges": [[0,1]]})"),
      SchemaError);  // edge needs weight
}

TEST_CASE("vector text") {
  CHECK(parse_vector_text(R"(["0","4","5"])") ==
        parse_vector_text("[0,4,5]"));
  CHECK_THROWS_AS(parse_vector_text(R"({"a": 1})"), SchemaError);
}

TEST_CASE("laplacianize command") {
  J j = run_json(cfg("laplacianize"), kBasisDoc);
  CHECK(j["q"] == J::parse(
      R"([["8","-4","-4"],["-2","2","0"],["-1","-1","2"]])"));
  CHECK(j["sigma"] == J::parse(R"(["1","3","2"])"));
  CHECK(j["index"] == "4");
  CHECK(j["edges"][0] == J::parse(R"([0,1,"4"])"));
}

TEST_CASE("superstabilize command") {
  PipelineConfig c = cfg("superstabilize");
  c.config_vector = "[0,4,5]";
  J j = run_json(c, kLapDoc);
  CHECK(j["final"] == J::parse(R"(["8","0","1"])"));
  CHECK(j["script"] == J::parse(R"(["0","3","5"])"));

  PipelineConfig missing = cfg("superstabilize");
  CHECK(run(missing, kLapDoc).exit_code == 2);
  PipelineConfig short_vec = cfg("superstabilize");
  short_vec.config_vector = "[0,1]";
  CHECK(run(short_vec, kLapDoc).exit_code == 2);
  PipelineConfig negative = cfg("superstabilize");
  negative.config_vector = "[0,-1,5]";
  CHECK(run(negative, kLapDoc).exit_code == 2);
}

TEST_CASE("grobner command") {
  PipelineConfig c = cfg("grobner");
  c.check_spairs = true;
  J j = run_json(c, kLapDoc);
  CHECK(j["count"] == 11);
  CHECK(j["nvars"] == 3);
  CHECK(j["spairs_ok"] == true);
  CHECK(j["sigma"] == J::parse(R"(["1","2","3"])"));
  CHECK(j["order_ascending"] == J::parse("[0,1,2]"));
  REQUIRE(j["binomials"].size() == 11);
  for (const J& b : j["binomials"]) {
    CHECK(b.contains("u"));
    CHECK(b.contains("x"));
    CHECK((b["leading"] == "+" || b["leading"] == "-"));
  }
}

TEST_CASE("deform command") {
  J j = run_json(cfg("deform"), kBasisDoc);
  CHECK(j["step_count"] == 1);
  CHECK(j["lambda"] == "360");
  CHECK(j["q_gen"] == J::parse(
      R"([["8","-4","-4"],["-2","361/180","-1/180"],
          ["-1","-121/120","241/120"]])"));
  CHECK(j["scaled_gen"] == J::parse(
      R"([["2880","-1440","-1440"],["-720","722","-2"],
          ["-360","-363","723"]])"));
  const J& st = j["steps"][0];
  CHECK(st["r"] == 0);
  CHECK(st["x"] == J::parse(R"(["0","1","0"])"));
  CHECK(st["i"] == 2);
  CHECK(st["j"] == 1);
  CHECK(st["epsilon"] == "1/60");
  CHECK(st["lambda_r"] == "1");
  CHECK(st["q_r"] == J::parse(
      R"([["8","-4","-4"],["-2","2","0"],["-1","-1","2"]])"));
  CHECK(j["distance"]["norm_sq"] == "13/64800");
  CHECK(j["distance"]["sqrt_decimal"] == "0.014163943");
}

TEST_CASE("deform levels") {
  PipelineConfig c = cfg("deform");
  c.levels = 3;
  J j = run_json(c, kBasisDoc);
  CHECK(j["level_count"] == 3);
  CHECK(j["templates_match"] == true);
  const char* eps[] = {"1/60", "1/120", "1/240"};
  const char* dist[] = {"13/64800", "13/259200", "13/1036800"};
  for (int lvl = 0; lvl < 3; ++lvl) {
    CHECK(j["levels"][lvl]["steps"][0]["epsilon"] == eps[lvl]);
    CHECK(j["levels"][lvl]["distance"]["norm_sq"] == dist[lvl]);
  }
}

TEST_CASE("resolve command") {
  J j = run_json(cfg("resolve"), kBasisDoc);
  CHECK(j["delta"] == "1");
  CHECK(j["field"] == "rationals");
  CHECK(j["index"] == "4");
  CHECK(j["index_gen"] == "521280");
  CHECK(j["standard_count"] == "521280");
  CHECK(j["lambda"] == "360");
  CHECK(j["step_count"] == 1);
  CHECK(j["grobner_count"] == 11);
  CHECK(j["initial_mingens"] == J::parse(
      R"([["0","0","723"],["0","359","721"],["0","722","0"]])"));
  CHECK(j["f_monomial"] == J::parse("[3,2]"));
  CHECK(j["f_quotient"] == J::parse("[1,3,2]"));
  CHECK(j["shift_check"] == true);
  CHECK(j["euler"] == 0);
  CHECK(j["exact"] == true);
  CHECK(j["homology"] == J::parse("[1,2,1]"));
  CHECK(j["ranks"] == J::parse("[1,3,2]"));
  CHECK(j["betti"] == J::parse("[1,2,1]"));
  REQUIRE(j["faces"].size() == 6);
  CHECK(j["faces"][0]["dim"] == 0);
  CHECK(j["faces"][5]["dim"] == 2);
}

TEST_CASE("resolve over a prime field") {
  PipelineConfig c = cfg("resolve");
  c.field = FieldSpec{false, 7};
  J j = run_json(c, kBasisDoc);
  CHECK(j["field"] == "prime:7");
  CHECK(j["betti"] == J::parse("[1,2,1]"));
  CHECK(j["exact"] == true);
}

TEST_CASE("demo pitfall") {
  for (int k : {2, 3}) {
    PipelineConfig c = cfg("demo-pitfall");
    c.pitfall_k = k;
    J j = run_json(c, "");
    CHECK(j["k"] == k);
    CHECK(j["candidate_in_lattice"] == true);
    CHECK(j["divisible_by_any"] == false);
    CHECK(j["divisible"] == J::parse("[false,false,false]"));
    std::string conclusion = j["conclusion"].get<std::string>();
    CHECK(conclusion.find("saturation") != std::string::npos);
  }
  PipelineConfig bad = cfg("demo-pitfall");
  bad.pitfall_k = 0;
  CHECK(run(bad, "").exit_code == 2);
}

TEST_CASE("output is byte identical across runs and thread settings") {
  for (const char* command : {"laplacianize", "deform", "resolve"}) {
    PipelineConfig a = cfg(command);
    PipelineConfig b = cfg(command);
    b.threads = 4;
    RunResult r1 = run(a, kBasisDoc);
    RunResult r2 = run(a, kBasisDoc);
    RunResult r3 = run(b, kBasisDoc);
    CHECK(r1.output == r2.output);
    CHECK(r1.output == r3.output);
  }
}

TEST_CASE("error documents carry the exit code") {
  RunResult bad_json = run(cfg("laplacianize"), "not json");
  CHECK(bad_json.exit_code == 2);
  J e = J::parse(bad_json.output);
  CHECK(e["error"]["code"] == 2);
  CHECK(e["error"]["kind"] == "schema");
  CHECK(e["error"]["message"].is_string());

  PipelineConfig stab = cfg("superstabilize");
  stab.config_vector = "[0,1,1,1]";
  RunResult disconnected = run(
      stab,
      R"({"laplacian": [["1","-1","0","0"],["-1","1","0","0"],
          ["0","0","1","-1"],["0","0","-1","1"]]})");
  CHECK(disconnected.exit_code == 3);
  CHECK(J::parse(disconnected.output)["error"]["kind"] ==
        "not-strongly-connected");

  RunResult low_rank = run(cfg("laplacianize"),
                           R"({"basis": [["1","-1","0"]]})");
  CHECK(low_rank.exit_code == 4);
  CHECK(J::parse(low_rank.output)["error"]["kind"] == "not-finite-index");

  RunResult dependent = run(
      cfg("laplacianize"),
      R"({"basis": [["1","-1","0"],["2","-2","0"]]})");
  CHECK(dependent.exit_code == 4);

  RunResult bad_sum = run(
      cfg("laplacianize"),
      R"({"basis": [["1","1","-1"],["0","1","-1"]]})");
  CHECK(bad_sum.exit_code == 2);

  CHECK(run(cfg("nonsense"), kBasisDoc).exit_code == 2);

  PipelineConfig bad_delta = cfg("deform");
  bad_delta.delta = Rat(-1);
  CHECK(run(bad_delta, kBasisDoc).exit_code == 2);

  PipelineConfig bad_levels = cfg("deform");
  bad_levels.levels = 0;
  CHECK(run(bad_levels, kBasisDoc).exit_code == 2);

  PipelineConfig bad_field = cfg("resolve");
  bad_field.field = FieldSpec{false, 1};
  CHECK(run(bad_field, kBasisDoc).exit_code == 2);
}

TEST_CASE("version fingerprint pins the deterministic choices") {
  std::string v = version_fingerprint();
  CHECK(v.find("latdeform 1.0.0") != std::string::npos);
  CHECK(v.find("epsilon-rule") != std::string::npos);
  CHECK(v.find("tree-order") != std::string::npos);
}
