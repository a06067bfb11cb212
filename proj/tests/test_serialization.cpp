#include "nielsen/serialization.hpp"
#include "nielsen/verdict.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "support.hpp"

using namespace nielsen;
using nlohmann::json;
using doctest::Contains;

TEST_CASE("integer vectors and matrices round-trip with field-level errors") {
  IntVector v = intVectorFromJson(json::parse("[3, -1, 0]"), "delta");
  CHECK(v.size() == 3);
  CHECK(v(1) == -1);
  CHECK(toJson(v).dump() == "[3,-1,0]");

  CHECK_THROWS_WITH_AS(intVectorFromJson(json::parse("7"), "delta"),
                       Contains("delta must be an array"), Error);
  CHECK_THROWS_WITH_AS(intVectorFromJson(json::parse("[1, 2.5]"), "delta"),
                       Contains("delta[1] must be an integer"), Error);
  CHECK_THROWS_WITH_AS(intVectorFromJson(json::parse("[1, true]"), "delta"),
                       Contains("delta[1]"), Error);

  IntMatrix m = intMatrixFromJson(json::parse("[[1,2],[3,4],[5,6]]"), "f1");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m(2, 1) == 6);
  CHECK(toJson(m).dump() == "[[1,2],[3,4],[5,6]]");
  CHECK_THROWS_WITH_AS(intMatrixFromJson(json::parse("[[1,2],[3]]"), "f1"),
                       Contains("equal length"), Error);
  CHECK_THROWS_WITH_AS(intMatrixFromJson(json::parse("[[1],[\"x\"]]"), "f1"),
                       Contains("f1[1][0] must be an integer"), Error);
}

TEST_CASE("groups and homomorphisms round-trip through JSON") {
  FgAbelianGroup g =
      groupFromJson(json::parse("{\"invariant_factors\": [2, 4, 0]}"));
  CHECK(g == FgAbelianGroup({2, 4, 0}));
  // Non-canonical cyclic orders are normalized on the way in.
  FgAbelianGroup h =
      groupFromJson(json::parse("{\"invariant_factors\": [4, 2]}"));
  CHECK(h == FgAbelianGroup({2, 4}));
  json gj = toJson(g);
  CHECK(gj["invariant_factors"] == json::parse("[2,4,0]"));
  CHECK(gj["name"] == "Z/2 + Z/4 + Z");
  CHECK_THROWS_WITH_AS(groupFromJson(json::parse("{}")),
                       Contains("invariant_factors"), Error);
  CHECK_THROWS_WITH_AS(groupFromJson(json::parse("[2]")),
                       Contains("must be a JSON object"), Error);

  json homJson = json::parse(R"({
    "domain":   {"invariant_factors": [0, 0]},
    "codomain": {"invariant_factors": [6]},
    "matrix":   [[2, 3]]
  })");
  GroupHom f = homFromJson(homJson);
  CHECK(f.domain() == FgAbelianGroup::freeAbelian(2));
  CHECK(f.codomain() == FgAbelianGroup::cyclic(6));
  CHECK(f.matrix()(0, 1) == 3);
  GroupHom back = homFromJson(toJson(f));
  CHECK(back.matrix() == f.matrix());

  // Trivial codomain: an empty matrix array is accepted.
  json collapse = json::parse(R"({
    "domain":   {"invariant_factors": [5]},
    "codomain": {"invariant_factors": []},
    "matrix":   []
  })");
  CHECK(homFromJson(collapse).codomain().isTrivial());

  CHECK_THROWS_WITH_AS(homFromJson(json::parse("{\"domain\": {}}")),
                       Contains("invariant_factors"), Error);
  // Order violation (torsion into Z) is rejected by construction.
  json bad = json::parse(R"({
    "domain":   {"invariant_factors": [2]},
    "codomain": {"invariant_factors": [0]},
    "matrix":   [[1]]
  })");
  CHECK_THROWS_AS(homFromJson(bad), Error);
}

TEST_CASE("multiplication tables and image pairs round-trip through JSON") {
  FiniteGroupTable z4(testsupport::cyclicTable(4));
  FiniteGroupTable back = tableFromJson(toJson(z4));
  CHECK(back.order() == 4);
  CHECK(back.mul(3, 2) == 1);

  CHECK_THROWS_WITH_AS(
      tableFromJson(json::parse("{\"order\": 3, \"mult\": [[0,1],[1,0]]}")),
      Contains("order x order"), Error);
  CHECK_THROWS_WITH_AS(
      tableFromJson(json::parse("{\"order\": 2, \"mult\": [[0,1],[1,5]]}")),
      Contains("[0, 2)"), Error);
  CHECK_THROWS_WITH_AS(tableFromJson(json::parse("{\"mult\": []}")),
                       Contains("\"order\""), Error);

  auto pairs = imagePairsFromJson(json::parse("[[0, 1], [2, 3]]"));
  CHECK(pairs.size() == 2);
  CHECK(pairs[1] == std::pair<int, int>(2, 3));
  CHECK_THROWS_WITH_AS(imagePairsFromJson(json::parse("[[0, 1, 2]]")),
                       Contains("two-element"), Error);
  CHECK_THROWS_WITH_AS(imagePairsFromJson(json::parse("{\"a\": 1}")),
                       Contains("\"pairs\" must be an array"), Error);
}

TEST_CASE("degree data parses by level against the shipped stem table") {
  static const StableStemTable stems = StableStemTable::loadDefault();

  // Source dimension 3 over the 2-sphere: level 1 sits in Z/2, level 2 in Z.
  GammaVector v = gammaVectorFromJson(json::parse("{\"1\": [1], \"2\": [-2]}"),
                                      3, 2, stems);
  CHECK(v.hasData(1));
  CHECK(v.component(1).coordinates()(0) == 1);
  CHECK(v.component(2).coordinates()(0) == -2);
  CHECK(!v.isZero());

  json out = toJson(v);
  CHECK(out["source_dim"] == 3);
  CHECK(out["target_dim"] == 2);
  CHECK(out["levels"]["1"]["group"] == "Z/2");
  CHECK(out["levels"]["2"]["coordinates"] == json::parse("[-2]"));

  CHECK(gammaVectorFromJson(json::parse("{}"), 9, 5, stems).isZero());

  CHECK_THROWS_WITH_AS(gammaVectorFromJson(json::parse("[1]"), 3, 2, stems),
                       Contains("keyed by level"), Error);
  CHECK_THROWS_WITH_AS(
      gammaVectorFromJson(json::parse("{\"x\": [1]}"), 3, 2, stems),
      Contains("positive level"), Error);
  CHECK_THROWS_WITH_AS(
      gammaVectorFromJson(json::parse("{\"0\": [1]}"), 3, 2, stems),
      Contains("outside 1..2"), Error);
  CHECK_THROWS_WITH_AS(
      gammaVectorFromJson(json::parse("{\"5\": [1]}"), 3, 2, stems),
      Contains("outside"), Error);
  // Source dimension 20 over the 2-sphere reaches stem degrees past the
  // shipped table: explicit data there is refused by name.
  CHECK_THROWS_WITH_AS(
      gammaVectorFromJson(json::parse("{\"10\": [1]}"), 20, 2, stems),
      Contains("does not cover"), Error);
}

TEST_CASE("command-line JSON arguments accept inline text and @file") {
  json inline1 = parseArgumentJson("[2, 4]", "--delta");
  CHECK(inline1 == json::parse("[2,4]"));

  std::string path = "serialization_test_arg.json";
  {
    std::ofstream out(path);
    out << "{\"invariant_factors\": [3]}";
  }
  json fromFile = parseArgumentJson("@" + path, "--group");
  CHECK(fromFile["invariant_factors"][0] == 3);
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(parseArgumentJson("@missing_file.json", "--group"),
                       Contains("cannot read file"), Error);
  CHECK_THROWS_WITH_AS(parseArgumentJson("[2,", "--delta"),
                       Contains("--delta is not valid JSON"), Error);
}

TEST_CASE("verdict documents enforce the tag registry and caveat rule") {
  CHECK(verdictTagRegistry().count("circle_image_gcd") == 1);
  CHECK(verdictTagRegistry().count("torus_grid_oracle") == 1);
  CHECK(verdictTagRegistry().count("made_up_tag") == 0);

  VerdictDocument doc("circle");
  doc.setQuery(json{{"delta", {2, 4}}});
  doc.setResults(json{{"N", 2}, {"MCC", 2}});
  doc.apply("circle_image_gcd");
  doc.apply("circle_wecken");
  doc.apply("circle_image_gcd");  // deduplicated
  CHECK(doc.exitCode() == 0);
  CHECK(doc.applied().size() == 2);

  json j = doc.toJson();
  CHECK(j["command"] == "circle");
  CHECK(j["status"] == "computed");
  CHECK(j["N"] == 2);  // result keys are hoisted to the top level
  CHECK(j["MCC"] == 2);
  CHECK(j["caveats"].empty());
  // nlohmann objects iterate sorted, so the dump is canonical.
  CHECK(j.dump() == doc.toJson().dump());

  VerdictDocument clash("circle");
  clash.setResults(json{{"status", 1}});
  CHECK_THROWS_WITH_AS(clash.toJson(), Contains("collides"), Error);

  std::string text = doc.toText();
  CHECK(text.find("command: circle\n") != std::string::npos);
  CHECK(text.find("N: 2\n") != std::string::npos);
  CHECK(text.find("applied: circle_image_gcd circle_wecken\n") !=
        std::string::npos);
  CHECK(text.find("caveats: none\n") != std::string::npos);

  CHECK_THROWS_WITH_AS(doc.apply("made_up_tag"), Contains("not in the registry"),
                       Error);

  VerdictDocument unknown("sphere");
  unknown.markUnknown();
  CHECK(unknown.exitCode() == 2);
  CHECK_THROWS_WITH_AS(unknown.toJson(), Contains("without a caveat"), Error);
  unknown.caveat("verdict depends on data outside the shipped database");
  CHECK(unknown.toJson()["status"] == "unknown");
  CHECK(unknown.toText().find("caveat: verdict depends") != std::string::npos);
}