#include "nielsen/circle.hpp"
#include "nielsen/crosscheck.hpp"
#include "nielsen/gamma.hpp"
#include "nielsen/immersion.hpp"
#include "nielsen/orientation.hpp"
#include "nielsen/reidemeister.hpp"
#include "nielsen/serialization.hpp"
#include "nielsen/stems.hpp"
#include "nielsen/torus_oracle.hpp"
#include "nielsen/verdict.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nielsen::Error;
using nielsen::Int;
using nielsen::VerdictDocument;
using nlohmann::json;

json cardJson(const nielsen::Card& c) {
  return c.finite ? json(c.value) : json("infinite");
}

const char* coefficientName(nielsen::CoefficientGroup g) {
  return g == nielsen::CoefficientGroup::Integers ? "Z" : "Z2";
}

std::vector<int> intTableFromJson(const json& j, const std::string& what,
                                  Int order) {
  nielsen::IntVector v = nielsen::intVectorFromJson(j, what);
  if (v.size() != order)
    throw Error(what + " must list one value per group element (expected " +
                std::to_string(order) + ", got " + std::to_string(v.size()) +
                ")");
  std::vector<int> out(size_t(v.size()), 0);
  for (Eigen::Index i = 0; i < v.size(); ++i) out[size_t(i)] = int(v(i));
  return out;
}

// ---------------------------------------------------------------- circle ---

VerdictDocument runCircle(const std::string& deltaArg) {
  VerdictDocument doc("circle");
  json dj = nielsen::parseArgumentJson(deltaArg, "--delta");
  nielsen::CircleMapPairClass pair =
      dj.is_array()
          ? nielsen::CircleMapPairClass::fromRow(
                nielsen::intVectorFromJson(dj, "--delta"))
          : nielsen::CircleMapPairClass(nielsen::homFromJson(dj));
  doc.setQuery(json{{"delta", dj}});

  nielsen::LoosenessReport loose = nielsen::loosenessReport(pair);
  nielsen::GroupHom zero =
      nielsen::GroupHom::zero(pair.delta().domain(), pair.delta().codomain());
  nielsen::FiberTypeReport fiber = nielsen::fiberType(pair.delta(), zero);

  doc.setResults(json{{"N", loose.nielsen},
                      {"MCC", nielsen::circleMcc(pair)},
                      {"loose", loose.loose},
                      {"homotopic", loose.homotopic},
                      {"class_group", nielsen::formatGroup(fiber.components)},
                      {"class_count", cardJson(fiber.components.order())},
                      {"fiber", fiber.description}});
  doc.apply("circle_image_gcd");
  doc.apply("circle_wecken");
  doc.apply("circle_looseness_equivalences");
  doc.apply("path_space_fiber_structure");
  return doc;
}

// ---------------------------------------------------------------- sphere ---

VerdictDocument runSphere(Int m, Int n, const std::string& d1Arg,
                          const std::string& d2Arg) {
  VerdictDocument doc("sphere");
  const nielsen::StableStemTable stems = nielsen::StableStemTable::loadDefault();
  const nielsen::GammaInjectivityDb db = nielsen::GammaInjectivityDb::loadDefault();

  auto parseDegrees = [&](const std::string& arg, const std::string& name) {
    if (arg == "zero") return nielsen::GammaVector::zero(m, n, stems);
    return nielsen::gammaVectorFromJson(nielsen::parseArgumentJson(arg, name),
                                        m, n, stems);
  };
  nielsen::GammaVector d1 = parseDegrees(d1Arg, "--d1");
  nielsen::GammaVector d2 = parseDegrees(d2Arg, "--d2");
  doc.setQuery(json{{"m", m}, {"n", n}, {"d1", d1Arg}, {"d2", d2Arg}});

  nielsen::MccReport report = nielsen::minimalCoincidenceSpheres(d1, d2, db);

  const char* verdict = "unknown";
  if (report.injectivity.verdict == nielsen::InjectivityVerdict::Injective)
    verdict = "injective";
  if (report.injectivity.verdict == nielsen::InjectivityVerdict::NotInjective)
    verdict = "not_injective";

  doc.setResults(
      json{{"N", report.nielsen},
           {"MCC", report.value ? json(*report.value) : json()},
           {"obstruction", toJson(nielsen::pairingDifference(d1, d2))},
           {"level_injectivity", verdict},
           {"level_injectivity_source", report.injectivity.source},
           {"wecken_range", report.weckenApplies}});

  doc.apply("stem_table_lookup");
  doc.apply("sphere_pairing_difference");
  doc.apply("sphere_nielsen_dichotomy");
  doc.apply("injectivity_database");
  if (report.injectivity.verdict == nielsen::InjectivityVerdict::Injective)
    doc.apply("sphere_antipodal_comparison");
  if (report.weckenApplies) doc.apply("wecken_stable_range");

  for (const std::string& note : report.caveats) doc.caveat(note);
  if (!report.value) doc.markUnknown();
  return doc;
}

// ----------------------------------------------------------- reidemeister ---

VerdictDocument runReidemeister(const std::string& f1Arg,
                                const std::string& f2Arg,
                                const std::string& tableArg,
                                const std::string& pairsArg) {
  VerdictDocument doc("reidemeister");
  const bool tableMode = !tableArg.empty() || !pairsArg.empty();
  if (tableMode) {
    if (tableArg.empty() || pairsArg.empty())
      throw Error("table mode needs both --table and --pairs");
    json tj = nielsen::parseArgumentJson(tableArg, "--table");
    json pj = nielsen::parseArgumentJson(pairsArg, "--pairs");
    nielsen::TwistedConjugacyData data{nielsen::tableFromJson(tj),
                                       nielsen::imagePairsFromJson(pj)};
    for (const auto& [x, y] : data.pairs)
      if (x < 0 || x >= data.group.order() || y < 0 || y >= data.group.order())
        throw Error("\"pairs\" entries must index group elements in [0, " +
                    std::to_string(data.group.order()) + ")");
    doc.setQuery(json{{"table", tj}, {"pairs", pj}});

    nielsen::OrbitPartition orbits = nielsen::reidemeisterOrbits(data);
    doc.setResults(
        json{{"count", orbits.count()},
             {"orbits", orbits.orbits},
             {"upper_bound",
              nielsen::nielsenUpperBound(nielsen::Card::of(orbits.count())).text}});
    doc.apply("twisted_conjugacy_orbits");
  } else {
    if (f1Arg.empty() || f2Arg.empty())
      throw Error("give either --f1 and --f2 (induced homs) or --table and "
                  "--pairs (finite table data)");
    json f1j = nielsen::parseArgumentJson(f1Arg, "--f1");
    json f2j = nielsen::parseArgumentJson(f2Arg, "--f2");
    nielsen::GroupHom f1 = nielsen::homFromJson(f1j);
    nielsen::GroupHom f2 = nielsen::homFromJson(f2j);
    doc.setQuery(json{{"f1", f1j}, {"f2", f2j}});

    nielsen::ReidemeisterAbelian classes = nielsen::reidemeisterAbelian(f1, f2);
    doc.setResults(
        json{{"class_group", nielsen::formatGroup(classes.group)},
             {"count", cardJson(classes.cardinality)},
             {"upper_bound", nielsen::nielsenUpperBound(classes.cardinality).text}});
    doc.apply("reidemeister_cokernel");
  }
  doc.apply("nielsen_class_upper_bound");
  doc.caveat("the class-count upper bound applies only when the target "
             "dimension is not 2");
  return doc;
}

// ------------------------------------------------------------------ index ---

VerdictDocument runIndex(const std::string& f1Arg, const std::string& f2Arg,
                         const std::string& w1mArg, const std::string& w1nArg,
                         const std::string& domainArg,
                         const std::string& targetArg, Int theta) {
  VerdictDocument doc("index");
  const bool tableMode = !domainArg.empty() || !targetArg.empty();
  if (tableMode) {
    if (domainArg.empty() || targetArg.empty())
      throw Error("table mode needs both --table-domain and --table-target");
    json domJson = nielsen::parseArgumentJson(domainArg, "--table-domain");
    json tgtJson = nielsen::parseArgumentJson(targetArg, "--table-target");
    nielsen::FiniteGroupTable domain = nielsen::tableFromJson(domJson);
    nielsen::FiniteGroupTable target = nielsen::tableFromJson(tgtJson);
    json f1j = nielsen::parseArgumentJson(f1Arg, "--f1");
    json f2j = nielsen::parseArgumentJson(f2Arg, "--f2");
    json w1mj = nielsen::parseArgumentJson(w1mArg, "--w1m");
    json w1nj = nielsen::parseArgumentJson(w1nArg, "--w1n");
    nielsen::ClassOrientationData data(
        domain, target, intTableFromJson(f1j, "--f1", domain.order()),
        intTableFromJson(f2j, "--f2", domain.order()),
        intTableFromJson(w1mj, "--w1m", domain.order()),
        intTableFromJson(w1nj, "--w1n", domain.order()));
    doc.setQuery(json{{"table_domain", domJson},
                      {"table_target", tgtJson},
                      {"f1", f1j},
                      {"f2", f2j},
                      {"w1m", w1mj},
                      {"w1n", w1nj},
                      {"theta", theta}});

    if (theta >= 0) {
      nielsen::CoefficientGroup cg =
          nielsen::coefficientGroupClass(data, int(theta));
      doc.setResults(json{{"coefficients", coefficientName(cg)},
                          {"theta", theta}});
    } else {
      nielsen::ClassCoefficientReport report =
          nielsen::classCoefficientDecomposition(data);
      json classes = json::array();
      for (size_t i = 0; i < report.coefficient.size(); ++i)
        classes.push_back(
            json{{"representative", report.orbits.orbits[i].front()},
                 {"elements", report.orbits.orbits[i]},
                 {"coefficients", coefficientName(report.coefficient[i])}});
      doc.setResults(json{{"classes", classes},
                          {"count", report.orbits.count()}});
      doc.apply("twisted_conjugacy_orbits");
    }
  } else {
    json f1j = nielsen::parseArgumentJson(f1Arg, "--f1");
    json f2j = nielsen::parseArgumentJson(f2Arg, "--f2");
    json w1mj = nielsen::parseArgumentJson(w1mArg, "--w1m");
    json w1nj = nielsen::parseArgumentJson(w1nArg, "--w1n");
    nielsen::AbelianOrientationData data(
        nielsen::homFromJson(f1j), nielsen::homFromJson(f2j),
        nielsen::homFromJson(w1mj), nielsen::homFromJson(w1nj));
    doc.setQuery(
        json{{"f1", f1j}, {"f2", f2j}, {"w1m", w1mj}, {"w1n", w1nj}});
    nielsen::CoefficientGroup cg = nielsen::coefficientGroupAbelian(data);
    doc.setResults(json{{"coefficients", coefficientName(cg)}});
  }
  doc.apply("index_coefficient_character");
  return doc;
}

// -------------------------------------------------------------- immersion ---

VerdictDocument runImmersion(const std::string& curvePath) {
  VerdictDocument doc("immersion");
  nielsen::FramedImmersedCurve curve =
      nielsen::FramedImmersedCurve::fromJsonFile(curvePath);
  doc.setQuery(json{{"curve", curvePath}});

  std::vector<nielsen::DoublePoint> points = nielsen::doublePoints(curve);
  json pointList = json::array();
  for (const nielsen::DoublePoint& dp : points)
    pointList.push_back(nielsen::toJson(dp));

  doc.setResults(json{{"h1", nielsen::framedCurveClass(curve)},
                      {"h2", nielsen::signedDoublePointCount(curve)},
                      {"rotation", nielsen::rotationNumber(curve)},
                      {"double_points", pointList},
                      {"double_point_count", Int(points.size())},
                      {"twist", curve.twist()}});
  doc.apply("immersion_double_point_count");
  doc.apply("immersion_rotation_parity");
  doc.apply("framed_curve_class");
  return doc;
}

// ----------------------------------------------------------- oracle-torus ---

VerdictDocument runOracleTorus(const std::string& aArg, const std::string& bArg,
                               Int resolution) {
  VerdictDocument doc("oracle-torus");
  json aj = nielsen::parseArgumentJson(aArg, "--a");
  json bj = nielsen::parseArgumentJson(bArg, "--b");
  nielsen::TorusMapSpec spec;
  spec.a = nielsen::intVectorFromJson(aj, "--a");
  spec.b = nielsen::intVectorFromJson(bj, "--b");
  spec.resolution = resolution;
  doc.setQuery(json{{"a", aj}, {"b", bj}, {"res", resolution}});

  nielsen::OracleReport report = nielsen::stabilizedComponents(spec);
  doc.setResults(json{{"components", report.components},
                      {"coarse_components", report.coarseComponents},
                      {"stabilized", report.stabilized},
                      {"resolution", resolution}});
  doc.apply("torus_grid_oracle");
  if (!report.stabilized)
    doc.caveat("component count changed between resolutions; rerun with a "
               "finer grid");
  return doc;
}

// -------------------------------------------------------------- crosscheck ---

VerdictDocument runCrosscheckTorus(Int trials, std::uint64_t seed,
                                   Int resolution) {
  VerdictDocument doc("crosscheck torus");
  doc.setQuery(json{{"trials", trials}, {"seed", seed}, {"res", resolution}});
  nielsen::TorusCrosscheckReport report =
      nielsen::torusAgainstOracle(trials, seed, resolution);

  json trialList = json::array();
  for (const nielsen::TorusTrialRecord& t : report.trials)
    trialList.push_back(json{{"a", nielsen::toJson(t.a)},
                             {"b", nielsen::toJson(t.b)},
                             {"formula", t.formula},
                             {"oracle", t.oracle.components},
                             {"stabilized", t.oracle.stabilized},
                             {"match", t.match}});
  doc.setResults(json{{"trials", trialList},
                      {"trial_count", Int(report.trials.size())},
                      {"all_match", report.allMatch}});
  doc.apply("formula_oracle_agreement");
  doc.apply("circle_image_gcd");
  doc.apply("torus_grid_oracle");
  return doc;
}

VerdictDocument runCrosscheckReidemeister(Int maxOrder, Int pairsPerGroup,
                                          std::uint64_t seed) {
  VerdictDocument doc("crosscheck reidemeister");
  doc.setQuery(json{{"max_order", maxOrder},
                    {"pairs_per_group", pairsPerGroup},
                    {"seed", seed}});
  nielsen::ClassSetCrosscheckReport report =
      nielsen::orbitsAgainstCokernels(maxOrder, pairsPerGroup, seed);

  json trialList = json::array();
  for (const nielsen::ClassSetTrialRecord& t : report.trials)
    trialList.push_back(json{{"group", t.group},
                             {"orbits", t.orbitCount},
                             {"cokernel", t.cokernelCount},
                             {"match", t.match}});
  doc.setResults(json{{"trials", trialList},
                      {"group_count", report.groupCount},
                      {"trial_count", Int(report.trials.size())},
                      {"all_match", report.allMatch}});
  doc.apply("formula_oracle_agreement");
  doc.apply("twisted_conjugacy_orbits");
  doc.apply("reidemeister_cokernel");
  return doc;
}

// ------------------------------------------------------------------ tables ---

VerdictDocument runTables() {
  VerdictDocument doc("tables");
  const nielsen::StableStemTable stems = nielsen::StableStemTable::loadDefault();
  nielsen::GammaInjectivityDb::loadDefault();  // validates the shipped file

  json stemJson = json::object();
  for (Int k = 0; k <= stems.maxDegree(); ++k) {
    if (!stems.has(k)) continue;
    stemJson[std::to_string(k)] =
        json{{"group", nielsen::formatGroup(stems.stem(k))},
             {"provenance",
              stems.provenance(k) == nielsen::StemProvenance::Certified
                  ? "certified"
                  : "external"}};
  }
  std::ostringstream checksum;
  checksum << std::hex << stems.checksum();

  doc.setResults(json{{"stems", stemJson},
                      {"max_degree", stems.maxDegree()},
                      {"stem_checksum", checksum.str()},
                      {"data_dir", nielsen::dataDirectory()},
                      {"injectivity_db", "gamma_db.json"}});
  doc.apply("stem_table_lookup");
  doc.apply("injectivity_database");
  doc.caveat("stem entries marked external are transcribed from published "
             "tables, not certified by this library's validation suite");
  return doc;
}

// ------------------------------------------------------------------- main ---

int emitDocument(const VerdictDocument& doc, const std::string& format) {
  if (format == "text")
    std::cout << doc.toText();
  else
    std::cout << doc.toJson().dump(2) << "\n";
  return doc.exitCode();
}

int emitInvalid(const std::string& format, const std::string& message) {
  if (format == "text")
    std::cout << "error: " << message << "\n";
  else
    std::cout << json{{"error", message}, {"status", "invalid_input"}}.dump(2)
              << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence-count calculator: class counts, minimal "
               "coincidence numbers, and looseness verdicts for circle and "
               "sphere targets, with brute-force oracles"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* circle = app.add_subcommand(
      "circle", "class count and minimal coincidence count over the circle");
  std::string deltaArg;
  circle->add_option("--delta", deltaArg,
                     "difference row [d1,...,dm] or hom object (@file to "
                     "read a file)")
      ->required();
  circle->fallthrough();

  auto* sphere = app.add_subcommand(
      "sphere", "looseness and minimal coincidence count over a sphere");
  Int sphereM = 0, sphereN = 0;
  std::string d1Arg = "zero", d2Arg = "zero";
  sphere->add_option("--m", sphereM, "source manifold dimension")->required();
  sphere->add_option("--n", sphereN, "target sphere dimension")->required();
  sphere->add_option("--d1", d1Arg,
                     "degree data of the first map: \"zero\" or an object "
                     "keyed by level");
  sphere->add_option("--d2", d2Arg, "degree data of the second map");
  sphere->fallthrough();

  auto* reid = app.add_subcommand(
      "reidemeister", "class set of a map pair: cokernel or orbit form");
  std::string reidF1, reidF2, reidTable, reidPairs;
  reid->add_option("--f1", reidF1, "first induced hom (abelian mode)");
  reid->add_option("--f2", reidF2, "second induced hom (abelian mode)");
  reid->add_option("--table", reidTable, "target multiplication table");
  reid->add_option("--pairs", reidPairs,
                   "generator image pairs [[f1(g), f2(g)], ...]");
  reid->fallthrough();

  auto* index = app.add_subcommand(
      "index", "coefficient group carrying the coincidence index: Z or Z/2");
  std::string idxF1, idxF2, idxW1m, idxW1n, idxDomain, idxTarget;
  Int idxTheta = -1;
  index->add_option("--f1", idxF1, "first induced hom or image table")
      ->required();
  index->add_option("--f2", idxF2, "second induced hom or image table")
      ->required();
  index->add_option("--w1m", idxW1m, "source orientation character")
      ->required();
  index->add_option("--w1n", idxW1n, "pulled-back target orientation character")
      ->required();
  index->add_option("--table-domain", idxDomain,
                    "source group table (table mode)");
  index->add_option("--table-target", idxTarget,
                    "target group table (table mode)");
  index->add_option("--theta", idxTheta,
                    "single class representative (table mode; default: all)");
  index->fallthrough();

  auto* immersion = app.add_subcommand(
      "immersion", "invariants of a framed immersed plane curve");
  std::string curvePath;
  immersion->add_option("--curve", curvePath, "curve description file (JSON)")
      ->required();
  immersion->fallthrough();

  auto* oracle = app.add_subcommand(
      "oracle-torus", "brute-force coincidence components on a torus grid");
  std::string oracleA, oracleB;
  Int oracleRes = 256;
  oracle->add_option("--a", oracleA, "first coefficient row")->required();
  oracle->add_option("--b", oracleB, "second coefficient row")->required();
  oracle->add_option("--res", oracleRes, "grid resolution (power of two)");
  oracle->fallthrough();

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "randomized agreement sweeps: formulas vs oracles");
  crosscheck->require_subcommand(1);
  crosscheck->fallthrough();
  auto* ccTorus = crosscheck->add_subcommand(
      "torus", "closed-form class count vs grid component count");
  Int ccTrials = 20, ccRes = 512;
  std::uint64_t ccSeed = 20260814;
  ccTorus->add_option("--trials", ccTrials, "number of random map pairs");
  ccTorus->add_option("--seed", ccSeed, "random seed");
  ccTorus->add_option("--res", ccRes, "grid resolution (power of two)");
  ccTorus->fallthrough();
  auto* ccReid = crosscheck->add_subcommand(
      "reidemeister", "orbit enumeration vs cokernel cardinality");
  Int ccMaxOrder = 24, ccPairs = 10;
  std::uint64_t ccReidSeed = 20260814;
  ccReid->add_option("--max-order", ccMaxOrder,
                     "sweep all finite abelian groups up to this order");
  ccReid->add_option("--pairs-per-group", ccPairs,
                     "random endomorphism pairs per group");
  ccReid->add_option("--seed", ccReidSeed, "random seed");
  ccReid->fallthrough();

  auto* tables = app.add_subcommand(
      "tables", "shipped data tables: stems, checksums, database files");
  tables->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emitInvalid(format, std::string("argument error: ") + e.what());
  }

  try {
    VerdictDocument doc("");
    if (*circle)
      doc = runCircle(deltaArg);
    else if (*sphere)
      doc = runSphere(sphereM, sphereN, d1Arg, d2Arg);
    else if (*reid)
      doc = runReidemeister(reidF1, reidF2, reidTable, reidPairs);
    else if (*index)
      doc = runIndex(idxF1, idxF2, idxW1m, idxW1n, idxDomain, idxTarget,
                     idxTheta);
    else if (*immersion)
      doc = runImmersion(curvePath);
    else if (*oracle)
      doc = runOracleTorus(oracleA, oracleB, oracleRes);
    else if (*ccTorus)
      doc = runCrosscheckTorus(ccTrials, ccSeed, ccRes);
    else if (*ccReid)
      doc = runCrosscheckReidemeister(ccMaxOrder, ccPairs, ccReidSeed);
    else if (*tables)
      doc = runTables();
    else
      return emitInvalid(format, "no subcommand selected");
    return emitDocument(doc, format);
  } catch (const Error& e) {
    return emitInvalid(format, e.what());
  }
}
