#include "nielsen/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace nielsen {

namespace {

using nlohmann::json;

const json& requireField(const json& j, const char* name,
                         const std::string& what) {
  if (!j.is_object())
    throw Error(what + " must be a JSON object with a \"" + name + "\" field");
  auto it = j.find(name);
  if (it == j.end())
    throw Error(what + " is missing the required field \"" + name + "\"");
  return *it;
}

Int intFromJson(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw Error(what + " must be an integer");
  return j.get<Int>();
}

}  // namespace

IntVector intVectorFromJson(const json& j, const std::string& what) {
  if (!j.is_array())
    throw Error(what + " must be an array of integers");
  IntVector v(Index(j.size()));
  for (Index i = 0; i < v.size(); ++i)
    v(i) = intFromJson(j[size_t(i)], what + "[" + std::to_string(i) + "]");
  return v;
}

IntMatrix intMatrixFromJson(const json& j, const std::string& what) {
  if (!j.is_array())
    throw Error(what + " must be an array of integer rows");
  Index rows = Index(j.size());
  Index cols = rows == 0 ? 0 : Index(j[0].size());
  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[size_t(r)];
    if (!row.is_array() || Index(row.size()) != cols)
      throw Error(what + " rows must all be integer arrays of equal length");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = intFromJson(row[size_t(c)], what + "[" + std::to_string(r) +
                                                "][" + std::to_string(c) + "]");
  }
  return m;
}

json toJson(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json toJson(const IntMatrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

FgAbelianGroup groupFromJson(const json& j) {
  const json& factors = requireField(j, "invariant_factors", "group");
  IntVector v = intVectorFromJson(factors, "\"invariant_factors\"");
  std::vector<Int> list(v.begin(), v.end());
  return FgAbelianGroup::fromCyclicFactors(list);
}

json toJson(const FgAbelianGroup& g) {
  return json{{"invariant_factors", g.invariantFactors()},
              {"name", formatGroup(g)}};
}

GroupHom homFromJson(const json& j) {
  FgAbelianGroup domain = groupFromJson(requireField(j, "domain", "hom"));
  FgAbelianGroup codomain = groupFromJson(requireField(j, "codomain", "hom"));
  IntMatrix matrix =
      intMatrixFromJson(requireField(j, "matrix", "hom"), "\"matrix\"");
  // An empty "matrix" array cannot carry the column count; fill it in from
  // the domain so zero-rank codomains round-trip.
  if (matrix.rows() == 0 && codomain.rank() == 0)
    matrix.resize(0, domain.rank());
  return GroupHom(std::move(domain), std::move(codomain), std::move(matrix));
}

json toJson(const GroupHom& h) {
  return json{{"domain", toJson(h.domain())},
              {"codomain", toJson(h.codomain())},
              {"matrix", toJson(h.matrix())}};
}

FiniteGroupTable tableFromJson(const json& j) {
  Int order = intFromJson(requireField(j, "order", "group table"), "\"order\"");
  const json& mult = requireField(j, "mult", "group table");
  IntMatrix wide = intMatrixFromJson(mult, "\"mult\"");
  if (wide.rows() != order || wide.cols() != order)
    throw Error("\"mult\" must be an order x order table (got " +
                std::to_string(wide.rows()) + "x" +
                std::to_string(wide.cols()) + " for order " +
                std::to_string(order) + ")");
  Eigen::MatrixXi table(wide.rows(), wide.cols());
  for (Index r = 0; r < wide.rows(); ++r)
    for (Index c = 0; c < wide.cols(); ++c) {
      Int entry = wide(r, c);
      if (entry < 0 || entry >= order)
        throw Error("\"mult\" entries must index group elements in [0, " +
                    std::to_string(order) + ")");
      table(r, c) = int(entry);
    }
  return FiniteGroupTable(table);
}

json toJson(const FiniteGroupTable& t) {
  json mult = json::array();
  for (Index r = 0; r < t.order(); ++r) {
    json row = json::array();
    for (Index c = 0; c < t.order(); ++c) row.push_back(t.mul(int(r), int(c)));
    mult.push_back(std::move(row));
  }
  return json{{"order", t.order()}, {"mult", std::move(mult)}};
}

std::vector<std::pair<int, int>> imagePairsFromJson(const json& j) {
  if (!j.is_array())
    throw Error("\"pairs\" must be an array of [f1(g), f2(g)] index pairs");
  std::vector<std::pair<int, int>> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    std::string what = "\"pairs\"[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.size() != 2)
      throw Error(what + " must be a two-element integer array");
    out.emplace_back(int(intFromJson(entry[0], what + "[0]")),
                     int(intFromJson(entry[1], what + "[1]")));
  }
  return out;
}

GammaVector gammaVectorFromJson(const json& j, Int m, Int n,
                                const StableStemTable& stems) {
  if (!j.is_object())
    throw Error(
        "degree data must be a JSON object keyed by level "
        "(e.g. {\"1\": [1], \"2\": [0]}) or the string \"zero\"");
  std::map<Int, GroupElement> components;
  for (const auto& [key, value] : j.items()) {
    if (key.empty() ||
        !std::all_of(key.begin(), key.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw Error("degree-data key \"" + key +
                  "\" must be a positive level number");
    Int k = std::stoll(key);
    if (k < 1 || k > levelBound(m, n))
      throw Error("degree-data level " + key + " is outside 1.." +
                  std::to_string(levelBound(m, n)) + " for these dimensions");
    Int degree = stemDegree(m, n, k);
    if (!stems.has(degree))
      throw Error("degree-data level " + key + " lives in stem degree " +
                  std::to_string(degree) +
                  ", which the shipped table does not cover");
    IntVector coords =
        intVectorFromJson(value, "degree-data level " + key + " coordinates");
    components.emplace(k, GroupElement(stems.stem(degree), coords));
  }
  return GammaVector(m, n, components, stems);
}

json toJson(const GammaVector& v) {
  json levels = json::object();
  for (Int k = 1; k <= v.levels(); ++k) {
    if (!v.hasData(k)) continue;
    const GroupElement& elt = v.component(k);
    levels[std::to_string(k)] = json{{"group", formatGroup(elt.group())},
                                     {"coordinates", toJson(elt.coordinates())}};
  }
  return json{{"source_dim", v.sourceDim()},
              {"target_dim", v.targetDim()},
              {"levels", std::move(levels)}};
}

json toJson(const DoublePoint& dp) {
  return json{{"edges", {dp.firstEdge, dp.secondEdge}},
              {"parameters",
               {{{"num", dp.firstParam.num}, {"den", dp.firstParam.den}},
                {{"num", dp.secondParam.num}, {"den", dp.secondParam.den}}}},
              {"first_under", dp.firstUnder},
              {"sign", dp.sign},
              {"location", {dp.location.x(), dp.location.y()}}};
}

json parseArgumentJson(const std::string& argument, const std::string& what) {
  std::string text = argument;
  if (!argument.empty() && argument[0] == '@') {
    std::ifstream in(argument.substr(1));
    if (!in) throw Error("cannot read file for " + what + ": " + argument.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(what + " is not valid JSON: " + e.what());
  }
}

}  // namespace nielsen
