#pragma once

#include "nielsen/abelian.hpp"
#include "nielsen/finite_group.hpp"
#include "nielsen/gamma.hpp"
#include "nielsen/immersion.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace nielsen {

/// JSON boundary for the calculator types. Readers throw Error naming the
/// offending field; writers produce canonical forms (nlohmann objects keep
/// keys sorted, so rendered output is reproducible byte for byte).

IntVector intVectorFromJson(const nlohmann::json& j, const std::string& what);
IntMatrix intMatrixFromJson(const nlohmann::json& j, const std::string& what);
nlohmann::json toJson(const IntVector& v);
nlohmann::json toJson(const IntMatrix& m);

/// {"invariant_factors": [2, 4, 0]}
FgAbelianGroup groupFromJson(const nlohmann::json& j);
nlohmann::json toJson(const FgAbelianGroup& g);

/// {"domain": {...}, "codomain": {...}, "matrix": [[...], ...]}
GroupHom homFromJson(const nlohmann::json& j);
nlohmann::json toJson(const GroupHom& h);

/// {"order": 6, "mult": [[...], ...]}
FiniteGroupTable tableFromJson(const nlohmann::json& j);
nlohmann::json toJson(const FiniteGroupTable& t);

/// [[a1, b1], [a2, b2], ...] image pairs for twisted-conjugacy input
std::vector<std::pair<int, int>> imagePairsFromJson(const nlohmann::json& j);

/// Degree data: either the string "zero" or {"1": [coords], "2": [coords]}
/// keyed by level.
GammaVector gammaVectorFromJson(const nlohmann::json& j, Int m, Int n,
                                const StableStemTable& stems);
nlohmann::json toJson(const GammaVector& v);

nlohmann::json toJson(const DoublePoint& dp);

/// Parses JSON from a command-line argument; a leading '@' names a file to
/// read instead.
nlohmann::json parseArgumentJson(const std::string& argument,
                                 const std::string& what);

}  // namespace nielsen
