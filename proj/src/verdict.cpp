#include "nielsen/verdict.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace nielsen {

namespace {

using nlohmann::json;

const char* statusName(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Computed: return "computed";
    case VerdictStatus::InvalidInput: return "invalid_input";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "unknown";
}

void flatten(const std::string& prefix, const json& value,
             std::ostringstream& out) {
  if (value.is_object()) {
    if (value.empty()) out << prefix << ": {}\n";
    for (const auto& [key, child] : value.items())
      flatten(prefix.empty() ? key : prefix + "." + key, child, out);
  } else {
    out << prefix << ": " << value.dump() << "\n";
  }
}

}  // namespace

const std::set<std::string>& verdictTagRegistry() {
  static const std::set<std::string> registry = {
      "circle_image_gcd",            // circle Nielsen number = gcd of delta
      "circle_wecken",               // circle MCC equals the Nielsen number
      "circle_looseness_equivalences",
      "lie_group_dichotomy",         // zero-or-everything class count
      "path_space_fiber_structure",  // covering-space description of E(f1,f2)
      "reidemeister_cokernel",       // abelian class set = coker(f1 - f2)
      "twisted_conjugacy_orbits",    // orbit enumeration over a finite table
      "nielsen_class_upper_bound",   // N <= MCC <= #R (target dim != 2)
      "sphere_pairing_difference",   // level obstruction from degree data
      "sphere_nielsen_dichotomy",    // sphere-target Nielsen number is 0 or 1
      "sphere_antipodal_comparison", // looseness via the antipodal composite
      "injectivity_database",        // shipped level-invariant verdict table
      "wecken_stable_range",         // m < 2n-2 forces MCC = N
      "torsion_level_forcing",       // forced 2w = 0 pattern by level parity
      "index_coefficient_character", // Z vs Z/2 index coefficient decision
      "immersion_double_point_count",
      "immersion_rotation_parity",   // rotation vs double-point parity
      "framed_curve_class",          // invariant pair of a framed plane curve
      "torus_grid_oracle",           // brute-force component counting
      "formula_oracle_agreement",    // randomized crosscheck sweep
      "stem_table_lookup",           // stable-stem table access
  };
  return registry;
}

VerdictDocument::VerdictDocument(std::string command)
    : command_(std::move(command)) {}

void VerdictDocument::setQuery(json query) { query_ = std::move(query); }

void VerdictDocument::setResults(json results) {
  if (!results.is_object())
    throw Error("internal error: results must be a JSON object");
  results_ = std::move(results);
}

void VerdictDocument::apply(const std::string& tag) {
  if (verdictTagRegistry().count(tag) == 0)
    throw Error("internal error: operation tag \"" + tag +
                "\" is not in the registry");
  if (std::find(applied_.begin(), applied_.end(), tag) == applied_.end())
    applied_.push_back(tag);
}

void VerdictDocument::caveat(const std::string& note) {
  if (std::find(caveats_.begin(), caveats_.end(), note) == caveats_.end())
    caveats_.push_back(note);
}

void VerdictDocument::markUnknown() { status_ = VerdictStatus::Unknown; }

json VerdictDocument::toJson() const {
  if (status_ == VerdictStatus::Unknown && caveats_.empty())
    throw Error("internal error: unknown verdict without a caveat");
  json out{{"command", command_}, {"query", query_},
           {"applied", applied_}, {"caveats", caveats_},
           {"status", statusName(status_)}};
  // Result keys live at the top level of the document.
  for (const auto& [key, value] : results_.items()) {
    if (out.contains(key))
      throw Error("internal error: result key \"" + key +
                  "\" collides with the report envelope");
    out[key] = value;
  }
  return out;
}

std::string VerdictDocument::toText() const {
  toJson();  // runs the consistency checks
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  out << "status: " << statusName(status_) << "\n";
  flatten("query", query_, out);
  flatten("", results_, out);
  out << "applied:";
  for (const std::string& tag : applied_) out << " " << tag;
  out << "\n";
  if (caveats_.empty()) {
    out << "caveats: none\n";
  } else {
    for (const std::string& note : caveats_) out << "caveat: " << note << "\n";
  }
  return out.str();
}

}  // namespace nielsen
