#pragma once

#include "nielsen/core.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <vector>

namespace nielsen {

/// Outcome classes the command-line front end maps to process exit codes:
/// 0 = computed, 1 = invalid input, 2 = the requested verdict is unknown.
enum class VerdictStatus { Computed = 0, InvalidInput = 1, Unknown = 2 };

/// Fixed registry of the operation tags a verdict may cite. Every tag names
/// an operation implemented and tested in this library; citing anything else
/// is a programming error and throws.
const std::set<std::string>& verdictTagRegistry();

/// Structured result document rendered by the CLI: the echoed query, the
/// computed results, the operations applied, and caveats. Rendering enforces
/// that an unknown verdict always carries at least one caveat.
class VerdictDocument {
 public:
  explicit VerdictDocument(std::string command);

  void setQuery(nlohmann::json query);
  void setResults(nlohmann::json results);
  void apply(const std::string& tag);  // must be in the registry
  void caveat(const std::string& note);
  void markUnknown();

  VerdictStatus status() const { return status_; }
  int exitCode() const { return int(status_); }
  const std::vector<std::string>& applied() const { return applied_; }
  const std::vector<std::string>& caveats() const { return caveats_; }

  nlohmann::json toJson() const;  // keys sorted; byte-reproducible
  std::string toText() const;     // flat "key: value" rendering

 private:
  std::string command_;
  nlohmann::json query_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  std::vector<std::string> applied_;
  std::vector<std::string> caveats_;
  VerdictStatus status_ = VerdictStatus::Computed;
};

}  // namespace nielsen
