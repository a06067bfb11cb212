#pragma once

#include "nielsen/abelian.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace nielsen {

/// Whether a stem entry is pinned by this library's own validation suite or
/// merely relayed from the published tables it was transcribed from.
enum class StemProvenance { Certified, External };

/// Read-only table of the low-degree stable homotopy groups of spheres,
/// shipped as a checksummed data file. Degree 0 must be Z and degree 3 must
/// be Z/24; loading fails loudly if the file disagrees with its checksum.
class StableStemTable {
 public:
  StableStemTable(std::map<Int, FgAbelianGroup> entries,
                  std::map<Int, StemProvenance> provenance);

  /// Reads <data dir>/stems.json; the directory comes from the
  /// NIELSEN_DATA_DIR environment variable when set, else the build default.
  static StableStemTable loadDefault();
  static StableStemTable fromJsonFile(const std::string& path);
  static StableStemTable fromJsonText(const std::string& text);

  bool has(Int k) const { return entries_.count(k) != 0; }
  const FgAbelianGroup& stem(Int k) const;
  StemProvenance provenance(Int k) const;
  Int maxDegree() const;

  /// Canonical "k=[f1,f2];" serialization, ascending k; checksum input.
  std::string canonicalText() const;
  std::uint64_t checksum() const;  // FNV-1a 64 over canonicalText()

 private:
  std::map<Int, FgAbelianGroup> entries_;
  std::map<Int, StemProvenance> provenance_;
};

/// FNV-1a 64-bit hash; used to pin shipped data files.
std::uint64_t fnv1a64(const std::string& text);

/// Directory the default data files are read from (environment override or
/// the build-time default).
std::string dataDirectory();

}  // namespace nielsen
