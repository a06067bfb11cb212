#include "nielsen/stems.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nielsen {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string dataDirectory() {
  if (const char* dir = std::getenv("NIELSEN_DATA_DIR")) return dir;
  return NIELSEN_DEFAULT_DATA_DIR;
}

StableStemTable::StableStemTable(std::map<Int, FgAbelianGroup> entries,
                                 std::map<Int, StemProvenance> provenance)
    : entries_(std::move(entries)), provenance_(std::move(provenance)) {
  for (const auto& [k, g] : entries_) {
    if (k < 0) throw Error("stem degrees must be nonnegative");
    if (provenance_.count(k) == 0)
      throw Error("stem entry " + std::to_string(k) + " lacks provenance");
  }
  for (const auto& [k, p] : provenance_)
    if (entries_.count(k) == 0)
      throw Error("provenance for missing stem entry " + std::to_string(k));
  if (!has(0) || stem(0) != FgAbelianGroup::integers())
    throw Error("stem table must contain Z in degree 0");
  if (!has(3) || stem(3) != FgAbelianGroup::cyclic(24))
    throw Error("stem table must contain Z/24 in degree 3");
}

const FgAbelianGroup& StableStemTable::stem(Int k) const {
  auto it = entries_.find(k);
  if (it == entries_.end())
    throw Error("no stem data for degree " + std::to_string(k));
  return it->second;
}

StemProvenance StableStemTable::provenance(Int k) const {
  auto it = provenance_.find(k);
  if (it == provenance_.end())
    throw Error("no stem data for degree " + std::to_string(k));
  return it->second;
}

Int StableStemTable::maxDegree() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first;
}

std::string StableStemTable::canonicalText() const {
  std::ostringstream out;
  for (const auto& [k, g] : entries_) {
    out << k << "=[";
    const auto& f = g.invariantFactors();
    for (size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << "];";
  }
  return out.str();
}

std::uint64_t StableStemTable::checksum() const {
  return fnv1a64(canonicalText());
}

StableStemTable StableStemTable::fromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("stems file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("stems") || !doc["stems"].is_object())
    throw Error("stems file must be an object with a \"stems\" map");

  std::map<Int, FgAbelianGroup> entries;
  std::map<Int, StemProvenance> provenance;
  for (const auto& [key, value] : doc["stems"].items()) {
    Int k;
    try {
      k = std::stoll(key);
    } catch (const std::exception&) {
      throw Error("stems key is not an integer: " + key);
    }
    if (!value.is_array())
      throw Error("stems entry " + key + " must be a factor list");
    std::vector<Int> factors;
    for (const auto& f : value) {
      if (!f.is_number_integer())
        throw Error("stems entry " + key + " has a non-integer factor");
      factors.push_back(f.get<Int>());
    }
    entries.emplace(k, FgAbelianGroup(std::move(factors)));
    provenance.emplace(k, StemProvenance::External);
  }

  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_object())
      throw Error("stems provenance must be a map");
    for (const auto& [key, value] : doc["provenance"].items()) {
      Int k = std::stoll(key);
      std::string tag = value.get<std::string>();
      if (tag == "certified")
        provenance[k] = StemProvenance::Certified;
      else if (tag == "external")
        provenance[k] = StemProvenance::External;
      else
        throw Error("unknown stem provenance tag: " + tag);
    }
  }

  StableStemTable table(std::move(entries), std::move(provenance));

  if (!doc.contains("checksum_fnv1a64"))
    throw Error("stems file lacks its checksum field");
  std::uint64_t expected =
      std::stoull(doc["checksum_fnv1a64"].get<std::string>(), nullptr, 16);
  if (expected != table.checksum())
    throw Error("stems file failed its checksum; refusing corrupted data");
  return table;
}

StableStemTable StableStemTable::fromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stems file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromJsonText(buf.str());
}

StableStemTable StableStemTable::loadDefault() {
  return fromJsonFile(dataDirectory() + "/stems.json");
}

}  // namespace nielsen
