#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgzero/errors.hpp"
#include "pgzero/grp/families.hpp"
#include "pgzero/io/pcp_file.hpp"
#include "pgzero/io/serialize.hpp"
#include "pgzero/util/parallel.hpp"
#include "pgzero/zeros/profile.hpp"

namespace pgzero::io {

/// *.json files of a directory, sorted by file name.
inline std::vector<std::filesystem::path> list_pcp_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// Groups of every presentation file in dir, sorted by label. Labels must be
/// unique.
inline std::vector<Group> load_catalog(const std::filesystem::path& dir) {
  std::vector<Group> out;
  std::set<std::string> labels;
  for (const auto& path : list_pcp_files(dir)) {
    auto G = build_from_pcp(parse_pcp(path));
    if (!labels.insert(G.label()).second) throw InputError(path.string() + ": duplicate label " + G.label());
    out.push_back(std::move(G));
  }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) { return a.label() < b.label(); });
  return out;
}

/// Parallel over groups; each analysis is single-threaded. Order preserved.
inline std::vector<AnalyzedGroup> analyze_all(const std::vector<Group>& groups, unsigned jobs = 1) {
  std::vector<std::optional<AnalyzedGroup>> slots(groups.size());
  parallel_for(groups.size(), jobs, [&](std::size_t i) { slots[i] = analyze(groups[i], 1); });
  std::vector<AnalyzedGroup> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Reads a JSON-lines result file; a missing file yields no records.
inline std::vector<ResultRecord> read_records(const std::filesystem::path& path) {
  std::vector<ResultRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// mz per order computed from scan records.
struct OrderSummary {
  std::uint64_t order = 0;
  std::uint64_t prime = 0;
  unsigned n = 0;
  std::size_t groups = 0;
  std::size_t nonabelian = 0;
  std::optional<std::uint64_t> mz;
  std::vector<std::string> attained_by;
  std::optional<std::uint64_t> bound;
};

inline std::map<std::uint64_t, OrderSummary> summarize(const std::vector<ResultRecord>& records) {
  std::map<std::uint64_t, std::map<std::string, std::optional<std::uint64_t>>> per_group;
  std::map<std::uint64_t, OrderSummary> out;
  for (const auto& r : records) {
    auto& s = out[r.order];
    s.order = r.order;
    s.prime = r.prime;
    s.n = r.n;
    auto& g = per_group[r.order][r.group];
    if (r.degree > 1 && (!g || r.zero_elements < *g)) g = r.zero_elements;
  }
  for (auto& [order, groups] : per_group) {
    auto& s = out[order];
    s.groups = groups.size();
    for (const auto& [label, value] : groups) {
      if (!value) continue;
      ++s.nonabelian;
      if (!s.mz || *value < *s.mz) {
        s.mz = value;
        s.attained_by.clear();
      }
      if (*value == *s.mz) s.attained_by.push_back(label);
    }
    if (s.prime && s.n >= 2) s.bound = zero_bound(s.prime, s.n);
  }
  return out;
}

}  // namespace pgzero::io
