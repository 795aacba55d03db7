#pragma once

#include <string>
#include <vector>

#include "pgzero/errors.hpp"
#include "pgzero/grp/families.hpp"
#include "pgzero/io/pcp_file.hpp"

namespace pgzero::io {

/// Builds a group from a --group argument: a family spec, "pcp:<path>", or
/// "product:<spec>,<spec>,..." whose factors may themselves be pcp files.
inline Group resolve_group(const std::string& spec) {
  if (spec.rfind("pcp:", 0) == 0) {
    const std::string path = spec.substr(4);
    if (path.empty()) throw InputError("pcp: missing path");
    return build_from_pcp(parse_pcp(path));
  }
  if (spec.rfind("product:", 0) == 0 && spec.find("pcp:") != std::string::npos) {
    std::vector<Group> factors;
    std::string label = "product:";
    std::size_t start = 8;
    while (start <= spec.size()) {
      auto comma = spec.find(',', start);
      if (comma == std::string::npos) comma = spec.size();
      const std::string part = spec.substr(start, comma - start);
      if (part.empty()) throw InputError("group spec '" + spec + "': empty factor");
      factors.push_back(resolve_group(part));
      label += (factors.size() > 1 ? "," : "") + (part.rfind("pcp:", 0) == 0 ? factors.back().label() : part);
      start = comma + 1;
    }
    return direct_product(factors, label);
  }
  try {
    return build_family(FamilySpec::parse(spec));
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

}  // namespace pgzero::io
