#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pgzero/errors.hpp"
#include "pgzero/grp/pc_presentation.hpp"
#include "pgzero/util/numeric.hpp"

namespace pgzero::io {

using nlohmann::json;

namespace detail {

inline std::uint64_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw InputError(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

inline std::size_t parse_index(const std::string& s, const std::string& where) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError(where + ": malformed generator index '" + s + "'");
  const auto v = std::stoul(s);
  if (v == 0) throw InputError(where + ": generator indices start at 1");
  return v - 1;
}

inline ExponentVector parse_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an exponent vector");
  ExponentVector out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto x = as_count(v[k], where + "/" + std::to_string(k + 1));
    if (x > 0xffffffffu) throw InputError(where + "/" + std::to_string(k + 1) + ": exponent out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

}  // namespace detail

/// Reads a presentation from JSON text. Keys of "powers" are "i" and keys of
/// "commutators" are "j,i", both 1-based; unknown keys are rejected.
inline PcPresentation parse_pcp_text(const std::string& text, const std::string& default_label = "pcp") {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const char* allowed[] = {"prime", "ngens", "rel_orders", "powers", "commutators", "label"};
    if (std::find(std::begin(allowed), std::end(allowed), it.key()) == std::end(allowed))
      throw InputError(it.key() + ": unknown key");
  }
  for (const char* key : {"prime", "ngens", "rel_orders"})
    if (!doc.contains(key)) throw InputError(std::string(key) + ": missing");

  PcPresentation p;
  p.prime = detail::as_count(doc["prime"], "prime");
  if (!is_prime(p.prime)) throw InputError("prime: " + std::to_string(p.prime) + " is not prime");
  p.ngens = detail::as_count(doc["ngens"], "ngens");
  if (p.ngens == 0 || p.ngens > 64) throw InputError("ngens: must be between 1 and 64");
  const auto& ro = doc["rel_orders"];
  if (!ro.is_array()) throw InputError("rel_orders: expected an array");
  for (std::size_t k = 0; k < ro.size(); ++k) {
    const auto v = detail::as_count(ro[k], "rel_orders/" + std::to_string(k + 1));
    if (!is_prime(v)) throw InputError("rel_orders/" + std::to_string(k + 1) + ": relative order must be prime");
    p.rel_orders.push_back(static_cast<std::uint32_t>(v));
  }
  if (doc.contains("powers")) {
    const auto& pw = doc["powers"];
    if (!pw.is_object()) throw InputError("powers: expected an object");
    for (auto it = pw.begin(); it != pw.end(); ++it) {
      const std::string where = "powers/" + it.key();
      p.powers[detail::parse_index(it.key(), where)] = detail::parse_vector(it.value(), where);
    }
  }
  if (doc.contains("commutators")) {
    const auto& cm = doc["commutators"];
    if (!cm.is_object()) throw InputError("commutators: expected an object");
    for (auto it = cm.begin(); it != cm.end(); ++it) {
      const std::string where = "commutators/" + it.key();
      const auto comma = it.key().find(',');
      if (comma == std::string::npos) throw InputError(where + ": key must have the form \"j,i\"");
      const auto j = detail::parse_index(it.key().substr(0, comma), where);
      const auto i = detail::parse_index(it.key().substr(comma + 1), where);
      if (j <= i) throw InputError(where + ": requires j > i");
      p.commutators[{j, i}] = detail::parse_vector(it.value(), where);
    }
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError("label: expected a string");
    p.label = doc["label"].get<std::string>();
  } else {
    p.label = default_label;
  }
  validate(p);
  return p;
}

inline PcPresentation parse_pcp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_pcp_text(ss.str(), path.stem().string());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

/// Canonical form: sorted keys, trivial relations omitted, two-space indent,
/// trailing newline.
inline json to_json(const PcPresentation& p) {
  json doc;
  doc["prime"] = p.prime;
  doc["ngens"] = p.ngens;
  doc["rel_orders"] = p.rel_orders;
  auto trivial = [](const ExponentVector& w) { return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; }); };
  json powers = json::object();
  for (const auto& [i, w] : p.powers)
    if (!trivial(w)) powers[std::to_string(i + 1)] = w;
  json comms = json::object();
  for (const auto& [key, w] : p.commutators)
    if (!trivial(w)) comms[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = w;
  doc["powers"] = powers;
  doc["commutators"] = comms;
  doc["label"] = p.label;
  return doc;
}

inline std::string serialize_pcp(const PcPresentation& p) { return to_json(p).dump(2) + "\n"; }

}  // namespace pgzero::io
