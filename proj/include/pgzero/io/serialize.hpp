#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgzero/chartab/table.hpp"
#include "pgzero/cyclo/cycint.hpp"
#include "pgzero/errors.hpp"
#include "pgzero/zeros/profile.hpp"
#include "pgzero/zeros/reports.hpp"

namespace pgzero::io {

using nlohmann::json;

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline json to_json(const CycInt& v) {
  json c = json::array();
  for (const auto& x : v.coeffs()) c.push_back(x.str());
  return json{{"e", v.conductor()}, {"c", c}};
}

inline CycInt cycint_from_json(const json& j) {
  if (!j.is_object() || !j.contains("e") || !j.contains("c") || j.size() != 2)
    throw InputError("cyclotomic value: expected {\"e\": ..., \"c\": [...]}");
  const auto e = j["e"].get<unsigned>();
  if (e == 0) throw InputError("cyclotomic value: conductor must be positive");
  CycInt v(e);
  const auto& c = j["c"];
  if (!c.is_array() || c.size() != v.coeffs().size())
    throw InputError("cyclotomic value: expected " + std::to_string(v.coeffs().size()) + " coefficients");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_string()) throw InputError("cyclotomic value: coefficients are decimal strings");
    Integer x;
    try {
      x = Integer(c[i].get<std::string>());
    } catch (const std::exception&) {
      throw InputError("cyclotomic value: bad integer '" + c[i].get<std::string>() + "'");
    }
    if (x != 0) v.add_monomial(i, x);
  }
  return v;
}

/// Human-readable polynomial in z = exp(2 pi i / e), e.g. "-1-z" or "2*z^3".
inline std::string to_text(const CycInt& v) {
  std::string out;
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer mag = c[i] < 0 ? Integer(-c[i]) : c[i];
    std::string term;
    if (i == 0)
      term = mag.str();
    else {
      if (mag != 1) term = mag.str() + "*";
      term += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    if (c[i] < 0)
      out += "-" + term;
    else
      out += (out.empty() ? "" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

inline json table_to_json(const CharacterTable& t) {
  const auto& cd = *t.classes;
  json classes = json::array();
  for (std::size_t c = 0; c < cd.count(); ++c)
    classes.push_back({{"id", c},
                       {"size", cd.sizes[c]},
                       {"element_order", cd.rep_orders[c]},
                       {"centralizer_order", cd.centralizer_orders[c]},
                       {"inverse_class", cd.inverse_class[c]}});
  json chars = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    json values = json::array();
    for (const auto& v : t.values[r]) values.push_back(to_json(v));
    chars.push_back({{"id", r},
                     {"degree", t.degrees[r]},
                     {"faithful", static_cast<bool>(t.faithful[r])},
                     {"kernel_order", t.kernel_orders[r]},
                     {"values", values}});
  }
  return json{{"group", t.group().label()},
              {"order", t.group().order()},
              {"exponent", t.exponent},
              {"modular_prime", t.modular_prime},
              {"classes", classes},
              {"characters", chars}};
}

inline std::string table_to_csv(const CharacterTable& t) {
  const auto& cd = *t.classes;
  std::ostringstream os;
  os << "char_id,degree,faithful";
  for (std::size_t c = 0; c < cd.count(); ++c) os << ",class_" << c;
  os << "\n";
  os << "#size,,";
  for (std::size_t c = 0; c < cd.count(); ++c) os << "," << cd.sizes[c];
  os << "\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << r << "," << t.degrees[r] << "," << (t.faithful[r] ? "true" : "false");
    for (const auto& v : t.values[r]) os << "," << to_text(v);
    os << "\n";
  }
  return os.str();
}

/// One line of scan output: a character of a group with its counts.
struct ResultRecord {
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t prime = 0;  // 0 when the group is not a p-group
  unsigned n = 0;
  std::size_t char_id = 0;
  std::uint64_t degree = 0;
  bool faithful = false;
  std::uint64_t zero_elements = 0;
  std::size_t zero_classes = 0;
  std::uint64_t root_of_unity_elements = 0;
  std::string miller_numerator;
  std::string miller_denominator;
  std::vector<std::string> flags;
};

inline std::vector<ResultRecord> records_for(const AnalyzedGroup& a) {
  std::vector<ResultRecord> out;
  const auto pp = as_prime_power(a.group().order());
  for (const auto& z : a.profiles) {
    ResultRecord rec;
    rec.group = a.label();
    rec.order = a.group().order();
    if (pp) {
      rec.prime = pp->prime;
      rec.n = pp->exponent;
    }
    rec.char_id = z.character;
    rec.degree = z.degree;
    rec.faithful = z.faithful;
    rec.zero_elements = z.zero_elements;
    rec.zero_classes = z.zero_classes;
    rec.root_of_unity_elements = z.root_of_unity_elements;
    const Rational q = miller_proportion(a.table, z);
    rec.miller_numerator = numerator(q).str();
    rec.miller_denominator = denominator(q).str();
    if (z.degree == 1) rec.flags.push_back("linear");
    if (pp && z.degree > 1 && rec.n >= 2) {
      const auto bound = zero_bound(pp->prime, pp->exponent);
      if (z.zero_elements == bound) rec.flags.push_back("attains_bound");
      if (z.zero_elements < bound) rec.flags.push_back("below_bound");
    }
    if (q < Rational(1, 2)) rec.flags.push_back("miller_below_half");
    out.push_back(std::move(rec));
  }
  return out;
}

inline json to_json(const ResultRecord& r) {
  return json{{"group", r.group},
              {"order", r.order},
              {"prime", r.prime == 0 ? json(nullptr) : json(r.prime)},
              {"n", r.prime == 0 ? json(nullptr) : json(r.n)},
              {"char_id", r.char_id},
              {"degree", r.degree},
              {"faithful", r.faithful},
              {"zero_elements", r.zero_elements},
              {"zero_classes", r.zero_classes},
              {"root_of_unity_elements", r.root_of_unity_elements},
              {"miller_numerator", r.miller_numerator},
              {"miller_denominator", r.miller_denominator},
              {"flags", r.flags}};
}

inline ResultRecord record_from_json(const json& j) {
  static const std::set<std::string> keys{"group",          "order",         "prime",
                                          "n",              "char_id",       "degree",
                                          "faithful",       "zero_elements", "zero_classes",
                                          "root_of_unity_elements", "miller_numerator", "miller_denominator",
                                          "flags"};
  if (!j.is_object()) throw InputError("record: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key())) throw InputError("record: unknown key " + it.key());
  for (const auto& k : keys)
    if (!j.contains(k)) throw InputError("record: missing key " + k);
  try {
    ResultRecord r;
    r.group = j["group"].get<std::string>();
    r.order = j["order"].get<std::uint64_t>();
    r.prime = j["prime"].is_null() ? 0 : j["prime"].get<std::uint64_t>();
    r.n = j["n"].is_null() ? 0 : j["n"].get<unsigned>();
    r.char_id = j["char_id"].get<std::size_t>();
    r.degree = j["degree"].get<std::uint64_t>();
    r.faithful = j["faithful"].get<bool>();
    r.zero_elements = j["zero_elements"].get<std::uint64_t>();
    r.zero_classes = j["zero_classes"].get<std::size_t>();
    r.root_of_unity_elements = j["root_of_unity_elements"].get<std::uint64_t>();
    r.miller_numerator = j["miller_numerator"].get<std::string>();
    r.miller_denominator = j["miller_denominator"].get<std::string>();
    r.flags = j["flags"].get<std::vector<std::string>>();
    if (r.zero_elements > r.order || r.root_of_unity_elements > r.order)
      throw InputError("record: counts exceed the group order");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("record: ") + e.what());
  }
}

inline std::string records_csv_header() {
  return "group,order,prime,n,char_id,degree,faithful,zero_elements,zero_classes,root_of_unity_elements,"
         "miller_numerator,miller_denominator,flags\n";
}

inline std::string to_csv(const ResultRecord& r) {
  std::ostringstream os;
  std::string flags;
  for (std::size_t i = 0; i < r.flags.size(); ++i) flags += (i ? ";" : "") + r.flags[i];
  os << csv_quote(r.group) << "," << r.order << "," << (r.prime ? std::to_string(r.prime) : "") << ","
     << (r.prime ? std::to_string(r.n) : "") << "," << r.char_id << "," << r.degree << ","
     << (r.faithful ? "true" : "false") << "," << r.zero_elements << "," << r.zero_classes << ","
     << r.root_of_unity_elements << "," << r.miller_numerator << "," << r.miller_denominator << "," << flags << "\n";
  return os.str();
}

inline json to_json(const VerificationReport& r) {
  json w = json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  return json{{"statement", to_string(r.statement)},
              {"group", r.group},
              {"status", to_string(r.status)},
              {"witness", w},
              {"notes", r.notes}};
}

inline std::string report_csv_header() { return "statement,group,status,witness,notes\n"; }

inline std::string to_csv(const VerificationReport& r) {
  std::string w, n;
  for (std::size_t i = 0; i < r.witness.size(); ++i) w += (i ? ";" : "") + r.witness[i].first + "=" + r.witness[i].second;
  for (std::size_t i = 0; i < r.notes.size(); ++i) n += (i ? ";" : "") + r.notes[i];
  return std::string(to_string(r.statement)) + "," + csv_quote(r.group) + "," + to_string(r.status) + "," + csv_quote(w) +
         "," + csv_quote(n) + "\n";
}

}  // namespace pgzero::io
