#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgzero/pgzero.hpp"

namespace {

using namespace pgzero;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  std::string out = "json";
  bool out_given = false;
  std::string out_file;
  unsigned jobs = 1;
  std::vector<std::string> groups;
  std::string catalog;
  std::string statement;
  std::uint64_t prime = 0;
  std::string scan_dir;
  std::vector<std::string> results;
};

void emit(const Options& o, const std::string& text, bool append = false) {
  if (o.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_file, append ? std::ios::app : std::ios::trunc);
  if (!f) throw InputError(o.out_file + ": cannot open for writing");
  f << text;
}

std::vector<Group> collect_groups(const Options& o) {
  std::vector<Group> gs;
  for (const auto& g : o.groups) gs.push_back(io::resolve_group(g));
  if (!o.catalog.empty())
    for (auto& g : io::load_catalog(o.catalog)) gs.push_back(std::move(g));
  if (gs.empty()) throw InputError("no group given (use --group or --catalog)");
  return gs;
}

void print_witness(const VerificationReport& r) {
  std::cerr << "pgzero: verification " << to_string(r.status) << ": " << to_string(r.statement) << " " << r.group;
  for (const auto& [k, v] : r.witness) std::cerr << " " << k << "=" << v;
  for (const auto& n : r.notes) std::cerr << " [" << n << "]";
  std::cerr << "\n";
}

int cmd_table(const Options& o) {
  if (o.groups.size() != 1) throw InputError("table: exactly one --group required");
  auto G = io::resolve_group(o.groups[0]);
  auto t = character_table(G, o.jobs);
  require_valid(t, o.jobs);
  if (o.out == "csv")
    emit(o, io::table_to_csv(t));
  else
    emit(o, io::table_to_json(t).dump(2) + "\n");
  return kOk;
}

std::string render_records(const Options& o, const std::vector<io::ResultRecord>& recs, bool header) {
  std::string s = o.out == "csv" && header ? io::records_csv_header() : "";
  for (const auto& r : recs) s += o.out == "csv" ? io::to_csv(r) : io::to_json(r).dump() + "\n";
  return s;
}

int cmd_zeros(const Options& o) {
  auto groups = collect_groups(o);
  auto analyzed = groups.size() == 1 ? std::vector<AnalyzedGroup>{analyze(groups[0], o.jobs)}
                                     : io::analyze_all(groups, o.jobs);
  std::vector<io::ResultRecord> recs;
  for (const auto& a : analyzed)
    for (auto& r : io::records_for(a)) recs.push_back(std::move(r));
  emit(o, render_records(o, recs, true));
  return kOk;
}

int cmd_mz(const Options& o) {
  auto groups = collect_groups(o);
  auto analyzed = groups.size() == 1 ? std::vector<AnalyzedGroup>{analyze(groups[0], o.jobs)}
                                     : io::analyze_all(groups, o.jobs);
  if (analyzed.size() == 1 && !o.out_given) {
    emit(o, std::to_string(mz(analyzed[0])) + "\n");
    return kOk;
  }
  const auto scan = mz_scan(analyzed);
  if (o.out == "csv") {
    std::string s = "group,order,mz\n";
    for (const auto& a : analyzed)
      s += io::csv_quote(a.label()) + "," + std::to_string(a.group().order()) + "," +
           (a.group().is_abelian() ? std::string() : std::to_string(mz(a))) + "\n";
    emit(o, s);
    return kOk;
  }
  json per = json::array();
  for (const auto& a : analyzed)
    per.push_back({{"group", a.label()},
                   {"order", a.group().order()},
                   {"mz", a.group().is_abelian() ? json(nullptr) : json(mz(a))}});
  emit(o, json{{"groups", per}, {"mz", scan.value}, {"attained_by", scan.attained_by}, {"abelian", scan.skipped}}
                  .dump(2) +
              "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  const Statement st = parse_statement(o.statement);
  std::vector<VerificationReport> reports;
  const bool catalog_statement =
      st == Statement::thmA || st == Statement::corMS || st == Statement::con3max || st == Statement::conMZ;
  if (catalog_statement) {
    std::vector<Group> groups;
    if (!o.groups.empty() || !o.catalog.empty()) groups = collect_groups(o);
    auto analyzed = io::analyze_all(groups, o.jobs);
    switch (st) {
      case Statement::thmA: reports.push_back(verify_thmA(analyzed)); break;
      case Statement::corMS: {
        std::uint64_t p = o.prime;
        if (p == 0 && !analyzed.empty()) {
          auto pp = as_prime_power(analyzed[0].group().order());
          if (pp) p = pp->prime;
        }
        if (p == 0) throw InputError("corMS: give --prime or a catalog");
        reports.push_back(verify_corMS(analyzed, p));
        break;
      }
      case Statement::con3max: reports.push_back(verify_con3max(analyzed)); break;
      default: reports.push_back(verify_conMZ(analyzed)); break;
    }
  } else {
    auto groups = collect_groups(o);
    auto analyzed = groups.size() == 1 ? std::vector<AnalyzedGroup>{analyze(groups[0], o.jobs)}
                                       : io::analyze_all(groups, o.jobs);
    for (const auto& a : analyzed) {
      switch (st) {
        case Statement::thmB:
        case Statement::thmOdd: reports.push_back(verify_thmB(a, st)); break;
        case Statement::lemC2: reports.push_back(verify_lemC2(a)); break;
        case Statement::rel: reports.push_back(verify_rel(a)); break;
        case Statement::thmC: reports.push_back(verify_thmC(a)); break;
        default: reports.push_back(verify_miller_relative(a)); break;
      }
    }
  }
  std::string s = o.out == "csv" ? io::report_csv_header() : "";
  bool failed = false;
  for (const auto& r : reports) {
    s += o.out == "csv" ? io::to_csv(r) : io::to_json(r).dump() + "\n";
    if (r.failed()) {
      failed = true;
      print_witness(r);
    }
  }
  emit(o, s);
  return failed ? kFailed : kOk;
}

int cmd_scan(const Options& o) {
  auto files = io::list_pcp_files(o.scan_dir);
  std::set<std::string> done;
  if (!o.out_file.empty())
    for (const auto& r : io::read_records(o.out_file)) done.insert(r.group);
  std::vector<Group> todo;
  for (const auto& f : files) {
    auto G = build_from_pcp(io::parse_pcp(f));
    if (!done.count(G.label())) todo.push_back(std::move(G));
  }
  std::sort(todo.begin(), todo.end(), [](const Group& a, const Group& b) { return a.label() < b.label(); });
  for (std::size_t i = 1; i < todo.size(); ++i)
    if (todo[i].label() == todo[i - 1].label()) throw InputError("scan: duplicate label " + todo[i].label());
  auto analyzed = io::analyze_all(todo, o.jobs);
  std::vector<io::ResultRecord> recs;
  bool below = false;
  for (const auto& a : analyzed)
    for (auto& r : io::records_for(a)) {
      if (std::find(r.flags.begin(), r.flags.end(), "below_bound") != r.flags.end()) {
        below = true;
        std::cerr << "pgzero: verification fail: thmB " << r.group << " char_id=" << r.char_id
                  << " zero_elements=" << r.zero_elements << "\n";
      }
      recs.push_back(std::move(r));
    }
  if (o.out == "csv") throw InputError("scan: results are JSON lines; --out csv is not supported");
  emit(o, render_records(o, recs, false), true);
  std::cerr << "pgzero: scanned " << analyzed.size() << " groups, skipped " << (files.size() - todo.size())
            << " already present\n";
  return below ? kFailed : kOk;
}

int cmd_report(const Options& o) {
  std::vector<io::ResultRecord> recs;
  for (const auto& path : o.results) {
    if (!std::filesystem::exists(path)) throw InputError(path + ": no such file");
    for (auto& r : io::read_records(path)) recs.push_back(std::move(r));
  }
  if (!o.catalog.empty()) {
    for (const auto& a : io::analyze_all(io::load_catalog(o.catalog), o.jobs))
      for (auto& r : io::records_for(a)) recs.push_back(std::move(r));
  }
  const auto summary = io::summarize(recs);
  json orders = json::array();
  for (const auto& [order, s] : summary)
    orders.push_back({{"order", order},
                      {"prime", s.prime ? json(s.prime) : json(nullptr)},
                      {"n", s.prime ? json(s.n) : json(nullptr)},
                      {"groups", s.groups},
                      {"nonabelian", s.nonabelian},
                      {"mz", s.mz ? json(*s.mz) : json(nullptr)},
                      {"attained_by", s.attained_by},
                      {"bound", s.bound ? json(*s.bound) : json(nullptr)}});
  json refs = json::array();
  std::string csv_refs;
  for (const auto& ref : reference_values()) {
    std::optional<std::uint64_t> computed;
    const std::uint64_t order = ipow(ref.prime, ref.n);
    if (auto it = summary.find(order); it != summary.end()) computed = it->second.mz;
    const auto c = check_reference(ref, computed);
    refs.push_back({{"order", std::to_string(ref.prime) + "^" + std::to_string(ref.n)},
                    {"formula_value", c.formula_value},
                    {"reference_value", ref.printed},
                    {"claim", ref.claim},
                    {"discrepancy", c.discrepancy},
                    {"computed_mz", c.computed ? json(*c.computed) : json(nullptr)},
                    {"status", c.status}});
    csv_refs += std::to_string(ref.prime) + "^" + std::to_string(ref.n) + "," + std::to_string(c.formula_value) +
                "," + std::to_string(ref.printed) + "," + (c.discrepancy ? "true" : "false") + "," +
                (c.computed ? std::to_string(*c.computed) : "") + "," + c.status + "\n";
  }
  if (o.out == "csv") {
    std::string s = "order,prime,n,groups,nonabelian,mz,bound\n";
    for (const auto& [order, sm] : summary)
      s += std::to_string(order) + "," + (sm.prime ? std::to_string(sm.prime) : "") + "," +
           (sm.prime ? std::to_string(sm.n) : "") + "," + std::to_string(sm.groups) + "," +
           std::to_string(sm.nonabelian) + "," + (sm.mz ? std::to_string(*sm.mz) : "") + "," +
           (sm.bound ? std::to_string(*sm.bound) : "") + "\n";
    s += "\nreference_order,formula_value,reference_value,discrepancy,computed_mz,status\n" + csv_refs;
    emit(o, s);
  } else {
    emit(o, json{{"orders", orders}, {"reference", refs}}.dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"pgzero: zeros of irreducible characters of finite groups"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out-file", o.out_file, "Write output to this file instead of stdout");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto* table = app.add_subcommand("table", "Character table of a group");
  common(table);
  table->add_option("--group", o.groups, "Group spec")->required();
  auto* zeros = app.add_subcommand("zeros", "Zero profile of every irreducible character");
  common(zeros);
  zeros->add_option("--group", o.groups, "Group spec (repeatable)");
  zeros->add_option("--catalog", o.catalog, "Directory of presentation files");
  auto* mzc = app.add_subcommand("mz", "Minimum zero count over non-linear characters");
  common(mzc);
  mzc->add_option("--group", o.groups, "Group spec (repeatable)");
  mzc->add_option("--catalog", o.catalog, "Directory of presentation files");
  auto* verify = app.add_subcommand("verify", "Check a statement on groups or a catalog");
  common(verify);
  verify->add_option("statement", o.statement, "thmA|thmB|thmOdd|lemC2|rel|corMS|con3max|conMZ|thmC|miller")
      ->required();
  verify->add_option("--group", o.groups, "Group spec (repeatable)");
  verify->add_option("--catalog", o.catalog, "Directory of presentation files");
  verify->add_option("--prime", o.prime, "Prime for corMS");
  auto* scan = app.add_subcommand("scan", "Profile every presentation in a directory");
  common(scan);
  scan->add_option("dir", o.scan_dir, "Directory of presentation files")->required();
  auto* report = app.add_subcommand("report", "mz per order and reference values");
  common(report);
  report->add_option("--results", o.results, "JSON-lines file written by scan (repeatable)");
  report->add_option("--catalog", o.catalog, "Directory of presentation files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pgzero: error: usage: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : {table, zeros, mzc, verify, scan, report})
    if (sub->count("--out")) o.out_given = true;

  try {
    if (*table) return cmd_table(o);
    if (*zeros) return cmd_zeros(o);
    if (*mzc) return cmd_mz(o);
    if (*verify) return cmd_verify(o);
    if (*scan) return cmd_scan(o);
    if (*report) return cmd_report(o);
  } catch (const InputError& e) {
    std::cerr << "pgzero: error: input: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "pgzero: error: domain: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "pgzero: error: structure: " << e.what() << "\n";
    return kUsage;
  } catch (const TableIntegrityError& e) {
    std::cerr << "pgzero: error: table-integrity: " << e.what() << "\n";
    return kInternal;
  } catch (const InternalError& e) {
    std::cerr << "pgzero: error: internal: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "pgzero: error: internal: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
