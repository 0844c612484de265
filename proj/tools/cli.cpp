#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "superchar/error.hpp"
#include "superchar/json.hpp"

namespace superchar::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DixonOptions dixon_options(const CliConfig& c) {
  DixonOptions d;
  d.max_order = c.max_order;
  return d;
}

TablePtr table_for(const CliConfig& c, const GroupPtr& g) {
  if (!c.table.empty()) return ingest_table(read_file(c.table), g);
  return dixon_character_table(g, dixon_options(c));
}

GroupPtr single_group(const CliConfig& c) {
  if (c.groups.size() != 1) throw InputError(c.command + " needs exactly one --group");
  return load_group(c.groups.front());
}

std::string join(const Json& arr, const char* sep = ",") {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string braces(const Json& arr) { return "{" + join(arr) + "}"; }

std::string subgroup_text(const Json& named) {
  std::string s = braces(named["elements"]);
  if (!named["names"].empty()) s += " (" + join(named["names"], ", ") + ")";
  return s;
}

std::string series_text(const Json& series) {
  std::string s;
  for (const auto& t : series["terms"]) {
    if (!s.empty()) s += " > ";
    s += braces(t);
  }
  return s;
}

std::string class_text(const Json& c) { return c.is_null() ? "none" : c.dump(); }

void theory_text(std::ostream& os, const Json& t, const std::string& indent) {
  os << indent << "classes:";
  for (const auto& c : t["classes"]) os << " " << braces(c["elements"]);
  os << "\n";
  for (const auto& p : t["parts"])
    os << indent << "sigma_" << p["index"].get<std::size_t>() << " chars=" << braces(p["characters"])
       << " degree=" << p["degree"].get<std::string>() << ": " << join(p["values"], ", ") << "\n";
}

void verdict_text(std::ostream& os, const std::string& label, const Json& v, const std::string& indent) {
  os << indent << label << ": " << (v["holds"].get<bool>() ? "true" : "false");
  if (v["vacuous"].get<bool>()) os << " (vacuous)";
  if (!v["agree"].get<bool>()) os << " [characterizations disagree]";
  os << "\n";
  for (const auto& c : v["conditions"]) {
    os << indent << "  " << c["name"].get<std::string>() << "=" << (c["value"].get<bool>() ? "true" : "false");
    if (c.contains("informational")) os << " (informational)";
    if (c.contains("detail")) os << " " << c["detail"].get<std::string>();
    os << "\n";
  }
}

void enumerate_text(std::ostream& os, const Json& j) {
  os << "group " << j["group"].get<std::string>() << " order " << j["order"] << "\n";
  for (const auto& t : j["theories"]) {
    os << "theory " << t["index"] << " (" << t["theory"]["size"] << " parts)\n";
    theory_text(os, t["theory"], "  ");
  }
  os << "count " << j["count"] << "\n";
}

void analyze_text(std::ostream& os, const Json& j) {
  const auto& a = j["analysis"];
  os << "group " << j["group"].get<std::string>() << " theory " << j["selector"].get<std::string>() << "\n";
  theory_text(os, a["theory"], "  ");
  os << "S-abelian: " << (a["s_abelian"].get<bool>() ? "true" : "false") << "\n";
  os << "Z(S) = " << subgroup_text(a["center"]) << "\n";
  os << "[G,S] = " << subgroup_text(a["commutator"]) << "\n";
  os << "V(S) = " << subgroup_text(a["v_theory"]) << "\n";
  os << "U(S) = " << subgroup_text(a["u_theory"]) << "\n";
  os << "nilpotence class: " << class_text(a["nilpotence_class"]) << "\n";
  os << "lower series: " << series_text(a["lower_series"]) << "\n";
  os << "upper series: " << series_text(a["upper_series"]) << "\n";
  os << "V-series: " << series_text(a["v_series"]) << "\n";
  os << "degrees: " << join(a["degrees"], ", ") << "\n";
  os << "Camina elements: " << braces(a["camina_elements"]) << "\n";
  verdict_text(os, "VZ", a["vz"], "");
  for (const auto& n : a["s_normal"]) {
    os << "N = " << subgroup_text(n) << "\n";
    os << "  V(S|N) = " << braces(n["v_rel"]) << "\n";
    os << "  U(S|N) = " << braces(n["u_rel"]) << "\n";
    os << "  U-chain: " << series_text(n["u_chain"]) << "\n";
    verdict_text(os, "GCP", n["gcp"], "  ");
    verdict_text(os, "Camina pair", n["camina_pair"], "  ");
  }
}

void verify_text(std::ostream& os, const Json& j) {
  for (const auto& g : j["groups"]) {
    os << "group " << g["label"].get<std::string>() << " order " << g["order"] << " theories "
       << g["theory_count"] << "\n";
    if (g.contains("notice")) os << "  notice: " << g["notice"].get<std::string>() << "\n";
    for (const auto& t : g["theories"]) {
      os << "  theory " << t["index"] << " xparts=" << t["xparts"].dump() << "\n";
      for (const auto& r : t["reports"]) {
        os << "    " << r["theorem_id"].get<std::string>() << " [" << r["scope"].get<std::string>()
           << "] " << r["status"].get<std::string>();
        const auto& w = r["witness"].get<std::string>();
        if (!w.empty()) os << " : " << w;
        os << "\n";
      }
    }
  }
  const auto& s = j["summary"];
  os << "summary: pass=" << s["pass"] << " fail=" << s["fail"] << " vacuous=" << s["vacuous"]
     << " na=" << s["na"] << "\n";
}

std::vector<SuperTheory> select_theories(const CliConfig& c, const TablePtr& table, std::string& label) {
  const std::string& sel = c.sct;
  label = sel;
  if (sel == "finest") return {finest(table)};
  if (sel == "coarsest") return {coarsest(table)};
  if (sel.starts_with("index:")) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(sel.substr(6), &used);
      if (used != sel.size() - 6) throw std::invalid_argument(sel);
    } catch (const std::logic_error&) {
      throw InputError("bad theory selector " + sel);
    }
    EnumerateOptions eo;
    eo.max_irreducibles = max_irreducibles_from_env();
    eo.jobs = c.jobs;
    auto all = enumerate_scts(table, eo);
    if (k >= all.size())
      throw InputError("selector " + sel + " out of range: " + std::to_string(all.size()) + " theories");
    return {all[k]};
  }
  throw InputError("bad theory selector " + sel + " (finest, coarsest or index:k)");
}

struct Output {
  Json json;
  void (*text)(std::ostream&, const Json&) = nullptr;
  std::string raw_text;  // used when `text` is null
};

Output cmd_chartab(const CliConfig& c) {
  auto g = single_group(c);
  auto t = table_for(c, g);
  return Output{to_json(*t), nullptr, format_table(*t)};
}

Output cmd_enumerate(const CliConfig& c) {
  auto g = single_group(c);
  auto t = table_for(c, g);
  EnumerateOptions eo;
  eo.max_irreducibles = max_irreducibles_from_env();
  eo.jobs = c.jobs;
  auto all = enumerate_scts(t, eo);
  Json j;
  j["group"] = g->label();
  j["order"] = g->order();
  j["count"] = all.size();
  Json arr = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Json tj;
    tj["index"] = i;
    tj["theory"] = to_json(all[i]);
    arr.push_back(std::move(tj));
  }
  j["theories"] = std::move(arr);
  return Output{std::move(j), enumerate_text, {}};
}

Output cmd_analyze(const CliConfig& c) {
  auto g = single_group(c);
  auto t = table_for(c, g);
  std::string label;
  auto theories = select_theories(c, t, label);
  Analysis a(theories.front());
  Json j;
  j["group"] = g->label();
  j["selector"] = label;
  j["analysis"] = analysis_json(a);
  return Output{std::move(j), analyze_text, {}};
}

Output cmd_verify(const CliConfig& c, bool& failed) {
  std::vector<std::string> specs = c.groups;
  if (!c.catalog.empty()) {
    if (c.catalog != "default") throw InputError("unknown catalog " + c.catalog);
    const auto& d = default_catalog();
    specs.insert(specs.end(), d.begin(), d.end());
  }
  if (specs.empty()) throw InputError("verify needs --group or --catalog");
  // Surface bad specs as input errors before the corpus run.
  for (const auto& s : specs) load_group(s);
  CorpusOptions opts;
  opts.enumerate = c.all_scts;
  opts.jobs = c.jobs;
  opts.max_irreducibles = max_irreducibles_from_env();
  opts.dixon = dixon_options(c);
  auto report = run_corpus(specs, opts);
  failed = report.summary.fail > 0;
  return Output{to_json(report), verify_text, {}};
}

}  // namespace

bool parse_args(int argc, const char* const* argv, CliConfig& config, int& code, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Supercharacter theories of small finite groups"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", config.groups, "catalog name, file:path or perm:path");
    sub->add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", config.out, "write output here instead of stdout");
    sub->add_option("--max-order", config.max_order, "largest group order accepted")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto* chartab = app.add_subcommand("chartab", "print the character table");
  auto* enumerate = app.add_subcommand("enumerate", "list every supercharacter theory");
  auto* analyze = app.add_subcommand("analyze", "analyze one supercharacter theory");
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  for (auto* sub : {chartab, enumerate, analyze, verify}) add_common(sub);
  for (auto* sub : {chartab, enumerate, analyze})
    sub->add_option("--table", config.table, "character table file to ingest");
  analyze->add_option("--sct", config.sct, "finest, coarsest or index:k");
  verify->add_option("--sct", config.sct, "ignored; verify checks finest and coarsest");
  verify->add_flag("--all-scts", config.all_scts, "enumerate every theory where the guard permits");
  verify->add_option("--catalog", config.catalog, "named group list (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    return false;
  }
  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  return true;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  bool failed = false;
  Output result;
  try {
    if (config.command == "chartab")
      result = cmd_chartab(config);
    else if (config.command == "enumerate")
      result = cmd_enumerate(config);
    else if (config.command == "analyze")
      result = cmd_analyze(config);
    else if (config.command == "verify")
      result = cmd_verify(config, failed);
    else
      throw InputError("unknown command " + config.command);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kTheoremFailure;
  }

  std::ostringstream body;
  if (config.format == "json")
    body << result.json.dump(2) << "\n";
  else if (result.text)
    result.text(body, result.json);
  else
    body << result.raw_text;

  if (config.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(config.out);
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kUsage;
    }
    file << body.str();
  }
  return failed ? kTheoremFailure : kOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  int code = kOk;
  if (!parse_args(argc, argv, config, code, out, err)) return code;
  return run(config, out, err);
}

}  // namespace superchar::cli
