// partpat: enumeration, verification and classification of pattern-avoiding
// set partitions in restricted growth form.
//
// Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "partpat/bijections.hpp"
#include "partpat/catalog.hpp"
#include "partpat/classifier.hpp"
#include "partpat/compositions.hpp"
#include "partpat/enumerate.hpp"

using namespace partpat;
using nlohmann::json;

namespace {

struct Output {
  std::string format = "text";  // text | json | csv
  std::string path;             // empty = stdout

  void emit(const json& doc, const std::string& text_form, const std::string& csv_form) const {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      os = &file;
    }
    if (format == "json")
      *os << doc.dump(2) << "\n";
    else if (format == "csv")
      *os << csv_form;
    else
      *os << text_form;
  }
};

std::vector<Rgs> parse_pattern_arg(const std::string& arg) {
  if (arg.empty()) return {};
  // Try comma-split into several single-pattern literals first; fall back to
  // reading the whole string as one comma-form word (needed for symbols > 9).
  std::vector<std::string> toks;
  size_t pos = 0;
  while (pos <= arg.size()) {
    size_t next = arg.find(',', pos);
    if (next == std::string::npos) next = arg.size();
    toks.push_back(arg.substr(pos, next - pos));
    pos = next + 1;
    if (next == arg.size()) break;
  }
  std::vector<Rgs> out;
  try {
    for (const auto& t : toks) out.push_back(Rgs::parse(t));
    return out;
  } catch (const std::invalid_argument&) {
    return {Rgs::parse(arg)};
  }
}

json count_json(const std::vector<Rgs>& patterns, const CountVector& cv) {
  json doc;
  doc["command"] = "count";
  json pats = json::array();
  for (const auto& p : patterns) pats.push_back(p.str());
  doc["patterns"] = pats;
  doc["max_n"] = cv.max_n;
  json counts = json::array();
  for (const auto& c : cv.counts) counts.push_back(c.get_str());
  doc["counts"] = counts;
  return doc;
}

json report_json(const ClassificationReport& rep) {
  json doc;
  doc["command"] = "classify";
  doc["family"] = rep.family;
  doc["notion"] = notion_name(rep.notion);
  doc["max_n"] = rep.max_n;
  json classes = json::array();
  for (const auto& cls : rep.classes) {
    json c;
    c["members"] = cls.members;
    c["first_separating_n_vs_next_class"] = cls.first_separating_n_vs_next;
    classes.push_back(c);
  }
  doc["classes"] = classes;
  doc["diff"] = rep.diff;
  if (!rep.fixture_id.empty()) doc["fixture"] = rep.fixture_id;
  return doc;
}

json bijection_json(const BijectionReport& rep) {
  json r;
  r["name"] = rep.name;
  r["n"] = rep.n;
  r["domain_count"] = rep.domain_count.get_str();
  r["codomain_count"] = rep.codomain_count.get_str();
  r["is_bijective"] = rep.is_bijective;
  if (rep.counterexample)
    r["counterexample"] = {rep.counterexample->first, rep.counterexample->second};
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"pattern-avoiding set partition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--out/--workers may follow the subcommand
  Output out;
  int workers = 1;
  app.add_option("--format", out.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");
  app.add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);

  // count
  auto* cmd_count = app.add_subcommand("count", "count avoiders of a pattern set by size");
  std::string patterns_arg;
  int max_n = 12;
  cmd_count->add_option("--patterns", patterns_arg, "pattern literals, comma separated");
  cmd_count->add_option("--max-n", max_n, "largest size to count")->check(CLI::NonNegativeNumber);

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "group a pair family by counting signature");
  std::string family = "four_four", notion = "wilf", fixture_id;
  int family_k = 4, family_size = 4, classify_max_n = 12;
  cmd_classify->add_option("--family", family, "three_k, four_four or nc_tau")
      ->check(CLI::IsMember({"three_k", "four_four", "nc_tau"}));
  cmd_classify->add_option("--k", family_k, "tau size for three_k");
  cmd_classify->add_option("--size", family_size, "tau size for nc_tau");
  cmd_classify->add_option("--notion", notion, "wilf, nc, cc or strong");
  cmd_classify->add_option("--max-n", classify_max_n, "signature depth");
  cmd_classify->add_option("--fixture", fixture_id, "fixture id to diff against");

  // verify-gf
  auto* cmd_gf = app.add_subcommand("verify-gf", "expand catalog entries against enumeration");
  std::string entry_id;
  bool all_entries = false;
  int order = 12;
  cmd_gf->add_option("--entry", entry_id, "catalog entry id");
  cmd_gf->add_flag("--all", all_entries, "verify every entry");
  cmd_gf->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);

  // bijections
  auto* cmd_bij = app.add_subcommand("bijections", "run the constructive bijection checks");
  int bij_max_n = 9;
  cmd_bij->add_option("--max-n", bij_max_n, "largest partition size");

  // bound-3k
  auto* cmd_bound = app.add_subcommand("bound-3k", "compare (3,k) class count with 1 + xi(k)");
  int bound_k = 4, bound_max_n = 12;
  cmd_bound->add_option("--k", bound_k, "tau size")->required();
  cmd_bound->add_option("--max-n", bound_max_n, "signature depth");

  // search-simcomp
  auto* cmd_search = app.add_subcommand("search-simcomp",
                                        "search for dominance-count collisions between 2-free partitions");
  int search_k = 8, search_max_n = 14;
  cmd_search->add_option("--k", search_k, "largest partition size")->required();
  cmd_search->add_option("--max-n", search_max_n, "count depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_count->parsed()) {
    std::vector<Rgs> patterns = parse_pattern_arg(patterns_arg);
    CountVector cv = count_avoiders(patterns, max_n, workers);
    std::string text, csv = "n,count\n";
    for (int n = 0; n <= max_n; ++n) {
      text += std::to_string(n) + " " + cv[n].get_str() + "\n";
      csv += std::to_string(n) + "," + cv[n].get_str() + "\n";
    }
    out.emit(count_json(patterns, cv), text, csv);
    return 0;
  }

  if (cmd_classify->parsed()) {
    std::vector<PatternSet> subjects;
    if (family == "three_k")
      subjects = generate_three_k(family_k);
    else if (family == "four_four")
      subjects = generate_four_four();
    else
      subjects = generate_nc_tau(family_size);
    ClassificationReport rep =
        classify(subjects, parse_notion(notion), classify_max_n, workers, family);
    std::string fixture_anchor;
    if (!fixture_id.empty()) {
      Fixture fx = load_fixture(fixture_id);
      rep.fixture_id = fixture_id;
      rep.diff = diff_vs_fixture(rep, fx);
      fixture_anchor = fx.anchor;
    }
    std::string text;
    for (const auto& cls : rep.classes) {
      for (size_t i = 0; i < cls.members.size(); ++i) text += (i ? " " : "") + cls.members[i];
      text += "\n";
    }
    for (const auto& d : rep.diff) text += "diff: " + d + "\n";
    json doc = report_json(rep);
    if (!fixture_anchor.empty()) doc["anchor"] = fixture_anchor;
    out.emit(doc, text, text);
    return rep.diff.empty() ? 0 : 1;
  }

  if (cmd_gf->parsed()) {
    GfCatalog cat = GfCatalog::load_default();
    std::vector<GfCatalog::VerifyResult> results;
    if (all_entries) {
      results = cat.verify_all(order, workers);
    } else {
      const CatalogEntry* e = cat.find(entry_id);
      if (!e) {
        std::cerr << "unknown catalog entry: " << entry_id << "\n";
        return 2;
      }
      results.push_back(cat.verify(*e, order));
    }
    bool all_pass = true;
    std::string text;
    json doc;
    doc["command"] = "verify-gf";
    doc["order"] = order;
    json entries = json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      text += std::string(r.pass ? "PASS " : "FAIL ") + r.id + "  [" + r.anchor + "]\n";
      json e;
      e["id"] = r.id;
      e["pass"] = r.pass;
      e["anchor"] = r.anchor;
      if (!r.pass) e["first_mismatch"] = r.first_mismatch;
      entries.push_back(e);
    }
    doc["entries"] = entries;
    out.emit(doc, text, text);
    return all_pass ? 0 : 1;
  }

  if (cmd_bij->parsed()) {
    std::vector<BijectionReport> reports;
    for (int n = 0; n <= bij_max_n; ++n) reports.push_back(verify_f122_bijection(n));
    for (const char* tau : {"12", "123", "112"})
      reports.push_back(verify_f122_containment(Pattern::parse(tau), std::min(bij_max_n, 8)));
    for (auto& rep : verify_composition_bijections(std::min(bij_max_n, 6))) reports.push_back(rep);
    for (auto& rep : verify_rewrite_bijections(bij_max_n)) reports.push_back(rep);
    bool all_ok = true;
    std::string text;
    json doc;
    doc["command"] = "bijections";
    json arr = json::array();
    for (const auto& rep : reports) {
      all_ok = all_ok && rep.is_bijective;
      text += std::string(rep.is_bijective ? "PASS " : "FAIL ") + rep.name + "\n";
      arr.push_back(bijection_json(rep));
    }
    doc["reports"] = arr;
    out.emit(doc, text, text);
    return all_ok ? 0 : 1;
  }

  if (cmd_bound->parsed()) {
    auto [observed, bound] = check_3k_bound(bound_k, bound_max_n, workers);
    json doc;
    doc["command"] = "bound-3k";
    doc["k"] = bound_k;
    doc["max_n"] = bound_max_n;
    doc["observed_classes"] = observed;
    doc["bound"] = bound.get_str();
    std::string text = "k=" + std::to_string(bound_k) + " observed=" + std::to_string(observed) +
                       " bound=" + bound.get_str() + "\n";
    out.emit(doc, text, text);
    return BigInt(observed) == bound ? 0 : 1;
  }

  if (cmd_search->parsed()) {
    auto collisions = search_simcomp_collisions(search_k, search_max_n);
    json doc;
    doc["command"] = "search-simcomp";
    doc["k"] = search_k;
    doc["max_n"] = search_max_n;
    json arr = json::array();
    std::string text;
    for (const auto& [a, b] : collisions) {
      arr.push_back({a, b});
      text += a + " ~ " + b + "\n";
    }
    doc["collisions"] = arr;
    if (collisions.empty()) text = "no collisions up to size " + std::to_string(search_k) + "\n";
    out.emit(doc, text, text);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
