#include "partpat/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "partpat/catalog.hpp"
#include "partpat/compositions.hpp"
#include "partpat/enumerate.hpp"
#include "partpat/pattern.hpp"

namespace partpat {

EquivNotion parse_notion(std::string_view name) {
  if (name == "wilf") return EquivNotion::wilf;
  if (name == "nc") return EquivNotion::nc;
  if (name == "cc") return EquivNotion::cc;
  if (name == "strong") return EquivNotion::strong;
  throw std::invalid_argument("unknown equivalence notion: " + std::string(name));
}

std::string notion_name(EquivNotion n) {
  switch (n) {
    case EquivNotion::wilf: return "wilf";
    case EquivNotion::nc: return "nc";
    case EquivNotion::cc: return "cc";
    case EquivNotion::strong: return "strong";
  }
  return "?";
}

std::vector<PatternSet> generate_three_k(int k) {
  std::vector<PatternSet> out;
  for (const char* sigma : {"112", "121", "122", "123"}) {
    Rgs s = Rgs::parse(sigma);
    enumerate_avoiders({s}, k, [&](const Rgs& tau) {
      out.push_back({std::string(sigma) + "," + tau.str(), {s, tau}});
    });
  }
  return out;
}

std::vector<PatternSet> generate_four_four() {
  std::vector<Rgs> all;
  enumerate_avoiders({}, 4, [&](const Rgs& p) { all.push_back(p); });
  std::vector<PatternSet> out;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      out.push_back({all[i].str() + "," + all[j].str(), {all[i], all[j]}});
  return out;
}

std::vector<PatternSet> generate_nc_tau(int size) {
  std::vector<PatternSet> out;
  enumerate_avoiders({Rgs::parse("1212")}, size,
                     [&](const Rgs& tau) { out.push_back({tau.str(), {tau}}); });
  return out;
}

namespace {

const Rgs& pattern_1212() {
  static const Rgs p = Rgs::parse("1212");
  return p;
}

std::vector<Rgs> with_1212(const std::vector<Rgs>& pats) {
  std::vector<Rgs> out{pattern_1212()};
  out.insert(out.end(), pats.begin(), pats.end());
  return out;
}

std::string profile_chunk(const ProfileCounts& pc) {
  std::ostringstream os;
  for (const auto& [profile, count] : pc) {
    for (size_t i = 0; i < profile.size(); ++i) os << (i ? "." : "") << profile[i];
    os << ":" << count.get_str() << ";";
  }
  return os.str();
}

}  // namespace

Signature signature_of(const PatternSet& subject, EquivNotion notion, int max_n) {
  Signature sig;
  sig.per_n.resize(static_cast<size_t>(max_n) + 1);
  switch (notion) {
    case EquivNotion::wilf: {
      CountVector cv = count_avoiders(subject.patterns, max_n);
      for (int n = 0; n <= max_n; ++n) sig.per_n[static_cast<size_t>(n)] = cv[n].get_str();
      break;
    }
    case EquivNotion::nc: {
      CountVector cv = count_avoiders(with_1212(subject.patterns), max_n);
      for (int n = 0; n <= max_n; ++n) sig.per_n[static_cast<size_t>(n)] = cv[n].get_str();
      break;
    }
    case EquivNotion::cc: {
      for (const Rgs& p : subject.patterns)
        if (!is_noncrossing(p))
          throw std::invalid_argument("cc signature needs noncrossing patterns: " + p.str());
      auto dist = component_distribution(with_1212(subject.patterns), max_n);
      for (const auto& [key, count] : dist)
        sig.per_n[static_cast<size_t>(key.first)] +=
            std::to_string(key.second) + ":" + count.get_str() + ";";
      break;
    }
    case EquivNotion::strong: {
      for (int n = 0; n <= max_n; ++n)
        sig.per_n[static_cast<size_t>(n)] = profile_chunk(profile_counts(subject.patterns, n));
      break;
    }
  }
  return sig;
}

ClassificationReport classify(const std::vector<PatternSet>& subjects, EquivNotion notion,
                              int max_n, int workers, std::string family) {
  ClassificationReport rep;
  rep.family = std::move(family);
  rep.notion = notion;
  rep.max_n = max_n;

  std::vector<Signature> sigs(subjects.size());
  if (workers <= 1) {
    for (size_t i = 0; i < subjects.size(); ++i) sigs[i] = signature_of(subjects[i], notion, max_n);
  } else {
    std::atomic<size_t> next{0};
    auto work = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= subjects.size()) break;
        sigs[i] = signature_of(subjects[i], notion, max_n);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<std::string>, std::vector<std::string>> groups;
  for (size_t i = 0; i < subjects.size(); ++i) groups[sigs[i].per_n].push_back(subjects[i].label);

  struct Entry {
    std::vector<std::string> members;
    const std::vector<std::string>* sig;
  };
  std::vector<Entry> entries;
  for (auto& [sig, members] : groups) {
    std::sort(members.begin(), members.end());
    entries.push_back({members, &sig});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.members.front() < b.members.front(); });

  for (size_t i = 0; i < entries.size(); ++i) {
    EquivClass cls;
    cls.members = entries[i].members;
    if (i + 1 < entries.size()) {
      const auto& cur = *entries[i].sig;
      const auto& nxt = *entries[i + 1].sig;
      for (size_t n = 0; n < cur.size(); ++n)
        if (cur[n] != nxt[n]) {
          cls.first_separating_n_vs_next = static_cast<int>(n);
          break;
        }
    }
    rep.classes.push_back(std::move(cls));
  }
  return rep;
}

Fixture load_fixture_file(const std::string& id, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("unknown fixture: cannot open " + path);
  Fixture fx;
  fx.id = id;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    if (line.rfind("@anchor ", 0) == 0) {
      fx.anchor = line.substr(8);
      continue;
    }
    if (line == "@rest-singletons") {
      fx.rest_singletons = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> members;
    std::string tok;
    while (ls >> tok) members.push_back(tok);
    if (!members.empty()) {
      std::sort(members.begin(), members.end());
      fx.classes.push_back(std::move(members));
    }
  }
  return fx;
}

Fixture load_fixture(const std::string& id) {
  return load_fixture_file(id, default_data_dir() + "/fixtures/" + id + ".txt");
}

std::vector<std::string> diff_vs_fixture(const ClassificationReport& report,
                                         const Fixture& fixture) {
  std::vector<std::string> diff;
  std::map<std::string, size_t> member_to_fixture;
  std::vector<std::vector<std::string>> expected = fixture.classes;

  std::vector<std::string> all_members;
  for (const auto& cls : report.classes)
    all_members.insert(all_members.end(), cls.members.begin(), cls.members.end());

  std::map<std::string, bool> listed;
  for (const auto& cls : expected)
    for (const auto& m : cls) listed[m] = true;
  if (fixture.rest_singletons) {
    for (const auto& m : all_members)
      if (!listed.count(m)) expected.push_back({m});
  }

  for (size_t i = 0; i < expected.size(); ++i)
    for (const auto& m : expected[i]) {
      if (member_to_fixture.count(m)) diff.push_back("fixture lists twice: " + m);
      member_to_fixture[m] = i;
    }

  for (const auto& m : all_members)
    if (!member_to_fixture.count(m)) diff.push_back("not in fixture: " + m);
  for (const auto& [m, idx] : member_to_fixture)
    if (std::find(all_members.begin(), all_members.end(), m) == all_members.end())
      diff.push_back("fixture member outside family: " + m);
  if (!diff.empty()) return diff;

  for (const auto& cls : report.classes) {
    size_t idx = member_to_fixture[cls.members.front()];
    std::vector<std::string> want = expected[idx];
    std::sort(want.begin(), want.end());
    if (want != cls.members) {
      std::string line = "class mismatch: computed {";
      for (const auto& m : cls.members) line += " " + m;
      line += " } vs expected {";
      for (const auto& m : want) line += " " + m;
      line += " }";
      diff.push_back(line);
    }
  }
  return diff;
}

std::pair<int, BigInt> check_3k_bound(int k, int max_n, int workers) {
  ClassificationReport rep =
      classify(generate_three_k(k), EquivNotion::wilf, max_n, workers, "three_k");
  return {static_cast<int>(rep.classes.size()), 1 + xi(k)};
}

std::optional<int> strong_equiv_first_diff(const Rgs& sigma, const Rgs& tau, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    if (profile_counts({sigma}, n) != profile_counts({tau}, n)) return n;
  return std::nullopt;
}

bool strong_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n) {
  return !strong_equiv_first_diff(sigma, tau, max_n).has_value();
}

bool cc_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n) {
  if (!is_noncrossing(sigma) || !is_noncrossing(tau))
    throw std::invalid_argument("cc_equiv_check: patterns must be noncrossing");
  return component_distribution({pattern_1212(), sigma}, max_n) ==
         component_distribution({pattern_1212(), tau}, max_n);
}

bool nc_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n) {
  return count_avoiders({pattern_1212(), sigma}, max_n) ==
         count_avoiders({pattern_1212(), tau}, max_n);
}

std::vector<std::pair<std::string, std::string>> search_simcomp_collisions(int k, int max_n) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int s = 1; s <= k; ++s) {
    auto parts = two_free_partitions(s);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        if (!simcomp_first_diff(parts[i], parts[j], max_n))
          out.emplace_back(parts[i].str(), parts[j].str());
  }
  return out;
}

}  // namespace partpat
