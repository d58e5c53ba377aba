#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "partpat/classifier.hpp"
#include "partpat/enumerate.hpp"
#include "partpat/pattern.hpp"

using namespace partpat;

TEST_CASE("pair family generators") {
  CHECK(generate_three_k(4).size() == 32);
  CHECK(generate_three_k(3).size() == 16);
  CHECK(generate_four_four().size() == 105);
  CHECK(generate_nc_tau(4).size() == 14);
  CHECK(generate_nc_tau(5).size() == 42);
}

TEST_CASE("Wilf classes of (3,4)-pairs match the shipped fixture") {
  auto pairs = generate_three_k(4);
  ClassificationReport rep = classify(pairs, EquivNotion::wilf, 10, 1, "three_k");
  CHECK(rep.classes.size() == 4);
  Fixture fx = load_fixture("three4");
  CHECK(diff_vs_fixture(rep, fx).empty());
}

TEST_CASE("nc classes at size 4 match the shipped fixture") {
  auto pairs = generate_nc_tau(4);
  ClassificationReport rep = classify(pairs, EquivNotion::nc, 10, 1, "nc_tau");
  CHECK(rep.classes.size() == 7);
  CHECK(diff_vs_fixture(rep, load_fixture("nc4")).empty());
}

TEST_CASE("fixture diff flags deliberate corruption") {
  auto pairs = generate_nc_tau(4);
  ClassificationReport rep = classify(pairs, EquivNotion::nc, 10);
  Fixture fx = load_fixture("nc4");
  // move one member to another class
  std::string moved = fx.classes[0].back();
  fx.classes[0].pop_back();
  fx.classes[1].push_back(moved);
  CHECK(diff_vs_fixture(rep, fx).size() >= 1);
}

TEST_CASE("classification is independent of input order and worker count") {
  auto pairs = generate_nc_tau(5);
  ClassificationReport base = classify(pairs, EquivNotion::nc, 9, 1);
  std::mt19937_64 rng(5);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  ClassificationReport shuffled = classify(pairs, EquivNotion::nc, 9, 1);
  ClassificationReport threaded = classify(pairs, EquivNotion::nc, 9, 4);
  auto members = [](const ClassificationReport& r) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : r.classes) out.push_back(c.members);
    return out;
  };
  CHECK(members(base) == members(shuffled));
  CHECK(members(base) == members(threaded));
  for (size_t i = 0; i < base.classes.size(); ++i) {
    CHECK(base.classes[i].first_separating_n_vs_next ==
          shuffled.classes[i].first_separating_n_vs_next);
  }
}

TEST_CASE("3k bound at k = 3 and 4") {
  auto [classes3, bound3] = check_3k_bound(3, 10);
  CHECK(classes3 == 3);
  CHECK(bound3 == 3);
  auto [classes4, bound4] = check_3k_bound(4, 10);
  CHECK(classes4 == 4);
  CHECK(bound4 == 4);
}

TEST_CASE("strong partition equivalence checks") {
  CHECK(strong_equiv_check(Rgs::parse("121"), Rgs::parse("112"), 9));
  CHECK(strong_equiv_check(Rgs::parse("1121"), Rgs::parse("1211"), 8));
  CHECK(strong_equiv_check(Rgs::parse("1121"), Rgs::parse("1112"), 8));
  // noncrossing and nonnesting avoiders carry identical block-size profiles
  // (consistent with {1111,1212} and {1111,1221} being a pair class)
  CHECK(strong_equiv_check(Rgs::parse("1212"), Rgs::parse("1221"), 9));
  // a genuinely profile-inequivalent pair: 122-avoiders never grow a second
  // block past size one, 112-avoiders do
  auto diff = strong_equiv_first_diff(Rgs::parse("112"), Rgs::parse("122"), 9);
  REQUIRE(diff.has_value());
  CHECK(*diff == 3);
  CHECK_FALSE(strong_equiv_check(Rgs::parse("112"), Rgs::parse("122"), 9));
}

TEST_CASE("cc equivalence checks") {
  // sigma[rho] vs rho[sigma] for connected sigma = 121, rho = 1
  CHECK(cc_equiv_check(Rgs::parse("1213"), Rgs::parse("1232"), 10));
  // components differ: 112 vs 121
  CHECK_FALSE(cc_equiv_check(Rgs::parse("112"), Rgs::parse("121"), 8));
  // nc-inequivalent pair
  CHECK_FALSE(nc_equiv_check(Rgs::parse("122"), Rgs::parse("123"), 8));
  CHECK_THROWS_AS(cc_equiv_check(Rgs::parse("1212"), Rgs::parse("121"), 5),
                  std::invalid_argument);
}

TEST_CASE("cc equivalence refines nc equivalence") {
  auto pairs = generate_nc_tau(4);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      bool cc = cc_equiv_check(pairs[i].patterns[0], pairs[j].patterns[0], 9);
      bool nc = nc_equiv_check(pairs[i].patterns[0], pairs[j].patterns[0], 9);
      if (cc) CHECK(nc);
    }
}

TEST_CASE("component permutation instances are cc-equivalent") {
  // two connected parts glued in both orders
  CHECK(cc_equiv_check(substitute("11[121]"), substitute("121[11]"), 10));
  CHECK(cc_equiv_check(substitute("121[1]"), substitute("1[121]"), 10));
  // swapping parts inside a connected wrapper: 1[1]1[]1 vs 1[]1[1]1
  CHECK(cc_equiv_check(Rgs::parse("1211"), Rgs::parse("1121"), 10));
}

TEST_CASE("all orderings of connected components are cc-equivalent") {
  // every multiset of connected noncrossing parts with total size <= 6
  std::vector<Rgs> connected;
  for (int s = 1; s <= 5; ++s)
    enumerate_avoiders({Rgs::parse("1212")}, s, [&](const Rgs& p) {
      if (is_connected(p)) connected.push_back(p);
    });

  // enumerate multisets as nondecreasing index sequences
  std::vector<std::vector<size_t>> multisets;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t from, int remaining) -> void {
    if (cur.size() >= 2) multisets.push_back(cur);
    for (size_t i = from; i < connected.size(); ++i) {
      if (connected[i].size() > remaining) continue;
      cur.push_back(i);
      self(self, i, remaining - connected[i].size());
      cur.pop_back();
    }
  };
  rec(rec, 0, 6);

  int checked = 0;
  for (const auto& ms : multisets) {
    std::vector<size_t> perm = ms;
    std::vector<Rgs> parts;
    for (size_t i : perm) parts.push_back(connected[i]);
    Rgs reference = concat_components(parts);
    auto ref_sig = component_distribution({Rgs::parse("1212"), reference}, 11);
    while (std::next_permutation(perm.begin(), perm.end())) {
      parts.clear();
      for (size_t i : perm) parts.push_back(connected[i]);
      Rgs reordered = concat_components(parts);
      INFO(reference.str(), " vs ", reordered.str());
      CHECK(component_distribution({Rgs::parse("1212"), reordered}, 11) == ref_sig);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("strong equivalence transfers to pairs with block-size patterns") {
  // rho constraining only block sizes: pairs (rho,sigma) ~ (rho,tau) for
  // strongly equivalent sigma, tau
  std::vector<const char*> rhos{"1111", "1222", "1233", "1234"};
  std::vector<std::pair<const char*, const char*>> strong_pairs{
      {"121", "112"}, {"1121", "1211"}, {"1232", "1223"}};
  for (auto [s, t] : strong_pairs) {
    REQUIRE(strong_equiv_check(Rgs::parse(s), Rgs::parse(t), 8));
    for (const char* rho : rhos) {
      CountVector a = count_avoiders({Rgs::parse(rho), Rgs::parse(s)}, 10);
      CountVector b = count_avoiders({Rgs::parse(rho), Rgs::parse(t)}, 10);
      CHECK(a.counts == b.counts);
    }
  }
}

TEST_CASE("simcomp collision search finds nothing small") {
  CHECK(search_simcomp_collisions(6, 12).empty());
}

TEST_CASE("fixture loader") {
  Fixture fx = load_fixture("four4");
  CHECK(fx.rest_singletons);
  CHECK(fx.classes.size() == 18);
  CHECK_THROWS(load_fixture("no_such_fixture"));
}
