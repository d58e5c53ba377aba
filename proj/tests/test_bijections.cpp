#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partpat/bijections.hpp"
#include "partpat/enumerate.hpp"

using namespace partpat;

TEST_CASE("f_122_to_123 word images") {
  CHECK(f_122_to_123(Rgs::parse("1123145")).str() == "1122122");
  CHECK(f_122_to_123(Rgs::parse("1")).str() == "1");
  CHECK(f_122_to_123(Rgs::parse("111")).str() == "111");
  CHECK(f_122_to_123(Rgs()).empty());
  CHECK_THROWS_AS(f_122_to_123(Rgs::parse("122")), std::invalid_argument);
  CHECK_THROWS_AS(f_122_to_123(Rgs::parse("1221")), std::invalid_argument);
}

TEST_CASE("f_122_to_123 is a bijection P_n(122) -> P_n(123)") {
  for (int n = 0; n <= 9; ++n) {
    BijectionReport rep = verify_f122_bijection(n);
    INFO("n = ", n);
    CHECK(rep.is_bijective);
    CHECK(rep.domain_count == rep.codomain_count);
    if (n >= 1) CHECK(rep.domain_count == BigInt(1) << (n - 1));
  }
}

TEST_CASE("containment preservation under f_122_to_123") {
  for (const char* tau : {"123", "12", "12134", "112", "1112345"}) {
    BijectionReport rep = verify_f122_containment(Pattern::parse(tau), 8);
    INFO("tau = ", tau);
    CHECK(rep.is_bijective);
  }
  CHECK_THROWS_AS(verify_f122_containment(Pattern::parse("1221"), 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_f122_containment(Pattern::parse("111"), 5), std::invalid_argument);
}

TEST_CASE("sum of binomials identity for {122,1^k} and {122,12..k}") {
  // p_n(122, 1^k) = p_n(122, 12..k) = sum_{i<=k-2} C(n-1,i)
  for (int k = 3; k <= 5; ++k) {
    std::vector<int> ones(static_cast<size_t>(k), 1);
    std::vector<int> incr;
    for (int i = 1; i <= k; ++i) incr.push_back(i);
    CountVector a = count_avoiders({Rgs::parse("122"), Rgs(ones)}, 12);
    CountVector b = count_avoiders({Rgs::parse("122"), Rgs(incr)}, 12);
    CHECK(a.counts == b.counts);
    for (int n = 1; n <= 12; ++n) {
      BigInt expect = 0;
      BigInt binom = 1;
      for (int i = 0; i <= k - 2; ++i) {
        if (i > n - 1) break;
        expect += binom;
        binom = binom * (n - 1 - i) / (i + 1);
      }
      CHECK(a[n] == expect);
    }
  }
}

TEST_CASE("composition bijections, exhaustive small sizes") {
  auto reports = verify_composition_bijections(5);
  CHECK(!reports.empty());
  for (const auto& rep : reports) {
    INFO(rep.name);
    CHECK(rep.is_bijective);
  }
}

TEST_CASE("negative control: a corrupted map is caught") {
  std::vector<Rgs> domain, codomain;
  enumerate_avoiders({Rgs::parse("122")}, 4, [&](const Rgs& p) { domain.push_back(p); });
  enumerate_avoiders({Rgs::parse("123")}, 4, [&](const Rgs& p) { codomain.push_back(p); });
  // constant map: everything collides
  BijectionReport rep = verify_bijection("corrupted", 4, domain, codomain,
                                         [&](const Rgs&) { return codomain.front(); });
  CHECK_FALSE(rep.is_bijective);
  REQUIRE(rep.counterexample.has_value());
}

TEST_CASE("rewrite maps on {1231,1233}-avoiders") {
  // spot-check one word: 1 1 2 alpha 3 2 4 with alpha = 21
  Rgs p = Rgs::parse("11221324");
  // a = 2, alpha = 21, b = 1, k = 4
  CHECK(rewrite_1231_to_1123_a(p).str() == "12321421");
  CHECK(rewrite_1231_to_1123_b(p).str() == "12331441");
  // small words with k <= 2 map to themselves
  CHECK(rewrite_1231_to_1123_a(Rgs::parse("1122")) == Rgs::parse("1122"));

  auto reports = verify_rewrite_bijections(8);
  for (const auto& rep : reports) {
    INFO(rep.name);
    CHECK(rep.is_bijective);
  }
}
