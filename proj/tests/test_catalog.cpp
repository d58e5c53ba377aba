#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partpat/catalog.hpp"
#include "partpat/enumerate.hpp"

using namespace partpat;

TEST_CASE("catalog loads and finds entries") {
  GfCatalog cat = GfCatalog::load_default();
  CHECK(cat.entries().size() >= 20);
  CHECK(cat.find("nc_12321") != nullptr);
  CHECK(cat.find("missing") == nullptr);
  CHECK_THROWS_AS(cat.expand("missing", 5), std::out_of_range);
}

TEST_CASE("selected entries verify at order 10") {
  GfCatalog cat = GfCatalog::load_default();
  for (const char* id : {"pairs34_class1", "pairs34_class2", "pairs34_class3", "pairs34_class4",
                         "nc_12321", "nc_111_motzkin", "nc_1221", "blocks_112_1221",
                         "w_gf_1211_1212", "l_gf_1211_1221", "fib_gf_1212_1232",
                         "staircase_prefix_1122_1223", "quartic_1222_1234"}) {
    const CatalogEntry* e = cat.find(id);
    REQUIRE(e != nullptr);
    auto res = cat.verify(*e, 10);
    INFO(id, " first mismatch at ", res.first_mismatch);
    CHECK(res.pass);
  }
}

TEST_CASE("motzkin entry expands to the Motzkin numbers") {
  GfCatalog cat = GfCatalog::load_default();
  Series m = cat.expand("nc_111_motzkin", 6);
  std::vector<long> expected{1, 1, 2, 4, 9, 21, 51};
  for (int n = 0; n <= 6; ++n) CHECK(m.coeff(n) == expected[static_cast<size_t>(n)]);
}

TEST_CASE("the 12321 closed form gives (3^(n-1)+1)/2") {
  GfCatalog cat = GfCatalog::load_default();
  Series s = cat.expand("nc_12321", 8);
  CHECK(s.coeff(0) == 1);
  long pow3 = 1;
  for (int n = 1; n <= 8; ++n) {
    CHECK(s.coeff(n) == Rat((pow3 + 1) / 2));
    pow3 *= 3;
  }
}

TEST_CASE("quartic entry values") {
  GfCatalog cat = GfCatalog::load_default();
  Series s = cat.expand("quartic_1211_1234", 5);
  // (n^4-6n^3+19n^2-22n+16)/8 -> 1, 2, 5, 13, 32
  std::vector<long> expected{1, 1, 2, 5, 13, 32};
  for (int n = 0; n <= 5; ++n) CHECK(s.coeff(n) == expected[static_cast<size_t>(n)]);
}

TEST_CASE("verification failure reports first mismatch") {
  GfCatalog cat = GfCatalog::load_default();
  CatalogEntry broken = *cat.find("nc_12321");
  broken.oracle.patterns = {Rgs::parse("1212"), Rgs::parse("1221")};
  auto res = cat.verify(broken, 10);
  CHECK_FALSE(res.pass);
  CHECK(res.first_mismatch == 4);  // 13 noncrossing 1221-avoiders vs 14
}

TEST_CASE("expression parser rejects malformed input") {
  CHECK_THROWS_AS(eval_series_expr("(p 1", 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_series_expr("(foo (p 1))", 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_series_expr("(p 1) junk", 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_series_expr("(/ (p 1) (p 0 1))", 4), std::domain_error);
}

TEST_CASE("oracle filter initial_staircase") {
  GfCatalog cat = GfCatalog::load_default();
  const CatalogEntry* e = cat.find("staircase_prefix_1122_1223");
  REQUIRE(e != nullptr);
  CountVector cv = cat.oracle_counts(*e, 5);
  // n=2: 11 (k=1) and 12 (k=2) both start with the staircase
  CHECK(cv[0] == 1);
  CHECK(cv[1] == 1);
  CHECK(cv[2] == 2);
}
