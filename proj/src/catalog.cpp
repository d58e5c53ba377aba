#include "partpat/catalog.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "partpat/compositions.hpp"
#include "partpat/enumerate.hpp"
#include "partpat/formulas.hpp"

namespace partpat {

std::string default_data_dir() {
  if (const char* env = std::getenv("PARTPAT_DATA_DIR"); env && *env) return env;
  return PARTPAT_DATA_DIR;
}

namespace {

struct ExprParser {
  std::string_view in;
  size_t pos = 0;
  int prec;

  void skip_ws() {
    while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad series expression '" + std::string(in) + "': " + why);
  }

  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < in.size() && !std::isspace(static_cast<unsigned char>(in[pos])) &&
           in[pos] != '(' && in[pos] != ')')
      ++pos;
    if (start == pos) fail("expected token");
    return std::string(in.substr(start, pos - start));
  }

  Series parse() {
    skip_ws();
    if (pos >= in.size()) fail("unexpected end");
    if (in[pos] != '(') fail("expected '('");
    ++pos;
    std::string op = token();
    Series result(0);
    if (op == "p") {
      std::vector<Rat> coeffs;
      for (;;) {
        skip_ws();
        if (pos < in.size() && in[pos] == ')') break;
        coeffs.emplace_back(token());
        coeffs.back().canonicalize();
      }
      result = Series::poly(std::move(coeffs), prec);
    } else {
      std::vector<Series> args;
      for (;;) {
        skip_ws();
        if (pos >= in.size()) fail("missing ')'");
        if (in[pos] == ')') break;
        args.push_back(parse());
      }
      if (op == "+" || op == "-" || op == "*" || op == "/") {
        if (args.size() < 2) fail("operator needs two operands");
        result = args[0];
        for (size_t i = 1; i < args.size(); ++i) {
          if (op == "+") result = result + args[i];
          else if (op == "-") result = result - args[i];
          else if (op == "*") result = result * args[i];
          else result = div_shifted(result, args[i]);
        }
      } else if (op == "sqrt") {
        if (args.size() != 1) fail("sqrt takes one operand");
        result = sqrt(args[0]);
      } else {
        fail("unknown operator '" + op + "'");
      }
    }
    skip_ws();
    if (pos >= in.size() || in[pos] != ')') fail("missing ')'");
    ++pos;
    return result;
  }
};

constexpr int kExprSlack = 8;  // precision headroom for removable singularities

std::vector<Rgs> parse_pattern_list(const nlohmann::json& arr) {
  std::vector<Rgs> out;
  for (const auto& s : arr) out.push_back(Rgs::parse(s.get<std::string>()));
  return out;
}

CountVector counts_with_filter(const OracleSpec& oracle, int max_n) {
  if (oracle.filter.empty()) return count_avoiders(oracle.patterns, max_n);
  if (oracle.filter != "initial_staircase")
    throw std::invalid_argument("unknown oracle filter: " + oracle.filter);
  // keep only words whose first occurrence of each symbol j sits at
  // position j, i.e. the word starts 1 2 .. k where k is the block count
  CountVector out;
  out.max_n = max_n;
  out.counts.assign(static_cast<size_t>(max_n) + 1, 0);
  AvoiderSearch search(oracle.patterns, max_n);
  search.run([&](const SearchView& view) {
    for (int i = 0; i < view.num_blocks; ++i)
      if (view.word[static_cast<size_t>(i)] != i + 1) return;
    ++out.counts[view.word.size()];
  });
  return out;
}

Series series_from_counts(const CountVector& cv) {
  Series out(cv.max_n + 1);
  for (int n = 0; n <= cv.max_n; ++n) out.coeff(n) = Rat(cv[n]);
  return out;
}

}  // namespace

Series eval_series_expr(std::string_view expr, int order) {
  ExprParser parser{expr, 0, order + 1 + kExprSlack};
  Series s = parser.parse();
  parser.skip_ws();
  if (parser.pos != expr.size()) parser.fail("trailing input");
  if (s.prec() < order + 1)
    throw std::invalid_argument("series expression lost too much precision");
  return s.truncated(order + 1);
}

GfCatalog GfCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  GfCatalog cat;
  for (const auto& rec : doc.at("entries")) {
    CatalogEntry e;
    e.id = rec.at("id").get<std::string>();
    e.kind = rec.at("kind").get<std::string>();
    e.anchor = rec.value("anchor", "");
    e.recipe = rec.at("recipe");
    e.oracle.patterns = parse_pattern_list(rec.at("oracle").at("patterns"));
    e.oracle.filter = rec.at("oracle").value("filter", "");
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

GfCatalog GfCatalog::load_default() { return load(default_data_dir() + "/gf_catalog.json"); }

const CatalogEntry* GfCatalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

Series GfCatalog::expand(const std::string& id, int order) const {
  const CatalogEntry* e = find(id);
  if (!e) throw std::out_of_range("unknown catalog entry: " + id);
  return expand(*e, order);
}

Series GfCatalog::expand(const CatalogEntry& entry, int order) const {
  int prec = order + 1;
  if (entry.kind == "rational") {
    std::vector<long> num = entry.recipe.at("num").get<std::vector<long>>();
    Series n = Series::poly(num, prec);
    Series d = Series::one(prec);
    for (const auto& factor : entry.recipe.at("den"))
      d = d * Series::poly(factor.get<std::vector<long>>(), prec);
    return div(n, d);
  }
  if (entry.kind == "algebraic")
    return eval_series_expr(entry.recipe.at("expr").get<std::string>(), order);
  if (entry.kind != "recurrence")
    throw std::invalid_argument("unknown catalog kind: " + entry.kind);

  const std::string rec = entry.recipe.at("rec").get<std::string>();
  if (rec == "gf_112_family") {
    Composition a{entry.recipe.at("a").get<std::vector<int>>()};
    return gf_112_family(a, order).at_y(1);
  }
  if (rec == "staircase_pair")
    return gf_staircase_pair(entry.recipe.at("m").get<int>(), entry.recipe.at("k").get<int>(),
                             order);
  if (rec == "gf_123_ones") return gf_123_ones(entry.recipe.at("k").get<int>(), order);
  if (rec == "first_block_binomial") {
    CountVector base = count_avoiders(parse_pattern_list(entry.recipe.at("base")), order);
    return series_from_counts(first_block_binomial_transform(base));
  }
  if (rec == "ones21_transform") {
    CountVector base = count_avoiders(parse_pattern_list(entry.recipe.at("base")), order);
    return series_from_counts(
        ones21_set_transform(entry.recipe.at("sigma_size").get<int>(), base));
  }
  if (rec == "double_ones21") {
    std::vector<BigInt> base;
    for (const auto& v : entry.recipe.at("base")) base.emplace_back(v.get<long>());
    return series_from_counts(double_ones21_recurrence(base, order));
  }
  if (rec == "gf_1213_add_block") {
    CountVector base = count_avoiders(parse_pattern_list(entry.recipe.at("base")), order);
    return gf_1213_add_block(series_from_counts(base));
  }
  if (rec == "nc_wrap") {
    // NC(x; 1[tau]1) = 1 / (1 - x / (1 - x NC(x;tau))) for noncrossing hosts
    std::vector<Rgs> pats{Rgs::parse("1212"), Rgs::parse(entry.recipe.at("tau").get<std::string>())};
    Series nc_tau = series_from_counts(count_avoiders(pats, order));
    Series one = Series::one(order + 1);
    Series x = Series::x(order + 1);
    return div(one, one - div(x, one - x * nc_tau));
  }
  if (rec == "poly_formula") {
    std::vector<long> low = entry.recipe.value("low", std::vector<long>{});
    std::vector<long> poly = entry.recipe.at("poly").get<std::vector<long>>();
    Rat scale{entry.recipe.value("scale", std::string("1"))};
    scale.canonicalize();
    return gf_from_poly_formula(low, entry.recipe.at("from").get<int>(), scale,
                                entry.recipe.value("pow2_coeff", 0),
                                entry.recipe.value("pow2_offset", 0), poly, order);
  }
  throw std::invalid_argument("unknown recurrence recipe: " + rec);
}

CountVector GfCatalog::oracle_counts(const CatalogEntry& entry, int max_n) const {
  return counts_with_filter(entry.oracle, max_n);
}

GfCatalog::VerifyResult GfCatalog::verify(const CatalogEntry& entry, int order) const {
  VerifyResult res;
  res.id = entry.id;
  res.anchor = entry.anchor;
  Series expected = expand(entry, order);
  CountVector actual = oracle_counts(entry, order);
  res.pass = true;
  for (int n = 0; n <= order; ++n) {
    const Rat& c = expected.coeff(n);
    if (c.get_den() != 1 || c.get_num() != actual[n]) {
      res.pass = false;
      res.first_mismatch = n;
      break;
    }
  }
  return res;
}

std::vector<GfCatalog::VerifyResult> GfCatalog::verify_all(int order, int workers) const {
  std::vector<VerifyResult> out(entries_.size());
  if (workers <= 1) {
    for (size_t i = 0; i < entries_.size(); ++i) out[i] = verify(entries_[i], order);
    return out;
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= entries_.size()) break;
      out[i] = verify(entries_[i], order);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace partpat
