#include "partpat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace partpat {

Series Series::one(int prec) {
  Series s(prec);
  if (prec > 0) s.c_[0] = 1;
  return s;
}

Series Series::x(int prec) {
  Series s(prec);
  if (prec > 1) s.c_[1] = 1;
  return s;
}

Series Series::poly(std::span<const long> coeffs, int prec) {
  Series s(prec);
  for (size_t i = 0; i < coeffs.size() && i < s.c_.size(); ++i) s.c_[i] = coeffs[i];
  return s;
}

Series Series::poly(std::vector<Rat> coeffs, int prec) {
  Series s(prec);
  for (size_t i = 0; i < coeffs.size() && i < s.c_.size(); ++i) s.c_[i] = std::move(coeffs[i]);
  return s;
}

int Series::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return prec();
}

Series Series::truncated(int prec) const {
  Series s(std::min(prec, this->prec()));
  for (int i = 0; i < s.prec(); ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return s;
}

namespace {
int common_prec(const Series& a, const Series& b) { return std::min(a.prec(), b.prec()); }
}  // namespace

Series operator+(const Series& a, const Series& b) {
  Series out(common_prec(a, b));
  for (int i = 0; i < out.prec(); ++i) out.coeff(i) = a.coeff(i) + b.coeff(i);
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(common_prec(a, b));
  for (int i = 0; i < out.prec(); ++i) out.coeff(i) = a.coeff(i) - b.coeff(i);
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(common_prec(a, b));
  for (int i = 0; i < out.prec(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j < out.prec(); ++j)
      if (b.coeff(j) != 0) out.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return out;
}

Series operator*(const Rat& s, const Series& a) {
  Series out = a;
  for (int i = 0; i < out.prec(); ++i) out.coeff(i) *= s;
  return out;
}

Series div(const Series& a, const Series& b) {
  if (b.prec() == 0 || b.coeff(0) == 0)
    throw std::domain_error("series division by zero constant term");
  Series out(common_prec(a, b));
  for (int i = 0; i < out.prec(); ++i) {
    Rat acc = a.coeff(i);
    for (int j = 0; j < i; ++j)
      if (b.coeff(i - j) != 0) acc -= out.coeff(j) * b.coeff(i - j);
    out.coeff(i) = acc / b.coeff(0);
  }
  return out;
}

Series div_shifted(const Series& a, const Series& b) {
  int v = b.valuation();
  if (v >= b.prec()) throw std::domain_error("series division by zero");
  if (v == 0) return div(a, b);
  if (a.valuation() < std::min(v, a.prec()))
    throw std::domain_error("shifted division: dividend valuation too small");
  int prec = common_prec(a, b) - v;
  Series sa(prec), sb(prec);
  for (int i = 0; i < prec; ++i) {
    sa.coeff(i) = i + v < a.prec() ? a.coeff(i + v) : Rat(0);
    sb.coeff(i) = b.coeff(i + v);
  }
  return div(sa, sb);
}

Rat sqrt_rat(const Rat& v) {
  if (v < 0) throw std::domain_error("square root of negative rational");
  mpz_class num = v.get_num(), den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    throw std::domain_error("constant term is not a perfect rational square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat out(rn, rd);
  out.canonicalize();
  return out;
}

Series sqrt(const Series& a) {
  if (a.prec() == 0) return a;
  Rat s0 = sqrt_rat(a.coeff(0));
  if (s0 == 0) throw std::domain_error("series sqrt needs a nonzero constant term");
  Series out(a.prec());
  out.coeff(0) = s0;
  for (int n = 1; n < a.prec(); ++n) {
    Rat acc = a.coeff(n);
    for (int j = 1; j < n; ++j) acc -= out.coeff(j) * out.coeff(n - j);
    out.coeff(n) = acc / (2 * s0);
  }
  return out;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner.prec() > 0 && inner.coeff(0) != 0)
    throw std::domain_error("series composition needs a zero inner constant term");
  int prec = common_prec(outer, inner);
  Series out(prec);
  // Horner from the top coefficient down
  for (int i = std::min(outer.prec(), prec) - 1; i >= 0; --i) {
    out = out * inner;
    out.coeff(0) += outer.coeff(i);
  }
  return out;
}

// ---- BiSeries ----

namespace {

using YPoly = BiSeries::YPoly;

YPoly ypoly_add(const YPoly& a, const YPoly& b, int sign) {
  YPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

YPoly ypoly_scale(const YPoly& a, const Rat& s) {
  YPoly out = a;
  for (Rat& c : out) c *= s;
  return out;
}

}  // namespace

BiSeries BiSeries::constant(const Rat& v, int prec) {
  BiSeries out(prec);
  if (prec > 0 && v != 0) out.c_[0] = {v};
  return out;
}

BiSeries BiSeries::from_coeffs(std::vector<YPoly> coeffs, int prec) {
  BiSeries out(prec);
  for (size_t i = 0; i < coeffs.size() && i < out.c_.size(); ++i) out.c_[i] = std::move(coeffs[i]);
  for (auto& p : out.c_)
    while (!p.empty() && p.back() == 0) p.pop_back();
  return out;
}

Series BiSeries::at_y(const Rat& y) const {
  Series out(prec());
  for (int i = 0; i < prec(); ++i) {
    Rat acc = 0;
    const YPoly& p = c_[static_cast<size_t>(i)];
    for (size_t j = p.size(); j > 0; --j) acc = acc * y + p[j - 1];
    out.coeff(i) = acc;
  }
  return out;
}

Rat BiSeries::coeff_xy(int n, int k) const {
  const YPoly& p = c_[static_cast<size_t>(n)];
  return static_cast<size_t>(k) < p.size() ? p[static_cast<size_t>(k)] : Rat(0);
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.prec(), b.prec()));
  for (int i = 0; i < out.prec(); ++i) out.coeff(i) = ypoly_add(a.coeff(i), b.coeff(i), 1);
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.prec(), b.prec()));
  for (int i = 0; i < out.prec(); ++i) out.coeff(i) = ypoly_add(a.coeff(i), b.coeff(i), -1);
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.prec(), b.prec()));
  for (int i = 0; i < out.prec(); ++i) {
    if (a.coeff(i).empty()) continue;
    for (int j = 0; i + j < out.prec(); ++j) {
      if (b.coeff(j).empty()) continue;
      out.coeff(i + j) = ypoly_add(out.coeff(i + j), ypoly_mul(a.coeff(i), b.coeff(j)), 1);
    }
  }
  return out;
}

BiSeries div(const BiSeries& a, const BiSeries& b) {
  if (b.prec() == 0 || b.coeff(0).size() != 1 || b.coeff(0)[0] == 0)
    throw std::domain_error("bivariate division needs a nonzero constant leading coefficient");
  Rat inv = 1 / b.coeff(0)[0];
  BiSeries out(std::min(a.prec(), b.prec()));
  for (int i = 0; i < out.prec(); ++i) {
    YPoly acc = a.coeff(i);
    for (int j = 0; j < i; ++j) {
      if (out.coeff(j).empty() || b.coeff(i - j).empty()) continue;
      acc = ypoly_add(acc, ypoly_mul(out.coeff(j), b.coeff(i - j)), -1);
    }
    out.coeff(i) = ypoly_scale(acc, inv);
  }
  return out;
}

}  // namespace partpat
