#include "partpat/formulas.hpp"

#include <stdexcept>

namespace partpat {

BinomialTable::BinomialTable(int max_n) {
  rows_.resize(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k)
      row[static_cast<size_t>(k)] = rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                                    rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
  }
}

const BigInt& BinomialTable::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BiSeries gf_112_family(const Composition& a, int order) {
  if (a.parts.empty()) throw std::invalid_argument("gf_112_family: composition must be nonempty");
  int prec = order + 1;
  using YPoly = BiSeries::YPoly;
  // 1 - x(1+y) + x^(a_i) y as a BiSeries
  auto denom_factor = [&](int ai) {
    std::vector<YPoly> c(static_cast<size_t>(prec));
    if (prec > 0) c[0] = {Rat(1)};
    if (prec > 1) c[1] = {Rat(-1), Rat(-1)};
    if (ai < prec) {
      YPoly& p = c[static_cast<size_t>(ai)];
      if (p.size() < 2) p.resize(2, Rat(0));
      p[1] += 1;
    }
    return BiSeries::from_coeffs(std::move(c), prec);
  };
  BiSeries one_minus_x = BiSeries::from_coeffs({{Rat(1)}, {Rat(-1)}}, prec);
  BiSeries total(prec);
  BiSeries denom = BiSeries::constant(1, prec);
  int xpow = 0;
  for (int j = 0; j < a.length(); ++j) {
    denom = denom * denom_factor(a.parts[static_cast<size_t>(j)]);
    // numerator x^(a_1+..+a_j) y^j (1-x)
    if (xpow < prec) {
      std::vector<YPoly> mono(static_cast<size_t>(prec));
      YPoly yj(static_cast<size_t>(j) + 1, Rat(0));
      yj[static_cast<size_t>(j)] = 1;
      mono[static_cast<size_t>(xpow)] = yj;
      BiSeries num = BiSeries::from_coeffs(std::move(mono), prec) * one_minus_x;
      total = total + div(num, denom);
    }
    xpow += a.parts[static_cast<size_t>(j)];
  }
  return total;
}

Series gf_at_most_blocks(int m, int order) {
  int prec = order + 1;
  Series total = Series::one(prec);
  Series term = Series::one(prec);
  for (int k = 1; k <= m; ++k) {
    // x^k / prod_{j<=k} (1-jx) built incrementally
    term = div(term * Series::x(prec), Series::poly(std::vector<Rat>{1, Rat(-k)}, prec));
    total = total + term;
  }
  return total;
}

Series gf_staircase_pair(int m, int k, int order) {
  if (m < 2 || k < m) throw std::invalid_argument("gf_staircase_pair: need k >= m >= 2");
  int prec = order + 1;
  Series correction = div(Series::x(prec), Series::poly(std::vector<Rat>{1, Rat(-m)}, prec));
  Series shrink = div(Series::x(prec), Series::poly(std::vector<Rat>{1, Rat(-(m - 1))}, prec));
  for (int i = 0; i < k - m; ++i) correction = correction * shrink;
  for (int j = 1; j <= m - 1; ++j)
    correction = correction * div(Series::x(prec), Series::poly(std::vector<Rat>{1, Rat(-j)}, prec));
  return gf_at_most_blocks(m, order) - correction;
}

Series gf_123_ones(int k, int order) {
  if (k < 1) throw std::invalid_argument("gf_123_ones: need k >= 1");
  int prec = order + 1;
  BinomialTable binom(2 * k);
  Series out = Series::one(prec);
  for (int a = 1; a <= k - 1; ++a)
    for (int b = 0; b <= k - 1; ++b)
      if (a + b < prec) out.coeff(a + b) += Rat(binom.at(a + b - 1, b));
  return out;
}

CountVector first_block_binomial_transform(const CountVector& base) {
  CountVector out;
  out.max_n = base.max_n;
  out.counts.assign(static_cast<size_t>(out.max_n) + 1, 0);
  out.counts[0] = 1;
  BinomialTable binom(out.max_n);
  for (int n = 1; n <= out.max_n; ++n) {
    BigInt acc = 0;
    for (int k = 0; k <= n - 1; ++k) acc += binom.at(n - 1, k) * base[k];
    out.counts[static_cast<size_t>(n)] = acc;
  }
  return out;
}

CountVector ones21_set_transform(int k, const CountVector& base) {
  if (k < 3) throw std::invalid_argument("ones21_set_transform: pattern size must be >= 3");
  CountVector out;
  out.max_n = base.max_n;
  out.counts.assign(static_cast<size_t>(out.max_n) + 1, 0);
  out.counts[0] = 1;
  BinomialTable binom(out.max_n + k);
  for (int n = 1; n <= out.max_n; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= std::min(k - 2, n); ++i) acc += base[n - i] * binom.at(n - 1, i - 1);
    for (int i = k - 1; i <= n; ++i) acc += base[n - i] * binom.at(n - i + k - 3, k - 3);
    out.counts[static_cast<size_t>(n)] = acc;
  }
  return out;
}

CountVector double_ones21_recurrence(std::span<const BigInt> base, int max_n) {
  if (base.size() != 4) throw std::invalid_argument("double_ones21_recurrence: need c_0..c_3");
  CountVector out;
  out.max_n = max_n;
  out.counts.assign(static_cast<size_t>(max_n) + 1, 0);
  for (int n = 0; n <= std::min(max_n, 3); ++n) out.counts[static_cast<size_t>(n)] = base[static_cast<size_t>(n)];
  for (int n = 4; n <= max_n; ++n) {
    BigInt acc = out.counts[static_cast<size_t>(n - 1)] + (n - 1) * out.counts[static_cast<size_t>(n - 2)];
    for (int j = 0; j <= n - 3; ++j) acc += out.counts[static_cast<size_t>(j)];
    out.counts[static_cast<size_t>(n)] = acc;
  }
  return out;
}

Series gf_1213_add_block(const Series& h_tau) {
  int prec = h_tau.prec();
  Series one = Series::one(prec);
  Series x = Series::x(prec);
  Series a = div(x, Series::poly(std::vector<Rat>{1, -1}, prec));
  Series b = div(x * x, Series::poly(std::vector<Rat>{1, -3, 2}, prec));  // (1-x)(1-2x)
  return one + a * h_tau + b * (h_tau - one);
}

namespace {

// A and B share the recurrence shape
//   x_{n,k,t} = x_{n-1,k-1,t} + sum_{j=t-1}^{n-k+1} x_{n-2,k-1,j}
// and differ only in the explicit k = 2 rows.
FascTriangle run_fasc_recurrence(FascVariant variant, int max_n) {
  FascTriangle tri;
  tri.variant = variant;
  tri.max_n = max_n;
  auto& e = tri.entries;

  for (int n = 2; n <= max_n; ++n)
    for (int t = 2; t <= n; ++t) {
      BigInt v = 0;
      if (variant == FascVariant::A) {
        if (n == 2) {
          v = t == 2 ? 1 : 0;
        } else if (t == 2) {
          v = n - 2;
        } else if (t == n) {
          v = 2;
        } else {
          v = n - t + 1;
        }
      } else {  // B: only sizes up to 4 have two-block members
        if (n == 2) v = t == 2 ? 1 : 0;
        if (n == 3) v = t == 2 ? 1 : (t == 3 ? 2 : 0);
        if (n == 4) v = (t >= 2 && t <= 4) ? 1 : 0;
      }
      if (v != 0) e[{n, 2, t}] = v;
    }

  for (int n = 3; n <= max_n; ++n)
    for (int k = 3; k <= n; ++k)
      for (int t = 2; t <= n - k + 2; ++t) {
        BigInt v = tri.at(n - 1, k - 1, t);
        for (int j = t - 1; j <= n - k + 1; ++j) v += tri.at(n - 2, k - 1, j);
        if (v != 0) e[{n, k, t}] = v;
      }
  return tri;
}

}  // namespace

FascTriangle triangle_a_recurrence(int max_n) { return run_fasc_recurrence(FascVariant::A, max_n); }

FascTriangle triangle_b_recurrence(int max_n) { return run_fasc_recurrence(FascVariant::B, max_n); }

FascTriangle triangle_c_recurrence(int max_n) {
  FascTriangle b = triangle_b_recurrence(max_n);
  FascTriangle tri;
  tri.variant = FascVariant::C;
  tri.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) {
    // k = 2 base row
    if (n == 2) {
      tri.entries[{2, 2, 2}] = 1;
    } else {
      if (n - 2 > 0) tri.entries[{n, 2, 2}] = n - 2;
      tri.entries[{n, 2, 3}] = 1;
    }
  }
  for (int n = 3; n <= max_n; ++n)
    for (int k = 3; k <= n; ++k)
      for (int t = 2; t <= n - k + 2; ++t) {
        BigInt v = b.at(n - 1, k - 1, t);
        for (int j = t; j <= n - k + 1; ++j) v += tri.at(n - 1, k, j);
        if (v != 0) tri.entries[{n, k, t}] = v;
      }
  return tri;
}

Series gf_from_poly_formula(std::span<const long> low_values, int from_n, const Rat& scale,
                            int pow2_coeff, int pow2_offset, std::span<const long> poly,
                            int order) {
  Series out(order + 1);
  for (size_t i = 0; i < low_values.size() && static_cast<int>(i) <= order; ++i)
    out.coeff(static_cast<int>(i)) = low_values[i];
  for (int n = from_n; n <= order; ++n) {
    Rat q = 0;
    for (size_t d = poly.size(); d > 0; --d) q = q * n + poly[d - 1];
    int e = pow2_coeff * n + pow2_offset;
    Rat p2 = 1;
    for (int i = 0; i < std::abs(e); ++i) p2 *= 2;
    if (e < 0) p2 = 1 / p2;
    out.coeff(n) = scale * p2 * q;
  }
  return out;
}

}  // namespace partpat
