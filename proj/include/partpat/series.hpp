#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "partpat/count.hpp"

namespace partpat {

using Rat = mpq_class;

/// Truncated formal power series with exact rational coefficients.  prec()
/// is the number of known coefficients, so a series of precision N+1 is
/// trusted through the x^N term; binary operations truncate to the smaller
/// precision and never read past it.
class Series {
 public:
  Series() = default;
  explicit Series(int prec) : c_(static_cast<size_t>(prec), Rat(0)) {}

  static Series zero(int prec) { return Series(prec); }
  static Series one(int prec);
  static Series x(int prec);
  static Series poly(std::span<const long> coeffs, int prec);
  static Series poly(std::vector<Rat> coeffs, int prec);

  int prec() const { return static_cast<int>(c_.size()); }
  const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  Rat& coeff(int i) { return c_[static_cast<size_t>(i)]; }

  /// Index of the first nonzero coefficient (prec() if identically zero so far).
  int valuation() const;

  Series truncated(int prec) const;

  bool operator==(const Series&) const = default;

 private:
  std::vector<Rat> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rat& s, const Series& a);

/// Throws std::domain_error when b has a zero constant term.
Series div(const Series& a, const Series& b);

/// Division that tolerates a divisor of positive valuation v when the
/// dividend's valuation is at least v; the result loses v coefficients of
/// precision.  Catalog recipes with removable singularities rely on this.
Series div_shifted(const Series& a, const Series& b);

/// Square root with sqrt(c0) rational; throws std::domain_error otherwise.
Series sqrt(const Series& a);

/// outer(inner); inner must have a zero constant term.
Series compose(const Series& outer, const Series& inner);

/// Exact square root of a rational that is a perfect square of a rational;
/// throws std::domain_error otherwise.
Rat sqrt_rat(const Rat& v);

/// Power series in x whose coefficients are dense polynomials in a second
/// variable y (coefficient vectors indexed by the y-exponent).
class BiSeries {
 public:
  using YPoly = std::vector<Rat>;

  BiSeries() = default;
  explicit BiSeries(int prec) : c_(static_cast<size_t>(prec)) {}

  static BiSeries constant(const Rat& v, int prec);
  /// x-polynomial whose i-th coefficient is the given y-polynomial.
  static BiSeries from_coeffs(std::vector<YPoly> coeffs, int prec);

  int prec() const { return static_cast<int>(c_.size()); }
  const YPoly& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  YPoly& coeff(int i) { return c_[static_cast<size_t>(i)]; }

  /// Specialize y to a rational, yielding an ordinary Series.
  Series at_y(const Rat& y) const;

  /// Coefficient of x^n y^k (0 when beyond the stored y-degree).
  Rat coeff_xy(int n, int k) const;

  bool operator==(const BiSeries&) const = default;

 private:
  std::vector<YPoly> c_;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);

/// Divisor's x-constant coefficient must be a nonzero constant in y.
BiSeries div(const BiSeries& a, const BiSeries& b);

}  // namespace partpat
