#pragma once

#include <span>

#include "partpat/compositions.hpp"
#include "partpat/count.hpp"
#include "partpat/series.hpp"

namespace partpat {

/// Binomial coefficient table, exact.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);
  const BigInt& at(int n, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

/// Block-counting generating function for partitions avoiding 112 together
/// with the unique 112-avoider whose i-th block has size a_i:
///   sum_j x^(a_1+..+a_j) y^j (1-x) / prod_{i<=j+1} (1 - x(1+y) + x^(a_i) y),
/// truncated in x.  Specializing y := 1 gives the plain avoider counts.
BiSeries gf_112_family(const Composition& a, int order);

/// Ordinary generating function of partitions with at most m blocks.
Series gf_at_most_blocks(int m, int order);

/// Avoiders of the pair {12..(m+1), tau} for any tau with m blocks whose
/// first m-1 letters are 12..(m-1); depends only on k = |tau|:
///   gf_at_most_blocks(m) - (x/(1-(m-1)x))^(k-m) * x/(1-mx) * prod_{j<m} x/(1-jx).
Series gf_staircase_pair(int m, int k, int order);

/// Avoiders of {123, 1^k}: 1 + sum_{a=1}^{k-1} sum_{b=0}^{k-1} C(a+b-1,b) x^(a+b).
Series gf_123_ones(int k, int order);

/// Counts for T' = {1(tau+1) : tau in T} from counts for T:
///   p_n(T') = sum_{k<n} C(n-1,k) p_k(T).
CountVector first_block_binomial_transform(const CountVector& base);

/// Counts for {1^a 2 1^b} u T' from counts for {1^a 2 1^b} u T, where
/// k = a+b+1 >= 3 is the size of the ones-two-ones pattern:
///   f_n = sum_{i=1}^{k-2} f_{n-i} C(n-1,i-1)
///       + sum_{i=k-1}^{n} f_{n-i} C(n-i+k-3,k-3).
CountVector ones21_set_transform(int k, const CountVector& base);

/// Self-consistent recurrence shared by avoiders of {1112,1121} and of
/// {1121,1211}: c_n = c_{n-1} + (n-1) c_{n-2} + sum_{j<=n-3} c_j for n >= 4.
CountVector double_ones21_recurrence(std::span<const BigInt> base, int max_n);

/// Generating function transform for avoiding 1213 and 1(tau+1) (tau ending
/// above 1), from the gf for avoiding 1213 and tau:
///   H' = 1 + x/(1-x) H + x^2/((1-x)(1-2x)) (H - 1).
Series gf_1213_add_block(const Series& h_tau);

/// Triangles computed by the recurrences (the enumeration triangles in
/// enumerate.hpp are the oracles they are checked against).
FascTriangle triangle_a_recurrence(int max_n);
FascTriangle triangle_b_recurrence(int max_n);
FascTriangle triangle_c_recurrence(int max_n);

/// Series whose n-th coefficient is scale * 2^(c2*n+c2off) * q(n) for
/// n >= from_n, preceded by the explicitly given low-order values.
Series gf_from_poly_formula(std::span<const long> low_values, int from_n, const Rat& scale,
                            int pow2_coeff, int pow2_offset, std::span<const long> poly,
                            int order);

}  // namespace partpat
