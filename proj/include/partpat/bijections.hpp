#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partpat/count.hpp"
#include "partpat/pattern.hpp"
#include "partpat/rgs.hpp"

namespace partpat {

struct BijectionReport {
  std::string name;
  int n = 0;
  BigInt domain_count = 0;
  BigInt codomain_count = 0;
  bool is_bijective = false;
  /// A colliding pair of domain elements or a missed codomain element.
  std::optional<std::pair<std::string, std::string>> counterexample;
};

/// Generic exhaustive check that `map` sends `domain` bijectively onto
/// `codomain` (elements rendered with str() for counterexamples).
BijectionReport verify_bijection(std::string name, int n, const std::vector<Rgs>& domain,
                                 const std::vector<Rgs>& codomain,
                                 const std::function<Rgs(const Rgs&)>& map);

/// 1s kept, everything larger collapsed to 2; restricted to 122-avoiders
/// this maps P_n(122) bijectively onto P_n(123).  Throws std::invalid_argument
/// when p contains 122.
Rgs f_122_to_123(const Rgs& p);

/// Bijectivity of f_122_to_123 between P_n(122) and P_n(123) at one size.
BijectionReport verify_f122_bijection(int n);

/// Containment preservation: for every 122-avoiding host of size <= max_n,
/// host contains tau iff its image contains the image of tau; consequently
/// the map restricts to a bijection P_n(122,tau) -> P_n(123,f(tau)), which
/// is also checked.  tau must avoid 122 and have at least two blocks.
BijectionReport verify_f122_containment(const Pattern& tau, int max_n);

/// The two composition constructions (component swap, trailing-ones merge)
/// checked exhaustively for all applicable a of size <= max_size and all b
/// of size <= max_size + 1.
std::vector<BijectionReport> verify_composition_bijections(int max_size);

/// Word rewritings between classes avoiding {1231,1233} and {1123,1233} /
/// {1123,1232}, preserving size and block count.  Defined on members of
/// P_{n,k}(1231,1233) with k >= 3 (identity for k <= 2).
Rgs rewrite_1231_to_1123_a(const Rgs& p);  // image avoids {1123,1233}
Rgs rewrite_1231_to_1123_b(const Rgs& p);  // image avoids {1123,1232}

/// Both rewritings verified as block-count-preserving bijections for all
/// sizes n <= max_n.
std::vector<BijectionReport> verify_rewrite_bijections(int max_n);

}  // namespace partpat
