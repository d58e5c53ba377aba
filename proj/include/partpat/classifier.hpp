#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partpat/count.hpp"
#include "partpat/rgs.hpp"

namespace partpat {

enum class EquivNotion { wilf, nc, cc, strong };

EquivNotion parse_notion(std::string_view name);
std::string notion_name(EquivNotion n);

/// One classification subject: a label (pattern literals joined by commas)
/// and the pattern set whose avoider counts feed the signature.  For the
/// non-crossing notions the label is the single pattern tau and 1212 is
/// added implicitly.
struct PatternSet {
  std::string label;
  std::vector<Rgs> patterns;
};

std::vector<PatternSet> generate_three_k(int k);     // {sigma, tau}, sigma size 3
std::vector<PatternSet> generate_four_four();        // unordered pairs of size-4 patterns
std::vector<PatternSet> generate_nc_tau(int size);   // noncrossing tau of given size

/// Per-size chunks of the equivalence signature; two subjects are grouped
/// together iff all chunks match.
struct Signature {
  std::vector<std::string> per_n;
  bool operator==(const Signature&) const = default;
};

Signature signature_of(const PatternSet& subject, EquivNotion notion, int max_n);

struct EquivClass {
  std::vector<std::string> members;  // sorted
  /// Smallest n distinguishing this class from the next one in the report
  /// (-1 for the last class).
  int first_separating_n_vs_next = -1;
};

struct ClassificationReport {
  std::string family;
  EquivNotion notion = EquivNotion::wilf;
  int max_n = 0;
  std::vector<EquivClass> classes;  // ordered by smallest member
  std::vector<std::string> diff;    // empty unless checked against a fixture
  std::string fixture_id;
};

/// Groups subjects by exact signature equality up to max_n.  Signatures are
/// computed concurrently when workers > 1; grouping is a single-threaded
/// reduction over the input order, so output does not depend on the worker
/// count.
ClassificationReport classify(const std::vector<PatternSet>& subjects, EquivNotion notion,
                              int max_n, int workers = 1, std::string family = "");

/// Expected classification shipped as a data file: one class per line,
/// members in pattern literal format; "@rest-singletons" declares every
/// unlisted member of the family a singleton class.
struct Fixture {
  std::string id;
  std::string anchor;
  std::vector<std::vector<std::string>> classes;
  bool rest_singletons = false;
};

Fixture load_fixture(const std::string& id);                     // from the data dir
Fixture load_fixture_file(const std::string& id, const std::string& path);

/// Empty iff the computed classes equal the fixture as a set partition of
/// the family; otherwise one line per mismatched class.
std::vector<std::string> diff_vs_fixture(const ClassificationReport& report,
                                         const Fixture& fixture);

/// Classifies the (3,k) pairs and returns (observed class count, 1 + xi(k)).
std::pair<int, BigInt> check_3k_bound(int k, int max_n, int workers = 1);

/// Bounded strong-partition-equivalence check: block-size profiles of the
/// avoider classes agree for every n <= max_n.
bool strong_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n);

/// As above, returning the first size with differing profiles.
std::optional<int> strong_equiv_first_diff(const Rgs& sigma, const Rgs& tau, int max_n);

/// Bounded cc-equivalence check: the (size, component count) distributions
/// of noncrossing avoiders agree up to max_n.  Throws std::invalid_argument
/// when either pattern contains 1212.
bool cc_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n);

/// Bounded nc-equivalence check: avoider counts of {1212,sigma} and
/// {1212,tau} agree up to max_n.
bool nc_equiv_check(const Rgs& sigma, const Rgs& tau, int max_n);

/// simcomp collision search over 2-free integer partitions of size <= k:
/// pairs of distinct partitions whose dominating counts agree through max_n.
std::vector<std::pair<std::string, std::string>> search_simcomp_collisions(int k, int max_n);

}  // namespace partpat
