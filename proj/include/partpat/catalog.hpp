#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "partpat/count.hpp"
#include "partpat/rgs.hpp"
#include "partpat/series.hpp"

namespace partpat {

/// Data directory holding the catalog and classification fixtures.  The
/// compile-time default points at the source tree; PARTPAT_DATA_DIR in the
/// environment overrides it.
std::string default_data_dir();

/// Evaluate a prefix expression over truncated series.  Atoms are
/// polynomials "(p c0 c1 ...)"; operators are + - * / sqrt, where /
/// tolerates removable singularities (monomial factors in the divisor).
Series eval_series_expr(std::string_view expr, int order);

struct OracleSpec {
  std::vector<Rgs> patterns;
  std::string filter;  // "" or "initial_staircase"
};

/// One verifiable closed form: a recipe for the expected series, the
/// avoidance class whose counts it must reproduce, and a human-readable
/// statement of the claim.
struct CatalogEntry {
  std::string id;
  std::string kind;  // rational | algebraic | recurrence
  std::string anchor;
  nlohmann::json recipe;
  OracleSpec oracle;
};

class GfCatalog {
 public:
  static GfCatalog load(const std::string& path);
  static GfCatalog load_default();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& id) const;

  /// Expands the entry's recipe; throws std::out_of_range for unknown ids.
  Series expand(const std::string& id, int order) const;
  Series expand(const CatalogEntry& entry, int order) const;

  /// Exact avoider counts for the entry's oracle class.
  CountVector oracle_counts(const CatalogEntry& entry, int max_n) const;

  struct VerifyResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    int first_mismatch = -1;  // order of the first differing coefficient
  };
  VerifyResult verify(const CatalogEntry& entry, int order) const;
  std::vector<VerifyResult> verify_all(int order, int workers = 1) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace partpat
