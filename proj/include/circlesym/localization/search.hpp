#pragma once

#include <cstdint>
#include <vector>

#include "circlesym/localization/configuration.hpp"

namespace circlesym::localization {

struct AmbientRanges {
  std::int64_t t_min = 1;
  std::int64_t t_max = 10;
  std::int64_t rho_min = -10;
  std::int64_t rho_max = 0;
};

struct SearchBounds {
  std::int64_t max_weight = 5;
  std::int64_t max_abs_a = 5;
  std::int64_t max_abs_eval = 10;
  /// Genus of fixed surfaces and b1 of fixed 4-manifolds range over [0, max_genus].
  std::int64_t max_genus = 1;
};

struct SearchOptions {
  Template shape = Template::two_surfaces;
  AmbientRanges ranges;
  SearchBounds bounds;
  Flags flags;
  /// All normal weights equal to 1.
  bool semifree = false;
  std::uint64_t budget = 100'000'000;
  int workers = 1;
};

struct SearchResult {
  /// Sorted, without duplicates.
  std::vector<Configuration> hits;
  /// Enumeration nodes charged against the budget.
  std::uint64_t nodes = 0;
};

/// Largest accepted bounds; beyond them the search refuses with UsageError.
inline constexpr std::int64_t kMaxSearchWeight = 16;
inline constexpr std::int64_t kMaxSearchLift = 1000;
inline constexpr std::int64_t kMaxSearchEval = 1'000'000;

/// Throws UsageError for empty or out-of-range bounds.
void validate_options(const SearchOptions& opt);

/// Nodes search_case would visit; deterministic, computed before any work.
std::uint64_t search_nodes(const SearchOptions& opt);

/// Every consistent canonical configuration of the template within bounds.
///
/// One component (the anchor) is enumerated with lift weight 0 and indexed
/// by the exact coefficients of l in its x^3 and p1(M) x data; the other
/// components are enumerated with relative lift weights and joined against
/// the anchor index, split across `workers` OpenMP threads. Survivors are
/// expanded over lift shifts and genera and run through the verifier.
/// Throws BudgetError when search_nodes exceeds the budget.
SearchResult search_case(const SearchOptions& opt);

/// Plain nested enumeration over every field, t and rho, filtered by
/// is_canonical and is_consistent. Single-threaded; small bounds only.
SearchResult search_case_reference(const SearchOptions& opt);

}  // namespace circlesym::localization
