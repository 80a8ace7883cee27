#ifndef EVENSPIN_VERIFY_HPP
#define EVENSPIN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

// End-to-end reproduction checks. Each criterion is exact: a check passes
// only on equality.
namespace evenspin::verify {

struct CriterionResult {
  int id;
  std::string title;
  std::string anchor;
  bool passed;
  std::string detail;
};

struct OutOfScopeItem {
  std::string statement;
  std::string reason;
};

inline constexpr std::uint64_t kRandomSeed = 20240601;
inline constexpr int kRandomClasses = 1000;
inline constexpr int kRandomEpsilons = 20;

CriterionResult check_intersection_table();
CriterionResult check_picard_relation();
CriterionResult check_nef_cone_equivalence();
CriterionResult check_canonical_and_bielliptic();
CriterionResult check_thresholds();
CriterionResult check_group_structure();
CriterionResult check_segre_geometry();
CriterionResult check_theta_combinatorics();
CriterionResult check_invariant_dimensions();
CriterionResult check_out_of_scope_declared();

/// All criteria in order 1..10.
std::vector<CriterionResult> run_all();

/// Statements that are not reproducible by finite computation here.
const std::vector<OutOfScopeItem>& declared_out_of_scope();

}  // namespace evenspin::verify

#endif  // EVENSPIN_VERIFY_HPP
