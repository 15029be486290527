#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricvb/bundle.hpp"

namespace toricvb {

enum class CensusType { I, II, III };

std::string to_string(CensusType t);

/// A canonical representative of a non-split rank-2 d-aCM toric bundle on P^2
/// up to twists by O(dt): a_0^2 = a_1^2 = -1, a_2^2 >= 0 and
/// a_0^1 + a_1^1 + a_2^1 <= d - 1.
struct CensusEntry {
  ShiftingIndices delta;
  std::int64_t d = 0;
  CensusType type = CensusType::I;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// True iff delta satisfies the CensusEntry constraints for d.
bool in_si(const ShiftingIndices& delta, std::int64_t d);

/// d-aCM test from the shifting indices alone.
///
/// A triple (j_0, j_1, j_2) with dim E^ρ_i(j_i) = 1 has j_i ranging over the
/// integer interval (a_i^2, a_i^1]; the sums of such triples therefore fill
/// exactly [L, U] with L = sum(a_i^2 + 1), U = sum(a_i^1). The bundle fails to
/// be d-aCM iff some multiple of d lies in [L, U].
bool is_d_acm_fast(const ShiftingIndices& delta, std::int64_t d);

/// d-aCM test from cohomology: every middle-degree h^p(E(dt)) vanishes over
/// all twists t whose middle-degree support can be nonempty, plus one twist
/// of margin on each side. Throws InvariantViolation if a margin twist has
/// middle cohomology (which would mean the range derivation is wrong).
bool is_d_acm_oracle(const ToricBundle& e, std::int64_t d);

/// Twists t for which H^p(E(dt)) may be nonzero in some middle degree,
/// widened by `margin` on both sides. Empty pair (lo > hi) if none.
std::pair<std::int64_t, std::int64_t> oracle_twist_range(const ToricBundle& e, std::int64_t d,
                                                         std::int64_t margin = 1);

/// Canonical SI(d) representative of the class of delta under principal
/// twists and twists by O(dt); nullopt when the bundle is not d-aCM.
std::optional<CensusEntry> normalize(const ShiftingIndices& delta, std::int64_t d);

CensusType classify_type(const ShiftingIndices& delta, std::int64_t d);

/// All of SI(d), lexicographically sorted, each tagged with its type.
std::vector<CensusEntry> enumerate_si(std::int64_t d);

/// (d-1) d (d+1) (d+2) / 24.
std::int64_t count_closed(std::int64_t d);

/// S(2) = 1, S(3) = 5, S(d) = 2 S(d-1) - S(d-2) + C(d, 2).
std::int64_t count_recurrence(std::int64_t d);

/// Every valid delta with a_i^2 in [-1, d] and a_i^1 - a_i^2 in [1, d + 1].
std::vector<ShiftingIndices> census_box(std::int64_t d);

/// SI(d) rebuilt by normalizing every d-aCM tuple of census_box(d) and
/// removing duplicates. With `use_oracle`, membership is decided by
/// is_d_acm_oracle instead of is_d_acm_fast.
std::vector<ShiftingIndices> brute_force_census(std::int64_t d, bool use_oracle = false);

}  // namespace toricvb
