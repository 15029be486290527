#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toricvb/bundle.hpp"

namespace toricvb {

/// 0 -> O(left) -> ⊕_{(i,j,k) in A} O(middle) -> E -> 0 for a rank-2 toric
/// bundle on P^2, with A = {(0,1,2), (1,2,0), (2,0,1)},
///   left            = a_0^2 D_0 + a_1^2 D_1 + a_2^2 D_2,
///   middle[(i,j,k)] = a_i^2 D_i + a_j^2 D_j + a_k^1 D_k.
struct PerlingResolution {
  Divisor left;
  std::array<Divisor, 3> middle;

  static constexpr std::array<std::array<int, 3>, 3> kIndexSet = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

  /// "0 -> O(-D0-D1) -> O(...) ⊕ O(...) ⊕ O(...) -> E -> 0"
  std::string str() const;
};

PerlingResolution perling_resolution(const ShiftingIndices& delta);

/// chi(O(k)) on P^2.
std::int64_t chi_line(std::int64_t k);

struct ResolutionReport {
  struct ChiRow {
    std::int64_t t;
    std::int64_t from_cohomology;
    std::int64_t from_resolution;
  };

  ShiftingIndices delta;
  bool rank_ok = false;
  std::int64_t c1_filtration = 0;
  std::int64_t c1_resolution = 0;
  std::vector<ChiRow> chi_rows;

  bool c1_ok() const { return c1_filtration == c1_resolution; }
  bool chi_ok() const;
  bool ok() const { return rank_ok && c1_ok() && chi_ok(); }
  std::string str() const;
};

/// Checks rank, c1 and chi(E(t)) for t_min <= t <= t_max against the terms
/// of the resolution. Never throws on a mismatch; inspect ok().
ResolutionReport verify_resolution(const ShiftingIndices& delta, std::int64_t t_min = -5, std::int64_t t_max = 5);

}  // namespace toricvb
