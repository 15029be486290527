#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toricvb/fan.hpp"
#include "toricvb/filtration.hpp"

namespace toricvb {

/// A torus-equivariant vector bundle on P^n, given by one filtration of the
/// generic fiber Q^r per ray.
class ToricBundle {
 public:
  ToricBundle(FanPn fan, std::vector<Filtration> filtrations);

  const FanPn& fan() const { return fan_; }
  std::size_t rank() const { return filtrations_.front().ambient_dim(); }
  const Filtration& filtration(int ray) const { return filtrations_.at(static_cast<std::size_t>(ray)); }
  const std::vector<Filtration>& filtrations() const { return filtrations_; }

  friend bool operator==(const ToricBundle&, const ToricBundle&) = default;

 private:
  FanPn fan_;
  std::vector<Filtration> filtrations_;
};

/// Shifting indices of a non-split rank-2 bundle on P^2.
///
/// Ray i drops from dimension 2 to 1 after `lower[i]` (a_i^2) and from 1 to 0
/// after `upper[i]` (a_i^1). Tuples order lexicographically as
/// (a_0^2, a_0^1, a_1^2, a_1^1, a_2^2, a_2^1).
struct ShiftingIndices {
  std::array<std::int64_t, 3> lower{};
  std::array<std::int64_t, 3> upper{};

  static ShiftingIndices from_tuple(const std::array<std::int64_t, 6>& t);
  /// Parses "a02,a01;a12,a11;a22,a21". Throws ParseError.
  static ShiftingIndices parse(std::string_view text);

  std::array<std::int64_t, 6> tuple() const;
  std::string str() const;
  /// Length of the one-dimensional band of ray i, a_i^1 - a_i^2.
  std::int64_t band(int i) const { return upper[i] - lower[i]; }
  bool valid() const;
  /// Throws InvariantViolation unless valid().
  void validate() const;

  friend bool operator==(const ShiftingIndices&, const ShiftingIndices&) = default;
  friend std::strong_ordering operator<=>(const ShiftingIndices& a, const ShiftingIndices& b) {
    return a.tuple() <=> b.tuple();
  }
};

ToricBundle line_bundle(const FanPn& fan, const Divisor& d);
ToricBundle tangent_bundle(const FanPn& fan);

/// Rank-2 bundle on P^2 with W_0 = <(1,0)>, W_1 = <(0,1)>, W_2 = <(1,1)>.
ToricBundle from_shifting_indices(const ShiftingIndices& delta);

/// Throws DomainError for rank != 2 or n != 2, SplitBundleError for split E.
ShiftingIndices shifting_indices(const ToricBundle& e);

ToricBundle twist(const ToricBundle& e, const Divisor& d);
ToricBundle direct_sum(const ToricBundle& e, const ToricBundle& f);
ToricBundle tensor(const ToricBundle& e, const ToricBundle& f);

/// E^*(j) = annihilator of E(1 - j) in the dual space.
ToricBundle dual(const ToricBundle& e);

/// True iff every subspace in every filtration is a coordinate subspace of
/// one common basis.
bool is_split(const ToricBundle& e);

/// True iff, on every maximal cone, the graded pieces E^[σ]_m add up to the
/// rank.
bool check_locally_free(const ToricBundle& e);

/// Strict triangle inequality on the band lengths. Rank 2 on P^2 only;
/// throws SplitBundleError for split bundles.
bool is_slope_stable(const ToricBundle& e);
bool is_slope_stable(const ShiftingIndices& delta);

}  // namespace toricvb
