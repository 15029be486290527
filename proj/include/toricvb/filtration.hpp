#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "toricvb/subspace.hpp"

namespace toricvb {

struct FiltrationStep {
  std::int64_t until;
  Subspace space;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// A full decreasing Z-filtration E(j) of Q^r.
///
/// Stored as steps (until_0, S_0), ..., (until_k, S_k) with
///   E(j) = S_0                  for j <= until_0   (S_0 is the whole space)
///   E(j) = S_i                  for until_{i-1} < j <= until_i
///   E(j) = 0                    for j > until_k.
/// The spaces strictly decrease, none is zero, and the until values strictly
/// increase, so equal filtrations have equal step lists.
class Filtration {
 public:
  /// Validates the step list; throws InvariantViolation on failure.
  Filtration(std::size_t ambient_dim, std::vector<FiltrationStep> steps);

  /// Full space for j <= until, zero afterwards.
  static Filtration single_drop(std::size_t ambient_dim, std::int64_t until);

  /// Builds the filtration that agrees with `space_at` on `points` and is
  /// constant on each half-open gap (p_{i-1}, p_i]. `space_at` must give the
  /// full space at the smallest point; the result is zero above the largest.
  static Filtration tabulate(std::size_t ambient_dim, std::vector<std::int64_t> points,
                             const std::function<Subspace(std::int64_t)>& space_at);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }

  const Subspace& eval(std::int64_t j) const;
  std::size_t dim_at(std::int64_t j) const { return eval(j).dim(); }

  /// Largest j with E(j) equal to the whole space.
  std::int64_t last_full() const { return steps_.front().until; }
  /// Largest j with E(j) nonzero.
  std::int64_t last_nonzero() const { return steps_.back().until; }

  Filtration shifted(std::int64_t by) const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<FiltrationStep> steps_;
  Subspace zero_;
};

}  // namespace toricvb
