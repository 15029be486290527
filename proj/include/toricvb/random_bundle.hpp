#pragma once

#include <cstdint>
#include <random>

#include "toricvb/bundle.hpp"

namespace toricvb {

/// Random generators for property checks. Deterministic for a given engine
/// state.
struct RandomBundleOptions {
  int n = 2;
  std::int64_t index_min = -4;
  std::int64_t index_max = 4;
  // Entries are p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
  std::int64_t max_numerator = 3;
  std::int64_t max_denominator = 3;
};

Rational random_rational(std::mt19937_64& rng, const RandomBundleOptions& opts = {});

/// A random subspace of Q^ambient_dim of the given dimension.
Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient_dim, std::size_t dim,
                         const RandomBundleOptions& opts = {});

/// A random filtration: a random chain of nested subspaces dropping at
/// distinct random indices in [index_min, index_max].
Filtration random_filtration(std::mt19937_64& rng, std::size_t rank, const RandomBundleOptions& opts = {});

ToricBundle random_bundle(std::mt19937_64& rng, std::size_t rank, const RandomBundleOptions& opts = {});

/// Random valid shifting indices with entries in [index_min, index_max].
ShiftingIndices random_shifting_indices(std::mt19937_64& rng, const RandomBundleOptions& opts = {});

}  // namespace toricvb
