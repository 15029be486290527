#include "toricvb/random_bundle.hpp"

#include <algorithm>
#include <numeric>

namespace toricvb {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, const RandomBundleOptions& opts) {
  return Rational(uniform(rng, -opts.max_numerator, opts.max_numerator), uniform(rng, 1, opts.max_denominator));
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient_dim, std::size_t dim,
                         const RandomBundleOptions& opts) {
  while (true) {
    std::vector<Vector> gens(dim, Vector(ambient_dim));
    for (auto& v : gens)
      for (auto& x : v) x = random_rational(rng, opts);
    Subspace s = Subspace::span(gens, ambient_dim);
    if (s.dim() == dim) return s;
  }
}

Filtration random_filtration(std::mt19937_64& rng, std::size_t rank, const RandomBundleOptions& opts) {
  // Random basis v_1..v_r; the flag is span(v_1..v_k) for a random set of k.
  std::vector<Vector> basis;
  while (true) {
    std::vector<Vector> gens(rank, Vector(rank));
    for (auto& v : gens)
      for (auto& x : v) x = random_rational(rng, opts);
    if (Subspace::span(gens, rank).is_full()) {
      basis = std::move(gens);
      break;
    }
  }
  const auto span_count = static_cast<std::int64_t>(opts.index_max - opts.index_min + 1);
  const auto max_steps = static_cast<std::int64_t>(std::min<std::int64_t>(static_cast<std::int64_t>(rank), span_count));
  const std::int64_t steps = uniform(rng, 1, max_steps);

  // Dimensions r = d_0 > d_1 > ... > d_{steps-1} > 0.
  std::vector<std::size_t> dims(rank - 1);
  std::iota(dims.begin(), dims.end(), std::size_t{1});
  std::shuffle(dims.begin(), dims.end(), rng);
  dims.resize(static_cast<std::size_t>(steps - 1));
  dims.push_back(rank);
  std::sort(dims.rbegin(), dims.rend());

  std::vector<std::int64_t> idx(static_cast<std::size_t>(span_count));
  std::iota(idx.begin(), idx.end(), opts.index_min);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<std::size_t>(steps));
  std::sort(idx.begin(), idx.end());

  std::vector<FiltrationStep> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::vector<Vector> gens(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(dims[k]));
    out.push_back({idx[k], Subspace::span(gens, rank)});
  }
  return Filtration(rank, std::move(out));
}

ToricBundle random_bundle(std::mt19937_64& rng, std::size_t rank, const RandomBundleOptions& opts) {
  const FanPn fan(opts.n);
  std::vector<Filtration> fs;
  for (int i = 0; i < fan.num_rays(); ++i) fs.push_back(random_filtration(rng, rank, opts));
  return ToricBundle(fan, std::move(fs));
}

ShiftingIndices random_shifting_indices(std::mt19937_64& rng, const RandomBundleOptions& opts) {
  ShiftingIndices s;
  for (int i = 0; i < 3; ++i) {
    s.lower[i] = uniform(rng, opts.index_min, opts.index_max - 1);
    s.upper[i] = uniform(rng, s.lower[i] + 1, opts.index_max);
  }
  return s;
}

}  // namespace toricvb
