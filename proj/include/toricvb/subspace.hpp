#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toricvb/rational.hpp"

namespace toricvb {

using Vector = std::vector<Rational>;

/// Rank of the matrix whose rows are `rows` (all of length `cols`).
std::size_t matrix_rank(std::span<const Vector> rows, std::size_t cols);

/// A linear subspace of Q^n stored by its reduced row-echelon basis.
///
/// Pivots are normalized to 1 and the rows are sorted by pivot column, so two
/// subspaces are equal exactly when their stored bases are equal entry-wise.
/// Values are immutable once built.
class Subspace {
 public:
  /// The zero subspace of Q^0.
  Subspace() = default;

  /// Span of `generators`; every generator must have length `ambient_dim`.
  static Subspace span(std::span<const Vector> generators, std::size_t ambient_dim);
  static Subspace span(std::initializer_list<Vector> generators, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return pivots_.size() == ambient_dim_; }

  std::vector<Vector> basis() const;
  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * ambient_dim_ + col]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  /// True if this ⊆ other.
  bool is_subspace_of(const Subspace& other) const;

  std::string str() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  static Subspace from_rref(std::vector<Rational> rows, std::size_t nrows, std::size_t ambient_dim);

  std::size_t ambient_dim_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<Rational> entries_;  // dim() x ambient_dim_, row-major
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Annihilator under the standard pairing, i.e. the orthogonal complement
/// { v : <v, w> = 0 for all w in a }.
Subspace annihilator(const Subspace& a);

/// a ⊕ b inside Q^{n_a} ⊕ Q^{n_b}.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// a ⊗ b inside Q^{n_a} ⊗ Q^{n_b}, basis e_i ⊗ f_j at index i * n_b + j.
Subspace tensor_product(const Subspace& a, const Subspace& b);

}  // namespace toricvb
