#include "toricvb/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "toricvb/error.hpp"

namespace toricvb {

namespace {

// In-place Gauss-Jordan elimination of a row-major nrows x cols matrix.
// Returns the pivot columns; the first pivots.size() rows hold the RREF.
std::vector<std::size_t> rref_in_place(std::vector<Rational>& m, std::size_t nrows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < nrows; ++col) {
    std::size_t sel = row;
    while (sel < nrows && m[sel * cols + col].is_zero()) ++sel;
    if (sel == nrows) continue;
    if (sel != row) {
      std::swap_ranges(m.begin() + sel * cols, m.begin() + (sel + 1) * cols, m.begin() + row * cols);
    }
    Rational* prow = &m[row * cols];
    if (!prow[col].is_one()) {
      const Rational inv = Rational(1) / prow[col];
      for (std::size_t k = col; k < cols; ++k) prow[k] *= inv;
    }
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row) continue;
      Rational* other = &m[r * cols];
      if (other[col].is_zero()) continue;
      const Rational f = other[col];
      for (std::size_t k = col; k < cols; ++k) {
        if (!prow[k].is_zero()) other[k] -= f * prow[k];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("ambient mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()));
  }
}

}  // namespace

std::size_t matrix_rank(std::span<const Vector> rows, std::size_t cols) {
  std::vector<Rational> m;
  m.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("row length does not match column count");
    m.insert(m.end(), r.begin(), r.end());
  }
  return rref_in_place(m, rows.size(), cols).size();
}

Subspace Subspace::from_rref(std::vector<Rational> m, std::size_t nrows, std::size_t ambient_dim) {
  Subspace out;
  out.ambient_dim_ = ambient_dim;
  out.pivots_ = rref_in_place(m, nrows, ambient_dim);
  m.resize(out.pivots_.size() * ambient_dim);
  out.entries_ = std::move(m);
  return out;
}

Subspace Subspace::span(std::span<const Vector> generators, std::size_t ambient_dim) {
  std::vector<Rational> m;
  m.reserve(generators.size() * ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_dim) {
      throw DimensionError("generator " + std::to_string(i) + " has length " + std::to_string(generators[i].size()) +
                           ", expected " + std::to_string(ambient_dim));
    }
    m.insert(m.end(), generators[i].begin(), generators[i].end());
  }
  return from_rref(std::move(m), generators.size(), ambient_dim);
}

Subspace Subspace::span(std::initializer_list<Vector> generators, std::size_t ambient_dim) {
  return span(std::span<const Vector>(generators.begin(), generators.size()), ambient_dim);
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace out;
  out.ambient_dim_ = ambient_dim;
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace out;
  out.ambient_dim_ = ambient_dim;
  out.entries_.assign(ambient_dim * ambient_dim, Rational(0));
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    out.entries_[i * ambient_dim + i] = Rational(1);
    out.pivots_.push_back(i);
  }
  return out;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    out.emplace_back(entries_.begin() + r * ambient_dim_, entries_.begin() + (r + 1) * ambient_dim_);
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector length does not match ambient dimension");
  // Reduce v against the RREF rows; v lies in the span iff the residue is zero.
  Vector residue(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational f = residue[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = pivots_[r]; k < ambient_dim_; ++k) residue[k] -= f * at(r, k);
  }
  return std::all_of(residue.begin(), residue.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  check_same_ambient(*this, other);
  if (dim() > other.dim()) return false;
  if (other.is_full() || is_zero()) return true;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (!other.contains(std::span<const Rational>(entries_.data() + r * ambient_dim_, ambient_dim_))) return false;
  }
  return true;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) os << ", ";
    os << "(";
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (c) os << ",";
      os << at(r, c);
    }
    os << ")";
  }
  os << "} in Q^" << ambient_dim_;
  return os.str();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.is_zero() || b.is_full()) return b;
  if (b.is_zero() || a.is_full()) return a;
  std::vector<Vector> gens = a.basis();
  for (auto& row : b.basis()) gens.push_back(std::move(row));
  return Subspace::span(gens, a.ambient_dim());
}

Subspace annihilator(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  const auto& piv = a.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  // Kernel of the RREF matrix: one vector per free column.
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Rational(0));
    v[f] = Rational(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a.at(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.is_full() || b.is_zero()) return b;
  if (b.is_full() || a.is_zero()) return a;
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  std::vector<Vector> gens;
  for (const auto& row : a.basis()) {
    Vector v(na + nb, Rational(0));
    std::copy(row.begin(), row.end(), v.begin());
    gens.push_back(std::move(v));
  }
  for (const auto& row : b.basis()) {
    Vector v(na + nb, Rational(0));
    std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, na + nb);
}

Subspace tensor_product(const Subspace& a, const Subspace& b) {
  const std::size_t na = a.ambient_dim();
  const std::size_t nb = b.ambient_dim();
  std::vector<Vector> gens;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      Vector v(na * nb, Rational(0));
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) v[i * nb + j] = x[i] * y[j];
      gens.push_back(std::move(v));
    }
  }
  return Subspace::span(gens, na * nb);
}

}  // namespace toricvb
