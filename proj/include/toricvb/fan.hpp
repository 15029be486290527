#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace toricvb {

/// A torus character m in M = Z^n.
struct Character {
  std::vector<std::int64_t> coords;

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::string str() const;

  friend auto operator<=>(const Character&, const Character&) = default;
};

/// A cone of the fan, given by its ray indices in ascending order.
using Cone = std::vector<int>;

struct SignedFace {
  Cone face;
  int sign;  // +1 or -1

  friend bool operator==(const SignedFace&, const SignedFace&) = default;
};

/// T-invariant divisor sum_i coeffs[i] * D_i, one coefficient per ray.
struct Divisor {
  std::vector<std::int64_t> coeffs;

  /// Degree under D_i ~ H.
  std::int64_t degree() const;
  Divisor operator-() const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  std::string str() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// The fan of P^n: rays e_0, ..., e_{n-1} and -(e_0 + ... + e_{n-1}).
class FanPn {
 public:
  explicit FanPn(int n = 2);

  int dim() const { return n_; }
  int num_rays() const { return n_ + 1; }
  const std::vector<std::int64_t>& ray(int i) const;

  /// <m, u_i>.
  std::int64_t pairing(const Character& m, int ray_index) const;

  /// All k-element subsets of rays in lexicographic order; cones(0) = {∅}.
  std::vector<Cone> cones(int k) const;

  /// Degree-t multiple of D_n, the hyperplane class used for O(t).
  Divisor hyperplane(std::int64_t t) const;
  Divisor zero_divisor() const { return Divisor{std::vector<std::int64_t>(num_rays(), 0)}; }

  friend bool operator==(const FanPn& a, const FanPn& b) { return a.n_ == b.n_; }

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> rays_;
};

/// Signed faces of a cone. Omitting the ray at position i of the ascending
/// list gives sign (-1)^i, with i counted from 0.
std::vector<SignedFace> boundary(const Cone& cone);

}  // namespace toricvb
