#include "toricvb/fan.hpp"

#include <numeric>

#include "toricvb/error.hpp"

namespace toricvb {

std::string Character::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

std::int64_t Divisor::degree() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw DimensionError("divisors on different fans");
  Divisor out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

std::string Divisor::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    const auto a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "D" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FanPn::FanPn(int n) : n_(n) {
  if (n < 1) throw DomainError("P^n needs n >= 1, got " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    rays_.push_back(std::move(e));
  }
  rays_.emplace_back(n, -1);
}

const std::vector<std::int64_t>& FanPn::ray(int i) const {
  if (i < 0 || i > n_) throw DomainError("ray index " + std::to_string(i) + " out of range");
  return rays_[i];
}

std::int64_t FanPn::pairing(const Character& m, int ray_index) const {
  const auto& u = ray(ray_index);
  if (m.size() != static_cast<std::size_t>(n_)) throw DimensionError("character has wrong length");
  std::int64_t acc = 0;
  for (int k = 0; k < n_; ++k) acc += m[k] * u[k];
  return acc;
}

std::vector<Cone> FanPn::cones(int k) const {
  if (k < 0 || k > n_) throw DomainError("cone dimension " + std::to_string(k) + " out of range");
  std::vector<Cone> out;
  Cone current;
  // Lexicographic k-subsets of {0..n}.
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = start; i <= n_; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Divisor FanPn::hyperplane(std::int64_t t) const {
  Divisor d = zero_divisor();
  d.coeffs.back() = t;
  return d;
}

std::vector<SignedFace> boundary(const Cone& cone) {
  if (cone.empty()) throw DomainError("boundary of the zero cone");
  std::vector<SignedFace> out;
  out.reserve(cone.size());
  for (std::size_t i = 0; i < cone.size(); ++i) {
    Cone face;
    face.reserve(cone.size() - 1);
    for (std::size_t j = 0; j < cone.size(); ++j) {
      if (j != i) face.push_back(cone[j]);
    }
    out.push_back({std::move(face), i % 2 == 0 ? 1 : -1});
  }
  return out;
}

}  // namespace toricvb
