#pragma once

#include <cstdint>
#include <string>

#include "toricvb/bundle.hpp"

namespace toricvb {

/// Chern data on P^2 as coefficients of H and H^2.
struct ChernData {
  std::int64_t rank = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  std::string str() const;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Degree of c1(E): sum over rays and jumps j of j * dim(E(j) / E(j+1)).
std::int64_t c1(const ToricBundle& e);

/// c1 from the filtrations and c2 from Riemann-Roch on P^2,
/// chi(E) = r + c1(c1 + 3)/2 - c2. Throws DomainError unless n = 2.
ChernData chern_total(const ToricBundle& e);

}  // namespace toricvb
