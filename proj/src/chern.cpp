#include "toricvb/chern.hpp"

#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"

namespace toricvb {

std::string ChernData::str() const {
  return "rank " + std::to_string(rank) + ", c1 = " + std::to_string(c1) + "·H, c2 = " + std::to_string(c2) +
         "·H^2";
}

std::int64_t c1(const ToricBundle& e) {
  std::int64_t total = 0;
  for (const auto& f : e.filtrations()) {
    const auto& steps = f.steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::size_t next = i + 1 < steps.size() ? steps[i + 1].space.dim() : 0;
      total += steps[i].until * static_cast<std::int64_t>(steps[i].space.dim() - next);
    }
  }
  return total;
}

ChernData chern_total(const ToricBundle& e) {
  if (e.fan().dim() != 2) throw DomainError("chern_total is defined on P^2 only");
  ChernData out;
  out.rank = static_cast<std::int64_t>(e.rank());
  out.c1 = c1(e);
  out.c2 = out.rank + out.c1 * (out.c1 + 3) / 2 - euler_char(e);
  return out;
}

}  // namespace toricvb
