#include "toricvb/census.hpp"

#include <algorithm>
#include <set>

#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"

namespace toricvb {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void require_d(std::int64_t d, std::int64_t min) {
  if (d < min) throw DomainError("d must be at least " + std::to_string(min) + ", got " + std::to_string(d));
}

}  // namespace

std::string to_string(CensusType t) {
  switch (t) {
    case CensusType::I: return "I";
    case CensusType::II: return "II";
    case CensusType::III: return "III";
  }
  return "?";
}

bool in_si(const ShiftingIndices& delta, std::int64_t d) {
  const auto& lo = delta.lower;
  const auto& up = delta.upper;
  return lo[0] == -1 && lo[1] == -1 && up[0] >= 0 && up[1] >= 0 && lo[2] >= 0 && up[2] > lo[2] &&
         up[0] + up[1] + up[2] <= d - 1;
}

bool is_d_acm_fast(const ShiftingIndices& delta, std::int64_t d) {
  require_d(d, 1);
  delta.validate();
  std::int64_t low = 0, high = 0;
  for (int i = 0; i < 3; ++i) {
    low += delta.lower[i] + 1;
    high += delta.upper[i];
  }
  return floor_div(high, d) < ceil_div(low, d);
}

std::pair<std::int64_t, std::int64_t> oracle_twist_range(const ToricBundle& e, std::int64_t d,
                                                         std::int64_t margin) {
  require_d(d, 1);
  if (e.fan().dim() < 2) return {1, 0};
  std::int64_t low = 0, high = 0;
  for (const auto& f : e.filtrations()) {
    low += f.last_full() + 1;
    high += f.last_nonzero();
  }
  // Middle support of E(dt) needs low + dt <= 0 <= high + dt.
  return {ceil_div(-high, d) - margin, floor_div(-low, d) + margin};
}

bool is_d_acm_oracle(const ToricBundle& e, std::int64_t d) {
  const int n = e.fan().dim();
  const auto [t_lo, t_hi] = oracle_twist_range(e, d, 1);
  bool acm = true;
  for (std::int64_t t = t_lo; t <= t_hi; ++t) {
    const ToricBundle et = twist_by_hyperplane(e, d * t);
    for (int p = 1; p < n; ++p) {
      if (h(et, p) == 0) continue;
      if (t == t_lo || t == t_hi) {
        throw InvariantViolation("middle cohomology found at margin twist t = " + std::to_string(t));
      }
      acm = false;
    }
  }
  return acm;
}

std::optional<CensusEntry> normalize(const ShiftingIndices& delta, std::int64_t d) {
  require_d(d, 2);
  delta.validate();
  // Principal twist c = (-1 - a_0^2, -1 - a_1^2, -c_0 - c_1).
  const std::int64_t c0 = -1 - delta.lower[0];
  const std::int64_t c1 = -1 - delta.lower[1];
  const std::array<std::int64_t, 3> c = {c0, c1, -c0 - c1};
  ShiftingIndices s;
  for (int i = 0; i < 3; ++i) {
    s.lower[i] = delta.lower[i] + c[i];
    s.upper[i] = delta.upper[i] + c[i];
  }
  // Twist ray 2 by dt with a_2^2 + dt >= 0 and sum(a^1) + dt <= d - 1.
  const std::int64_t upper_sum = s.upper[0] + s.upper[1] + s.upper[2];
  const std::int64_t t_min = ceil_div(-s.lower[2], d);
  const std::int64_t t_max = floor_div(d - 1 - upper_sum, d);
  if (t_min > t_max) return std::nullopt;
  // The window [-a_2^2, d - 1 - sum(a^1)] for dt has length at most d - 2.
  if (t_min != t_max) throw InvariantViolation("normalization twist is not unique for " + delta.str());
  s.lower[2] += d * t_min;
  s.upper[2] += d * t_min;
  if (!in_si(s, d)) throw InvariantViolation("normalization of " + delta.str() + " left SI(d)");
  return CensusEntry{s, d, classify_type(s, d)};
}

CensusType classify_type(const ShiftingIndices& delta, std::int64_t d) {
  if (!in_si(delta, d)) throw DomainError(delta.str() + " is not in SI(" + std::to_string(d) + ")");
  const std::int64_t upper_sum = delta.upper[0] + delta.upper[1] + delta.upper[2];
  if (upper_sum < d - 1) return CensusType::I;
  return delta.lower[2] > 0 ? CensusType::II : CensusType::III;
}

std::vector<CensusEntry> enumerate_si(std::int64_t d) {
  require_d(d, 2);
  std::vector<CensusEntry> out;
  for (std::int64_t a01 = 0; a01 <= d - 1; ++a01) {
    for (std::int64_t a11 = 0; a01 + a11 <= d - 1; ++a11) {
      const std::int64_t room = d - 1 - a01 - a11;  // bound on a_2^1
      for (std::int64_t a22 = 0; a22 + 1 <= room; ++a22) {
        for (std::int64_t a21 = a22 + 1; a21 <= room; ++a21) {
          const auto delta = ShiftingIndices::from_tuple({-1, a01, -1, a11, a22, a21});
          out.push_back({delta, d, classify_type(delta, d)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.delta < b.delta; });
  return out;
}

std::int64_t count_closed(std::int64_t d) {
  require_d(d, 2);
  return (d - 1) * d * (d + 1) * (d + 2) / 24;
}

std::int64_t count_recurrence(std::int64_t d) {
  require_d(d, 2);
  std::int64_t prev = 1;  // S(2)
  if (d == 2) return prev;
  std::int64_t cur = 5;  // S(3)
  for (std::int64_t k = 4; k <= d; ++k) {
    const std::int64_t next = cur + (cur - prev) + k * (k - 1) / 2;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<ShiftingIndices> census_box(std::int64_t d) {
  require_d(d, 1);
  std::vector<ShiftingIndices> out;
  std::array<std::int64_t, 6> t{};
  auto rec = [&](auto&& self, int ray) -> void {
    if (ray == 3) {
      out.push_back(ShiftingIndices::from_tuple(t));
      return;
    }
    for (std::int64_t lo = -1; lo <= d; ++lo) {
      for (std::int64_t band = 1; band <= d + 1; ++band) {
        t[2 * ray] = lo;
        t[2 * ray + 1] = lo + band;
        self(self, ray + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<ShiftingIndices> brute_force_census(std::int64_t d, bool use_oracle) {
  std::set<ShiftingIndices> reps;
  for (const auto& delta : census_box(d)) {
    const bool acm = use_oracle ? is_d_acm_oracle(from_shifting_indices(delta), d) : is_d_acm_fast(delta, d);
    auto entry = normalize(delta, d);
    if (acm != entry.has_value()) {
      throw InvariantViolation("d-aCM decision and normalization disagree on " + delta.str());
    }
    if (entry) reps.insert(entry->delta);
  }
  return {reps.begin(), reps.end()};
}

}  // namespace toricvb
