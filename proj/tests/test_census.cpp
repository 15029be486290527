#include <doctest.h>

#include <random>

#include "toricvb/census.hpp"
#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"
#include "toricvb/random_bundle.hpp"

using namespace toricvb;

namespace {

const FanPn kFan(2);

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

std::vector<ShiftingIndices> deltas(const std::vector<CensusEntry>& v) {
  std::vector<ShiftingIndices> out;
  for (const auto& e : v) out.push_back(e.delta);
  return out;
}

}  // namespace

TEST_CASE("fast d-aCM test") {
  CHECK(is_d_acm_fast(si({-1, 0, -1, 0, 0, 1}), 2));
  CHECK_FALSE(is_d_acm_fast(si({-1, 0, -1, 0, 0, 1}), 1));
  for (std::int64_t d = 1; d <= 8; ++d) CHECK_FALSE(is_d_acm_fast(si({-1, 0, -1, 0, -1, 0}), d));
  CHECK_THROWS_AS(is_d_acm_fast(si({-1, 0, -1, 0, 0, 1}), 0), DomainError);
}

TEST_CASE("cohomological d-aCM oracle") {
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(is_d_acm_oracle(t, 2));
  CHECK(is_d_acm_oracle(twist_by_hyperplane(t, -2), 2));
  CHECK_FALSE(is_d_acm_oracle(t, 1));
  // the only twist with middle cohomology is T(-3)
  for (std::int64_t s = -8; s <= 5; ++s) CHECK((h(twist_by_hyperplane(t, s), 1) != 0) == (s == -3));
  CHECK(is_d_acm_oracle(direct_sum(line_bundle(kFan, kFan.hyperplane(1)), line_bundle(kFan, Divisor{{0, 2, 0}})), 1));
  CHECK(is_d_acm_oracle(line_bundle(kFan, kFan.hyperplane(4)), 3));
}

TEST_CASE("fast and oracle agree on random tuples") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 300; ++it) {
    const auto delta = random_shifting_indices(rng);
    for (std::int64_t d = 1; d <= 6; ++d) {
      CHECK(is_d_acm_fast(delta, d) == is_d_acm_oracle(from_shifting_indices(delta), d));
    }
  }
}

TEST_CASE("oracle twist range covers every twist with middle cohomology") {
  std::mt19937_64 rng(78);
  for (int it = 0; it < 40; ++it) {
    const ToricBundle e = random_bundle(rng, 2);
    for (std::int64_t d = 1; d <= 4; ++d) {
      const auto [lo, hi] = oracle_twist_range(e, d, 0);
      for (std::int64_t t = lo - 6; t <= hi + 6; ++t) {
        if (t >= lo && t <= hi) continue;
        CHECK(h(twist_by_hyperplane(e, d * t), 1) == 0);
      }
    }
  }
}

TEST_CASE("normalize") {
  const auto a = normalize(si({0, 1, 0, 1, 0, 1}), 2);
  REQUIRE(a);
  CHECK(a->delta == si({-1, 0, -1, 0, 0, 1}));
  const auto b = normalize(si({-1, 0, 0, 1, -1, 0}), 2);
  REQUIRE(b);
  CHECK(b->delta == si({-1, 0, -1, 0, 0, 1}));
  CHECK_FALSE(normalize(si({-1, 0, -1, 0, -1, 0}), 2));
  for (std::int64_t d = 2; d <= 7; ++d) {
    for (const auto& e : enumerate_si(d)) {
      const auto n = normalize(e.delta, d);
      REQUIRE(n);
      CHECK(*n == e);
    }
  }
}

TEST_CASE("normalize is constant on classes under principal and O(d) twists") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);
  for (int it = 0; it < 200; ++it) {
    const auto delta = random_shifting_indices(rng);
    const std::int64_t d = 2 + it % 4;
    const auto base = normalize(delta, d);
    CHECK(base.has_value() == is_d_acm_fast(delta, d));
    // principal shift by (c0, c1, -c0-c1) and a twist by O(d k) on ray 0
    const std::int64_t c0 = shift(rng), c1 = shift(rng), k = shift(rng);
    const std::array<std::int64_t, 3> c = {c0 + d * k, c1, -c0 - c1};
    ShiftingIndices moved = delta;
    for (int i = 0; i < 3; ++i) {
      moved.lower[i] += c[i];
      moved.upper[i] += c[i];
    }
    CHECK(normalize(moved, d) == base);
  }
}

TEST_CASE("enumerate and count") {
  CHECK(deltas(enumerate_si(2)) == std::vector<ShiftingIndices>{si({-1, 0, -1, 0, 0, 1})});
  CHECK(deltas(enumerate_si(3)) == std::vector<ShiftingIndices>{si({-1, 0, -1, 0, 0, 1}), si({-1, 0, -1, 0, 0, 2}),
                                                                si({-1, 0, -1, 0, 1, 2}), si({-1, 0, -1, 1, 0, 1}),
                                                                si({-1, 1, -1, 0, 0, 1})});
  CHECK(enumerate_si(4).size() == 15);
  CHECK(count_closed(2) == 1);
  CHECK(count_closed(3) == 5);
  CHECK(count_closed(4) == 15);
  CHECK(count_closed(10) == 495);
  for (std::int64_t d = 2; d <= 40; ++d) CHECK(count_recurrence(d) == count_closed(d));
  for (std::int64_t d = 2; d <= 12; ++d) CHECK(static_cast<std::int64_t>(enumerate_si(d).size()) == count_closed(d));
  CHECK_THROWS_AS(enumerate_si(1), DomainError);
}

TEST_CASE("types") {
  CHECK(classify_type(si({-1, 0, -1, 0, 0, 1}), 3) == CensusType::I);
  CHECK(classify_type(si({-1, 0, -1, 0, 1, 2}), 3) == CensusType::II);
  CHECK(classify_type(si({-1, 0, -1, 0, 0, 2}), 3) == CensusType::III);
  for (std::int64_t d = 2; d <= 10; ++d) {
    std::int64_t type3 = 0, type1 = 0;
    for (const auto& e : enumerate_si(d)) {
      type3 += e.type == CensusType::III;
      type1 += e.type == CensusType::I;
    }
    CHECK(type3 == d * (d - 1) / 2);
    CHECK(type1 == (d == 2 ? 0 : count_closed(d - 1)));
  }
  CHECK(to_string(CensusType::II) == "II");
}

TEST_CASE("brute-force census") {
  for (std::int64_t d = 2; d <= 4; ++d) {
    CHECK(brute_force_census(d) == deltas(enumerate_si(d)));
    CHECK(brute_force_census(d, true) == deltas(enumerate_si(d)));
  }
}

TEST_CASE("monotone inclusion") {
  for (std::int64_t d = 2; d <= 8; ++d) {
    for (const auto& e : enumerate_si(d)) {
      CHECK(in_si(e.delta, d + 1));
      CHECK(is_d_acm_fast(e.delta, d + 1));
    }
  }
}
