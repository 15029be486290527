#include <doctest.h>

#include <random>

#include "toricvb/chern.hpp"
#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"
#include "toricvb/random_bundle.hpp"

using namespace toricvb;

namespace {

const FanPn kFan(2);

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

}  // namespace

TEST_CASE("first Chern class") {
  CHECK(c1(tangent_bundle(kFan)) == 3);
  CHECK(c1(line_bundle(kFan, Divisor{{2, -5, 1}})) == -2);
  CHECK(c1(from_shifting_indices(si({-1, 0, -1, 0, 0, 2}))) == 0);
  CHECK(c1(from_shifting_indices(si({-1, 0, -1, 0, 0, 1}))) == -1);
  CHECK(c1(tangent_bundle(FanPn(3))) == 4);
}

TEST_CASE("c1 under twists") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 30; ++it) {
    const ToricBundle e = random_bundle(rng, 3);
    const Divisor d{{1, -3, 4}};
    CHECK(c1(twist(e, d)) == c1(e) + 3 * d.degree());
  }
}

TEST_CASE("total Chern data") {
  CHECK(chern_total(tangent_bundle(kFan)) == ChernData{2, 3, 3});
  CHECK(chern_total(from_shifting_indices(si({-1, 0, -1, 0, 0, 2}))) == ChernData{2, 0, 1});
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      const auto e = direct_sum(line_bundle(kFan, kFan.hyperplane(a)), line_bundle(kFan, Divisor{{b, 0, 0}}));
      CHECK(chern_total(e) == ChernData{2, a + b, a * b});
    }
  }
  CHECK(chern_total(tangent_bundle(kFan)).str() == "rank 2, c1 = 3·H, c2 = 3·H^2");
  CHECK_THROWS_AS(chern_total(tangent_bundle(FanPn(3))), DomainError);
}

TEST_CASE("c2 is twist-consistent") {
  // c2(E(t)) = c2 + (r-1) c1 t + C(r,2) t^2
  std::mt19937_64 rng(8);
  for (int it = 0; it < 20; ++it) {
    const ToricBundle e = random_bundle(rng, 2);
    const auto base = chern_total(e);
    for (std::int64_t t = -2; t <= 2; ++t) {
      const auto tw = chern_total(twist_by_hyperplane(e, t));
      CHECK(tw.c1 == base.c1 + 2 * t);
      CHECK(tw.c2 == base.c2 + base.c1 * t + t * t);
    }
  }
}
