#include <doctest.h>

#include <random>

#include "toricvb/bundle.hpp"
#include "toricvb/chern.hpp"
#include "toricvb/error.hpp"
#include "toricvb/random_bundle.hpp"

using namespace toricvb;

namespace {

const FanPn kFan(2);

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

std::array<std::int64_t, 3> thresholds(const ToricBundle& e) {
  return {e.filtration(0).last_nonzero(), e.filtration(1).last_nonzero(), e.filtration(2).last_nonzero()};
}

}  // namespace

TEST_CASE("filtration evaluation follows the step intervals") {
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(t.filtration(0).eval(1) == Subspace::span({{1, 0}}, 2));
  CHECK(t.filtration(0).eval(0) == Subspace::full(2));
  CHECK(t.filtration(0).eval(-5) == Subspace::full(2));
  CHECK(t.filtration(0).eval(2).is_zero());
  CHECK(t.filtration(2).eval(1) == Subspace::span({{-1, -1}}, 2));
}

TEST_CASE("filtration invariants") {
  const auto line = Subspace::span({{1, 0}}, 2);
  CHECK_THROWS_AS(Filtration(2, {{0, line}}), InvariantViolation);  // first step must be the whole space
  CHECK_THROWS_AS(Filtration(2, {{0, Subspace::full(2)}, {0, line}}), InvariantViolation);
  CHECK_THROWS_AS(Filtration(2, {{0, Subspace::full(2)}, {1, Subspace::full(2)}}), InvariantViolation);
  CHECK_THROWS_AS(Filtration(2, {{0, Subspace::full(2)}, {1, Subspace::zero(2)}}), InvariantViolation);
  const Filtration f(2, {{0, Subspace::full(2)}, {3, line}});
  CHECK(f.dim_at(2) == 1);
  CHECK(f.shifted(2).last_full() == 2);
  CHECK(f.shifted(2).last_nonzero() == 5);
}

TEST_CASE("line bundles") {
  CHECK(thresholds(line_bundle(kFan, kFan.zero_divisor())) == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(thresholds(line_bundle(kFan, Divisor{{0, 0, 1}})) == std::array<std::int64_t, 3>{0, 0, 1});
  CHECK(thresholds(line_bundle(kFan, Divisor{{-1, -1, 0}})) == std::array<std::int64_t, 3>{-1, -1, 0});
  CHECK(line_bundle(kFan, Divisor{{2, 0, 0}}).filtration(0).eval(2).is_full());
  CHECK(line_bundle(kFan, Divisor{{2, 0, 0}}).filtration(0).eval(3).is_zero());
}

TEST_CASE("tangent bundle") {
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(shifting_indices(t) == si({0, 1, 0, 1, 0, 1}));
  CHECK_FALSE(is_split(t));
  CHECK(check_locally_free(t));
  CHECK(check_locally_free(tangent_bundle(FanPn(3))));
  CHECK_FALSE(is_split(tangent_bundle(FanPn(3))));
}

TEST_CASE("shifting indices round trip and parsing") {
  const ShiftingIndices t1 = si({-1, 0, -1, 0, 0, 1});
  const ToricBundle e = from_shifting_indices(t1);
  CHECK(e.filtration(0).eval(-1).is_full());
  CHECK(e.filtration(0).eval(0) == Subspace::span({{1, 0}}, 2));
  CHECK(e.filtration(0).eval(1).is_zero());
  CHECK(e.filtration(2).eval(1) == Subspace::span({{1, 1}}, 2));
  CHECK(e.filtration(2).eval(2).is_zero());
  const ToricBundle e3 = from_shifting_indices(si({-1, 0, -1, 0, 0, 2}));
  CHECK(e3.filtration(2).eval(2) == Subspace::span({{1, 1}}, 2));
  CHECK(e3.filtration(2).eval(0).is_full());

  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const auto d = random_shifting_indices(rng);
    CHECK(shifting_indices(from_shifting_indices(d)) == d);
  }
  CHECK(ShiftingIndices::parse("-1,0;-1,0;0,1") == t1);
  CHECK(ShiftingIndices::parse(" -1, 0 ; -1,0; 0 ,1 ") == t1);
  CHECK(t1.str() == "-1,0;-1,0;0,1");
  CHECK_THROWS_AS(ShiftingIndices::parse("1,2;3"), ParseError);
  CHECK_THROWS_AS(from_shifting_indices(si({0, 0, 0, 1, 0, 1})), InvariantViolation);
}

TEST_CASE("split bundles have no shifting indices") {
  const auto e = direct_sum(line_bundle(kFan, kFan.hyperplane(1)), line_bundle(kFan, kFan.hyperplane(2)));
  CHECK_THROWS_AS(shifting_indices(e), SplitBundleError);
  CHECK_THROWS_AS(shifting_indices(tangent_bundle(FanPn(3))), DomainError);
}

TEST_CASE("twists") {
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(shifting_indices(twist(t, Divisor{{-1, -1, 0}})) == si({-1, 0, -1, 0, 0, 1}));
  CHECK(twist(t, kFan.zero_divisor()) == t);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    const ToricBundle e = random_bundle(rng, 3);
    const Divisor d{{1, -2, 3}}, d2{{0, 4, -1}};
    CHECK(twist(twist(e, d), -d) == e);
    CHECK(twist(e, d + d2) == twist(twist(e, d), d2));
  }
}

TEST_CASE("direct sum and tensor") {
  // O(a) ⊕ O(b) drops 2 -> 1 -> 0 at min/max of the thresholds, or 2 -> 0 when equal
  const auto e = direct_sum(line_bundle(kFan, Divisor{{1, 0, 3}}), line_bundle(kFan, Divisor{{2, 0, -1}}));
  CHECK(e.rank() == 2);
  const auto& f0 = e.filtration(0);
  CHECK(f0.steps().size() == 2);
  CHECK(f0.last_full() == 1);
  CHECK(f0.last_nonzero() == 2);
  CHECK(e.filtration(1).steps().size() == 1);
  CHECK(e.filtration(1).last_nonzero() == 0);
  CHECK(e.filtration(2).last_full() == -1);
  CHECK(e.filtration(2).last_nonzero() == 3);
  CHECK(is_split(e));

  std::mt19937_64 rng(21);
  for (int it = 0; it < 30; ++it) {
    const ToricBundle a = random_bundle(rng, 2);
    const ToricBundle b = random_bundle(rng, 1);
    const Divisor d{{2, -1, 1}};
    CHECK(tensor(a, line_bundle(kFan, d)) == twist(a, d));
    CHECK(direct_sum(a, b).rank() == 3);
    CHECK(tensor(a, a).rank() == 4);
    CHECK(twist(direct_sum(a, b), d) == direct_sum(twist(a, d), twist(b, d)));
    CHECK(c1(tensor(a, b)) == c1(a) * 1 + c1(b) * 2);
  }
}

TEST_CASE("dual") {
  const Divisor d{{2, -1, 3}};
  CHECK(dual(line_bundle(kFan, d)) == line_bundle(kFan, -d));
  std::mt19937_64 rng(33);
  for (int it = 0; it < 50; ++it) {
    const ToricBundle e = random_bundle(rng, 2);
    CHECK(dual(dual(e)) == e);
    CHECK(c1(dual(e)) == -c1(e));
    if (!is_split(e)) CHECK(shifting_indices(dual(dual(e))) == shifting_indices(e));
  }
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(c1(dual(t)) == -3);
}

TEST_CASE("splitting") {
  CHECK(is_split(direct_sum(line_bundle(kFan, Divisor{{1, 0, 0}}), line_bundle(kFan, Divisor{{0, 1, 0}}))));
  CHECK(is_split(line_bundle(kFan, Divisor{{3, -1, 0}})));
  CHECK_FALSE(is_split(from_shifting_indices(si({-1, 0, -1, 0, 0, 2}))));
  // three lines in a 3-space coming from a split sum of three line bundles
  const auto l = [](std::int64_t a) { return line_bundle(kFan, Divisor{{a, 0, 0}}); };
  CHECK(is_split(direct_sum(direct_sum(l(0), l(1)), l(2))));
  CHECK_FALSE(is_split(direct_sum(tangent_bundle(kFan), l(0))));
}

TEST_CASE("local freeness") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 50; ++it) CHECK(check_locally_free(random_bundle(rng, 2)));
  CHECK(check_locally_free(line_bundle(FanPn(3), Divisor{{1, 2, -1, 0}})));
  // three distinct lines on the rays of one maximal cone admit no adapted basis
  const FanPn p3(3);
  const auto f = [](std::vector<Vector> line) {
    return Filtration(2, {{0, Subspace::full(2)}, {1, Subspace::span(line, 2)}});
  };
  const ToricBundle bad(p3, {f({{1, 0}}), f({{0, 1}}), f({{1, 1}}), Filtration::single_drop(2, 0)});
  CHECK_FALSE(check_locally_free(bad));
}

TEST_CASE("slope stability") {
  CHECK(is_slope_stable(si({-1, 0, -1, 0, 0, 1})));
  CHECK_FALSE(is_slope_stable(si({-1, 0, -1, 0, 0, 2})));
  CHECK_FALSE(is_slope_stable(si({-1, 0, -1, 0, -1, 4})));
  CHECK(is_slope_stable(tangent_bundle(kFan)));
}
