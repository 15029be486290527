#include <doctest.h>

#include <random>

#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"
#include "toricvb/random_bundle.hpp"

using namespace toricvb;

namespace {

const FanPn kFan(2);

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

const Character kOrigin{{0, 0}};

}  // namespace

TEST_CASE("graded components") {
  const ToricBundle w = from_shifting_indices(si({-1, 0, -1, 0, -1, 0}));
  const auto c0 = graded_component(w, {0}, kOrigin);
  CHECK(c0.dim() == 1);
  CHECK(c0 == Subspace::span({{1, 0}}, 2));
  CHECK(graded_component(w, {}, Character{{5, -7}}).is_full());
  CHECK(graded_component(line_bundle(kFan, kFan.zero_divisor()), {0, 1}, Character{{1, 0}}).is_zero());
  CHECK(graded_component(w, {0, 1}, kOrigin).is_zero());
}

TEST_CASE("graded cohomology on both routes") {
  const ToricBundle w = from_shifting_indices(si({-1, 0, -1, 0, -1, 0}));
  const ToricBundle o = line_bundle(kFan, kFan.zero_divisor());
  for (const Route r : {Route::chain, Route::closed}) {
    const auto hp = [r](const ToricBundle& e, int p, const Character& m) {
      return r == Route::chain ? hp_chain(e, p, m) : hp_closed(e, p, m);
    };
    CHECK(hp(w, 1, kOrigin) == 1);
    CHECK(hp(w, 2, kOrigin) == 0);
    CHECK(hp(w, 0, kOrigin) == 0);
    CHECK(hp(o, 0, kOrigin) == 1);
    CHECK(hp(o, 1, kOrigin) == 0);
  }
  CHECK(graded_cohomology(w, 1) == std::map<Character, std::size_t>{{kOrigin, 1}});
  CHECK_THROWS_AS(hp_chain(w, 3, kOrigin), DomainError);
}

TEST_CASE("split bundles have no middle cohomology") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int it = 0; it < 20; ++it) {
    const Divisor a{{coef(rng), coef(rng), coef(rng)}}, b{{coef(rng), coef(rng), coef(rng)}};
    const auto e = direct_sum(line_bundle(kFan, a), line_bundle(kFan, b));
    CHECK(h(e, 1, Route::chain) == 0);
    CHECK(graded_cohomology(e, 1, Route::closed).empty());
  }
}

TEST_CASE("rank-2 H^1 vanishes where the first graded piece is 0 or everything") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    const ToricBundle e = from_shifting_indices(random_shifting_indices(rng));
    const SupportBox box = support_box(e, 1).widened(2);
    for (const auto& m : box.characters()) {
      const auto d0 = graded_component(e, {0}, m).dim();
      if (d0 == 0 || d0 == 2) CHECK(hp_closed(e, 1, m) == 0);
    }
  }
}

TEST_CASE("support boxes") {
  const ToricBundle w = from_shifting_indices(si({-1, 0, -1, 0, -1, 0}));
  CHECK(support_box(w, 1).characters() == std::vector<Character>{kOrigin});
  const ToricBundle l = line_bundle(kFan, Divisor{{2, -1, 3}});
  CHECK(support_box(l, 1).characters().empty());
  const ToricBundle o3 = line_bundle(kFan, Divisor{{-1, -1, -1}});
  CHECK(support_box(o3, 2).characters() == std::vector<Character>{kOrigin});
  CHECK(h(o3, 2) == 1);
  CHECK(h(line_bundle(kFan, kFan.hyperplane(-3)), 2) == 1);
  // the p=0 box of O(t) holds exactly the monomials of degree t
  CHECK(support_box(line_bundle(kFan, kFan.hyperplane(2)), 0).characters().size() == 6);
}

TEST_CASE("nothing outside the support box") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 30; ++it) {
    const ToricBundle e = random_bundle(rng, 3);
    for (int p = 0; p <= 2; ++p) {
      const SupportBox box = support_box(e, p);
      for (const auto& m : box.ring(2)) CHECK(hp_chain(e, p, m) == 0);
    }
  }
}

TEST_CASE("totals") {
  const ToricBundle t = tangent_bundle(kFan);
  CHECK(h(t, 0) == 8);
  CHECK(h(t, 1) == 0);
  CHECK(h(t, 2) == 0);
  CHECK(h(t, 0, Route::chain) == 8);
  for (std::int64_t k = 0; k <= 6; ++k) {
    CHECK(h(line_bundle(kFan, kFan.hyperplane(k)), 0) == (k + 1) * (k + 2) / 2);
  }
  CHECK(euler_char(from_shifting_indices(si({-1, 0, -1, 0, 0, 2}))) == 1);
  // T(-3) is the cotangent bundle
  CHECK(h(twist_by_hyperplane(t, -3), 1) == 1);
  CHECK(h(twist(t, Divisor{{-1, -1, -1}}), 1, Route::chain) == 1);
}

TEST_CASE("cohomology of P^3 bundles on both routes") {
  const FanPn p3(3);
  const ToricBundle t = tangent_bundle(p3);
  CHECK(h(t, 0) == 15);
  CHECK(h(t, 0, Route::chain) == 15);
  for (int p = 1; p <= 3; ++p) CHECK(h(t, p) == 0);
  const ToricBundle o4 = line_bundle(p3, p3.hyperplane(-4));
  CHECK(h(o4, 3) == 1);
  CHECK(h(o4, 3, Route::chain) == 1);
  // T(-4) is Λ^2 Ω on P^3, with h^2 = 1
  CHECK(h(twist(t, Divisor{{-1, -1, -1, -1}}), 2, Route::chain) == 1);
  CHECK(h(twist(t, Divisor{{-1, -1, -1, -1}}), 2, Route::closed) == 1);
}

TEST_CASE("cohomology table") {
  const ToricBundle e = from_shifting_indices(si({-1, 0, -1, 0, 0, 1}));
  const auto table = cohomology_table(e, -3, 2);
  CHECK(table.rows.size() == 6);
  CHECK(table.at(2, -3) == 3);
  CHECK(table.at(1, -1) == 1);
  CHECK(table.at(0, 1) == 3);
  CHECK(table.euler(-1) == -1);
  CHECK(table.at(0, 2) == 8);
  const auto chain = cohomology_table(e, -3, 2, Route::chain);
  CHECK(chain.rows == table.rows);
  CHECK_THROWS_AS(cohomology_table(e, 2, 1), DomainError);
}
