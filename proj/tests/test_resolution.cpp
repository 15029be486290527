#include <doctest.h>

#include "toricvb/census.hpp"
#include "toricvb/chern.hpp"
#include "toricvb/resolution.hpp"

using namespace toricvb;

namespace {

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

bool same_terms(std::array<Divisor, 3> a, std::vector<Divisor> b) {
  std::vector<Divisor> av(a.begin(), a.end());
  auto key = [](const Divisor& x, const Divisor& y) { return x.coeffs < y.coeffs; };
  std::sort(av.begin(), av.end(), key);
  std::sort(b.begin(), b.end(), key);
  return av == b;
}

}  // namespace

TEST_CASE("resolution terms") {
  const auto r2 = perling_resolution(si({-1, 0, -1, 0, 0, 1}));
  CHECK(r2.left == Divisor{{-1, -1, 0}});
  CHECK(same_terms(r2.middle, {Divisor{{-1, -1, 1}}, Divisor{{-1, 0, 0}}, Divisor{{0, -1, 0}}}));
  const auto r3 = perling_resolution(si({-1, 0, -1, 0, 0, 2}));
  CHECK(r3.left == Divisor{{-1, -1, 0}});
  CHECK(same_terms(r3.middle, {Divisor{{-1, -1, 2}}, Divisor{{-1, 0, 0}}, Divisor{{0, -1, 0}}}));
  const auto r4 = perling_resolution(si({-1, 0, -1, 1, 0, 1}));
  CHECK(r4.middle[0] == Divisor{{-1, -1, 1}});
  CHECK(r4.middle[1] == Divisor{{0, -1, 0}});
  CHECK(r4.middle[2] == Divisor{{-1, 1, 0}});
  CHECK(r2.str() == "0 -> O(-D0-D1) -> O(-D0-D1+D2) ⊕ O(-D1) ⊕ O(-D0) -> E -> 0");
}

TEST_CASE("line bundle Euler characteristic") {
  CHECK(chi_line(0) == 1);
  CHECK(chi_line(-1) == 0);
  CHECK(chi_line(-2) == 0);
  CHECK(chi_line(-3) == 1);
  CHECK(chi_line(2) == 6);
}

TEST_CASE("verification report") {
  const auto rep = verify_resolution(si({-1, 0, -1, 0, 0, 2}), 0, 0);
  REQUIRE(rep.chi_rows.size() == 1);
  CHECK(rep.chi_rows[0].from_resolution == 1);
  CHECK(rep.chi_rows[0].from_cohomology == 1);
  const auto r1 = verify_resolution(si({-1, 0, -1, 0, 0, 1}));
  CHECK(r1.c1_filtration == -1);
  CHECK(r1.c1_resolution == -1);
  CHECK(r1.chi_rows.size() == 11);
  for (std::int64_t d = 2; d <= 6; ++d) {
    for (const auto& e : enumerate_si(d)) CHECK(verify_resolution(e.delta, -2, 2).ok());
  }
}
