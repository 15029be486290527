#include "toricvb/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "toricvb/chern.hpp"
#include "toricvb/cohomology.hpp"

namespace toricvb {

std::string PerlingResolution::str() const {
  std::string out = "0 -> O(" + left.str() + ") -> ";
  for (std::size_t k = 0; k < middle.size(); ++k) {
    if (k) out += " ⊕ ";
    out += "O(" + middle[k].str() + ")";
  }
  return out + " -> E -> 0";
}

PerlingResolution perling_resolution(const ShiftingIndices& delta) {
  delta.validate();
  PerlingResolution res;
  res.left.coeffs = {delta.lower[0], delta.lower[1], delta.lower[2]};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [i, j, l] = PerlingResolution::kIndexSet[k];
    Divisor d{{0, 0, 0}};
    d.coeffs[i] = delta.lower[i];
    d.coeffs[j] = delta.lower[j];
    d.coeffs[l] = delta.upper[l];
    res.middle[k] = d;
  }
  return res;
}

std::int64_t chi_line(std::int64_t k) { return (k + 1) * (k + 2) / 2; }

bool ResolutionReport::chi_ok() const {
  return std::all_of(chi_rows.begin(), chi_rows.end(),
                     [](const ChiRow& r) { return r.from_cohomology == r.from_resolution; });
}

std::string ResolutionReport::str() const {
  std::ostringstream os;
  os << "rank: 3 - 1 = 2 " << (rank_ok ? "ok" : "FAILED") << "\n";
  os << "c1: filtrations " << c1_filtration << ", resolution " << c1_resolution << " "
     << (c1_ok() ? "ok" : "FAILED") << "\n";
  os << "chi(E(t)):";
  for (const auto& r : chi_rows) {
    os << " t=" << r.t << ":" << r.from_cohomology;
    if (r.from_cohomology != r.from_resolution) os << "!=" << r.from_resolution;
  }
  os << " " << (chi_ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

ResolutionReport verify_resolution(const ShiftingIndices& delta, std::int64_t t_min, std::int64_t t_max) {
  const PerlingResolution res = perling_resolution(delta);
  const ToricBundle e = from_shifting_indices(delta);
  ResolutionReport report;
  report.delta = delta;
  report.rank_ok = static_cast<std::int64_t>(res.middle.size()) - 1 == static_cast<std::int64_t>(e.rank());
  report.c1_filtration = c1(e);
  std::int64_t middle_deg = 0;
  for (const auto& m : res.middle) middle_deg += m.degree();
  report.c1_resolution = middle_deg - res.left.degree();
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    std::int64_t chi_res = -chi_line(res.left.degree() + t);
    for (const auto& m : res.middle) chi_res += chi_line(m.degree() + t);
    report.chi_rows.push_back({t, euler_char(twist_by_hyperplane(e, t)), chi_res});
  }
  return report;
}

}  // namespace toricvb
