#include "toricvb/cohomology.hpp"

#include "toricvb/error.hpp"

namespace toricvb {

namespace {

void check_degree(const ToricBundle& e, int p) {
  if (p < 0 || p > e.fan().dim()) throw DomainError("cohomological degree " + std::to_string(p) + " out of range");
}

// E^{ρ_i}_m for every ray.
std::vector<const Subspace*> ray_components(const ToricBundle& e, const Character& m) {
  std::vector<const Subspace*> out;
  out.reserve(static_cast<std::size_t>(e.fan().num_rays()));
  for (int i = 0; i < e.fan().num_rays(); ++i) out.push_back(&e.filtration(i).eval(e.fan().pairing(m, i)));
  return out;
}

}  // namespace

Subspace graded_component(const ToricBundle& e, const Cone& cone, const Character& m) {
  Subspace acc = Subspace::full(e.rank());
  for (int ray : cone) acc = intersect(acc, e.filtration(ray).eval(e.fan().pairing(m, ray)));
  return acc;
}

std::size_t hp_chain(const ToricBundle& e, int p, const Character& m) {
  check_degree(e, p);
  const auto& fan = e.fan();
  const int n = fan.dim();
  const std::size_t r = e.rank();
  const int pos = n - p;

  // Components for cone dimensions pos - 1 .. pos + 1 (those that exist).
  struct Level {
    std::vector<Cone> cones;
    std::vector<Subspace> spaces;
    std::map<Cone, std::size_t> index;
  };
  auto build = [&](int k) {
    Level lv;
    lv.cones = fan.cones(k);
    for (std::size_t i = 0; i < lv.cones.size(); ++i) {
      lv.spaces.push_back(graded_component(e, lv.cones[i], m));
      lv.index.emplace(lv.cones[i], i);
    }
    return lv;
  };
  // Rank of the boundary C_k -> C_{k-1}.
  auto boundary_rank = [&](const Level& src, const Level& dst) -> std::size_t {
    const std::size_t cols = dst.cones.size() * r;
    std::vector<Vector> rows;
    for (std::size_t c = 0; c < src.cones.size(); ++c) {
      const auto faces = boundary(src.cones[c]);
      for (const auto& v : src.spaces[c].basis()) {
        Vector row(cols, Rational(0));
        for (const auto& f : faces) {
          const std::size_t off = dst.index.at(f.face) * r;
          for (std::size_t k = 0; k < r; ++k) row[off + k] = f.sign > 0 ? v[k] : -v[k];
        }
        rows.push_back(std::move(row));
      }
    }
    return rows.empty() ? 0 : matrix_rank(rows, cols);
  };

  const Level here = build(pos);
  std::size_t dim_here = 0;
  for (const auto& s : here.spaces) dim_here += s.dim();
  std::size_t rank_out = 0;  // C_pos -> C_{pos-1}
  std::size_t rank_in = 0;   // C_{pos+1} -> C_pos
  if (pos >= 1) rank_out = boundary_rank(here, build(pos - 1));
  if (pos + 1 <= n) rank_in = boundary_rank(build(pos + 1), here);
  return dim_here - rank_out - rank_in;
}

std::size_t hp_closed(const ToricBundle& e, int p, const Character& m) {
  check_degree(e, p);
  const int n = e.fan().dim();
  const std::size_t r = e.rank();
  const auto comps = ray_components(e, m);
  if (p == 0) {
    Subspace acc = *comps[0];
    for (int i = 1; i <= n && !acc.is_zero(); ++i) acc = intersect(acc, *comps[i]);
    return acc.dim();
  }
  if (p == n) {
    Subspace acc = *comps[0];
    for (int i = 1; i <= n && !acc.is_full(); ++i) acc = sum(acc, *comps[i]);
    return r - acc.dim();
  }
  // H^{n-q} with q = n - p.
  const int q = n - p;
  Subspace head = *comps[0];
  for (int i = 1; i < q; ++i) head = intersect(head, *comps[i]);
  if (head.is_zero()) return 0;
  Subspace tail = Subspace::zero(r);
  Subspace denom = Subspace::zero(r);
  for (int k = q; k <= n; ++k) {
    tail = sum(tail, *comps[k]);
    denom = sum(denom, intersect(head, *comps[k]));
  }
  return intersect(head, tail).dim() - denom.dim();
}

// --- support ----------------------------------------------------------------

bool SupportBox::contains(const Character& m) const {
  std::int64_t last = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] < lower[k] || m[k] > upper[k]) return false;
    last -= m[k];
  }
  return last >= lower.back() && last <= upper.back();
}

std::vector<Character> SupportBox::characters() const {
  std::vector<Character> out;
  const std::size_t n = lower.size() - 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (lower[k] > upper[k]) return out;
  }
  Character m{std::vector<std::int64_t>(lower.begin(), lower.begin() + static_cast<std::ptrdiff_t>(n))};
  while (true) {
    if (contains(m)) out.push_back(m);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++m.coords[k] <= upper[k]) break;
      m.coords[k] = lower[k];
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

SupportBox SupportBox::widened(std::int64_t margin) const {
  SupportBox out = *this;
  for (auto& v : out.lower) v -= margin;
  for (auto& v : out.upper) v += margin;
  return out;
}

std::vector<Character> SupportBox::ring(std::int64_t margin) const {
  std::vector<Character> out;
  for (auto& m : widened(margin).characters()) {
    if (!contains(m)) out.push_back(std::move(m));
  }
  return out;
}

SupportBox support_box(const ToricBundle& e, int p) {
  check_degree(e, p);
  const int n = e.fan().dim();
  const auto rays = static_cast<std::size_t>(n + 1);
  SupportBox box;
  box.degree = p;
  box.lower.resize(rays);
  box.upper.resize(rays);
  std::vector<std::int64_t> lo(rays), hi(rays);
  for (std::size_t i = 0; i < rays; ++i) {
    lo[i] = e.filtration(static_cast<int>(i)).last_full();
    hi[i] = e.filtration(static_cast<int>(i)).last_nonzero();
  }
  std::int64_t sum_hi = 0, sum_lo1 = 0;
  for (std::size_t i = 0; i < rays; ++i) {
    sum_hi += hi[i];
    sum_lo1 += lo[i] + 1;
  }
  for (std::size_t i = 0; i < rays; ++i) {
    if (p == 0) {
      box.upper[i] = hi[i];
      box.lower[i] = -(sum_hi - hi[i]);
    } else if (p == n) {
      box.lower[i] = lo[i] + 1;
      box.upper[i] = -(sum_lo1 - (lo[i] + 1));
    } else {
      box.lower[i] = lo[i] + 1;
      box.upper[i] = hi[i];
    }
  }
  return box;
}

// --- totals -----------------------------------------------------------------

std::map<Character, std::size_t> graded_cohomology(const ToricBundle& e, int p, Route route) {
  std::map<Character, std::size_t> out;
  for (const auto& m : support_box(e, p).characters()) {
    const std::size_t d = route == Route::closed ? hp_closed(e, p, m) : hp_chain(e, p, m);
    if (d != 0) out.emplace(m, d);
  }
  return out;
}

std::int64_t h(const ToricBundle& e, int p, Route route) {
  std::int64_t total = 0;
  for (const auto& m : support_box(e, p).characters()) {
    total += static_cast<std::int64_t>(route == Route::closed ? hp_closed(e, p, m) : hp_chain(e, p, m));
  }
  return total;
}

std::int64_t euler_char(const ToricBundle& e) {
  std::int64_t chi = 0;
  for (int p = 0; p <= e.fan().dim(); ++p) chi += (p % 2 == 0 ? 1 : -1) * h(e, p);
  return chi;
}

ToricBundle twist_by_hyperplane(const ToricBundle& e, std::int64_t t) { return twist(e, e.fan().hyperplane(t)); }

std::int64_t CohomologyTable::euler(std::int64_t t) const {
  std::int64_t chi = 0;
  for (int p = 0; p <= n; ++p) chi += (p % 2 == 0 ? 1 : -1) * at(p, t);
  return chi;
}

CohomologyTable cohomology_table(const ToricBundle& e, std::int64_t t_min, std::int64_t t_max, Route route) {
  if (t_min > t_max) throw DomainError("empty twist range");
  CohomologyTable table;
  table.n = e.fan().dim();
  table.t_min = t_min;
  table.t_max = t_max;
  for (std::int64_t t = t_min; t <= t_max; ++t) {
    const ToricBundle et = twist_by_hyperplane(e, t);
    std::vector<std::int64_t> row;
    for (int p = 0; p <= table.n; ++p) row.push_back(h(et, p, route));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace toricvb
