#include "toricvb/bundle.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

#include "toricvb/error.hpp"

namespace toricvb {

ToricBundle::ToricBundle(FanPn fan, std::vector<Filtration> filtrations)
    : fan_(std::move(fan)), filtrations_(std::move(filtrations)) {
  if (static_cast<int>(filtrations_.size()) != fan_.num_rays()) {
    throw InvariantViolation("expected " + std::to_string(fan_.num_rays()) + " filtrations, got " +
                             std::to_string(filtrations_.size()));
  }
  for (std::size_t i = 1; i < filtrations_.size(); ++i) {
    if (filtrations_[i].ambient_dim() != filtrations_[0].ambient_dim()) {
      throw InvariantViolation("filtration of ray " + std::to_string(i) + " has a different ambient dimension");
    }
  }
}

// --- shifting indices -------------------------------------------------------

ShiftingIndices ShiftingIndices::from_tuple(const std::array<std::int64_t, 6>& t) {
  ShiftingIndices out;
  for (int i = 0; i < 3; ++i) {
    out.lower[i] = t[2 * i];
    out.upper[i] = t[2 * i + 1];
  }
  return out;
}

std::array<std::int64_t, 6> ShiftingIndices::tuple() const {
  return {lower[0], upper[0], lower[1], upper[1], lower[2], upper[2]};
}

ShiftingIndices ShiftingIndices::parse(std::string_view text) {
  std::array<std::int64_t, 6> t{};
  std::size_t idx = 0;
  std::size_t groups = 1;
  std::size_t in_group = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("delta", why + " in '" + std::string(text) + "'");
  };
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (idx >= 6) throw fail("more than six entries");
    std::int64_t v = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) throw fail("bad integer '" + std::string(tok) + "'");
    t[idx++] = v;
    ++in_group;
    if (end == text.size()) break;
    if (text[end] == ';') {
      if (in_group != 2) throw fail("each ray needs two indices");
      in_group = 0;
      ++groups;
    }
    pos = end + 1;
  }
  if (idx != 6 || groups != 3 || in_group != 2) throw fail("expected a02,a01;a12,a11;a22,a21");
  return from_tuple(t);
}

std::string ShiftingIndices::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ";";
    out += std::to_string(lower[i]) + "," + std::to_string(upper[i]);
  }
  return out;
}

bool ShiftingIndices::valid() const {
  for (int i = 0; i < 3; ++i) {
    if (upper[i] <= lower[i]) return false;
  }
  return true;
}

void ShiftingIndices::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (upper[i] <= lower[i]) {
      throw InvariantViolation("shifting indices " + str() + ": ray " + std::to_string(i) +
                               " needs a_i^1 > a_i^2");
    }
  }
}

// --- constructors -----------------------------------------------------------

namespace {

Vector to_vector(const std::vector<std::int64_t>& v) {
  Vector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

void require_same_fan(const ToricBundle& e, const ToricBundle& f) {
  if (!(e.fan() == f.fan())) throw DimensionError("bundles live on different fans");
}

void require_rank2_p2(const ToricBundle& e) {
  if (e.fan().dim() != 2) throw DomainError("operation needs a bundle on P^2");
  if (e.rank() != 2) throw DomainError("operation needs a rank-2 bundle, got rank " + std::to_string(e.rank()));
}

}  // namespace

ToricBundle line_bundle(const FanPn& fan, const Divisor& d) {
  if (static_cast<int>(d.coeffs.size()) != fan.num_rays()) throw DimensionError("divisor has wrong length");
  std::vector<Filtration> fs;
  for (auto l : d.coeffs) fs.push_back(Filtration::single_drop(1, l));
  return ToricBundle(fan, std::move(fs));
}

ToricBundle tangent_bundle(const FanPn& fan) {
  const auto n = static_cast<std::size_t>(fan.dim());
  std::vector<Filtration> fs;
  for (int i = 0; i < fan.num_rays(); ++i) {
    fs.emplace_back(n, std::vector<FiltrationStep>{{0, Subspace::full(n)},
                                                   {1, Subspace::span({to_vector(fan.ray(i))}, n)}});
  }
  return ToricBundle(fan, std::move(fs));
}

ToricBundle from_shifting_indices(const ShiftingIndices& delta) {
  delta.validate();
  const std::array<Vector, 3> lines = {Vector{1, 0}, Vector{0, 1}, Vector{1, 1}};
  std::vector<Filtration> fs;
  for (int i = 0; i < 3; ++i) {
    fs.emplace_back(2, std::vector<FiltrationStep>{{delta.lower[i], Subspace::full(2)},
                                                   {delta.upper[i], Subspace::span({lines[i]}, 2)}});
  }
  return ToricBundle(FanPn(2), std::move(fs));
}

ShiftingIndices shifting_indices(const ToricBundle& e) {
  require_rank2_p2(e);
  if (is_split(e)) throw SplitBundleError("split bundle has no shifting indices");
  ShiftingIndices out;
  for (int i = 0; i < 3; ++i) {
    const auto& steps = e.filtration(i).steps();
    // Non-split forces a line on every ray.
    if (steps.size() != 2) throw SplitBundleError("ray " + std::to_string(i) + " carries no line");
    out.lower[i] = steps[0].until;
    out.upper[i] = steps[1].until;
  }
  return out;
}

ToricBundle twist(const ToricBundle& e, const Divisor& d) {
  if (static_cast<int>(d.coeffs.size()) != e.fan().num_rays()) throw DimensionError("divisor has wrong length");
  std::vector<Filtration> fs;
  for (int i = 0; i < e.fan().num_rays(); ++i) fs.push_back(e.filtration(i).shifted(d.coeffs[i]));
  return ToricBundle(e.fan(), std::move(fs));
}

ToricBundle direct_sum(const ToricBundle& e, const ToricBundle& f) {
  require_same_fan(e, f);
  const std::size_t r = e.rank() + f.rank();
  std::vector<Filtration> fs;
  for (int i = 0; i < e.fan().num_rays(); ++i) {
    const auto& a = e.filtration(i);
    const auto& b = f.filtration(i);
    std::vector<std::int64_t> pts;
    for (const auto& s : a.steps()) pts.push_back(s.until);
    for (const auto& s : b.steps()) pts.push_back(s.until);
    fs.push_back(Filtration::tabulate(r, pts, [&](std::int64_t j) { return toricvb::direct_sum(a.eval(j), b.eval(j)); }));
  }
  return ToricBundle(e.fan(), std::move(fs));
}

ToricBundle tensor(const ToricBundle& e, const ToricBundle& f) {
  require_same_fan(e, f);
  const std::size_t r = e.rank() * f.rank();
  std::vector<Filtration> fs;
  for (int i = 0; i < e.fan().num_rays(); ++i) {
    const auto& a = e.filtration(i);
    const auto& b = f.filtration(i);
    std::vector<std::int64_t> pts;
    for (const auto& s : a.steps())
      for (const auto& t : b.steps()) pts.push_back(s.until + t.until);
    // sum_{s+t=j} A(s) (x) B(t) is attained at s = the until of each step of A.
    auto space_at = [&](std::int64_t j) {
      Subspace acc = Subspace::zero(r);
      for (const auto& s : a.steps()) acc = sum(acc, tensor_product(s.space, b.eval(j - s.until)));
      return acc;
    };
    fs.push_back(Filtration::tabulate(r, pts, space_at));
  }
  return ToricBundle(e.fan(), std::move(fs));
}

ToricBundle dual(const ToricBundle& e) {
  const std::size_t r = e.rank();
  std::vector<Filtration> fs;
  for (int i = 0; i < e.fan().num_rays(); ++i) {
    const auto& a = e.filtration(i);
    std::vector<std::int64_t> pts;
    for (const auto& s : a.steps()) pts.push_back(-s.until);
    fs.push_back(Filtration::tabulate(r, pts, [&](std::int64_t j) { return annihilator(a.eval(1 - j)); }));
  }
  return ToricBundle(e.fan(), std::move(fs));
}

// --- predicates -------------------------------------------------------------

namespace {

// Closure of `gens` under + and ∩, or nullopt once it exceeds `cap` elements.
std::optional<std::vector<Subspace>> lattice_closure(std::set<Subspace> elems, std::size_t cap) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> cur(elems.begin(), elems.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        for (auto&& s : {sum(cur[i], cur[j]), intersect(cur[i], cur[j])}) {
          if (elems.insert(s).second) {
            grew = true;
            if (elems.size() > cap) return std::nullopt;
          }
        }
      }
    }
  }
  return std::vector<Subspace>(elems.begin(), elems.end());
}

}  // namespace

bool is_split(const ToricBundle& e) {
  const std::size_t r = e.rank();
  if (r <= 1) return true;
  std::set<Subspace> proper;
  for (const auto& f : e.filtrations()) {
    for (const auto& s : f.steps()) {
      if (!s.space.is_full()) proper.insert(s.space);
    }
  }
  if (r == 2) return proper.size() <= 2;
  // A family of subspaces has a common adapted basis iff the lattice it
  // generates is distributive. A distributive lattice of subspaces of Q^r has
  // length at most r, hence at most 2^r elements.
  proper.insert(Subspace::zero(r));
  proper.insert(Subspace::full(r));
  const std::size_t cap = r >= 20 ? std::size_t{1} << 20 : std::size_t{1} << r;
  auto lattice = lattice_closure(std::move(proper), cap);
  if (!lattice) return false;
  const auto& l = *lattice;
  for (const auto& x : l) {
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        if (intersect(x, sum(l[a], l[b])) != sum(intersect(x, l[a]), intersect(x, l[b]))) return false;
      }
    }
  }
  return true;
}

bool check_locally_free(const ToricBundle& e) {
  const auto& fan = e.fan();
  const std::size_t r = e.rank();
  for (const auto& cone : fan.cones(fan.dim())) {
    // The rays of a maximal cone form a basis of N, so characters m correspond
    // one-to-one with index tuples (j_rho). Only tuples whose entries are
    // jump positions contribute.
    std::vector<std::vector<std::int64_t>> jumps;
    for (int ray : cone) {
      std::vector<std::int64_t> js;
      for (const auto& s : e.filtration(ray).steps()) js.push_back(s.until);
      jumps.push_back(std::move(js));
    }
    std::size_t total = 0;
    std::vector<std::size_t> idx(cone.size(), 0);
    while (true) {
      auto meet = [&](std::size_t bumped) {
        Subspace acc = Subspace::full(r);
        for (std::size_t k = 0; k < cone.size(); ++k) {
          const std::int64_t j = jumps[k][idx[k]] + (k == bumped ? 1 : 0);
          acc = intersect(acc, e.filtration(cone[k]).eval(j));
        }
        return acc;
      };
      const Subspace top = meet(cone.size());
      Subspace below = Subspace::zero(r);
      for (std::size_t k = 0; k < cone.size(); ++k) below = sum(below, meet(k));
      total += top.dim() - below.dim();
      std::size_t k = 0;
      while (k < cone.size() && ++idx[k] == jumps[k].size()) idx[k++] = 0;
      if (k == cone.size()) break;
    }
    if (total != r) return false;
  }
  return true;
}

bool is_slope_stable(const ShiftingIndices& delta) {
  delta.validate();
  const auto a0 = delta.band(0), a1 = delta.band(1), a2 = delta.band(2);
  return a0 < a1 + a2 && a1 < a0 + a2 && a2 < a0 + a1;
}

bool is_slope_stable(const ToricBundle& e) { return is_slope_stable(shifting_indices(e)); }

}  // namespace toricvb
