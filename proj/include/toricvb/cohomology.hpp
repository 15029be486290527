#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toricvb/bundle.hpp"

namespace toricvb {

/// E^σ_m: intersection of E^ρ(<m, u_ρ>) over the rays of σ; the whole space
/// for the zero cone.
Subspace graded_component(const ToricBundle& e, const Cone& cone, const Character& m);

/// dim H^p(E)_m as the homology of the Klyachko complex
///   0 <- E <- ⊕_{|σ|=1} E^σ_m <- ... <- ⊕_{|σ|=n} E^σ_m <- 0
/// at position n - p, with boundary signs from toricvb::boundary.
std::size_t hp_chain(const ToricBundle& e, int p, const Character& m);

/// dim H^p(E)_m from the intersection/quotient formulas valid on P^n:
///   H^0_m = ∩ E^ρ_m,   H^n_m = E / Σ E^ρ_m,
///   H^{n-q}_m = (E_0 ∩ ... ∩ E_{q-1} ∩ Σ_{k>=q} E_k) / Σ_{k>=q} (E_0 ∩ ... ∩ E_{q-1} ∩ E_k).
std::size_t hp_closed(const ToricBundle& e, int p, const Character& m);

/// Axis-aligned bounds lower[i] <= <m, u_i> <= upper[i] on the pairings with
/// every ray (including the last, which is determined by the others).
struct SupportBox {
  int degree = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  bool contains(const Character& m) const;
  /// All characters inside, in lexicographic order of m.
  std::vector<Character> characters() const;
  SupportBox widened(std::int64_t margin) const;
  /// Characters of widened(margin) that are not in this box.
  std::vector<Character> ring(std::int64_t margin) const;
};

/// A region outside of which H^p(E)_m vanishes.
///   p = 0:     <m,u_i> <= hi_i for all i
///   p = n:     <m,u_i> >  lo_i for all i
///   otherwise: lo_i < <m,u_i> <= hi_i for all i
/// where lo_i is the last index with E^ρ_i(j) = E and hi_i the last with
/// E^ρ_i(j) != 0. The relation sum_i <m,u_i> = 0 makes each region bounded.
SupportBox support_box(const ToricBundle& e, int p);

enum class Route { closed, chain };

/// Nonzero entries of m -> dim H^p(E)_m.
std::map<Character, std::size_t> graded_cohomology(const ToricBundle& e, int p, Route route = Route::closed);

std::int64_t h(const ToricBundle& e, int p, Route route = Route::closed);
std::int64_t euler_char(const ToricBundle& e);

/// E(t) = E ⊗ O(t·D_n).
ToricBundle twist_by_hyperplane(const ToricBundle& e, std::int64_t t);

/// h^p(E(t)) for t_min <= t <= t_max.
struct CohomologyTable {
  int n = 2;
  std::int64_t t_min = 0;
  std::int64_t t_max = 0;
  std::vector<std::vector<std::int64_t>> rows;  // rows[t - t_min][p]

  std::int64_t at(int p, std::int64_t t) const { return rows.at(static_cast<std::size_t>(t - t_min)).at(p); }
  std::int64_t euler(std::int64_t t) const;
};

CohomologyTable cohomology_table(const ToricBundle& e, std::int64_t t_min, std::int64_t t_max,
                                 Route route = Route::closed);

}  // namespace toricvb
