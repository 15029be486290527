#include "toricvb/validation.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "toricvb/census.hpp"
#include "toricvb/chern.hpp"
#include "toricvb/cohomology.hpp"
#include "toricvb/random_bundle.hpp"
#include "toricvb/resolution.hpp"

namespace toricvb {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures and timing for one criterion.
class Check {
 public:
  Check(int id, std::string name) : start_(Clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
  }

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  void note(const std::string& s) { notes_.push_back(s); }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  CriterionResult finish() {
    result_.seconds = elapsed();
    result_.passed = failed_ == 0;
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& f : failures_) os << "; FAIL " << f;
    result_.detail = os.str();
    return result_;
  }

 private:
  CriterionResult result_;
  Clock::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

ShiftingIndices si(std::array<std::int64_t, 6> t) { return ShiftingIndices::from_tuple(t); }

std::vector<ShiftingIndices> deltas(const std::vector<CensusEntry>& entries) {
  std::vector<ShiftingIndices> out;
  for (const auto& e : entries) out.push_back(e.delta);
  return out;
}

}  // namespace

CriterionResult check_counting(const AcceptanceOptions& opts) {
  Check c(1, "count |SI(d)| = recurrence = closed form");
  for (std::int64_t d = 2; d <= opts.max_count_d; ++d) {
    const auto n_enum = static_cast<std::int64_t>(enumerate_si(d).size());
    const auto n_rec = count_recurrence(d);
    const auto n_closed = count_closed(d);
    c.expect(n_enum == n_rec && n_rec == n_closed,
             "d=" + std::to_string(d) + ": " + std::to_string(n_enum) + "/" + std::to_string(n_rec) + "/" +
                 std::to_string(n_closed));
  }
  c.note("d=2.." + std::to_string(opts.max_count_d));
  const double secs = c.elapsed();
  c.expect(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s");
  return c.finish();
}

CriterionResult check_reference_lists(const AcceptanceOptions&) {
  Check c(2, "SI(2), SI(3) lists and the d=4 census");
  const std::vector<ShiftingIndices> si2 = {si({-1, 0, -1, 0, 0, 1})};
  const std::vector<ShiftingIndices> si3 = {si({-1, 0, -1, 0, 0, 1}), si({-1, 0, -1, 0, 0, 2}),
                                            si({-1, 0, -1, 0, 1, 2}), si({-1, 0, -1, 1, 0, 1}),
                                            si({-1, 1, -1, 0, 0, 1})};
  c.expect(deltas(enumerate_si(2)) == si2, "SI(2) differs from the reference list");
  c.expect(deltas(enumerate_si(3)) == si3, "SI(3) differs from the reference list");
  const auto si4 = enumerate_si(4);
  const auto type3 = std::count_if(si4.begin(), si4.end(), [](const CensusEntry& e) { return e.type == CensusType::III; });
  c.expect(si4.size() == 15, "|SI(4)| = " + std::to_string(si4.size()));
  c.expect(type3 == 6, "type III count in SI(4) = " + std::to_string(type3));
  c.expect(static_cast<std::int64_t>(si4.size()) - type3 == 9, "types I/II in SI(4) != 9");
  return c.finish();
}

CriterionResult check_fast_oracle(const AcceptanceOptions& opts) {
  Check c(3, "fast d-aCM test agrees with the cohomology oracle");
  std::size_t tuples = 0, disagreements = 0;
  for (std::int64_t d = 2; d <= opts.max_oracle_d; ++d) {
    for (const auto& delta : census_box(d)) {
      ++tuples;
      const bool fast = is_d_acm_fast(delta, d);
      const bool oracle = is_d_acm_oracle(from_shifting_indices(delta), d);
      if (fast != oracle) {
        ++disagreements;
        c.expect(false, "d=" + std::to_string(d) + " delta=" + delta.str());
      }
    }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.note(std::to_string(tuples) + " tuples, d=2.." + std::to_string(opts.max_oracle_d));
  const double secs = c.elapsed();
  c.expect(secs < 120.0, "runtime " + std::to_string(secs) + "s exceeds 120s");
  return c.finish();
}

CriterionResult check_cohomology_paths(const AcceptanceOptions& opts) {
  Check c(4, "chain-complex and closed-form cohomology agree");
  std::mt19937_64 rng(opts.seed);
  std::size_t characters = 0;
  for (std::size_t b = 0; b < opts.random_bundles; ++b) {
    const auto rank = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
    const ToricBundle e = random_bundle(rng, rank);
    for (int p = 0; p <= 2; ++p) {
      const SupportBox box = support_box(e, p);
      for (const auto& m : box.characters()) {
        ++characters;
        const auto chain = hp_chain(e, p, m);
        const auto closed = hp_closed(e, p, m);
        c.expect(chain == closed, "bundle " + std::to_string(b) + " p=" + std::to_string(p) + " m=" + m.str() + ": " +
                                      std::to_string(chain) + " vs " + std::to_string(closed));
      }
      for (const auto& m : box.ring(1)) {
        ++characters;
        const auto chain = hp_chain(e, p, m);
        const auto closed = hp_closed(e, p, m);
        c.expect(chain == 0 && closed == 0, "bundle " + std::to_string(b) + " p=" + std::to_string(p) +
                                                " margin m=" + m.str() + " nonzero");
      }
    }
  }
  c.note(std::to_string(opts.random_bundles) + " bundles, " + std::to_string(characters) + " graded pieces");
  return c.finish();
}

CriterionResult check_known_values(const AcceptanceOptions&) {
  Check c(5, "known cohomology of T, O(t)");
  const FanPn fan(2);
  const ToricBundle t = tangent_bundle(fan);
  c.expect(h(t, 0) == 8, "h0(T) = " + std::to_string(h(t, 0)));
  c.expect(h(t, 1) == 0, "h1(T) != 0");
  c.expect(h(t, 2) == 0, "h2(T) != 0");
  // symmetric twist by -(D0+D1+D2), so T(-3) is the cotangent bundle equivariantly
  const ToricBundle t3 = twist(t, Divisor{{-1, -1, -1}});
  c.expect(h(twist_by_hyperplane(t, -3), 1) == 1, "h1(T(-3 D2)) != 1");
  const auto g = graded_cohomology(t3, 1);
  c.expect(g.size() == 1 && g.begin()->first == Character{{0, 0}} && g.begin()->second == 1,
           "h1(T(-3)) not concentrated as 1 at m=(0,0)");
  for (std::int64_t k = 0; k <= 6; ++k) {
    const auto v = h(line_bundle(fan, fan.hyperplane(k)), 0);
    c.expect(v == (k + 1) * (k + 2) / 2, "h0(O(" + std::to_string(k) + ")) = " + std::to_string(v));
  }
  for (std::int64_t k = -6; k <= 6; ++k) {
    c.expect(h(line_bundle(fan, fan.hyperplane(k)), 1) == 0, "h1(O(" + std::to_string(k) + ")) != 0");
  }
  c.expect(h(line_bundle(fan, fan.hyperplane(-3)), 2) == 1, "h2(O(-3)) != 1");
  return c.finish();
}

CriterionResult check_chern(const AcceptanceOptions&) {
  Check c(6, "c1 from filtrations matches the resolution; chern_total values");
  std::size_t count = 0;
  for (std::int64_t d = 2; d <= 6; ++d) {
    for (const auto& entry : enumerate_si(d)) {
      ++count;
      const auto res = perling_resolution(entry.delta);
      std::int64_t mid = 0;
      for (const auto& m : res.middle) mid += m.degree();
      const auto from_filtration = c1(from_shifting_indices(entry.delta));
      c.expect(from_filtration == mid - res.left.degree(), "delta=" + entry.delta.str());
    }
  }
  c.note(std::to_string(count) + " tuples from SI(2..6)");
  const auto ct = chern_total(tangent_bundle(FanPn(2)));
  c.expect(ct == ChernData{2, 3, 3}, "chern_total(T) = " + ct.str());
  const auto ce = chern_total(from_shifting_indices(si({-1, 0, -1, 0, 0, 2})));
  c.expect(ce == ChernData{2, 0, 1}, "chern_total(-1,0;-1,0;0,2) = " + ce.str());
  return c.finish();
}

CriterionResult check_resolution_chi(const AcceptanceOptions&) {
  Check c(7, "Euler characteristic matches the resolution over 11 twists");
  std::size_t count = 0;
  for (std::int64_t d = 2; d <= 5; ++d) {
    for (const auto& entry : enumerate_si(d)) {
      ++count;
      const auto report = verify_resolution(entry.delta, -5, 5);
      c.expect(report.chi_rows.size() == 11 && report.chi_ok(), "delta=" + entry.delta.str());
    }
  }
  c.note(std::to_string(count) + " tuples from SI(2..5)");
  return c.finish();
}

CriterionResult check_normalization(const AcceptanceOptions& opts) {
  Check c(8, "normalization is idempotent and rebuilds SI(d)");
  const auto t = normalize(si({0, 1, 0, 1, 0, 1}), 2);
  c.expect(t && t->delta == si({-1, 0, -1, 0, 0, 1}), "normalize((0,1;0,1;0,1), 2)");
  for (std::int64_t d = 2; d <= opts.max_oracle_d; ++d) {
    for (const auto& entry : enumerate_si(d)) {
      const auto again = normalize(entry.delta, d);
      c.expect(again && again->delta == entry.delta, "SI fixed point " + entry.delta.str());
    }
    for (const auto& delta : census_box(d)) {
      if (auto once = normalize(delta, d)) {
        const auto twice = normalize(once->delta, d);
        c.expect(twice && twice->delta == once->delta, "idempotence at " + delta.str());
      }
    }
    const auto rebuilt = brute_force_census(d);
    c.expect(rebuilt == deltas(enumerate_si(d)), "brute-force census differs for d=" + std::to_string(d));
  }
  return c.finish();
}

CriterionResult check_monotone_inclusion(const AcceptanceOptions&) {
  Check c(9, "SI(d) ⊆ SI(d') and d'-aCM for d < d' <= 10");
  for (std::int64_t d = 2; d <= 10; ++d) {
    const auto base = deltas(enumerate_si(d));
    for (std::int64_t d2 = d + 1; d2 <= 10; ++d2) {
      const auto big = deltas(enumerate_si(d2));
      const std::set<ShiftingIndices> big_set(big.begin(), big.end());
      for (const auto& delta : base) {
        c.expect(big_set.count(delta) == 1, delta.str() + " missing from SI(" + std::to_string(d2) + ")");
        c.expect(is_d_acm_fast(delta, d2), delta.str() + " not " + std::to_string(d2) + "-aCM");
      }
    }
  }
  return c.finish();
}

CriterionResult check_stability_duality(const AcceptanceOptions& opts) {
  Check c(10, "slope stability and Serre duality");
  c.expect(is_slope_stable(si({-1, 0, -1, 0, 0, 1})), "(-1,0;-1,0;0,1) should be stable");
  c.expect(!is_slope_stable(si({-1, 0, -1, 0, 0, 2})), "(-1,0;-1,0;0,2) should not be stable");
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t b = 0; b < opts.serre_bundles; ++b) {
    const ToricBundle e = random_bundle(rng, 2);
    const ToricBundle ed = dual(e);
    for (std::int64_t t = -5; t <= 5; ++t) {
      const auto lhs = h(twist_by_hyperplane(e, t), 2);
      const auto rhs = h(twist_by_hyperplane(ed, -t - 3), 0);
      c.expect(lhs == rhs, "bundle " + std::to_string(b) + " t=" + std::to_string(t) + ": " + std::to_string(lhs) +
                               " vs " + std::to_string(rhs));
    }
  }
  c.note(std::to_string(opts.serre_bundles) + " random rank-2 bundles, t=-5..5");
  return c.finish();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  const Fn checks[] = {check_counting,       check_reference_lists,   check_fast_oracle,    check_cohomology_paths,
                       check_known_values,   check_chern,         check_resolution_chi, check_normalization,
                       check_monotone_inclusion, check_stability_duality};
  std::vector<CriterionResult> out;
  for (Fn fn : checks) {
    out.push_back(fn(opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace toricvb
