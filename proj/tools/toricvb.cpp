// toricvb: command-line front end for the toric bundle library.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or domain
// error, 3 unparseable input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "toricvb/bundle_io.hpp"
#include "toricvb/census.hpp"
#include "toricvb/chern.hpp"
#include "toricvb/cohomology.hpp"
#include "toricvb/error.hpp"
#include "toricvb/resolution.hpp"
#include "toricvb/validation.hpp"

using namespace toricvb;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Twists {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Twists parse_twists(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto t = std::stoll(s);
      return {t, t};
    }
    std::size_t used = 0;
    const auto lo = std::stoll(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    const std::string rest = s.substr(dots + 2);
    const auto hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    if (lo > hi) throw UsageError("--twists: empty range " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--twists: expected a..b, got '" + s + "'");
  }
}

// --bundle takes a file or a delta string; --delta only a delta string.
struct BundleArgs {
  std::string bundle;
  std::string delta;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--bundle", bundle, "bundle JSON file (or a delta string)");
    cmd->add_option("--delta", delta, "shifting indices \"a02,a01;a12,a11;a22,a21\"");
  }

  ToricBundle load() const {
    if (!bundle.empty() && !delta.empty()) throw UsageError("give either --bundle or --delta, not both");
    if (!delta.empty()) return from_shifting_indices(ShiftingIndices::parse(delta));
    if (!bundle.empty()) return load_bundle(bundle);
    throw UsageError("a bundle is required (--bundle or --delta)");
  }
};

void check_format(const std::string& f) {
  if (f != "table" && f != "json" && f != "csv") throw UsageError("--format must be table, json or csv");
}

std::int64_t require_d(std::int64_t d) {
  if (d < 2) throw UsageError("--d must be at least 2");
  return d;
}

int cmd_count(std::int64_t d, std::vector<std::string> methods) {
  require_d(d);
  if (methods.empty()) methods = {"closed", "recurrence", "enumerate"};
  std::optional<std::int64_t> first;
  bool agree = true;
  for (const auto& m : methods) {
    std::int64_t v = 0;
    if (m == "closed") {
      v = count_closed(d);
    } else if (m == "recurrence") {
      v = count_recurrence(d);
    } else if (m == "enumerate") {
      v = static_cast<std::int64_t>(enumerate_si(d).size());
    } else if (m == "oracle") {
      v = static_cast<std::int64_t>(brute_force_census(d, true).size());
    } else {
      throw UsageError("unknown --method '" + m + "'");
    }
    if (methods.size() > 1) std::cout << m << ": ";
    std::cout << v << "\n";
    if (first && *first != v) agree = false;
    if (!first) first = v;
  }
  if (!agree) {
    std::cerr << "error: methods disagree for d=" << d << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_enumerate(std::int64_t d, const std::string& format) {
  require_d(d);
  check_format(format);
  const auto entries = enumerate_si(d);
  if (format == "json") {
    json arr = json::array();
    for (const auto& e : entries) {
      const auto t = e.delta.tuple();
      arr.push_back({{"delta", json(std::vector<std::int64_t>(t.begin(), t.end()))}, {"type", to_string(e.type)}});
    }
    std::cout << json{{"d", d}, {"count", entries.size()}, {"entries", arr}}.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "a02,a01,a12,a11,a22,a21,type\n";
    for (const auto& e : entries) {
      for (auto v : e.delta.tuple()) std::cout << v << ",";
      std::cout << to_string(e.type) << "\n";
    }
  } else {
    std::cout << std::left << std::setw(24) << "delta" << "type\n";
    for (const auto& e : entries) std::cout << std::setw(24) << e.delta.str() << to_string(e.type) << "\n";
  }
  return kOk;
}

int cmd_acm(const BundleArgs& b, std::int64_t d, bool oracle) {
  require_d(d);
  const ToricBundle e = b.load();
  if (e.rank() != 2 || e.fan().dim() != 2 || is_split(e)) {
    // the fast test only exists for non-split rank 2 on P^2
    const bool o = is_d_acm_oracle(e, d);
    std::cout << "d-aCM: " << yes_no(o) << " (oracle=" << yes_no(o) << ")\n";
    return kOk;
  }
  const bool fast = is_d_acm_fast(shifting_indices(e), d);
  if (!oracle) {
    std::cout << "d-aCM: " << yes_no(fast) << " (fast=" << yes_no(fast) << ")\n";
    return kOk;
  }
  const bool o = is_d_acm_oracle(e, d);
  if (fast != o) {
    std::cout << "d-aCM: MISMATCH (fast=" << yes_no(fast) << ", oracle=" << yes_no(o) << ")\n";
    return kFailed;
  }
  std::cout << "d-aCM: " << yes_no(fast) << " (fast=" << yes_no(fast) << ", oracle=" << yes_no(o) << ")\n";
  return kOk;
}

int cmd_cohom(const BundleArgs& b, const std::string& twists, const std::string& format, bool graded, bool chain) {
  check_format(format);
  const ToricBundle e = b.load();
  const Twists tw = parse_twists(twists);
  const Route route = chain ? Route::chain : Route::closed;
  const int n = e.fan().dim();
  const auto table = cohomology_table(e, tw.lo, tw.hi, route);

  if (format == "json") {
    json rows = json::array();
    for (std::int64_t t = tw.lo; t <= tw.hi; ++t) {
      json row{{"t", t}};
      json hs = json::array();
      for (int p = 0; p <= n; ++p) hs.push_back(table.at(p, t));
      row["h"] = hs;
      row["chi"] = table.euler(t);
      if (graded) {
        json g = json::object();
        const ToricBundle et = twist_by_hyperplane(e, t);
        for (int p = 0; p <= n; ++p) {
          json entries = json::array();
          for (const auto& [m, dim] : graded_cohomology(et, p, route)) entries.push_back({{"m", m.coords}, {"dim", dim}});
          g[std::to_string(p)] = entries;
        }
        row["graded"] = g;
      }
      rows.push_back(row);
    }
    std::cout << json{{"n", n}, {"rows", rows}}.dump(2) << "\n";
    return kOk;
  }

  const std::string sep = format == "csv" ? "," : "\t";
  std::cout << "t";
  for (int p = 0; p <= n; ++p) std::cout << sep << "h" << p;
  std::cout << sep << "chi\n";
  for (std::int64_t t = tw.lo; t <= tw.hi; ++t) {
    std::cout << t;
    for (int p = 0; p <= n; ++p) std::cout << sep << table.at(p, t);
    std::cout << sep << table.euler(t) << "\n";
  }
  if (graded && format == "table") {
    for (std::int64_t t = tw.lo; t <= tw.hi; ++t) {
      const ToricBundle et = twist_by_hyperplane(e, t);
      for (int p = 0; p <= n; ++p) {
        for (const auto& [m, dim] : graded_cohomology(et, p, route)) {
          std::cout << "t=" << t << " h" << p << " m=" << m.str() << " dim " << dim << "\n";
        }
      }
    }
  }
  return kOk;
}

int cmd_chern(const BundleArgs& b) {
  const ToricBundle e = b.load();
  std::cout << chern_total(e).str() << "\n";
  return kOk;
}

int cmd_resolve(const std::string& delta_text, std::int64_t t_min, std::int64_t t_max) {
  const ShiftingIndices delta = ShiftingIndices::parse(delta_text);
  std::cout << perling_resolution(delta).str() << "\n";
  const auto report = verify_resolution(delta, t_min, t_max);
  std::cout << report.str();
  return report.ok() ? kOk : kFailed;
}

int cmd_stable(const BundleArgs& b) {
  const ToricBundle e = b.load();
  std::cout << "slope stable: " << yes_no(is_slope_stable(e)) << "\n";
  return kOk;
}

int cmd_split(const BundleArgs& b) {
  const ToricBundle e = b.load();
  std::cout << "split: " << yes_no(is_split(e)) << "\n";
  return kOk;
}

int cmd_show(const BundleArgs& b) {
  std::cout << serialize_bundle(b.load());
  return kOk;
}

int cmd_validate(std::int64_t max_d) {
  AcceptanceOptions opts;
  if (max_d < 2) throw UsageError("--max-d must be at least 2");
  opts.max_count_d = max_d;
  opts.max_oracle_d = std::min<std::int64_t>(max_d, opts.max_oracle_d);
  bool all = true;
  run_acceptance(opts, [&](const CriterionResult& r) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << "s) " << r.detail << "\n"
              << std::flush;
  });
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant vector bundles on projective space: cohomology, census and checks"};
  app.require_subcommand(1);
  bool no_color = false;
  app.add_flag("--no-color", no_color, "plain output (output is always plain)");

  std::int64_t d = 2;
  std::int64_t max_d = 30;
  std::vector<std::string> methods;
  std::string format = "table";
  std::string twists = "-3..3";
  std::string delta_only;
  std::int64_t t_min = -5, t_max = 5;
  bool oracle = false, graded = false, chain = false;
  BundleArgs acm_b, cohom_b, chern_b, stable_b, split_b, show_b;

  auto* count = app.add_subcommand("count", "number of canonical d-aCM bundles");
  count->add_option("--d", d, "d >= 2")->required();
  count->add_option("--method", methods, "closed|recurrence|enumerate|oracle (repeatable)");

  auto* enumerate = app.add_subcommand("enumerate", "list SI(d)");
  enumerate->add_option("--d", d, "d >= 2")->required();
  enumerate->add_option("--format", format, "table|json|csv");

  auto* acm = app.add_subcommand("acm", "d-aCM test");
  acm_b.add_to(acm);
  acm->add_option("--d", d, "d >= 2")->required();
  acm->add_flag("--oracle", oracle, "also decide by cohomology and compare");

  auto* cohom = app.add_subcommand("cohom", "cohomology of twists E(t)");
  cohom_b.add_to(cohom);
  cohom->add_option("--twists", twists, "range a..b");
  cohom->add_option("--format", format, "table|json|csv");
  cohom->add_flag("--graded", graded, "also list graded pieces");
  cohom->add_flag("--chain", chain, "use the chain complex instead of the closed formulas");

  auto* chern = app.add_subcommand("chern", "rank and Chern classes");
  chern_b.add_to(chern);

  auto* resolve = app.add_subcommand("resolve", "line-bundle resolution and its checks");
  resolve->add_option("--delta", delta_only, "shifting indices")->required();
  resolve->add_option("--t-min", t_min, "first twist for the chi check");
  resolve->add_option("--t-max", t_max, "last twist for the chi check");

  auto* stable = app.add_subcommand("stable", "slope stability");
  stable_b.add_to(stable);

  auto* split = app.add_subcommand("split", "splitting test");
  split_b.add_to(split);

  auto* show = app.add_subcommand("show", "print the canonical bundle document");
  show_b.add_to(show);

  auto* validate = app.add_subcommand("validate", "run the cross-validation suite");
  validate->add_option("--max-d", max_d, "upper d for the counting check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(d, methods);
    if (*enumerate) return cmd_enumerate(d, format);
    if (*acm) return cmd_acm(acm_b, d, oracle);
    if (*cohom) return cmd_cohom(cohom_b, twists, format, graded, chain);
    if (*chern) return cmd_chern(chern_b);
    if (*resolve) return cmd_resolve(delta_only, t_min, t_max);
    if (*stable) return cmd_stable(stable_b);
    if (*split) return cmd_split(split_b);
    if (*show) return cmd_show(show_b);
    if (*validate) return cmd_validate(max_d);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
