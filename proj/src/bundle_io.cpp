#include "toricvb/bundle_io.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "toricvb/error.hpp"

namespace toricvb {

namespace {

using json = nlohmann::ordered_json;

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw ParseError(ctx, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& ctx) {
  if (!v.is_number_integer()) throw ParseError(ctx, "expected an integer");
  return v.get<std::int64_t>();
}

Rational as_rational(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(ctx, e.what());
    }
  }
  throw ParseError(ctx, "expected an integer or a \"p/q\" string");
}

json rational_json(const Rational& q) {
  if (q.is_integer()) {
    const auto m = q.to_mpq();
    if (m.get_num().fits_slong_p()) return json(m.get_num().get_si());
  }
  return json(q.str());
}

}  // namespace

ToricBundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  const std::int64_t rank = as_int(field(doc, "rank", "bundle"), "rank");
  if (rank < 1) throw ParseError("rank", "must be positive");
  std::int64_t n = 2;
  if (doc.contains("n")) n = as_int(doc["n"], "n");
  if (n < 1) throw ParseError("n", "must be positive");
  const FanPn fan(static_cast<int>(n));
  const json& filts = field(doc, "filtrations", "bundle");
  if (!filts.is_array()) throw ParseError("filtrations", "expected an array");

  std::vector<std::optional<Filtration>> by_ray(static_cast<std::size_t>(fan.num_rays()));
  for (std::size_t fi = 0; fi < filts.size(); ++fi) {
    const std::string fctx = "filtrations[" + std::to_string(fi) + "]";
    const std::int64_t ray = as_int(field(filts[fi], "ray", fctx), fctx + ".ray");
    if (ray < 0 || ray >= fan.num_rays()) throw ParseError(fctx + ".ray", "ray index out of range");
    if (by_ray[static_cast<std::size_t>(ray)]) throw ParseError(fctx + ".ray", "ray listed twice");
    const json& steps = field(filts[fi], "steps", fctx);
    if (!steps.is_array()) throw ParseError(fctx + ".steps", "expected an array");
    std::vector<FiltrationStep> parsed;
    for (std::size_t si = 0; si < steps.size(); ++si) {
      const std::string sctx = fctx + ".steps[" + std::to_string(si) + "]";
      const std::int64_t until = as_int(field(steps[si], "until", sctx), sctx + ".until");
      const json& basis = field(steps[si], "basis", sctx);
      if (!basis.is_array()) throw ParseError(sctx + ".basis", "expected an array of rows");
      std::vector<Vector> rows;
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const std::string bctx = sctx + ".basis[" + std::to_string(bi) + "]";
        if (!basis[bi].is_array()) throw ParseError(bctx, "expected a row");
        if (basis[bi].size() != static_cast<std::size_t>(rank)) {
          throw ParseError(bctx, "row has " + std::to_string(basis[bi].size()) + " entries, rank is " +
                                     std::to_string(rank));
        }
        Vector row;
        for (std::size_t k = 0; k < basis[bi].size(); ++k) {
          row.push_back(as_rational(basis[bi][k], bctx + "[" + std::to_string(k) + "]"));
        }
        rows.push_back(std::move(row));
      }
      parsed.push_back({until, Subspace::span(rows, static_cast<std::size_t>(rank))});
    }
    try {
      by_ray[static_cast<std::size_t>(ray)].emplace(static_cast<std::size_t>(rank), std::move(parsed));
    } catch (const InvariantViolation& e) {
      throw InvariantViolation("filtration of ray " + std::to_string(ray) + ": " + e.what());
    }
  }
  std::vector<Filtration> fs;
  for (std::size_t i = 0; i < by_ray.size(); ++i) {
    if (!by_ray[i]) throw ParseError("filtrations", "ray " + std::to_string(i) + " is missing");
    fs.push_back(std::move(*by_ray[i]));
  }
  return ToricBundle(fan, std::move(fs));
}

std::string serialize_bundle(const ToricBundle& e) {
  json doc;
  doc["rank"] = e.rank();
  doc["n"] = e.fan().dim();
  json filts = json::array();
  for (int i = 0; i < e.fan().num_rays(); ++i) {
    json steps = json::array();
    for (const auto& s : e.filtration(i).steps()) {
      json basis = json::array();
      for (const auto& row : s.space.basis()) {
        json jr = json::array();
        for (const auto& q : row) jr.push_back(rational_json(q));
        basis.push_back(std::move(jr));
      }
      steps.push_back({{"until", s.until}, {"basis", std::move(basis)}});
    }
    filts.push_back({{"ray", i}, {"steps", std::move(steps)}});
  }
  doc["filtrations"] = std::move(filts);
  return doc.dump(2) + "\n";
}

ToricBundle load_bundle(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw ParseError(arg, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      return parse_bundle(ss.str());
    } catch (const ParseError& e) {
      throw ParseError(arg, e.what());
    }
  }
  if (arg.find(';') != std::string::npos) return from_shifting_indices(ShiftingIndices::parse(arg));
  throw ParseError(arg, "no such bundle file");
}

}  // namespace toricvb
