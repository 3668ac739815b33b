#include "rootmaps/cache.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rootmaps/asymptotics.hpp"
#include "rootmaps/genus_series.hpp"
#include "rootmaps/recurrence.hpp"

namespace rootmaps {

namespace {

using nlohmann::json;

json integers(std::span<const Integer> values) {
  json a = json::array();
  for (const Integer& v : values) a.push_back(v.get_str());
  return a;
}

json rationals(std::span<const Rational> values) {
  json a = json::array();
  for (const Rational& v : values) a.push_back(to_string(v));
  return a;
}

std::vector<Integer> read_integers(const json& a) {
  std::vector<Integer> out;
  for (const json& v : a) out.push_back(parse_integer(v.get<std::string>()));
  return out;
}

std::vector<Rational> read_rationals(const json& a) {
  std::vector<Rational> out;
  for (const json& v : a) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

json form_to_json(const PartialFractionForm& f) {
  json poles = json::object();
  for (Root a : kRoots) {
    const int e = f.pole_order(a);
    if (e == 0) continue;
    std::vector<Rational> c;
    for (int k = 1; k <= e; ++k) c.push_back(f.coefficient(a, k));
    poles[std::to_string(root_value(a))] = rationals(c);
  }
  return json{{"polynomial", rationals(f.polynomial_part().coefficients())}, {"poles", poles}};
}

PartialFractionForm form_from_json(const json& j) {
  PartialFractionForm f(UniPoly(read_rationals(j.at("polynomial")), Var::T));
  for (const auto& [root, coeffs] : j.at("poles").items()) {
    const Root a = root_from_value(Rational(std::stoi(root)));
    const std::vector<Rational> c = read_rationals(coeffs);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) f.add_pole(a, static_cast<int>(k) + 1, c[k]);
  }
  return f;
}

}  // namespace

std::string dump_cache(const CacheState& state) {
  RecurrenceEngine& engine = state.engine;

  json q_columns = json::array();
  for (const auto& col : engine.counts().columns()) q_columns.push_back(integers(col));

  json poly_columns = json::array();
  for (const auto& col : engine.face_polys().columns()) {
    json c = json::array();
    for (const FacePolynomial& p : col) c.push_back(integers(p.coefficients()));
    poly_columns.push_back(std::move(c));
  }

  json grids = json::array();
  for (const auto& grid : engine.maps().grids()) {
    json g = json::array();
    for (const auto& row : grid) g.push_back(integers(row));
    grids.push_back(std::move(g));
  }

  json series = json::array();
  for (const GenusSeriesRecord& rec : state.series.records()) series.push_back(form_to_json(rec.form));

  const json doc{
      {"schemaVersion", kCacheSchemaVersion},
      {"tables",
       {{"Q", {{"genusCap", engine.counts().genus_cap()}, {"columns", q_columns}}},
        {"Qpoly", {{"genusCap", engine.face_polys().genus_cap()}, {"columns", poly_columns}}},
        {"M", {{"genusCap", engine.maps().genus_cap()}, {"edgeCap", engine.maps().edge_cap()}, {"grids", grids}}},
        {"R_g", series},
        {"tau", rationals(state.constants.computed())}}}};
  return doc.dump();
}

void load_cache(const std::string& text, const CacheState& state) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CacheError(std::string("cache document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schemaVersion") || doc["schemaVersion"] != kCacheSchemaVersion)
    throw CacheError("cache schema version mismatch (expected " + std::to_string(kCacheSchemaVersion) + ")");
  try {
    const json& tables = doc.at("tables");

    const json& q = tables.at("Q");
    std::vector<std::vector<Integer>> q_columns;
    for (const json& col : q.at("columns")) q_columns.push_back(read_integers(col));

    const json& qp = tables.at("Qpoly");
    std::vector<std::vector<FacePolynomial>> poly_columns;
    for (const json& col : qp.at("columns")) {
      std::vector<FacePolynomial> c;
      for (const json& p : col) c.emplace_back(read_integers(p), Var::x);
      poly_columns.push_back(std::move(c));
    }

    const json& m = tables.at("M");
    std::vector<std::vector<std::vector<Integer>>> grids;
    for (const json& grid : m.at("grids")) {
      std::vector<std::vector<Integer>> g;
      for (const json& row : grid) g.push_back(read_integers(row));
      grids.push_back(std::move(g));
    }

    std::vector<PartialFractionForm> forms;
    for (const json& f : tables.at("R_g")) forms.push_back(form_from_json(f));

    const std::vector<Rational> taus = read_rationals(tables.at("tau"));

    state.engine.counts().restore(q.at("genusCap").get<int>(), std::move(q_columns));
    state.engine.face_polys().restore(qp.at("genusCap").get<int>(), std::move(poly_columns));
    if (m.at("genusCap").get<int>() >= 0)
      state.engine.maps().restore(m.at("genusCap").get<int>(), m.at("edgeCap").get<int>(), std::move(grids));
    if (!forms.empty()) state.series.restore(forms);
    state.constants.restore(taus);
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("malformed cache document: ") + e.what());
  }
}

bool read_cache_dir(const std::filesystem::path& dir, const CacheState& state) {
  const std::filesystem::path file = dir / kCacheFileName;
  if (!std::filesystem::exists(file)) return false;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CacheError("cannot read " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  load_cache(text.str(), state);
  return true;
}

void write_cache_dir(const std::filesystem::path& dir, const CacheState& state) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path file = dir / kCacheFileName;
  const std::filesystem::path tmp = dir / (std::string(kCacheFileName) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << dump_cache(state);
    out.flush();
    if (!out) throw CacheError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace rootmaps
