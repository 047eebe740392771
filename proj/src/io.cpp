#include "ranklens/io.hpp"

#include <regex>

namespace ranklens::io {

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();  // "p" or "p/q"
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, pattern))
    throw Error(ErrorCode::ParseError, "not a rational: \"" + text + "\"");
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "not a rational: \"" + text + "\"");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

int as_index(const json& v, const char* what) {
  if (!v.is_number_integer()) shape_error(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) shape_error(std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::vector<int> as_index_list(const json& v, const char* what) {
  if (!v.is_array()) shape_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : v) out.push_back(as_index(e, what));
  return out;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) shape_error(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

RationalMatrix matrix_from_json(const json& v, int n, const char* name) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw Error(ErrorCode::SizeMismatch, std::string(name) + " must have n rows");
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = v[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::SizeMismatch, std::string(name) + " must have n columns");
    for (int c = 0; c < n; ++c) {
      const auto& e = row[c];
      if (e.is_string()) m(r, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(r, c) = parse_rational(std::to_string(e.get<long long>()));
      else shape_error(std::string(name) + " entries must be rational strings");
    }
  }
  return m;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json profile_to_json(const StrategyProfile& p) { return json::array({p.row, p.col}); }

json dataset_to_json(const DataSet& dataset) {
  json obs = json::array();
  for (const auto& o : dataset.observations())
    obs.push_back({{"choice", profile_to_json(o.choice)},
                   {"rows", o.subgame.rows()},
                   {"cols", o.subgame.cols()}});
  return {{"n", dataset.n()}, {"observations", std::move(obs)}};
}

DataSet dataset_from_json(const json& doc) {
  const int n = as_index(field(doc, "n"), "n");
  const auto& list = field(doc, "observations");
  if (!list.is_array()) shape_error("observations must be an array");
  std::vector<RawObservation> raw;
  for (const auto& o : list) {
    const auto choice = as_index_list(field(o, "choice"), "choice");
    if (choice.size() != 2) shape_error("choice must be [row, col]");
    raw.push_back({{choice[0], choice[1]},
                   as_index_list(field(o, "rows"), "rows"),
                   as_index_list(field(o, "cols"), "cols")});
  }
  return validate_dataset(raw, n);
}

json game_to_json(const BimatrixGame& game) {
  return {{"n", game.n()}, {"A", matrix_to_json(game.a())}, {"B", matrix_to_json(game.b())}};
}

BimatrixGame game_from_json(const json& doc) {
  const int n = as_index(field(doc, "n"), "n");
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  return BimatrixGame(matrix_from_json(field(doc, "A"), n, "A"),
                      matrix_from_json(field(doc, "B"), n, "B"));
}

json structure_to_json(const StructureReport& report, bool rationalizable) {
  json crossing = json::array();
  for (const auto& s : report.crossing_subgames)
    crossing.push_back({{"rows", s.rows()}, {"cols", s.cols()}});
  return {{"laminar", report.laminar},
          {"uniqueness", report.uniqueness},
          {"crossing_span", report.crossing_span},
          {"row_span", report.row_span},
          {"col_span", report.col_span},
          {"crossing_subgames", std::move(crossing)},
          {"rationalizable", rationalizable}};
}

json certificate_to_json(const RationalizationCertificate& cert) {
  json doc = game_to_json(cert.game);
  doc["method"] = std::string(to_string(cert.method));
  doc["rank"] = cert.rank;
  doc["rank_bound"] = cert.rank_bound ? json(*cert.rank_bound) : json(nullptr);
  doc["uniqueness_guarantee"] = cert.uniqueness_guarantee;
  doc["verified"] = cert.per_observation.rationalizes();
  return doc;
}

json verification_to_json(const VerificationReport& report, std::size_t rank) {
  json failures = json::array();
  for (const auto& f : report.failures()) {
    json violations = json::array();
    for (const auto& v : f.violations) violations.push_back(to_string(v, f.observation.choice));
    failures.push_back({{"choice", profile_to_json(f.observation.choice)},
                        {"rows", f.observation.subgame.rows()},
                        {"cols", f.observation.subgame.cols()},
                        {"violations", std::move(violations)}});
  }
  return {{"rationalizes", report.rationalizes()}, {"rank", rank}, {"failures", std::move(failures)}};
}

std::string canonical(const json& doc) { return doc.dump() + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace ranklens::io
