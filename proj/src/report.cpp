#include "frobcoh/report.hpp"

#include <cstdint>
#include <sstream>

namespace frobcoh {

Json dim_to_json(const BigInt& dim) {
  if (dim >= 0 && dim <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(dim));
  }
  return Json(dim.str());
}

Json to_json(const Witness& w) {
  return Json{{"i", w.i}, {"m", w.m}, {"k", w.k}, {"dim", dim_to_json(w.dim)}};
}

Json to_json(const TwistInterval& window) {
  if (window.empty) return nullptr;
  return Json::array({window.lo ? Json(*window.lo) : Json(nullptr), window.hi ? Json(*window.hi) : Json(nullptr)});
}

Json to_json(const VanishingReport& report) {
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(to_json(w));
  return Json{
      {"condition", condition_name(report.condition)},
      {"holds", report.holds},
      {"checked_window", to_json(report.checked_window)},
      {"escape_certificate", certificate_name(report.escape_certificate)},
      {"witnesses", std::move(witnesses)},
      {"crosscheck", Json{{"window", Json::array({-report.crosscheck_window, report.crosscheck_window})},
                          {"agrees", report.crosscheck_agrees}}},
  };
}

Json classification_flags(const Classification& c) {
  return Json{{"acm", c.acm}, {"almost_ulrich", c.almost_ulrich}, {"ulrich", c.ulrich}};
}

Json to_json(const TheoremInstance& inst) {
  Json hypotheses = Json::object();
  for (const auto& [name, value] : inst.hypothesis_results) hypotheses[name] = value;

  Json witnesses = Json::array();
  for (const VanishingReport& r : inst.classification.reports) {
    if (r.condition == Condition::U1 || r.condition == Condition::U2) continue;
    for (const Witness& w : r.witnesses) {
      Json row{{"condition", condition_name(r.condition)}};
      row.update(to_json(w));
      witnesses.push_back(std::move(row));
    }
  }

  const auto optional_bool = [](const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{
      {"theorem", theorem_name(inst.theorem_id)},
      {"d", inst.params.d},
      {"p", inst.params.p},
      {"r", inst.params.r},
      {"s", inst.params.s},
      {"status", status_name(inst.status)},
      {"bundle", inst.bundle},
      {"hypotheses", std::move(hypotheses)},
      {"hypotheses_hold", inst.hypotheses_hold()},
      {"expected", inst.conclusion_expected},
      {"observed", inst.conclusion_observed},
      {"discrepancy", inst.discrepancy()},
      {"predicate_matches", optional_bool(inst.predicate_matches)},
      {"sharpness_witness", inst.sharpness_witness ? to_json(*inst.sharpness_witness) : Json(nullptr)},
      {"error_reproduced", optional_bool(inst.error_reproduced)},
      {"classification", classification_flags(inst.classification)},
      {"crosscheck_agrees", inst.classification.crosscheck_agrees()},
      {"witnesses", std::move(witnesses)},
  };
}

Json make_report(const std::string& command, Json params, Json rows, Json summary,
                 std::optional<long long> timing_ms) {
  return Json{
      {"schema_version", kSchemaVersion},
      {"command", command},
      {"params", std::move(params)},
      {"rows", std::move(rows)},
      {"summary", std::move(summary)},
      {"timing_ms", timing_ms ? Json(*timing_ms) : Json(nullptr)},
  };
}

std::string cell_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_csv(const Json& rows, const std::vector<Column>& columns) {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_escape(columns[c].header);
  os << '\n';
  for (const Json& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "") << csv_escape(cell_text(row.value(columns[c].json_key, Json(nullptr))));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_markdown(const Json& rows, const std::vector<Column>& columns) {
  std::ostringstream os;
  os << '|';
  for (const Column& col : columns) os << ' ' << md_escape(col.header) << " |";
  os << "\n|";
  for (std::size_t c = 0; c < columns.size(); ++c) os << "---|";
  os << '\n';
  for (const Json& row : rows) {
    os << '|';
    for (const Column& col : columns) {
      os << ' ' << md_escape(cell_text(row.value(col.json_key, Json(nullptr)))) << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Column> report_columns() {
  return {{"condition", "condition"},
          {"holds", "holds"},
          {"checked_window", "checked_window"},
          {"escape_certificate", "escape_certificate"},
          {"witnesses", "witnesses"},
          {"crosscheck", "crosscheck"}};
}

std::vector<Column> instance_columns() {
  return {{"theorem", "theorem"},   {"d", "d"},
          {"p", "p"},               {"r", "r"},
          {"s", "s"},               {"status", "status"},
          {"bundle", "bundle"},     {"hypotheses", "hypotheses"},
          {"expected", "expected"}, {"observed", "observed"},
          {"discrepancy", "discrepancy"}, {"predicate_matches", "predicate_matches"},
          {"witnesses", "witnesses"}};
}

std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path) {
  std::vector<std::string> out;
  if (expected.is_object() && actual.is_object()) {
    for (const auto& [key, value] : expected.items()) {
      const std::string sub = path + "." + key;
      if (!actual.contains(key)) {
        out.push_back(sub + ": expected " + value.dump() + ", got <missing>");
        continue;
      }
      auto nested = json_diff(value, actual.at(key), sub);
      out.insert(out.end(), nested.begin(), nested.end());
    }
    return out;
  }
  if (expected.is_array() && actual.is_array()) {
    if (expected.size() != actual.size()) {
      out.push_back(path + ": expected " + std::to_string(expected.size()) + " elements, got " +
                    std::to_string(actual.size()));
    }
    const std::size_t n = std::min(expected.size(), actual.size());
    for (std::size_t t = 0; t < n; ++t) {
      auto nested = json_diff(expected[t], actual[t], path + "[" + std::to_string(t) + "]");
      out.insert(out.end(), nested.begin(), nested.end());
    }
    return out;
  }
  if (expected != actual) out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
  return out;
}

}  // namespace frobcoh
