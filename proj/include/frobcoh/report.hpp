#pragma once

// Machine reports. JSON is canonical; CSV and markdown tables are flat
// projections of the JSON rows.

#include "frobcoh/bigint.hpp"
#include "frobcoh/theorems.hpp"
#include "frobcoh/ulrich.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frobcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Dimensions are numbers when they fit in 64 bits, decimal strings otherwise.
Json dim_to_json(const BigInt& dim);

Json to_json(const Witness& w);
Json to_json(const TwistInterval& window);
Json to_json(const VanishingReport& report);
Json classification_flags(const Classification& c);
Json to_json(const TheoremInstance& inst);

/// Top-level report document. `timing_ms` is null when absent.
Json make_report(const std::string& command, Json params, Json rows, Json summary,
                 std::optional<long long> timing_ms);

struct Column {
  std::string header;
  std::string json_key;
};

/// Scalar JSON renders bare; arrays and objects render as compact JSON.
std::string cell_text(const Json& value);

std::string to_csv(const Json& rows, const std::vector<Column>& columns);
std::string to_markdown(const Json& rows, const std::vector<Column>& columns);

/// Columns for rows produced by to_json(VanishingReport) / to_json(TheoremInstance).
std::vector<Column> report_columns();
std::vector<Column> instance_columns();

/// Field-level differences, one "path: expected X, got Y" entry each.
std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path = "$");

}  // namespace frobcoh
