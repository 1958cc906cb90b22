#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace frobcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;  // also reproduction mismatches
inline constexpr int kExitInputError = 2;

/// Runs `frobcoh <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "A..B", "A", or "A,B,C" (list items may themselves be ranges).
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace frobcoh::cli
