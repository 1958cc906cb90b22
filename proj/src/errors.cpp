#include "frobcoh/errors.hpp"

#include <sstream>
#include <utility>

namespace frobcoh {

namespace {

std::string describe(std::size_t position, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::ostringstream os;
  os << "syntax error at position " << position << ": expected ";
  for (std::size_t t = 0; t < expected.size(); ++t) {
    if (t > 0) os << (t + 1 == expected.size() ? " or " : ", ");
    os << '"' << expected[t] << '"';
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error(describe(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace frobcoh
