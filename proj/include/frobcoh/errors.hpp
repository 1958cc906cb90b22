#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcoh {

/// Argument outside an operation's domain (non-prime characteristic, i out of
/// range, non-positive polarization scale, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A twist that is not an integral multiple of the current polarization.
class RepresentabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Twist arithmetic left the 64-bit range.
class TwistOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Malformed bundle expression. `position` is 1-based; end of input is
/// reported as size() + 1.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace frobcoh
