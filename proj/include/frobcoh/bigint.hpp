#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace frobcoh {

/// Cohomology dimensions grow like k^3 and are kept exact.
using BigInt = boost::multiprecision::cpp_int;

/// Twist integers. All twist arithmetic goes through the checked helpers.
using Twist = std::int64_t;

Twist checked_add(Twist a, Twist b);
Twist checked_mul(Twist a, Twist b);

/// Floor and ceiling of a / b for b > 0.
Twist floor_div(Twist a, Twist b);
Twist ceil_div(Twist a, Twist b);

/// Exact binomial C(n, k) with the convention C(n, k) = 0 unless 0 <= k <= n.
BigInt binomial(const BigInt& n, unsigned k);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace frobcoh
