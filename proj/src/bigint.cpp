#include "frobcoh/bigint.hpp"

#include "frobcoh/errors.hpp"

namespace frobcoh {

Twist checked_add(Twist a, Twist b) {
  Twist out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw TwistOverflow("twist arithmetic overflows 64 bits");
  return out;
}

Twist checked_mul(Twist a, Twist b) {
  Twist out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw TwistOverflow("twist arithmetic overflows 64 bits");
  return out;
}

Twist floor_div(Twist a, Twist b) {
  if (b <= 0) throw InvalidArgument("floor_div: divisor must be positive");
  Twist q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Twist ceil_div(Twist a, Twist b) {
  if (b <= 0) throw InvalidArgument("ceil_div: divisor must be positive");
  Twist q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < k || n < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned t = 0; t < k; ++t) {
    num *= n - t;
    den *= t + 1;
  }
  return num / den;
}

}  // namespace frobcoh
