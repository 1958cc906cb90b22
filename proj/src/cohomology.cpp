#include "frobcoh/cohomology.hpp"

#include "frobcoh/errors.hpp"

#include <array>
#include <string>

namespace frobcoh {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void check_degree_index(int i, int max_i) {
  if (i < 0 || i > max_i) {
    throw InvalidArgument("cohomological degree " + std::to_string(i) + " outside 0.." +
                          std::to_string(max_i));
  }
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all n < 2^64.
bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const u64 un = static_cast<u64>(n);
  for (u64 b : bases) {
    if (un == b) return true;
    if (un % b == 0) return false;
  }
  u64 d = un - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : bases) {
    u64 x = pow_mod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int t = 1; t < r; ++t) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

HypersurfaceModel::HypersurfaceModel(std::int64_t degree, std::int64_t characteristic,
                                     std::int64_t polarization_scale)
    : degree_(degree), characteristic_(characteristic), scale_(polarization_scale) {
  if (degree < 1) throw InvalidArgument("degree must be >= 1, got " + std::to_string(degree));
  if (!is_prime(characteristic)) {
    throw InvalidArgument("characteristic must be prime, got " + std::to_string(characteristic));
  }
  if (polarization_scale < 1) {
    throw InvalidArgument("polarization scale must be >= 1, got " +
                          std::to_string(polarization_scale));
  }
}

Twist HypersurfaceModel::to_old_units(Twist m) const { return checked_mul(m, scale_); }

Twist HypersurfaceModel::to_new_units(Twist k) const {
  if (k % scale_ != 0) {
    throw RepresentabilityError("O_old(" + std::to_string(k) + ") is not an integral twist of O_new(1) = O_old(" +
                                std::to_string(scale_) + ")");
  }
  return k / scale_;
}

BigInt ambient_h(int i, Twist k) {
  check_degree_index(i, 3);
  switch (i) {
    case 0:
      return k >= 0 ? binomial(BigInt(k) + 3, 3) : BigInt(0);
    case 3:
      return k <= -4 ? binomial(-BigInt(k) - 1, 3) : BigInt(0);
    default:
      return 0;
  }
}

BigInt h(const HypersurfaceModel& model, int i, Twist k) {
  check_degree_index(i, 2);
  const Twist shifted = checked_add(k, -model.degree());
  switch (i) {
    case 0:
      return ambient_h(0, k) - ambient_h(0, shifted);
    case 2:
      return ambient_h(3, shifted) - ambient_h(3, k);
    default:
      return 0;
  }
}

Twist serre_dual_twist(const HypersurfaceModel& model, Twist k) {
  return checked_add(model.canonical_twist(), -k);
}

BigInt euler_char(const HypersurfaceModel& model, Twist k) {
  const BigInt d = model.degree();
  const BigInt chi_structure = 1 + binomial(d - 1, 3);
  const BigInt kk = k;
  return chi_structure + d * kk * (kk - d + 4) / 2;
}

HypersurfaceModel repolarize(const HypersurfaceModel& model, std::int64_t s) {
  if (s < 1) throw InvalidArgument("polarization scale must be >= 1, got " + std::to_string(s));
  return HypersurfaceModel(model.degree(), model.characteristic(),
                           checked_mul(model.polarization_scale(), s));
}

Twist canonical_twist_new_units(const HypersurfaceModel& model) {
  return model.to_new_units(model.canonical_twist());
}

CohomologyTable::CohomologyTable(const HypersurfaceModel& model, Twist k_min, Twist k_max)
    : model_(model), k_min_(k_min), k_max_(k_max) {
  if (k_min > k_max) throw InvalidArgument("empty cohomology window");
  for (Twist k = k_min;; ++k) {
    for (int i = 0; i <= 2; ++i) entries_.emplace(std::pair{i, k}, h(model, i, k));
    if (k == k_max) break;
  }
}

const BigInt& CohomologyTable::at(int i, Twist k) const {
  auto it = entries_.find({i, k});
  if (it == entries_.end()) throw InvalidArgument("(i, k) outside the table window");
  return it->second;
}

bool CohomologyTable::euler_consistent() const {
  for (Twist k = k_min_;; ++k) {
    if (at(0, k) - at(1, k) + at(2, k) != euler_char(model_, k)) return false;
    if (k == k_max_) break;
  }
  return true;
}

}  // namespace frobcoh
