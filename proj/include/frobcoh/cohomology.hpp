#pragma once

// Exact line-bundle cohomology on smooth hypersurface surfaces X of degree d
// in P^3. Everything follows from the restriction sequence
//   0 -> O(k - d) -> O(k) -> O_X(k) -> 0
// and the vanishing of H^1, H^2 of line bundles on P^3.

#include "frobcoh/bigint.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace frobcoh {

bool is_prime(std::int64_t n);

/// A smooth degree-d surface in P^3 over a field of characteristic p, with
/// O_new(1) = O_old(s). Smoothness is assumed.
class HypersurfaceModel {
 public:
  HypersurfaceModel(std::int64_t degree, std::int64_t characteristic,
                    std::int64_t polarization_scale = 1);

  std::int64_t degree() const noexcept { return degree_; }
  std::int64_t characteristic() const noexcept { return characteristic_; }
  std::int64_t polarization_scale() const noexcept { return scale_; }

  /// omega_X = O_X(d - 4), in old units.
  Twist canonical_twist() const noexcept { return degree_ - 4; }

  /// Old-unit twist of O_new(m).
  Twist to_old_units(Twist m) const;
  /// New-unit twist of O_old(k); throws RepresentabilityError unless s | k.
  Twist to_new_units(Twist k) const;

  friend bool operator==(const HypersurfaceModel&, const HypersurfaceModel&) = default;

 private:
  std::int64_t degree_;
  std::int64_t characteristic_;
  std::int64_t scale_;
};

/// O_X(j) in the rank-1 Picard model, j in old units.
struct LineBundleClass {
  Twist twist = 0;

  bool ample() const noexcept { return twist > 0; }
  bool trivial() const noexcept { return twist == 0; }
  bool anti_ample() const noexcept { return twist < 0; }

  friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
};

/// dim H^i(P^3, O(k)).
BigInt ambient_h(int i, Twist k);

/// dim H^i(X, O_X(k)) for k in old units.
BigInt h(const HypersurfaceModel& model, int i, Twist k);

/// The twist k' with h^2(O_X(k)) = h^0(O_X(k')).
Twist serre_dual_twist(const HypersurfaceModel& model, Twist k);

/// chi(O_X(k)) by the closed form chi(O_X) + d k (k - d + 4) / 2.
BigInt euler_char(const HypersurfaceModel& model, Twist k);

/// Rescales the polarization relative to the current one: O_new(1) = O_cur(s).
HypersurfaceModel repolarize(const HypersurfaceModel& model, std::int64_t s);

/// omega_X in new-polarization units; throws RepresentabilityError when
/// s does not divide d - 4.
Twist canonical_twist_new_units(const HypersurfaceModel& model);

/// h^i for (i, k) over an inclusive window of twists.
class CohomologyTable {
 public:
  CohomologyTable(const HypersurfaceModel& model, Twist k_min, Twist k_max);

  const BigInt& at(int i, Twist k) const;
  std::pair<Twist, Twist> window() const noexcept { return {k_min_, k_max_}; }
  const std::map<std::pair<int, Twist>, BigInt>& entries() const noexcept { return entries_; }

  /// h^0 - h^1 + h^2 equals euler_char at every k of the window.
  bool euler_consistent() const;

 private:
  HypersurfaceModel model_;
  Twist k_min_;
  Twist k_max_;
  std::map<std::pair<int, Twist>, BigInt> entries_;
};

}  // namespace frobcoh
