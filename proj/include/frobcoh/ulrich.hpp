#pragma once

// Vanishing conditions over infinite ranges of twists, decided exactly.
//
// On a hypersurface model the nonzero set of h^i(O_X(k)) is an explicit band
// of k, and the twists of a family move monotonically with m. So each
// condition reduces to a finite interval of m (the band preimage), which is
// enumerated; outside it the reduced twist has escaped the band and the
// recorded certificate says why.

#include "frobcoh/bigint.hpp"
#include "frobcoh/cohomology.hpp"
#include "frobcoh/frobenius.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace frobcoh {

/// Inclusive interval with optional infinite ends; `empty` overrides both.
struct TwistInterval {
  std::optional<Twist> lo;
  std::optional<Twist> hi;
  bool empty = false;

  static TwistInterval none() { return {std::nullopt, std::nullopt, true}; }
  static TwistInterval closed(Twist lo, Twist hi);
  static TwistInterval at_least(Twist lo) { return {lo, std::nullopt, false}; }
  static TwistInterval at_most(Twist hi) { return {std::nullopt, hi, false}; }
  static TwistInterval all() { return {}; }

  bool contains(Twist x) const;
  bool finite() const { return empty || (lo && hi); }
  TwistInterval intersect(const TwistInterval& other) const;

  friend bool operator==(const TwistInterval&, const TwistInterval&) = default;
};

/// Twists k where h^i(O_X(k)) != 0. Exact on this model: k >= 0 for h^0,
/// nothing for h^1, k <= d - 4 for h^2.
TwistInterval nonzero_band(const HypersurfaceModel& model, int i);

enum class Condition { V0, V1, V2, U1, U2 };
inline constexpr std::array<Condition, 5> kAllConditions{Condition::V0, Condition::V1, Condition::V2,
                                                         Condition::U1, Condition::U2};
std::string condition_name(Condition c);

/// The quantifier of a condition: which H^i, the m-range, and whether the
/// twist applied to E is +m or -m.
struct ConditionSpec {
  std::vector<int> degrees;
  TwistInterval m_range;
  int twist_sign = -1;
};
ConditionSpec condition_spec(Condition c);

enum class EscapeCertificate { H0NegativeTwistEscape, H2AboveCanonicalEscape, H1IdenticallyZero, None };
std::string certificate_name(EscapeCertificate c);

struct Witness {
  int i = 0;
  Twist m = 0;
  Twist k = 0;
  BigInt dim;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VanishingReport {
  Condition condition = Condition::V0;
  bool holds = true;
  TwistInterval checked_window = TwistInterval::none();
  EscapeCertificate escape_certificate = EscapeCertificate::None;
  std::vector<Witness> witnesses;  // ordered by (i, m)
  /// Brute-force re-enumeration of m in [-w, w] through the twist family.
  Twist crosscheck_window = 0;
  bool crosscheck_agrees = true;
};

inline constexpr Twist kDefaultCrosscheckWindow = 12;

/// Decides `c` for the family; witnesses are every nonzero dimension in range.
VanishingReport check_condition(const TwistFamily& family, Condition c,
                                Twist crosscheck_window = kDefaultCrosscheckWindow);
VanishingReport check_condition(const FrobeniusPushforward& bundle, Condition c,
                                Twist crosscheck_window = kDefaultCrosscheckWindow);

/// Witnesses of `c` restricted to m in [-window, window], by direct
/// enumeration of h^i with no band reasoning.
std::vector<Witness> brute_force_witnesses(const TwistFamily& family, Condition c, Twist window);

struct Classification {
  bool acm = false;
  bool almost_ulrich = false;  // V0 and V1 and V2
  bool ulrich = false;         // U1 and U2: h^*(E(-1)) = h^*(E(-2)) = 0
  std::array<VanishingReport, 5> reports;

  const VanishingReport& report(Condition c) const { return reports[static_cast<std::size_t>(c)]; }
  bool crosscheck_agrees() const;
};

Classification classify(const TwistFamily& family, Twist crosscheck_window = kDefaultCrosscheckWindow);
Classification classify(const FrobeniusPushforward& bundle,
                        Twist crosscheck_window = kDefaultCrosscheckWindow);

}  // namespace frobcoh
