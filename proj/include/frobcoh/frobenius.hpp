#pragma once

// Twisted Frobenius pushforwards E = F_*(O_X(j))(a). They are never built as
// sheaves: the absolute Frobenius of a surface is finite flat of degree p^2,
// so H^i(F_* V) = H^i(V), and the projection formula with F^* O(1) = O(p)
// turns every twist of E into a single line-bundle query.

#include "frobcoh/bigint.hpp"
#include "frobcoh/cohomology.hpp"

#include <string>
#include <vector>

namespace frobcoh {

/// Any object whose m-th twist has H^i equal to h^i(O_X(base + step * m)),
/// m in new-polarization units, k in old units.
struct TwistFamily {
  HypersurfaceModel model;
  Twist base = 0;
  Twist step = 1;

  Twist twist_at(Twist m) const { return checked_add(base, checked_mul(step, m)); }
  BigInt h(int i, Twist m) const { return frobcoh::h(model, i, twist_at(m)); }
};

class FrobeniusPushforward {
 public:
  /// inner_twist in old units, outer_twist in new-polarization units.
  FrobeniusPushforward(const HypersurfaceModel& model, Twist inner_twist, Twist outer_twist);

  const HypersurfaceModel& model() const noexcept { return model_; }
  Twist inner_twist() const noexcept { return inner_; }
  Twist outer_twist() const noexcept { return outer_; }

  /// p^2, independent of all twists.
  BigInt rank() const;

  /// Multiplier p * s taking new-unit twists of E to old-unit twists of the
  /// line bundle.
  Twist pullback_step() const;

  TwistFamily family() const;

  /// Canonical text form, inner twist in old units: "F*(O(j))(a)".
  std::string to_string() const;

 private:
  HypersurfaceModel model_;
  Twist inner_;
  Twist outer_;
};

FrobeniusPushforward make_pushforward(const HypersurfaceModel& model, Twist j, Twist a);

/// A line bundle O_X(j) viewed through the same twist-family interface
/// (step s instead of p s).
TwistFamily line_bundle_family(const HypersurfaceModel& model, Twist j);

enum class RewriteRule {
  ProjectionFormula,     // F_*(L)(n) = F_*(L (x) F^* O(n))
  FrobeniusPullback,     // F^* O(n) = O(p n)
  PushforwardCohomology  // H^i(F_* V) = H^i(V)
};

std::string rule_name(RewriteRule rule);

struct RewriteStep {
  RewriteRule rule;
  std::string before;
  std::string after;
};

struct CohomologyQuery {
  int i = 0;
  Twist twist = 0;
};

/// How H^i(E(m)) was rewritten as h^i(O_X(k)).
struct ReductionCertificate {
  CohomologyQuery source;  // (i, m) on E
  CohomologyQuery target;  // (i, k) on a line bundle, old units
  std::vector<RewriteStep> rule_trace;
};

ReductionCertificate reduce(const FrobeniusPushforward& bundle, int i, Twist m);

/// dim H^i(X, E(m)).
BigInt pushforward_h(const FrobeniusPushforward& bundle, int i, Twist m);

/// chi(E(m)) = chi(O_X(j + p s (a + m))).
BigInt pushforward_euler_char(const FrobeniusPushforward& bundle, Twist m);

}  // namespace frobcoh
