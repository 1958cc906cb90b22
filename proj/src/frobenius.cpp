#include "frobcoh/frobenius.hpp"

#include "frobcoh/errors.hpp"

#include <sstream>

namespace frobcoh {

namespace {

std::string line(Twist k) { return "O(" + std::to_string(k) + ")"; }

void check_index(int i) {
  if (i < 0 || i > 2) throw InvalidArgument("cohomological degree " + std::to_string(i) + " outside 0..2");
}

}  // namespace

FrobeniusPushforward::FrobeniusPushforward(const HypersurfaceModel& model, Twist inner_twist,
                                           Twist outer_twist)
    : model_(model), inner_(inner_twist), outer_(outer_twist) {}

BigInt FrobeniusPushforward::rank() const {
  const BigInt p = model_.characteristic();
  return p * p;
}

Twist FrobeniusPushforward::pullback_step() const {
  return checked_mul(model_.characteristic(), model_.polarization_scale());
}

TwistFamily FrobeniusPushforward::family() const {
  const Twist step = pullback_step();
  return TwistFamily{model_, checked_add(inner_, checked_mul(step, outer_)), step};
}

std::string FrobeniusPushforward::to_string() const {
  return "F*(" + line(inner_) + ")(" + std::to_string(outer_) + ")";
}

FrobeniusPushforward make_pushforward(const HypersurfaceModel& model, Twist j, Twist a) {
  return FrobeniusPushforward(model, j, a);
}

TwistFamily line_bundle_family(const HypersurfaceModel& model, Twist j) {
  return TwistFamily{model, j, model.polarization_scale()};
}

std::string rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::ProjectionFormula:
      return "projection_formula";
    case RewriteRule::FrobeniusPullback:
      return "frobenius_pullback_power";
    case RewriteRule::PushforwardCohomology:
      return "pushforward_cohomology";
  }
  return "unknown";
}

ReductionCertificate reduce(const FrobeniusPushforward& bundle, int i, Twist m) {
  check_index(i);
  const HypersurfaceModel& model = bundle.model();
  const Twist p = model.characteristic();
  const Twist total_new = checked_add(bundle.outer_twist(), m);
  const Twist total_old = model.to_old_units(total_new);
  const Twist pulled = checked_mul(p, total_old);
  const Twist k = checked_add(bundle.inner_twist(), pulled);

  const std::string j_text = line(bundle.inner_twist());
  const std::string hi = "H^" + std::to_string(i);

  ReductionCertificate cert;
  cert.source = {i, m};
  cert.target = {i, k};
  cert.rule_trace = {
      {RewriteRule::ProjectionFormula,
       hi + "(F*(" + j_text + ")(" + std::to_string(total_new) + "))",
       hi + "(F*(" + j_text + " (x) F^*" + line(total_old) + "))"},
      {RewriteRule::FrobeniusPullback, "F^*" + line(total_old), line(pulled)},
      {RewriteRule::PushforwardCohomology, hi + "(F*(" + line(k) + "))", hi + "(" + line(k) + ")"},
  };
  return cert;
}

BigInt pushforward_h(const FrobeniusPushforward& bundle, int i, Twist m) {
  return h(bundle.model(), i, reduce(bundle, i, m).target.twist);
}

BigInt pushforward_euler_char(const FrobeniusPushforward& bundle, Twist m) {
  return euler_char(bundle.model(), reduce(bundle, 0, m).target.twist);
}

}  // namespace frobcoh
