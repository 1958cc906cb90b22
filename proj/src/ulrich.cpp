#include "frobcoh/ulrich.hpp"

#include "frobcoh/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobcoh {

namespace {

// Exhaustive witness lists are materialized; refuse absurd windows.
constexpr Twist kMaxEnumeratedTwists = 1'000'000;

EscapeCertificate certificate_for_degree(int i) {
  switch (i) {
    case 0:
      return EscapeCertificate::H0NegativeTwistEscape;
    case 1:
      return EscapeCertificate::H1IdenticallyZero;
    default:
      return EscapeCertificate::H2AboveCanonicalEscape;
  }
}

// Preimage of `band` under m -> base + step * sign * m.
TwistInterval band_preimage(const TwistFamily& family, int sign, const TwistInterval& band) {
  if (band.empty) return TwistInterval::none();
  std::optional<Twist> q_lo;
  std::optional<Twist> q_hi;
  if (band.lo) q_lo = ceil_div(checked_add(*band.lo, -family.base), family.step);
  if (band.hi) q_hi = floor_div(checked_add(*band.hi, -family.base), family.step);
  if (q_lo && q_hi && *q_lo > *q_hi) return TwistInterval::none();
  if (sign > 0) return {q_lo, q_hi, false};
  std::optional<Twist> m_lo;
  std::optional<Twist> m_hi;
  if (q_hi) m_lo = checked_mul(-1, *q_hi);
  if (q_lo) m_hi = checked_mul(-1, *q_lo);
  return {m_lo, m_hi, false};
}

TwistInterval hull(const TwistInterval& a, const TwistInterval& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  TwistInterval out;
  if (a.lo && b.lo) out.lo = std::min(*a.lo, *b.lo);
  if (a.hi && b.hi) out.hi = std::max(*a.hi, *b.hi);
  return out;
}

void enumerate(const TwistFamily& family, int i, int sign, const TwistInterval& window,
               std::vector<Witness>& out) {
  if (window.empty) return;
  if (!window.finite()) throw std::logic_error("vanishing window is unbounded");
  Twist span = 0;
  if (__builtin_sub_overflow(*window.hi, *window.lo, &span) || span >= kMaxEnumeratedTwists) {
    throw InvalidArgument("witness window too large to enumerate");
  }
  for (Twist m = *window.lo;; ++m) {
    const Twist k = family.twist_at(checked_mul(sign, m));
    BigInt dim = h(family.model, i, k);
    if (dim != 0) out.push_back({i, m, k, std::move(dim)});
    if (m == *window.hi) break;
  }
}

}  // namespace

TwistInterval TwistInterval::closed(Twist lo, Twist hi) {
  if (lo > hi) return none();
  return {lo, hi, false};
}

bool TwistInterval::contains(Twist x) const {
  if (empty) return false;
  return (!lo || *lo <= x) && (!hi || x <= *hi);
}

TwistInterval TwistInterval::intersect(const TwistInterval& other) const {
  if (empty || other.empty) return none();
  TwistInterval out;
  out.lo = lo;
  if (other.lo && (!out.lo || *other.lo > *out.lo)) out.lo = other.lo;
  out.hi = hi;
  if (other.hi && (!out.hi || *other.hi < *out.hi)) out.hi = other.hi;
  if (out.lo && out.hi && *out.lo > *out.hi) return none();
  return out;
}

TwistInterval nonzero_band(const HypersurfaceModel& model, int i) {
  switch (i) {
    case 0:
      return TwistInterval::at_least(0);
    case 1:
      return TwistInterval::none();
    case 2:
      return TwistInterval::at_most(model.canonical_twist());
    default:
      throw InvalidArgument("cohomological degree " + std::to_string(i) + " outside 0..2");
  }
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::V0:
      return "V0";
    case Condition::V1:
      return "V1";
    case Condition::V2:
      return "V2";
    case Condition::U1:
      return "U1";
    case Condition::U2:
      return "U2";
  }
  return "?";
}

ConditionSpec condition_spec(Condition c) {
  switch (c) {
    case Condition::V0:  // H^0(E(-m)) = 0, m >= 2
      return {{0}, TwistInterval::at_least(2), -1};
    case Condition::V1:  // H^1(E(m)) = 0, all m
      return {{1}, TwistInterval::all(), +1};
    case Condition::V2:  // H^2(E(-m)) = 0, m <= 1
      return {{2}, TwistInterval::at_most(1), -1};
    case Condition::U1:  // H^*(E(-1)) = 0
      return {{0, 1, 2}, TwistInterval::closed(1, 1), -1};
    case Condition::U2:  // H^*(E(-2)) = 0
      return {{0, 1, 2}, TwistInterval::closed(2, 2), -1};
  }
  throw std::logic_error("unknown condition");
}

std::string certificate_name(EscapeCertificate c) {
  switch (c) {
    case EscapeCertificate::H0NegativeTwistEscape:
      return "h0_negative_twist_escape";
    case EscapeCertificate::H2AboveCanonicalEscape:
      return "h2_above_canonical_escape";
    case EscapeCertificate::H1IdenticallyZero:
      return "h1_identically_zero";
    case EscapeCertificate::None:
      return "none";
  }
  return "none";
}

std::vector<Witness> brute_force_witnesses(const TwistFamily& family, Condition c, Twist window) {
  const ConditionSpec spec = condition_spec(c);
  const TwistInterval range = spec.m_range.intersect(TwistInterval::closed(-window, window));
  std::vector<Witness> out;
  if (range.empty) return out;
  for (int i : spec.degrees) {
    for (Twist m = *range.lo; m <= *range.hi; ++m) {
      const Twist k = checked_add(family.base, checked_mul(family.step, checked_mul(spec.twist_sign, m)));
      BigInt dim = h(family.model, i, k);
      if (dim != 0) out.push_back({i, m, k, std::move(dim)});
    }
  }
  return out;
}

VanishingReport check_condition(const TwistFamily& family, Condition c, Twist crosscheck_window) {
  if (family.step <= 0) throw InvalidArgument("twist family step must be positive");
  const ConditionSpec spec = condition_spec(c);
  VanishingReport report;
  report.condition = c;

  if (spec.m_range.finite()) {
    report.checked_window = spec.m_range;
    for (int i : spec.degrees) enumerate(family, i, spec.twist_sign, spec.m_range, report.witnesses);
  } else {
    for (int i : spec.degrees) {
      const TwistInterval band = nonzero_band(family.model, i);
      const TwistInterval window = band_preimage(family, spec.twist_sign, band).intersect(spec.m_range);
      enumerate(family, i, spec.twist_sign, window, report.witnesses);
      report.checked_window = hull(report.checked_window, window);
      report.escape_certificate = certificate_for_degree(i);
    }
  }
  report.holds = report.witnesses.empty();

  report.crosscheck_window = crosscheck_window;
  std::vector<Witness> certified_in_window;
  for (const Witness& w : report.witnesses) {
    if (-crosscheck_window <= w.m && w.m <= crosscheck_window) certified_in_window.push_back(w);
  }
  report.crosscheck_agrees = certified_in_window == brute_force_witnesses(family, c, crosscheck_window);
  return report;
}

VanishingReport check_condition(const FrobeniusPushforward& bundle, Condition c, Twist crosscheck_window) {
  return check_condition(bundle.family(), c, crosscheck_window);
}

bool Classification::crosscheck_agrees() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VanishingReport& r) { return r.crosscheck_agrees; });
}

Classification classify(const TwistFamily& family, Twist crosscheck_window) {
  Classification out;
  for (Condition c : kAllConditions) {
    out.reports[static_cast<std::size_t>(c)] = check_condition(family, c, crosscheck_window);
  }
  const auto holds = [&](Condition c) { return out.report(c).holds; };
  out.acm = holds(Condition::V1);
  out.almost_ulrich = holds(Condition::V0) && holds(Condition::V1) && holds(Condition::V2);
  out.ulrich = holds(Condition::U1) && holds(Condition::U2);
  return out;
}

Classification classify(const FrobeniusPushforward& bundle, Twist crosscheck_window) {
  return classify(bundle.family(), crosscheck_window);
}

}  // namespace frobcoh
