#pragma once

// Bundle expression language:
//
//   expr := "F*" "(" line ")" "(" int ")"  |  line
//   line := "O" "(" int ")"  |  "omega" "^" int [ "(" int ")" ]
//   int  := [ "+" | "-" ] digit { digit }
//
// Whitespace between tokens is ignored. `O(n)` and the outer "(a)" are in
// the current polarization's units; `omega^k` is O_old(k (d - 4)).

#include "frobcoh/bigint.hpp"
#include "frobcoh/cohomology.hpp"
#include "frobcoh/frobenius.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace frobcoh {

struct LineExpr {
  enum class Kind { Structure, Canonical };
  Kind kind = Kind::Structure;
  Twist exponent = 0;            // omega^exponent; unused for Structure
  std::optional<Twist> twist;    // O(twist) or the optional omega^k(twist)

  friend bool operator==(const LineExpr&, const LineExpr&) = default;
};

struct BundleExpr {
  LineExpr line;
  std::optional<Twist> outer_twist;  // present iff the expression is F*(line)(a)

  bool is_pushforward() const noexcept { return outer_twist.has_value(); }
  friend bool operator==(const BundleExpr&, const BundleExpr&) = default;
};

/// Syntax only; throws SyntaxError with a 1-based position.
BundleExpr parse_bundle_syntax(std::string_view text);

/// Canonical text; parse_bundle_syntax(print_bundle(e)) == e.
std::string print_bundle(const BundleExpr& expr);

/// A parsed expression resolved against a model: the line bundle O_old(j)
/// and, for pushforwards, the outer twist a in new units.
struct ResolvedBundle {
  BundleExpr expr;
  HypersurfaceModel model;
  Twist inner_twist = 0;
  Twist outer_twist = 0;

  bool is_pushforward() const noexcept { return expr.is_pushforward(); }
  /// The cohomology oracle behind the expression.
  TwistFamily family() const;
  FrobeniusPushforward pushforward() const;
  /// Inner twist in new units, when s divides it.
  std::optional<Twist> inner_twist_new_units() const;
};

ResolvedBundle resolve_bundle(const BundleExpr& expr, const HypersurfaceModel& model);

/// Parse and resolve in one step.
ResolvedBundle parse_bundle(std::string_view text, const HypersurfaceModel& model);

/// Polarization scale from "INT" or "omega^INT" (O_new(1) = omega^r). Throws
/// RepresentabilityError when omega^r is not a positive old twist.
std::int64_t parse_polarization(std::string_view text, std::int64_t degree);

}  // namespace frobcoh
