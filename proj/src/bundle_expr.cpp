#include "frobcoh/bundle_expr.hpp"

#include "frobcoh/errors.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace frobcoh {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BundleExpr parse_expr() {
    skip_ws();
    BundleExpr out;
    if (lookahead("F*")) {
      pos_ += 2;
      expect("(");
      out.line = parse_line();
      expect(")");
      expect("(");
      out.outer_twist = parse_int();
      expect(")");
    } else if (lookahead("O") || lookahead("omega")) {
      out.line = parse_line();
    } else {
      fail({"F*", "O", "omega"});
    }
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
    return out;
  }

 private:
  LineExpr parse_line() {
    skip_ws();
    LineExpr line;
    if (lookahead("omega")) {
      pos_ += 5;
      line.kind = LineExpr::Kind::Canonical;
      expect("^");
      line.exponent = parse_int();
      skip_ws();
      if (lookahead("(")) {
        ++pos_;
        line.twist = parse_int();
        expect(")");
      }
      return line;
    }
    if (lookahead("O")) {
      ++pos_;
      line.kind = LineExpr::Kind::Structure;
      expect("(");
      line.twist = parse_int();
      expect(")");
      return line;
    }
    fail({"O", "omega"});
  }

  Twist parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail({"integer"});
    }
    std::string literal = negative ? "-" : "";
    literal.append(text_.substr(digits, pos_ - digits));
    Twist value = 0;
    auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (ec != std::errc{} || ptr != literal.data() + literal.size()) {
      throw SyntaxError(start + 1, {"integer within 64-bit range"}, "\"" + literal + "\"");
    }
    return value;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (!lookahead(token)) fail({std::string(token)});
    pos_ += token.size();
  }

  bool lookahead(std::string_view token) const { return text_.substr(pos_, token.size()) == token; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ >= text_.size() ? "end of input" : "\"" + std::string(1, text_[pos_]) + "\"";
    throw SyntaxError(pos_ + 1, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_line(const LineExpr& line) {
  if (line.kind == LineExpr::Kind::Structure) return "O(" + std::to_string(line.twist.value_or(0)) + ")";
  std::string out = "omega^" + std::to_string(line.exponent);
  if (line.twist) out += "(" + std::to_string(*line.twist) + ")";
  return out;
}

}  // namespace

BundleExpr parse_bundle_syntax(std::string_view text) { return Parser(text).parse_expr(); }

std::string print_bundle(const BundleExpr& expr) {
  if (!expr.is_pushforward()) return print_line(expr.line);
  return "F*(" + print_line(expr.line) + ")(" + std::to_string(*expr.outer_twist) + ")";
}

TwistFamily ResolvedBundle::family() const {
  if (is_pushforward()) return pushforward().family();
  return line_bundle_family(model, inner_twist);
}

FrobeniusPushforward ResolvedBundle::pushforward() const {
  if (!is_pushforward()) throw InvalidArgument("expression " + print_bundle(expr) + " is not a pushforward");
  return make_pushforward(model, inner_twist, outer_twist);
}

std::optional<Twist> ResolvedBundle::inner_twist_new_units() const {
  try {
    return model.to_new_units(inner_twist);
  } catch (const RepresentabilityError&) {
    return std::nullopt;
  }
}

ResolvedBundle resolve_bundle(const BundleExpr& expr, const HypersurfaceModel& model) {
  ResolvedBundle out{expr, model, 0, expr.outer_twist.value_or(0)};
  const LineExpr& line = expr.line;
  if (line.kind == LineExpr::Kind::Canonical) out.inner_twist = checked_mul(line.exponent, model.canonical_twist());
  if (line.twist) out.inner_twist = checked_add(out.inner_twist, model.to_old_units(*line.twist));
  return out;
}

ResolvedBundle parse_bundle(std::string_view text, const HypersurfaceModel& model) {
  return resolve_bundle(parse_bundle_syntax(text), model);
}

std::int64_t parse_polarization(std::string_view text, std::int64_t degree) {
  std::string_view rest = text;
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  const bool canonical = rest.substr(0, 6) == "omega^";
  if (canonical) rest.remove_prefix(6);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw InvalidArgument("polarization must be INT or omega^INT, got \"" + std::string(text) + "\"");
  }
  if (!canonical) {
    if (value < 1) throw InvalidArgument("polarization scale must be >= 1, got " + std::to_string(value));
    return value;
  }
  const Twist scale = checked_mul(value, degree - 4);
  if (scale < 1) {
    throw RepresentabilityError("omega^" + std::to_string(value) + " = O_old(" + std::to_string(scale) +
                                ") is not a positive multiple of O_old(1) on a degree-" +
                                std::to_string(degree) + " surface");
  }
  return scale;
}

}  // namespace frobcoh
