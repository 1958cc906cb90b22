#include "frobcoh/cli.hpp"

#include "frobcoh/bundle_expr.hpp"
#include "frobcoh/errors.hpp"
#include "frobcoh/golden.hpp"
#include "frobcoh/report.hpp"
#include "frobcoh/theorems.hpp"
#include "frobcoh/ulrich.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace frobcoh::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct OutputOptions {
  std::string format;
  std::string out_path;
  bool no_timing = false;
};

std::optional<long long> elapsed_ms(const OutputOptions& opts, Clock::time_point start) {
  if (opts.no_timing) return std::nullopt;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Writes to --out when given, stdout otherwise.
int emit(const OutputOptions& opts, const std::string& text, std::ostream& out, std::ostream& err) {
  if (opts.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << opts.out_path << " for writing\n";
    return kExitInputError;
  }
  file << text;
  out << "wrote " << opts.out_path << '\n';
  return kExitOk;
}

std::string render(const OutputOptions& opts, const Json& report, const std::vector<Column>& columns,
                   const std::function<std::string()>& human) {
  if (opts.format == "json") return report.dump(2) + "\n";
  if (opts.format == "csv") return to_csv(report.at("rows"), columns);
  if (opts.format == "md") return to_markdown(report.at("rows"), columns);
  return human();
}

std::string witness_text(const Witness& w) {
  std::ostringstream os;
  os << "(i=" << w.i << ", m=" << w.m << ", k=" << w.k << ", dim=" << w.dim << ")";
  return os.str();
}

std::string window_text(const TwistInterval& w) {
  if (w.empty) return "empty";
  const auto end = [](const std::optional<Twist>& v, const char* inf) {
    return v ? std::to_string(*v) : std::string(inf);
  };
  return "[" + end(w.lo, "-inf") + ", " + end(w.hi, "+inf") + "]";
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::int64_t degree = 0;
  std::int64_t characteristic = 0;
  std::string polarization = "1";
  std::string bundle;
  std::int64_t window = kDefaultCrosscheckWindow;
  OutputOptions output{"human", "", false};
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (opts.window < 0) throw InvalidArgument("--window must be >= 0");
  const HypersurfaceModel model(opts.degree, opts.characteristic,
                                parse_polarization(opts.polarization, opts.degree));
  const ResolvedBundle bundle = parse_bundle(opts.bundle, model);
  const Classification c = classify(bundle.family(), opts.window);

  Json rows = Json::array();
  int passes = 0;
  int failures = 0;
  int discrepancies = 0;
  for (const VanishingReport& r : c.reports) {
    rows.push_back(to_json(r));
    (r.holds ? passes : failures)++;
    if (!r.crosscheck_agrees) ++discrepancies;
  }
  const BigInt rank = bundle.is_pushforward() ? bundle.pushforward().rank() : BigInt(1);
  const auto new_units = bundle.inner_twist_new_units();

  Json report = make_report(
      "check",
      Json{{"degree", model.degree()},
           {"char", model.characteristic()},
           {"polarization", model.polarization_scale()},
           {"window", opts.window}},
      std::move(rows),
      Json{{"discrepancies", discrepancies}, {"passes", passes}, {"failures", failures}},
      elapsed_ms(opts.output, start));
  report["expression"] = print_bundle(bundle.expr);
  report["resolved"] = Json{{"kind", bundle.is_pushforward() ? "pushforward" : "line_bundle"},
                            {"inner_twist_old", bundle.inner_twist},
                            {"inner_twist_new", new_units ? Json(*new_units) : Json(nullptr)},
                            {"outer_twist", bundle.outer_twist},
                            {"rank", dim_to_json(rank)}};
  report["classification"] = classification_flags(c);

  const auto human = [&] {
    std::ostringstream os;
    os << "bundle: " << print_bundle(bundle.expr);
    if (bundle.is_pushforward()) os << " = " << bundle.pushforward().to_string();
    os << "  (d=" << model.degree() << ", p=" << model.characteristic()
       << ", s=" << model.polarization_scale() << ", rank " << rank << ")\n";
    os << "acm: " << std::boolalpha << c.acm << '\n';
    os << "almost_ulrich: " << c.almost_ulrich << '\n';
    os << "ulrich: " << c.ulrich << "  (convention: h^*(E(-1)) = h^*(E(-2)) = 0)\n";
    for (const VanishingReport& r : c.reports) {
      os << condition_name(r.condition) << (r.holds ? " holds" : " FAILS") << "  window=" << window_text(r.checked_window)
         << "  certificate=" << certificate_name(r.escape_certificate)
         << "  crosscheck[" << -r.crosscheck_window << "," << r.crosscheck_window << "]="
         << (r.crosscheck_agrees ? "agrees" : "DISAGREES") << '\n';
      for (const Witness& w : r.witnesses) os << "    witness " << witness_text(w) << '\n';
    }
    return os.str();
  };

  const int rc = emit(opts.output, render(opts.output, report, report_columns(), human), out, err);
  if (rc != kExitOk) return rc;
  return discrepancies > 0 ? kExitDiscrepancy : kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string degrees;
  std::string chars;
  std::string twists;
  std::string mode = "unit";
  std::string polarizations = "1";
  unsigned threads = 0;
  OutputOptions output{"json", "", false};
};

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  SweepGrid grid;
  grid.degrees = parse_int_list(opts.degrees);
  grid.chars = parse_int_list(opts.chars);
  grid.twists = parse_int_list(opts.twists);
  grid.polarizations = parse_int_list(opts.polarizations);
  const PolarizationMode mode =
      opts.mode == "pluricanonical" ? PolarizationMode::Pluricanonical : PolarizationMode::Unit;
  const std::vector<TheoremInstance> instances = run_sweep(grid, mode, opts.threads);

  Json rows = Json::array();
  int discrepancies = 0;
  int passes = 0;
  int failures = 0;
  int hypothesis_free = 0;
  int crosscheck_disagreements = 0;
  for (const TheoremInstance& inst : instances) {
    rows.push_back(to_json(inst));
    if (inst.discrepancy()) ++discrepancies;
    (inst.conclusion_observed ? passes : failures)++;
    if (inst.conclusion_observed && !inst.conclusion_expected) ++hypothesis_free;
    if (!inst.classification.crosscheck_agrees()) ++crosscheck_disagreements;
  }
  const auto to_json_list = [](const std::vector<std::int64_t>& v) { return Json(v); };
  Json params{{"degrees", to_json_list(grid.degrees)},
              {"chars", to_json_list(grid.chars)},
              {"r", to_json_list(grid.twists)},
              {"polarization_mode", opts.mode}};
  if (mode == PolarizationMode::Unit) params["polarizations"] = to_json_list(grid.polarizations);
  const Json summary{{"discrepancies", discrepancies},
                     {"passes", passes},
                     {"failures", failures},
                     {"hypothesis_free_passes", hypothesis_free},
                     {"crosscheck_disagreements", crosscheck_disagreements},
                     {"rows", instances.size()}};
  const Json report = make_report("sweep", std::move(params), std::move(rows), summary,
                                  elapsed_ms(opts.output, start));

  const auto human = [&] {
    std::ostringstream os;
    os << std::boolalpha;
    for (const TheoremInstance& inst : instances) {
      os << theorem_name(inst.theorem_id) << " d=" << inst.params.d << " p=" << inst.params.p
         << " r=" << inst.params.r << " s=" << inst.params.s << "  " << inst.bundle
         << "  expected=" << inst.conclusion_expected << " observed=" << inst.conclusion_observed;
      if (inst.status != InstanceStatus::Ok) os << "  [" << status_name(inst.status) << "]";
      if (inst.discrepancy()) os << "  DISCREPANCY";
      os << '\n';
    }
    os << instances.size() << " rows, " << passes << " almost Ulrich, " << failures << " not, "
       << discrepancies << " discrepancies\n";
    return os.str();
  };

  const int rc = emit(opts.output, render(opts.output, report, instance_columns(), human), out, err);
  if (rc != kExitOk) return rc;
  if (discrepancies > 0) {
    err << "DISCREPANCY: " << discrepancies << " grid point(s) satisfy the hypotheses but are not almost Ulrich\n";
    return kExitDiscrepancy;
  }
  if (crosscheck_disagreements > 0) {
    err << "crosscheck disagreement at " << crosscheck_disagreements << " grid point(s)\n";
    return kExitDiscrepancy;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceOptions {
  std::string target;
  OutputOptions output{"human", "", false};
};

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const ScenarioResult res = run_reproduction(opts.target);
  int discrepancies = 0;
  for (const TheoremInstance& inst : res.instances) discrepancies += inst.discrepancy() ? 1 : 0;

  Json report = make_report(
      "reproduce", Json{{"target", res.target}}, res.actual,
      Json{{"discrepancies", discrepancies},
           {"passes", res.actual.size() - std::min(res.actual.size(), res.diff.size())},
           {"failures", res.diff.size()}},
      elapsed_ms(opts.output, start));
  report["expected"] = res.expected;
  report["diff"] = res.diff;
  report["result"] = res.passed() ? "PASS" : "FAIL";

  std::vector<Column> columns;
  if (!res.actual.empty()) {
    for (const auto& [key, value] : res.actual.front().items()) columns.push_back({key, key});
  }
  const auto human = [&] {
    std::ostringstream os;
    os << (res.passed() ? "PASS: " : "FAIL: ") << res.description << '\n';
    for (const std::string& line : res.diff) os << "  " << line << '\n';
    return os.str();
  };

  const int rc = emit(opts.output, render(opts.output, report, columns, human), out, err);
  if (rc != kExitOk) return rc;
  if (!res.passed()) {
    err << "reproduction " << res.target << " mismatched in " << res.diff.size() << " field(s)\n";
    return kExitDiscrepancy;
  }
  return discrepancies > 0 ? kExitDiscrepancy : kExitOk;
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts, std::vector<std::string> formats) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", opts.out_path, "Write the report to PATH instead of stdout");
  cmd->add_flag("--no-timing", opts.no_timing, "Emit timing_ms as null (byte-stable reports)");
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  const auto parse_one = [&](std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("expected an integer, got \"" + std::string(token) + "\"");
    }
    return value;
  };
  std::vector<std::int64_t> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = std::min(text.find(',', begin), text.size());
    const std::string_view item = text.substr(begin, comma - begin);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_one(item));
    } else {
      const std::int64_t lo = parse_one(item.substr(0, dots));
      const std::int64_t hi = parse_one(item.substr(dots + 2));
      if (hi >= lo && hi - lo >= 1'000'000) throw InvalidArgument("range too large: " + std::string(item));
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    begin = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology and Ulrich-condition checks for Frobenius pushforwards on hypersurface surfaces"};
  app.name("frobcoh");
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Classify one bundle expression");
  check_cmd->add_option("--degree", check.degree, "Degree d of the surface")->required();
  check_cmd->add_option("--char", check.characteristic, "Characteristic p (prime)")->required();
  check_cmd->add_option("--polarization", check.polarization, "Scale s (O_new(1) = O_old(s)) or omega^r")
      ->capture_default_str();
  check_cmd->add_option("--bundle", check.bundle, "Bundle expression, e.g. \"F*(omega^2)(1)\"")->required();
  check_cmd->add_option("--window", check.window, "Brute-force cross-check window [-W, W]")->capture_default_str();
  add_output_flags(check_cmd, check.output, {"human", "json", "csv", "md"});

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify theorem instances over a parameter grid");
  sweep_cmd->add_option("--degree", sweep.degrees, "Degrees, e.g. 5..12")->required();
  sweep_cmd->add_option("--char", sweep.chars, "Characteristics, e.g. 3,5,7")->required();
  sweep_cmd->add_option("--r", sweep.twists, "Twists r, e.g. 1..6")->required();
  sweep_cmd->add_option("--polarization-mode", sweep.mode, "unit or pluricanonical")
      ->check(CLI::IsMember({"unit", "pluricanonical"}))
      ->capture_default_str();
  sweep_cmd->add_option("--polarization", sweep.polarizations, "Scales s for unit mode")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)");
  add_output_flags(sweep_cmd, sweep.output, {"human", "json", "csv", "md"});

  ReproduceOptions reproduce;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a named golden scenario");
  reproduce_cmd->add_option("target", reproduce.target, "Scenario name")
      ->required()
      ->check(CLI::IsMember(reproduction_targets()));
  add_output_flags(reproduce_cmd, reproduce.output, {"human", "json", "csv", "md"});

  std::vector<std::string> argv_store{"frobcoh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
    return cmd_reproduce(reproduce, out, err);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const RepresentabilityError& e) {
    err << "error: unrepresentable twist: " << e.what() << '\n';
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const TwistOverflow& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace frobcoh::cli
