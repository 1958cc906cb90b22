#include "frobcoh/theorems.hpp"

#include "frobcoh/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace frobcoh {

namespace {

void finish(TheoremInstance& inst, const FrobeniusPushforward& bundle) {
  inst.bundle = bundle.to_string();
  inst.classification = classify(bundle);
  inst.conclusion_observed = inst.classification.almost_ulrich;
}

std::optional<Witness> find_witness(const VanishingReport& report, Twist m) {
  for (const Witness& w : report.witnesses) {
    if (w.m == m) return w;
  }
  return std::nullopt;
}

}  // namespace

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Main:
      return "T-main";
    case TheoremId::General:
      return "T-gen";
    case TheoremId::RankOne:
      return "T-r1";
    case TheoremId::Hypersurface:
      return "C-hypersurface";
    case TheoremId::ErrorReproduction:
      return "E-error";
  }
  return "?";
}

std::string status_name(InstanceStatus s) {
  return s == InstanceStatus::Ok ? "ok" : "hypothesis_violation";
}

bool TheoremInstance::hypotheses_hold() const {
  return std::all_of(hypothesis_results.begin(), hypothesis_results.end(),
                     [](const auto& h) { return h.second; });
}

bool TheoremInstance::discrepancy() const {
  return hypotheses_hold() && conclusion_expected && !conclusion_observed;
}

bool hyp_ample(const HypersurfaceModel&, const LineBundleClass& m_bundle) { return m_bundle.ample(); }

bool hyp_acm_canonical_twist(const HypersurfaceModel& model, const LineBundleClass& m_bundle, Twist window) {
  const Twist twist = checked_add(model.canonical_twist(), m_bundle.twist);
  const TwistFamily family = line_bundle_family(model, twist);
  const bool band_empty = nonzero_band(model, 1).empty;
  for (Twist m = -window; m <= window; ++m) {
    if (family.h(1, m) != 0) return false;
  }
  return band_empty;
}

bool hyp_h0_minus_p(const HypersurfaceModel& model, const LineBundleClass& m_bundle) {
  const Twist k = checked_add(checked_add(model.canonical_twist(), m_bundle.twist),
                              -model.to_old_units(model.characteristic()));
  return h(model, 0, k) == 0;
}

TheoremInstance verify_main(const HypersurfaceModel& model, const LineBundleClass& m_bundle) {
  TheoremInstance inst;
  inst.theorem_id = TheoremId::Main;
  inst.params = {model.degree(), model.characteristic(), m_bundle.twist, model.polarization_scale()};
  inst.hypothesis_results = {
      {"M_ample", hyp_ample(model, m_bundle)},
      {"omega_M_acm", hyp_acm_canonical_twist(model, m_bundle)},
      {"h0_omega_M_minus_p_zero", hyp_h0_minus_p(model, m_bundle)},
  };
  inst.conclusion_expected = inst.hypotheses_hold();
  finish(inst, make_pushforward(model, checked_add(model.canonical_twist(), m_bundle.twist), 1));
  return inst;
}

TheoremInstance verify_corollary(std::int64_t d, std::int64_t r, std::int64_t p) {
  if (r < 1) throw InvalidArgument("corollary requires r >= 1, got " + std::to_string(r));
  const HypersurfaceModel model(d, p);
  const LineBundleClass m_bundle{r};
  const Twist c = checked_add(model.canonical_twist(), r);
  const bool predicate = c < p;

  TheoremInstance inst;
  inst.theorem_id = TheoremId::Hypersurface;
  inst.params = {d, p, r, 1};
  inst.hypothesis_results = {
      {"r_ge_1", hyp_ample(model, m_bundle)},
      {"omega_M_acm", hyp_acm_canonical_twist(model, m_bundle)},
      {"h0_omega_M_minus_p_zero", hyp_h0_minus_p(model, m_bundle)},
      {"d_minus_4_plus_r_lt_p", predicate},
  };
  inst.conclusion_expected = predicate;
  finish(inst, make_pushforward(model, c, 1));
  inst.predicate_matches = inst.conclusion_expected == inst.conclusion_observed;
  if (c == p) inst.sharpness_witness = find_witness(inst.classification.report(Condition::V0), 2);
  return inst;
}

TheoremInstance verify_gen(std::int64_t d, std::int64_t r, std::int64_t p) {
  if (r < 1) throw InvalidArgument("pluricanonical index r must be >= 1, got " + std::to_string(r));
  if (d < 5) throw InvalidArgument("pluricanonical polarization needs an ample canonical class (d >= 5)");
  const HypersurfaceModel base(d, p);
  const Twist canonical = base.canonical_twist();
  const HypersurfaceModel model = repolarize(base, checked_mul(r, canonical));
  // M = omega^r = O_new(1).
  const LineBundleClass m_bundle{model.to_old_units(1)};

  TheoremInstance inst;
  inst.theorem_id = r == 1 ? TheoremId::RankOne : TheoremId::General;
  inst.params = {d, p, r, model.polarization_scale()};
  inst.status = p >= 3 ? InstanceStatus::Ok : InstanceStatus::HypothesisViolation;
  const bool omega_ample = canonical > 0;
  inst.hypothesis_results = {
      {"minimal", omega_ample},
      {"omega_r_is_O1", model.to_new_units(checked_mul(r, canonical)) == 1},
      {"h1_OX_zero", h(model, 1, 0) == 0},
      {"p_ge_3", p >= 3},
      {"M_ample", hyp_ample(model, m_bundle)},
      {"omega_M_acm", hyp_acm_canonical_twist(model, m_bundle)},
      {"h0_omega_M_minus_p_zero", hyp_h0_minus_p(model, m_bundle)},
  };
  inst.conclusion_expected = inst.hypotheses_hold();
  finish(inst, make_pushforward(model, checked_mul(r + 1, canonical), 1));
  return inst;
}

TheoremInstance reproduce_error(std::int64_t d, std::int64_t p) {
  if (d < 5) throw InvalidArgument("error reproduction needs an ample canonical class (d >= 5)");
  const HypersurfaceModel model(d, p);
  TheoremInstance inst;
  inst.theorem_id = TheoremId::ErrorReproduction;
  inst.params = {d, p, 0, 1};
  inst.hypothesis_results = {{"omega_ample", model.canonical_twist() > 0}};
  inst.conclusion_expected = false;
  finish(inst, make_pushforward(model, model.canonical_twist(), 1));
  const auto w = find_witness(inst.classification.report(Condition::V2), 1);
  inst.error_reproduced = w.has_value() && w->i == 2 && w->dim == 1;
  return inst;
}

void SweepGrid::validate(const GridBounds& bounds) const {
  if (degrees.empty() || chars.empty() || twists.empty() || polarizations.empty()) {
    throw InvalidArgument("sweep grid is empty");
  }
  for (auto d : degrees) {
    if (d < 1 || d > bounds.max_degree) throw InvalidArgument("degree out of bounds: " + std::to_string(d));
  }
  for (auto p : chars) {
    if (p > bounds.max_characteristic) throw InvalidArgument("characteristic out of bounds: " + std::to_string(p));
    if (!is_prime(p)) throw InvalidArgument("characteristic must be prime, got " + std::to_string(p));
  }
  for (auto r : twists) {
    if (r < 1 || r > bounds.max_twist) throw InvalidArgument("twist r out of bounds: " + std::to_string(r));
  }
  for (auto s : polarizations) {
    if (s < 1 || s > bounds.max_twist) throw InvalidArgument("polarization out of bounds: " + std::to_string(s));
  }
  if (size() > static_cast<std::size_t>(bounds.max_points)) throw InvalidArgument("sweep grid too large");
}

std::size_t SweepGrid::size() const {
  return degrees.size() * chars.size() * twists.size() * polarizations.size();
}

std::vector<TheoremInstance> run_sweep(const SweepGrid& grid, PolarizationMode mode, unsigned threads) {
  grid.validate();
  std::vector<TheoremParams> points;
  for (auto d : grid.degrees) {
    if (mode == PolarizationMode::Pluricanonical && d < 5) {
      throw InvalidArgument("pluricanonical sweeps need degrees >= 5");
    }
    for (auto p : grid.chars) {
      for (auto r : grid.twists) {
        if (mode == PolarizationMode::Pluricanonical) {
          points.push_back({d, p, r, 0});
          continue;
        }
        for (auto s : grid.polarizations) points.push_back({d, p, r, s});
      }
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const auto evaluate = [mode](const TheoremParams& pt) {
    if (mode == PolarizationMode::Pluricanonical) return verify_gen(pt.d, pt.r, pt.p);
    if (pt.s == 1) return verify_corollary(pt.d, pt.r, pt.p);
    const HypersurfaceModel model(pt.d, pt.p, pt.s);
    return verify_main(model, LineBundleClass{model.to_old_units(pt.r)});
  };

  std::vector<TheoremInstance> out(points.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t idx = next++; idx < points.size(); idx = next++) {
      try {
        out[idx] = evaluate(points[idx]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(out.begin(), out.end(),
                   [](const TheoremInstance& a, const TheoremInstance& b) { return a.params < b.params; });
  return out;
}

}  // namespace frobcoh
