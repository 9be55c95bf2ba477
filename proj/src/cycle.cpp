#include "vqtherm/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vqtherm {

void require_valid(const DesignParams& p) {
  if (p.n < 3) fail(ErrorCode::invalid_argument, "design: n must be >= 3");
  if (!std::isfinite(p.e_v) || !std::isfinite(p.e_max) ||
      !std::isfinite(p.beta_c) || !std::isfinite(p.beta_h))
    fail(ErrorCode::invalid_argument, "design: parameters must be finite");
  if (p.e_v <= 0.0)
    fail(ErrorCode::invalid_argument, "design: E_v must be > 0");
  if (p.e_max < p.e_v)
    fail(ErrorCode::constraint, "design: E_v must not exceed E_max");
  if (p.beta_h < 0.0)
    fail(ErrorCode::invalid_argument, "design: beta_h must be >= 0");
  if (p.beta_c < p.beta_h)
    fail(ErrorCode::invalid_argument, "design: beta_c must be >= beta_h");
}

CycleSpec make_cycle(std::vector<double> energies, std::vector<Bath> couplings) {
  CycleSpec spec{std::move(energies), std::move(couplings)};
  require_valid(spec);
  return spec;
}

std::vector<Violation> validate(const CycleSpec& spec,
                                const DesignParams* params) {
  std::vector<Violation> out;
  auto add = [&out](Violation::Kind kind, const std::string& msg) {
    out.push_back(Violation{kind, msg});
  };

  if (spec.levels() < 3)
    add(Violation::Kind::structure, "cycle needs at least 3 levels");
  if (spec.couplings.size() + 1 != spec.energies.size())
    add(Violation::Kind::structure,
        "cycle needs exactly one coupling per consecutive transition");
  for (double e : spec.energies)
    if (!std::isfinite(e)) {
      add(Violation::Kind::non_finite, "non-finite level energy");
      break;
    }
  for (const Bath& b : spec.couplings) {
    if (!std::isfinite(b.beta)) {
      add(Violation::Kind::non_finite, "non-finite coupling temperature");
      break;
    }
    if (b.beta < 0.0) {
      add(Violation::Kind::structure, "coupling beta must be >= 0");
      break;
    }
  }
  if (!out.empty()) return out;  // shape is broken; bounds are meaningless

  if (params != nullptr) {
    for (int j = 0; j + 1 < spec.levels(); ++j) {
      double g = spec.gap(j);
      if (std::abs(g) > params->e_max * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "gap " << (j + 1) << " has |dE| = " << std::abs(g)
            << " exceeding E_max = " << params->e_max;
        add(Violation::Kind::gap_bound, msg.str());
      }
      double beta = spec.couplings[static_cast<size_t>(j)].beta;
      if (beta < params->beta_h - 1e-12 || beta > params->beta_c + 1e-12) {
        std::ostringstream msg;
        msg << "coupling " << (j + 1) << " has beta = " << beta
            << " outside [" << params->beta_h << ", " << params->beta_c << "]";
        add(Violation::Kind::bath_bound, msg.str());
      }
    }
  }
  return out;
}

void require_valid(const CycleSpec& spec, const DesignParams* params) {
  std::vector<Violation> v = validate(spec, params);
  if (v.empty()) return;
  std::string msg = "invalid cycle:";
  for (const Violation& viol : v) msg += " " + viol.message + ";";
  bool bounds_only = std::all_of(v.begin(), v.end(), [](const Violation& viol) {
    return viol.kind == Violation::Kind::gap_bound ||
           viol.kind == Violation::Kind::bath_bound;
  });
  fail(bounds_only ? ErrorCode::constraint : ErrorCode::invalid_argument, msg);
}

namespace {

// Cumulative exponents s_j = sum_{i<j} beta_i * gap_i, so p_j  proportional to
// e^{-s_j}; s_n - s_1 = beta_v * E_v.
std::vector<double> log_weights(const CycleSpec& spec) {
  std::vector<double> s(static_cast<size_t>(spec.levels()), 0.0);
  for (int j = 0; j + 1 < spec.levels(); ++j)
    s[static_cast<size_t>(j) + 1] =
        s[static_cast<size_t>(j)] +
        spec.couplings[static_cast<size_t>(j)].beta * spec.gap(j);
  return s;
}

}  // namespace

SteadyState steady_state(const CycleSpec& spec) {
  require_valid(spec);
  std::vector<double> s = log_weights(spec);
  double smin = *std::min_element(s.begin(), s.end());
  double total = 0.0;
  SteadyState out;
  out.populations.resize(s.size());
  for (size_t j = 0; j < s.size(); ++j) {
    out.populations[j] = std::exp(-(s[j] - smin));
    total += out.populations[j];
  }
  for (double& p : out.populations) p /= total;
  return out;
}

double beta_v_of(const CycleSpec& spec) {
  require_valid(spec);
  double e_v = spec.virtual_gap();
  if (e_v == 0.0)
    fail(ErrorCode::degenerate,
         "virtual gap is zero: endpoints are degenerate");
  // All couplings at one temperature make the chain a Gibbs state at exactly
  // that temperature; return it without the round trip through the sum.
  bool single = std::all_of(
      spec.couplings.begin(), spec.couplings.end(),
      [&](const Bath& b) { return b.beta == spec.couplings.front().beta; });
  if (single) return spec.couplings.front().beta;

  double sum = 0.0;
  for (int j = 0; j + 1 < spec.levels(); ++j)
    sum += spec.couplings[static_cast<size_t>(j)].beta * spec.gap(j);
  return sum / e_v;
}

VirtualQubit virtual_qubit_of(const CycleSpec& spec) {
  double beta_v = beta_v_of(spec);  // validates, rejects E_v = 0
  double e_v = spec.virtual_gap();
  SteadyState ss = steady_state(spec);
  double norm = ss.populations.front() + ss.populations.back();
  // E_v < 0 would mean the "upper" virtual level lies below the ground one;
  // cycles are stored with E_n > E_1 so the bias formula is well oriented.
  if (e_v < 0.0)
    fail(ErrorCode::invalid_argument,
         "cycle endpoint energies must satisfy E_n > E_1");
  return VirtualQubit{e_v, norm, Bias(std::tanh(0.5 * beta_v * e_v))};
}

EfficiencyReport efficiency(const CycleSpec& spec) {
  require_valid(spec);
  double e_v = spec.virtual_gap();
  if (e_v <= 0.0)
    fail(ErrorCode::degenerate, "efficiency needs a positive virtual gap");

  double beta_c = -1.0, beta_h = std::numeric_limits<double>::infinity();
  for (const Bath& b : spec.couplings) {
    beta_c = std::max(beta_c, b.beta);
    beta_h = std::min(beta_h, b.beta);
  }
  double scale = std::max(1.0, beta_c);
  for (const Bath& b : spec.couplings)
    if (std::abs(b.beta - beta_c) > 1e-12 * scale &&
        std::abs(b.beta - beta_h) > 1e-12 * scale)
      fail(ErrorCode::invalid_argument,
           "two-bath heat accounting needs every coupling at one of the two "
           "extreme temperatures");

  double beta_v = beta_v_of(spec);
  if (std::abs(beta_v - beta_c) <= 1e-12 * scale)
    fail(ErrorCode::degenerate,
         "beta_v equals beta_c: efficiency pole (no usable machine)");

  EfficiencyReport rep{};
  rep.mode = beta_v > beta_c ? Mode::fridge : Mode::engine;

  // Traverse the cycle once in the direction that resets the swapped quantum:
  // fridges fall n -> 1 (a downward step through gap g absorbs -g from its
  // bath), engines climb 1 -> n (an upward step absorbs +g).
  double q_hot = 0.0, q_cold = 0.0;
  double direction = rep.mode == Mode::fridge ? -1.0 : +1.0;
  for (int j = 0; j + 1 < spec.levels(); ++j) {
    double absorbed = direction * spec.gap(j);
    if (std::abs(spec.couplings[static_cast<size_t>(j)].beta - beta_c) <=
        1e-12 * scale)
      q_cold += absorbed;
    else
      q_hot += absorbed;
  }
  rep.heat_hot = q_hot;
  rep.heat_cold = q_cold;
  rep.work_or_cool = rep.mode == Mode::fridge ? e_v : -e_v;
  rep.eta = rep.mode == Mode::fridge ? (beta_c - beta_h) / (beta_v - beta_c)
                                     : (beta_c - beta_h) / (beta_c - beta_v);
  return rep;
}

}  // namespace vqtherm
