#include "vqtherm/concat.hpp"

#include <algorithm>
#include <cmath>

namespace vqtherm {

namespace {

// Bath attached to the full E_max span of stage i (1-based); stage k+1 names
// the terminating thermal coupling past the last stage. Fridges alternate
// cold, hot, cold, ...; engines start hot.
double stage_bath(const ConcatSpec& spec, int i) {
  bool odd = i % 2 == 1;
  bool fridge = spec.mode == Mode::fridge;
  return (odd == fridge) ? spec.beta_c : spec.beta_h;
}

// Exponent products phi_i = beta_i * (stage-i exposed gap), i = 1..k+1.
// Each degenerate swap locks a stage's inner transition to the next stage's
// exposed one, so the products satisfy phi_i = bath_i * E_max - phi_{i+1};
// the chain terminates in a direct thermal coupling, fixing phi_{k+1}.
std::vector<double> phi_chain(const ConcatSpec& spec) {
  std::vector<double> phi(static_cast<size_t>(spec.k) + 2, 0.0);
  double tail_gap = spec.k % 2 == 1 ? spec.e_max - spec.e_v : spec.e_v;
  phi[static_cast<size_t>(spec.k) + 1] = stage_bath(spec, spec.k + 1) * tail_gap;
  for (int i = spec.k; i >= 1; --i)
    phi[static_cast<size_t>(i)] =
        stage_bath(spec, i) * spec.e_max - phi[static_cast<size_t>(i) + 1];
  return phi;
}

// Normalized (1, e^{-mid}, e^{-top}) triple, stable for exponents of any sign.
std::array<double, 3> gibbs_triple(double mid, double top) {
  double base = std::min({0.0, mid, top});
  std::array<double, 3> t{std::exp(base), std::exp(base - mid),
                          std::exp(base - top)};
  double total = t[0] + t[1] + t[2];
  for (double& v : t) v /= total;
  return t;
}

}  // namespace

void require_valid(const ConcatSpec& spec) {
  if (spec.k < 1) fail(ErrorCode::invalid_argument, "concat: k must be >= 1");
  if (!std::isfinite(spec.e_v) || !std::isfinite(spec.e_max) ||
      !std::isfinite(spec.beta_c) || !std::isfinite(spec.beta_h))
    fail(ErrorCode::invalid_argument, "concat: parameters must be finite");
  if (spec.e_v <= 0.0)
    fail(ErrorCode::invalid_argument, "concat: E_v must be > 0");
  if (spec.e_max < spec.e_v)
    fail(ErrorCode::constraint, "concat: E_v must not exceed E_max");
  if (spec.beta_h < 0.0)
    fail(ErrorCode::invalid_argument, "concat: beta_h must be >= 0");
  if (spec.beta_c < spec.beta_h)
    fail(ErrorCode::invalid_argument, "concat: beta_c must be >= beta_h");
}

double concat_beta(const ConcatSpec& spec) {
  require_valid(spec);
  return phi_chain(spec)[1] / spec.e_v;
}

QutritChainState concat_steady(const ConcatSpec& spec) {
  require_valid(spec);
  std::vector<double> phi = phi_chain(spec);
  QutritChainState out;
  out.triples.reserve(static_cast<size_t>(spec.k));
  for (int i = 1; i <= spec.k; ++i) {
    // Odd stages expose their lower transition to the previous stage (weight
    // e^{-phi_i} on the middle level); even stages expose the upper one, so
    // the middle level carries the outgoing product phi_{i+1} instead.
    double mid = i % 2 == 1 ? phi[static_cast<size_t>(i)]
                            : phi[static_cast<size_t>(i) + 1];
    // Upper placement mirrors stage 1: the exposed pair moves to the top
    // transition and the middle level drops to E_max - E_v.
    if (i == 1 && spec.placement == Placement::upper)
      mid = stage_bath(spec, 1) * spec.e_max - phi[1];
    out.triples.push_back(gibbs_triple(mid, stage_bath(spec, i) * spec.e_max));
  }
  return out;
}

double concat_norm(const ConcatSpec& spec) {
  QutritChainState state = concat_steady(spec);
  const std::array<double, 3>& t = state.triples.front();
  return spec.placement == Placement::lower ? t[0] + t[1] : t[1] + t[2];
}

double concat_norm_limit(const ConcatSpec& spec) {
  require_valid(spec);
  // A closed bath window keeps beta_v constant in k, so the norm already sits
  // at its limit for any chain length.
  if (spec.beta_c == spec.beta_h) return concat_norm(spec);
  bool fridge = spec.mode == Mode::fridge;
  if (fridge == (spec.placement == Placement::upper)) return 1.0;
  if (fridge)  // lower placement: the top level retains its bath weight
    return 1.0 / (1.0 + std::exp(-spec.beta_c * spec.e_max));
  // Engine, upper placement: the ground level keeps weight e^{+beta_h*E_max}
  // relative to the diverging pair.
  return 1.0 / (1.0 + std::exp(spec.beta_h * spec.e_max));
}

LogDimension concat_log_dimension(const ConcatSpec& spec) {
  require_valid(spec);
  LogDimension out;
  out.k = spec.k;
  out.log3_levels = static_cast<double>(spec.k);
  out.beta_v = phi_chain(spec)[1] / spec.e_v;
  if (spec.k > 39) {
    out.levels = -1;  // 3^40 exceeds the signed 64-bit range
  } else {
    long long levels = 1;
    for (int i = 0; i < spec.k; ++i) levels *= 3;
    out.levels = levels;
  }
  return out;
}

}  // namespace vqtherm
