#include "vqtherm/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vqtherm {

namespace {

void require_bath(double beta) {
  if (!std::isfinite(beta) || beta < 0.0)
    fail(ErrorCode::invalid_argument,
         "coupling bath beta must be finite and >= 0");
}

}  // namespace

std::vector<std::pair<int, int>> MultiCycleSpec::parallel_pairs() const {
  int n = base.levels();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) - 1);
  for (int j = 0; j + 1 < n; ++j) pairs.emplace_back(j, n - 1 + j);
  return pairs;
}

MultiCycleSpec amplify(const CycleSpec& base) {
  require_valid(base);
  double e_v = base.virtual_gap();
  if (e_v <= 0.0)
    fail(ErrorCode::degenerate,
         "amplification needs a positive virtual gap (E_n > E_1)");

  int n = base.levels();
  CycleSpec chain;
  chain.energies = base.energies;
  chain.couplings = base.couplings;
  chain.energies.reserve(2 * static_cast<size_t>(n) - 2);
  chain.couplings.reserve(2 * static_cast<size_t>(n) - 3);
  // Duplicate the interior one virtual gap higher. Level n-1+j then sits
  // exactly E_v above level j, and the coupling into each duplicate crosses
  // the same energy difference as the original transition (j-1, j), so it can
  // reuse that transition's bath.
  for (int j = 1; j + 1 < n; ++j) {
    chain.energies.push_back(base.energies[static_cast<size_t>(j)] + e_v);
    chain.couplings.push_back(base.couplings[static_cast<size_t>(j) - 1]);
  }
  return MultiCycleSpec{base, std::move(chain)};
}

SteadyState multi_steady_state(const MultiCycleSpec& spec) {
  return steady_state(spec.chain);
}

MultiReport analyze(const MultiCycleSpec& spec) {
  require_valid(spec.chain);
  double e_v = spec.virtual_gap();
  if (e_v <= 0.0)
    fail(ErrorCode::degenerate,
         "amplification needs a positive virtual gap (E_n > E_1)");

  // Cumulative exponents s_j of the chain: pair (j, n-1+j) holds populations
  // with ratio e^{-(s_{n-1+j} - s_j)}, i.e. inverse temperature
  // (s_{n-1+j} - s_j)/E_v. Consecutive pairs differ by one shared coupling on
  // each leg, so the differences telescope to a common value.
  std::vector<double> s(static_cast<size_t>(spec.chain.levels()), 0.0);
  for (int j = 0; j + 1 < spec.chain.levels(); ++j)
    s[static_cast<size_t>(j) + 1] =
        s[static_cast<size_t>(j)] +
        spec.chain.couplings[static_cast<size_t>(j)].beta * spec.chain.gap(j);

  int n = spec.base.levels();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int j = 0; j + 1 < n; ++j) {
    double beta =
        (s[static_cast<size_t>(n - 1 + j)] - s[static_cast<size_t>(j)]) / e_v;
    lo = std::min(lo, beta);
    hi = std::max(hi, beta);
  }

  SteadyState ss = multi_steady_state(spec);
  double norm = 0.0;
  for (auto [lower, upper] : spec.parallel_pairs())
    norm += ss.populations[static_cast<size_t>(lower)] +
            ss.populations[static_cast<size_t>(upper)];

  MultiReport rep{};
  rep.beta_v = (s[static_cast<size_t>(n) - 1] - s[0]) / e_v;
  rep.beta_spread = hi - lo;
  rep.norm_total = norm;  // the pairs tile the chain, so this is 1
  rep.bias = std::tanh(0.5 * rep.beta_v * e_v);
  return rep;
}

double multi_beta(int n_prime, const DesignParams& params) {
  require_valid(params);
  if (n_prime < 4 || n_prime % 2 != 0)
    fail(ErrorCode::invalid_argument,
         "multi-cycle dimension n' must be an even integer >= 4");
  double window = params.beta_c - params.beta_h;
  double lift = window * (n_prime / 4.0 - 0.5) * params.e_max / params.e_v;
  return params.mode == Mode::fridge ? params.beta_c + lift
                                     : params.beta_h - lift;
}

VirtualQubit transform_coupling(const VirtualQubit& vq,
                                const CouplingTransform& t) {
  if (!std::isfinite(vq.gap) || vq.gap <= 0.0)
    fail(ErrorCode::invalid_argument,
         "virtual qubit gap must be finite and > 0");
  if (!std::isfinite(t.gap_out) || t.gap_out <= 0.0)
    fail(ErrorCode::invalid_argument, "output gap must be finite and > 0");
  double product = vq.beta() * vq.gap;  // rejects |bias| = 1 as degenerate

  double out_product = 0.0;
  switch (t.kind) {
    case TransformKind::preserve: {
      double scale = std::max({1.0, vq.gap, t.gap_out});
      if (std::abs(t.gap_out - vq.gap) > 1e-12 * scale)
        fail(ErrorCode::constraint,
             "a bare swap-out cannot change the gap; use shift or flip");
      out_product = product;
      break;
    }
    case TransformKind::shift:
      require_bath(t.beta_bath);
      out_product = product + t.beta_bath * (t.gap_out - vq.gap);
      break;
    case TransformKind::flip:
      require_bath(t.beta_bath);
      out_product = -product + t.beta_bath * (vq.gap + t.gap_out);
      break;
  }
  double beta_out = out_product / t.gap_out;
  return make_virtual_qubit(t.gap_out, 1.0, bias_from_beta(beta_out, t.gap_out));
}

}  // namespace vqtherm
