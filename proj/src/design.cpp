#include "vqtherm/design.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "vqtherm/amplify.hpp"

namespace vqtherm {

namespace {

// Gap multiset of the optimal cycle, in cycle order. Even n: (n/2 - 1) full
// climbs, the virtual gap, (n/2 - 1) full drops. Odd n: one extra climb traded
// against a partial drop E_max - E_v.
std::vector<double> optimal_gaps(const DesignParams& p) {
  std::vector<double> gaps;
  gaps.reserve(static_cast<size_t>(p.n) - 1);
  if (p.n % 2 == 0) {
    gaps.insert(gaps.end(), static_cast<size_t>(p.n / 2 - 1), p.e_max);
    gaps.push_back(p.e_v);
    gaps.insert(gaps.end(), static_cast<size_t>(p.n / 2 - 1), -p.e_max);
  } else {
    gaps.insert(gaps.end(), static_cast<size_t>((p.n - 1) / 2), p.e_max);
    gaps.push_back(-(p.e_max - p.e_v));
    gaps.insert(gaps.end(), static_cast<size_t>((p.n - 3) / 2), -p.e_max);
  }
  return gaps;
}

// Resource term shared by both modes: the distance each extra level buys.
double ladder_term(const DesignParams& p) {
  if (p.n % 2 == 0) return (p.n / 2.0 - 1.0) * p.e_max;
  return ((p.n - 1) / 2.0) * p.e_max - p.e_v;
}

// Truncated Gibbs ladder sum 1 + e^{-y} + ... + e^{-(k-1)y} normalized by the
// first step, i.e. (1 - e^{-k y})/(1 - e^{-y}); continuous at y = 0.
double ladder_sum(int k, double y) {
  if (y == 0.0) return static_cast<double>(k);
  return std::expm1(-static_cast<double>(k) * y) / std::expm1(-y);
}

}  // namespace

CycleSpec optimal_cycle(const DesignParams& params) {
  require_valid(params);
  std::vector<double> gaps = optimal_gaps(params);
  std::vector<double> energies(static_cast<size_t>(params.n), 0.0);
  std::vector<Bath> couplings(gaps.size());
  for (size_t j = 0; j < gaps.size(); ++j) {
    energies[j + 1] = energies[j] + gaps[j];
    bool positive = gaps[j] > 0.0;
    bool cold = params.mode == Mode::fridge ? positive : !positive;
    couplings[j].beta = cold ? params.beta_c : params.beta_h;
  }
  return CycleSpec{std::move(energies), std::move(couplings)};
}

double closed_beta_v(const DesignParams& params) {
  require_valid(params);
  double x = ladder_term(params);
  double window = params.beta_c - params.beta_h;
  if (params.mode == Mode::fridge)
    return params.beta_c + window * x / params.e_v;
  return params.beta_h - window * x / params.e_v;
}

double closed_norm(const DesignParams& params) {
  require_valid(params);
  double bv_ev = closed_beta_v(params) * params.e_v;
  int kc, kh;
  if (params.n % 2 == 0) {
    kc = kh = params.n / 2;
  } else if (params.mode == Mode::fridge) {
    kc = (params.n + 1) / 2;
    kh = (params.n - 1) / 2;
  } else {
    kc = (params.n - 1) / 2;
    kh = (params.n + 1) / 2;
  }
  // Populations split into a cold ladder anchored at the vq ground level and a
  // hot ladder anchored at the vq upper level; x is the upper anchor's weight.
  double x = params.mode == Mode::fridge ? std::exp(-bv_ev) : std::exp(bv_ev);
  double dc = ladder_sum(kc, params.beta_c * params.e_max);
  double dh = ladder_sum(kh, params.beta_h * params.e_max);
  return (1.0 + x) / (dc + x * dh);
}

double asymptotic_norm(const DesignParams& params) {
  require_valid(params);
  return -std::expm1(-params.beta_c * params.e_max);
}

double marginal_gain(const DesignParams& params) {
  require_valid(params);
  double gain = (params.beta_c - params.beta_h) * params.e_max;
  return params.mode == Mode::fridge ? gain : -gain;
}

GapBreakdown max_q_plus(int j, double delta_e_1j, double e_max) {
  if (j < 2) fail(ErrorCode::invalid_argument, "level index j must be >= 2");
  if (!std::isfinite(delta_e_1j) || !std::isfinite(e_max) || e_max <= 0.0)
    fail(ErrorCode::invalid_argument, "offset and E_max must be finite, E_max > 0");
  int t = j - 1;  // transitions available to reach level j from level 1
  if (std::abs(delta_e_1j) > t * e_max * (1.0 + 1e-12))
    fail(ErrorCode::constraint, "offset unreachable with j-1 bounded gaps");

  GapBreakdown out;
  out.m = static_cast<int>(std::floor(delta_e_1j / e_max));
  out.delta = delta_e_1j - out.m * e_max;
  // Maximize the negative budget |Q-| = min(q*E_max, (t-q)*E_max - dE) over
  // the count q of downhill transitions; the positive side then carries
  // Q+ = dE + |Q-|. t is tiny, so scan every split.
  double best = 0.0;
  for (int q = 0; q <= t; ++q) {
    double budget = std::min(q * e_max, (t - q) * e_max - delta_e_1j);
    best = std::max(best, budget);
  }
  out.q_plus = delta_e_1j + best;
  out.q_minus = -best;
  return out;
}

BruteForceResult brute_force_best(const DesignParams& params,
                                  const SearchGrid& grid, Objective objective,
                                  double z_s) {
  require_valid(params);
  if (!std::isfinite(z_s) || z_s < -1.0 || z_s > 1.0)
    fail(ErrorCode::invalid_argument, "z_s must lie in [-1, 1]");
  if (!(grid.energy_step > 0.0) || !std::isfinite(grid.energy_step))
    fail(ErrorCode::invalid_argument, "energy step must be finite and > 0");
  if (grid.temperatures.empty())
    fail(ErrorCode::invalid_argument, "temperature set must not be empty");
  for (double b : grid.temperatures)
    if (!std::isfinite(b) || b < 0.0)
      fail(ErrorCode::invalid_argument, "temperatures must be finite and >= 0");

  // Work in integer step units so the sum constraint is exact.
  double m_real = params.e_max / grid.energy_step;
  double s_real = params.e_v / grid.energy_step;
  long long m = std::llround(m_real);
  long long target = std::llround(s_real);
  if (std::abs(m_real - static_cast<double>(m)) > 1e-9 ||
      std::abs(s_real - static_cast<double>(target)) > 1e-9 || m < 1)
    fail(ErrorCode::invalid_argument,
         "grid cannot represent E_v and E_max exactly (step must divide both)");

  std::vector<double> temps = grid.temperatures;
  std::sort(temps.begin(), temps.end());
  temps.erase(std::unique(temps.begin(), temps.end()), temps.end());

  int t = params.n - 1;
  bool fridge = params.mode == Mode::fridge;
  auto score = [&](double nv, double zv) {
    switch (objective) {
      case Objective::max_bias:
        return fridge ? zv : -zv;
      case Objective::max_norm_bias:
        return fridge ? nv * zv : -nv * zv;
      case Objective::max_swap_gain:
        return fridge ? nv * (zv - z_s) : nv * (z_s - zv);
    }
    fail(ErrorCode::invalid_argument, "unknown objective");
  };

  const std::uint64_t eval_limit = 200'000'000;
  BruteForceResult result;
  bool found = false;
  double best = 0.0;

  std::vector<double> gaps(static_cast<size_t>(t), 0.0);
  std::vector<Bath> baths(static_cast<size_t>(t));
  std::vector<double> logw(static_cast<size_t>(t) + 1, 0.0);

  // Evaluate one full (gaps, baths) assignment; enumeration order is
  // lexicographic (gap-major, bath-minor), so keeping only strict improvements
  // realizes the smallest-sequence tie-break.
  auto evaluate = [&]() {
    result.evaluated++;
    if (result.evaluated > eval_limit)
      fail(ErrorCode::invalid_argument,
           "search grid too large; refine step or reduce n");
    for (size_t i = 0; i < logw.size() - 1; ++i)
      logw[i + 1] = logw[i] + baths[i].beta * gaps[i];
    double lmin = *std::min_element(logw.begin(), logw.end());
    double total = 0.0;
    for (double v : logw) total += std::exp(-(v - lmin));
    double p1 = std::exp(-(logw.front() - lmin)) / total;
    double pn = std::exp(-(logw.back() - lmin)) / total;
    double nv = p1 + pn;
    double zv = std::tanh(0.5 * (logw.back() - logw.front()));
    double v = score(nv, zv);
    if (!found || v > best) {
      found = true;
      best = v;
      std::vector<double> energies(static_cast<size_t>(params.n), 0.0);
      for (int i = 0; i < t; ++i) energies[i + 1] = energies[i] + gaps[i];
      result.spec = CycleSpec{std::move(energies), baths};
      result.value = v;
    }
  };

  std::function<void(int)> assign_baths = [&](int pos) {
    if (pos == t) {
      evaluate();
      return;
    }
    for (double beta : temps) {
      baths[static_cast<size_t>(pos)].beta = beta;
      assign_baths(pos + 1);
    }
  };

  std::function<void(int, long long)> assign_gaps = [&](int pos, long long sum) {
    if (pos == t) {
      if (sum == target) assign_baths(0);
      return;
    }
    long long remaining = t - pos;
    for (long long g = -m; g <= m; ++g) {
      // The tail can move the sum by at most (remaining - 1) * m more steps.
      long long need = target - sum - g;
      if (std::abs(need) > (remaining - 1) * m) continue;
      gaps[static_cast<size_t>(pos)] = static_cast<double>(g) * grid.energy_step;
      assign_gaps(pos + 1, sum + g);
    }
  };

  assign_gaps(0, 0);
  if (!found)
    fail(ErrorCode::invalid_argument,
         "no admissible gap sequence on this grid");
  return result;
}

std::vector<ThirdLawPoint> third_law_scaling(const DesignParams& params,
                                             const std::vector<int>& n_list) {
  require_valid(params);
  std::vector<ThirdLawPoint> out;
  out.reserve(n_list.size());
  for (int n_prime : n_list) {
    double beta = multi_beta(n_prime, params);
    if (beta <= 0.0)
      fail(ErrorCode::degenerate,
           "multi-cycle temperature is not positive at this dimension");
    out.push_back(ThirdLawPoint{n_prime, 1.0 / beta});
  }
  return out;
}

double third_law_limit(const DesignParams& params) {
  require_valid(params);
  if (params.beta_c == params.beta_h)
    fail(ErrorCode::degenerate, "equal bath temperatures: no cooling limit");
  return 4.0 * params.e_v / ((params.beta_c - params.beta_h) * params.e_max);
}

}  // namespace vqtherm
