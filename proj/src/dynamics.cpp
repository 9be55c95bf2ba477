#include "vqtherm/dynamics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "vqtherm/design.hpp"

namespace vqtherm {

namespace {

void require_timescale(double tau, const char* name) {
  // +inf is a valid value and disables the link; NaN and non-positives are not.
  if (std::isnan(tau) || tau <= 0.0)
    fail(ErrorCode::invalid_argument,
         std::string("dynamics: ") + name +
             " must be > 0 (+inf disables the link)");
}

double resolve_system_gap(const CycleSpec& spec, const DynamicsConfig& config) {
  double e_v = spec.virtual_gap();
  if (std::isnan(config.e_s)) {
    if (e_v <= 0.0)
      fail(ErrorCode::degenerate,
           "dynamics: resonant default requires E_n > E_1");
    return e_v;
  }
  if (!std::isfinite(config.e_s) || config.e_s <= 0.0)
    fail(ErrorCode::invalid_argument, "dynamics: e_s must be finite and > 0");
  // The swap exchanges |1,excited> with |n,ground>, which conserves energy
  // only on resonance; a detuned system qubit needs the swap disabled.
  double scale = std::max({1.0, config.e_s, std::abs(e_v)});
  if (!std::isinf(config.tau_swap) && std::abs(config.e_s - e_v) > 1e-12 * scale)
    fail(ErrorCode::constraint,
         "dynamics: e_s must be resonant with the virtual gap while the swap "
         "is active (set tau_swap = +inf to detune)");
  return config.e_s;
}

}  // namespace

RateMatrix build_rates(const CycleSpec& spec, const DynamicsConfig& config) {
  require_valid(spec);
  require_timescale(config.tau_beta, "tau_beta");
  require_timescale(config.tau_s, "tau_s");
  require_timescale(config.tau_swap, "tau_swap");
  if (!std::isfinite(config.beta_env) || config.beta_env < 0.0)
    fail(ErrorCode::invalid_argument,
         "dynamics: beta_env must be finite and >= 0");

  RateMatrix rm;
  rm.machine_levels = spec.levels();
  rm.e_s = resolve_system_gap(spec, config);
  int dim = rm.dim();
  rm.gen.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);

  auto idx = [](int j, int s) { return 2 * j + s; };
  auto add_rate = [&rm](int from, int to, double rate) {
    if (rate == 0.0) return;
    rm.at(to, from) += rate;
    rm.at(from, from) -= rate;
  };

  // Thermal machine transitions, acting identically on both system sectors;
  // up/down split so the pair sums to 1/tau_beta with ratio e^{-beta*gap}.
  double k_beta = std::isinf(config.tau_beta) ? 0.0 : 1.0 / config.tau_beta;
  for (int j = 0; j + 1 < spec.levels(); ++j) {
    double x = spec.couplings[static_cast<size_t>(j)].beta * spec.gap(j);
    double up = k_beta / (std::exp(x) + 1.0);
    double down = k_beta / (1.0 + std::exp(-x));
    for (int s = 0; s < 2; ++s) {
      add_rate(idx(j, s), idx(j + 1, s), up);
      add_rate(idx(j + 1, s), idx(j, s), down);
    }
  }

  // Environment relaxation of the external qubit on every machine level,
  // driving its bias toward tanh(beta_env * E_s / 2).
  double k_s = std::isinf(config.tau_s) ? 0.0 : 1.0 / config.tau_s;
  double z_env = std::tanh(0.5 * config.beta_env * rm.e_s);
  for (int j = 0; j < spec.levels(); ++j) {
    add_rate(idx(j, 0), idx(j, 1), 0.5 * k_s * (1.0 - z_env));
    add_rate(idx(j, 1), idx(j, 0), 0.5 * k_s * (1.0 + z_env));
  }

  // Resonant swap between |1,excited> and |n,ground>, symmetric by unitarity.
  double k_swap = std::isinf(config.tau_swap) ? 0.0 : 1.0 / config.tau_swap;
  add_rate(idx(0, 1), idx(spec.levels() - 1, 0), k_swap);
  add_rate(idx(spec.levels() - 1, 0), idx(0, 1), k_swap);

  return rm;
}

std::vector<double> JointState::machine_marginal() const {
  std::vector<double> m(static_cast<size_t>(machine_levels), 0.0);
  for (int j = 0; j < machine_levels; ++j)
    m[static_cast<size_t>(j)] = populations[static_cast<size_t>(2 * j)] +
                                populations[static_cast<size_t>(2 * j + 1)];
  return m;
}

std::array<double, 2> JointState::system_marginal() const {
  std::array<double, 2> s{0.0, 0.0};
  for (int j = 0; j < machine_levels; ++j) {
    s[0] += populations[static_cast<size_t>(2 * j)];
    s[1] += populations[static_cast<size_t>(2 * j + 1)];
  }
  return s;
}

JointState steady(const RateMatrix& rates) {
  int dim = rates.dim();
  if (dim < 2 ||
      rates.gen.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
    fail(ErrorCode::invalid_argument, "dynamics: malformed rate matrix");

  // Uniqueness needs an irreducible generator; every link here is
  // bidirectional, so connectivity of the undirected support graph decides.
  std::vector<char> seen(static_cast<size_t>(dim), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < dim; ++v) {
      if (v == u || seen[static_cast<size_t>(v)]) continue;
      if (rates.at(v, u) > 0.0 || rates.at(u, v) > 0.0) {
        seen[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
        ++reached;
      }
    }
  }
  if (reached != dim)
    fail(ErrorCode::degenerate,
         "dynamics: generator is reducible (disconnected state space), the "
         "steady state is not unique");

  Eigen::MatrixXd gen(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) gen(r, c) = rates.at(r, c);
  double scale = std::max(1.0, gen.cwiseAbs().maxCoeff());

  // Replace one redundant balance row by the normalization constraint.
  Eigen::MatrixXd a = gen;
  a.row(dim - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
  b(dim - 1) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible())
    fail(ErrorCode::solver, "dynamics: steady-state system is singular");
  Eigen::VectorXd p = lu.solve(b);

  double residual = (gen * p).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10 * scale))
    fail(ErrorCode::solver,
         "dynamics: steady-state residual exceeds tolerance");

  JointState out;
  out.machine_levels = rates.machine_levels;
  out.populations.resize(static_cast<size_t>(dim));
  double clamp = 0.0;
  double total = 0.0;
  for (int i = 0; i < dim; ++i) {
    double v = p(i);
    if (v < 0.0) {
      clamp = std::max(clamp, -v);
      v = 0.0;
    }
    out.populations[static_cast<size_t>(i)] = v;
    total += v;
  }
  if (clamp > 1e-8)
    fail(ErrorCode::solver,
         "dynamics: steady-state solution has a significantly negative "
         "population");
  if (!(total > 0.0))
    fail(ErrorCode::solver, "dynamics: steady-state normalization failed");
  for (double& v : out.populations) v /= total;
  out.clamp_magnitude = clamp;
  return out;
}

double system_beta(const JointState& state, double e_s) {
  if (!std::isfinite(e_s) || e_s <= 0.0)
    fail(ErrorCode::invalid_argument, "system gap must be finite and > 0");
  std::array<double, 2> s = state.system_marginal();
  if (!(s[0] > 0.0) || !(s[1] > 0.0))
    fail(ErrorCode::degenerate,
         "system marginal is pure; it has no finite temperature");
  return std::log(s[0] / s[1]) / e_s;
}

double loaded_vq_beta(const JointState& state, double e_v) {
  if (!std::isfinite(e_v) || e_v <= 0.0)
    fail(ErrorCode::invalid_argument, "virtual gap must be finite and > 0");
  std::vector<double> m = state.machine_marginal();
  if (m.size() < 2 || !(m.front() > 0.0) || !(m.back() > 0.0))
    fail(ErrorCode::degenerate,
         "machine endpoint population vanishes; no finite virtual temperature");
  return std::log(m.front() / m.back()) / e_v;
}

std::vector<ScanPoint> scan_cycle_length(const DesignParams& params, int n_min,
                                         int n_max,
                                         const std::vector<double>& tau_s_list,
                                         const DynamicsConfig& config) {
  if (n_min < 3)
    fail(ErrorCode::invalid_argument, "dynamics: n_min must be >= 3");
  if (n_max < n_min)
    fail(ErrorCode::invalid_argument, "dynamics: n_max must be >= n_min");
  if (tau_s_list.empty())
    fail(ErrorCode::invalid_argument, "dynamics: tau_s list must not be empty");

  std::vector<ScanPoint> out;
  out.reserve(static_cast<size_t>(n_max - n_min + 1) * tau_s_list.size());
  for (int n = n_min; n <= n_max; ++n) {
    DesignParams p = params;
    p.n = n;
    CycleSpec spec = optimal_cycle(p);
    for (double tau_s : tau_s_list) {
      DynamicsConfig c = config;
      c.tau_s = tau_s;
      RateMatrix rm = build_rates(spec, c);
      JointState state = steady(rm);
      ScanPoint pt;
      pt.n = n;
      pt.tau_s = tau_s;
      pt.beta_s = system_beta(state, rm.e_s);
      pt.beta_vq = loaded_vq_beta(state, spec.virtual_gap());
      out.push_back(pt);
    }
  }
  return out;
}

int optimal_length(const DynamicsConfig& config, const DesignParams& params,
                   int n_max) {
  if (n_max < 4)
    fail(ErrorCode::invalid_argument, "dynamics: n_max must be >= 4");
  int best_n = 0;
  double best = 0.0;
  for (int n = 3; n <= n_max; ++n) {
    DesignParams p = params;
    p.n = n;
    RateMatrix rm = build_rates(optimal_cycle(p), config);
    JointState state = steady(rm);
    double beta_s = system_beta(state, rm.e_s);
    if (best_n == 0 || beta_s > best) {
      best_n = n;
      best = beta_s;
    }
  }
  return best_n;
}

}  // namespace vqtherm
