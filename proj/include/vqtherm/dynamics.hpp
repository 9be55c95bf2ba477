#pragma once

#include <array>
#include <limits>
#include <vector>

#include "vqtherm/cycle.hpp"

namespace vqtherm {

/// Timescales and environment for the machine + external-qubit rate model.
/// All timescales must be positive; +infinity disables the corresponding link.
struct DynamicsConfig {
  double tau_beta = 1.0;  // relaxation timescale of each thermal coupling
  double tau_s = 1.0;     // system-environment equilibration timescale
  double tau_swap = 1.0;  // machine-system swap timescale
  double beta_env = 0.2;  // environment temperature seen by the external qubit
  // System gap; NaN means resonant with the machine's virtual gap (the default,
  // and the only value the swap pairing supports).
  double e_s = std::numeric_limits<double>::quiet_NaN();
};

/// Markov generator over the 2n joint states (machine level j, system level s),
/// index i = 2j + s with s = 0 ground / 1 excited; column rates sum to zero.
struct RateMatrix {
  int machine_levels = 0;
  double e_s = 0.0;            // resolved system gap
  std::vector<double> gen;     // row-major (2n) x (2n)

  int dim() const noexcept { return 2 * machine_levels; }
  double& at(int r, int c) { return gen[static_cast<size_t>(r) * dim() + c]; }
  double at(int r, int c) const { return gen[static_cast<size_t>(r) * dim() + c]; }
};

/// Thermal links act on both system sectors with rates summing to 1/tau_beta
/// and ratio e^{-beta*gap}; the environment relaxes the system toward bias
/// tanh(beta_env*E_s/2) on every machine level; the swap exchanges
/// |1, excited> and |n, ground> symmetrically at 1/tau_swap.
RateMatrix build_rates(const CycleSpec& spec, const DynamicsConfig& config);

struct JointState {
  int machine_levels = 0;
  std::vector<double> populations;  // 2n, same indexing as RateMatrix
  double clamp_magnitude = 0.0;     // largest negative solver residue clamped

  std::vector<double> machine_marginal() const;
  std::array<double, 2> system_marginal() const;
};

/// Unique stationary distribution by dense solve with the normalization row
/// replacing one balance row; verifies the balance residual (<= 1e-10 relative
/// to the largest rate) and rejects reducible generators, which have more than
/// one steady state.
JointState steady(const RateMatrix& rates);

/// ln(p_ground/p_excited)/E_s of the system marginal.
double system_beta(const JointState& state, double e_s);

/// ln(p_1/p_n)/E_v of the machine marginal: the loaded virtual-qubit
/// temperature (secondary observable next to the system's beta_s).
double loaded_vq_beta(const JointState& state, double e_v);

struct ScanPoint {
  int n = 0;
  double tau_s = 0.0;
  double beta_s = 0.0;
  double beta_vq = 0.0;
};

/// Builds the optimal n-cycle for every n in [n_min, n_max], solves the joint
/// steady state at each tau_s, and reports (n, tau_s, beta_s, beta_vq) rows in
/// deterministic n-major order. params.n is ignored in favor of the range.
std::vector<ScanPoint> scan_cycle_length(const DesignParams& params, int n_min,
                                         int n_max,
                                         const std::vector<double>& tau_s_list,
                                         const DynamicsConfig& config);

/// argmax over n in [3, n_max] of the steady-state beta_s; ties break toward
/// smaller n. Requires n_max >= 4.
int optimal_length(const DynamicsConfig& config, const DesignParams& params,
                   int n_max);

}  // namespace vqtherm
