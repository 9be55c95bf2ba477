#pragma once

#include "vqtherm/error.hpp"

namespace vqtherm {

/// Normalized population difference Z = (p_lower - p_upper)/(p_lower + p_upper).
/// Checked at construction: finite and within [-1, 1]. The extremes are storable
/// (pure states); converting them back to a temperature is what fails.
class Bias {
public:
  Bias() = default;
  explicit Bias(double value);

  double value() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

/// External two-level system acted on by a machine; unit norm by definition.
struct SystemQubit {
  double gap = 1.0;  // energy gap E_s > 0
  Bias bias;
};

/// A designated level pair inside a multilevel machine: gap E_v, summed
/// population (norm) N_v, and bias Z_v of the normalized two-level sub-block.
struct VirtualQubit {
  double gap = 1.0;
  double norm = 1.0;
  Bias bias;

  /// Inverse temperature consistent with the bias through Z = tanh(beta*gap/2).
  /// Rejects |bias| = 1 like beta_from_bias.
  double beta() const;
};

SystemQubit make_system_qubit(double gap, double bias);
VirtualQubit make_virtual_qubit(double gap, double norm, double bias);

/// Gibbs bias tanh(beta*gap/2) of a transition at inverse temperature beta.
double bias_from_beta(double beta, double gap);

/// Inverse of bias_from_beta, (2/gap)*artanh(bias); |bias| = 1 is rejected as an
/// unattainable zero-temperature / perfect-inversion input.
double beta_from_bias(double bias, double gap);

struct SwapResult {
  SystemQubit system;
  VirtualQubit vq;
};

/// Resonant swap between a machine's virtual qubit and an external qubit: the
/// system bias becomes N_v*Z_v + (1-N_v)*Z_s and the virtual qubit's two-level
/// sub-block takes the old system bias at unchanged norm. Requires matching gaps.
SwapResult swap(const SystemQubit& system, const VirtualQubit& vq);

/// Bias gain of the swap, N_v*(Z_v - Z_s); equals swap(...).system minus input.
double delta_bias(const SystemQubit& system, const VirtualQubit& vq);

}  // namespace vqtherm
