#include "vqtherm/vqubit.hpp"

#include <algorithm>
#include <cmath>

namespace vqtherm {

namespace {

void check_gap(double gap) {
  if (!std::isfinite(gap) || gap <= 0.0)
    fail(ErrorCode::invalid_argument, "gap must be finite and > 0");
}

void check_norm(double norm) {
  if (!std::isfinite(norm) || norm < 0.0 || norm > 1.0)
    fail(ErrorCode::invalid_argument, "norm must lie in [0, 1]");
}

}  // namespace

Bias::Bias(double value) : value_(value) {
  if (!std::isfinite(value) || value < -1.0 || value > 1.0)
    fail(ErrorCode::invalid_argument, "bias must lie in [-1, 1]");
}

double VirtualQubit::beta() const { return beta_from_bias(bias.value(), gap); }

SystemQubit make_system_qubit(double gap, double bias) {
  check_gap(gap);
  return SystemQubit{gap, Bias(bias)};
}

VirtualQubit make_virtual_qubit(double gap, double norm, double bias) {
  check_gap(gap);
  check_norm(norm);
  return VirtualQubit{gap, norm, Bias(bias)};
}

double bias_from_beta(double beta, double gap) {
  check_gap(gap);
  if (!std::isfinite(beta))
    fail(ErrorCode::invalid_argument, "beta must be finite");
  return std::tanh(0.5 * beta * gap);
}

double beta_from_bias(double bias, double gap) {
  check_gap(gap);
  Bias checked(bias);
  if (std::abs(checked.value()) == 1.0)
    fail(ErrorCode::degenerate,
         "|bias| = 1 has no finite temperature (zero-temperature or perfectly "
         "inverted input)");
  return 2.0 * std::atanh(checked.value()) / gap;
}

SwapResult swap(const SystemQubit& system, const VirtualQubit& vq) {
  check_gap(system.gap);
  check_gap(vq.gap);
  check_norm(vq.norm);
  double scale = std::max({1.0, std::abs(system.gap), std::abs(vq.gap)});
  if (std::abs(system.gap - vq.gap) > 1e-12 * scale)
    fail(ErrorCode::invalid_argument,
         "swap requires resonant gaps (system.gap = vq.gap)");

  double zs = system.bias.value();
  double zv = vq.bias.value();
  double nv = vq.norm;
  SwapResult out;
  // The norm-weighted exchange: the system sees the machine's bias with weight
  // N_v, while the addressed sub-block of the machine inherits the old system
  // bias; the remaining (1 - N_v) of machine population is untouched.
  out.system = SystemQubit{system.gap, Bias(nv * zv + (1.0 - nv) * zs)};
  out.vq = VirtualQubit{vq.gap, vq.norm, Bias(zs)};
  return out;
}

double delta_bias(const SystemQubit& system, const VirtualQubit& vq) {
  SwapResult r = swap(system, vq);
  return r.system.bias.value() - system.bias.value();
}

}  // namespace vqtherm
