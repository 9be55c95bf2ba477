#pragma once

#include <string>
#include <vector>

#include "vqtherm/vqubit.hpp"

namespace vqtherm {

enum class Mode { fridge, engine };

/// Thermal bath; beta >= 0 (beta = 0 is the infinite-temperature bath).
struct Bath {
  double beta = 0.0;
};

/// Resource envelope for machine design: cycle length n, virtual-qubit gap E_v,
/// largest thermally couplable gap E_max, and the two available baths.
struct DesignParams {
  int n = 3;
  double e_v = 1.0;
  double e_max = 2.0;
  double beta_c = 0.2;   // cold bath (larger beta)
  double beta_h = 0.05;  // hot bath (smaller beta)
  Mode mode = Mode::fridge;
};

/// Throws unless n >= 3, 0 < E_v <= E_max, and beta_c >= beta_h >= 0 (finite).
void require_valid(const DesignParams& params);

/// Single n-level thermal machine stored in cycle order: energies E_1..E_n and
/// one bath per consecutive transition (j, j+1). The virtual qubit is the
/// endpoint pair (1, n) with gap E_v = E_n - E_1. The coupling graph is a chain,
/// so the machine is connected by construction.
struct CycleSpec {
  std::vector<double> energies;
  std::vector<Bath> couplings;  // size energies.size() - 1

  int levels() const noexcept { return static_cast<int>(energies.size()); }
  double gap(int j) const { return energies[j + 1] - energies[j]; }
  double virtual_gap() const { return energies.back() - energies.front(); }
};

/// Builds a CycleSpec and rejects structurally broken input (size mismatch,
/// fewer than 3 levels, non-finite entries, negative bath beta).
CycleSpec make_cycle(std::vector<double> energies, std::vector<Bath> couplings);

struct Violation {
  enum class Kind { structure, non_finite, gap_bound, bath_bound };
  Kind kind;
  std::string message;
};

/// Collects all violations instead of throwing; empty result means valid.
/// Structural checks always run; the resource checks |gap| <= E_max and
/// beta_h <= beta <= beta_c only when params is supplied. The gap-sum identity
/// E_v = sum of gaps holds by construction (gaps are derived from the stored
/// energies) and is re-checked only as a finiteness guard.
std::vector<Violation> validate(const CycleSpec& spec,
                                const DesignParams* params = nullptr);

/// Throwing wrapper around validate() used by the computational entry points.
void require_valid(const CycleSpec& spec, const DesignParams* params = nullptr);

struct SteadyState {
  std::vector<double> populations;
};

/// Stationary populations of the bath-driven chain, fixed by the Gibbs ratios
/// p_{j+1}/p_j = e^{-beta_j * gap_j}; accumulated and normalized in log space
/// so arbitrarily steep chains stay finite.
SteadyState steady_state(const CycleSpec& spec);

/// Inverse virtual temperature sum_j(beta_j * gap_j)/E_v. When every coupling
/// shares one beta this returns that beta exactly.
double beta_v_of(const CycleSpec& spec);

/// Virtual-qubit view of the cycle endpoints: gap E_v, norm p_1 + p_n, and
/// bias tanh(beta_v * E_v / 2). Rejects E_v = 0 (degenerate endpoints).
VirtualQubit virtual_qubit_of(const CycleSpec& spec);

/// Two-bath heat bookkeeping over one full cycle traversal plus the swapped
/// quantum E_v. Heats are signed as absorbed by the machine, so
/// heat_hot + heat_cold + work_or_cool = 0. Requires every coupling to sit at
/// one of the two extreme temperatures present in the spec; beta_v equal
/// to beta_c (the efficiency pole) is rejected as degenerate.
struct EfficiencyReport {
  Mode mode;
  double eta;           // (bc-bh)/(bv-bc) fridge, (bc-bh)/(bc-bv) engine
  double heat_hot;      // absorbed from the hot bath per cycle
  double heat_cold;     // absorbed from the cold bath (negative = released)
  double work_or_cool;  // +E_v drawn from the target (fridge), -E_v delivered (engine)
};

EfficiencyReport efficiency(const CycleSpec& spec);

}  // namespace vqtherm
