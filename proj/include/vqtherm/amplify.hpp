#pragma once

#include <utility>
#include <vector>

#include "vqtherm/cycle.hpp"

namespace vqtherm {

/// Multi-cycle machine built from a single cycle by duplicating its interior
/// levels one virtual gap higher. The coupling graph is again a chain (2n-3
/// couplings over 2(n-1) levels) and every level belongs to exactly one of the
/// n-1 parallel virtual qubits (1+j, n+j), so the total virtual norm is 1.
struct MultiCycleSpec {
  CycleSpec base;
  CycleSpec chain;  // the amplified machine as a coupling chain; its designated
                    // virtual qubits are the parallel pairs below, not (1, n').

  int levels() const noexcept { return chain.levels(); }
  double virtual_gap() const { return base.virtual_gap(); }

  /// 0-based level index pairs of the parallel virtual qubits.
  std::vector<std::pair<int, int>> parallel_pairs() const;
};

MultiCycleSpec amplify(const CycleSpec& base);

/// Steady state of the amplified chain (same Gibbs-ratio construction as a
/// single cycle; the graph is a connected tree so the state is unique).
SteadyState multi_steady_state(const MultiCycleSpec& spec);

struct MultiReport {
  double beta_v = 0.0;       // common inverse virtual temperature of all pairs
  double beta_spread = 0.0;  // max pairwise deviation of the per-pair betas
  double norm_total = 0.0;   // sum of all pair norms (1 by construction)
  double bias = 0.0;         // shared bias tanh(beta_v * E_v / 2)
};

/// Per-pair virtual temperatures and the total norm of the amplified machine.
MultiReport analyze(const MultiCycleSpec& spec);

/// Closed-form multi-cycle inverse virtual temperature
/// beta_c + (beta_c - beta_h)(n'/4 - 1/2) E_max/E_v (engine: mirrored around
/// beta_h). n' must be even; the derivation covers even bases n' = 2(n-1),
/// and for other even n' this is the formula's formal evaluation.
double multi_beta(int n_prime, const DesignParams& params);

enum class TransformKind { preserve, shift, flip };

/// One bath-mediated coupling of a virtual qubit to a real qubit of gap
/// gap_out. beta_bath must lie inside the available bath window (caller
/// contract; the op itself only checks that it is a finite bath, >= 0).
struct CouplingTransform {
  TransformKind kind = TransformKind::preserve;
  double beta_bath = 0.0;  // ignored for preserve
  double gap_out = 1.0;
};

/// Temperature arithmetic of coupling a virtual qubit out to a real qubit:
///   preserve: beta'*gap_out = beta*gap  (requires gap_out = gap)
///   shift:    beta'*gap_out = beta*gap + beta_bath*(gap_out - gap)
///   flip:     beta'*gap_out = -beta*gap + beta_bath*(gap + gap_out)
/// The output real qubit always has norm 1. Flip with the same bath and gaps
/// exchanged is an involution.
VirtualQubit transform_coupling(const VirtualQubit& vq,
                                const CouplingTransform& t);

}  // namespace vqtherm
