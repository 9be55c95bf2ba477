#pragma once

#include <array>
#include <vector>

#include "vqtherm/cycle.hpp"

namespace vqtherm {

/// Which transition of the first qutrit carries the exposed virtual qubit.
enum class Placement { lower, upper };

/// Chain of k qutrit stages, each spanning E_max, linked by degenerate swaps;
/// stage 1 exposes a virtual qubit of gap E_v whose temperature compounds the
/// whole chain. A k-stage chain matches the (k+2)-level single cycle exactly.
struct ConcatSpec {
  int k = 1;
  double e_v = 1.0;
  double e_max = 2.0;
  double beta_c = 0.2;
  double beta_h = 0.05;
  Mode mode = Mode::fridge;
  Placement placement = Placement::lower;
};

void require_valid(const ConcatSpec& spec);

/// Inverse virtual temperature of the k-stage chain (placement-independent).
double concat_beta(const ConcatSpec& spec);

/// Steady-state populations, one normalized triple per stage (stage 1 first).
/// Only stage 1 depends on the placement.
struct QutritChainState {
  std::vector<std::array<double, 3>> triples;
};

QutritChainState concat_steady(const ConcatSpec& spec);

/// Norm of the exposed virtual qubit on stage 1 for the chosen placement.
double concat_norm(const ConcatSpec& spec);

/// Norm in the k -> infinity limit (beta_v diverging): 1 for the recommended
/// placement (fridge upper / engine lower), a bath-limited constant otherwise.
double concat_norm_limit(const ConcatSpec& spec);

struct LogDimension {
  int k = 0;
  long long levels = 0;      // 3^k, or -1 once it exceeds the integer range
  double log3_levels = 0.0;  // always k
  double beta_v = 0.0;
};

/// Hilbert-space cost of the concatenated design, overflow-safe via the log
/// form; contrast with the multi-cycle's linear dimension cost.
LogDimension concat_log_dimension(const ConcatSpec& spec);

}  // namespace vqtherm
