#pragma once

#include <cstdint>
#include <vector>

#include "vqtherm/cycle.hpp"

namespace vqtherm {

/// The optimal n-level cycle under the given resources: every transition pushed
/// to +-E_max around the virtual gap, cold bath on positive gaps and hot on
/// negative gaps (exchanged for engines).
CycleSpec optimal_cycle(const DesignParams& params);

/// Closed-form inverse virtual temperature of the optimal cycle.
double closed_beta_v(const DesignParams& params);

/// Closed-form virtual-qubit norm of the optimal cycle.
double closed_norm(const DesignParams& params);

/// n -> infinity limit of closed_norm: 1 - e^{-beta_c * E_max} for both modes.
double asymptotic_norm(const DesignParams& params);

/// (beta_v^{(n+2)} - beta_v^{(n)}) * E_v: the fixed temperature price of two
/// extra levels; +(beta_c-beta_h)*E_max for fridges, negated for engines.
double marginal_gain(const DesignParams& params);

/// Decomposition of a level offset dE = m*E_max + delta (0 <= delta < E_max)
/// together with the extremal heat split over j-1 bounded transitions that
/// reach that offset: q_plus is the largest achievable sum of positive gaps,
/// q_minus the matching sum of negative gaps (q_plus + q_minus = dE).
struct GapBreakdown {
  int m = 0;
  double delta = 0.0;
  double q_plus = 0.0;
  double q_minus = 0.0;
};

GapBreakdown max_q_plus(int j, double delta_e_1j, double e_max);

/// Discrete search space for the brute-force oracle: gaps are integer multiples
/// of energy_step (|gap| <= E_max, sum = E_v) and each transition picks one of
/// the candidate bath temperatures.
struct SearchGrid {
  double energy_step = 0.5;
  std::vector<double> temperatures;
};

enum class Objective { max_bias, max_norm_bias, max_swap_gain };

struct BruteForceResult {
  CycleSpec spec;
  double value = 0.0;
  std::uint64_t evaluated = 0;
};

/// Exhaustive enumeration over the grid; fridge mode maximizes the objective as
/// stated (Z_v, N_v*Z_v, or N_v*(Z_v - z_s)), engine mode maximizes the mirror
/// (-Z_v, -N_v*Z_v, N_v*(z_s - Z_v)). Ties resolve to the lexicographically
/// smallest gap sequence, then bath sequence, by enumeration order. E_v and
/// E_max must be integer multiples of the step so the sum filter is exact.
BruteForceResult brute_force_best(const DesignParams& params,
                                  const SearchGrid& grid, Objective objective,
                                  double z_s = 0.0);

struct ThirdLawPoint {
  int n_prime = 0;
  double t_s = 0.0;  // 1/beta_v at that multi-cycle dimension
};

/// Coldest temperature reachable with a multi-cycle machine of dimension n';
/// T_s * n' approaches third_law_limit as n' grows (dimension form of the
/// third law: T -> 0 requires unbounded dimension).
std::vector<ThirdLawPoint> third_law_scaling(const DesignParams& params,
                                             const std::vector<int>& n_list);

/// Limit constant 4*E_v/((beta_c - beta_h)*E_max).
double third_law_limit(const DesignParams& params);

}  // namespace vqtherm
