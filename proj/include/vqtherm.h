/* C interface to the virtual-qubit thermal machine library.
 *
 * Every fallible call returns a vqt_status; on failure the outputs are left
 * untouched and vqt_last_error() holds a human-readable message for the
 * current thread. Opaque handles are created and released in pairs
 * (vqt_*_create / vqt_*_free); functions documented as returning a borrowed
 * pointer do not transfer ownership.
 */
#ifndef VQTHERM_H
#define VQTHERM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vqt_status {
  VQT_OK = 0,
  VQT_ERR_INVALID_ARGUMENT = 1, /* bad value, wrong size, non-finite input */
  VQT_ERR_CONSTRAINT = 2,       /* resource bound (gap or bath window) violated */
  VQT_ERR_DEGENERATE = 3,       /* ill-posed machine (zero gap, pole, ...) */
  VQT_ERR_SOLVER = 4            /* numerical solve failed or internal error */
} vqt_status;

/* Message of the most recent failing call on this thread ("" after success). */
const char* vqt_last_error(void);

typedef enum vqt_mode { VQT_MODE_FRIDGE = 0, VQT_MODE_ENGINE = 1 } vqt_mode;

typedef enum vqt_placement {
  VQT_PLACEMENT_LOWER = 0,
  VQT_PLACEMENT_UPPER = 1
} vqt_placement;

typedef enum vqt_objective {
  VQT_OBJECTIVE_MAX_BIAS = 0,      /* most extreme virtual bias */
  VQT_OBJECTIVE_MAX_NORM_BIAS = 1, /* largest norm-weighted bias */
  VQT_OBJECTIVE_MAX_SWAP_GAIN = 2  /* largest one-swap bias gain on a target */
} vqt_objective;

typedef enum vqt_transform {
  VQT_TRANSFORM_PRESERVE = 0, /* bare swap out; requires equal gaps */
  VQT_TRANSFORM_SHIFT = 1,    /* bath-assisted gap change, same ordering */
  VQT_TRANSFORM_FLIP = 2      /* bath-assisted inversion of the temperature */
} vqt_transform;

/* Resource envelope for machine design. */
typedef struct vqt_design_params {
  int n;         /* cycle length (levels), >= 3 */
  double e_v;    /* virtual-qubit gap, 0 < e_v <= e_max */
  double e_max;  /* largest thermally couplable gap */
  double beta_c; /* cold bath inverse temperature (the larger one) */
  double beta_h; /* hot bath inverse temperature, >= 0 */
  int mode;      /* vqt_mode */
} vqt_design_params;

/* Fills the default envelope: n=3, e_v=1, e_max=2, beta_c=0.2, beta_h=0.05,
 * fridge. */
void vqt_design_params_default(vqt_design_params* params);

/* ---- Two-level building blocks ---- */

/* Gibbs bias tanh(beta*gap/2) of a transition at inverse temperature beta. */
vqt_status vqt_bias_from_beta(double beta, double gap, double* out_bias);

/* Inverse of the above; |bias| = 1 is rejected as degenerate. */
vqt_status vqt_beta_from_bias(double bias, double gap, double* out_beta);

/* Resonant swap of an external qubit (gap_s, z_s) with a machine's virtual
 * qubit (gap_v, n_v, z_v): the system bias becomes n_v*z_v + (1-n_v)*z_s and
 * the addressed machine sub-block takes z_s. Requires gap_s = gap_v. */
vqt_status vqt_swap(double gap_s, double z_s, double gap_v, double n_v,
                    double z_v, double* out_z_system, double* out_z_vq);

/* Bias gain n_v*(z_v - z_s) of the swap on the external qubit. */
vqt_status vqt_delta_bias(double gap_s, double z_s, double gap_v, double n_v,
                          double z_v, double* out_delta);

/* Temperature arithmetic of coupling a virtual qubit (gap_in, z_in) out to a
 * real qubit of gap gap_out through a bath at beta_bath (ignored for
 * preserve). The output qubit has norm 1; outputs are nullable. */
vqt_status vqt_transform_coupling(double gap_in, double z_in, int kind,
                                  double beta_bath, double gap_out,
                                  double* out_bias, double* out_beta);

/* ---- Single n-level cycles (opaque handle) ---- */

typedef struct vqt_cycle vqt_cycle;

/* Builds a cycle from level energies (cycle order) and one bath inverse
 * temperature per consecutive transition (n_levels - 1 of them). */
vqt_status vqt_cycle_create(const double* energies, int n_levels,
                            const double* coupling_betas, vqt_cycle** out);

/* The optimal cycle for the envelope: every transition at +-e_max around the
 * virtual gap, cold bath on climbs and hot bath on drops (engines mirrored). */
vqt_status vqt_cycle_optimal(const vqt_design_params* params, vqt_cycle** out);

void vqt_cycle_free(vqt_cycle* cycle);

/* Number of levels (0 for NULL). */
int vqt_cycle_levels(const vqt_cycle* cycle);

/* Copies the level energies (levels values) into out. */
vqt_status vqt_cycle_energies(const vqt_cycle* cycle, double* out);

/* Copies the coupling inverse temperatures (levels - 1 values) into out. */
vqt_status vqt_cycle_couplings(const vqt_cycle* cycle, double* out);

/* VQT_OK if the cycle is structurally valid and, when params is non-NULL,
 * also within its gap and bath bounds; otherwise the matching error code. */
vqt_status vqt_cycle_check(const vqt_cycle* cycle,
                           const vqt_design_params* params);

/* Stationary populations (levels values) fixed by the bath Gibbs ratios. */
vqt_status vqt_cycle_steady_state(const vqt_cycle* cycle, double* out);

/* Virtual-qubit view of the cycle endpoints; outputs are nullable. */
vqt_status vqt_cycle_virtual_qubit(const vqt_cycle* cycle, double* out_gap,
                                   double* out_norm, double* out_bias,
                                   double* out_beta);

/* Two-bath heat bookkeeping per cycle traversal; heats are signed as absorbed
 * by the machine and heat_hot + heat_cold + work_or_cool = 0. Outputs are
 * nullable; out_mode receives a vqt_mode. */
vqt_status vqt_cycle_efficiency(const vqt_cycle* cycle, int* out_mode,
                                double* out_eta, double* out_heat_hot,
                                double* out_heat_cold,
                                double* out_work_or_cool);

/* ---- Closed forms and design search ---- */

/* Inverse virtual temperature of the optimal cycle. */
vqt_status vqt_closed_beta_v(const vqt_design_params* params, double* out);

/* Virtual-qubit norm of the optimal cycle. */
vqt_status vqt_closed_norm(const vqt_design_params* params, double* out);

/* n -> infinity limit of the norm, 1 - e^{-beta_c*e_max} for both modes. */
vqt_status vqt_asymptotic_norm(const vqt_design_params* params, double* out);

/* Change of beta_v*e_v per two extra levels: +(beta_c-beta_h)*e_max for
 * fridges, negated for engines. */
vqt_status vqt_marginal_gain(const vqt_design_params* params, double* out);

/* Decomposition delta_e = m*e_max + delta of a level offset reached through
 * j-1 bounded transitions, with the extremal heat split q_plus + q_minus =
 * delta_e. Outputs are nullable. */
vqt_status vqt_max_q_plus(int j, double delta_e_1j, double e_max, int* out_m,
                          double* out_delta, double* out_q_plus,
                          double* out_q_minus);

/* Exhaustive search over cycles whose gaps are multiples of energy_step with
 * |gap| <= e_max and sum e_v, and whose couplings pick from the temperature
 * list. Returns the best cycle for the objective (mirrored for engines) and,
 * optionally, the objective value and the number of evaluated candidates. */
vqt_status vqt_brute_force_best(const vqt_design_params* params,
                                double energy_step, const double* temperatures,
                                int n_temperatures, int objective, double z_s,
                                vqt_cycle** out_best, double* out_value,
                                unsigned long long* out_evaluated);

/* Coldest achievable temperature T = 1/beta_v of multi-cycle machines at the
 * given (even) dimensions; writes count values into out_t_s. */
vqt_status vqt_third_law_scaling(const vqt_design_params* params,
                                 const int* n_primes, int count,
                                 double* out_t_s);

/* Limit of T_s * n': 4*e_v/((beta_c-beta_h)*e_max). */
vqt_status vqt_third_law_limit(const vqt_design_params* params, double* out);

/* ---- Multi-cycle amplification (opaque handle) ---- */

typedef struct vqt_multi vqt_multi;

/* Duplicates the base cycle's interior one virtual gap higher, producing a
 * 2(n-1)-level chain whose n-1 parallel virtual qubits share the base
 * temperature and jointly carry norm 1. */
vqt_status vqt_multi_amplify(const vqt_cycle* base, vqt_multi** out);

void vqt_multi_free(vqt_multi* multi);

/* Number of chain levels (0 for NULL). */
int vqt_multi_levels(const vqt_multi* multi);

/* Borrowed view of the amplified chain; owned by multi, do not free. */
const vqt_cycle* vqt_multi_chain(const vqt_multi* multi);

/* Stationary populations of the chain (vqt_multi_levels values). */
vqt_status vqt_multi_steady_state(const vqt_multi* multi, double* out);

/* Shared inverse virtual temperature, its spread across the parallel pairs,
 * the total norm (1 by construction) and the shared bias; nullable outputs. */
vqt_status vqt_multi_report(const vqt_multi* multi, double* out_beta_v,
                            double* out_beta_spread, double* out_norm_total,
                            double* out_bias);

/* Closed-form multi-cycle inverse virtual temperature at even dimension
 * n' >= 4 (odd dimensions are rejected). */
vqt_status vqt_multi_beta(int n_prime, const vqt_design_params* params,
                          double* out);

/* ---- Concatenated qutrit chains ---- */

typedef struct vqt_concat_params {
  int k;         /* number of qutrit stages, >= 1 */
  double e_v;    /* exposed virtual gap */
  double e_max;  /* full span of every stage */
  double beta_c; /* cold bath inverse temperature */
  double beta_h; /* hot bath inverse temperature */
  int mode;      /* vqt_mode */
  int placement; /* vqt_placement of the exposed pair on stage 1 */
} vqt_concat_params;

/* Fills the default chain: k=1, e_v=1, e_max=2, beta_c=0.2, beta_h=0.05,
 * fridge, lower placement. */
void vqt_concat_params_default(vqt_concat_params* params);

/* Inverse virtual temperature of the chain (placement-independent); matches
 * the (k+2)-level optimal cycle exactly. */
vqt_status vqt_concat_beta(const vqt_concat_params* params, double* out);

/* Norm of the exposed virtual qubit for the chosen placement. */
vqt_status vqt_concat_norm(const vqt_concat_params* params, double* out);

/* k -> infinity limit of the norm: 1 for the recommended placement (fridge
 * upper / engine lower), a bath-limited constant otherwise. */
vqt_status vqt_concat_norm_limit(const vqt_concat_params* params, double* out);

/* Stationary populations, one normalized triple per stage: 3*k values,
 * stage 1 first. */
vqt_status vqt_concat_steady(const vqt_concat_params* params, double* out);

/* Hilbert-space cost of the chain: 3^k levels (-1 once it overflows 64-bit),
 * log3(levels) = k, and the attained beta_v. Outputs are nullable. */
vqt_status vqt_concat_log_dimension(const vqt_concat_params* params,
                                    long long* out_levels, double* out_log3,
                                    double* out_beta_v);

/* ---- Joint machine + external qubit dynamics ---- */

typedef struct vqt_dynamics_config {
  double tau_beta; /* thermal relaxation timescale (+inf disables) */
  double tau_s;    /* system-environment timescale (+inf disables) */
  double tau_swap; /* machine-system swap timescale (+inf disables) */
  double beta_env; /* environment seen by the external qubit */
  double e_s;      /* system gap; NaN = resonant with the virtual gap */
} vqt_dynamics_config;

/* Fills the defaults: tau_beta = tau_s = tau_swap = 1, beta_env = beta_c of
 * params (0.2 when params is NULL), e_s = NaN (resonant). */
void vqt_dynamics_config_default(vqt_dynamics_config* config,
                                 const vqt_design_params* params);

/* Stationary state of the 2n-state joint chain (machine level x system
 * level). out_populations (2n values, index 2*level + system_excited),
 * out_beta_s (system marginal inverse temperature ln(p0/p1)/e_s) and
 * out_beta_vq (loaded virtual-qubit inverse temperature) are nullable. */
vqt_status vqt_dynamics_steady(const vqt_cycle* cycle,
                               const vqt_dynamics_config* config,
                               double* out_populations, double* out_beta_s,
                               double* out_beta_vq);

/* Cycle length n in [3, n_max] whose optimal cycle cools the external qubit
 * best (largest steady beta_s); ties break toward smaller n. n_max >= 4. */
vqt_status vqt_optimal_length(const vqt_dynamics_config* config,
                              const vqt_design_params* params, int n_max,
                              int* out_n);

#ifdef __cplusplus
}
#endif

#endif /* VQTHERM_H */
