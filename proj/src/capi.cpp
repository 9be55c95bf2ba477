#include "vqtherm.h"

#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "vqtherm/amplify.hpp"
#include "vqtherm/concat.hpp"
#include "vqtherm/cycle.hpp"
#include "vqtherm/design.hpp"
#include "vqtherm/dynamics.hpp"
#include "vqtherm/error.hpp"
#include "vqtherm/vqubit.hpp"

struct vqt_cycle {
  vqtherm::CycleSpec spec;
};

struct vqt_multi {
  vqtherm::MultiCycleSpec spec;
  vqt_cycle chain_view;  // borrowed-out copy of spec.chain
};

namespace {

thread_local std::string g_last_error;

vqt_status to_status(vqtherm::ErrorCode code) {
  switch (code) {
    case vqtherm::ErrorCode::invalid_argument:
      return VQT_ERR_INVALID_ARGUMENT;
    case vqtherm::ErrorCode::constraint:
      return VQT_ERR_CONSTRAINT;
    case vqtherm::ErrorCode::degenerate:
      return VQT_ERR_DEGENERATE;
    case vqtherm::ErrorCode::solver:
      return VQT_ERR_SOLVER;
  }
  return VQT_ERR_SOLVER;
}

template <typename Fn>
vqt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VQT_OK;
  } catch (const vqtherm::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VQT_ERR_SOLVER;
  } catch (...) {
    g_last_error = "unknown internal error";
    return VQT_ERR_SOLVER;
  }
}

vqtherm::Mode to_mode(int mode) {
  if (mode == VQT_MODE_FRIDGE) return vqtherm::Mode::fridge;
  if (mode == VQT_MODE_ENGINE) return vqtherm::Mode::engine;
  vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                "mode must be VQT_MODE_FRIDGE or VQT_MODE_ENGINE");
}

vqtherm::DesignParams to_params(const vqt_design_params* p) {
  if (p == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument, "params is NULL");
  return vqtherm::DesignParams{p->n,      p->e_v,    p->e_max,
                               p->beta_c, p->beta_h, to_mode(p->mode)};
}

vqtherm::ConcatSpec to_concat(const vqt_concat_params* p) {
  if (p == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument, "params is NULL");
  vqtherm::Placement placement;
  if (p->placement == VQT_PLACEMENT_LOWER)
    placement = vqtherm::Placement::lower;
  else if (p->placement == VQT_PLACEMENT_UPPER)
    placement = vqtherm::Placement::upper;
  else
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                  "placement must be VQT_PLACEMENT_LOWER or _UPPER");
  return vqtherm::ConcatSpec{p->k,      p->e_v,         p->e_max, p->beta_c,
                             p->beta_h, to_mode(p->mode), placement};
}

vqtherm::DynamicsConfig to_dynamics(const vqt_dynamics_config* c) {
  if (c == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument, "config is NULL");
  return vqtherm::DynamicsConfig{c->tau_beta, c->tau_s, c->tau_swap,
                                 c->beta_env, c->e_s};
}

const vqtherm::CycleSpec& deref(const vqt_cycle* cycle) {
  if (cycle == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument, "cycle handle is NULL");
  return cycle->spec;
}

const vqtherm::MultiCycleSpec& deref(const vqt_multi* multi) {
  if (multi == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument, "multi handle is NULL");
  return multi->spec;
}

void require_out(const void* out, const char* name) {
  if (out == nullptr)
    vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                  std::string(name) + " is NULL");
}

}  // namespace

extern "C" {

const char* vqt_last_error(void) { return g_last_error.c_str(); }

void vqt_design_params_default(vqt_design_params* params) {
  if (params == nullptr) return;
  vqtherm::DesignParams d{};
  params->n = d.n;
  params->e_v = d.e_v;
  params->e_max = d.e_max;
  params->beta_c = d.beta_c;
  params->beta_h = d.beta_h;
  params->mode = VQT_MODE_FRIDGE;
}

vqt_status vqt_bias_from_beta(double beta, double gap, double* out_bias) {
  return guarded([&] {
    require_out(out_bias, "out_bias");
    *out_bias = vqtherm::bias_from_beta(beta, gap);
  });
}

vqt_status vqt_beta_from_bias(double bias, double gap, double* out_beta) {
  return guarded([&] {
    require_out(out_beta, "out_beta");
    *out_beta = vqtherm::beta_from_bias(bias, gap);
  });
}

vqt_status vqt_swap(double gap_s, double z_s, double gap_v, double n_v,
                    double z_v, double* out_z_system, double* out_z_vq) {
  return guarded([&] {
    vqtherm::SwapResult r =
        vqtherm::swap(vqtherm::make_system_qubit(gap_s, z_s),
                      vqtherm::make_virtual_qubit(gap_v, n_v, z_v));
    if (out_z_system != nullptr) *out_z_system = r.system.bias.value();
    if (out_z_vq != nullptr) *out_z_vq = r.vq.bias.value();
  });
}

vqt_status vqt_delta_bias(double gap_s, double z_s, double gap_v, double n_v,
                          double z_v, double* out_delta) {
  return guarded([&] {
    require_out(out_delta, "out_delta");
    *out_delta =
        vqtherm::delta_bias(vqtherm::make_system_qubit(gap_s, z_s),
                            vqtherm::make_virtual_qubit(gap_v, n_v, z_v));
  });
}

vqt_status vqt_transform_coupling(double gap_in, double z_in, int kind,
                                  double beta_bath, double gap_out,
                                  double* out_bias, double* out_beta) {
  return guarded([&] {
    vqtherm::TransformKind tk;
    if (kind == VQT_TRANSFORM_PRESERVE)
      tk = vqtherm::TransformKind::preserve;
    else if (kind == VQT_TRANSFORM_SHIFT)
      tk = vqtherm::TransformKind::shift;
    else if (kind == VQT_TRANSFORM_FLIP)
      tk = vqtherm::TransformKind::flip;
    else
      vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                    "kind must be a vqt_transform value");
    vqtherm::VirtualQubit in = vqtherm::make_virtual_qubit(gap_in, 1.0, z_in);
    vqtherm::VirtualQubit out = vqtherm::transform_coupling(
        in, vqtherm::CouplingTransform{tk, beta_bath, gap_out});
    if (out_bias != nullptr) *out_bias = out.bias.value();
    if (out_beta != nullptr) *out_beta = out.beta();
  });
}

vqt_status vqt_cycle_create(const double* energies, int n_levels,
                            const double* coupling_betas, vqt_cycle** out) {
  return guarded([&] {
    require_out(out, "out");
    require_out(energies, "energies");
    require_out(coupling_betas, "coupling_betas");
    if (n_levels < 1)
      vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                    "n_levels must be positive");
    std::vector<double> e(energies, energies + n_levels);
    std::vector<vqtherm::Bath> baths(static_cast<size_t>(n_levels) - 1);
    for (int j = 0; j + 1 < n_levels; ++j)
      baths[static_cast<size_t>(j)].beta = coupling_betas[j];
    vqtherm::CycleSpec spec =
        vqtherm::make_cycle(std::move(e), std::move(baths));
    *out = new vqt_cycle{std::move(spec)};
  });
}

vqt_status vqt_cycle_optimal(const vqt_design_params* params,
                             vqt_cycle** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = new vqt_cycle{vqtherm::optimal_cycle(to_params(params))};
  });
}

void vqt_cycle_free(vqt_cycle* cycle) { delete cycle; }

int vqt_cycle_levels(const vqt_cycle* cycle) {
  return cycle == nullptr ? 0 : cycle->spec.levels();
}

vqt_status vqt_cycle_energies(const vqt_cycle* cycle, double* out) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    require_out(out, "out");
    std::memcpy(out, spec.energies.data(),
                spec.energies.size() * sizeof(double));
  });
}

vqt_status vqt_cycle_couplings(const vqt_cycle* cycle, double* out) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    require_out(out, "out");
    for (size_t j = 0; j < spec.couplings.size(); ++j)
      out[j] = spec.couplings[j].beta;
  });
}

vqt_status vqt_cycle_check(const vqt_cycle* cycle,
                           const vqt_design_params* params) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    if (params == nullptr) {
      vqtherm::require_valid(spec);
    } else {
      vqtherm::DesignParams p = to_params(params);
      vqtherm::require_valid(p);
      vqtherm::require_valid(spec, &p);
    }
  });
}

vqt_status vqt_cycle_steady_state(const vqt_cycle* cycle, double* out) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    require_out(out, "out");
    vqtherm::SteadyState ss = vqtherm::steady_state(spec);
    std::memcpy(out, ss.populations.data(),
                ss.populations.size() * sizeof(double));
  });
}

vqt_status vqt_cycle_virtual_qubit(const vqt_cycle* cycle, double* out_gap,
                                   double* out_norm, double* out_bias,
                                   double* out_beta) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    vqtherm::VirtualQubit vq = vqtherm::virtual_qubit_of(spec);
    if (out_gap != nullptr) *out_gap = vq.gap;
    if (out_norm != nullptr) *out_norm = vq.norm;
    if (out_bias != nullptr) *out_bias = vq.bias.value();
    if (out_beta != nullptr) *out_beta = vqtherm::beta_v_of(spec);
  });
}

vqt_status vqt_cycle_efficiency(const vqt_cycle* cycle, int* out_mode,
                                double* out_eta, double* out_heat_hot,
                                double* out_heat_cold,
                                double* out_work_or_cool) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    vqtherm::EfficiencyReport rep = vqtherm::efficiency(spec);
    if (out_mode != nullptr)
      *out_mode = rep.mode == vqtherm::Mode::fridge ? VQT_MODE_FRIDGE
                                                    : VQT_MODE_ENGINE;
    if (out_eta != nullptr) *out_eta = rep.eta;
    if (out_heat_hot != nullptr) *out_heat_hot = rep.heat_hot;
    if (out_heat_cold != nullptr) *out_heat_cold = rep.heat_cold;
    if (out_work_or_cool != nullptr) *out_work_or_cool = rep.work_or_cool;
  });
}

vqt_status vqt_closed_beta_v(const vqt_design_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::closed_beta_v(to_params(params));
  });
}

vqt_status vqt_closed_norm(const vqt_design_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::closed_norm(to_params(params));
  });
}

vqt_status vqt_asymptotic_norm(const vqt_design_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::asymptotic_norm(to_params(params));
  });
}

vqt_status vqt_marginal_gain(const vqt_design_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::marginal_gain(to_params(params));
  });
}

vqt_status vqt_max_q_plus(int j, double delta_e_1j, double e_max, int* out_m,
                          double* out_delta, double* out_q_plus,
                          double* out_q_minus) {
  return guarded([&] {
    vqtherm::GapBreakdown b = vqtherm::max_q_plus(j, delta_e_1j, e_max);
    if (out_m != nullptr) *out_m = b.m;
    if (out_delta != nullptr) *out_delta = b.delta;
    if (out_q_plus != nullptr) *out_q_plus = b.q_plus;
    if (out_q_minus != nullptr) *out_q_minus = b.q_minus;
  });
}

vqt_status vqt_brute_force_best(const vqt_design_params* params,
                                double energy_step, const double* temperatures,
                                int n_temperatures, int objective, double z_s,
                                vqt_cycle** out_best, double* out_value,
                                unsigned long long* out_evaluated) {
  return guarded([&] {
    require_out(out_best, "out_best");
    require_out(temperatures, "temperatures");
    if (n_temperatures < 1)
      vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                    "n_temperatures must be positive");
    vqtherm::Objective obj;
    if (objective == VQT_OBJECTIVE_MAX_BIAS)
      obj = vqtherm::Objective::max_bias;
    else if (objective == VQT_OBJECTIVE_MAX_NORM_BIAS)
      obj = vqtherm::Objective::max_norm_bias;
    else if (objective == VQT_OBJECTIVE_MAX_SWAP_GAIN)
      obj = vqtherm::Objective::max_swap_gain;
    else
      vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                    "objective must be a vqt_objective value");
    vqtherm::SearchGrid grid{
        energy_step,
        std::vector<double>(temperatures, temperatures + n_temperatures)};
    vqtherm::BruteForceResult r =
        vqtherm::brute_force_best(to_params(params), grid, obj, z_s);
    if (out_value != nullptr) *out_value = r.value;
    if (out_evaluated != nullptr) *out_evaluated = r.evaluated;
    *out_best = new vqt_cycle{std::move(r.spec)};
  });
}

vqt_status vqt_third_law_scaling(const vqt_design_params* params,
                                 const int* n_primes, int count,
                                 double* out_t_s) {
  return guarded([&] {
    require_out(n_primes, "n_primes");
    require_out(out_t_s, "out_t_s");
    if (count < 1)
      vqtherm::fail(vqtherm::ErrorCode::invalid_argument,
                    "count must be positive");
    std::vector<vqtherm::ThirdLawPoint> pts = vqtherm::third_law_scaling(
        to_params(params), std::vector<int>(n_primes, n_primes + count));
    for (int i = 0; i < count; ++i) out_t_s[i] = pts[static_cast<size_t>(i)].t_s;
  });
}

vqt_status vqt_third_law_limit(const vqt_design_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::third_law_limit(to_params(params));
  });
}

vqt_status vqt_multi_amplify(const vqt_cycle* base, vqt_multi** out) {
  return guarded([&] {
    require_out(out, "out");
    vqtherm::MultiCycleSpec spec = vqtherm::amplify(deref(base));
    auto* handle = new vqt_multi{std::move(spec), {}};
    handle->chain_view.spec = handle->spec.chain;
    *out = handle;
  });
}

void vqt_multi_free(vqt_multi* multi) { delete multi; }

int vqt_multi_levels(const vqt_multi* multi) {
  return multi == nullptr ? 0 : multi->spec.levels();
}

const vqt_cycle* vqt_multi_chain(const vqt_multi* multi) {
  return multi == nullptr ? nullptr : &multi->chain_view;
}

vqt_status vqt_multi_steady_state(const vqt_multi* multi, double* out) {
  return guarded([&] {
    const vqtherm::MultiCycleSpec& spec = deref(multi);
    require_out(out, "out");
    vqtherm::SteadyState ss = vqtherm::multi_steady_state(spec);
    std::memcpy(out, ss.populations.data(),
                ss.populations.size() * sizeof(double));
  });
}

vqt_status vqt_multi_report(const vqt_multi* multi, double* out_beta_v,
                            double* out_beta_spread, double* out_norm_total,
                            double* out_bias) {
  return guarded([&] {
    vqtherm::MultiReport rep = vqtherm::analyze(deref(multi));
    if (out_beta_v != nullptr) *out_beta_v = rep.beta_v;
    if (out_beta_spread != nullptr) *out_beta_spread = rep.beta_spread;
    if (out_norm_total != nullptr) *out_norm_total = rep.norm_total;
    if (out_bias != nullptr) *out_bias = rep.bias;
  });
}

vqt_status vqt_multi_beta(int n_prime, const vqt_design_params* params,
                          double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::multi_beta(n_prime, to_params(params));
  });
}

void vqt_concat_params_default(vqt_concat_params* params) {
  if (params == nullptr) return;
  vqtherm::ConcatSpec d{};
  params->k = d.k;
  params->e_v = d.e_v;
  params->e_max = d.e_max;
  params->beta_c = d.beta_c;
  params->beta_h = d.beta_h;
  params->mode = VQT_MODE_FRIDGE;
  params->placement = VQT_PLACEMENT_LOWER;
}

vqt_status vqt_concat_beta(const vqt_concat_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::concat_beta(to_concat(params));
  });
}

vqt_status vqt_concat_norm(const vqt_concat_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::concat_norm(to_concat(params));
  });
}

vqt_status vqt_concat_norm_limit(const vqt_concat_params* params,
                                 double* out) {
  return guarded([&] {
    require_out(out, "out");
    *out = vqtherm::concat_norm_limit(to_concat(params));
  });
}

vqt_status vqt_concat_steady(const vqt_concat_params* params, double* out) {
  return guarded([&] {
    require_out(out, "out");
    vqtherm::QutritChainState state =
        vqtherm::concat_steady(to_concat(params));
    size_t i = 0;
    for (const std::array<double, 3>& t : state.triples)
      for (double v : t) out[i++] = v;
  });
}

vqt_status vqt_concat_log_dimension(const vqt_concat_params* params,
                                    long long* out_levels, double* out_log3,
                                    double* out_beta_v) {
  return guarded([&] {
    vqtherm::LogDimension d =
        vqtherm::concat_log_dimension(to_concat(params));
    if (out_levels != nullptr) *out_levels = d.levels;
    if (out_log3 != nullptr) *out_log3 = d.log3_levels;
    if (out_beta_v != nullptr) *out_beta_v = d.beta_v;
  });
}

void vqt_dynamics_config_default(vqt_dynamics_config* config,
                                 const vqt_design_params* params) {
  if (config == nullptr) return;
  vqtherm::DynamicsConfig d{};
  config->tau_beta = d.tau_beta;
  config->tau_s = d.tau_s;
  config->tau_swap = d.tau_swap;
  config->beta_env = params == nullptr ? d.beta_env : params->beta_c;
  config->e_s = d.e_s;
}

vqt_status vqt_dynamics_steady(const vqt_cycle* cycle,
                               const vqt_dynamics_config* config,
                               double* out_populations, double* out_beta_s,
                               double* out_beta_vq) {
  return guarded([&] {
    const vqtherm::CycleSpec& spec = deref(cycle);
    vqtherm::RateMatrix rates = vqtherm::build_rates(spec, to_dynamics(config));
    vqtherm::JointState state = vqtherm::steady(rates);
    if (out_populations != nullptr)
      std::memcpy(out_populations, state.populations.data(),
                  state.populations.size() * sizeof(double));
    if (out_beta_s != nullptr)
      *out_beta_s = vqtherm::system_beta(state, rates.e_s);
    if (out_beta_vq != nullptr)
      *out_beta_vq = vqtherm::loaded_vq_beta(state, spec.virtual_gap());
  });
}

vqt_status vqt_optimal_length(const vqt_dynamics_config* config,
                              const vqt_design_params* params, int n_max,
                              int* out_n) {
  return guarded([&] {
    require_out(out_n, "out_n");
    *out_n =
        vqtherm::optimal_length(to_dynamics(config), to_params(params), n_max);
  });
}

}  // extern "C"
