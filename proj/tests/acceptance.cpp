// Release gate: one self-contained check per shipping criterion, each printing
// a single [PASS]/[FAIL] line. Run with no arguments for the full gate or with
// a criterion number (1-9) for one check; the exit status is 0 only if every
// requested criterion passed.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vqtherm/amplify.hpp"
#include "vqtherm/concat.hpp"
#include "vqtherm/cycle.hpp"
#include "vqtherm/design.hpp"
#include "vqtherm/dynamics.hpp"
#include "vqtherm/vqubit.hpp"

namespace {

using vqtherm::ConcatSpec;
using vqtherm::CycleSpec;
using vqtherm::DesignParams;
using vqtherm::DynamicsConfig;
using vqtherm::Mode;
using vqtherm::Objective;
using vqtherm::Placement;
using vqtherm::SearchGrid;

struct Outcome {
  bool pass = true;
  std::string detail;
};

DesignParams reference_params(int n, Mode mode = Mode::fridge) {
  return DesignParams{n, 1.0, 2.0, 0.2, 0.05, mode};
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(1e-300, std::abs(reference));
}

// 1. Closed-form statics against the numeric steady state, n = 3..40, both
//    modes, relative 1e-10, in under a second.
Outcome criterion1() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (Mode mode : {Mode::fridge, Mode::engine}) {
    for (int n = 3; n <= 40; ++n) {
      DesignParams p = reference_params(n, mode);
      CycleSpec cycle = vqtherm::optimal_cycle(p);
      vqtherm::VirtualQubit vq = vqtherm::virtual_qubit_of(cycle);
      worst = std::max(worst, rel_err(vqtherm::beta_v_of(cycle),
                                      vqtherm::closed_beta_v(p)));
      worst = std::max(worst, rel_err(vq.norm, vqtherm::closed_norm(p)));
    }
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  out.pass = worst <= 1e-10 && seconds < 1.0;
  std::ostringstream s;
  s << "worst relative error " << worst << ", " << seconds << " s";
  out.detail = s.str();
  return out;
}

// 2. Exhaustive enumeration (step 0.5, baths {0.05, 0.2}) must find nothing
//    that beats the constructed cycle on any objective at n <= 5.
Outcome criterion2() {
  Outcome out;
  SearchGrid grid{0.5, {0.05, 0.2}};
  double worst_excess = 0.0;
  std::ostringstream detail;
  for (Mode mode : {Mode::fridge, Mode::engine}) {
    for (int n = 3; n <= 5; ++n) {
      DesignParams p = reference_params(n, mode);
      vqtherm::VirtualQubit vq =
          vqtherm::virtual_qubit_of(vqtherm::optimal_cycle(p));
      double sign = mode == Mode::fridge ? 1.0 : -1.0;

      struct Case {
        Objective objective;
        double z_s;
        double constructed;
        const char* name;
      };
      std::vector<Case> cases{
          {Objective::max_bias, 0.0, sign * vq.bias.value(), "bias"},
          {Objective::max_norm_bias, 0.0, sign * vq.norm * vq.bias.value(),
           "norm-weighted bias"},
      };
      for (double z_s : {-0.5, 0.0, 0.5})
        cases.push_back({Objective::max_swap_gain, z_s,
                         sign * vq.norm * (vq.bias.value() - z_s),
                         "swap gain"});

      for (const Case& c : cases) {
        vqtherm::BruteForceResult found =
            vqtherm::brute_force_best(p, grid, c.objective, c.z_s);
        double excess = found.value - c.constructed;
        if (excess > worst_excess) worst_excess = excess;
        if (excess > 1e-12) {
          out.pass = false;
          detail << "\n         " << (mode == Mode::fridge ? "fridge" : "engine")
                 << " n=" << n << " " << c.name;
          if (c.objective == Objective::max_swap_gain)
            detail << " at Z_s=" << c.z_s;
          detail << ": enumeration reaches " << found.value
                 << " > constructed " << c.constructed << " (gaps";
          for (int j = 0; j + 1 < found.spec.levels(); ++j)
            detail << " " << found.spec.gap(j);
          detail << "; baths";
          for (const vqtherm::Bath& b : found.spec.couplings)
            detail << " " << b.beta;
          detail << ")";
        }
      }
    }
  }
  std::ostringstream s;
  s << "worst enumeration excess " << worst_excess << detail.str();
  out.detail = s.str();
  return out;
}

// 3. Anchor values at the reference parameter set, via both computation paths.
Outcome criterion3() {
  Outcome out;
  struct Anchor {
    int n;
    double beta_v;
    double norm;
  };
  const std::vector<Anchor> anchors{{3, 0.35, 0.717761}, {4, 0.5, 0.568551}};
  double worst = 0.0;
  for (const Anchor& a : anchors) {
    DesignParams p = reference_params(a.n);
    CycleSpec cycle = vqtherm::optimal_cycle(p);
    double numeric_beta = vqtherm::beta_v_of(cycle);
    double numeric_norm = vqtherm::virtual_qubit_of(cycle).norm;
    worst = std::max(worst, rel_err(numeric_beta, vqtherm::closed_beta_v(p)));
    worst = std::max(worst, rel_err(numeric_norm, vqtherm::closed_norm(p)));
    if (std::abs(numeric_beta - a.beta_v) > 1e-9) out.pass = false;
    if (std::abs(numeric_norm - a.norm) > 1e-6) out.pass = false;
  }
  double asym = vqtherm::asymptotic_norm(reference_params(3));
  if (std::abs(asym - (1.0 - std::exp(-0.4))) > 1e-15) out.pass = false;
  if (std::abs(asym - 0.329680) > 1e-6) out.pass = false;
  if (worst > 1e-9) out.pass = false;
  std::ostringstream s;
  s << "dual-method worst relative error " << worst;
  out.detail = s.str();
  return out;
}

// 4. Stacking and stretching reach the single-cycle closed form exactly.
Outcome criterion4() {
  Outcome out;
  double worst = 0.0;
  for (Mode mode : {Mode::fridge, Mode::engine}) {
    for (int k = 1; k <= 30; ++k) {
      ConcatSpec chain{k, 1.0, 2.0, 0.2, 0.05, mode, Placement::lower};
      worst = std::max(worst,
                       std::abs(vqtherm::concat_beta(chain) -
                                vqtherm::closed_beta_v(
                                    reference_params(k + 2, mode))));
    }
    for (int n = 3; n <= 40; ++n) {
      DesignParams p = reference_params(n, mode);
      worst = std::max(worst, std::abs(vqtherm::multi_beta(2 * (n - 1), p) -
                                       vqtherm::closed_beta_v(p)));
    }
  }
  out.pass = worst <= 1e-12;
  std::ostringstream s;
  s << "worst equivalence gap " << worst;
  out.detail = s.str();
  return out;
}

// 5. Amplified machines: total norm 1 +- 1e-12, per-pair beta spread < 1e-10.
Outcome criterion5() {
  Outcome out;
  double worst_norm = 0.0, worst_spread = 0.0;
  for (int n = 3; n <= 10; ++n) {
    vqtherm::MultiReport rep = vqtherm::analyze(
        vqtherm::amplify(vqtherm::optimal_cycle(reference_params(n))));
    worst_norm = std::max(worst_norm, std::abs(rep.norm_total - 1.0));
    worst_spread = std::max(worst_spread, rep.beta_spread);
  }
  out.pass = worst_norm <= 1e-12 && worst_spread < 1e-10;
  std::ostringstream s;
  s << "worst |norm-1| " << worst_norm << ", worst spread " << worst_spread;
  out.detail = s.str();
  return out;
}

// 6. Fridge efficiency: temperature form and heat-quanta form agree, and the
//    efficiency falls off exactly as 1/(n/2 - 1).
Outcome criterion6() {
  Outcome out;
  double worst_agree = 0.0, worst_const = 0.0;
  double reference_product = 0.0;
  for (int n = 4; n <= 40; n += 2) {
    vqtherm::EfficiencyReport rep =
        vqtherm::efficiency(vqtherm::optimal_cycle(reference_params(n)));
    double quanta = rep.work_or_cool / rep.heat_hot;
    worst_agree = std::max(worst_agree, std::abs(rep.eta - quanta));
    double product = rep.eta * (n / 2.0 - 1.0);
    if (n == 4) reference_product = product;
    worst_const = std::max(worst_const,
                           std::abs(product - reference_product));
  }
  out.pass = worst_agree <= 1e-12 && worst_const <= 1e-12;
  std::ostringstream s;
  s << "form disagreement " << worst_agree << ", product drift " << worst_const;
  out.detail = s.str();
  return out;
}

// 7. Dimension form of the third law: T_s * n' approaches the limit constant
//    at the algebraic rate set by the -1/2 offset.
Outcome criterion7() {
  Outcome out;
  DesignParams p = reference_params(4);
  double limit = vqtherm::third_law_limit(p);
  std::vector<vqtherm::ThirdLawPoint> pts =
      vqtherm::third_law_scaling(p, {100, 1000, 10000});
  const double margins[3] = {0.05, 0.005, 0.0005};
  std::ostringstream s;
  s << "limit " << limit;
  for (size_t i = 0; i < pts.size(); ++i) {
    double product = pts[i].t_s * pts[i].n_prime;
    double rel = std::abs(product - limit) / limit;
    s << ", n'=" << pts[i].n_prime << " off by " << rel * 100.0 << "%";
    if (rel > margins[i]) out.pass = false;
  }
  out.detail = s.str();
  return out;
}

// 8. Joint dynamics at the reference load: decoupled marginals match statics;
//    the cooling bias peaks at an interior machine size; the best size is 4 at
//    tau_s = 1 and never shrinks as the load gets gentler.
Outcome criterion8() {
  Outcome out;
  std::ostringstream s;

  double worst = 0.0;
  for (int n = 3; n <= 8; ++n) {
    CycleSpec cycle = vqtherm::optimal_cycle(reference_params(n));
    DynamicsConfig cfg;
    cfg.tau_swap = std::numeric_limits<double>::infinity();
    std::vector<double> machine =
        vqtherm::steady(vqtherm::build_rates(cycle, cfg)).machine_marginal();
    vqtherm::SteadyState ss = vqtherm::steady_state(cycle);
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(machine[static_cast<size_t>(j)] -
                                       ss.populations[static_cast<size_t>(j)]));
  }
  if (worst > 1e-10) out.pass = false;
  s << "(a) decoupled marginal error " << worst;

  DesignParams p = reference_params(3);
  std::vector<vqtherm::ScanPoint> rows =
      vqtherm::scan_cycle_length(p, 3, 15, {1.0}, DynamicsConfig{});
  size_t arg = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].beta_s > rows[arg].beta_s) arg = i;
  bool interior = arg > 0 && arg + 1 < rows.size();
  if (!interior) out.pass = false;
  s << "; (b) peak at n=" << rows[arg].n;

  DynamicsConfig cfg;
  int best1 = vqtherm::optimal_length(cfg, p, 15);
  cfg.tau_s = 10.0;
  int best10 = vqtherm::optimal_length(cfg, p, 15);
  cfg.tau_s = 100.0;
  int best100 = vqtherm::optimal_length(cfg, p, 15);
  if (best1 != 4) out.pass = false;
  if (!(best1 <= best10 && best10 <= best100)) out.pass = false;
  s << "; (c,d) best n = " << best1 << ", " << best10 << ", " << best100
    << " over tau_s = 1, 10, 100";

  out.detail = s.str();
  return out;
}

// 9. The one-line swap formula against the explicit four-outcome joint map on
//    a 21x21x21 grid.
Outcome criterion9() {
  Outcome out;
  double worst = 0.0;
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      for (int c = 0; c <= 20; ++c) {
        double z_s = -1.0 + 0.1 * a;
        double n_v = 0.05 * b;
        double z_v = -1.0 + 0.1 * c;
        oracle::JointSwap ref = oracle::joint_swap_map(z_s, n_v, z_v);
        vqtherm::SwapResult got =
            vqtherm::swap(vqtherm::make_system_qubit(1.0, z_s),
                          vqtherm::make_virtual_qubit(1.0, n_v, z_v));
        worst = std::max(worst, std::abs(ref.total - 1.0));
        worst = std::max(worst,
                         std::abs(got.system.bias.value() - ref.z_system));
        if (n_v > 0.0)
          worst = std::max(worst,
                           std::abs(got.vq.bias.value() - ref.z_vq));
      }
    }
  }
  out.pass = worst <= 1e-14;
  std::ostringstream s;
  s << "worst grid deviation " << worst;
  out.detail = s.str();
  return out;
}

struct Criterion {
  int number;
  const char* title;
  Outcome (*check)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "closed-form statics match the numeric steady state", criterion1},
      {2, "enumeration finds nothing better than the constructed cycle",
       criterion2},
      {3, "anchor values at the reference parameter set", criterion3},
      {4, "stacked and parallel designs match the single-cycle form",
       criterion4},
      {5, "amplification reaches unit norm at one shared temperature",
       criterion5},
      {6, "both efficiency forms agree and scale as 1/(n/2-1)", criterion6},
      {7, "reachable temperature scales inversely with dimension", criterion7},
      {8, "joint dynamics: decoupling, interior optimum, monotone growth",
       criterion8},
      {9, "swap formula equals the explicit joint-population map", criterion9},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
      return 2;
    }
  }

  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    if (selected != 0 && c.number != selected) continue;
    Outcome outcome = c.check();
    all_pass = all_pass && outcome.pass;
    std::printf("[%s] criterion %d: %s — %s\n",
                outcome.pass ? "PASS" : "FAIL", c.number, c.title,
                outcome.detail.c_str());
  }
  return all_pass ? 0 : 1;
}
