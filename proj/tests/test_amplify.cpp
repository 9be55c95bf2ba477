#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "vqtherm/amplify.hpp"
#include "vqtherm/cycle.hpp"
#include "vqtherm/design.hpp"
#include "vqtherm/vqubit.hpp"

using vqtherm::Bath;
using vqtherm::CouplingTransform;
using vqtherm::CycleSpec;
using vqtherm::DesignParams;
using vqtherm::ErrorCode;
using vqtherm::Mode;
using vqtherm::MultiCycleSpec;
using vqtherm::MultiReport;
using vqtherm::TransformKind;
using vqtherm::VirtualQubit;

#define CHECK_FAILS_WITH(code_, ...)                     \
  do {                                                   \
    bool threw_ = false;                                 \
    try {                                                \
      (void)(__VA_ARGS__);                               \
    } catch (const vqtherm::Error& e_) {                 \
      threw_ = true;                                     \
      CHECK(e_.code() == ErrorCode::code_);              \
    }                                                    \
    CHECK_MESSAGE(threw_, "expected a vqtherm::Error");  \
  } while (0)

namespace {

CycleSpec base_qutrit() {
  return vqtherm::make_cycle({0.0, 2.0, 1.0}, {Bath{0.2}, Bath{0.05}});
}

DesignParams reference_params(int n, Mode mode = Mode::fridge) {
  return DesignParams{n, 1.0, 2.0, 0.2, 0.05, mode};
}

// A structurally valid random cycle with a positive virtual gap.
CycleSpec random_base(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> energies{0.0};
  std::vector<Bath> baths;
  for (int j = 0; j + 1 < n; ++j) {
    energies.push_back(energies.back() + unit(rng));
    baths.push_back(Bath{0.75 * (unit(rng) + 1.0)});
  }
  if (energies.back() <= energies.front()) {
    // lift the endpoint so the virtual gap is positive
    energies.back() = energies.front() + 0.5 + 0.5 * std::abs(unit(rng));
  }
  return vqtherm::make_cycle(energies, baths);
}

}  // namespace

TEST_CASE("amplifying the base machine duplicates its interior one gap up") {
  MultiCycleSpec multi = vqtherm::amplify(base_qutrit());
  CHECK(multi.levels() == 4);
  CHECK(multi.virtual_gap() == 1.0);
  CHECK(multi.chain.energies == std::vector<double>{0.0, 2.0, 1.0, 3.0});
  REQUIRE(multi.chain.couplings.size() == 3);
  CHECK(multi.chain.couplings[0].beta == 0.2);
  CHECK(multi.chain.couplings[1].beta == 0.05);
  CHECK(multi.chain.couplings[2].beta == 0.2);  // reused first coupling

  std::vector<std::pair<int, int>> pairs = multi.parallel_pairs();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<int, int>{0, 2});
  CHECK(pairs[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("the amplified chain replays the base transitions on its new wing") {
  std::mt19937 rng(90221403);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    CycleSpec base = random_base(rng, n);
    MultiCycleSpec multi = vqtherm::amplify(base);

    CHECK(multi.levels() == 2 * (n - 1));
    CHECK(static_cast<int>(multi.chain.couplings.size()) == 2 * n - 3);

    // every parallel pair spans exactly one virtual gap
    for (auto [lo, hi] : multi.parallel_pairs())
      CHECK(multi.chain.energies[static_cast<size_t>(hi)] -
                multi.chain.energies[static_cast<size_t>(lo)] ==
            doctest::Approx(base.virtual_gap()).epsilon(1e-14));

    // the appended transitions reuse the base gaps and baths in order
    for (int j = 1; j + 1 < n; ++j) {
      CHECK(multi.chain.gap(n - 2 + j) ==
            doctest::Approx(base.gap(j - 1)).epsilon(1e-12));
      CHECK(multi.chain.couplings[static_cast<size_t>(n - 2 + j)].beta ==
            base.couplings[static_cast<size_t>(j) - 1].beta);
    }
  }
}

TEST_CASE("all parallel virtual qubits share one temperature, total norm one") {
  MultiReport rep = vqtherm::analyze(vqtherm::amplify(base_qutrit()));
  CHECK(rep.beta_v == doctest::Approx(0.35).epsilon(1e-12));
  CHECK(rep.beta_spread < 1e-12);
  CHECK(rep.norm_total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.bias == doctest::Approx(std::tanh(0.175)).epsilon(1e-14));

  // amplification preserves the base bias while lifting the norm to one
  VirtualQubit vq = vqtherm::virtual_qubit_of(base_qutrit());
  CHECK(rep.bias == doctest::Approx(vq.bias.value()).epsilon(1e-13));
  CHECK(rep.bias == doctest::Approx(0.17323515783466012).epsilon(1e-13));

  std::mt19937 rng(5150217);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    CycleSpec base = random_base(rng, n);
    MultiReport r = vqtherm::analyze(vqtherm::amplify(base));
    CHECK(r.beta_spread <= 1e-10);
    CHECK(r.norm_total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.beta_v ==
          doctest::Approx(vqtherm::beta_v_of(base)).epsilon(1e-12));
  }
}

TEST_CASE("the amplified steady state factorizes into pair and remainder") {
  std::mt19937 rng(77100808);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    CycleSpec base = random_base(rng, n);
    MultiCycleSpec multi = vqtherm::amplify(base);
    vqtherm::SteadyState ss = vqtherm::multi_steady_state(multi);

    // equal population ratio across every parallel pair
    std::vector<std::pair<int, int>> pairs = multi.parallel_pairs();
    double first = ss.populations[static_cast<size_t>(pairs[0].second)] /
                   ss.populations[static_cast<size_t>(pairs[0].first)];
    for (auto [lo, hi] : pairs)
      CHECK(ss.populations[static_cast<size_t>(hi)] /
                ss.populations[static_cast<size_t>(lo)] ==
            doctest::Approx(first).epsilon(1e-10));

    // pair marginals follow the base machine's leading Gibbs factors
    std::vector<double> marginal;
    for (auto [lo, hi] : pairs)
      marginal.push_back(ss.populations[static_cast<size_t>(lo)] +
                         ss.populations[static_cast<size_t>(hi)]);
    for (int j = 0; j + 2 < n; ++j) {
      double expected =
          std::exp(-base.couplings[static_cast<size_t>(j)].beta * base.gap(j));
      CHECK(marginal[static_cast<size_t>(j) + 1] /
                marginal[static_cast<size_t>(j)] ==
            doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("amplified chain steady state matches the dense reference") {
  MultiCycleSpec multi = vqtherm::amplify(base_qutrit());
  std::vector<double> betas;
  for (const Bath& b : multi.chain.couplings) betas.push_back(b.beta);
  std::vector<double> ref =
      oracle::dense_chain_steady(multi.chain.energies, betas);
  vqtherm::SteadyState ss = vqtherm::multi_steady_state(multi);
  for (int j = 0; j < multi.levels(); ++j)
    CHECK(ss.populations[static_cast<size_t>(j)] ==
          doctest::Approx(ref[static_cast<size_t>(j)]).epsilon(1e-12));
}

TEST_CASE("closed-form multi-cycle temperature") {
  DesignParams p3 = reference_params(3);
  CHECK(vqtherm::multi_beta(4, p3) == doctest::Approx(0.35).epsilon(1e-14));
  CHECK(vqtherm::multi_beta(6, p3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(vqtherm::multi_beta(10, p3) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(vqtherm::multi_beta(100, p3) ==
        doctest::Approx(7.5500000000000016).epsilon(1e-15));
  CHECK(vqtherm::multi_beta(4, reference_params(3, Mode::engine)) ==
        doctest::Approx(-0.10).epsilon(1e-14));

  CHECK_FAILS_WITH(invalid_argument, vqtherm::multi_beta(5, p3));
  CHECK_FAILS_WITH(invalid_argument, vqtherm::multi_beta(2, p3));

  // 2(n-1) parallel copies reach the same temperature as one n-level machine
  for (Mode mode : {Mode::fridge, Mode::engine}) {
    for (int n = 3; n <= 40; ++n) {
      DesignParams p = reference_params(n, mode);
      CHECK(vqtherm::multi_beta(2 * (n - 1), p) ==
            doctest::Approx(vqtherm::closed_beta_v(p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("amplified optimal machines hit the closed-form temperature") {
  for (int n : {3, 4, 6, 10}) {
    DesignParams p = reference_params(n);
    MultiReport rep = vqtherm::analyze(vqtherm::amplify(vqtherm::optimal_cycle(p)));
    CHECK(rep.beta_v ==
          doctest::Approx(vqtherm::multi_beta(2 * (n - 1), p)).epsilon(1e-12));
    CHECK(rep.norm_total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("amplification rejects machines without a positive virtual gap") {
  CHECK_FAILS_WITH(degenerate,
                   vqtherm::amplify(vqtherm::make_cycle(
                       {0.0, 2.0, 0.0}, {Bath{0.2}, Bath{0.05}})));
}

TEST_CASE("coupling out of the virtual qubit: preserve, shift, flip") {
  VirtualQubit vq = vqtherm::virtual_qubit_of(base_qutrit());

  VirtualQubit kept = vqtherm::transform_coupling(
      vq, CouplingTransform{TransformKind::preserve, 0.0, 1.0});
  CHECK(kept.beta() == doctest::Approx(0.35).epsilon(1e-13));
  CHECK(kept.norm == 1.0);

  // spreading the product over a doubled gap with a cold ladder
  VirtualQubit shifted = vqtherm::transform_coupling(
      vq, CouplingTransform{TransformKind::shift, 0.2, 2.0});
  CHECK(shifted.beta() == doctest::Approx(0.275).epsilon(1e-13));
  CHECK(shifted.gap == 2.0);
  CHECK(shifted.norm == 1.0);

  // population inversion against the same bath
  VirtualQubit flipped = vqtherm::transform_coupling(
      vq, CouplingTransform{TransformKind::flip, 0.2, 1.0});
  CHECK(flipped.beta() == doctest::Approx(0.05).epsilon(1e-13));

  CHECK_FAILS_WITH(constraint,
                   vqtherm::transform_coupling(
                       vq, CouplingTransform{TransformKind::preserve, 0.0, 2.0}));
  CHECK_FAILS_WITH(invalid_argument,
                   vqtherm::transform_coupling(
                       vq, CouplingTransform{TransformKind::shift, -0.1, 2.0}));
  CHECK_FAILS_WITH(invalid_argument,
                   vqtherm::transform_coupling(
                       vq, CouplingTransform{TransformKind::flip, 0.2, 0.0}));
}

TEST_CASE("flipping twice with gaps exchanged is the identity") {
  std::mt19937 rng(33445566);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double gap_a = 0.2 + 2.0 * unit(rng);
    double gap_b = 0.2 + 2.0 * unit(rng);
    double beta = 2.0 * unit(rng) - 1.0;
    double bath = unit(rng);
    VirtualQubit start = vqtherm::make_virtual_qubit(
        gap_a, 1.0, vqtherm::bias_from_beta(beta, gap_a));
    VirtualQubit there = vqtherm::transform_coupling(
        start, CouplingTransform{TransformKind::flip, bath, gap_b});
    VirtualQubit back = vqtherm::transform_coupling(
        there, CouplingTransform{TransformKind::flip, bath, gap_a});
    CHECK(back.beta() == doctest::Approx(beta).epsilon(1e-12));
  }
}
