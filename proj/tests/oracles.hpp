#pragma once

// Independent reference computations for the test suite. Everything here is
// rebuilt from first principles (explicit population tables, dense linear
// algebra, matrix exponentials) so the production code paths are checked
// against a second method, not against themselves.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace oracle {

// -------- resonant swap as an explicit four-outcome population table --------
//
// The machine contributes a two-level sub-block of weight n_v split by bias
// z_v plus an inert remainder 1 - n_v; the unit-norm system qubit splits by
// z_s. The swap permutes exactly two joint outcomes: (sub-block upper, system
// ground) <-> (sub-block lower, system excited). All post-swap quantities are
// read off the permuted table.
struct JointSwap {
  double z_system = 0.0;  // system bias after the swap
  double z_vq = 0.0;      // sub-block bias after the swap (0 when n_v = 0)
  double norm_vq = 0.0;   // sub-block norm after the swap
  double total = 0.0;     // total joint probability (conservation check)
};

inline JointSwap joint_swap_map(double z_s, double n_v, double z_v) {
  double v_lo = n_v * 0.5 * (1.0 + z_v);
  double v_hi = n_v * 0.5 * (1.0 - z_v);
  double rest = 1.0 - n_v;
  double s0 = 0.5 * (1.0 + z_s);
  double s1 = 0.5 * (1.0 - z_s);

  // joint[sub-block level][system level]; the exchange is the swap itself.
  double joint[2][2] = {{v_lo * s0, v_lo * s1}, {v_hi * s0, v_hi * s1}};
  std::swap(joint[0][1], joint[1][0]);

  double sys0 = joint[0][0] + joint[1][0] + rest * s0;
  double sys1 = joint[0][1] + joint[1][1] + rest * s1;
  double vq0 = joint[0][0] + joint[0][1];
  double vq1 = joint[1][0] + joint[1][1];

  JointSwap out;
  out.total = sys0 + sys1;
  out.z_system = sys0 - sys1;  // the system marginal stays normalized
  out.norm_vq = vq0 + vq1;
  out.z_vq = out.norm_vq > 0.0 ? (vq0 - vq1) / out.norm_vq : 0.0;
  return out;
}

// -------- dense detailed-balance solve for a coupled chain --------
//
// Solves { p_{j+1} - e^{-beta_j (E_{j+1}-E_j)} p_j = 0, sum p = 1 } directly
// with a full-pivot LU, avoiding the production code's log-space cumulative
// normalization entirely. Each balance row is scaled to unit magnitude so
// uphill links (gap < 0) do not inject huge matrix entries.
inline std::vector<double> dense_chain_steady(
    const std::vector<double>& energies, const std::vector<double>& betas) {
  int n = static_cast<int>(energies.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int j = 0; j + 1 < n; ++j) {
    double gap = energies[static_cast<size_t>(j) + 1] -
                 energies[static_cast<size_t>(j)];
    double x = betas[static_cast<size_t>(j)] * gap;
    if (x >= 0.0) {
      a(j, j) = -std::exp(-x);
      a(j, j + 1) = 1.0;
    } else {
      a(j, j) = -1.0;
      a(j, j + 1) = std::exp(x);
    }
  }
  a.row(n - 1).setOnes();
  b(n - 1) = 1.0;
  Eigen::VectorXd p = a.fullPivLu().solve(b);
  return std::vector<double>(p.data(), p.data() + n);
}

// -------- explicit time propagation of a Markov generator --------
//
// p(t) = exp(G t) p(0) through Eigen's scaling-and-squaring matrix
// exponential; used to cross-check the null-space steady-state solve.
inline std::vector<double> propagate(const std::vector<double>& gen_row_major,
                                     int dim, const std::vector<double>& p0,
                                     double t) {
  Eigen::MatrixXd g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      g(r, c) = gen_row_major[static_cast<size_t>(r) * dim + c];
  Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(p0.data(), dim);
  Eigen::VectorXd pt = (g * t).exp() * p;
  return std::vector<double>(pt.data(), pt.data() + dim);
}

// -------- generic dense null-space steady state --------
//
// Stationary distribution of an arbitrary generator (columns sum to zero),
// for oracles that build joint rate matrices themselves.
inline std::vector<double> dense_markov_steady(
    const std::vector<double>& gen_row_major, int dim) {
  Eigen::MatrixXd a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      a(r, c) = gen_row_major[static_cast<size_t>(r) * dim + c];
  a.row(dim - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim);
  b(dim - 1) = 1.0;
  Eigen::VectorXd p = a.fullPivLu().solve(b);
  return std::vector<double>(p.data(), p.data() + dim);
}

}  // namespace oracle
