// Brute-force references used by the tests.  Everything here is built from
// the defining formulas (dense matrices, literal projector sums, classical
// chains) and never reuses the library's structured evolution kernels.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk_config.hpp"

namespace oracles {

using qwalk::ChannelKind;
using qwalk::CoinOp;
using qwalk::Complex;

inline int flat(int x, int c, int horizon) { return 2 * (x + horizon) + c; }

// Dense one-step unitary from its definition: U|x,c> = sum_c' C(c',c)|x+a(c'),c'>.
// Rows that would leave the lattice are dropped; states respecting the
// lightcone never reach them.
inline Eigen::MatrixXcd dense_step_unitary(int horizon, const CoinOp& coin) {
  const int dim = 2 * (2 * horizon + 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (int x = -horizon; x <= horizon; ++x) {
    for (int c = 0; c < 2; ++c) {
      for (int cp = 0; cp < 2; ++cp) {
        const int a = 2 * cp - 1;
        const int y = x + a;
        if (y < -horizon || y > horizon) continue;
        u(flat(y, cp, horizon), flat(x, c, horizon)) += coin(cp, c);
      }
    }
  }
  return u;
}

// Projector list for one channel, as explicit dense matrices.
inline std::vector<Eigen::MatrixXcd> channel_projectors(int horizon,
                                                        ChannelKind channel) {
  const int dim = 2 * (2 * horizon + 1);
  std::vector<Eigen::MatrixXcd> projs;
  switch (channel) {
    case ChannelKind::Both:
      for (int i = 0; i < dim; ++i) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
        p(i, i) = 1.0;
        projs.push_back(p);
      }
      break;
    case ChannelKind::CoinOnly:
      for (int c = 0; c < 2; ++c) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
        for (int x = -horizon; x <= horizon; ++x) {
          p(flat(x, c, horizon), flat(x, c, horizon)) = 1.0;
        }
        projs.push_back(p);
      }
      break;
    case ChannelKind::PositionOnly:
      for (int x = -horizon; x <= horizon; ++x) {
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
        p(flat(x, 0, horizon), flat(x, 0, horizon)) = 1.0;
        p(flat(x, 1, horizon), flat(x, 1, horizon)) = 1.0;
        projs.push_back(p);
      }
      break;
  }
  return projs;
}

// Literal master-equation step: (1-p) U rho U+ + p sum_i P_i U rho U+ P_i.
inline Eigen::MatrixXcd master_step_dense(const Eigen::MatrixXcd& rho,
                                          const Eigen::MatrixXcd& u,
                                          const std::vector<Eigen::MatrixXcd>& projs,
                                          double p) {
  const Eigen::MatrixXcd evolved = u * rho * u.adjoint();
  Eigen::MatrixXcd dephased = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const auto& proj : projs) dephased += proj * evolved * proj;
  return (1.0 - p) * evolved + p * dephased;
}

// Classical chain the fully dephased (p = 1) walk reduces to: the first hop
// splits by the diagonal of C tau0 C+, later hops are (1/2, 1/2).  Joint
// table over (x, a).
inline qwalk::Distribution classical_chain_joint(int T,
                                                 const qwalk::CoinState& tau0,
                                                 const CoinOp& coin) {
  qwalk::Distribution d;
  d.horizon = T;
  d.time = T;
  d.probs = Eigen::VectorXd::Zero(2 * (2 * T + 1));
  if (T == 0) {
    d.probs(flat(0, 0, T)) = std::norm(tau0(0));
    d.probs(flat(0, 1, T)) = std::norm(tau0(1));
    return d;
  }
  const Eigen::Vector2cd rotated = coin * tau0;
  Eigen::VectorXd cur = Eigen::VectorXd::Zero(2 * (2 * T + 1));
  cur(flat(-1, 0, T)) = std::norm(rotated(0));
  cur(flat(+1, 1, T)) = std::norm(rotated(1));
  for (int t = 2; t <= T; ++t) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(cur.size());
    for (int x = -(t - 1); x <= t - 1; ++x) {
      const double mass = cur(flat(x, 0, T)) + cur(flat(x, 1, T));
      if (mass == 0.0) continue;
      next(flat(x - 1, 0, T)) += 0.5 * mass;
      next(flat(x + 1, 1, T)) += 0.5 * mass;
    }
    cur = next;
  }
  d.probs = cur;
  return d;
}

inline double total_variation(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return 0.5 * (a - b).cwiseAbs().sum();
}

// Haar-ish random 2x2 unitary from three phases and one angle.
inline CoinOp random_unitary(std::mt19937_64& gen) {
  static const double two_pi = 2.0 * std::acos(-1.0);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  const double theta = 0.5 * angle(gen);
  const double alpha = angle(gen);
  const double beta = angle(gen);
  const double gamma = angle(gen);
  const Complex i(0.0, 1.0);
  CoinOp u;
  u(0, 0) = std::exp(i * (alpha + beta)) * std::cos(theta);
  u(0, 1) = std::exp(i * (alpha + gamma)) * std::sin(theta);
  u(1, 0) = -std::exp(i * (alpha - gamma)) * std::sin(theta);
  u(1, 1) = std::exp(i * (alpha - beta)) * std::cos(theta);
  return u;
}

inline qwalk::CoinState random_coin_state(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  qwalk::CoinState v;
  v << Complex(n(gen), n(gen)), Complex(n(gen), n(gen));
  v.normalize();
  return v;
}

}  // namespace oracles
