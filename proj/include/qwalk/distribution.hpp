#pragma once

#include <Eigen/Dense>

#include "qwalk/coin.hpp"

namespace qwalk {

// Joint probability table P(x,a) for x in [-horizon, horizon], a in {-1,+1},
// flat index 2*(x+horizon) + coin_index.
struct Distribution {
  int horizon = 0;
  int time = 0;
  Eigen::VectorXd probs;

  int dim() const { return 2 * (2 * horizon + 1); }
  int index(int x, int c) const { return 2 * (x + horizon) + c; }
  double prob(int x, CoinLabel a) const {
    return probs(index(x, coin_index(a)));
  }
  double total() const { return probs.sum(); }

  // Marginal over the coin, indexed by x + horizon.
  Eigen::VectorXd position_marginal() const;
};

}  // namespace qwalk
