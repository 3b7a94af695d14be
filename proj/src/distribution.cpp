#include "qwalk/distribution.hpp"

namespace qwalk {

Eigen::VectorXd Distribution::position_marginal() const {
  const int sites = 2 * horizon + 1;
  Eigen::VectorXd m(sites);
  for (int s = 0; s < sites; ++s) {
    m(s) = probs(2 * s) + probs(2 * s + 1);
  }
  return m;
}

}  // namespace qwalk
