#include "qwalk/walk_config.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

void WalkConfig::validate() const {
  if (T < 0) throw std::invalid_argument("WalkConfig: T must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("WalkConfig: p must be in [0,1]");
  if (!is_unitary(coin))
    throw std::invalid_argument("WalkConfig: coin operator is not unitary");
  if (std::abs(coin_init.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("WalkConfig: initial coin state is not unit norm");
}

}  // namespace qwalk
