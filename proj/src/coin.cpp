#include "qwalk/coin.hpp"

#include <cmath>

namespace qwalk {

CoinOp hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  CoinOp h;
  h << Complex(s, 0.0), Complex(s, 0.0), Complex(s, 0.0), Complex(-s, 0.0);
  return h;
}

bool is_unitary(const CoinOp& c, double tol) {
  const CoinOp delta = c * c.adjoint() - CoinOp::Identity();
  return delta.cwiseAbs().maxCoeff() <= tol;
}

CoinState coin_state(CoinLabel a) {
  CoinState v = CoinState::Zero();
  v(coin_index(a)) = Complex(1.0, 0.0);
  return v;
}

CoinState symmetric_coin_state() {
  const double s = 1.0 / std::sqrt(2.0);
  CoinState v;
  v << Complex(s, 0.0), Complex(0.0, s);
  return v;
}

}  // namespace qwalk
