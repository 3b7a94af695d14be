#include "qwalk/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/errors.hpp"

namespace qwalk {

PureState::PureState(int horizon, int time, Eigen::VectorXcd amplitudes)
    : PureState(horizon, time, horizon, std::move(amplitudes)) {}

PureState::PureState(int horizon, int time, int support_radius,
                     Eigen::VectorXcd amplitudes)
    : horizon_(horizon),
      time_(time),
      support_radius_(support_radius),
      amp_(std::move(amplitudes)) {
  if (horizon_ < 0) throw std::invalid_argument("PureState: horizon < 0");
  if (amp_.size() != dim())
    throw std::invalid_argument("PureState: amplitude vector has wrong size");
}

namespace detail {

void apply_step_inplace(Eigen::Ref<Eigen::VectorXcd> v, const CoinOp& coin,
                        int horizon, int radius) {
  const auto idx = [horizon](int x, int c) { return 2 * (x + horizon) + c; };
  for (int x = -radius; x <= radius; ++x) {
    const Complex u0 = v(idx(x, 0));
    const Complex u1 = v(idx(x, 1));
    v(idx(x, 0)) = coin(0, 0) * u0 + coin(0, 1) * u1;
    v(idx(x, 1)) = coin(1, 0) * u0 + coin(1, 1) * u1;
  }
  // coin -1 moves left, coin +1 moves right
  for (int x = -radius - 1; x <= radius - 1; ++x) {
    v(idx(x, 0)) = v(idx(x + 1, 0));
  }
  v(idx(radius, 0)) = Complex(0.0, 0.0);
  for (int x = radius + 1; x >= -radius + 1; --x) {
    v(idx(x, 1)) = v(idx(x - 1, 1));
  }
  v(idx(-radius, 1)) = Complex(0.0, 0.0);
}

}  // namespace detail

PureState initial_state(CoinLabel a0, int horizon) {
  return initial_state(coin_state(a0), horizon);
}

PureState initial_state(const CoinState& coin_amplitudes, int horizon) {
  if (horizon < 0)
    throw std::invalid_argument("initial_state: horizon must be >= 0");
  if (std::abs(coin_amplitudes.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("initial_state: coin state is not unit norm");
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(2 * (2 * horizon + 1));
  amp(2 * horizon + 0) = coin_amplitudes(0);
  amp(2 * horizon + 1) = coin_amplitudes(1);
  return PureState(horizon, 0, 0, std::move(amp));
}

PureState step_pure(const PureState& state, const CoinOp& coin) {
  if (state.time() >= state.horizon())
    throw CapacityError("step_pure: lattice full (time == horizon)");
  PureState next = state;
  const int r = std::min(state.support_radius(), state.horizon() - 1);
  detail::apply_step_inplace(next.amp_, coin, next.horizon_, r);
  next.time_ = state.time() + 1;
  next.support_radius_ = r + 1;
  return next;
}

PureState evolve_pure(const WalkConfig& config) {
  config.validate();
  if (config.p != 0.0)
    throw std::invalid_argument(
        "evolve_pure: p must be 0 (use evolve_master for decoherent walks)");
  PureState state = initial_state(config.coin_init, config.T);
  for (int t = 0; t < config.T; ++t) {
    state = step_pure(state, config.coin);
  }
  return state;
}

Distribution distribution(const PureState& state) {
  Distribution d;
  d.horizon = state.horizon();
  d.time = state.time();
  d.probs = state.amplitudes().cwiseAbs2();
  return d;
}

}  // namespace qwalk
