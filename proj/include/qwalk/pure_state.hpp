#pragma once

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk {

/// Pure state psi(x,a) on x in [-horizon, horizon], a in {-1,+1}, flat index
/// 2*(x+horizon) + coin_index.  A walk started at the origin keeps psi = 0
/// outside |x| <= time and on sites with (x + time) odd; storage for the full
/// horizon is allocated up front.
class PureState {
 public:
  // Takes ownership of a full flat amplitude vector; support is assumed to
  // cover the whole lattice.
  PureState(int horizon, int time, Eigen::VectorXcd amplitudes);

  int horizon() const { return horizon_; }
  int time() const { return time_; }
  int dim() const { return 2 * (2 * horizon_ + 1); }
  int index(int x, int c) const { return 2 * (x + horizon_) + c; }

  Complex amplitude(int x, CoinLabel a) const {
    return amp_(index(x, coin_index(a)));
  }

  Eigen::VectorXcd& amplitudes() { return amp_; }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }

  double norm() const { return amp_.norm(); }

  // All nonzero amplitudes sit at |x| <= support_radius().
  int support_radius() const { return support_radius_; }

 private:
  PureState(int horizon, int time, int support_radius,
            Eigen::VectorXcd amplitudes);

  friend PureState initial_state(const CoinState&, int);
  friend PureState step_pure(const PureState&, const CoinOp&);

  int horizon_;
  int time_;
  int support_radius_;
  Eigen::VectorXcd amp_;
};

namespace detail {

// One walk step (coin rotation, then shift x -> x+a) applied in place to a
// flat-indexed column.  Sites |x| > radius must be zero on entry; the output
// support is radius+1, so radius+1 <= horizon is required.
void apply_step_inplace(Eigen::Ref<Eigen::VectorXcd> v, const CoinOp& coin,
                        int horizon, int radius);

}  // namespace detail

PureState initial_state(CoinLabel a0, int horizon);
PureState initial_state(const CoinState& coin_amplitudes, int horizon);

// Coin rotation then conditional shift; preserves the norm.
PureState step_pure(const PureState& state, const CoinOp& coin);

// T noiseless steps from the configured initial coin state.  Requires
// config.p == 0; decoherent runs belong to evolve_master.
PureState evolve_pure(const WalkConfig& config);

// Born-rule readout P(x,a) = |psi(x,a)|^2.
Distribution distribution(const PureState& state);

}  // namespace qwalk
