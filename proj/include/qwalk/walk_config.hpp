#pragma once

#include "qwalk/coin.hpp"

namespace qwalk {

// Which subsystem the per-step projective dephasing acts on.
enum class ChannelKind { CoinOnly, PositionOnly, Both };

// Parameters of one walk: T steps, per-step decoherence probability p.
struct WalkConfig {
  int T = 0;
  double p = 0.0;
  ChannelKind channel = ChannelKind::Both;
  CoinOp coin = hadamard();
  CoinState coin_init = symmetric_coin_state();

  // Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

}  // namespace qwalk
