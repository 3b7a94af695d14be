#pragma once

#include "qwalk/coin.hpp"

namespace qwalk::theory {

// Large-T standard deviation of the noiseless Hadamard walk, including the
// finite-time correction: sqrt(1 - 1/sqrt(2)) * (T - 1/T).
double asymptotic_sigma(int T);

// Large-T mean for a coin-basis start: a * (1 - 1/sqrt(2)) * T.
double asymptotic_mean(int T, CoinLabel a);

// First-order upper bound on sigma(T,p):
//   asymptotic_sigma(T) * (1 - pT/(6 sqrt(2)) + (p/sqrt(2))(1 - 1/sqrt(2))).
double sigma_bound(int T, double p);

// The bound's derivation keeps a single decoherence event; pT <= 0.2 marks
// where that truncation is trustworthy.
bool in_first_order_regime(int T, double p);

struct TheoryPrediction {
  int T = 0;
  double p = 0.0;
  double sigma_upper = 0.0;
  double mean_a = 0.0;
  double sigma_ideal = 0.0;
  bool beyond_first_order = false;
};

TheoryPrediction predict(int T, double p, CoinLabel a);

// Numeric evaluation of the one-noise-event expansion of sigma^2(T,p) for
// joint (position and coin) dephasing, built from exact pure walks with no
// bounding steps:
//   (1-pT) m2(T) + p sum_t sum_{y,b} P(y,b,t) [m2_b(T-t) + 2y mean_b(T-t) + y^2].
// Exactly affine in p.  Cost O(T^2); T is capped at 200.
double first_order_sigma2(int T, double p);
double first_order_sigma2(int T, double p, const CoinState& coin_init);

}  // namespace qwalk::theory
