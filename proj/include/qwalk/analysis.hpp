#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk::analysis {

// Position moments at one (T, p, channel) point.  sigma is the deviation
// from the origin, sqrt(<x^2>), not the centered one.
struct MomentsRecord {
  int T = 0;
  double p = 0.0;
  std::optional<ChannelKind> channel;  // empty for the noiseless walk
  double mean = 0.0;
  double second_moment = 0.0;
  double sigma = 0.0;

  double centered_variance() const { return second_moment - mean * mean; }
};

// mean = sum x P, second_moment = sum x^2 P over the joint table.
// Throws std::invalid_argument if |sum P - 1| > 1e-8.
MomentsRecord moments(const Distribution& dist);

struct SlopeEstimate {
  int T = 0;
  double scaled_slope = 0.0;  // -d(sigma)/dp / T^2
  std::vector<double> p_grid;
  std::string method = "affine-lsq";
};

// Least-squares line y = a + b x; returns {a, b}.
std::pair<double, double> fit_affine(const std::vector<double>& x,
                                     const std::vector<double>& y);

SlopeEstimate scaled_slope_from_sigmas(int T, const std::vector<double>& p_grid,
                                       const std::vector<double>& sigmas);

// Runs the master equation over p_grid (which must start at 0, increase
// strictly, and keep pT <= 0.2 — RegimeError otherwise), fits sigma(T,p)
// affinely in p and returns -slope/T^2.
SlopeEstimate scaled_small_p_slope(int T, ChannelKind channel,
                                   const std::vector<double>& p_grid,
                                   const CoinState& coin_init = symmetric_coin_state(),
                                   int jobs = 1);

struct TwoTermFit {
  double c1 = 0.0;
  double c2 = 0.0;
};

// Joint least squares of sigma(T,p)/sigma(T,0) = 1 - c1 pT + c2 p over
// samples (T, p, ratio) with both coefficients free.  Throws FitError on a
// degenerate design matrix.
TwoTermFit fit_sigma_ratio(const std::vector<std::array<double, 3>>& samples);

// Least squares for the p-only coefficient with the pT coefficient pinned
// at its derived value 1/(6 sqrt 2).  A free joint fit lets c1 absorb the
// O((pT)^2) curvature of sigma(T,p) and drives c2 to its strict p->0 limit
// (~1/T, vanishing at large T); pinning c1 measures the p coefficient of
// the expansion itself, which is the quantity the decay bound caps at
// (1/sqrt 2)(1 - 1/sqrt 2).
double fit_p_coefficient(const std::vector<std::array<double, 3>>& samples);

// Fit protocol for the p coefficient, fixed here since no standard exists:
// for each T the master equation runs at pT levels {0, 0.02, 0.05} and the
// ratios sigma(T,p)/sigma(T,0) feed fit_p_coefficient.
inline constexpr std::array<double, 3> kPcoefLevels{0.0, 0.02, 0.05};

// Simulated p coefficient over T_list (>= 3 distinct values) with the
// protocol above.
double p_coefficient_fit(const std::vector<int>& T_list, ChannelKind channel,
                         const CoinState& coin_init = symmetric_coin_state(),
                         int jobs = 1);

// Same estimator run on sigma values generated from the closed-form bound;
// the round trip recovers (1/sqrt 2)(1 - 1/sqrt 2) = 0.2071068...
double p_coefficient_fit_synthetic(const std::vector<int>& T_list);

}  // namespace qwalk::analysis
