#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/pure_state.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk {

struct TrajectoryConfig {
  WalkConfig walk;
  std::uint64_t n_runs = 1;
  std::uint64_t seed = 0;
};

// Empirical frequencies over independent trajectories.
struct EstimatedDistribution {
  Distribution probs;
  Eigen::VectorXd standard_errors;  // sqrt(P(1-P)/n_runs) per cell
  std::vector<std::uint64_t> counts;
  std::uint64_t n_runs = 0;
};

struct TrajectorySample {
  int x = 0;
  CoinLabel a = CoinLabel::minus;
};

// Seed for run k: the (k+1)-th output of a SplitMix64 stream whose state
// starts at `master`.  Any single run is reproducible in isolation.
std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t k);

// One stochastic unravelling of the master equation: T steps, each followed
// (with probability p) by a projective measurement in the channel basis;
// returns a joint-basis sample of the final state.  Deterministic in `seed`;
// when p == 0 the decoherence draw is skipped entirely, so a p = 0 run
// consumes exactly one uniform (the final sample).
TrajectorySample run_trajectory(const WalkConfig& walk, std::uint64_t seed);

// As above, calling `observer` after every step (post-collapse).
TrajectorySample run_trajectory(
    const WalkConfig& walk, std::uint64_t seed,
    const std::function<void(const PureState&)>& observer);

// Frequencies over config.n_runs trajectories with per-run derived seeds.
// Counts are integers keyed by run index, so the result is bit-identical
// for any n_threads (0 = hardware concurrency).
EstimatedDistribution estimate_distribution(const TrajectoryConfig& config,
                                            int n_threads = 0);

}  // namespace qwalk
