#include "qwalk/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "qwalk/parallel.hpp"

namespace qwalk {

std::uint64_t derive_run_seed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t z = master + (k + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  // uniform in [0,1) with 53 bits, independent of library distributions
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
};

struct Walker {
  const WalkConfig& cfg;
  int horizon;
  int radius = 0;
  Eigen::VectorXcd amp;

  explicit Walker(const WalkConfig& c)
      : cfg(c),
        horizon(c.T),
        amp(Eigen::VectorXcd::Zero(2 * (2 * c.T + 1))) {
    amp(2 * horizon + 0) = c.coin_init(0);
    amp(2 * horizon + 1) = c.coin_init(1);
  }

  int idx(int x, int c) const { return 2 * (x + horizon) + c; }

  void step() {
    detail::apply_step_inplace(amp, cfg.coin, horizon,
                               std::min(radius, horizon - 1));
    radius = std::min(radius + 1, horizon);
  }

  // Sample a joint cell by the Born rule without modifying the state.
  int sample_cell(Rng& rng) const {
    double total = 0.0;
    for (int x = -radius; x <= radius; ++x) {
      total += std::norm(amp(idx(x, 0))) + std::norm(amp(idx(x, 1)));
    }
    const double target = rng.uniform() * total;
    double acc = 0.0;
    int last_nonzero = idx(0, 0);
    for (int x = -radius; x <= radius; ++x) {
      for (int c = 0; c < 2; ++c) {
        const double w = std::norm(amp(idx(x, c)));
        if (w > 0.0) last_nonzero = idx(x, c);
        acc += w;
        if (target < acc) return idx(x, c);
      }
    }
    return last_nonzero;
  }

  void collapse(Rng& rng) {
    switch (cfg.channel) {
      case ChannelKind::Both: {
        const int k = sample_cell(rng);
        amp.setZero();
        amp(k) = Complex(1.0, 0.0);
        break;
      }
      case ChannelKind::CoinOnly: {
        double w[2] = {0.0, 0.0};
        for (int x = -radius; x <= radius; ++x) {
          w[0] += std::norm(amp(idx(x, 0)));
          w[1] += std::norm(amp(idx(x, 1)));
        }
        int c = (rng.uniform() * (w[0] + w[1]) < w[0]) ? 0 : 1;
        if (w[c] <= 0.0) c = 1 - c;
        const double scale = 1.0 / std::sqrt(w[c]);
        for (int x = -radius; x <= radius; ++x) {
          amp(idx(x, 1 - c)) = Complex(0.0, 0.0);
          amp(idx(x, c)) *= scale;
        }
        break;
      }
      case ChannelKind::PositionOnly: {
        double total = 0.0;
        for (int x = -radius; x <= radius; ++x) {
          total += std::norm(amp(idx(x, 0))) + std::norm(amp(idx(x, 1)));
        }
        const double target = rng.uniform() * total;
        double acc = 0.0;
        int site = 0;
        double site_w = 0.0;
        bool found = false;
        int last_nonzero = 0;
        double last_w = 0.0;
        for (int x = -radius; x <= radius && !found; ++x) {
          const double w =
              std::norm(amp(idx(x, 0))) + std::norm(amp(idx(x, 1)));
          if (w > 0.0) {
            last_nonzero = x;
            last_w = w;
          }
          acc += w;
          if (target < acc) {
            site = x;
            site_w = w;
            found = true;
          }
        }
        if (!found || site_w <= 0.0) {
          site = last_nonzero;
          site_w = last_w;
        }
        const double scale = 1.0 / std::sqrt(site_w);
        for (int x = -radius; x <= radius; ++x) {
          if (x == site) {
            amp(idx(x, 0)) *= scale;
            amp(idx(x, 1)) *= scale;
          } else {
            amp(idx(x, 0)) = Complex(0.0, 0.0);
            amp(idx(x, 1)) = Complex(0.0, 0.0);
          }
        }
        break;
      }
    }
  }
};

TrajectorySample run_one(const WalkConfig& walk, std::uint64_t seed,
                         const std::function<void(const PureState&)>* observer) {
  Walker w(walk);
  Rng rng(seed);
  for (int t = 0; t < walk.T; ++t) {
    w.step();
    if (walk.p > 0.0 && rng.uniform() < walk.p) {
      w.collapse(rng);
    }
    if (observer && *observer) {
      (*observer)(PureState(w.horizon, t + 1, w.amp));
    }
  }
  const int cell = w.sample_cell(rng);
  return {cell / 2 - w.horizon, coin_from_index(cell & 1)};
}

}  // namespace

TrajectorySample run_trajectory(const WalkConfig& walk, std::uint64_t seed) {
  walk.validate();
  return run_one(walk, seed, nullptr);
}

TrajectorySample run_trajectory(
    const WalkConfig& walk, std::uint64_t seed,
    const std::function<void(const PureState&)>& observer) {
  walk.validate();
  return run_one(walk, seed, &observer);
}

EstimatedDistribution estimate_distribution(const TrajectoryConfig& config,
                                            int n_threads) {
  config.walk.validate();
  if (config.n_runs < 1)
    throw std::invalid_argument("estimate_distribution: n_runs must be >= 1");

  const int horizon = config.walk.T;
  const int dim = 2 * (2 * horizon + 1);
  std::vector<std::uint64_t> counts(dim, 0);
  std::mutex merge_mutex;

  std::size_t workers = n_threads > 0
                            ? static_cast<std::size_t>(n_threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, config.n_runs);

  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t n_blocks = (config.n_runs + kBlock - 1) / kBlock;

  detail::parallel_for_index(
      n_blocks, static_cast<int>(workers), [&](std::size_t b) {
        const std::uint64_t begin = b * kBlock;
        const std::uint64_t end = std::min(begin + kBlock, config.n_runs);
        std::vector<std::uint64_t> local(dim, 0);
        for (std::uint64_t k = begin; k < end; ++k) {
          const TrajectorySample s =
              run_one(config.walk, derive_run_seed(config.seed, k), nullptr);
          ++local[2 * (s.x + horizon) + coin_index(s.a)];
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (int i = 0; i < dim; ++i) counts[i] += local[i];
      });

  EstimatedDistribution est;
  est.counts = counts;
  est.n_runs = config.n_runs;
  est.probs.horizon = horizon;
  est.probs.time = config.walk.T;
  est.probs.probs.resize(dim);
  est.standard_errors.resize(dim);
  const double n = static_cast<double>(config.n_runs);
  for (int i = 0; i < dim; ++i) {
    const double f = static_cast<double>(counts[i]) / n;
    est.probs.probs(i) = f;
    est.standard_errors(i) = std::sqrt(f * (1.0 - f) / n);
  }
  return est;
}

}  // namespace qwalk
