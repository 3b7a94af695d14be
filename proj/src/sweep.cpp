#include "qwalk/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qwalk/density_matrix.hpp"
#include "qwalk/io.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/trajectories.hpp"

namespace qwalk {

void SweepSpec::validate() const {
  if (T_values.empty() || p_values.empty() || channels.empty())
    throw std::invalid_argument("SweepSpec: empty grid");
  for (int T : T_values) {
    if (T < 0) throw std::invalid_argument("SweepSpec: T must be >= 0");
  }
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("SweepSpec: p must be in [0,1]");
  }
  if (engine == Engine::trajectory && n_runs < 1)
    throw std::invalid_argument("SweepSpec: n_runs must be >= 1");
  if (jobs < 1) throw std::invalid_argument("SweepSpec: jobs must be >= 1");
}

std::vector<analysis::MomentsRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();

  struct Point {
    ChannelKind channel;
    int T;
    double p;
  };
  std::vector<ChannelKind> channels = spec.channels;
  std::sort(channels.begin(), channels.end(),
            [](ChannelKind a, ChannelKind b) {
              return io::channel_token(a) < io::channel_token(b);
            });
  std::vector<int> Ts = spec.T_values;
  std::sort(Ts.begin(), Ts.end());
  std::vector<double> ps = spec.p_values;
  std::sort(ps.begin(), ps.end());

  std::vector<Point> grid;
  for (ChannelKind ch : channels) {
    for (int T : Ts) {
      for (double p : ps) grid.push_back({ch, T, p});
    }
  }

  std::vector<analysis::MomentsRecord> rows(grid.size());
  detail::parallel_for_index(grid.size(), spec.jobs, [&](std::size_t i) {
    const Point& pt = grid[i];
    WalkConfig cfg;
    cfg.T = pt.T;
    cfg.p = pt.p;
    cfg.channel = pt.channel;
    cfg.coin_init = spec.coin_init;
    analysis::MomentsRecord rec;
    if (spec.engine == SweepSpec::Engine::master) {
      rec = analysis::moments(diagonal_distribution(evolve_master(cfg)));
    } else {
      TrajectoryConfig tc;
      tc.walk = cfg;
      tc.n_runs = spec.n_runs;
      tc.seed = derive_run_seed(spec.seed, i);
      rec = analysis::moments(estimate_distribution(tc, 1).probs);
    }
    rec.p = pt.p;
    rec.channel = pt.channel;
    rows[i] = rec;
  });
  return rows;
}

}  // namespace qwalk
