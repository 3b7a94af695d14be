#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk {

// Grid of (channel, T, p) points evaluated with one engine.
struct SweepSpec {
  std::vector<int> T_values;
  std::vector<double> p_values;
  std::vector<ChannelKind> channels;
  CoinState coin_init = symmetric_coin_state();

  enum class Engine { master, trajectory };
  Engine engine = Engine::master;

  std::uint64_t n_runs = 10000;  // trajectory engine only
  std::uint64_t seed = 1;
  int jobs = 1;

  void validate() const;
};

// One moments row per grid point, sorted by (channel token, T, p).  Output
// is identical for any jobs value: trajectory seeds are keyed by the point's
// position in the sorted grid, not by execution order.
std::vector<analysis::MomentsRecord> run_sweep(const SweepSpec& spec);

}  // namespace qwalk
