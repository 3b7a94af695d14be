#include "qwalk/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qwalk/pure_state.hpp"

namespace qwalk::theory {

namespace {

double spread_rate() { return std::sqrt(1.0 - 1.0 / std::sqrt(2.0)); }

struct MomentTable {
  std::vector<double> mean;
  std::vector<double> m2;
};

// Exact mean and second moment of the noiseless walk for every s = 0..T.
MomentTable pure_moment_table(const CoinState& init, int T) {
  MomentTable tab;
  tab.mean.assign(T + 1, 0.0);
  tab.m2.assign(T + 1, 0.0);
  PureState state = initial_state(init, T);
  const CoinOp coin = hadamard();
  for (int s = 1; s <= T; ++s) {
    state = step_pure(state, coin);
    double mean = 0.0;
    double m2 = 0.0;
    for (int x = -s; x <= s; ++x) {
      const double px = std::norm(state.amplitude(x, CoinLabel::minus)) +
                        std::norm(state.amplitude(x, CoinLabel::plus));
      mean += x * px;
      m2 += static_cast<double>(x) * x * px;
    }
    tab.mean[s] = mean;
    tab.m2[s] = m2;
  }
  return tab;
}

}  // namespace

double asymptotic_sigma(int T) {
  if (T < 1) throw std::invalid_argument("asymptotic_sigma: T must be >= 1");
  return spread_rate() * (T - 1.0 / T);
}

double asymptotic_mean(int T, CoinLabel a) {
  if (T < 0) throw std::invalid_argument("asymptotic_mean: T must be >= 0");
  return coin_value(a) * (1.0 - 1.0 / std::sqrt(2.0)) * T;
}

double sigma_bound(int T, double p) {
  if (T < 1) throw std::invalid_argument("sigma_bound: T must be >= 1");
  if (p < 0.0) throw std::invalid_argument("sigma_bound: p must be >= 0");
  const double rt2 = std::sqrt(2.0);
  const double bracket =
      1.0 - p * T / (6.0 * rt2) + (p / rt2) * (1.0 - 1.0 / rt2);
  return asymptotic_sigma(T) * bracket;
}

bool in_first_order_regime(int T, double p) { return p * T <= 0.2; }

TheoryPrediction predict(int T, double p, CoinLabel a) {
  TheoryPrediction out;
  out.T = T;
  out.p = p;
  out.sigma_upper = sigma_bound(T, p);
  out.mean_a = asymptotic_mean(T, a);
  out.sigma_ideal = asymptotic_sigma(T);
  out.beyond_first_order = !in_first_order_regime(T, p);
  return out;
}

double first_order_sigma2(int T, double p) {
  return first_order_sigma2(T, p, symmetric_coin_state());
}

double first_order_sigma2(int T, double p, const CoinState& coin_init) {
  if (T < 0 || T > 200)
    throw std::invalid_argument("first_order_sigma2: T must be in [0, 200]");
  if (T == 0) return 0.0;

  // Moment tables of the coin-basis walks give the post-event spreading; a
  // single forward pass of the configured walk supplies the event-time
  // distributions P(y,b,t).
  const MomentTable tab_minus = pure_moment_table(coin_state(CoinLabel::minus), T);
  const MomentTable tab_plus = pure_moment_table(coin_state(CoinLabel::plus), T);

  PureState state = initial_state(coin_init, T);
  const CoinOp coin = hadamard();
  double one_event_sum = 0.0;
  double m2_final = 0.0;
  for (int t = 1; t <= T; ++t) {
    state = step_pure(state, coin);
    const int s = T - t;
    for (int y = -t; y <= t; ++y) {
      for (int c = 0; c < 2; ++c) {
        const double pyb =
            std::norm(state.amplitude(y, coin_from_index(c)));
        if (pyb == 0.0) continue;
        const MomentTable& tab = (c == 0) ? tab_minus : tab_plus;
        one_event_sum +=
            pyb * (tab.m2[s] + 2.0 * y * tab.mean[s] +
                   static_cast<double>(y) * y);
      }
    }
    if (t == T) {
      for (int x = -T; x <= T; ++x) {
        const double px = std::norm(state.amplitude(x, CoinLabel::minus)) +
                          std::norm(state.amplitude(x, CoinLabel::plus));
        m2_final += static_cast<double>(x) * x * px;
      }
    }
  }
  return m2_final + p * (one_event_sum - T * m2_final);
}

}  // namespace qwalk::theory
