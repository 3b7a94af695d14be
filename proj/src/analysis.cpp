#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include <Eigen/SVD>

#include "qwalk/density_matrix.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/theory.hpp"

namespace qwalk::analysis {

MomentsRecord moments(const Distribution& dist) {
  const double total = dist.probs.sum();
  if (std::abs(total - 1.0) > 1e-8)
    throw std::invalid_argument("moments: distribution is not normalized");
  double mean = 0.0;
  double m2 = 0.0;
  for (int x = -dist.horizon; x <= dist.horizon; ++x) {
    for (int c = 0; c < 2; ++c) {
      const double p = dist.probs(dist.index(x, c));
      mean += x * p;
      m2 += static_cast<double>(x) * x * p;
    }
  }
  MomentsRecord rec;
  rec.T = dist.time;
  rec.mean = mean;
  rec.second_moment = m2;
  rec.sigma = std::sqrt(m2);
  return rec;
}

std::pair<double, double> fit_affine(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw FitError("fit_affine: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) throw FitError("fit_affine: degenerate abscissae");
  const double slope = sxy / sxx;
  return {my - slope * mx, slope};
}

SlopeEstimate scaled_slope_from_sigmas(int T, const std::vector<double>& p_grid,
                                       const std::vector<double>& sigmas) {
  const auto [intercept, slope] = fit_affine(p_grid, sigmas);
  (void)intercept;
  SlopeEstimate est;
  est.T = T;
  est.scaled_slope = -slope / (static_cast<double>(T) * T);
  est.p_grid = p_grid;
  return est;
}

namespace {

void check_slope_grid(int T, const std::vector<double>& p_grid) {
  if (T < 1) throw std::invalid_argument("scaled_small_p_slope: T must be >= 1");
  if (p_grid.size() < 2)
    throw std::invalid_argument("scaled_small_p_slope: need >= 2 grid points");
  if (p_grid.front() != 0.0)
    throw std::invalid_argument("scaled_small_p_slope: grid must start at p = 0");
  for (std::size_t i = 1; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > p_grid[i - 1]))
      throw std::invalid_argument(
          "scaled_small_p_slope: grid must be strictly increasing");
  }
  for (double p : p_grid) {
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("scaled_small_p_slope: p outside [0,1]");
    if (!theory::in_first_order_regime(T, p))
      throw RegimeError("scaled_small_p_slope: pT > 0.2 leaves the small-p regime");
  }
}

double master_sigma(int T, double p, ChannelKind channel,
                    const CoinState& coin_init) {
  WalkConfig cfg;
  cfg.T = T;
  cfg.p = p;
  cfg.channel = channel;
  cfg.coin_init = coin_init;
  return moments(diagonal_distribution(evolve_master(cfg))).sigma;
}

}  // namespace

SlopeEstimate scaled_small_p_slope(int T, ChannelKind channel,
                                   const std::vector<double>& p_grid,
                                   const CoinState& coin_init, int jobs) {
  check_slope_grid(T, p_grid);
  std::vector<double> sigmas(p_grid.size(), 0.0);
  detail::parallel_for_index(p_grid.size(), jobs, [&](std::size_t i) {
    sigmas[i] = master_sigma(T, p_grid[i], channel, coin_init);
  });
  return scaled_slope_from_sigmas(T, p_grid, sigmas);
}

TwoTermFit fit_sigma_ratio(const std::vector<std::array<double, 3>>& samples) {
  if (samples.size() < 2) throw FitError("fit_sigma_ratio: too few samples");
  Eigen::MatrixXd design(samples.size(), 2);
  Eigen::VectorXd rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double T = samples[i][0];
    const double p = samples[i][1];
    design(i, 0) = p * T;
    design(i, 1) = p;
    rhs(i) = samples[i][2] - 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0 || sv(sv.size() - 1) <= 1e-12 * sv(0))
    throw FitError("fit_sigma_ratio: degenerate design matrix");
  const Eigen::Vector2d sol = svd.solve(rhs);
  return {-sol(0), sol(1)};
}

double fit_p_coefficient(const std::vector<std::array<double, 3>>& samples) {
  if (samples.empty()) throw FitError("fit_p_coefficient: no samples");
  const double c1 = 1.0 / (6.0 * std::sqrt(2.0));
  double num = 0.0;
  double den = 0.0;
  for (const auto& s : samples) {
    const double T = s[0];
    const double p = s[1];
    const double residual = s[2] - 1.0 + c1 * p * T;
    num += p * residual;
    den += p * p;
  }
  if (den <= 0.0) throw FitError("fit_p_coefficient: degenerate design (all p = 0)");
  return num / den;
}

namespace {

std::vector<std::array<double, 3>> ratio_samples(
    const std::vector<int>& T_list,
    const std::function<double(int, double)>& sigma_at) {
  std::vector<std::array<double, 3>> samples;
  for (int T : T_list) {
    std::vector<double> sigmas(kPcoefLevels.size());
    for (std::size_t i = 0; i < kPcoefLevels.size(); ++i) {
      sigmas[i] = sigma_at(T, kPcoefLevels[i] / T);
    }
    for (std::size_t i = 1; i < kPcoefLevels.size(); ++i) {
      samples.push_back({static_cast<double>(T), kPcoefLevels[i] / T,
                         sigmas[i] / sigmas[0]});
    }
  }
  return samples;
}

void check_T_list(const std::vector<int>& T_list) {
  std::set<int> distinct(T_list.begin(), T_list.end());
  if (distinct.size() < 3)
    throw std::invalid_argument("p_coefficient_fit: need >= 3 distinct T values");
  for (int T : T_list) {
    if (T < 1) throw std::invalid_argument("p_coefficient_fit: T must be >= 1");
  }
}

}  // namespace

double p_coefficient_fit(const std::vector<int>& T_list, ChannelKind channel,
                         const CoinState& coin_init, int jobs) {
  check_T_list(T_list);

  // One task per (T, level); results keyed by index so any schedule gives
  // identical output.
  struct Task {
    int T;
    double p;
  };
  std::vector<Task> tasks;
  for (int T : T_list) {
    for (double level : kPcoefLevels) tasks.push_back({T, level / T});
  }
  std::vector<double> sigmas(tasks.size(), 0.0);
  detail::parallel_for_index(tasks.size(), jobs, [&](std::size_t i) {
    sigmas[i] = master_sigma(tasks[i].T, tasks[i].p, channel, coin_init);
  });

  std::vector<std::array<double, 3>> samples;
  const std::size_t levels = kPcoefLevels.size();
  for (std::size_t ti = 0; ti < T_list.size(); ++ti) {
    const double s0 = sigmas[ti * levels];
    for (std::size_t i = 1; i < levels; ++i) {
      samples.push_back({static_cast<double>(T_list[ti]), tasks[ti * levels + i].p,
                         sigmas[ti * levels + i] / s0});
    }
  }
  return fit_p_coefficient(samples);
}

double p_coefficient_fit_synthetic(const std::vector<int>& T_list) {
  check_T_list(T_list);
  const auto samples = ratio_samples(T_list, [](int T, double p) {
    return theory::sigma_bound(T, p);
  });
  return fit_p_coefficient(samples);
}

}  // namespace qwalk::analysis
