#include "qwalk/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

DensityMatrix::DensityMatrix(int horizon, int time, Eigen::MatrixXcd entries)
    : horizon_(horizon), time_(time), support_radius_(horizon),
      m_(std::move(entries)) {
  if (horizon_ < 0) throw std::invalid_argument("DensityMatrix: horizon < 0");
  if (m_.rows() != dim() || m_.cols() != dim())
    throw std::invalid_argument("DensityMatrix: entries have wrong dimension");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix rho(psi.horizon(), psi.time(),
                    psi.amplitudes() * psi.amplitudes().adjoint());
  rho.set_support_radius(psi.support_radius());
  return rho;
}

namespace detail {

namespace {

inline bool kept_by_channel(ChannelKind ch, int i, int j) {
  switch (ch) {
    case ChannelKind::Both:
      return i == j;
    case ChannelKind::CoinOnly:
      return ((i ^ j) & 1) == 0;  // equal coin index
    case ChannelKind::PositionOnly:
      return (i >> 1) == (j >> 1);  // equal site
  }
  return true;
}

}  // namespace

void conjugate_by_step(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out,
                       const CoinOp& coin, int horizon, int radius) {
  const int h = horizon;
  const int r = radius;
  const int row_lo = 2 * (h - r);
  const int row_len = 2 * (2 * r + 1);
  const Complex c00 = std::conj(coin(0, 0));
  const Complex c01 = std::conj(coin(0, 1));
  const Complex c10 = std::conj(coin(1, 0));
  const Complex c11 = std::conj(coin(1, 1));

  // out = in U+ : column (y,c') gathers the two coin columns at site y-a(c').
  for (int y = -(r + 1); y <= r + 1; ++y) {
    const int s0 = y + 1;  // source site for coin -1 (moves left)
    const int s1 = y - 1;  // source site for coin +1 (moves right)
    if (std::abs(s0) <= r) {
      out.col(2 * (y + h) + 0).segment(row_lo, row_len) =
          c00 * in.col(2 * (s0 + h) + 0).segment(row_lo, row_len) +
          c01 * in.col(2 * (s0 + h) + 1).segment(row_lo, row_len);
    }
    if (std::abs(s1) <= r) {
      out.col(2 * (y + h) + 1).segment(row_lo, row_len) =
          c10 * in.col(2 * (s1 + h) + 0).segment(row_lo, row_len) +
          c11 * in.col(2 * (s1 + h) + 1).segment(row_lo, row_len);
    }
  }

  // out = U (in U+) : walk step applied to every active column.
  for (int y = -(r + 1); y <= r + 1; ++y) {
    const int s0 = y + 1;
    const int s1 = y - 1;
    if (std::abs(s0) <= r)
      apply_step_inplace(out.col(2 * (y + h) + 0), coin, h, r);
    if (std::abs(s1) <= r)
      apply_step_inplace(out.col(2 * (y + h) + 1), coin, h, r);
  }
}

void damp_coherences(Eigen::MatrixXcd& m, ChannelKind channel, double p,
                     int horizon, int radius) {
  if (p == 0.0) return;
  const double keep = 1.0 - p;
  const int lo = 2 * (horizon - radius);
  const int hi = 2 * (horizon + radius) + 1;
  for (int j = lo; j <= hi; ++j) {
    for (int i = lo; i <= hi; ++i) {
      if (!kept_by_channel(channel, i, j)) m(i, j) *= keep;
    }
  }
}

}  // namespace detail

DensityMatrix dephase(const DensityMatrix& rho, ChannelKind channel) {
  DensityMatrix out = rho;
  const int h = rho.horizon();
  const int r = rho.support_radius();
  const int lo = 2 * (h - r);
  const int hi = 2 * (h + r) + 1;
  auto& m = out.entries();
  for (int j = lo; j <= hi; ++j) {
    for (int i = lo; i <= hi; ++i) {
      if (!detail::kept_by_channel(channel, i, j)) m(i, j) = Complex(0.0, 0.0);
    }
  }
  return out;
}

DensityMatrix step_master(const DensityMatrix& rho, const WalkConfig& config) {
  config.validate();
  if (rho.time() >= rho.horizon())
    throw CapacityError("step_master: lattice full (time == horizon)");
  const int h = rho.horizon();
  const int r = std::min(rho.support_radius(), h - 1);
  Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  detail::conjugate_by_step(rho.entries(), next, config.coin, h, r);
  detail::damp_coherences(next, config.channel, config.p, h, r + 1);
  DensityMatrix out(h, rho.time() + 1, std::move(next));
  out.set_support_radius(r + 1);
  return out;
}

DensityMatrix evolve_master(const WalkConfig& config) {
  config.validate();
  const PureState psi0 = initial_state(config.coin_init, config.T);
  const int dim = psi0.dim();
  Eigen::MatrixXcd cur = psi0.amplitudes() * psi0.amplitudes().adjoint();
  Eigen::MatrixXcd buf = Eigen::MatrixXcd::Zero(dim, dim);
  // Ping-pong between the two buffers; the window grows one site per step,
  // so stale content in the idle buffer always lies outside it and is zero.
  for (int t = 0; t < config.T; ++t) {
    detail::conjugate_by_step(cur, buf, config.coin, config.T, t);
    detail::damp_coherences(buf, config.channel, config.p, config.T, t + 1);
    std::swap(cur, buf);
  }
  DensityMatrix out(config.T, config.T, std::move(cur));
  out.set_support_radius(config.T);
  return out;
}

Distribution diagonal_distribution(const DensityMatrix& rho) {
  Distribution d;
  d.horizon = rho.horizon();
  d.time = rho.time();
  d.probs.resize(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) {
    double v = rho.entries()(i, i).real();
    if (v < 0.0) {
      if (v <= -1e-9) {
        std::ostringstream msg;
        msg << "diagonal_distribution: entry " << i << " = " << v
            << " below corruption threshold";
        throw NumericalCorruptionError(msg.str());
      }
      v = 0.0;
    }
    d.probs(i) = v;
  }
  return d;
}

}  // namespace qwalk
