#pragma once

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/pure_state.hpp"
#include "qwalk/walk_config.hpp"

namespace qwalk {

/// Density operator on the joint position x coin basis, indexed like
/// PureState.  Hermitian, trace one, diagonal nonnegative up to roundoff.
class DensityMatrix {
 public:
  // Takes ownership of a dim x dim matrix; support is assumed to cover the
  // whole lattice.
  DensityMatrix(int horizon, int time, Eigen::MatrixXcd entries);

  static DensityMatrix from_pure(const PureState& psi);

  int horizon() const { return horizon_; }
  int time() const { return time_; }
  int dim() const { return 2 * (2 * horizon_ + 1); }
  int index(int x, int c) const { return 2 * (x + horizon_) + c; }

  Eigen::MatrixXcd& entries() { return m_; }
  const Eigen::MatrixXcd& entries() const { return m_; }

  Complex trace() const { return m_.trace(); }

  // All nonzero entries sit in the block |x|,|y| <= support_radius(); used
  // only to bound sweeps, never to change results.
  int support_radius() const { return support_radius_; }
  void set_support_radius(int r) { support_radius_ = r; }

 private:
  int horizon_;
  int time_;
  int support_radius_;
  Eigen::MatrixXcd m_;
};

// Non-selective projective measurement in the channel basis: zeroes every
// matrix element the channel's projectors do not preserve.  Trace and
// Hermiticity are preserved exactly.
DensityMatrix dephase(const DensityMatrix& rho, ChannelKind channel);

// One step of the discrete master equation:
//   rho' = (1-p) U rho U+  +  p * dephase(U rho U+, channel).
DensityMatrix step_master(const DensityMatrix& rho, const WalkConfig& config);

// T master-equation steps from the initial pure density matrix.
DensityMatrix evolve_master(const WalkConfig& config);

// Diagonal readout.  Roundoff negatives above -1e-9 are clamped to zero;
// anything at or below -1e-9 raises NumericalCorruptionError.  The trace is
// never renormalized.
Distribution diagonal_distribution(const DensityMatrix& rho);

namespace detail {

// out <- U in U+ computed with the two-nonzeros-per-row structure of U;
// sweeps are bounded by `radius` (input support), output support radius+1.
// Entries of `out` outside the output block must already be zero.
void conjugate_by_step(const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out,
                       const CoinOp& coin, int horizon, int radius);

// Multiplies every entry the channel dephases by (1-p) inside the block
// |x|,|y| <= radius.  Entrywise equal to (1-p) m + p dephase(m).
void damp_coherences(Eigen::MatrixXcd& m, ChannelKind channel, double p,
                     int horizon, int radius);

}  // namespace detail

}  // namespace qwalk
