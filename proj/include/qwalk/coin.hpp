#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

// Coin side a in {-1,+1}; flat storage maps -1 -> 0, +1 -> 1.
enum class CoinLabel : int { minus = -1, plus = +1 };

inline int coin_index(CoinLabel a) { return a == CoinLabel::minus ? 0 : 1; }
inline int coin_value(CoinLabel a) { return static_cast<int>(a); }
inline CoinLabel coin_from_index(int c) {
  return c == 0 ? CoinLabel::minus : CoinLabel::plus;
}

// 2x2 unitary on the coin, rows/columns ordered (-1,+1).
using CoinOp = Eigen::Matrix2cd;

// Pure coin state, amplitudes ordered (-1,+1).
using CoinState = Eigen::Vector2cd;

// (1/sqrt(2)) [[1,1],[1,-1]].
CoinOp hadamard();

bool is_unitary(const CoinOp& c, double tol = 1e-12);

CoinState coin_state(CoinLabel a);

// (|-1> + i|+1>)/sqrt(2); yields a left-right symmetric Hadamard walk.
CoinState symmetric_coin_state();

}  // namespace qwalk
