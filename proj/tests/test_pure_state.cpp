#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/errors.hpp"
#include "qwalk/pure_state.hpp"
#include "oracles.hpp"

using namespace qwalk;

namespace {
const double inv_rt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("hadamard matrix entries and unitarity") {
  const CoinOp h = hadamard();
  CHECK(h(0, 0).real() == doctest::Approx(inv_rt2).epsilon(1e-15));
  CHECK(h(0, 1).real() == doctest::Approx(inv_rt2).epsilon(1e-15));
  CHECK(h(1, 0).real() == doctest::Approx(inv_rt2).epsilon(1e-15));
  CHECK(h(1, 1).real() == doctest::Approx(-inv_rt2).epsilon(1e-15));
  CHECK(h.imag().cwiseAbs().maxCoeff() == 0.0);

  // involution
  CHECK(((h * h) - CoinOp::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  // column norms
  CHECK(h.col(0).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h.col(1).norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(is_unitary(h));
}

TEST_CASE("initial_state places a unit amplitude at the origin") {
  const PureState s = initial_state(CoinLabel::plus, 3);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.time() == 0);
  for (int x = -3; x <= 3; ++x) {
    for (int c = 0; c < 2; ++c) {
      const Complex amp = s.amplitude(x, coin_from_index(c));
      if (x == 0 && c == 1) {
        CHECK(amp == Complex(1.0, 0.0));
      } else {
        CHECK(amp == Complex(0.0, 0.0));
      }
    }
  }

  const PureState tiny = initial_state(CoinLabel::minus, 0);
  CHECK(tiny.dim() == 2);
  CHECK(tiny.amplitude(0, CoinLabel::minus) == Complex(1.0, 0.0));

  const Distribution d = distribution(initial_state(CoinLabel::plus, 5));
  CHECK(d.prob(0, CoinLabel::plus) == 1.0);
  CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(initial_state(CoinLabel::plus, -1), std::invalid_argument);
}

TEST_CASE("one step from each coin-basis start") {
  // |0,+1> -> (|-1,-1> - |+1,+1>)/sqrt(2)
  PureState s = step_pure(initial_state(CoinLabel::plus, 2), hadamard());
  CHECK(s.time() == 1);
  CHECK(std::abs(s.amplitude(-1, CoinLabel::minus) - Complex(inv_rt2, 0.0)) < 1e-15);
  CHECK(std::abs(s.amplitude(+1, CoinLabel::plus) - Complex(-inv_rt2, 0.0)) < 1e-15);
  CHECK(std::abs(s.amplitude(-1, CoinLabel::plus)) == 0.0);
  CHECK(std::abs(s.amplitude(+1, CoinLabel::minus)) == 0.0);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));

  // |0,-1> -> (|-1,-1> + |+1,+1>)/sqrt(2)
  PureState m = step_pure(initial_state(CoinLabel::minus, 2), hadamard());
  CHECK(std::abs(m.amplitude(-1, CoinLabel::minus) - Complex(inv_rt2, 0.0)) < 1e-15);
  CHECK(std::abs(m.amplitude(+1, CoinLabel::plus) - Complex(inv_rt2, 0.0)) < 1e-15);
}

TEST_CASE("two steps from |0,+1> give the 1/4, 1/2, 1/4 marginal") {
  PureState s = initial_state(CoinLabel::plus, 2);
  s = step_pure(s, hadamard());
  s = step_pure(s, hadamard());
  const Distribution d = distribution(s);
  const Eigen::VectorXd marg = d.position_marginal();
  CHECK(marg(0) == doctest::Approx(0.25).epsilon(1e-14));  // x = -2
  CHECK(marg(1) == 0.0);
  CHECK(marg(2) == doctest::Approx(0.5).epsilon(1e-14));   // x = 0
  CHECK(marg(3) == 0.0);
  CHECK(marg(4) == doctest::Approx(0.25).epsilon(1e-14));  // x = +2
}

TEST_CASE("stepping a full lattice raises CapacityError") {
  PureState s = initial_state(CoinLabel::plus, 1);
  s = step_pure(s, hadamard());
  CHECK(s.time() == 1);
  CHECK_THROWS_AS(step_pure(s, hadamard()), CapacityError);
}

TEST_CASE("evolve_pure basics") {
  WalkConfig cfg;
  cfg.T = 0;
  cfg.coin_init = coin_state(CoinLabel::plus);
  const PureState s0 = evolve_pure(cfg);
  CHECK(s0.time() == 0);
  CHECK(s0.amplitude(0, CoinLabel::plus) == Complex(1.0, 0.0));

  cfg.T = 2;
  const Distribution d = distribution(evolve_pure(cfg));
  CHECK(d.prob(-2, CoinLabel::minus) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(d.prob(0, CoinLabel::minus) + d.prob(0, CoinLabel::plus) ==
        doctest::Approx(0.5).epsilon(1e-14));

  cfg.p = 0.5;
  CHECK_THROWS_AS(evolve_pure(cfg), std::invalid_argument);
}

TEST_CASE("evolve_pure reaches the ballistic spreading rate") {
  WalkConfig cfg;
  cfg.T = 100;
  cfg.coin_init = coin_state(CoinLabel::plus);
  const Distribution d = distribution(evolve_pure(cfg));
  double m2 = 0.0;
  for (int x = -100; x <= 100; ++x) {
    m2 += static_cast<double>(x) * x *
          (d.prob(x, CoinLabel::minus) + d.prob(x, CoinLabel::plus));
  }
  const double rate = std::sqrt(m2) / 100.0;
  CHECK(rate == doctest::Approx(std::sqrt(1.0 - inv_rt2)).epsilon(0.03));
}

TEST_CASE("distribution readout and global-phase invariance") {
  PureState s = step_pure(initial_state(CoinLabel::plus, 1), hadamard());
  const Distribution d = distribution(s);
  CHECK(d.prob(-1, CoinLabel::minus) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.prob(+1, CoinLabel::plus) == doctest::Approx(0.5).epsilon(1e-14));

  PureState rotated = s;
  rotated.amplitudes() *= std::exp(Complex(0.0, 0.7354));
  const Distribution d2 = distribution(rotated);
  CHECK((d.probs - d2.probs).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("norm preservation under random unitary coins") {
  std::mt19937_64 gen(20260809);
  for (int trial = 0; trial < 25; ++trial) {
    const CoinOp coin = oracles::random_unitary(gen);
    REQUIRE(is_unitary(coin, 1e-12));
    PureState s = initial_state(oracles::random_coin_state(gen), 30);
    for (int t = 0; t < 30; ++t) {
      s = step_pure(s, coin);
      CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("parity and lightcone hold exactly") {
  WalkConfig cfg;
  cfg.T = 25;
  const PureState s = evolve_pure(cfg);
  for (int x = -25; x <= 25; ++x) {
    for (int c = 0; c < 2; ++c) {
      const Complex amp = s.amplitude(x, coin_from_index(c));
      if ((x + 25) % 2 != 0) CHECK(amp == Complex(0.0, 0.0));
    }
  }
  // lightcone: horizon > T leaves the outside identically zero
  PureState wide = initial_state(CoinLabel::plus, 10);
  for (int t = 0; t < 4; ++t) wide = step_pure(wide, hadamard());
  for (int x = -10; x <= 10; ++x) {
    if (std::abs(x) > 4) {
      CHECK(wide.amplitude(x, CoinLabel::minus) == Complex(0.0, 0.0));
      CHECK(wide.amplitude(x, CoinLabel::plus) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("reflection symmetry between the two coin-basis starts") {
  for (int T : {1, 2, 3, 10, 25}) {
    WalkConfig plus_cfg;
    plus_cfg.T = T;
    plus_cfg.coin_init = coin_state(CoinLabel::plus);
    WalkConfig minus_cfg = plus_cfg;
    minus_cfg.coin_init = coin_state(CoinLabel::minus);
    const Distribution dp = distribution(evolve_pure(plus_cfg));
    const Distribution dm = distribution(evolve_pure(minus_cfg));
    for (int x = -T; x <= T; ++x) {
      CHECK(dp.prob(x, CoinLabel::minus) ==
            doctest::Approx(dm.prob(-x, CoinLabel::plus)).epsilon(1e-12));
      CHECK(dp.prob(x, CoinLabel::plus) ==
            doctest::Approx(dm.prob(-x, CoinLabel::minus)).epsilon(1e-12));
    }
  }
}

TEST_CASE("matches dense matrix-vector evolution for T <= 8") {
  std::mt19937_64 gen(77);
  for (int T = 1; T <= 8; ++T) {
    for (int variant = 0; variant < 3; ++variant) {
      CoinState init;
      if (variant == 0) {
        init = coin_state(CoinLabel::plus);
      } else if (variant == 1) {
        init = coin_state(CoinLabel::minus);
      } else {
        init = oracles::random_coin_state(gen);
      }
      WalkConfig cfg;
      cfg.T = T;
      cfg.coin_init = init;
      const PureState fast = evolve_pure(cfg);

      const Eigen::MatrixXcd u = oracles::dense_step_unitary(T, hadamard());
      Eigen::VectorXcd psi = initial_state(init, T).amplitudes();
      for (int t = 0; t < T; ++t) psi = u * psi;

      CHECK((fast.amplitudes() - psi).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}
