#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "latd/channel.hpp"

using namespace latd;

namespace {

ConstructionDLattice worked_instance() {
  NumberField f = build_real_cyclotomic5();
  NestedCodeFamily fam = build_family(5, 3, {1, 2}, {{{0}}, {{1}}});
  PrimeIdealTower tower = prime_tower(f, 5, {2, -1}, 2);
  return build_lattice(f, fam, tower);
}

}  // namespace

TEST_CASE("snr normalization ties noise variance to the volume") {
  ConstructionDLattice lat = worked_instance();
  ChannelParams cp = channel_from_lattice(lat, 10.0);
  CHECK(cp.n == 2);
  CHECK(cp.N == 3);
  CHECK(cp.gamma == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(cp.gamma * cp.sigma_n2 ==
        doctest::Approx(std::exp(2.0 / 6.0 * lat.log_vol)).epsilon(1e-12));
  ChannelParams cp0 = channel_from_lattice(lat, 0.0);
  CHECK(cp0.gamma == doctest::Approx(1.0));
}

TEST_CASE("fading magnitudes are square roots of unit exponentials") {
  RngStream s = make_stream(11, StreamPurpose::kFading, 0, 0);
  const int trials = 500000;
  double sum_h2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    FadingRealization f = sample_fading(2, s);
    REQUIRE(f.h.size() == 2);
    REQUIRE(f.h[0] >= 0.0);
    REQUIRE(f.h[1] >= 0.0);
    sum_h2 += f.h[0] * f.h[0] + f.h[1] * f.h[1];
  }
  CHECK(sum_h2 / (2.0 * trials) == doctest::Approx(1.0).epsilon(0.005));
}

TEST_CASE("noiseless transmission fades componentwise with period n") {
  RngStream s = make_stream(12, StreamPurpose::kNoise, 0, 0);
  Eigen::VectorXd x(6);
  x << 1, 2, 3, 4, 5, 6;
  FadingRealization f;
  f.h = {0.5, 2.0};
  Eigen::VectorXd y = transmit(x, f, 0.0, s);
  CHECK(y(0) == doctest::Approx(0.5));
  CHECK(y(1) == doctest::Approx(4.0));
  CHECK(y(2) == doctest::Approx(1.5));
  CHECK(y(3) == doctest::Approx(8.0));
  CHECK(y(4) == doctest::Approx(2.5));
  CHECK(y(5) == doctest::Approx(12.0));
  Eigen::VectorXd bad(5);
  CHECK_THROWS_AS(transmit(bad, f, 0.0, s), std::invalid_argument);
}

TEST_CASE("noise variance matches sigma_n2") {
  RngStream s = make_stream(13, StreamPurpose::kNoise, 0, 0);
  FadingRealization f;
  f.h = {1.0};
  const int trials = 200000;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(trials);
  Eigen::VectorXd y = transmit(x, f, 4.0, s);
  const double var = y.squaredNorm() / trials;
  CHECK(var == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("per-draw noise tolerance follows the fading product") {
  ConstructionDLattice lat = worked_instance();
  FadingRealization f;
  f.h = {2.0, 1.0};
  const double want = std::exp(2.0 / 6.0 * lat.log_vol) *
                      std::pow(4.0, 1.0 / 2.0) / (2.0 * M_PI * M_E);
  CHECK(poltyrev_threshold(lat, f) == doctest::Approx(want).epsilon(1e-12));
  FadingRealization dead;
  dead.h = {0.0, 1.0};
  CHECK(poltyrev_threshold(lat, dead) == 0.0);
}

TEST_CASE("single-block outage matches the closed form") {
  const double gamma = std::pow(10.0, 2.0);  // 20 dB
  const double exact = outage_exact_n1(gamma);
  CHECK(exact == doctest::Approx(1.0 - std::exp(-2.0 * M_PI * M_E / gamma)).epsilon(1e-12));
  RngStream s = make_stream(14, StreamPurpose::kOutage, 0, 0);
  OutageEstimate est = outage_probability(gamma, 1, 1000000, s);
  CHECK(est.ci.lo <= exact);
  CHECK(est.ci.hi >= exact);
  CHECK(std::abs(est.p_out - exact) < 2e-3);
}

TEST_CASE("outage probability falls with diversity order at high snr") {
  RngStream s = make_stream(15, StreamPurpose::kOutage, 0, 0);
  const double gamma = std::pow(10.0, 3.5);  // 35 dB
  OutageEstimate n1 = outage_probability(gamma, 1, 200000, s);
  OutageEstimate n2 = outage_probability(gamma, 2, 200000, s);
  CHECK(n1.p_out > 10.0 * n2.p_out);
  CHECK_THROWS_AS(outage_probability(gamma, 1, 100, s), std::invalid_argument);
}
