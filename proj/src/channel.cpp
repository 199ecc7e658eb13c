#include "latd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace latd {

ChannelParams channel_from_lattice(const ConstructionDLattice& lat, double snr_db) {
  ChannelParams cp;
  cp.n = lat.n;
  cp.N = lat.N;
  cp.gamma = std::pow(10.0, snr_db / 10.0);
  cp.sigma_n2 = std::exp(2.0 / lat.dim * lat.log_vol) / cp.gamma;
  return cp;
}

FadingRealization sample_fading(int n, RngStream& stream) {
  FadingRealization f;
  f.h.resize(n);
  for (int i = 0; i < n; ++i) f.h[i] = std::sqrt(stream.next_exponential());
  return f;
}

Eigen::VectorXd transmit(const Eigen::VectorXd& x, const FadingRealization& fading,
                         double sigma_n2, RngStream& stream) {
  const int n = static_cast<int>(fading.h.size());
  if (x.size() % n != 0) throw std::invalid_argument("x length not a multiple of n");
  const double sigma = std::sqrt(sigma_n2);
  Eigen::VectorXd y(x.size());
  for (Eigen::Index c = 0; c < x.size(); ++c) {
    double noise = sigma > 0.0 ? sigma * stream.next_gaussian() : 0.0;
    y(c) = fading.h[c % n] * x(c) + noise;
  }
  return y;
}

double poltyrev_threshold(const ConstructionDLattice& lat,
                          const FadingRealization& fading) {
  double prod = 1.0;
  for (double h : fading.h) {
    if (h < 0) throw std::invalid_argument("fading magnitude must be nonnegative");
    prod *= std::pow(h, 2.0 / lat.n);
  }
  return std::exp(2.0 / lat.dim * lat.log_vol) * prod / (2.0 * M_PI * M_E);
}

OutageEstimate outage_probability(double gamma, int n, long long trials,
                                  RngStream& stream) {
  if (trials < 10000) throw std::invalid_argument("need at least 1e4 trials");
  const double log_threshold = n * std::log(2.0 * M_PI * M_E / gamma);
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    double log_prod = 0.0;
    for (int i = 0; i < n; ++i) log_prod += std::log(stream.next_exponential());
    if (log_prod < log_threshold) ++hits;
  }
  OutageEstimate est;
  est.p_out = static_cast<double>(hits) / static_cast<double>(trials);
  est.ci = wilson_interval(hits, trials);
  return est;
}

double outage_exact_n1(double gamma) {
  return -std::expm1(-2.0 * M_PI * M_E / gamma);
}

}  // namespace latd
