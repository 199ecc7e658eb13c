#pragma once

#include <Eigen/Dense>
#include <vector>

#include "latd/lattice.hpp"
#include "latd/rng.hpp"
#include "latd/stats.hpp"

// Rayleigh block fading: one magnitude per field embedding, constant across
// the N segments of a lattice point, plus white Gaussian noise. SNR is
// normalized by the lattice volume, so the Poltyrev threshold and the outage
// probability depend only on (n, gamma).
namespace latd {

struct ChannelParams {
  int n = 0;
  int N = 0;
  double sigma_b2 = 1.0;   // Rayleigh scale, fixed so E[h^2] = 1
  double sigma_n2 = 0.0;   // noise variance per real dimension
  double gamma = 0.0;      // SNR, gamma * sigma_n2 = vol^(2/nN)
};

struct FadingRealization {
  std::vector<double> h;   // nonnegative magnitudes, one per block
};

struct OutageEstimate {
  double p_out = 0.0;
  Interval ci;
};

ChannelParams channel_from_lattice(const ConstructionDLattice& lat, double snr_db);

// h_i = sqrt(E_i) with E_i standard exponential, so E[h_i^2] = 1.
FadingRealization sample_fading(int n, RngStream& stream);

// Componentwise y_c = h_{c mod n} x_c + noise, noise iid N(0, sigma_n2).
Eigen::VectorXd transmit(const Eigen::VectorXd& x, const FadingRealization& fading,
                         double sigma_n2, RngStream& stream);

// Largest tolerable noise variance for this fading draw:
// vol^(2/nN) * prod h_i^(2/n) / (2 pi e). Zero when any h_i is zero.
double poltyrev_threshold(const ConstructionDLattice& lat,
                          const FadingRealization& fading);

// Monte-Carlo Pr(prod h_i^2 < (2 pi e / gamma)^n) with a Wilson interval.
OutageEstimate outage_probability(double gamma, int n, long long trials,
                                  RngStream& stream);

// Exact n = 1 outage, 1 - exp(-2 pi e / gamma).
double outage_exact_n1(double gamma);

}  // namespace latd
