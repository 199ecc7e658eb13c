#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "latd/channel.hpp"
#include "latd/lattice.hpp"

// Segmentwise successive-cancellation decoding: every segment is an exact
// n-dimensional CVP on its faded diagonal block; segments past k_a first
// subtract the decided segments' contributions through the off-diagonal
// blocks of the generator. Exactness of the per-segment CVP is what carries
// the diversity order.
namespace latd {

struct SegmentBasis {
  Eigen::MatrixXd B;      // row r = r-th faded basis vector
  Eigen::MatrixXd gram;   // B B^T
  Eigen::MatrixXd chol;   // lower Cholesky factor of gram
  double cond = 0.0;      // spectral condition number of B
  bool ok = false;        // positive definite and cond <= 1e12
};

enum class Cancellation { kBlock, kLiteral };

struct DecodeOptions {
  Cancellation mode = Cancellation::kBlock;
  bool assemble_point = true;   // skip x-hat assembly in hot loops
};

struct DecodeResult {
  IntVec u;
  Eigen::VectorXd x;                // empty unless assemble_point
  std::vector<char> seg_ok;
  bool cond_failure = false;
};

SegmentBasis make_segment_basis(const Eigen::MatrixXd& block,
                                const FadingRealization& fading);

// Exact closest vector: argmin over Z^n of |y - u B|^2, by depth-first
// enumeration on the Cholesky triangle, seeded with the rounding point and
// shrinking the radius at every improvement. Requires basis.ok.
IntVec cvp_exact(const Eigen::VectorXd& y, const SegmentBasis& basis);

DecodeResult decode(const ConstructionDLattice& lat, const Eigen::VectorXd& y,
                    const FadingRealization& fading,
                    const DecodeOptions& opts = {});

// Least-squares slope of log10(fer) against log10(gamma) on points with
// fer > 0, returned as the diversity estimate d = -slope.
double estimate_diversity(const std::vector<std::pair<double, double>>& fer_points);

}  // namespace latd
