#include "latd/decoder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "latd/stats.hpp"

namespace latd {
namespace {

constexpr double kCondLimit = 1e12;

}  // namespace

SegmentBasis make_segment_basis(const Eigen::MatrixXd& block,
                                const FadingRealization& fading) {
  const int n = static_cast<int>(block.rows());
  if (static_cast<int>(fading.h.size()) != n)
    throw std::invalid_argument("fading length must match block size");
  SegmentBasis sb;
  sb.B = block;
  for (int c = 0; c < n; ++c) sb.B.col(c) *= fading.h[c];
  sb.gram = sb.B * sb.B.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sb.B);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  sb.cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  Eigen::LLT<Eigen::MatrixXd> llt(sb.gram);
  sb.ok = std::isfinite(sb.cond) && sb.cond <= kCondLimit &&
          llt.info() == Eigen::Success;
  if (sb.ok) sb.chol = llt.matrixL();
  return sb;
}

IntVec cvp_exact(const Eigen::VectorXd& y, const SegmentBasis& basis) {
  if (!basis.ok) throw std::invalid_argument("segment basis failed conditioning");
  const int n = static_cast<int>(basis.B.rows());
  // |y - u B|^2 = |c - R u|^2 with R = chol^T (positive diagonal) and
  // c = chol^{-1} B y; levels run from n-1 down to 0, each level's cost term
  // is (R(i,i) u_i + sum_{j>i} R(i,j) u_j - c_i)^2.
  const Eigen::MatrixXd R = basis.chol.transpose();
  const Eigen::VectorXd c =
      basis.chol.triangularView<Eigen::Lower>().solve(basis.B * y);
  std::vector<double> partial(n + 1, 0.0);  // cost accrued above each level
  std::vector<double> center(n, 0.0);
  std::vector<long long> u(n, 0), step(n, 0), best_u(n, 0);
  double best = std::numeric_limits<double>::infinity();
  auto enter_level = [&](int lvl) {
    double b = c(lvl);
    for (int j = lvl + 1; j < n; ++j) b -= R(lvl, j) * static_cast<double>(u[j]);
    center[lvl] = b / R(lvl, lvl);
    u[lvl] = static_cast<long long>(std::llround(center[lvl]));
    step[lvl] = center[lvl] >= static_cast<double>(u[lvl]) ? 1 : -1;
  };
  auto advance = [&](int lvl) {
    u[lvl] += step[lvl];
    step[lvl] = -step[lvl] - (step[lvl] > 0 ? 1 : -1);
  };
  int i = n - 1;
  enter_level(i);
  while (true) {
    const double diff = R(i, i) * (static_cast<double>(u[i]) - center[i]);
    const double dist = partial[i + 1] + diff * diff;
    if (dist < best) {
      if (i > 0) {
        partial[i] = dist;
        enter_level(--i);
      } else {
        best = dist;
        best_u = u;
        advance(0);  // the first leaf is the rounding point; keep zigzagging
      }
    } else {
      // Zigzag widens monotonically, so this level holds nothing closer.
      if (i == n - 1) break;
      advance(++i);
    }
  }
  IntVec out(n);
  for (int k = 0; k < n; ++k) out[k] = best_u[k];
  return out;
}

DecodeResult decode(const ConstructionDLattice& lat, const Eigen::VectorXd& y,
                    const FadingRealization& fading, const DecodeOptions& opts) {
  if (y.size() != lat.dim) throw std::invalid_argument("y has wrong length");
  if (static_cast<int>(fading.h.size()) != lat.n)
    throw std::invalid_argument("fading length must be n");
  const int n = lat.n;
  const int N = lat.N;
  const int ka = lat.family.dims.back();
  const int levels = lat.family.a + 1;
  // One faded basis per level; every segment's diagonal block is its level's T.
  std::vector<int> first_seg(levels + 1, -1);
  for (int j = 0; j < N; ++j)
    if (first_seg[lat.seg_level[j]] < 0) first_seg[lat.seg_level[j]] = j;
  std::vector<SegmentBasis> level_basis(levels + 1);
  for (int lv = 1; lv <= levels; ++lv)
    if (first_seg[lv] >= 0) {
      const int s = first_seg[lv];
      level_basis[lv] = make_segment_basis(lat.G.block(s * n, s * n, n, n), fading);
    }
  DecodeResult res;
  res.u.assign(lat.dim, 0);
  res.seg_ok.assign(N, 1);
  auto decode_segment = [&](int j, const Eigen::VectorXd& target) {
    const SegmentBasis& sb = level_basis[lat.seg_level[j]];
    if (!sb.ok) {
      res.seg_ok[j] = 0;
      res.cond_failure = true;
      return;
    }
    const IntVec uj = cvp_exact(target, sb);
    for (int r = 0; r < n; ++r) res.u[j * n + r] = uj[r];
  };
  for (int j = 0; j < ka; ++j) decode_segment(j, y.segment(j * n, n));
  if (ka < N) {
    // unfaded per-row contributions of the decided segments
    std::vector<Eigen::RowVectorXd> v(ka);
    for (int t = 0; t < ka; ++t) {
      Eigen::RowVectorXd ut(n);
      for (int r = 0; r < n; ++r) ut(r) = static_cast<double>(res.u[t * n + r]);
      v[t] = ut * lat.G.block(t * n, t * n, n, n);
    }
    Eigen::RowVectorXd literal_corr;
    if (opts.mode == Cancellation::kLiteral) {
      literal_corr = Eigen::RowVectorXd::Zero(n);
      for (int t = 0; t < ka; ++t) literal_corr += v[t];
      for (int c = 0; c < n; ++c) literal_corr(c) *= fading.h[c];
    }
    for (int j = ka; j < N; ++j) {
      Eigen::VectorXd target = y.segment(j * n, n);
      if (opts.mode == Cancellation::kBlock) {
        for (int t = 0; t < ka; ++t) {
          const i64 m = lat.Mext[t][j];
          if (m == 0) continue;
          for (int c = 0; c < n; ++c)
            target(c) -= static_cast<double>(m) * v[t](c) * fading.h[c];
        }
      } else {
        target -= literal_corr.transpose();
      }
      decode_segment(j, target);
    }
  }
  if (opts.assemble_point) res.x = encode(lat, res.u).x;
  return res;
}

double estimate_diversity(const std::vector<std::pair<double, double>>& fer_points) {
  std::vector<double> lx, ly;
  for (const auto& [snr_db, fer] : fer_points)
    if (fer > 0.0) {
      lx.push_back(snr_db / 10.0);  // log10 of gamma
      ly.push_back(std::log10(fer));
    }
  if (lx.size() < 3)
    throw std::invalid_argument("need at least three positive-FER points");
  return -ls_slope(lx, ly);
}

}  // namespace latd
