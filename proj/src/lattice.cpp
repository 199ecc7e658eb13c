#include "latd/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace latd {
namespace {

constexpr long long kScanGuard = 10000000;

Eigen::VectorXd to_real(const IntVec& u) {
  Eigen::VectorXd v(u.size());
  for (size_t i = 0; i < u.size(); ++i) v(static_cast<Eigen::Index>(i)) = static_cast<double>(u[i]);
  return v;
}

}  // namespace

ConstructionDLattice build_lattice(const NumberField& field,
                                   const NestedCodeFamily& family,
                                   const PrimeIdealTower& tower) {
  if (family.p != tower.p) throw std::invalid_argument("family and tower prime differ");
  if (tower.a < family.a)
    throw std::invalid_argument("tower must hold one ideal power per code level");
  if (static_cast<int>(tower.bases[0].size()) != field.n)
    throw std::invalid_argument("tower degree does not match field");
  ConstructionDLattice lat;
  lat.field = field;
  lat.family = family;
  lat.tower = tower;
  lat.n = field.n;
  lat.N = family.N;
  lat.dim = field.n * family.N;
  const int ka = family.dims.back();
  lat.Mext.assign(lat.N, IntVec(lat.N, 0));
  lat.seg_level.resize(lat.N);
  for (int t = 0; t < lat.N; ++t) {
    if (t < ka) {
      lat.Mext[t] = family.M[t];
      lat.seg_level[t] = row_level(family, t);
    } else {
      lat.Mext[t][t] = 1;
      lat.seg_level[t] = family.a + 1;
    }
  }
  std::vector<Eigen::MatrixXd> T(family.a + 2);
  for (int i = 1; i <= family.a + 1; ++i)
    T[i] = embedding_matrix(field, tower.bases[i - 1]);
  lat.G = Eigen::MatrixXd::Zero(lat.dim, lat.dim);
  for (int t = 0; t < lat.N; ++t)
    for (int j = 0; j < lat.N; ++j)
      if (lat.Mext[t][j] != 0)
        lat.G.block(t * lat.n, j * lat.n, lat.n, lat.n) =
            static_cast<double>(lat.Mext[t][j]) * T[lat.seg_level[t]];
  i64 sum_k = 0;
  for (int k : family.dims) sum_k += k;
  lat.log_vol = lat.N * (0.5 * std::log(static_cast<double>(std::abs(field.disc))) -
                         field.r2 * std::log(2.0)) +
                (static_cast<double>(family.a) * lat.N - sum_k) *
                    std::log(static_cast<double>(family.p));
  return lat;
}

ConstructionDLattice build_construction_a(const NumberField& field,
                                          const NestedCodeFamily& family,
                                          const PrimeIdealTower& tower) {
  if (family.a != 1) throw std::invalid_argument("single-code construction needs a = 1");
  return build_lattice(field, family, tower);
}

LatticePoint encode(const ConstructionDLattice& lat, const IntVec& u) {
  if (static_cast<int>(u.size()) != lat.dim) throw std::invalid_argument("u has wrong length");
  LatticePoint pt;
  pt.u = u;
  pt.x = lat.G.transpose() * to_real(u);
  return pt;
}

std::vector<Elem> encode_exact(const ConstructionDLattice& lat, const IntVec& u) {
  if (static_cast<int>(u.size()) != lat.dim) throw std::invalid_argument("u has wrong length");
  std::vector<Elem> x(lat.N, Elem(lat.n, 0));
  std::vector<std::vector<i128>> acc(lat.N, std::vector<i128>(lat.n, 0));
  for (int t = 0; t < lat.N; ++t) {
    const IntMat& basis = lat.tower.bases[lat.seg_level[t] - 1];
    for (int j = 0; j < lat.N; ++j) {
      const i64 m = lat.Mext[t][j];
      if (m == 0) continue;
      for (int r = 0; r < lat.n; ++r) {
        const i128 c = static_cast<i128>(u[t * lat.n + r]) * m;
        if (c == 0) continue;
        for (int q = 0; q < lat.n; ++q) acc[j][q] += c * basis[r][q];
      }
    }
  }
  for (int j = 0; j < lat.N; ++j)
    for (int q = 0; q < lat.n; ++q) {
      if (acc[j][q] > std::numeric_limits<i64>::max() ||
          acc[j][q] < std::numeric_limits<i64>::min())
        throw std::overflow_error("exact coordinate overflow");
      x[j][q] = static_cast<i64>(acc[j][q]);
    }
  return x;
}

bool membership_integer(const ConstructionDLattice& lat,
                        const Eigen::VectorXd& x, double tol) {
  if (x.size() != lat.dim) throw std::invalid_argument("x has wrong length");
  const int n = lat.n;
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> diag_lu(lat.N);
  for (int j = 0; j < lat.N; ++j)
    diag_lu[j].compute(lat.G.block(j * n, j * n, n, n).transpose());
  std::vector<Eigen::VectorXd> u_seg(lat.N);
  for (int j = 0; j < lat.N; ++j) {
    Eigen::VectorXd r = x.segment(j * n, n);
    for (int t = 0; t < j; ++t)
      if (lat.Mext[t][j] != 0)
        r -= lat.G.block(t * n, j * n, n, n).transpose() * u_seg[t];
    const Eigen::VectorXd sol = diag_lu[j].solve(r);
    Eigen::VectorXd rounded(n);
    for (int c = 0; c < n; ++c) {
      rounded(c) = std::round(sol(c));
      if (std::abs(sol(c) - rounded(c)) > tol) return false;
    }
    u_seg[j] = rounded;
  }
  return true;
}

std::vector<i64> phi_reduce(const ConstructionDLattice& lat,
                            const std::vector<Elem>& x, int level) {
  if (level < 1 || level > lat.family.a) throw std::invalid_argument("bad level");
  if (static_cast<int>(x.size()) != lat.N) throw std::invalid_argument("x has wrong length");
  if (level >= 2 && !lat.tower.principal)
    throw std::invalid_argument("division step needs a principal tower");
  const IntMat alpha_pow = level >= 2
                               ? mat_pow(mult_matrix(lat.field, lat.tower.alpha), level - 1)
                               : identity_mat(lat.n);
  std::vector<i64> out(lat.N, 0);
  for (int j = 0; j < lat.N; ++j) {
    const IntVec rep = reduce_mod_hnf(lat.tower.bases[level - 1], x[j]);
    IntVec d(lat.n);
    for (int c = 0; c < lat.n; ++c) d[c] = x[j][c] - rep[c];
    const IntVec e = reduce_mod_hnf(lat.tower.bases[level], d);
    IntVec q = e;
    if (level >= 2) {
      const auto sol = solve_left_exact(alpha_pow, e);
      if (!sol) throw std::logic_error("residue not divisible by the ideal generator");
      q = *sol;
    }
    out[j] = residue_map(lat.field, lat.tower, q);
  }
  return out;
}

bool code_formula_membership(const ConstructionDLattice& lat,
                             const std::vector<Elem>& x) {
  for (int i = 1; i <= lat.family.a; ++i)
    if (!is_codeword(lat.family, i, phi_reduce(lat, x, i))) return false;
  return true;
}

SmallMetrics metrics_small(const Eigen::MatrixXd& G, int R, double zero_tol) {
  const int dim = static_cast<int>(G.rows());
  if (dim > 12) throw std::invalid_argument("instance too large");
  if (R < 1) throw std::invalid_argument("radius must be >= 1");
  long long count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= 2 * R + 1;
    if (count > kScanGuard) throw std::invalid_argument("instance too large");
  }
  SmallMetrics m;
  m.diversity = dim + 1;
  m.min_product = std::numeric_limits<double>::infinity();
  IntVec u(dim, -R);
  Eigen::VectorXd base = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) base += static_cast<double>(u[i]) * G.row(i).transpose();
  Eigen::VectorXd x = base;
  long long step = 0;
  while (true) {
    if (++step % 8192 == 0) {
      // periodic fresh recompute keeps incremental drift below zero_tol
      x.setZero();
      for (int i = 0; i < dim; ++i) x += static_cast<double>(u[i]) * G.row(i).transpose();
    }
    bool zero_u = true;
    for (i64 v : u)
      if (v != 0) { zero_u = false; break; }
    if (!zero_u) {
      ++m.scanned;
      int nz = 0;
      double prod = 1.0;
      for (int c = 0; c < dim; ++c)
        if (std::abs(x(c)) > zero_tol) {
          ++nz;
          prod *= std::abs(x(c));
        }
      if (nz < m.diversity) {
        m.diversity = nz;
        m.min_product = prod;
        m.kissing = 1;
      } else if (nz == m.diversity) {
        if (prod < m.min_product * (1.0 - 1e-9)) {
          m.min_product = prod;
          m.kissing = 1;
        } else if (prod <= m.min_product * (1.0 + 1e-9)) {
          ++m.kissing;
        }
      }
    }
    int pos = dim - 1;
    while (pos >= 0 && u[pos] == R) {
      u[pos] = -R;
      x -= static_cast<double>(2 * R) * G.row(pos).transpose();
      --pos;
    }
    if (pos < 0) break;
    ++u[pos];
    x += G.row(pos).transpose();
  }
  return m;
}

SmallMetrics metrics_small(const ConstructionDLattice& lat, int R) {
  return metrics_small(lat.G, R, 1e-9);
}

double volume(const ConstructionDLattice& lat) { return std::exp(lat.log_vol); }

double log_abs_det(const Eigen::MatrixXd& G) {
  return Eigen::HouseholderQR<Eigen::MatrixXd>(G).logAbsDeterminant();
}

}  // namespace latd
