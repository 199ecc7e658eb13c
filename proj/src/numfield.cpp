#include "latd/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latd {
namespace {

i64 checked_i64(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("integer coordinate overflow");
  return static_cast<i64>(v);
}

bool is_squarefree(i64 m) {
  if (m <= 0) return false;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

// x^3 + a x + b with three distinct real roots (positive discriminant),
// via the trigonometric form of Cardano, polished with Newton steps.
std::vector<double> cubic_real_roots(i64 a, i64 b) {
  const double p = static_cast<double>(a);
  const double q = static_cast<double>(b);
  const double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = 3.0 * q / (p * m);
  arg = std::clamp(arg, -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  std::vector<double> roots(3);
  for (int k = 0; k < 3; ++k) {
    double x = m * std::cos(phi - 2.0 * M_PI * k / 3.0);
    for (int it = 0; it < 4; ++it) {
      const double f = (x * x + p) * x + q;
      const double df = 3.0 * x * x + p;
      x -= f / df;
    }
    roots[k] = x;
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

bool has_integer_root(i64 a, i64 b) {
  if (b == 0) return true;
  for (i64 d = 1; d * d <= std::abs(b); ++d) {
    if (b % d != 0) continue;
    for (i64 r : {d, -d, b / d, -b / d})
      if ((r * r + a) * r + b == 0) return true;
  }
  return false;
}

i64 eval_minpoly_mod(const std::vector<i64>& mp, i64 r, i64 p) {
  i64 v = 0;
  for (auto it = mp.rbegin(); it != mp.rend(); ++it)
    v = ((v * r + *it) % p + p) % p;
  return v;
}

std::vector<i64> minpoly_roots_mod_p(const NumberField& field, i64 p) {
  std::vector<i64> roots;
  for (i64 r = 0; r < p; ++r)
    if (eval_minpoly_mod(field.minpoly, r, p) == 0) roots.push_back(r);
  return roots;
}

Elem theta_minus(const NumberField& field, i64 r) {
  Elem e(field.n, 0);
  e[0] = -r;
  e[1] = 1;
  return e;
}

bool in_ideal(const Elem& x, const IntMat& basis) {
  const IntVec w = reduce_mod_hnf(basis, x);
  return std::all_of(w.begin(), w.end(), [](i64 v) { return v == 0; });
}

i64 pick_residue_root(const NumberField& field, i64 p, const IntMat& prime_basis) {
  for (i64 r : minpoly_roots_mod_p(field, p))
    if (in_ideal(theta_minus(field, r), prime_basis)) return r;
  throw std::invalid_argument("prime ideal has no degree-one residue map");
}

i128 ipow(i64 base, int e) {
  i128 v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

i128 hnf_diag_product(const IntMat& h) {
  i128 v = 1;
  for (size_t i = 0; i < h.size(); ++i) v *= h[i][i];
  return v;
}

}  // namespace

NumberField build_quadratic_field(i64 m) {
  if (m < 2) throw std::invalid_argument("quadratic field needs m >= 2");
  if (!is_squarefree(m)) throw std::invalid_argument("m must be squarefree");
  const i64 res = m % 4;
  if (res != 2 && res != 3)
    throw std::invalid_argument("m must be 2 or 3 mod 4 for a power integral basis");
  NumberField f;
  f.n = 2;
  f.r1 = 2;
  f.r2 = 0;
  f.minpoly = {-m, 0, 1};
  f.disc = 4 * m;
  const double s = std::sqrt(static_cast<double>(m));
  f.roots = {s, -s};
  f.name = "Q(sqrt" + std::to_string(m) + ")";
  return f;
}

NumberField build_real_cyclotomic5() {
  NumberField f;
  f.n = 2;
  f.r1 = 2;
  f.r2 = 0;
  f.minpoly = {-1, 1, 1};
  f.disc = 5;
  const double s = std::sqrt(5.0);
  f.roots = {(-1.0 + s) / 2.0, (-1.0 - s) / 2.0};
  f.name = "Q(zeta5)+";
  return f;
}

NumberField build_cubic_field(i64 a, i64 b) {
  const i64 disc = -4 * a * a * a - 27 * b * b;
  if (disc <= 0) throw std::invalid_argument("cubic is not totally real");
  if (has_integer_root(a, b)) throw std::invalid_argument("cubic is reducible");
  // Z[theta] is the full ring of integers when the polynomial discriminant is
  // squarefree, or when its only square factor is 4 and the polynomial is
  // Eisenstein at 2 (2 then cannot divide the index).
  const bool eisenstein2 = (a % 2 == 0) && (b % 2 == 0) && (b % 4 != 0);
  if (!is_squarefree(disc) && !(disc % 4 == 0 && is_squarefree(disc / 4) && eisenstein2))
    throw std::invalid_argument("cannot certify the power basis is maximal");
  NumberField f;
  f.n = 3;
  f.r1 = 3;
  f.r2 = 0;
  f.minpoly = {b, a, 0, 1};
  f.disc = disc;
  f.roots = cubic_real_roots(a, b);
  f.name = "Q[x]/(x^3" + std::string(a < 0 ? "" : "+") + std::to_string(a) + "x" +
           std::string(b < 0 ? "" : "+") + std::to_string(b) + ")";
  return f;
}

IntMat mult_matrix(const NumberField& field, const Elem& x) {
  const int n = field.n;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("element size mismatch");
  IntMat m(n, IntVec(n, 0));
  m[0] = x;
  for (int r = 1; r < n; ++r) {
    // row r = theta * row r-1, reducing theta^n by the minimal polynomial
    std::vector<i128> w(n, 0);
    const i128 top = m[r - 1][n - 1];
    for (int j = n - 1; j > 0; --j) w[j] = m[r - 1][j - 1];
    for (int j = 0; j < n; ++j) w[j] -= top * field.minpoly[j];
    for (int j = 0; j < n; ++j) m[r][j] = checked_i64(w[j]);
  }
  return m;
}

Elem mul_elems(const NumberField& field, const Elem& x, const Elem& y) {
  return vec_mat_mul(x, mult_matrix(field, y));
}

i128 norm(const NumberField& field, const Elem& x) {
  return det_exact(mult_matrix(field, x));
}

Eigen::MatrixXd embedding_matrix(const NumberField& field, const IntMat& basis) {
  const int n = field.n;
  Eigen::MatrixXd t(basis.size(), n);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int c = 0; c < n; ++c) {
      double v = 0.0, pw = 1.0;
      for (int j = 0; j < n; ++j) {
        v += static_cast<double>(basis[r][j]) * pw;
        pw *= field.roots[c];
      }
      t(static_cast<Eigen::Index>(r), c) = v;
    }
  return t;
}

PrimeIdealTower prime_tower(const NumberField& field, i64 p, const Elem& alpha, int a) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a < 1) throw std::invalid_argument("tower height must be >= 1");
  const i128 nrm = norm(field, alpha);
  if (nrm != p && nrm != -static_cast<i128>(p))
    throw std::invalid_argument("generator norm is not +-p");
  PrimeIdealTower t;
  t.p = p;
  t.a = a;
  t.principal = true;
  t.alpha = alpha;
  t.bases.resize(a + 1);
  t.bases[0] = identity_mat(field.n);
  const IntMat ma = mult_matrix(field, alpha);
  for (int i = 1; i <= a; ++i) {
    t.bases[i] = hnf_lower(mat_pow(ma, i));
    if (hnf_diag_product(t.bases[i]) != ipow(p, i))
      throw std::logic_error("ideal power has wrong norm");
  }
  t.residue_root = pick_residue_root(field, p, t.bases[1]);
  return t;
}

PrimeIdealTower prime_tower_two_element(const NumberField& field, i64 p,
                                        const Elem& beta, int a) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (a < 1) throw std::invalid_argument("tower height must be >= 1");
  const int n = field.n;
  const IntMat mb = mult_matrix(field, beta);
  PrimeIdealTower t;
  t.p = p;
  t.a = a;
  t.principal = false;
  t.bases.resize(a + 1);
  t.bases[0] = identity_mat(n);
  for (int i = 1; i <= a; ++i) {
    // P^i = p * P^(i-1) + beta * P^(i-1), as a Z-module generated row-wise
    IntMat gen;
    for (const IntVec& row : t.bases[i - 1]) {
      IntVec scaled(n);
      for (int j = 0; j < n; ++j) scaled[j] = checked_i64(static_cast<i128>(row[j]) * p);
      gen.push_back(scaled);
      gen.push_back(vec_mat_mul(row, mb));
    }
    t.bases[i] = hnf_lower(gen);
    if (hnf_diag_product(t.bases[i]) != ipow(p, i))
      throw std::invalid_argument("(p, beta) is not a degree-one prime");
  }
  t.residue_root = pick_residue_root(field, p, t.bases[1]);
  return t;
}

PrimeIdealTower prime_tower_auto(const NumberField& field, i64 p, int a) {
  const i64 r0 = minpoly_root_mod_p(field, p);
  const PrimeIdealTower fallback = prime_tower_two_element(field, p, theta_minus(field, r0), a);
  // A small-coordinate generator of the same ideal, when one exists: any
  // alpha in P with |N(alpha)| = p satisfies (alpha) = P. Shells are scanned
  // in a fixed order so the choice is deterministic.
  const int n = field.n;
  constexpr i64 kMaxRadius = 6;
  for (i64 radius = 1; radius <= kMaxRadius; ++radius) {
    Elem cand(n, -radius);
    while (true) {
      i64 linf = 0;
      for (i64 c : cand) linf = std::max(linf, std::abs(c));
      if (linf == radius && in_ideal(cand, fallback.bases[1])) {
        const i128 nrm = norm(field, cand);
        if (nrm == p || nrm == -static_cast<i128>(p)) {
          PrimeIdealTower t = prime_tower(field, p, cand, a);
          if (!spans_same_lattice(t.bases[1], fallback.bases[1]))
            throw std::logic_error("principal generator spans a different ideal");
          return t;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && cand[pos] == radius) cand[pos--] = -radius;
      if (pos < 0) break;
      ++cand[pos];
    }
  }
  return fallback;
}

i64 residue_map(const NumberField& field, const PrimeIdealTower& tower, const Elem& x) {
  i64 v = 0, pw = 1;
  for (int j = 0; j < field.n; ++j) {
    v = ((v + x[j] % tower.p * pw) % tower.p + tower.p) % tower.p;
    pw = pw * tower.residue_root % tower.p;
  }
  return v;
}

i64 minpoly_root_mod_p(const NumberField& field, i64 p) {
  const std::vector<i64> roots = minpoly_roots_mod_p(field, p);
  if (roots.empty())
    throw std::invalid_argument("minimal polynomial has no root mod p");
  return roots.front();
}

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace latd
