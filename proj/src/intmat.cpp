#include "latd/intmat.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace latd {

namespace {

using Wide = std::vector<i128>;
using WideMat = std::vector<Wide>;

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("integer matrix entry exceeds 64 bits");
  return static_cast<i64>(v);
}

// Floor division with positive divisor.
i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

IntMat identity_mat(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

i128 det_exact(const IntMat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  WideMat w(n, Wide(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("det_exact: matrix not square");
    for (int j = 0; j < n; ++j) w[i][j] = a[i][j];
  }
  i128 sign = 1;
  i128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(w[k], w[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
    prev = w[k][k];
  }
  return sign * w[n - 1][n - 1];
}

IntVec vec_mat_mul(const IntVec& v, const IntMat& a) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(v.size()) != m)
    throw std::invalid_argument("vec_mat_mul: size mismatch");
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  IntVec out(n, 0);
  for (int j = 0; j < n; ++j) {
    i128 acc = 0;
    for (int i = 0; i < m; ++i) acc += static_cast<i128>(v[i]) * a[i][j];
    out[j] = narrow(acc);
  }
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(vec_mat_mul(row, b));
  return out;
}

IntMat mat_pow(const IntMat& a, int e) {
  if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
  IntMat result = identity_mat(static_cast<int>(a.size()));
  for (int i = 0; i < e; ++i) result = mat_mul(result, a);
  return result;
}

IntMat hnf_lower(const IntMat& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) throw std::invalid_argument("hnf_lower: no rows");
  const int n = static_cast<int>(rows[0].size());
  if (m < n) throw std::invalid_argument("hnf_lower: fewer rows than columns");
  WideMat work(m, Wide(n));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("hnf_lower: ragged rows");
    for (int j = 0; j < n; ++j) work[i][j] = rows[i][j];
  }

  WideMat h(n, Wide(n, 0));
  std::vector<bool> used(m, false);
  // Pivot columns right to left; a pivot row keeps zeros right of its column.
  for (int col = n - 1; col >= 0; --col) {
    while (true) {
      int r1 = -1, r2 = -1;
      for (int i = 0; i < m; ++i) {
        if (used[i] || work[i][col] == 0) continue;
        if (r1 < 0) r1 = i;
        else { r2 = i; break; }
      }
      if (r2 < 0) break;
      // Reduce the larger column entry by the smaller (Euclid on rows).
      int big = r1, small = r2;
      i128 a1 = work[r1][col] < 0 ? -work[r1][col] : work[r1][col];
      i128 a2 = work[r2][col] < 0 ? -work[r2][col] : work[r2][col];
      if (a1 < a2) std::swap(big, small);
      i128 q = work[big][col] / work[small][col];
      for (int j = 0; j <= col; ++j) work[big][j] -= q * work[small][j];
    }
    int piv = -1;
    for (int i = 0; i < m; ++i)
      if (!used[i] && work[i][col] != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("hnf_lower: rows not full rank");
    used[piv] = true;
    if (work[piv][col] < 0)
      for (int j = 0; j <= col; ++j) work[piv][j] = -work[piv][j];
    h[col] = work[piv];
  }
  // Normalize entries below each diagonal into [0, diag).
  for (int i = 1; i < n; ++i)
    for (int j = i - 1; j >= 0; --j) {
      i128 q = floor_div(h[i][j], h[j][j]);
      if (q == 0) continue;
      for (int c = 0; c <= j; ++c) h[i][c] -= q * h[j][c];
    }
  IntMat out(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = narrow(h[i][j]);
  return out;
}

IntVec reduce_mod_hnf(const IntMat& h, IntVec v) {
  const int n = static_cast<int>(h.size());
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("reduce_mod_hnf: size mismatch");
  for (int j = n - 1; j >= 0; --j) {
    i128 q = floor_div(v[j], h[j][j]);
    if (q == 0) continue;
    for (int c = 0; c <= j; ++c)
      v[c] = narrow(v[c] - q * static_cast<i128>(h[j][c]));
  }
  return v;
}

std::optional<IntVec> solve_left_exact(const IntMat& a, const IntVec& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_left_exact: size mismatch");
  i128 det = det_exact(a);
  if (det == 0) throw std::invalid_argument("solve_left_exact: singular matrix");
  // x * a = b is a^T x^T = b^T; Cramer on the transpose: substitute b into
  // row i of a.
  IntVec x(n);
  for (int i = 0; i < n; ++i) {
    IntMat ai = a;
    ai[i] = b;
    i128 di = det_exact(ai);
    if (di % det != 0) return std::nullopt;
    x[i] = narrow(di / det);
  }
  return x;
}

bool spans_same_lattice(const IntMat& a, const IntMat& b) {
  return hnf_lower(a) == hnf_lower(b);
}

}  // namespace latd
