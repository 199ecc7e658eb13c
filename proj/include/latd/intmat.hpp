#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Exact small-integer linear algebra. Everything here is sized for number
// field degrees n <= 4 and ideal-power coordinates, so int64 storage with
// __int128 intermediates is ample; overflow is checked, not assumed away.
namespace latd {

using i64 = std::int64_t;
using i128 = __int128;
using IntVec = std::vector<i64>;
using IntMat = std::vector<IntVec>;  // row major

IntMat identity_mat(int n);

// Exact determinant via fraction-free (Bareiss) elimination.
i128 det_exact(const IntMat& a);

IntVec vec_mat_mul(const IntVec& v, const IntMat& a);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_pow(const IntMat& a, int e);

// Lower-triangular row-style Hermite normal form of the lattice spanned by
// the rows of `rows` (m x n, m >= n, full column rank). Result H is n x n
// with H[i][j] = 0 for j > i, H[j][j] > 0, and 0 <= H[i][j] < H[j][j] for
// i > j. Throws std::invalid_argument when the rows do not span a rank-n
// lattice.
IntMat hnf_lower(const IntMat& rows);

// Canonical representative of v modulo the lattice spanned by the rows of a
// lower-triangular HNF basis H: the unique w == v (mod rowspan H) with
// 0 <= w[j] < H[j][j] for all j.
IntVec reduce_mod_hnf(const IntMat& h, IntVec v);

// Exact solution x of x * a = b over the integers (Cramer); nullopt when the
// rational solution is not integral. Throws when a is singular.
std::optional<IntVec> solve_left_exact(const IntMat& a, const IntVec& b);

// True when the rows of a and b span the same integer lattice.
bool spans_same_lattice(const IntMat& a, const IntMat& b);

std::string to_string(i128 v);

}  // namespace latd
