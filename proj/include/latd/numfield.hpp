#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "latd/intmat.hpp"

// Totally real number fields at the scale this project needs: quadratic
// Q(sqrt(m)) with m = 2,3 (mod 4), the degree-2 maximal real subfield of the
// fifth cyclotomic field, and totally real cubic fields x^3 + ax + b whose
// power basis generates the full ring of integers. Elements of O_K are exact
// integer coordinate vectors over the power basis {1, theta, ...,
// theta^(n-1)}; embeddings are doubles built from the real roots.
namespace latd {

struct NumberField {
  int n = 0;       // degree
  int r1 = 0;      // real embeddings (r2 = 0 for every supported field)
  int r2 = 0;
  std::vector<i64> minpoly;    // monic, minpoly[i] = coefficient of x^i, size n+1
  i64 disc = 0;                // field discriminant
  std::vector<double> roots;   // the n real roots, sorted descending
  std::string name;
};

using Elem = IntVec;  // length-n coordinates over the power basis

NumberField build_quadratic_field(i64 m);
NumberField build_real_cyclotomic5();
NumberField build_cubic_field(i64 a, i64 b);

// Matrix of multiplication by x: row r holds the coordinates of theta^r * x,
// so coords(y * x) = coords(y) * mult_matrix(x).
IntMat mult_matrix(const NumberField& field, const Elem& x);
Elem mul_elems(const NumberField& field, const Elem& x, const Elem& y);
// Exact field norm (determinant of the multiplication matrix).
i128 norm(const NumberField& field, const Elem& x);

// Row r, column c holds sigma_c applied to basis element r.
Eigen::MatrixXd embedding_matrix(const NumberField& field, const IntMat& basis);

// Powers P^0..P^a of a degree-one prime ideal P above p, each as a canonical
// lower-triangular HNF basis over the power basis. `principal` records
// whether a single generator alpha is known; the division step of the
// code-formula maps requires one.
struct PrimeIdealTower {
  i64 p = 0;
  int a = 0;
  bool principal = false;
  Elem alpha;                  // generator when principal, empty otherwise
  i64 residue_root = 0;        // image of theta in F_p
  std::vector<IntMat> bases;   // bases[i] spans P^i; bases[0] is the identity
};

// Tower over a principal prime P = <alpha>; requires |N(alpha)| = p.
PrimeIdealTower prime_tower(const NumberField& field, i64 p, const Elem& alpha, int a);
// Tower over P = p O_K + beta O_K, computed by iterated ideal products; used
// when no small principal generator exists (e.g. p = 2 in Q(sqrt(10))).
PrimeIdealTower prime_tower_two_element(const NumberField& field, i64 p,
                                        const Elem& beta, int a);
// Picks the degree-one prime above p (theta mapsto smallest root of the
// minimal polynomial mod p), searches a small coordinate box for a principal
// generator, and falls back to the two-element form.
PrimeIdealTower prime_tower_auto(const NumberField& field, i64 p, int a);

// Ring homomorphism O_K -> F_p with kernel P, as a value in [0, p).
i64 residue_map(const NumberField& field, const PrimeIdealTower& tower, const Elem& x);

// Smallest root of the minimal polynomial mod p in [0, p); throws when there
// is none (the prime would have inertia degree > 1).
i64 minpoly_root_mod_p(const NumberField& field, i64 p);

bool is_prime(i64 p);

}  // namespace latd
