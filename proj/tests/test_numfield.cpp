#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "latd/numfield.hpp"

using namespace latd;

TEST_CASE("quadratic field construction") {
  NumberField f = build_quadratic_field(2);
  CHECK(f.n == 2);
  CHECK(f.r1 == 2);
  CHECK(f.r2 == 0);
  CHECK(f.disc == 8);
  CHECK(f.minpoly == std::vector<i64>{-2, 0, 1});
  REQUIRE(f.roots.size() == 2);
  CHECK(f.roots[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(f.roots[1] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));

  CHECK(build_quadratic_field(7).disc == 28);
  CHECK(build_quadratic_field(10).disc == 40);

  CHECK_THROWS_AS(build_quadratic_field(5), std::invalid_argument);   // 1 mod 4
  CHECK_THROWS_AS(build_quadratic_field(4), std::invalid_argument);   // square
  CHECK_THROWS_AS(build_quadratic_field(12), std::invalid_argument);  // 0 mod 4
  CHECK_THROWS_AS(build_quadratic_field(1), std::invalid_argument);
  CHECK_THROWS_AS(build_quadratic_field(-2), std::invalid_argument);
}

TEST_CASE("real cyclotomic subfield") {
  NumberField f = build_real_cyclotomic5();
  CHECK(f.n == 2);
  CHECK(f.disc == 5);
  CHECK(f.minpoly == std::vector<i64>{-1, 1, 1});
  CHECK(f.roots[0] == doctest::Approx(0.6180339887498949).epsilon(1e-14));
  CHECK(f.roots[1] == doctest::Approx(-1.618033988749895).epsilon(1e-14));
}

TEST_CASE("cubic field construction") {
  NumberField f = build_cubic_field(-4, -2);
  CHECK(f.n == 3);
  CHECK(f.r1 == 3);
  CHECK(f.disc == 148);  // -4a^3 - 27b^2
  REQUIRE(f.roots.size() == 3);
  for (double r : f.roots) CHECK(std::abs(r * r * r - 4.0 * r - 2.0) < 1e-9);
  CHECK(f.roots[0] > f.roots[1]);
  CHECK(f.roots[1] > f.roots[2]);
  // one real root only: not totally real
  CHECK_THROWS_AS(build_cubic_field(0, -2), std::invalid_argument);
  // reducible: theta = 0 is a rational root
  CHECK_THROWS_AS(build_cubic_field(-4, 0), std::invalid_argument);
}

TEST_CASE("multiplication matrices follow the row convention") {
  NumberField f = build_quadratic_field(2);
  // x = 1 + theta: rows are coords of x and theta x
  CHECK(mult_matrix(f, {1, 1}) == IntMat{{1, 1}, {2, 1}});
  // coords(z x) = coords(z) * M_x
  CHECK(mul_elems(f, {0, 1}, {1, 1}) == Elem{2, 1});

  NumberField c5 = build_real_cyclotomic5();
  CHECK(mult_matrix(c5, {0, 1}) == IntMat{{0, 1}, {1, -1}});  // theta^2 = 1 - theta
  CHECK(mult_matrix(c5, {2, -1}) == IntMat{{2, -1}, {-1, 3}});
}

TEST_CASE("norms") {
  NumberField q2 = build_quadratic_field(2);
  CHECK(norm(q2, {3, 1}) == 7);
  CHECK(norm(q2, {1, 1}) == -1);
  CHECK(norm(q2, {0, 1}) == -2);
  NumberField c5 = build_real_cyclotomic5();
  CHECK(norm(c5, {2, -1}) == 5);
  CHECK(norm(c5, {1, -1}) == 1);  // a unit
  NumberField cu = build_cubic_field(-4, -2);
  CHECK(norm(cu, {0, 1, 0}) == 2);
  // multiplicativity on a couple of products
  Elem x = {1, 2, 0}, y = {0, 1, 1};
  CHECK(norm(cu, mul_elems(cu, x, y)) == norm(cu, x) * norm(cu, y));
}

TEST_CASE("embedding matrix evaluates the basis at every root") {
  NumberField f = build_quadratic_field(2);
  Eigen::MatrixXd t1 = embedding_matrix(f, identity_mat(2));
  CHECK(t1(0, 0) == doctest::Approx(1.0));
  CHECK(t1(0, 1) == doctest::Approx(1.0));
  CHECK(t1(1, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(t1(1, 1) == doctest::Approx(-std::sqrt(2.0)));
  Eigen::MatrixXd tb = embedding_matrix(f, {{2, 0}, {1, 1}});
  CHECK(tb(1, 0) == doctest::Approx(1.0 + std::sqrt(2.0)));
  CHECK(tb(1, 1) == doctest::Approx(1.0 - std::sqrt(2.0)));
}

TEST_CASE("principal tower over the ramified prime of the cyclotomic subfield") {
  NumberField f = build_real_cyclotomic5();
  PrimeIdealTower t = prime_tower(f, 5, {2, -1}, 2);
  CHECK(t.p == 5);
  CHECK(t.principal);
  CHECK(t.residue_root == 2);
  REQUIRE(t.bases.size() == 3);
  CHECK(t.bases[0] == identity_mat(2));
  CHECK(t.bases[1] == IntMat{{5, 0}, {3, 1}});
  CHECK(t.bases[2] == IntMat{{5, 0}, {0, 5}});
}

TEST_CASE("tower powers multiply determinants") {
  NumberField f = build_quadratic_field(2);
  PrimeIdealTower t = prime_tower(f, 2, {0, 1}, 3);
  CHECK(t.bases[1] == IntMat{{2, 0}, {0, 1}});
  CHECK(t.bases[2] == IntMat{{2, 0}, {0, 2}});
  CHECK(t.bases[3] == IntMat{{4, 0}, {0, 2}});
  for (int i = 0; i <= 3; ++i) {
    i128 want = 1;
    for (int j = 0; j < i; ++j) want *= 2;
    CHECK(det_exact(t.bases[i]) == want);
  }
}

TEST_CASE("prime_tower rejects a non-prime generator") {
  NumberField f = build_quadratic_field(2);
  CHECK_THROWS_AS(prime_tower(f, 2, {1, 1}, 1), std::invalid_argument);  // unit
  CHECK_THROWS_AS(prime_tower(f, 2, {2, 0}, 1), std::invalid_argument);  // norm 4
}

TEST_CASE("auto tower finds principal generators where they exist") {
  NumberField q2 = build_quadratic_field(2);
  PrimeIdealTower t2 = prime_tower_auto(q2, 2, 1);
  CHECK(t2.principal);
  CHECK(std::abs(static_cast<long long>(norm(q2, t2.alpha))) == 2);
  CHECK(t2.bases[1] == IntMat{{2, 0}, {0, 1}});

  NumberField q7 = build_quadratic_field(7);
  PrimeIdealTower t7 = prime_tower_auto(q7, 2, 2);
  CHECK(t7.principal);
  CHECK(t7.bases[1] == IntMat{{2, 0}, {1, 1}});

  NumberField cu = build_cubic_field(-4, -2);
  PrimeIdealTower tc = prime_tower_auto(cu, 2, 2);
  CHECK(tc.principal);
  CHECK(std::abs(static_cast<long long>(norm(cu, tc.alpha))) == 2);
}

TEST_CASE("auto tower falls back to two-element form for the class-group obstruction") {
  // a^2 - 10 b^2 = +-2 has no solution mod 5, so no principal generator exists
  NumberField f = build_quadratic_field(10);
  PrimeIdealTower t = prime_tower_auto(f, 2, 2);
  CHECK_FALSE(t.principal);
  CHECK(t.alpha.empty());
  CHECK(t.bases[1] == IntMat{{2, 0}, {0, 1}});
  CHECK(t.bases[2] == IntMat{{2, 0}, {0, 2}});  // 2 ramifies: P^2 = (2)
}

TEST_CASE("residue map is the ring homomorphism with kernel P") {
  NumberField f = build_quadratic_field(2);
  PrimeIdealTower t = prime_tower_auto(f, 7, 1);
  CHECK(t.residue_root == 3);  // smallest of the two square roots of 2 mod 7
  CHECK(residue_map(f, t, {0, 1}) == 3);
  CHECK(residue_map(f, t, {1, 2}) == 0);  // 1 + 2 theta has norm -7
  // multiplicative on a grid of small elements
  for (i64 a = -2; a <= 2; ++a)
    for (i64 b = -2; b <= 2; ++b) {
      const Elem x = {a, b};
      const Elem y = {b, a + 1};
      const i64 lhs = residue_map(f, t, mul_elems(f, x, y));
      const i64 rhs = (residue_map(f, t, x) * residue_map(f, t, y)) % 7;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("split prime: the residue root must match the chosen ideal") {
  NumberField f = build_quadratic_field(2);
  PrimeIdealTower t = prime_tower_auto(f, 7, 1);
  // theta - 3 is in P, theta - 4 is in the conjugate ideal
  CHECK(reduce_mod_hnf(t.bases[1], {-3, 1}) == IntVec{0, 0});
  CHECK(reduce_mod_hnf(t.bases[1], {-4, 1}) != IntVec{0, 0});
}

TEST_CASE("minpoly roots mod p") {
  NumberField q2 = build_quadratic_field(2);
  CHECK(minpoly_root_mod_p(q2, 7) == 3);
  CHECK(minpoly_root_mod_p(q2, 2) == 0);
  CHECK_THROWS_AS(minpoly_root_mod_p(q2, 5), std::invalid_argument);  // 2 is not a QR
  NumberField c5 = build_real_cyclotomic5();
  CHECK(minpoly_root_mod_p(c5, 5) == 2);
  CHECK(minpoly_root_mod_p(c5, 11) == 3);
  CHECK_THROWS_AS(minpoly_root_mod_p(c5, 2), std::invalid_argument);  // inert
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}
