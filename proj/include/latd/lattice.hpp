#pragma once

#include <Eigen/Dense>
#include <vector>

#include "latd/codes.hpp"
#include "latd/numfield.hpp"

// Construction-D lattices over a totally real field: the nN x nN generator
// stacks n x n blocks M_ext[t][j] * T_{level(t)}, where M_ext extends the
// code family's matrix M with unit rows below k_a, T_i is the embedded basis
// of P^{i-1}, and level(t) is the code level owning row segment t (a+1 for
// t beyond k_a). Exact integer coordinates over O_K^N are carried alongside
// the real matrix so membership and the code-formula maps stay exact.
namespace latd {

struct ConstructionDLattice {
  NumberField field;
  NestedCodeFamily family;
  PrimeIdealTower tower;
  int n = 0;                  // field degree
  int N = 0;                  // code length = number of segments
  int dim = 0;                // nN
  IntMat Mext;                // N x N integer lift: code rows extended by unit rows
  std::vector<int> seg_level; // 1-based level of each segment, values 1..a+1
  Eigen::MatrixXd G;          // the real generator
  double log_vol = 0.0;       // closed-form log-volume
};

struct LatticePoint {
  IntVec u;
  Eigen::VectorXd x;
};

struct SmallMetrics {
  int diversity = 0;      // min count of nonzero real components
  double min_product = 0; // min product of nonzero |components| at that diversity
  long long kissing = 0;  // vectors attaining the minimum product
  long long scanned = 0;
};

ConstructionDLattice build_lattice(const NumberField& field,
                                   const NestedCodeFamily& family,
                                   const PrimeIdealTower& tower);
// Single-code special case (a = 1); family must have one level.
ConstructionDLattice build_construction_a(const NumberField& field,
                                          const NestedCodeFamily& family,
                                          const PrimeIdealTower& tower);

LatticePoint encode(const ConstructionDLattice& lat, const IntVec& u);
// The same point as exact O_K coordinates, one element per segment.
std::vector<Elem> encode_exact(const ConstructionDLattice& lat, const IntVec& u);

// Solves u G = x segment by segment along the block triangle and accepts
// when every entry sits within tol of an integer.
bool membership_integer(const ConstructionDLattice& lat,
                        const Eigen::VectorXd& x, double tol = 1e-6);

// Level-i code-formula map, componentwise on exact coordinates: subtract the
// canonical residue mod P^(i-1), reduce mod P^i, divide by alpha^(i-1) and
// apply the residue map. Requires a principal tower.
std::vector<i64> phi_reduce(const ConstructionDLattice& lat,
                            const std::vector<Elem>& x, int level);
// True iff the level-i map lands in C_i for every i = 1..a.
bool code_formula_membership(const ConstructionDLattice& lat,
                             const std::vector<Elem>& x);

// Exhaustive scan of u in [-R, R]^dim (dim <= 12, at most ~1e7 candidates);
// reports diversity, the minimum product distance among vectors of minimal
// diversity, and how many vectors attain it. Upper bounds only.
SmallMetrics metrics_small(const Eigen::MatrixXd& G, int R, double zero_tol = 1e-9);
SmallMetrics metrics_small(const ConstructionDLattice& lat, int R);

// Closed-form volume (linear scale) and the numeric cross-check.
double volume(const ConstructionDLattice& lat);
double log_abs_det(const Eigen::MatrixXd& G);

}  // namespace latd
