// Exact six-vertex route: the triangle partition function reduces to an
// n x n Hankel-type determinant of lattice-path generating-series
// coefficients (n = floor((m+1)/2)), with the refined statistic entering
// through a rank-one boundary correction of the kernel.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "tv/lattice.hpp"
#include "tv/weights.hpp"

namespace tv {

// Coefficient matrix [x^i y^j], 0 <= i,j < n, of the kernel
//   1/(1-xy) + 2x/((1-x)(1-x-y-xy)).
// All entries are integers.
std::vector<std::vector<mpz_class>> kernel_matrix(int n);

// Same kernel plus the refinement term
//   x y^{n-1} (tau-1)/(1-tau*x) * (1+x)^n/(1-x)^{n+1}
// evaluated at an integer tau (used as interpolation node).
std::vector<std::vector<mpz_class>> kernel_matrix_refined(int n, const mpz_class& tau);

// Fraction-free determinant (Bareiss) with row pivoting.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> M);

// Z_n^{6V} with the domain-wall weights (a,b,c) = (1,1,sqrt(2)) up to
// normalization: 1, 3, 23, 433, 19705, ...
mpz_class z6v_det(int n);

// Coefficients (low to high) of Q_n(tau) = det of the refined kernel, a
// degree n-1 polynomial with integer coefficients; Q_n(1) = Z_n^{6V}.
std::vector<mpz_class> z6v_refined_poly(int n);

// Triangle configuration count through the determinant route:
//   Z_{2n} = 2^{n(n+1)/2} Z_n^{6V},  Z_{2n-1} = 2^{n(n-1)/2} Z_n^{6V}.
mpz_class count_det(int m);

// Refined counts Z_{m,k} (k = 1..m) through the determinant route:
//   Z_{2n}(tau)   = 2^{n(n-1)/2}     (1+tau)^n     Q_n(tau),
//   Z_{2n-1}(tau) = 2^{(n-1)(n-2)/2} (1+tau)^{n-1} Q_n(tau).
// The two reflected boundary conditions carry the reversed polynomial.
std::vector<mpz_class> refined_det(int m, Bc bc = Bc::Dwbc3);

// Brute-force n x n six-vertex partition function with domain-wall boundary
// conditions (a path enters from the west on every row and exits south on
// every column; north and east boundaries are empty).  cellw(r, c) returns
// the per-site weights {a, b, c}, rows/columns 1-based; pattern (a) is the
// empty/full site, (b) the straight crossing, (c) the two turns.
cplx brute_6v_dwbc(int n, const std::function<std::array<cplx, 3>(int, int)>& cellw);

}  // namespace tv
