#pragma once

#include <utility>

#include "mgeg/weight.hpp"

namespace mgeg {

// Coefficients of the monic three-term recurrence
//   x P_n(x) = P_{n+1}(x) + B_n P_n(x) + C_n P_{n-1}(x),
// with P_{-1} = 0, P_0 = I; the matrices act by multiplication on the left.
// B_n is tridiagonal with zero diagonal, C_n is diagonal.
std::pair<RatMatrix, RatMatrix> recurrenceCoeffs(long n, const WeightSpec& spec);

// Monic orthogonal polynomial P_n with respect to the weight.
MatPoly monicP(long n, const WeightSpec& spec);

// Diagonal symmetrizer D_n with (D_n)_{ii} = binom(2l,i) (nu+n)_i / (nu+n+2l-i)_i.
RatMatrix symmetrizer(long n, const WeightSpec& spec);

// Symmetric normalisation hatP_n = D_n P_n; every coefficient matrix is
// symmetric and commutes with the antidiagonal flip.
MatPoly hatP(long n, const WeightSpec& spec);

// Exact Gram matrix: entry (i,j) is the integral over (-1,1) of
// (hatP_n(x) W(x) hatP_m(x)^t)_{i,j}, expressed in kappa(nu) units.
std::vector<std::vector<KappaValue>> gramIntegral(long n, long m, const WeightSpec& spec);

// Moment matrix: entry (i,j) is the integral of C_m^(nu)(x) W(x)_{i,j}.
std::vector<std::vector<KappaValue>> weightMoment(long m, const WeightSpec& spec);

// The closed-form squared-norm diagonal at degree zero: the integral of W
// itself is diagonal with
//   (H_0)_{jj} = (kappa(nu)/nu) (2l+nu) j! (2l-j)! (nu+1)_{2l}
//                / ((2l)! (nu+1)_j (nu+1)_{2l-j}).
// Returned as the rational coefficients of kappa(nu).
std::vector<Rational> normAtZeroDiagonal(const WeightSpec& spec);

} // namespace mgeg
