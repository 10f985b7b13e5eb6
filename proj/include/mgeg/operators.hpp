#pragma once

#include "mgeg/connection.hpp"

namespace mgeg {

// Constant matrices of the second-order operator
//   p . D = p''(x) (1-x^2) + p'(x) (C - x(2l+2nu+1) I) - p(x) V
// (operators act on the right of row-vector-valued polynomials) with
//   C = sum_{i<2l} (2l-i) E_{i,i+1} + sum_{i>=1} i E_{i,i-1},
//   V = -diag(i (2l-i)).
struct SecondOrderOp {
    RatMatrix C;
    RatMatrix V;
};

// Constant matrices of the first-order operator
//   p . E = p'(x) (x B1 + B0) + p(x) A0,
// with 2l B0 = sum (2l-i) E_{i,i+1} - sum i E_{i,i-1},
//      B1 = diag((2i-2l)/(2l)),
//      A0 = diag(((2l+2)(i-2l) - (nu-1)(2l-2i))/(2l));
// all three degenerate to zero matrices when 2l = 0.
struct FirstOrderOp {
    RatMatrix B0;
    RatMatrix B1;
    RatMatrix A0;
};

SecondOrderOp makeSecondOrder(const WeightSpec& spec);
FirstOrderOp makeFirstOrder(const WeightSpec& spec);

MatPoly applyDOD(const MatPoly& p, const WeightSpec& spec);
MatPoly applyDOE(const MatPoly& p, const WeightSpec& spec);

// Eigenvalue matrices: hatP_n . D = LambdaD(n) hatP_n with
// LambdaD(n) = -n(2l+2nu+n) I - V, and hatP_n . E = (A0 + n B1) hatP_n.
RatMatrix lambdaDOD(long n, const WeightSpec& spec);
RatMatrix lambdaDOE(long n, const WeightSpec& spec);

// Hatted recurrence coefficients: A^ = D_n D_{n+1}^{-1},
// B^ = D_n B_n D_n^{-1}, C^ = D_n C_n D_{n-1}^{-1} (zero for n = 0).
RatMatrix hattedA(long n, const WeightSpec& spec);
RatMatrix hattedB(long n, const WeightSpec& spec);
RatMatrix hattedC(long n, const WeightSpec& spec);

// Commutation identity of the symmetric family with the hatted recurrence:
//   [hatP_{n+1}, A^_n] + hatP_n (B^_n)^t - B^_n hatP_n + [hatP_{n-1}, C^_n] = 0,
// plus its coefficient-level analogue on the F-matrices (valid for every k,
// with out-of-range F's equal to zero).
bool prop3TRCheck(long n, const Rational& nu, const SizeParam& size);

// Derivative/difference identity
//   (d/dx hatP_n) C - C^t (d/dx hatP_n) = -2 [V, hatP_n]
// (both sides of degree <= n-1), plus the F-matrix recursion
//   F_{k,n} C - C^t F_{k,n} = [F_{k+1,n}, V]/(nu+2l+n-k-1)
//                           - [F_{k-1,n}, V]/(nu+2l+n-k+1),
// which holds for 0 <= k <= n-1.
bool propDODCheck(long n, const Rational& nu, const SizeParam& size);

// First-order analogue
//   x [hatP_n', B1] + hatP_n' B0 - B0^t hatP_n' = [2 A0 + n B1, hatP_n],
// plus the F-matrix identity (valid for 0 <= k <= n)
//   [F_{k-2,n}, (2-k+2nu+4l) B1 - 2 A0]/(nu+2l+n-k+2)
//   + [F_{k,n}, (2n-k) B1 + 2 A0]/(nu+2l+n-k)
//   = 2 (B0^t F_{k-1,n} - F_{k-1,n} B0).
bool propDOECheck(long n, const Rational& nu, const SizeParam& size);

// Six-term contiguous relation of the gamma kernel, verified exactly at one
// rational parameter point (all six terms are scaled by a common Gamma
// anchor so the comparison stays in the rational field):
//   (n-k)/(nu+2l+n-k-1) gamma(nu+n; i,j,k+1)
//   + (2(nu+2l)+n-k)/(nu+2l+n-k+1) gamma(nu+n; i,j,k-1)
//   = (n+1)(nu+n)(nu+2l+n)/((nu+n+i)(nu+2l+n-i)) gamma(nu+n+1; i,j,k+1)
//   + (nu+i-1)(2l-i+1)/((nu+n+i)(nu+2l+n-i)) gamma(nu+n; i-1,j,k)
//   + (i+1)(nu+2l-i-1)/((nu+n+i)(nu+2l+n-i)) gamma(nu+n; i+1,j,k)
//   + (nu+2l+n)(2nu+2l+n-1)/((nu+n+i)(nu+2l+n-i)(nu+2l+n-1)) gamma(nu+n-1; i,j,k-1),
// with out-of-range indices contributing zero.
bool sixTermGammaCheck(const Rational& nu, long n, long i, long j, long k, const SizeParam& size);

// A conservative bound on the degree of the rational identity behind
// sixTermGammaCheck once denominators are cleared; verifying at more
// parameter samples than this bound certifies the identity as a rational
// function of the parameter for the given cell.
long sixTermDegreeBound(const SizeParam& size, long n);

} // namespace mgeg
