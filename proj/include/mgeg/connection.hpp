#pragma once

#include "mgeg/mvop.hpp"

namespace mgeg {

// Entry kernel of the expansion matrices F_{k,n}: with mu = nu + n,
//   gamma(mu; i,j,k) = (-1)^k (mu+2l)(mu+2l-k) binom(2l,k) binom(k,(k+i-j)/2)
//                      binom(2l-k,(i+j-k)/2)
//                      * Gamma(mu+(i+j-k)/2) Gamma(mu+2l-(k+i+j)/2)
//                      / (Gamma(mu) Gamma(mu+2l+1-(k-i+j)/2) Gamma(mu+2l+1-(k+i-j)/2))
// and zero when i+j and k have different parities (or a binomial vanishes).
// All Gamma ratios are evaluated exactly as Pochhammer products.
Rational gammaCoeff(const Rational& mu, long i, long j, long k, const SizeParam& size);

// gamma scaled by Gamma(mu + anchorShift): exact for every rational mu as
// long as no numerator Gamma argument is a nonpositive integer. Used to
// compare gamma values across shifted parameters without leaving the
// rational field.
Rational gammaCoeffScaled(const Rational& mu, long i, long j, long k, const SizeParam& size,
                          long anchorShift);

// Entry kernel of the inversion matrices G_{r,m}: with mu = nu + m,
//   phi(mu; i,j,r) = binom(2l,r) binom(r,(r+i-j)/2) binom(2l-r,(i+j-r)/2)
//                    / (binom(2l,i) binom(2l,j)) * (mu-r+j)(mu+2l-r-j)
//                    * Gamma(mu+2l-r) Gamma(mu-(r-i+j)/2) Gamma(mu-(r+i-j)/2)
//                    / (Gamma(nu) Gamma(mu+1-(r-i-j)/2) Gamma(mu+2l+1-(r+i+j)/2)),
// returned here without the 1/Gamma(nu) factor, which the caller fuses into
// an exact ratio. Zero under parity mismatch or vanishing binomials.
// (Exposed for tests; fMatrix/gMatrix are the primary interface.)

// F_{k,n}: hatP_n(x) = sum_{k=0}^{min(n,2l)} F_{k,n} C_{n-k}^(nu+2l)(x).
// Out-of-range (k,n) gives the zero matrix.
RatMatrix fMatrix(long k, long n, const Rational& nu, const SizeParam& size);

// G_{r,m}: C_m^(nu)(x) I = sum_{r=0}^{min(m,2l)} G_{r,m} hatP_{m-r}(x).
// Out-of-range (r,m) gives the zero matrix.
RatMatrix gMatrix(long r, long m, const Rational& nu, const SizeParam& size);

// hatP_n assembled from the F-expansion (independent of the recurrence).
MatPoly synthesizeHatP(long n, const Rational& nu, const SizeParam& size);

// The matrices G_{0,m}..G_{min(m,2l),m}; substituting hatP's reproduces
// C_m^(nu) times the identity.
std::vector<RatMatrix> expandScalar(long m, const Rational& nu, const SizeParam& size);

// Coefficients of hatP_n^(nu) = sum_t M_t hatP_{n-t}^(nu+2l):
//   M_t = sum_k F_{k,n}^(nu) G_{t-k,n-k}^(nu+2l).
RatMatrix mCoeff(long t, long n, const Rational& nu, const SizeParam& size);

// Verifies the scalar-consistency double sum
//   sum_r G_{r,m} F_{2s-r,m-r} = (nu+2l+m-2s)/(nu+2l) * (nu)_{m-s}/(nu+2l+1)_{m-s}
//                                * (-2l)_s/s! * I.
bool doubleSumCheck(long s, long m, const Rational& nu, const SizeParam& size);

// Verifies the parameter-shift lemmas
//   F_{k,n}^(nu) = n/(2(nu+2l)) F_{k,n-1}^(nu+1)   (0 <= k <= n-1),
//   G_{r,m}^(nu) = 2 nu/(m-r)  G_{r,m-1}^(nu+1)    (0 <= r <= m-1)
// for all degrees up to nMax.
bool shiftLemmaCheck(const Rational& nu, const SizeParam& size, long nMax);

} // namespace mgeg
