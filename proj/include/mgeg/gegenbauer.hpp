#pragma once

#include <vector>

#include "mgeg/monopoly.hpp"

namespace mgeg {

// Finite expansion sum_m coeffs[m] * C_m^(lambda)(x) in the Gegenbauer basis
// with parameter lambda. Trailing zero coefficients are allowed.
struct GegSeries {
    Rational lambda;
    std::vector<Rational> coeffs;

    long maxDegree() const;
    bool isZero() const;
    Rational coeff(long m) const;
};

// Validates the basis parameter: lambda must be > -1/2 and nonzero (at 0 the
// classical normalisation degenerates); throws UnsupportedParameter.
void requireGegParameter(const Rational& lambda);

// C_n^(lambda) from the three-term recurrence
//   2(n+lambda) x C_n = (n+1) C_{n+1} + (n+2lambda-1) C_{n-1},
// C_{-1} = 0, C_0 = 1. Cached per lambda; returns a reference valid until
// the next call on the same thread.
const MonoPoly& gegenbauer(long n, const Rational& lambda);

// Independent construction through the terminating hypergeometric sum
//   C_n^(lambda) = ((2 lambda)_n / n!) 2F1(-n, n+2 lambda; lambda+1/2; (1-x)/2).
MonoPoly hypergeometricOracle(long n, const Rational& lambda);

// Connection coefficients for an integer parameter raise: with N >= 1,
//   C_m^(nu) = sum_{s=0}^{min(floor(m/2), N)} c_s C_{m-2s}^(nu+N),
//   c_s = (nu+N+m-2s) (nu)_{m-s} (-N)_s / ((nu+N)_{m-s+1} s!).
std::vector<Rational> connectInteger(long m, const Rational& nu, long bigN);

// Linearisation C_k C_l = sum_p a_p C_{k+l-2p}, p = 0..min(k,l).
GegSeries linearise(long k, long l, const Rational& lambda);

// Termwise derivative: d/dx C_m^(lambda) = 2 lambda C_{m-1}^(lambda+1), so a
// series at lambda maps to a series at lambda+1.
GegSeries diffGeg(const GegSeries& s);

// Conversion between the monomial and Gegenbauer bases at a given parameter.
GegSeries monoToGeg(const MonoPoly& p, const Rational& lambda);
MonoPoly gegToMono(const GegSeries& s);

// Product of two expansions in the same basis (via linearisation); throws
// ParameterMismatch when the parameters differ.
GegSeries gegMul(const GegSeries& a, const GegSeries& b);

// A weighted integral against (1-x^2)^(lambda-1/2) over [-1,1], kept exact
// as coeff * kappa(lambda) where kappa(lambda) = pi 2^(1-2 lambda)
// Gamma(2 lambda) / Gamma(lambda)^2 is the only transcendental unit that
// ever appears.
struct KappaValue {
    Rational coeff;
    Rational nu; // the kappa parameter

    bool operator==(const KappaValue& o) const;
    bool isZero() const { return coeff == 0; }
};

// Squared norm coefficient: integral of C_m^(lambda)^2 against the weight is
// kappa(lambda) * (2 lambda)_m / ((m+lambda) m!).
Rational gegNormCoeff(long m, const Rational& lambda);

// integral of s1(x) s2(x) (1-x^2)^(lambda-1/2) dx over [-1,1], exact in
// kappa(lambda) units. Throws ParameterMismatch on differing parameters.
KappaValue innerProduct(const GegSeries& s1, const GegSeries& s2);

} // namespace mgeg
