#pragma once

#include "mgeg/matpoly.hpp"

namespace mgeg {

// Parameters of the matrix weight W(x) = (1-x^2)^(nu-1/2) Wpol(x) on (-1,1).
struct WeightSpec {
    SizeParam size;
    Rational nu;
};

void requireWeightSpec(const WeightSpec& spec);

// Expansion coefficient alpha_k(i,j) of the polynomial part
//   (Wpol)_{i,j} = sum_{k = max(0, i+j-2l)}^{min(i,j)} alpha_k(i,j) C^(nu)_{i+j-2k}.
// Throws IndexError when (k,i,j) is outside the admissible range.
Rational alphaCoeff(long k, long i, long j, const WeightSpec& spec);

// The (i,j) entry of Wpol as a Gegenbauer series at parameter nu.
GegSeries weightEntry(long i, long j, const WeightSpec& spec);

// Wpol as a matrix polynomial in the monomial basis.
MatPoly weightPolyMatrix(const WeightSpec& spec);

// LDU factorisation W(x) = L(x) T(x) L(x)^t with L unipotent lower
// triangular polynomial,
//   L_{m,k} = m!/(k! (2nu+2k)_{m-k}) C_{m-k}^(nu+k)(x)  (m >= k),
// and T diagonal, T_{k,k} = t_k (1-x^2)^(k+nu-1/2).
struct LDUFactors {
    MatPoly L;
    std::vector<Rational> t; // t_k, k = 0..2l
};

LDUFactors lduFactors(const WeightSpec& spec);

// Result of comparing Wpol against L diag(t_k (1-x^2)^k) L^t entrywise.
struct LduCheck {
    bool ok = true;
    long i = -1, j = -1; // first mismatching entry when !ok
};

LduCheck verifyLDU(const WeightSpec& spec);

} // namespace mgeg
