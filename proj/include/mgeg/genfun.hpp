#pragma once

#include "mgeg/connection.hpp"

namespace mgeg {

// Trivariate polynomial with Rational coefficients, stored t-major:
// c[dt][dx][dnu] is the coefficient of t^dt x^dx nu^dnu. Series extraction
// in t is the hot path, hence the layout.
struct TriPoly {
    std::vector<std::vector<std::vector<Rational>>> c;

    bool isZero() const;
    static TriPoly zero() { return TriPoly{}; }
    static TriPoly constant(const Rational& v);
    // 1 - 2 x t + t^2
    static TriPoly seriesKernel();
    // d/dt of the series kernel: -2x + 2t
    static TriPoly seriesKernelDt();
    // nu + shift (a degree-1 polynomial in nu)
    static TriPoly nuPlus(long shift);

    TriPoly operator+(const TriPoly& o) const;
    TriPoly operator-(const TriPoly& o) const;
    TriPoly operator*(const TriPoly& o) const;
    TriPoly scale(const Rational& s) const;
    // Multiplies by t^k.
    TriPoly shiftT(long k) const;
    TriPoly diffT() const;
    bool operator==(const TriPoly& o) const;

    // Substitutes a rational value for nu; result indexed [dt] -> MonoPoly in x.
    std::vector<MonoPoly> atNu(const Rational& nu) const;
    // True when every coefficient is an integer.
    bool integerCoefficients() const;
};

// Rescaled expansion coefficients ~F_{k,n}: F_{k,n} multiplied by the
// parameter-only unit 2^n/(n! Gamma(nu+2l)) * Gamma(mu+2l) (mu+1)_{2l-1}
// (with mu = nu+n) and then divided, slice by slice, by the common linear
// content factors discovered at runtime; each entry of the result is a
// polynomial of degree <= floor(l) in the slice variable
// lambda_k = (nu+2l) + (n-k), with integer coefficients independent of nu.
struct SlicePoly {
    long k = 0;
    // entry[i][j] = ascending coefficients in lambda_k (empty = zero entry)
    std::vector<std::vector<std::vector<Rational>>> entry;
    // The content factors (lambda - root) divided out, by ascending shift.
    std::vector<Rational> removedRoots;

    long maxDegree() const;
    Rational evaluate(long i, long j, const Rational& lambda) const;
};

// Computes the slice-k polynomial matrix by exact interpolation over
// floor-degree+3 consecutive degrees n, verifying the 3 extra nodes and the
// integrality of all coefficients; throws InterpolationMismatch when either
// fails. The result is independent of the nu used for interpolation.
SlicePoly polyInLambda(long k, const Rational& nu, const SizeParam& size);

// ~F_{k,n} evaluated exactly at lambda_k = nu + 2l + n - k.
RatMatrix tildeF(long k, long n, const Rational& nu, const SizeParam& size);

// Partial sums of the generating function: element n of the result is
// sum_k ~F_{k,n} C_{n-k}^(nu+2l)(x), for n = 0..order.
std::vector<MatPoly> seriesCoefficients(const Rational& nu, const SizeParam& size, long order);

// Closed form of sum_n (sum_k ~F_{k,n} C_{n-k}^(nu+2l)) t^n as
// numerator(nu, x, t) / R^(nu + 2l + floor(l)) with R = 1 - 2xt + t^2.
// The numerator has integer coefficients.
struct ClosedForm {
    SizeParam size;
    long floorEll = 0; // the extra denominator offset beyond nu + 2l
    std::vector<std::vector<TriPoly>> numerator; // [i][j]
    long verifiedOrder = -1;
};

// Assembles the closed form and verifies it against seriesCoefficients to
// order max(12, 2*twoEll + 6) at the given nu; throws SeriesMismatch if the
// expansion disagrees.
ClosedForm closedForm(const Rational& nu, const SizeParam& size);

} // namespace mgeg
