#include "mgeg/connection.hpp"

namespace mgeg {

namespace {

// Shared combinatorial prefactor of gamma; zero signals an absent entry.
Rational gammaBinomials(long twoEll, long i, long j, long k) {
    if ((i + j - k) % 2 != 0) return 0;
    return binomialRat(twoEll, k) * binomialRat(k, (k + i - j) / 2) *
           binomialRat(twoEll - k, (i + j - k) / 2);
}

} // namespace

Rational gammaCoeff(const Rational& mu, long i, long j, long k, const SizeParam& size) {
    const long twoEll = size.twoEll;
    if (i < 0 || i > twoEll || j < 0 || j > twoEll) throw IndexError("gammaCoeff: entry index out of range");
    const Rational b = gammaBinomials(twoEll, i, j, k);
    if (b == 0) return 0;
    const long d1 = (i + j - k) / 2;  // Gamma(mu + d1) numerator
    const long d2 = (k + i + j) / 2;  // Gamma(mu + 2l - d2) numerator
    const long d3 = (k - i + j) / 2;  // Gamma(mu + 2l + 1 - d3) denominator
    const long d4 = (k + i - j) / 2;  // Gamma(mu + 2l + 1 - d4) denominator
    Rational v = (k % 2 == 0) ? 1 : -1;
    v *= (mu + twoEll) * (mu + twoEll - k) * b;
    v *= gammaRatioShift(mu, d1, twoEll + 1 - d3);
    v *= gammaRatioShift(mu + twoEll, -d2, 1 - d4);
    return v;
}

Rational gammaCoeffScaled(const Rational& mu, long i, long j, long k, const SizeParam& size,
                          long anchorShift) {
    // gamma * Gamma(mu + anchorShift); the 1/Gamma(mu) inside gamma cancels
    // into Gamma(mu+anchorShift)/Gamma(mu) = (mu)_anchorShift.
    const long twoEll = size.twoEll;
    if (i < 0 || i > twoEll || j < 0 || j > twoEll) return 0;
    const Rational b = gammaBinomials(twoEll, i, j, k);
    if (b == 0) return 0;
    const long d1 = (i + j - k) / 2;
    const long d2 = (k + i + j) / 2;
    const long d3 = (k - i + j) / 2;
    const long d4 = (k + i - j) / 2;
    Rational v = (k % 2 == 0) ? 1 : -1;
    v *= (mu + twoEll) * (mu + twoEll - k) * b;
    v *= pochhammer(mu, anchorShift);
    v *= gammaRatioShift(mu, d1, twoEll + 1 - d3);
    v *= gammaRatioShift(mu + twoEll, -d2, 1 - d4);
    return v;
}

RatMatrix fMatrix(long k, long n, const Rational& nu, const SizeParam& size) {
    requireGegParameter(nu);
    const long twoEll = size.twoEll;
    const long N = size.dim();
    RatMatrix out(N);
    if (n < 0 || k < 0 || k > std::min(n, twoEll)) return out;
    const Rational mu = nu + n;
    // n!/2^n * Gamma(nu+2l) * gamma(mu; i,j,k); the Gamma(nu+2l)/Gamma(mu)
    // part of gamma fuses into an exact ratio with integer shift n.
    Rational pref = factorialRat(n);
    for (long s = 0; s < n; ++s) pref /= 2;
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const Rational b = gammaBinomials(twoEll, i, j, k);
            if (b == 0) continue;
            const long d1 = (i + j - k) / 2;
            const long d2 = (k + i + j) / 2;
            const long d3 = (k - i + j) / 2;
            const long d4 = (k + i - j) / 2;
            Rational v = (k % 2 == 0) ? pref : -pref;
            v *= (mu + twoEll) * (mu + twoEll - k) * b;
            v *= pochhammer(mu, d1);                                     // Gamma(mu+d1)/Gamma(mu)
            v *= gammaRatioShift(mu + twoEll, -d2, 1 - d3);              // Gamma(mu+2l-d2)/Gamma(mu+2l+1-d3)
            v *= gammaRatioShift(nu + twoEll, 0, n + 1 - d4);            // Gamma(nu+2l)/Gamma(mu+2l+1-d4)
            out.at(i, j) = v;
        }
    return out;
}

RatMatrix gMatrix(long r, long m, const Rational& nu, const SizeParam& size) {
    requireGegParameter(nu);
    const long twoEll = size.twoEll;
    const long N = size.dim();
    RatMatrix out(N);
    if (m < 0 || r < 0 || r > std::min(m, twoEll)) return out;
    const Rational mu = nu + m;
    Rational pref = 1;
    for (long s = 0; s < m - r; ++s) pref *= 2;
    pref /= factorialRat(m - r);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const Rational b = gammaBinomials(twoEll, i, j, r);
            if (b == 0) continue;
            const long d5 = (r - i + j) / 2; // Gamma(mu - d5) numerator
            const long d6 = (r + i - j) / 2; // Gamma(mu - d6) numerator
            const long d7 = (r - i - j) / 2; // Gamma(mu + 1 - d7) denominator
            const long d8 = (r + i + j) / 2; // Gamma(mu + 2l + 1 - d8) denominator
            Rational v = pref * b / (binomialRat(twoEll, i) * binomialRat(twoEll, j));
            v *= (mu - r + j) * (mu + twoEll - r - j);
            v *= pochhammer(nu, m - d5);                                 // Gamma(mu-d5)/Gamma(nu)
            v *= gammaRatioShift(mu, -d6, 1 - d7,
                                 PoleConvention::ReciprocalZero);        // Gamma(mu-d6)/Gamma(mu+1-d7)
            v *= gammaRatioShift(mu + twoEll, -r, 1 - d8,
                                 PoleConvention::ReciprocalZero);        // Gamma(mu+2l-r)/Gamma(mu+2l+1-d8)
            out.at(i, j) = v;
        }
    return out;
}

MatPoly synthesizeHatP(long n, const Rational& nu, const SizeParam& size) {
    const long N = size.dim();
    MatPoly acc(N);
    if (n < 0) return acc;
    for (long k = 0; k <= std::min(n, size.twoEll); ++k) {
        const RatMatrix f = fMatrix(k, n, nu, size);
        if (f.isZero()) continue;
        acc = acc + MatPoly::constant(f).scalarPolyMul(gegenbauer(n - k, nu + size.twoEll));
    }
    return acc;
}

std::vector<RatMatrix> expandScalar(long m, const Rational& nu, const SizeParam& size) {
    if (m < 0) throw IndexError("expandScalar: negative degree");
    std::vector<RatMatrix> out;
    for (long r = 0; r <= std::min(m, size.twoEll); ++r) out.push_back(gMatrix(r, m, nu, size));
    return out;
}

RatMatrix mCoeff(long t, long n, const Rational& nu, const SizeParam& size) {
    const long twoEll = size.twoEll;
    RatMatrix acc(size.dim());
    if (t < 0 || t > std::min(n, 2 * twoEll)) return acc;
    for (long k = std::max(0L, t - twoEll); k <= std::min(n, twoEll); ++k)
        acc += fMatrix(k, n, nu, size) * gMatrix(t - k, n - k, nu + twoEll, size);
    return acc;
}

bool doubleSumCheck(long s, long m, const Rational& nu, const SizeParam& size) {
    const long twoEll = size.twoEll;
    RatMatrix acc(size.dim());
    for (long r = std::max(0L, 2 * s - twoEll); r <= std::min(m, twoEll); ++r)
        acc += gMatrix(r, m, nu, size) * fMatrix(2 * s - r, m - r, nu, size);
    Rational rhs = (nu + twoEll + m - 2 * s) / (nu + twoEll);
    rhs *= pochhammer(nu, m - s) / pochhammer(nu + twoEll + 1, m - s);
    rhs *= pochhammer(Rational(-twoEll), s) / factorialRat(s);
    return acc == RatMatrix::identity(size.dim()) * rhs;
}

bool shiftLemmaCheck(const Rational& nu, const SizeParam& size, long nMax) {
    for (long n = 1; n <= nMax; ++n) {
        for (long k = 0; k <= std::min(n - 1, size.twoEll); ++k) {
            const RatMatrix lhs = fMatrix(k, n, nu, size);
            const RatMatrix rhs = fMatrix(k, n - 1, nu + 1, size) * (Rational(n) / (2 * (nu + size.twoEll)));
            if (lhs != rhs) return false;
        }
        for (long r = 0; r <= std::min(n - 1, size.twoEll); ++r) {
            const RatMatrix lhs = gMatrix(r, n, nu, size);
            const RatMatrix rhs = gMatrix(r, n - 1, nu + 1, size) * (2 * nu / Rational(n - r));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace mgeg
