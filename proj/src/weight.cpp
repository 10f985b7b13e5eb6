#include "mgeg/weight.hpp"

namespace mgeg {

void requireWeightSpec(const WeightSpec& spec) {
    if (spec.size.twoEll < 0) throw UnsupportedParameter("weight: twoEll must be nonnegative");
    if (spec.nu <= 0) throw UnsupportedParameter("weight: nu must be positive, got " + ratStr(spec.nu));
}

Rational alphaCoeff(long k, long i, long j, const WeightSpec& spec) {
    requireWeightSpec(spec);
    const long twoEll = spec.size.twoEll;
    const Rational& nu = spec.nu;
    if (i < 0 || i > twoEll || j < 0 || j > twoEll)
        throw IndexError("alphaCoeff: entry index out of range");
    if (k < std::max(0L, i + j - twoEll) || k > std::min(i, j))
        throw IndexError("alphaCoeff: expansion index out of range");
    Rational v = (k % 2 == 0) ? 1 : -1;
    v *= factorialRat(i) * factorialRat(j) * factorialRat(i + j - 2 * k);
    v /= factorialRat(k) * pochhammer(2 * nu, i + j - 2 * k) * pochhammer(nu, i + j - k);
    v *= pochhammer(nu, i - k) * pochhammer(nu, j - k) / (factorialRat(i - k) * factorialRat(j - k));
    v *= (nu + i + j - 2 * k) / (nu + i + j - k);
    v *= factorialRat(twoEll - i) * factorialRat(twoEll - j) / factorialRat(twoEll + k - i - j);
    v *= pochhammer(-twoEll - nu, k) * (nu + twoEll) / factorialRat(twoEll);
    return v;
}

GegSeries weightEntry(long i, long j, const WeightSpec& spec) {
    requireWeightSpec(spec);
    const long twoEll = spec.size.twoEll;
    if (i < 0 || i > twoEll || j < 0 || j > twoEll)
        throw IndexError("weightEntry: entry index out of range");
    GegSeries out{spec.nu, std::vector<Rational>(static_cast<size_t>(i + j) + 1, Rational(0))};
    for (long k = std::max(0L, i + j - twoEll); k <= std::min(i, j); ++k)
        out.coeffs[static_cast<size_t>(i + j - 2 * k)] = alphaCoeff(k, i, j, spec);
    return out;
}

MatPoly weightPolyMatrix(const WeightSpec& spec) {
    const long n = spec.size.dim();
    std::vector<RatMatrix> coeffs(static_cast<size_t>(2 * spec.size.twoEll) + 1, RatMatrix::zero(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const MonoPoly e = gegToMono(weightEntry(i, j, spec));
            for (long d = 0; d <= e.degree(); ++d) coeffs[static_cast<size_t>(d)].at(i, j) = e.coeff(d);
        }
    return MatPoly(n, std::move(coeffs));
}

LDUFactors lduFactors(const WeightSpec& spec) {
    requireWeightSpec(spec);
    const long twoEll = spec.size.twoEll;
    const long n = spec.size.dim();
    const Rational& nu = spec.nu;

    // Build L column-by-column in the monomial basis.
    std::vector<RatMatrix> coeffs(1, RatMatrix::zero(n));
    for (long m = 0; m < n; ++m)
        for (long k = 0; k <= m; ++k) {
            const Rational pref =
                factorialRat(m) / (factorialRat(k) * pochhammer(2 * nu + 2 * k, m - k));
            const MonoPoly cp = gegenbauer(m - k, nu + k) * pref;
            if (cp.degree() >= static_cast<long>(coeffs.size()))
                coeffs.resize(static_cast<size_t>(cp.degree()) + 1, RatMatrix::zero(n));
            for (long d = 0; d <= cp.degree(); ++d) coeffs[static_cast<size_t>(d)].at(m, k) += cp.coeff(d);
        }
    LDUFactors out;
    out.L = MatPoly(n, std::move(coeffs));
    out.t.reserve(static_cast<size_t>(n));
    for (long k = 0; k <= twoEll; ++k) {
        Rational tk = factorialRat(k) * pochhammer(nu, k) / pochhammer(nu + rat(1, 2), k);
        tk *= pochhammer(2 * nu + twoEll, k) * (nu + twoEll);
        tk /= pochhammer(Rational(twoEll - k + 1), k) * pochhammer(2 * nu + k - 1, k);
        out.t.push_back(tk);
    }
    return out;
}

LduCheck verifyLDU(const WeightSpec& spec) {
    const long n = spec.size.dim();
    const LDUFactors f = lduFactors(spec);
    const MatPoly w = weightPolyMatrix(spec);

    // Precompute (1-x^2)^k.
    const MonoPoly oneMinusX2(std::vector<Rational>{1, 0, -1});
    std::vector<MonoPoly> pw(1, MonoPoly::constant(1));
    for (long k = 1; k < n; ++k) pw.push_back(pw.back() * oneMinusX2);

    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            MonoPoly acc;
            for (long k = 0; k <= std::min(i, j); ++k)
                acc += f.L.entry(i, k) * f.L.entry(j, k) * pw[static_cast<size_t>(k)] * f.t[static_cast<size_t>(k)];
            if (acc != w.entry(i, j)) return LduCheck{false, i, j};
        }
    return LduCheck{};
}

} // namespace mgeg
