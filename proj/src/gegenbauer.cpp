#include "mgeg/gegenbauer.hpp"

#include <deque>
#include <map>

namespace mgeg {

namespace {
// 2^d for d >= 0.
Rational powTwo(long d) {
    Rational two = 1;
    for (long s = 0; s < d; ++s) two *= 2;
    return two;
}
} // namespace

long GegSeries::maxDegree() const {
    for (size_t m = coeffs.size(); m-- > 0;)
        if (coeffs[m] != 0) return static_cast<long>(m);
    return -1;
}

bool GegSeries::isZero() const { return maxDegree() < 0; }

Rational GegSeries::coeff(long m) const {
    if (m < 0 || m >= static_cast<long>(coeffs.size())) return 0;
    return coeffs[static_cast<size_t>(m)];
}

void requireGegParameter(const Rational& lambda) {
    if (lambda == 0)
        throw UnsupportedParameter("Gegenbauer parameter 0 requires a different normalisation");
    if (lambda <= rat(-1, 2))
        throw UnsupportedParameter("Gegenbauer parameter must exceed -1/2, got " + ratStr(lambda));
}

const MonoPoly& gegenbauer(long n, const Rational& lambda) {
    requireGegParameter(lambda);
    if (n < 0) throw IndexError("gegenbauer: negative degree");
    // std::deque keeps references to already-built polynomials stable while
    // the cache grows.
    thread_local std::map<Rational, std::deque<MonoPoly>> cache;
    auto& list = cache[lambda];
    if (list.empty()) {
        list.push_back(MonoPoly::constant(1));
        list.push_back(MonoPoly::monomial(2 * lambda, 1));
    }
    while (static_cast<long>(list.size()) <= n) {
        const long m = static_cast<long>(list.size()) - 1;
        // (m+1) C_{m+1} = 2(m+lambda) x C_m - (m+2lambda-1) C_{m-1}
        MonoPoly next = list.back().shiftUp(1) * (2 * (lambda + m)) -
                        list[static_cast<size_t>(m - 1)] * (2 * lambda + m - 1);
        list.push_back(next * Rational(Rational(1) / (m + 1)));
    }
    return list[static_cast<size_t>(n)];
}

MonoPoly hypergeometricOracle(long n, const Rational& lambda) {
    requireGegParameter(lambda);
    if (n < 0) throw IndexError("hypergeometricOracle: negative degree");
    // (1-x)/2 as a polynomial; powers built once per call.
    const MonoPoly half = MonoPoly(std::vector<Rational>{rat(1, 2), rat(-1, 2)});
    MonoPoly acc;
    MonoPoly halfPow = MonoPoly::constant(1);
    // term_s = ((2 lambda)_n / n!) * (-n)_s (n+2 lambda)_s / ((lambda+1/2)_s s!)
    Rational term = pochhammer(2 * lambda, n) / factorialRat(n);
    for (long s = 0; s <= n; ++s) {
        acc += halfPow * term;
        if (s < n) {
            term *= Rational(-n + s) * (2 * lambda + n + s);
            term /= (lambda + rat(1, 2) + s) * (s + 1);
            halfPow = halfPow * half;
        }
    }
    return acc;
}

std::vector<Rational> connectInteger(long m, const Rational& nu, long bigN) {
    requireGegParameter(nu);
    if (bigN < 1) throw IndexError("connectInteger: parameter shift must be a positive integer");
    if (m < 0) throw IndexError("connectInteger: negative degree");
    const long sMax = std::min(m / 2, bigN);
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(sMax) + 1);
    for (long s = 0; s <= sMax; ++s) {
        Rational v = (nu + bigN + m - 2 * s) * pochhammer(nu, m - s) * pochhammer(Rational(-bigN), s) /
                     (pochhammer(nu + bigN, m - s + 1) * factorialRat(s));
        c.push_back(v);
    }
    return c;
}

GegSeries linearise(long k, long l, const Rational& lambda) {
    requireGegParameter(lambda);
    if (k < 0 || l < 0) throw IndexError("linearise: negative degree");
    GegSeries out{lambda, std::vector<Rational>(static_cast<size_t>(k + l) + 1, Rational(0))};
    for (long p = 0; p <= std::min(k, l); ++p) {
        const long d = k + l - 2 * p;
        Rational a = Rational(k + l + lambda - 2 * p) / (k + l + lambda - p);
        a *= pochhammer(lambda, p) * pochhammer(lambda, k - p) * pochhammer(lambda, l - p) *
             pochhammer(2 * lambda, k + l - p);
        a /= factorialRat(p) * factorialRat(k - p) * factorialRat(l - p) * pochhammer(lambda, k + l - p);
        a *= factorialRat(d) / pochhammer(2 * lambda, d);
        out.coeffs[static_cast<size_t>(d)] = a;
    }
    return out;
}

GegSeries diffGeg(const GegSeries& s) {
    requireGegParameter(s.lambda);
    GegSeries out{s.lambda + 1, {}};
    const long top = s.maxDegree();
    if (top <= 0) return out;
    out.coeffs.assign(static_cast<size_t>(top), Rational(0));
    for (long m = 1; m <= top; ++m)
        out.coeffs[static_cast<size_t>(m - 1)] = 2 * s.lambda * s.coeff(m);
    return out;
}

GegSeries monoToGeg(const MonoPoly& p, const Rational& lambda) {
    requireGegParameter(lambda);
    GegSeries out{lambda, {}};
    if (p.isZero()) return out;
    out.coeffs.assign(static_cast<size_t>(p.degree()) + 1, Rational(0));
    MonoPoly rem = p;
    // Strip leading terms: C_d has leading coefficient 2^d (lambda)_d / d!.
    while (!rem.isZero()) {
        const long d = rem.degree();
        const Rational lead = pochhammer(lambda, d) * powTwo(d) / factorialRat(d);
        Rational c = rem.coeff(d) / lead;
        out.coeffs[static_cast<size_t>(d)] = c;
        rem -= gegenbauer(d, lambda) * c;
        if (!rem.isZero() && rem.degree() >= d)
            throw Error("monoToGeg: elimination failed to reduce degree");
    }
    return out;
}

MonoPoly gegToMono(const GegSeries& s) {
    requireGegParameter(s.lambda);
    MonoPoly acc;
    for (long m = 0; m <= s.maxDegree(); ++m) {
        const Rational c = s.coeff(m);
        if (c != 0) acc += gegenbauer(m, s.lambda) * c;
    }
    return acc;
}

GegSeries gegMul(const GegSeries& a, const GegSeries& b) {
    if (a.lambda != b.lambda)
        throw ParameterMismatch("gegMul: parameters " + ratStr(a.lambda) + " vs " + ratStr(b.lambda));
    GegSeries out{a.lambda, {}};
    const long da = a.maxDegree(), db = b.maxDegree();
    if (da < 0 || db < 0) return out;
    out.coeffs.assign(static_cast<size_t>(da + db) + 1, Rational(0));
    for (long k = 0; k <= da; ++k) {
        if (a.coeff(k) == 0) continue;
        for (long l = 0; l <= db; ++l) {
            if (b.coeff(l) == 0) continue;
            const Rational f = a.coeff(k) * b.coeff(l);
            GegSeries lin = linearise(k, l, a.lambda);
            for (long d = 0; d <= k + l; ++d) {
                const Rational c = lin.coeff(d);
                if (c != 0) out.coeffs[static_cast<size_t>(d)] += f * c;
            }
        }
    }
    return out;
}

bool KappaValue::operator==(const KappaValue& o) const {
    if (coeff == 0 && o.coeff == 0) return true;
    return nu == o.nu && coeff == o.coeff;
}

Rational gegNormCoeff(long m, const Rational& lambda) {
    return pochhammer(2 * lambda, m) / ((m + lambda) * factorialRat(m));
}

KappaValue innerProduct(const GegSeries& s1, const GegSeries& s2) {
    if (s1.lambda != s2.lambda)
        throw ParameterMismatch("innerProduct: parameters " + ratStr(s1.lambda) + " vs " + ratStr(s2.lambda));
    requireGegParameter(s1.lambda);
    KappaValue out{0, s1.lambda};
    const long top = std::min(s1.maxDegree(), s2.maxDegree());
    for (long m = 0; m <= top; ++m) {
        const Rational a = s1.coeff(m), b = s2.coeff(m);
        if (a != 0 && b != 0) out.coeff += a * b * gegNormCoeff(m, s1.lambda);
    }
    return out;
}

} // namespace mgeg
