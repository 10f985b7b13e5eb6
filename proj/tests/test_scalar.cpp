#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgeg/errors.hpp"
#include "mgeg/gegenbauer.hpp"

#include <vector>

using namespace mgeg;

namespace {

const std::vector<Rational> kLambdaGrid = {rat(1, 2), rat(1), rat(3, 2), rat(7, 3), rat(10, 3)};

GegSeries unit(long m, const Rational& lambda) {
    GegSeries s;
    s.lambda = lambda;
    s.coeffs.assign(static_cast<std::size_t>(m) + 1, rat(0));
    s.coeffs.back() = rat(1);
    return s;
}

} // namespace

TEST_CASE("parameter domain") {
    CHECK_THROWS_AS(requireGegParameter(rat(0)), UnsupportedParameter);
    CHECK_THROWS_AS(requireGegParameter(rat(-1, 2)), UnsupportedParameter);
    CHECK_THROWS_AS(requireGegParameter(rat(-2)), UnsupportedParameter);
    CHECK_NOTHROW(requireGegParameter(rat(-1, 4)));
    CHECK_NOTHROW(requireGegParameter(rat(7, 3)));
}

TEST_CASE("small closed forms") {
    CHECK(gegenbauer(0, rat(3, 2)) == MonoPoly::constant(rat(1)));
    CHECK(gegenbauer(1, rat(3, 2)) == MonoPoly::monomial(rat(3), 1));
    // C_2^(1) = 4x^2 - 1
    CHECK(gegenbauer(2, rat(1)) ==
          MonoPoly::monomial(rat(4), 2) - MonoPoly::constant(rat(1)));
    // C_3^(2) = 32x^3 - 12x
    CHECK(gegenbauer(3, rat(2)) ==
          MonoPoly::monomial(rat(32), 3) - MonoPoly::monomial(rat(12), 1));
}

TEST_CASE("recurrence agrees with the hypergeometric sum") {
    for (const Rational& lam : kLambdaGrid)
        for (long n = 0; n <= 15; ++n)
            CHECK(gegenbauer(n, lam) == hypergeometricOracle(n, lam));
}

TEST_CASE("leading coefficient, parity, and endpoint value") {
    for (const Rational& lam : kLambdaGrid)
        for (long n = 0; n <= 12; ++n) {
            const MonoPoly& c = gegenbauer(n, lam);
            CHECK(c.degree() == n);
            // lead = 2^n (lambda)_n / n!
            Rational twoPow = 1;
            for (long s = 0; s < n; ++s) twoPow *= 2;
            CHECK(c.coeff(n) == twoPow * pochhammer(lam, n) / factorialRat(n));
            for (long d = 0; d <= n; ++d)
                if ((n - d) % 2 == 1) CHECK(c.coeff(d) == rat(0));
            CHECK(c.evaluate(rat(1)) == pochhammer(lam * 2, n) / factorialRat(n));
            CHECK(c.evaluate(rat(-1)) ==
                  (n % 2 == 0 ? rat(1) : rat(-1)) * pochhammer(lam * 2, n) / factorialRat(n));
        }
}

TEST_CASE("derivative shifts the parameter") {
    for (const Rational& lam : {rat(1, 2), rat(7, 3)})
        for (long n = 0; n <= 12; ++n) {
            const GegSeries d = diffGeg(unit(n, lam));
            CHECK(d.lambda == lam + 1);
            CHECK(gegToMono(d) == gegenbauer(n, lam).derivative());
            // d/dx C_n^(lam) = 2 lam C_{n-1}^(lam+1)
            if (n >= 1) {
                CHECK(d.coeff(n - 1) == lam * 2);
                for (long m = 0; m < n - 1; ++m) CHECK(d.coeff(m) == rat(0));
            }
        }
}

TEST_CASE("integer parameter connection") {
    CHECK_THROWS_AS(connectInteger(3, rat(1), 0), IndexError);
    CHECK_THROWS_AS(connectInteger(-1, rat(1), 1), IndexError);
    for (const Rational& nu : {rat(1, 2), rat(1), rat(7, 3)})
        for (long bigN = 1; bigN <= 3; ++bigN)
            for (long m = 0; m <= 12; ++m) {
                const std::vector<Rational> c = connectInteger(m, nu, bigN);
                CHECK(static_cast<long>(c.size()) == std::min(m / 2, bigN) + 1);
                MonoPoly sum;
                for (long s = 0; s < static_cast<long>(c.size()); ++s)
                    sum += gegenbauer(m - 2 * s, nu + rat(bigN)) * c[static_cast<std::size_t>(s)];
                CHECK(sum == gegenbauer(m, nu));
            }
    // spot value: m=0 gives the single coefficient 1
    CHECK(connectInteger(0, rat(7, 3), 2) == std::vector<Rational>{rat(1)});
}

TEST_CASE("linearisation of products") {
    for (const Rational& lam : {rat(1, 2), rat(7, 3)})
        for (long k = 0; k <= 6; ++k)
            for (long l = 0; l <= 6; ++l) {
                const GegSeries s = linearise(k, l, lam);
                CHECK(s.lambda == lam);
                CHECK(gegToMono(s) == gegenbauer(k, lam) * gegenbauer(l, lam));
                // only degrees k+l, k+l-2, ... appear
                for (long m = 0; m <= s.maxDegree(); ++m)
                    if ((k + l - m) % 2 == 1) CHECK(s.coeff(m) == rat(0));
            }
}

TEST_CASE("series product via linearisation") {
    const Rational lam = rat(3, 2);
    const GegSeries a = monoToGeg(MonoPoly::x() + MonoPoly::constant(rat(2)), lam);
    const GegSeries b = monoToGeg(MonoPoly::monomial(rat(1), 2) - MonoPoly::x(), lam);
    CHECK(gegToMono(gegMul(a, b)) == gegToMono(a) * gegToMono(b));
    const GegSeries other = monoToGeg(MonoPoly::x(), rat(5, 2));
    CHECK_THROWS_AS(gegMul(a, other), ParameterMismatch);
}

TEST_CASE("basis conversion round-trips") {
    for (const Rational& lam : {rat(1, 2), rat(1), rat(3, 2), rat(7, 3)}) {
        // a fixed dense polynomial of degree 12
        MonoPoly p;
        for (long d = 0; d <= 12; ++d)
            p += MonoPoly::monomial(rat(2 * d - 7, d + 1), d);
        const GegSeries s = monoToGeg(p, lam);
        CHECK(gegToMono(s) == p);
        for (long n = 0; n <= 8; ++n)
            CHECK(gegToMono(monoToGeg(gegenbauer(n, lam), lam)) == gegenbauer(n, lam));
    }
}

TEST_CASE("orthogonality in kappa units") {
    for (const Rational& lam : {rat(1, 2), rat(7, 3)})
        for (long k = 0; k <= 6; ++k)
            for (long n = 0; n <= 6; ++n) {
                const KappaValue v = innerProduct(unit(k, lam), unit(n, lam));
                if (k != n) {
                    CHECK(v.isZero());
                } else {
                    CHECK(v.coeff == gegNormCoeff(n, lam));
                    CHECK(v.nu == lam);
                }
            }
    // norm coefficient: (2 lam)_m / ((m+lam) m!)
    CHECK(gegNormCoeff(0, rat(1)) == rat(1));
    CHECK(gegNormCoeff(2, rat(1)) == rat(2 * 3, 3 * 2)); // (2)_2/((2+1) 2!) = 1
    CHECK(gegNormCoeff(1, rat(1, 2)) == rat(1) / (rat(3, 2)));
    CHECK_THROWS_AS(innerProduct(unit(1, rat(1)), unit(1, rat(2))), ParameterMismatch);
}

TEST_CASE("kappa values compare by coefficient and unit") {
    const KappaValue zeroA{rat(0), rat(1)};
    const KappaValue zeroB{rat(0), rat(7, 3)};
    CHECK(zeroA == zeroB); // zero regardless of the unit
    const KappaValue a{rat(1, 2), rat(1)};
    const KappaValue b{rat(1, 2), rat(2)};
    CHECK(!(a == b));
    CHECK(a == a);
}
