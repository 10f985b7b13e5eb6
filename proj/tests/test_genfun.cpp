#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgeg/errors.hpp"
#include "mgeg/genfun.hpp"
#include "mgeg/mvop.hpp"

#include <algorithm>
#include <vector>

using namespace mgeg;

namespace {

WeightSpec spec(long twoEll, const Rational& nu) { return WeightSpec{SizeParam{twoEll}, nu}; }

// t^k as a TriPoly
TriPoly tPow(long k) { return TriPoly::constant(rat(1)).shiftT(k); }

} // namespace

TEST_CASE("trivariate polynomial algebra") {
    const TriPoly r = TriPoly::seriesKernel();
    // R = 1 - 2xt + t^2 at nu irrelevant
    const std::vector<MonoPoly> slices = r.atNu(rat(0));
    REQUIRE(slices.size() == 3);
    CHECK(slices[0] == MonoPoly::constant(rat(1)));
    CHECK(slices[1] == MonoPoly::monomial(rat(-2), 1));
    CHECK(slices[2] == MonoPoly::constant(rat(1)));
    CHECK(r.diffT() == TriPoly::seriesKernelDt());
    CHECK((r - r).isZero());
    CHECK(r * TriPoly::constant(rat(1)) == r);
    // (nu+2) evaluated
    const std::vector<MonoPoly> n2 = TriPoly::nuPlus(2).atNu(rat(7, 3));
    REQUIRE(n2.size() == 1);
    CHECK(n2[0] == MonoPoly::constant(rat(13, 3)));
    CHECK(r.integerCoefficients());
    CHECK(!r.scale(rat(1, 2)).integerCoefficients());
    // shiftT multiplies by t^k
    CHECK(tPow(2) * r == r.shiftT(2));
}

TEST_CASE("slice polynomials: degree bound and integrality") {
    for (long twoEll = 0; twoEll <= 4; ++twoEll) {
        const SizeParam size{twoEll};
        for (long k = 0; k <= twoEll; ++k) {
            const SlicePoly s = polyInLambda(k, rat(7, 3), size);
            CHECK(s.k == k);
            CHECK(s.maxDegree() <= twoEll / 2);
            for (const auto& row : s.entry)
                for (const auto& e : row)
                    for (const Rational& c : e) CHECK(isInt(c));
        }
    }
}

TEST_CASE("slice polynomials at the smallest sizes") {
    // scalar case: the single slice is the constant 1
    {
        const SlicePoly s = polyInLambda(0, rat(1, 2), SizeParam{0});
        CHECK(s.maxDegree() == 0);
        CHECK(s.evaluate(0, 0, rat(5)) == rat(1));
    }
    // twoEll = 2: three slices in lambda_k = nu + 2 + n - k
    const SizeParam size{2};
    const SlicePoly s0 = polyInLambda(0, rat(1, 2), size);
    const SlicePoly s1 = polyInLambda(1, rat(1, 2), size);
    const SlicePoly s2 = polyInLambda(2, rat(1, 2), size);
    for (const Rational& lam : {rat(10), rat(0), rat(-7, 3)}) {
        // slice 0: diag(lambda-1, 2 lambda-4, lambda-1)
        CHECK(s0.evaluate(0, 0, lam) == lam - 1);
        CHECK(s0.evaluate(1, 1, lam) == lam * 2 - 4);
        CHECK(s0.evaluate(2, 2, lam) == lam - 1);
        CHECK(s0.evaluate(0, 1, lam) == rat(0));
        CHECK(s0.evaluate(0, 2, lam) == rat(0));
        CHECK(s0.evaluate(1, 2, lam) == rat(0));
        // slice 1: -2 lambda on the off-tridiagonal
        CHECK(s1.evaluate(0, 1, lam) == lam * -2);
        CHECK(s1.evaluate(1, 0, lam) == lam * -2);
        CHECK(s1.evaluate(1, 2, lam) == lam * -2);
        CHECK(s1.evaluate(2, 1, lam) == lam * -2);
        CHECK(s1.evaluate(0, 0, lam) == rat(0));
        CHECK(s1.evaluate(0, 2, lam) == rat(0));
        // slice 2: corners lambda+1, centre 2 lambda+4
        CHECK(s2.evaluate(0, 2, lam) == lam + 1);
        CHECK(s2.evaluate(2, 0, lam) == lam + 1);
        CHECK(s2.evaluate(1, 1, lam) == lam * 2 + 4);
        CHECK(s2.evaluate(0, 0, lam) == rat(0));
        CHECK(s2.evaluate(0, 1, lam) == rat(0));
    }
}

TEST_CASE("rescaled coefficients are proportional to the expansion matrices") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll) {
        const SizeParam size{twoEll};
        const Rational nu = rat(7, 3);
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= std::min(n, twoEll); ++k) {
                const RatMatrix tf = tildeF(k, n, nu, size);
                const RatMatrix f = fMatrix(k, n, nu, size);
                // cross-ratios: tf and f differ by one scalar unit
                for (long i = 0; i < size.dim(); ++i)
                    for (long j = 0; j < size.dim(); ++j)
                        for (long p = 0; p < size.dim(); ++p)
                            for (long q = 0; q < size.dim(); ++q)
                                CHECK(tf.at(i, j) * f.at(p, q) == f.at(i, j) * tf.at(p, q));
                CHECK(tf.isZero() == f.isZero());
            }
        // out of range
        CHECK(tildeF(twoEll + 1, twoEll + 3, nu, size).isZero());
        CHECK(tildeF(2, 1, nu, size).isZero());
    }
}

TEST_CASE("undoing the rescaling recovers the symmetric family") {
    // tildeF differs from F by 2^n/n! (nu+2l)_n (nu+n+1)_{max(0,2l-1)} and by
    // the content factors (lambda_k - r) each slice divided out; restoring
    // both must land exactly on hatP_n term by term.
    for (long twoEll = 1; twoEll <= 3; ++twoEll) {
        const Rational nu = rat(3, 2);
        const SizeParam size{twoEll};
        const WeightSpec w = spec(twoEll, nu);
        const Rational lamG = nu + twoEll;
        const auto series = seriesCoefficients(nu, size, 6);
        REQUIRE(static_cast<long>(series.size()) == 7);
        for (long n = 0; n <= 6; ++n) {
            Rational unit = pochhammer(nu + twoEll, n) *
                            pochhammer(nu + n + 1, std::max(0L, twoEll - 1)) / factorialRat(n);
            for (long s = 0; s < n; ++s) unit *= 2;
            MatPoly restored(size.dim());
            MatPoly assembled(size.dim());
            for (long k = 0; k <= std::min(n, twoEll); ++k) {
                const RatMatrix tf = tildeF(k, n, nu, size);
                const SlicePoly slice = polyInLambda(k, nu, size);
                const Rational lambdaK = nu + rat(twoEll + n - k);
                Rational content = 1;
                for (const Rational& r : slice.removedRoots) content *= lambdaK - r;
                restored = restored + MatPoly::constant(tf * content)
                                          .scalarPolyMul(gegenbauer(n - k, lamG));
                assembled = assembled + MatPoly::constant(tf).scalarPolyMul(gegenbauer(n - k, lamG));
            }
            CHECK(restored == hatP(n, w).scale(unit));
            CHECK(assembled == series[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("closed form at the smallest sizes") {
    // scalar case: numerator 1 over R^nu
    {
        const ClosedForm cf = closedForm(rat(7, 3), SizeParam{0});
        CHECK(cf.floorEll == 0);
        CHECK(cf.numerator[0][0] == TriPoly::constant(rat(1)));
        CHECK(cf.verifiedOrder >= 12);
    }

    // twoEll = 2: the numerator over R^(nu+3) in closed form
    const ClosedForm cf = closedForm(rat(1, 2), SizeParam{2});
    CHECK(cf.floorEll == 1);
    CHECK(cf.verifiedOrder >= 12);

    const TriPoly r = TriPoly::seriesKernel();
    const TriPoly oneMinusT2 = TriPoly::constant(rat(1)) - tPow(2);
    const TriPoly nu2 = TriPoly::nuPlus(2);
    const TriPoly a = nu2 * oneMinusT2;           // (nu+2)(1-t^2)
    const TriPoly b = a.shiftT(1);                // (nu+2) t (1-t^2)
    const TriPoly k1t = a.shiftT(2);              // (nu+2) t^2 (1-t^2)
    const TriPoly k2t = r.shiftT(2);              // t^2 R
    const long d1[3] = {1, 2, 1};
    const long d2[3] = {1, 4, 1};
    const long e[3][3] = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    const long k1[3][3] = {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}};
    const long k2[3][3] = {{0, 0, 1}, {0, 4, 0}, {1, 0, 0}};
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) {
            TriPoly want = b.scale(rat(-2 * e[i][j])) + k1t.scale(rat(k1[i][j])) +
                           k2t.scale(rat(k2[i][j]));
            if (i == j)
                want = want + a.scale(rat(d1[i])) - r.scale(rat(d2[i]));
            CHECK(cf.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == want);
        }
}

TEST_CASE("closed form reproduces its own series at larger sizes") {
    for (long twoEll = 1; twoEll <= 4; ++twoEll) {
        const ClosedForm cf = closedForm(rat(7, 3), SizeParam{twoEll});
        CHECK(cf.floorEll == twoEll / 2);
        CHECK(cf.verifiedOrder >= std::max<long>(12, 2 * twoEll + 6));
        for (const auto& row : cf.numerator)
            for (const TriPoly& p : row) CHECK(p.integerCoefficients());
    }
}
