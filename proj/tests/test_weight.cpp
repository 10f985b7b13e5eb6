#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgeg/errors.hpp"
#include "mgeg/weight.hpp"

#include <algorithm>
#include <vector>

using namespace mgeg;

namespace {

const std::vector<Rational> kNuGrid = {rat(1, 2), rat(1), rat(3, 2), rat(3), rat(7, 3)};

WeightSpec spec(long twoEll, const Rational& nu) { return WeightSpec{SizeParam{twoEll}, nu}; }

} // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW(requireWeightSpec(spec(0, rat(1, 2))));
    CHECK_NOTHROW(requireWeightSpec(spec(4, rat(7, 3))));
    CHECK_THROWS_AS(requireWeightSpec(spec(1, rat(0))), UnsupportedParameter);
    CHECK_THROWS_AS(requireWeightSpec(spec(1, rat(-1, 2))), UnsupportedParameter);
    CHECK_THROWS_AS(requireWeightSpec(spec(-1, rat(1))), UnsupportedParameter);
}

TEST_CASE("expansion coefficient range and a closed value") {
    const WeightSpec w = spec(2, rat(7, 3));
    // admissible k for (i,j) = (1,1): max(0, 2-2)..min(1,1) = 0..1
    CHECK_NOTHROW(alphaCoeff(0, 1, 1, w));
    CHECK_NOTHROW(alphaCoeff(1, 1, 1, w));
    CHECK_THROWS_AS(alphaCoeff(2, 1, 1, w), IndexError);
    CHECK_THROWS_AS(alphaCoeff(-1, 1, 1, w), IndexError);
    CHECK_THROWS_AS(alphaCoeff(0, 3, 0, w), IndexError);
    CHECK_THROWS_AS(alphaCoeff(0, 0, -1, w), IndexError);
    // (i,j) = (2,2) needs k >= i+j-2l = 2
    CHECK_THROWS_AS(alphaCoeff(1, 2, 2, w), IndexError);
    CHECK_NOTHROW(alphaCoeff(2, 2, 2, w));

    // middle entry, top index: alpha_1(1,1) = (2+nu)^2 / (2(1+nu))
    for (const Rational& nu : kNuGrid) {
        const Rational got = alphaCoeff(1, 1, 1, spec(2, nu));
        const Rational want = (nu + 2) * (nu + 2) / ((nu + 1) * 2);
        CHECK(got == want);
    }
}

TEST_CASE("two-dimensional polynomial part in closed form") {
    // Wpol = (1+nu) [[1, x], [x, 1]]
    for (const Rational& nu : kNuGrid) {
        const MatPoly w = weightPolyMatrix(spec(1, nu));
        CHECK(w.entry(0, 0) == MonoPoly::constant(nu + 1));
        CHECK(w.entry(1, 1) == MonoPoly::constant(nu + 1));
        CHECK(w.entry(0, 1) == MonoPoly::x() * (nu + 1));
        CHECK(w.entry(1, 0) == MonoPoly::x() * (nu + 1));
    }
}

TEST_CASE("symmetry, flip invariance, degree and parity pattern") {
    for (long twoEll = 0; twoEll <= 4; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const WeightSpec w = spec(twoEll, nu);
            const MatPoly wp = weightPolyMatrix(w);
            CHECK(wp.dim() == twoEll + 1);
            CHECK(wp.allCoeffsSymmetric());
            const RatMatrix j = RatMatrix::antidiagonal(twoEll + 1);
            CHECK(wp.leftMul(j).rightMul(j) == wp);
            for (long i = 0; i <= twoEll; ++i)
                for (long jj = 0; jj <= twoEll; ++jj) {
                    const MonoPoly e = wp.entry(i, jj);
                    const long bound = std::min(i + jj, 2 * twoEll - (i + jj));
                    CHECK(e.degree() <= bound);
                    CHECK(!e.isZero());
                    for (long d = 0; d <= e.degree(); ++d)
                        if ((d - (i + jj)) % 2 != 0) CHECK(e.coeff(d) == rat(0));
                }
        }
}

TEST_CASE("entries agree between the series and matrix forms") {
    for (long twoEll = 0; twoEll <= 3; ++twoEll) {
        const WeightSpec w = spec(twoEll, rat(7, 3));
        const MatPoly wp = weightPolyMatrix(w);
        for (long i = 0; i <= twoEll; ++i)
            for (long j = 0; j <= twoEll; ++j)
                CHECK(gegToMono(weightEntry(i, j, w)) == wp.entry(i, j));
    }
}

TEST_CASE("triangular factorisation") {
    for (long twoEll = 0; twoEll <= 4; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const WeightSpec w = spec(twoEll, nu);
            const LDUFactors f = lduFactors(w);
            CHECK(static_cast<long>(f.t.size()) == twoEll + 1);
            // t_0 = 2l + nu, every pivot positive
            CHECK(f.t[0] == nu + twoEll);
            for (const Rational& tk : f.t) CHECK(tk > 0);
            // L unipotent lower triangular
            for (long m = 0; m <= twoEll; ++m)
                for (long k = 0; k <= twoEll; ++k) {
                    const MonoPoly e = f.L.entry(m, k);
                    if (m == k) CHECK(e == MonoPoly::constant(rat(1)));
                    if (m < k) CHECK(e.isZero());
                    if (m > k) CHECK(e.degree() == m - k);
                }
            const LduCheck chk = verifyLDU(w);
            CHECK(chk.ok);
        }
}

TEST_CASE("factorisation matches the polynomial part explicitly") {
    // reassemble L diag(t_k (1-x^2)^k) L^t for one mid-size case and compare
    const WeightSpec w = spec(3, rat(3, 2));
    const LDUFactors f = lduFactors(w);
    const MonoPoly oneMinusX2 =
        MonoPoly::constant(rat(1)) - MonoPoly::monomial(rat(1), 2);
    MatPoly sum(w.size.dim());
    for (long k = 0; k <= 3; ++k) {
        MonoPoly tk = MonoPoly::constant(f.t[static_cast<std::size_t>(k)]);
        for (long s = 0; s < k; ++s) tk = tk * oneMinusX2;
        // rank-one piece: column k of L times row k of L^t, scaled by t_k(x)
        std::vector<RatMatrix> acc;
        for (long i = 0; i < w.size.dim(); ++i)
            for (long j = 0; j < w.size.dim(); ++j) {
                const MonoPoly term = f.L.entry(i, k) * f.L.entry(j, k) * tk;
                for (long dd = 0; dd <= term.degree(); ++dd) {
                    while (static_cast<long>(acc.size()) <= dd)
                        acc.push_back(RatMatrix::zero(w.size.dim()));
                    acc[static_cast<std::size_t>(dd)].at(i, j) += term.coeff(dd);
                }
            }
        sum = sum + MatPoly(w.size.dim(), acc);
    }
    CHECK(sum == weightPolyMatrix(w));
}
