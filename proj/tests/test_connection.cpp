#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgeg/connection.hpp"
#include "mgeg/errors.hpp"

#include <vector>

using namespace mgeg;

namespace {

const std::vector<Rational> kNuGrid = {rat(1, 2), rat(1), rat(7, 3)};

WeightSpec spec(long twoEll, const Rational& nu) { return WeightSpec{SizeParam{twoEll}, nu}; }

// C_m^(nu) times the identity, as a matrix polynomial of the given dimension.
MatPoly scalarTimesIdentity(long m, const Rational& nu, long dim) {
    return MatPoly::identity(dim).scalarPolyMul(gegenbauer(m, nu));
}

} // namespace

TEST_CASE("entry kernel: parity zeros and index guards") {
    const SizeParam size{3};
    const Rational mu = rat(7, 3) + 4;
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j)
            for (long k = 0; k <= 3; ++k)
                if ((i + j - k) % 2 != 0) CHECK(gammaCoeff(mu, i, j, k, size) == rat(0));
    CHECK_THROWS_AS(gammaCoeff(mu, -1, 0, 0, size), IndexError);
    CHECK_THROWS_AS(gammaCoeff(mu, 0, 4, 0, size), IndexError);
    // vanishing binomials kill out-of-band entries: binom(k, (k+i-j)/2) = 0
    CHECK(gammaCoeff(mu, 3, 0, 1, size) == rat(0));
    // scaled variant is gamma times (mu)_shift when both are finite
    const Rational plain = gammaCoeff(mu, 1, 1, 2, size);
    const Rational scaled = gammaCoeffScaled(mu, 1, 1, 2, size, 5);
    CHECK(scaled == plain * pochhammer(mu, 5));
}

TEST_CASE("expansion matrices: range and base cases") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const SizeParam size{twoEll};
            const WeightSpec w = spec(twoEll, nu);
            CHECK(fMatrix(-1, 3, nu, size).isZero());
            CHECK(fMatrix(twoEll + 1, twoEll + 5, nu, size).isZero());
            CHECK(fMatrix(3, 2, nu, size).isZero()); // k > n
            CHECK(gMatrix(-1, 3, nu, size).isZero());
            CHECK(gMatrix(twoEll + 1, twoEll + 5, nu, size).isZero());
            CHECK(gMatrix(3, 2, nu, size).isZero());
            // F_{0,0} = D_0
            CHECK(fMatrix(0, 0, nu, size) == symmetrizer(0, w));
            // G_{0,m} = 2^m (nu)_m / m! D_m^{-1}
            for (long m = 0; m <= 6; ++m) {
                Rational c = pochhammer(nu, m) / factorialRat(m);
                for (long s = 0; s < m; ++s) c *= 2;
                const RatMatrix want = symmetrizer(m, w).diagInverse() * c;
                CHECK(gMatrix(0, m, nu, size) == want);
            }
        }
}

TEST_CASE("expansion over the shifted scalar family") {
    // hatP_n = sum_k F_{k,n} C_{n-k}^(nu+2l)
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const SizeParam size{twoEll};
            const WeightSpec w = spec(twoEll, nu);
            for (long n = 0; n <= 8; ++n)
                CHECK(synthesizeHatP(n, nu, size) == hatP(n, w));
        }
}

TEST_CASE("inversion back to the scalar family") {
    // C_m^(nu) I = sum_r G_{r,m} hatP_{m-r}
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const SizeParam size{twoEll};
            const WeightSpec w = spec(twoEll, nu);
            for (long m = 0; m <= 8; ++m) {
                const std::vector<RatMatrix> g = expandScalar(m, nu, size);
                MatPoly sum(size.dim());
                for (long r = 0; r < static_cast<long>(g.size()); ++r)
                    sum = sum + hatP(m - r, w).leftMul(g[static_cast<std::size_t>(r)]);
                CHECK(sum == scalarTimesIdentity(m, nu, size.dim()));
            }
        }
}

TEST_CASE("flip invariance of the expansion matrices") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll) {
        const SizeParam size{twoEll};
        const RatMatrix j = RatMatrix::antidiagonal(size.dim());
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= twoEll; ++k) {
                const RatMatrix f = fMatrix(k, n, rat(7, 3), size);
                CHECK(j * f * j == f);
                const RatMatrix g = gMatrix(k, n, rat(7, 3), size);
                CHECK(j * g * j == g);
            }
    }
}

TEST_CASE("parameter-shift lemmas") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid)
            CHECK(shiftLemmaCheck(nu, SizeParam{twoEll}, 8));
}

TEST_CASE("parameter raise within the matrix family") {
    // hatP_n^(nu) = sum_t M_t hatP_{n-t}^(nu+2l)
    for (long twoEll = 1; twoEll <= 2; ++twoEll)
        for (const Rational& nu : {rat(1, 2), rat(7, 3)}) {
            const SizeParam size{twoEll};
            const WeightSpec raised = spec(twoEll, nu + twoEll);
            for (long n = 0; n <= 6; ++n) {
                MatPoly sum(size.dim());
                for (long t = 0; t <= std::min(n, 2 * twoEll); ++t)
                    sum = sum + hatP(n - t, raised).leftMul(mCoeff(t, n, nu, size));
                CHECK(sum == hatP(n, spec(twoEll, nu)));
            }
        }
}

TEST_CASE("double sum collapses to the scalar connection") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid)
            for (long m = 0; m <= 8; ++m)
                for (long s = 0; s <= m / 2; ++s)
                    CHECK(doubleSumCheck(s, m, nu, SizeParam{twoEll}));
    // the same sum, tied to the integer-parameter connection coefficients:
    // sum_{r+k=2s} G_{r,m} F_{k,m-r} = c_s I with C_m^(nu) = sum_s c_s C_{m-2s}^(nu+2l)
    for (long twoEll = 1; twoEll <= 2; ++twoEll)
        for (const Rational& nu : {rat(1, 2), rat(7, 3)}) {
            const SizeParam size{twoEll};
            for (long m = 0; m <= 6; ++m) {
                const std::vector<Rational> c = connectInteger(m, nu, twoEll);
                for (long s = 0; s < static_cast<long>(c.size()); ++s) {
                    RatMatrix sum = RatMatrix::zero(size.dim());
                    for (long r = 0; r <= 2 * s; ++r)
                        sum += gMatrix(r, m, nu, size) * fMatrix(2 * s - r, m - r, nu, size);
                    CHECK(sum == RatMatrix::identity(size.dim()) * c[static_cast<std::size_t>(s)]);
                }
            }
        }
}

TEST_CASE("small-denominator parameters stay exact") {
    // nu = 1/3 keeps every Gamma argument strictly positive; nothing throws
    const Rational nu = rat(1, 3);
    const SizeParam size{3};
    const WeightSpec w = spec(3, nu);
    for (long n = 0; n <= 5; ++n) CHECK(synthesizeHatP(n, nu, size) == hatP(n, w));
    for (long m = 0; m <= 5; ++m)
        for (long s = 0; s <= m / 2; ++s) CHECK(doubleSumCheck(s, m, nu, size));
}
