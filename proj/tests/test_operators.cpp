#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mgeg/errors.hpp"
#include "mgeg/operators.hpp"

#include <vector>

using namespace mgeg;

namespace {

const std::vector<Rational> kNuGrid = {rat(1, 2), rat(1), rat(7, 3)};

WeightSpec spec(long twoEll, const Rational& nu) { return WeightSpec{SizeParam{twoEll}, nu}; }

} // namespace

TEST_CASE("constant matrices of the two operators") {
    const Rational nu = rat(7, 3);
    const WeightSpec w = spec(2, nu);
    const SecondOrderOp d = makeSecondOrder(w);
    // C = sum_{i<2l} (2l-i) E_{i,i+1} + sum_{i>=1} i E_{i,i-1}
    CHECK(d.C.at(0, 1) == rat(2));
    CHECK(d.C.at(1, 2) == rat(1));
    CHECK(d.C.at(1, 0) == rat(1));
    CHECK(d.C.at(2, 1) == rat(2));
    CHECK(d.C.at(0, 0) == rat(0));
    CHECK(d.C.at(0, 2) == rat(0));
    // V = -diag(i(2l-i))
    CHECK(d.V.at(0, 0) == rat(0));
    CHECK(d.V.at(1, 1) == rat(-1));
    CHECK(d.V.at(2, 2) == rat(0));

    const FirstOrderOp e = makeFirstOrder(w);
    // 2l B0 = sum (2l-i) E_{i,i+1} - sum i E_{i,i-1}
    CHECK(e.B0.at(0, 1) == rat(1));
    CHECK(e.B0.at(1, 2) == rat(1, 2));
    CHECK(e.B0.at(1, 0) == rat(-1, 2));
    CHECK(e.B0.at(2, 1) == rat(-1));
    // B1 = diag((2i-2l)/2l)
    CHECK(e.B1.at(0, 0) == rat(-1));
    CHECK(e.B1.at(1, 1) == rat(0));
    CHECK(e.B1.at(2, 2) == rat(1));
    // A0 = diag(((2l+2)(i-2l) - (nu-1)(2l-2i))/2l)
    CHECK(e.A0.at(0, 0) == (rat(4) * (-2) - (nu - 1) * 2) / 2);
    CHECK(e.A0.at(1, 1) == (rat(4) * (-1)) / 2);
    CHECK(e.A0.at(2, 2) == (-(nu - 1) * (-2)) / 2);

    // scalar case: the first-order operator degenerates completely
    const FirstOrderOp e0 = makeFirstOrder(spec(0, nu));
    CHECK(e0.B0.isZero());
    CHECK(e0.B1.isZero());
    CHECK(e0.A0.isZero());
}

TEST_CASE("second-order eigenvalue relation") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const WeightSpec w = spec(twoEll, nu);
            for (long n = 0; n <= 10; ++n) {
                const MatPoly hp = hatP(n, w);
                CHECK(applyDOD(hp, w) == hp.leftMul(lambdaDOD(n, w)));
                // LambdaD(n) = -n(2l+2nu+n) I - V
                const SecondOrderOp op = makeSecondOrder(w);
                const RatMatrix want =
                    RatMatrix::identity(twoEll + 1) * (-(nu * 2 + twoEll + n) * n) - op.V;
                CHECK(lambdaDOD(n, w) == want);
            }
        }
}

TEST_CASE("first-order eigenvalue relation") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid) {
            const WeightSpec w = spec(twoEll, nu);
            const FirstOrderOp op = makeFirstOrder(w);
            for (long n = 0; n <= 10; ++n) {
                const MatPoly hp = hatP(n, w);
                CHECK(applyDOE(hp, w) == hp.leftMul(lambdaDOE(n, w)));
                CHECK(lambdaDOE(n, w) == op.A0 + op.B1 * rat(n));
            }
        }
}

TEST_CASE("eigenvalue matrices separate degrees") {
    // distinct n give distinct second-order eigenvalues (the scalar part is
    // strictly decreasing in n for nu > 0)
    const WeightSpec w = spec(2, rat(7, 3));
    for (long n = 0; n <= 8; ++n)
        for (long m = n + 1; m <= 8; ++m)
            CHECK(lambdaDOD(n, w) != lambdaDOD(m, w));
}

TEST_CASE("hatted recurrence coefficients") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll) {
        const WeightSpec w = spec(twoEll, rat(7, 3));
        CHECK(hattedC(0, w).isZero());
        for (long n = 0; n <= 6; ++n) {
            const RatMatrix dn = symmetrizer(n, w);
            CHECK(hattedA(n, w) == dn * symmetrizer(n + 1, w).diagInverse());
            auto [bn, cn] = recurrenceCoeffs(n, w);
            CHECK(hattedB(n, w) == dn * bn * dn.diagInverse());
            if (n >= 1)
                CHECK(hattedC(n, w) == dn * cn * symmetrizer(n - 1, w).diagInverse());
            // the hatted recurrence reproduces x hatP_n
            MatPoly rhs = hatP(n + 1, w).leftMul(hattedA(n, w)) +
                          hatP(n, w).leftMul(hattedB(n, w));
            if (n >= 1) rhs = rhs + hatP(n - 1, w).leftMul(hattedC(n, w));
            CHECK(hatP(n, w).shiftUp(1) == rhs);
        }
    }
}

TEST_CASE("commutation with the recurrence") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid)
            for (long n = 0; n <= 10; ++n)
                CHECK(prop3TRCheck(n, nu, SizeParam{twoEll}));
}

TEST_CASE("derivative-difference identity") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid)
            for (long n = 0; n <= 10; ++n)
                CHECK(propDODCheck(n, nu, SizeParam{twoEll}));
}

TEST_CASE("first-order difference identity") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll)
        for (const Rational& nu : kNuGrid)
            for (long n = 0; n <= 10; ++n)
                CHECK(propDOECheck(n, nu, SizeParam{twoEll}));
}

TEST_CASE("six-term contiguous relation of the entry kernel") {
    for (long twoEll = 1; twoEll <= 3; ++twoEll) {
        const SizeParam size{twoEll};
        for (long n = 0; n <= 5; ++n)
            for (long i = 0; i <= twoEll; ++i)
                for (long j = 0; j <= twoEll; ++j)
                    for (long k = 0; k <= twoEll; ++k) {
                        CHECK(sixTermGammaCheck(rat(7, 3), n, i, j, k, size));
                        for (long t = 0; t <= 3; ++t)
                            CHECK(sixTermGammaCheck(rat(1, 3) + t, n, i, j, k, size));
                    }
    }
}

TEST_CASE("six-term relation rejects parameter poles") {
    // nu + n - 1 a nonpositive integer puts a Gamma pole into the k-1 term
    const SizeParam size{2};
    CHECK_THROWS_AS(sixTermGammaCheck(rat(1), 0, 1, 1, 1, size), PoleError);
    // the degree bound grows with the cell and stays positive
    CHECK(sixTermDegreeBound(size, 0) > 0);
    CHECK(sixTermDegreeBound(size, 5) > sixTermDegreeBound(size, 0));
}
