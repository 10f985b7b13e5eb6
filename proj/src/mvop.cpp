#include "mgeg/mvop.hpp"

#include <map>

namespace mgeg {

std::pair<RatMatrix, RatMatrix> recurrenceCoeffs(long n, const WeightSpec& spec) {
    requireWeightSpec(spec);
    if (n < 0) throw IndexError("recurrenceCoeffs: negative degree");
    const long twoEll = spec.size.twoEll;
    const long N = spec.size.dim();
    const Rational& nu = spec.nu;
    RatMatrix B(N), C(N);
    for (long j = 1; j < N; ++j)
        B.at(j, j - 1) = Rational(j) * (nu + j - 1) / (2 * (nu + j + n - 1) * (nu + j + n));
    for (long j = 0; j + 1 < N; ++j)
        B.at(j, j + 1) = Rational(twoEll - j) * (nu + twoEll - j - 1) /
                         (2 * (nu + twoEll - j + n - 1) * (nu + twoEll + n - j));
    // C_0 never enters the recurrence (P_{-1} = 0); evaluating the formula
    // at n = 0 would also divide by zero when nu = 1.
    if (n >= 1)
        for (long j = 0; j < N; ++j)
            C.at(j, j) = Rational(n) * (nu + n - 1) * (nu + twoEll + n) * (2 * nu + twoEll + n - 1) /
                         (4 * (nu + twoEll + n - j - 1) * (nu + twoEll + n - j) * (nu + j + n - 1) * (nu + j + n));
    return {B, C};
}

namespace {
struct FamilyKey {
    long twoEll;
    Rational nu;
    bool operator<(const FamilyKey& o) const {
        if (twoEll != o.twoEll) return twoEll < o.twoEll;
        return nu < o.nu;
    }
};
} // namespace

MatPoly monicP(long n, const WeightSpec& spec) {
    requireWeightSpec(spec);
    if (n < 0) throw IndexError("monicP: negative degree");
    thread_local std::map<FamilyKey, std::vector<MatPoly>> cache;
    auto& list = cache[FamilyKey{spec.size.twoEll, spec.nu}];
    const long N = spec.size.dim();
    if (list.empty()) list.push_back(MatPoly::identity(N));
    while (static_cast<long>(list.size()) <= n) {
        const long m = static_cast<long>(list.size()) - 1;
        const auto [B, C] = recurrenceCoeffs(m, spec);
        MatPoly next = list.back().shiftUp(1) - list.back().leftMul(B);
        if (m >= 1) next = next - list[static_cast<size_t>(m - 1)].leftMul(C);
        list.push_back(std::move(next));
    }
    return list[static_cast<size_t>(n)];
}

RatMatrix symmetrizer(long n, const WeightSpec& spec) {
    requireWeightSpec(spec);
    if (n < 0) throw IndexError("symmetrizer: negative degree");
    const long twoEll = spec.size.twoEll;
    const long N = spec.size.dim();
    RatMatrix D(N);
    for (long i = 0; i < N; ++i)
        D.at(i, i) = binomialRat(twoEll, i) * pochhammer(spec.nu + n, i) /
                     pochhammer(spec.nu + n + twoEll - i, i);
    return D;
}

MatPoly hatP(long n, const WeightSpec& spec) {
    return monicP(n, spec).leftMul(symmetrizer(n, spec));
}

namespace {

// Per-family table of weight moments against powers of x:
//   K[p][q][a] with integral of x^a W_{pq}(x) dx = K[p][q][a] * kappa(nu).
struct MomentTable {
    std::vector<std::vector<std::vector<Rational>>> k; // [p][q][a]
    long maxPower = -1;
};

const MomentTable& momentTable(const WeightSpec& spec, long maxPower) {
    thread_local std::map<FamilyKey, MomentTable> cache;
    MomentTable& table = cache[FamilyKey{spec.size.twoEll, spec.nu}];
    const long N = spec.size.dim();
    if (table.k.empty())
        table.k.assign(static_cast<size_t>(N),
                       std::vector<std::vector<Rational>>(static_cast<size_t>(N)));
    if (maxPower <= table.maxPower) return table;

    // Gegenbauer expansions of x^a and the Wpol entries, reused across all
    // entries of the table.
    std::vector<GegSeries> xpow;
    for (long a = 0; a <= maxPower; ++a)
        xpow.push_back(monoToGeg(MonoPoly::monomial(1, a), spec.nu));
    std::vector<Rational> norm;
    for (long d = 0; d <= 2 * spec.size.twoEll + maxPower; ++d)
        norm.push_back(gegNormCoeff(d, spec.nu));

    for (long p = 0; p < N; ++p)
        for (long q = 0; q < N; ++q) {
            const GegSeries w = weightEntry(p, q, spec);
            auto& cell = table.k[static_cast<size_t>(p)][static_cast<size_t>(q)];
            for (long a = table.maxPower + 1; a <= maxPower; ++a) {
                Rational acc = 0;
                const long top = std::min(w.maxDegree(), xpow[static_cast<size_t>(a)].maxDegree());
                for (long d = 0; d <= top; ++d) {
                    const Rational f = w.coeff(d) * xpow[static_cast<size_t>(a)].coeff(d);
                    if (f != 0) acc += f * norm[static_cast<size_t>(d)];
                }
                cell.push_back(acc);
            }
        }
    table.maxPower = maxPower;
    return table;
}

} // namespace

std::vector<std::vector<KappaValue>> gramIntegral(long n, long m, const WeightSpec& spec) {
    requireWeightSpec(spec);
    const long N = spec.size.dim();
    const MatPoly pn = hatP(n, spec);
    const MatPoly pm = hatP(m, spec);
    const MomentTable& table = momentTable(spec, n + m);

    std::vector<std::vector<KappaValue>> out(
        static_cast<size_t>(N), std::vector<KappaValue>(static_cast<size_t>(N), KappaValue{0, spec.nu}));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            Rational acc = 0;
            for (long p = 0; p < N; ++p) {
                const MonoPoly ei = pn.entry(i, p);
                if (ei.isZero()) continue;
                for (long q = 0; q < N; ++q) {
                    const MonoPoly ej = pm.entry(j, q);
                    if (ej.isZero()) continue;
                    const auto& cell = table.k[static_cast<size_t>(p)][static_cast<size_t>(q)];
                    for (long a = 0; a <= ei.degree(); ++a) {
                        if (ei.coeff(a) == 0) continue;
                        for (long b = 0; b <= ej.degree(); ++b) {
                            const Rational f = ei.coeff(a) * ej.coeff(b);
                            if (f != 0) acc += f * cell[static_cast<size_t>(a + b)];
                        }
                    }
                }
            }
            out[static_cast<size_t>(i)][static_cast<size_t>(j)].coeff = acc;
        }
    return out;
}

std::vector<std::vector<KappaValue>> weightMoment(long m, const WeightSpec& spec) {
    requireWeightSpec(spec);
    if (m < 0) throw IndexError("weightMoment: negative degree");
    const long N = spec.size.dim();
    std::vector<std::vector<KappaValue>> out(
        static_cast<size_t>(N), std::vector<KappaValue>(static_cast<size_t>(N), KappaValue{0, spec.nu}));
    const Rational norm = gegNormCoeff(m, spec.nu);
    for (long p = 0; p < N; ++p)
        for (long q = 0; q < N; ++q) {
            const GegSeries w = weightEntry(p, q, spec);
            out[static_cast<size_t>(p)][static_cast<size_t>(q)].coeff = w.coeff(m) * norm;
        }
    return out;
}

std::vector<Rational> normAtZeroDiagonal(const WeightSpec& spec) {
    requireWeightSpec(spec);
    const long twoEll = spec.size.twoEll;
    std::vector<Rational> out;
    for (long j = 0; j <= twoEll; ++j) {
        Rational v = (spec.nu + twoEll) * factorialRat(j) * factorialRat(twoEll - j) *
                     pochhammer(spec.nu + 1, twoEll) /
                     (factorialRat(twoEll) * pochhammer(spec.nu + 1, j) * pochhammer(spec.nu + 1, twoEll - j));
        out.push_back(v / spec.nu);
    }
    return out;
}

} // namespace mgeg
