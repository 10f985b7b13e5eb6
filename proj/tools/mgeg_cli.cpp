#include "CLI11.hpp"
#include "json.hpp"

#include "mgeg/genfun.hpp"
#include "mgeg/operators.hpp"
#include "mgeg/zeros.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mgeg;
using json = nlohmann::ordered_json;

struct SessionConfig {
    long twoEll = 1;
    std::string nuStr = "1";
    long n = 0;
    long nMax = 8;
    std::vector<std::string> nuGridStr;
    std::string outputFormat = "json";
    std::string out;
    int threads = 1;
    std::uint64_t seed = kDefaultSeed;
    double tol = kClassifyTol;

    // resolved values
    Rational nu;
    std::vector<Rational> nuGrid; // nu first, then the extra grid points

    SizeParam size() const { return SizeParam{twoEll}; }
    WeightSpec spec(const Rational& v) const { return WeightSpec{SizeParam{twoEll}, v}; }

    void resolve(bool needPositiveNu = true) {
        if (twoEll < 0) throw UnsupportedParameter("--two-ell must be >= 0");
        if (nMax < 0) throw UnsupportedParameter("--n-max must be >= 0");
        nu = ratParse(nuStr);
        nuGrid = {nu};
        for (const std::string& s : nuGridStr) {
            const Rational v = ratParse(s);
            if (v != nu) nuGrid.push_back(v);
        }
        if (needPositiveNu)
            for (const Rational& v : nuGrid) requireWeightSpec(WeightSpec{size(), v});
    }
};

void addCommonOptions(CLI::App* cmd, SessionConfig& cfg) {
    cmd->add_option("--two-ell", cfg.twoEll, "matrix size parameter 2l (size = 2l+1)");
    cmd->add_option("--nu", cfg.nuStr, "weight parameter as 'p/q' or integer");
    cmd->add_option("--n-max", cfg.nMax, "largest degree to cover");
    cmd->add_option("--nu-grid", cfg.nuGridStr, "extra nu values 'p/q'")->delimiter(',');
    cmd->add_option("--threads", cfg.threads, "worker threads");
    cmd->add_option("--seed", cfg.seed, "seed for the root-finder initializer");
    cmd->add_option("--format", cfg.outputFormat, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
}

std::ostream& openOut(const SessionConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw Error("cannot open output file: " + cfg.out);
    return file;
}

// ---------------------------------------------------------------------------
// verify

using Check = std::pair<std::string, std::function<std::optional<std::string>()>>;

std::string at(long a) { return std::to_string(a); }

GegSeries unitSeries(long m, const Rational& lambda) {
    GegSeries s;
    s.lambda = lambda;
    s.coeffs.assign(static_cast<std::size_t>(m) + 1, rat(0));
    s.coeffs.back() = rat(1);
    return s;
}

void addScalarChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& lam : cfg.nuGrid) {
        const std::string tag = " (lambda=" + ratStr(lam) + ")";
        checks.emplace_back("scalar/recurrence-vs-hypergeometric" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 12L); ++n)
                if (gegenbauer(n, lam) != hypergeometricOracle(n, lam))
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("scalar/value-at-one" + tag, [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 12L); ++n)
                if (gegenbauer(n, lam).evaluate(rat(1)) !=
                    pochhammer(lam * 2, n) / factorialRat(n))
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("scalar/derivative-shift" + tag, [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 10L); ++n)
                if (gegToMono(diffGeg(unitSeries(n, lam))) != gegenbauer(n, lam).derivative())
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("scalar/integer-connection" + tag,
                            [=]() -> std::optional<std::string> {
            for (long bigN = 1; bigN <= 2; ++bigN)
                for (long m = 0; m <= std::min(cfg.nMax, 10L); ++m) {
                    const std::vector<Rational> c = connectInteger(m, lam, bigN);
                    MonoPoly sum;
                    for (long s = 0; s < static_cast<long>(c.size()); ++s)
                        sum += gegenbauer(m - 2 * s, lam + rat(bigN)) *
                               c[static_cast<std::size_t>(s)];
                    if (sum != gegenbauer(m, lam))
                        return "m=" + at(m) + " N=" + at(bigN);
                }
            return std::nullopt;
        });
        checks.emplace_back("scalar/linearisation" + tag, [=]() -> std::optional<std::string> {
            for (long k = 0; k <= 5; ++k)
                for (long l = 0; l <= 5; ++l)
                    if (gegToMono(linearise(k, l, lam)) !=
                        gegenbauer(k, lam) * gegenbauer(l, lam))
                        return "k=" + at(k) + " l=" + at(l);
            return std::nullopt;
        });
        checks.emplace_back("scalar/orthogonality" + tag, [=]() -> std::optional<std::string> {
            for (long k = 0; k <= 5; ++k)
                for (long n = 0; n <= 5; ++n) {
                    const KappaValue v = innerProduct(unitSeries(k, lam), unitSeries(n, lam));
                    const KappaValue want{k == n ? gegNormCoeff(n, lam) : rat(0), lam};
                    if (!(v == want)) return "k=" + at(k) + " n=" + at(n);
                }
            return std::nullopt;
        });
    }
}

void addWeightChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& nu : cfg.nuGrid) {
        const std::string tag = " (nu=" + ratStr(nu) + ")";
        const WeightSpec spec = cfg.spec(nu);
        checks.emplace_back("weight/symmetry-and-flip" + tag,
                            [=]() -> std::optional<std::string> {
            const MatPoly w = weightPolyMatrix(spec);
            if (!w.allCoeffsSymmetric()) return std::string("not symmetric");
            const RatMatrix flip = RatMatrix::antidiagonal(spec.size.dim());
            if (w.leftMul(flip).rightMul(flip) != w) return std::string("flip mismatch");
            return std::nullopt;
        });
        checks.emplace_back("weight/ldu" + tag, [=]() -> std::optional<std::string> {
            const LduCheck c = verifyLDU(spec);
            if (!c.ok) return "entry (" + at(c.i) + "," + at(c.j) + ")";
            return std::nullopt;
        });
        checks.emplace_back("weight/pivots-positive" + tag,
                            [=]() -> std::optional<std::string> {
            const LDUFactors f = lduFactors(spec);
            for (std::size_t k = 0; k < f.t.size(); ++k)
                if (!(f.t[k] > 0)) return "k=" + at(static_cast<long>(k));
            return std::nullopt;
        });
    }
}

void addMvopChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& nu : cfg.nuGrid) {
        const std::string tag = " (nu=" + ratStr(nu) + ")";
        const WeightSpec spec = cfg.spec(nu);
        checks.emplace_back("mvop/symmetric-coefficients" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 8L); ++n)
                if (!hatP(n, spec).allCoeffsSymmetric()) return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("mvop/flip-commutes" + tag, [=]() -> std::optional<std::string> {
            const RatMatrix flip = RatMatrix::antidiagonal(spec.size.dim());
            for (long n = 0; n <= std::min(cfg.nMax, 8L); ++n) {
                const MatPoly p = hatP(n, spec);
                if (p.leftMul(flip).rightMul(flip) != p) return "n=" + at(n);
            }
            return std::nullopt;
        });
        checks.emplace_back("mvop/derivative-ladder" + tag,
                            [=]() -> std::optional<std::string> {
            const WeightSpec up = cfg.spec(nu + 1);
            for (long n = 1; n <= std::min(cfg.nMax, 8L); ++n)
                if (hatP(n, spec).derivative() != hatP(n - 1, up).scale(rat(n)))
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("mvop/symmetrizer-shift" + tag,
                            [=]() -> std::optional<std::string> {
            const WeightSpec up = cfg.spec(nu + 1);
            for (long n = 1; n <= std::min(cfg.nMax, 8L); ++n)
                if (symmetrizer(n, spec) != symmetrizer(n - 1, up)) return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("mvop/gram-orthogonality" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= 3; ++n)
                for (long m = 0; m <= 3; ++m) {
                    if (n == m) continue;
                    const auto g = gramIntegral(n, m, spec);
                    for (const auto& row : g)
                        for (const KappaValue& v : row)
                            if (!v.isZero()) return "n=" + at(n) + " m=" + at(m);
                }
            return std::nullopt;
        });
        checks.emplace_back("mvop/gram-degree-zero" + tag,
                            [=]() -> std::optional<std::string> {
            const auto g = gramIntegral(0, 0, spec);
            const RatMatrix d0 = symmetrizer(0, spec);
            const std::vector<Rational> h0 = normAtZeroDiagonal(spec);
            const long dim = spec.size.dim();
            for (long i = 0; i < dim; ++i)
                for (long j = 0; j < dim; ++j) {
                    const Rational want =
                        i == j ? d0.at(i, i) * d0.at(i, i) * h0[static_cast<std::size_t>(i)]
                               : rat(0);
                    if (!(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                          KappaValue{want, nu}))
                        return "entry (" + at(i) + "," + at(j) + ")";
                }
            return std::nullopt;
        });
        checks.emplace_back("mvop/moment-pattern" + tag, [=]() -> std::optional<std::string> {
            const long twoEll = spec.size.twoEll;
            const RatMatrix d0 = symmetrizer(0, spec);
            const std::vector<Rational> h0 = normAtZeroDiagonal(spec);
            const long dim = spec.size.dim();
            for (long m = 0; m <= twoEll + 3; ++m) {
                const auto mom = weightMoment(m, spec);
                if (m > twoEll) {
                    for (const auto& row : mom)
                        for (const KappaValue& v : row)
                            if (!v.isZero()) return "m=" + at(m) + " not zero";
                    continue;
                }
                RatMatrix want = gMatrix(m, m, nu, spec.size) * d0;
                for (long i = 0; i < dim; ++i)
                    for (long j = 0; j < dim; ++j)
                        want.at(i, j) *= h0[static_cast<std::size_t>(j)];
                for (long i = 0; i < dim; ++i)
                    for (long j = 0; j < dim; ++j)
                        if (!(mom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                              KappaValue{want.at(i, j), nu}))
                            return "m=" + at(m) + " entry (" + at(i) + "," + at(j) + ")";
            }
            return std::nullopt;
        });
    }
}

void addConnectionChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& nu : cfg.nuGrid) {
        const std::string tag = " (nu=" + ratStr(nu) + ")";
        const WeightSpec spec = cfg.spec(nu);
        const SizeParam size = spec.size;
        checks.emplace_back("connection/expansion-matches-recurrence" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 10L); ++n)
                if (synthesizeHatP(n, nu, size) != hatP(n, spec)) return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("connection/inversion" + tag, [=]() -> std::optional<std::string> {
            for (long m = 0; m <= std::min(cfg.nMax, 10L); ++m) {
                MatPoly sum(size.dim());
                for (long r = 0; r <= std::min(m, size.twoEll); ++r)
                    sum = sum + hatP(m - r, spec).leftMul(gMatrix(r, m, nu, size));
                if (sum != MatPoly::identity(size.dim()).scalarPolyMul(gegenbauer(m, nu)))
                    return "m=" + at(m);
            }
            return std::nullopt;
        });
        checks.emplace_back("connection/base-cases" + tag, [=]() -> std::optional<std::string> {
            if (fMatrix(0, 0, nu, size) != symmetrizer(0, spec))
                return std::string("degree-0 expansion");
            for (long m = 0; m <= 6; ++m) {
                RatMatrix want = symmetrizer(m, spec).diagInverse();
                Rational twoPow = 1;
                for (long s = 0; s < m; ++s) twoPow *= 2;
                want = want * (twoPow * pochhammer(nu, m) / factorialRat(m));
                if (gMatrix(0, m, nu, size) != want) return "m=" + at(m);
            }
            return std::nullopt;
        });
        checks.emplace_back("connection/parameter-shift" + tag,
                            [=]() -> std::optional<std::string> {
            if (!shiftLemmaCheck(nu, size, std::min(cfg.nMax, 8L)))
                return std::string("lemma violated");
            return std::nullopt;
        });
        checks.emplace_back("connection/double-sum" + tag, [=]() -> std::optional<std::string> {
            for (long m = 0; m <= std::min(cfg.nMax, 8L); ++m)
                for (long s = 0; s <= m / 2; ++s)
                    if (!doubleSumCheck(s, m, nu, size)) return "m=" + at(m) + " s=" + at(s);
            return std::nullopt;
        });
        checks.emplace_back("connection/parameter-raise" + tag,
                            [=]() -> std::optional<std::string> {
            const WeightSpec up = cfg.spec(nu + rat(size.twoEll));
            for (long n = 0; n <= std::min(cfg.nMax, 6L); ++n) {
                MatPoly sum(size.dim());
                for (long t = 0; t <= std::min(n, 2 * size.twoEll); ++t)
                    sum = sum + hatP(n - t, up).leftMul(mCoeff(t, n, nu, size));
                if (sum != hatP(n, spec)) return "n=" + at(n);
            }
            return std::nullopt;
        });
    }
}

void addOperatorChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& nu : cfg.nuGrid) {
        const std::string tag = " (nu=" + ratStr(nu) + ")";
        const WeightSpec spec = cfg.spec(nu);
        checks.emplace_back("operators/second-order-eigen" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 8L); ++n)
                if (applyDOD(hatP(n, spec), spec) != hatP(n, spec).leftMul(lambdaDOD(n, spec)))
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("operators/first-order-eigen" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 8L); ++n)
                if (applyDOE(hatP(n, spec), spec) != hatP(n, spec).leftMul(lambdaDOE(n, spec)))
                    return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("operators/recurrence-commutation" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 6L); ++n)
                if (!prop3TRCheck(n, nu, spec.size)) return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("operators/derivative-difference" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 6L); ++n)
                if (!propDODCheck(n, nu, spec.size)) return "n=" + at(n);
            return std::nullopt;
        });
        checks.emplace_back("operators/first-order-difference" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= std::min(cfg.nMax, 6L); ++n)
                if (!propDOECheck(n, nu, spec.size)) return "n=" + at(n);
            return std::nullopt;
        });
        if (spec.size.twoEll >= 1)
            checks.emplace_back("operators/six-term-kernel" + tag,
                                [=]() -> std::optional<std::string> {
                const long dim = spec.size.dim();
                for (long n = 0; n <= 3; ++n)
                    for (long i = 0; i < dim; ++i)
                        for (long j = 0; j < dim; ++j)
                            for (long k = 0; k <= spec.size.twoEll; ++k) {
                                try {
                                    if (!sixTermGammaCheck(nu, n, i, j, k, spec.size))
                                        return "n=" + at(n) + " i=" + at(i) + " j=" + at(j) +
                                               " k=" + at(k);
                                } catch (const PoleError&) {
                                    // Parameter point sits on a pole of the
                                    // anchor; the rational certification in
                                    // the test suite covers these cells.
                                }
                            }
                return std::nullopt;
            });
    }
}

void addGenfunChecks(const SessionConfig& cfg, std::vector<Check>& checks) {
    for (const Rational& nu : cfg.nuGrid) {
        const std::string tag = " (nu=" + ratStr(nu) + ")";
        const SizeParam size = cfg.size();
        checks.emplace_back("genfun/slice-interpolation" + tag,
                            [=]() -> std::optional<std::string> {
            for (long k = 0; k <= size.twoEll; ++k) {
                const SlicePoly s = polyInLambda(k, nu, size);
                if (s.maxDegree() > size.twoEll / 2) return "k=" + at(k);
            }
            return std::nullopt;
        });
        checks.emplace_back("genfun/rescaled-proportional" + tag,
                            [=]() -> std::optional<std::string> {
            for (long n = 0; n <= 4; ++n)
                for (long k = 0; k <= std::min(n, size.twoEll); ++k) {
                    const RatMatrix f = fMatrix(k, n, nu, size);
                    const RatMatrix tf = tildeF(k, n, nu, size);
                    long i0 = -1, j0 = -1;
                    for (long i = 0; i < size.dim() && i0 < 0; ++i)
                        for (long j = 0; j < size.dim(); ++j)
                            if (f.at(i, j) != 0) {
                                i0 = i;
                                j0 = j;
                                break;
                            }
                    if (i0 < 0) continue;
                    for (long i = 0; i < size.dim(); ++i)
                        for (long j = 0; j < size.dim(); ++j)
                            if (tf.at(i, j) * f.at(i0, j0) != f.at(i, j) * tf.at(i0, j0))
                                return "k=" + at(k) + " n=" + at(n);
                }
            return std::nullopt;
        });
        checks.emplace_back("genfun/closed-form-series" + tag,
                            [=]() -> std::optional<std::string> {
            const ClosedForm cf = closedForm(nu, size);
            if (cf.verifiedOrder < 2 * size.twoEll + 6)
                return std::string("verified order too small");
            return std::nullopt;
        });
    }
}

int runVerify(const std::string& suite, SessionConfig& cfg) {
    try {
        cfg.resolve();
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    std::vector<Check> checks;
    const bool all = suite == "all";
    if (all || suite == "scalar") addScalarChecks(cfg, checks);
    if (all || suite == "weight") addWeightChecks(cfg, checks);
    if (all || suite == "mvop") addMvopChecks(cfg, checks);
    if (all || suite == "connection") addConnectionChecks(cfg, checks);
    if (all || suite == "operators") addOperatorChecks(cfg, checks);
    if (all || suite == "genfun") addGenfunChecks(cfg, checks);
    if (checks.empty()) {
        std::cerr << "configuration error: unknown suite '" << suite << "'\n";
        return 2;
    }
    int failures = 0;
    for (const Check& c : checks) {
        std::optional<std::string> detail;
        try {
            detail = c.second();
        } catch (const Error& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail) {
            ++failures;
            std::cout << "FAIL " << c.first << ": " << *detail << "\n";
        } else {
            std::cout << "PASS " << c.first << "\n";
        }
    }
    std::cout << (failures == 0 ? "OK" : "FAILED") << " (" << checks.size() - failures << "/"
              << checks.size() << " checks)\n";
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// hatp

json matrixJson(const RatMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.dim(); ++j) row.push_back(ratStr(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int runHatP(SessionConfig& cfg, const std::string& basis) {
    try {
        cfg.resolve();
        if (cfg.n < 0) throw UnsupportedParameter("--n must be >= 0");
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    const WeightSpec spec = cfg.spec(cfg.nu);
    const MatPoly viaRecurrence = hatP(cfg.n, spec);
    const MatPoly viaExpansion = synthesizeHatP(cfg.n, cfg.nu, cfg.size());
    if (viaRecurrence != viaExpansion) {
        std::cerr << "internal cross-check failed: the two constructions disagree\n";
        return 1;
    }
    json j;
    j["two_ell"] = cfg.twoEll;
    j["nu"] = ratStr(cfg.nu);
    j["n"] = cfg.n;
    j["basis"] = basis;
    if (basis == "monomial") {
        json coeffs = json::array();
        for (long d = 0; d <= viaRecurrence.degree(); ++d)
            coeffs.push_back(matrixJson(viaRecurrence.coeff(d)));
        j["coeffs"] = std::move(coeffs);
    } else {
        j["lambda"] = ratStr(cfg.nu + rat(cfg.twoEll));
        json terms = json::array();
        for (long k = 0; k <= std::min(cfg.n, cfg.twoEll); ++k) {
            json term;
            term["k"] = k;
            term["scalar_degree"] = cfg.n - k;
            term["matrix"] = matrixJson(fMatrix(k, cfg.n, cfg.nu, cfg.size()));
            terms.push_back(std::move(term));
        }
        j["coeffs"] = std::move(terms);
    }
    std::ofstream file;
    openOut(cfg, file) << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// genfun

int runGenfun(SessionConfig& cfg) {
    try {
        cfg.resolve();
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    ClosedForm cf;
    try {
        cf = closedForm(cfg.nu, cfg.size());
    } catch (const SeriesMismatch& e) {
        std::cerr << "series mismatch: " << e.what() << "\n";
        return 1;
    }
    json j;
    j["two_ell"] = cfg.twoEll;
    j["nu"] = ratStr(cfg.nu);
    j["floor_ell"] = cf.floorEll;
    j["denominator"] = {{"base", "1-2*x*t+t^2"},
                        {"exponent", {{"nu_offset", cfg.twoEll + cf.floorEll}}}};
    j["verified_order"] = cf.verifiedOrder;
    json num = json::array();
    for (long i = 0; i < cfg.size().dim(); ++i) {
        json row = json::array();
        for (long jj = 0; jj < cfg.size().dim(); ++jj) {
            const TriPoly& p =
                cf.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
            json tArr = json::array();
            for (const auto& plane : p.c) {
                json xArr = json::array();
                for (const auto& rowNu : plane) {
                    json nuArr = json::array();
                    for (const Rational& v : rowNu) nuArr.push_back(ratStr(v));
                    xArr.push_back(std::move(nuArr));
                }
                tArr.push_back(std::move(xArr));
            }
            row.push_back(std::move(tArr));
        }
        num.push_back(std::move(row));
    }
    j["numerator"] = std::move(num);
    std::ofstream file;
    openOut(cfg, file) << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// zeros

int runZeros(SessionConfig& cfg, bool nGiven, bool nMaxGiven, const std::string& entryStr,
             long echelonFilter, const std::string& svgPath, const std::string& assertMode) {
    try {
        cfg.resolve();
        if (cfg.threads < 1) throw UnsupportedParameter("--threads must be >= 1");
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    long entryI = -1, entryJ = -1;
    if (!entryStr.empty()) {
        if (std::sscanf(entryStr.c_str(), "%ld,%ld", &entryI, &entryJ) != 2 || entryI < 0 ||
            entryJ < 0 || entryI > cfg.twoEll || entryJ > cfg.twoEll) {
            std::cerr << "configuration error: bad --entry (want i,j inside the matrix)\n";
            return 2;
        }
    }
    const long nMin = nGiven ? cfg.n : 0;
    const long nMax = nMaxGiven ? cfg.nMax : (nGiven ? cfg.n : 10);

    std::vector<ZeroReport> reports;
    if (nMax >= nMin) {
        try {
            reports = survey(cfg.size(), cfg.nu, nMin, nMax, cfg.threads, cfg.seed);
        } catch (const Error& e) {
            std::cerr << "survey error: " << e.what() << "\n";
            return 2;
        }
    }
    std::vector<ZeroReport> selected;
    for (ZeroReport& r : reports) {
        if (entryI >= 0 && (r.i != entryI || r.j != entryJ)) continue;
        if (echelonFilter >= 0 && r.echelon != echelonFilter) continue;
        selected.push_back(std::move(r));
    }

    std::ofstream file;
    writeCsv(openOut(cfg, file), selected);
    if (!svgPath.empty() && !selected.empty()) {
        std::ofstream svg(svgPath);
        if (!svg) {
            std::cerr << "cannot open SVG output: " << svgPath << "\n";
            return 2;
        }
        writeSvg(svg, selected.back());
    }

    std::size_t rootCount = 0, allReal = 0, nonConverged = 0;
    long imagPairs = 0;
    for (const ZeroReport& r : selected) {
        rootCount += r.roots.size();
        if (r.allRealInInterval) ++allReal;
        imagPairs += r.imagPairCount;
        if (!r.converged) ++nonConverged;
    }
    std::cerr << "reports=" << selected.size() << " roots=" << rootCount
              << " all_real_in_interval=" << allReal << " imag_pairs=" << imagPairs
              << " non_converged=" << nonConverged << "\n";

    if (assertMode == "real") {
        for (const ZeroReport& r : selected) {
            if (r.degree < 1) continue;
            if (!r.converged || !r.allRealInInterval) {
                std::cerr << "assertion failed: entry (" << r.i << "," << r.j << ") n=" << r.n
                          << " is not all-real inside (-1,1)\n";
                return 1;
            }
        }
    } else if (assertMode == "imag-pure") {
        for (const ZeroReport& r : selected)
            for (const ComplexRoot& root : r.roots)
                if (std::abs(root.im) >= cfg.tol && std::abs(root.re) >= cfg.tol) {
                    std::cerr << "assertion failed: entry (" << r.i << "," << r.j
                              << ") n=" << r.n << " has a non-real root off the axes\n";
                    return 1;
                }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrix Gegenbauer toolkit"};
    app.require_subcommand(1);

    SessionConfig cfg;

    CLI::App* verify = app.add_subcommand("verify", "run an exact identity suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "scalar|weight|mvop|connection|operators|genfun|all");
    addCommonOptions(verify, cfg);

    CLI::App* hatp = app.add_subcommand("hatp", "emit one symmetric polynomial as JSON");
    std::string basis = "monomial";
    hatp->add_option("--n", cfg.n, "degree")->required();
    hatp->add_option("--basis", basis, "monomial|gegenbauer")
        ->check(CLI::IsMember({"monomial", "gegenbauer"}));
    addCommonOptions(hatp, cfg);

    CLI::App* genfun = app.add_subcommand("genfun", "emit the verified closed form as JSON");
    addCommonOptions(genfun, cfg);

    CLI::App* zeros = app.add_subcommand("zeros", "survey entry zeros, write CSV/SVG");
    std::string entryStr, svgPath, assertMode = "none";
    long echelonFilter = -1;
    CLI::Option* nOpt = zeros->add_option("--n", cfg.n, "single degree (or range start)");
    zeros->add_option("--entry", entryStr, "restrict to entry i,j");
    zeros->add_option("--echelon", echelonFilter, "restrict to one echelon");
    zeros->add_option("--svg", svgPath, "write an SVG scatter of the last selected report");
    zeros->add_option("--assert", assertMode, "none|real|imag-pure")
        ->check(CLI::IsMember({"none", "real", "imag-pure"}));
    zeros->add_option("--tol", cfg.tol, "assertion tolerance");
    addCommonOptions(zeros, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) return runVerify(suite, cfg);
    if (hatp->parsed()) return runHatP(cfg, basis);
    if (genfun->parsed()) return runGenfun(cfg);
    if (zeros->parsed()) {
        const bool nGiven = nOpt->count() > 0;
        const bool nMaxGiven = zeros->count("--n-max") > 0;
        return runZeros(cfg, nGiven, nMaxGiven, entryStr, echelonFilter, svgPath, assertMode);
    }
    return 2;
}
