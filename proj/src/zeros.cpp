#include "mgeg/zeros.hpp"

#include "mgeg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

namespace mgeg {

long echelonIndex(long i, long j, const SizeParam& size) {
    const long twoEll = size.twoEll;
    if (i < 0 || i > twoEll || j < 0 || j > twoEll)
        throw IndexError("entry index out of range");
    return 1 + std::min(std::min(i, twoEll - i), std::min(j, twoEll - j));
}

MonoPoly entryPoly(long n, const Rational& nu, const SizeParam& size, long i, long j) {
    echelonIndex(i, j, size); // validates the indices
    if (n < 0) throw IndexError("negative degree");
    const Rational lamG = nu + rat(size.twoEll);
    MonoPoly p;
    for (long k = 0; k <= std::min(n, size.twoEll); ++k) {
        const Rational c = fMatrix(k, n, nu, size).at(i, j);
        if (c != 0) p += gegenbauer(n - k, lamG) * c;
    }
    return p;
}

namespace {

using Cplx = std::complex<double>;

struct DoublePoly {
    std::vector<double> c; // ascending, c.back() != 0

    long degree() const { return static_cast<long>(c.size()) - 1; }

    Cplx eval(const Cplx& z) const {
        Cplx v = 0.0;
        for (std::size_t d = c.size(); d-- > 0;) v = v * z + c[d];
        return v;
    }

    Cplx evalDeriv(const Cplx& z) const {
        Cplx v = 0.0;
        for (std::size_t d = c.size(); d-- > 1;)
            v = v * z + static_cast<double>(d) * c[d];
        return v;
    }

    // |p(z)| / sum_k |c_k| |z|^k — the standard backward-error scale.
    double residualAt(const Cplx& z) const {
        const double az = std::abs(z);
        double scale = 0.0;
        double pw = 1.0;
        for (double ck : c) {
            scale += std::abs(ck) * pw;
            pw *= az;
        }
        if (scale == 0.0) return 0.0;
        return std::abs(eval(z)) / scale;
    }
};

double fujiwaraRadius(const DoublePoly& p) {
    const long d = p.degree();
    const double lead = std::abs(p.c.back());
    double best = 0.0;
    for (long k = 1; k <= d; ++k) {
        double a = std::abs(p.c[static_cast<std::size_t>(d - k)]) / lead;
        if (k == d) a *= 0.5;
        if (a > 0.0) best = std::max(best, std::pow(a, 1.0 / static_cast<double>(k)));
    }
    const double r = 2.0 * best;
    return r > 0.0 ? r : 1.0;
}

std::vector<Cplx> aberth(const DoublePoly& p, std::uint64_t seed) {
    const long d = p.degree();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double radius = fujiwaraRadius(p);
    std::vector<Cplx> z(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) {
        // Random angles and a little radius jitter avoid the symmetric
        // stalemates a perfectly regular start can produce.
        const double ang = 2.0 * M_PI * unif(rng);
        const double r = radius * (0.6 + 0.8 * unif(rng));
        z[static_cast<std::size_t>(k)] = r * Cplx(std::cos(ang), std::sin(ang));
    }

    const int cap = 1000;
    double bestStep = 1e300;
    int lastImprovement = 0;
    for (int iter = 0; iter < cap; ++iter) {
        double maxStep = 0.0;
        for (long k = 0; k < d; ++k) {
            Cplx& zk = z[static_cast<std::size_t>(k)];
            const Cplx pv = p.eval(zk);
            if (pv == 0.0) continue;
            Cplx dv = p.evalDeriv(zk);
            if (dv == 0.0) { // nudge off a critical point
                zk += Cplx(1e-8, 1e-8) * (1.0 + std::abs(zk));
                dv = p.evalDeriv(zk);
                if (dv == 0.0) continue;
            }
            const Cplx newton = pv / dv;
            Cplx sum = 0.0;
            for (long m = 0; m < d; ++m) {
                if (m == k) continue;
                Cplx diff = zk - z[static_cast<std::size_t>(m)];
                if (diff == 0.0) diff = Cplx(1e-12, 1e-12);
                sum += 1.0 / diff;
            }
            const Cplx denom = 1.0 - newton * sum;
            const Cplx step = (denom == 0.0) ? newton : newton / denom;
            zk -= step;
            maxStep = std::max(maxStep, std::abs(step) / (1.0 + std::abs(zk)));
        }
        if (maxStep < bestStep * 0.5) {
            bestStep = maxStep;
            lastImprovement = iter;
        }
        // Stop at the double-precision noise floor, or once progress has
        // stalled at small steps (then the residual check below decides).
        const bool stalled = iter - lastImprovement > 20 && maxStep < 1e-7;
        if (maxStep < 1e-13 || stalled) {
            for (long k = 0; k < d; ++k) {
                Cplx& zk = z[static_cast<std::size_t>(k)];
                for (int it = 0; it < 4; ++it) {
                    const Cplx dv = p.evalDeriv(zk);
                    if (dv == 0.0) break;
                    const Cplx corr = p.eval(zk) / dv;
                    zk -= corr;
                    if (std::abs(corr) < 1e-16 * (1.0 + std::abs(zk))) break;
                }
            }
            for (const Cplx& r : z)
                if (p.residualAt(r) > kResidualBound)
                    throw ConvergenceFailure("root residual above bound after refinement");
            return z;
        }
    }
    throw ConvergenceFailure("root iteration did not converge within the cap");
}

// Enforces conjugate symmetry: partners within the pairing tolerance are
// replaced by exact conjugates, tiny residual imaginary parts collapse to 0.
void pairConjugates(std::vector<Cplx>& z) {
    const double pairTol = 1e-9;
    std::vector<bool> done(z.size(), false);
    for (std::size_t a = 0; a < z.size(); ++a) {
        if (done[a]) continue;
        if (std::abs(z[a].imag()) <= pairTol * (1.0 + std::abs(z[a]))) {
            z[a] = Cplx(z[a].real(), 0.0);
            done[a] = true;
            continue;
        }
        std::size_t best = a;
        double bestDist = 1e300;
        for (std::size_t b = a + 1; b < z.size(); ++b) {
            if (done[b]) continue;
            const double dist = std::abs(std::conj(z[a]) - z[b]);
            if (dist < bestDist) {
                bestDist = dist;
                best = b;
            }
        }
        if (best != a && bestDist <= pairTol * (1.0 + std::abs(z[a])) * 2.0) {
            const double re = 0.5 * (z[a].real() + z[best].real());
            const double im = 0.5 * (std::abs(z[a].imag()) + std::abs(z[best].imag()));
            const double sa = z[a].imag() >= 0.0 ? 1.0 : -1.0;
            z[a] = Cplx(re, sa * im);
            z[best] = Cplx(re, -sa * im);
            done[a] = done[best] = true;
        } else {
            done[a] = true; // leave asymmetric outliers untouched
        }
    }
}

} // namespace

std::vector<ComplexRoot> findRoots(const MonoPoly& p, std::uint64_t seed) {
    std::vector<ComplexRoot> out;
    if (p.isZero()) throw DegenerateInput("zero polynomial has no root set");
    if (p.degree() > 200) throw UnsupportedParameter("degree above 200 is not supported");
    if (p.degree() == 0) return out;

    // Exact part: strip the trailing zero coefficients.
    long zeroMult = 0;
    while (p.coeff(zeroMult) == 0) ++zeroMult;
    for (long m = 0; m < zeroMult; ++m) out.push_back(ComplexRoot{0.0, 0.0, 0.0});

    DoublePoly dp;
    for (long d = zeroMult; d <= p.degree(); ++d)
        dp.c.push_back(toDouble(p.coeff(d)));
    if (dp.degree() >= 1) {
        std::vector<Cplx> z = aberth(dp, seed);
        pairConjugates(z);
        std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        for (const Cplx& r : z)
            out.push_back(ComplexRoot{r.real(), r.imag(), dp.residualAt(r)});
    }
    return out;
}

ZeroReport classify(ZeroReport report) {
    const double tol = kClassifyTol;
    long pureImag = 0;
    report.nonRealCount = 0;
    report.boundaryCount = 0;
    bool allReal = true;
    bool allInside = true;
    for (const ComplexRoot& r : report.roots) {
        const bool real = std::abs(r.im) < tol;
        if (!real) {
            allReal = false;
            ++report.nonRealCount;
            if (std::abs(r.re) < tol) ++pureImag;
        } else {
            if (std::abs(std::abs(r.re) - 1.0) <= tol)
                ++report.boundaryCount;
            else if (std::abs(r.re) >= 1.0 - tol)
                allInside = false;
        }
    }
    report.imagPairCount = pureImag / 2;
    report.allRealInInterval = allReal && allInside && report.boundaryCount == 0;
    return report;
}

namespace {

std::vector<double> realRootsOf(const MonoPoly& p, std::uint64_t seed) {
    std::vector<double> xs;
    if (p.isZero() || p.degree() == 0) return xs;
    for (const ComplexRoot& r : findRoots(p, seed))
        if (std::abs(r.im) < kClassifyTol) xs.push_back(r.re);
    std::sort(xs.begin(), xs.end());
    return xs;
}

} // namespace

bool interlaceCheck(long i, long j, long n, const Rational& nu, const SizeParam& size,
                    std::uint64_t seed) {
    if (n < 1) throw DegenerateInput("needs two consecutive degrees");
    const MonoPoly cur = entryPoly(n, nu, size, i, j);
    const MonoPoly prev = entryPoly(n - 1, nu, size, i, j);
    if (cur.isZero() || prev.isZero() || cur.degree() < 1 || prev.degree() < 1)
        throw DegenerateInput("entry polynomial too small for interlacing");
    const std::vector<double> a = realRootsOf(cur, seed);
    const std::vector<double> b = realRootsOf(prev, seed);
    if (a.size() != b.size() + 1 || b.empty())
        throw DegenerateInput("real-root counts do not permit interlacing comparison");
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (!(a[k] < b[k] + kClassifyTol)) return false;
        if (!(b[k] < a[k + 1] + kClassifyTol)) return false;
    }
    return true;
}

std::vector<ZeroReport> survey(const SizeParam& size, const Rational& nu, long nMin,
                               long nMax, int threads, std::uint64_t seed) {
    requireWeightSpec(WeightSpec{size, nu});
    if (nMax > 200) throw UnsupportedParameter("survey degree above 200 is not supported");
    const long dim = size.dim();
    struct Job {
        ZeroReport report;
        MonoPoly poly;
    };
    std::vector<Job> jobs;
    for (long n = std::max(0L, nMin); n <= nMax; ++n) {
        // The expansion matrices are shared by all entries of this n.
        std::vector<RatMatrix> f;
        for (long k = 0; k <= std::min(n, size.twoEll); ++k)
            f.push_back(fMatrix(k, n, nu, size));
        const Rational lamG = nu + rat(size.twoEll);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) {
                Job job;
                job.report.twoEll = size.twoEll;
                job.report.nu = nu;
                job.report.n = n;
                job.report.i = i;
                job.report.j = j;
                job.report.echelon = echelonIndex(i, j, size);
                for (long k = 0; k < static_cast<long>(f.size()); ++k) {
                    const Rational c = f[static_cast<std::size_t>(k)].at(i, j);
                    if (c != 0) job.poly += gegenbauer(n - k, lamG) * c;
                }
                job.report.degree = job.poly.degree();
                jobs.push_back(std::move(job));
            }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) break;
            Job& job = jobs[idx];
            if (job.poly.isZero() || job.poly.degree() == 0) continue;
            try {
                job.report.roots = findRoots(job.poly, seed);
                long mult = 0;
                while (job.poly.coeff(mult) == 0) ++mult;
                job.report.exactZeroMultiplicity = mult;
            } catch (const ConvergenceFailure&) {
                job.report.converged = false;
            }
        }
    };
    const int nWorkers = std::max(1, threads);
    if (nWorkers == 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nWorkers; ++t) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::vector<ZeroReport> out;
    out.reserve(jobs.size());
    for (Job& job : jobs) out.push_back(classify(std::move(job.report)));
    return out;
}

void writeCsv(std::ostream& os, const std::vector<ZeroReport>& reports) {
    os << "twoEll,nu,n,i,j,echelon,re,im,residual\n";
    char buf[128];
    for (const ZeroReport& r : reports)
        for (const ComplexRoot& root : r.roots) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", root.re, root.im,
                          root.residual);
            os << r.twoEll << ',' << ratStr(r.nu) << ',' << r.n << ',' << r.i << ','
               << r.j << ',' << r.echelon << ',' << buf << '\n';
        }
}

void writeSvg(std::ostream& os, const ZeroReport& report) {
    const auto px = [](double v) { return (v + 1.1) / 2.2 * 600.0; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    os << "  <line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#888\"/>\n";
    os << "  <line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#ddd\"/>\n";
    char buf[160];
    for (const ComplexRoot& root : report.roots) {
        std::snprintf(buf, sizeof(buf),
                      "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"#1f6fb2\"/>\n",
                      px(root.re), 600.0 - px(root.im));
        os << buf;
    }
    os << "</svg>\n";
}

} // namespace mgeg
