#include "mgeg/genfun.hpp"

#include "mgeg/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mgeg {

namespace {

// --- small helpers on the nested-vector polynomial layers ---------------

using Layer1 = std::vector<Rational>;              // poly in nu
using Layer2 = std::vector<Layer1>;                // poly in x, nu
using Layer3 = std::vector<Layer2>;                // poly in t, x, nu

bool layer1Zero(const Layer1& a) {
    for (const Rational& v : a)
        if (v != 0) return false;
    return true;
}

void trim1(Layer1& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim2(Layer2& a) {
    for (Layer1& row : a) trim1(row);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

void trim3(Layer3& a) {
    for (Layer2& plane : a) trim2(plane);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

void addInto1(Layer1& acc, const Layer1& a, const Rational& s) {
    if (acc.size() < a.size()) acc.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i] * s;
}

} // namespace

bool TriPoly::isZero() const {
    for (const Layer2& plane : c)
        for (const Layer1& row : plane)
            if (!layer1Zero(row)) return false;
    return true;
}

TriPoly TriPoly::constant(const Rational& v) {
    TriPoly p;
    if (v != 0) p.c = {{{v}}};
    return p;
}

TriPoly TriPoly::seriesKernel() {
    // 1 - 2 x t + t^2
    TriPoly p;
    p.c.resize(3);
    p.c[0] = {{rat(1)}};
    p.c[1] = {{}, {rat(-2)}};
    p.c[2] = {{rat(1)}};
    return p;
}

TriPoly TriPoly::seriesKernelDt() {
    // -2x + 2t
    TriPoly p;
    p.c.resize(2);
    p.c[0] = {{}, {rat(-2)}};
    p.c[1] = {{rat(2)}};
    return p;
}

TriPoly TriPoly::nuPlus(long shift) {
    TriPoly p;
    p.c = {{{rat(shift), rat(1)}}};
    return p;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
    TriPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t dt = 0; dt < r.c.size(); ++dt) {
        const Layer2* a = dt < c.size() ? &c[dt] : nullptr;
        const Layer2* b = dt < o.c.size() ? &o.c[dt] : nullptr;
        Layer2& out = r.c[dt];
        out.resize(std::max(a ? a->size() : 0, b ? b->size() : 0));
        for (std::size_t dx = 0; dx < out.size(); ++dx) {
            if (a && dx < a->size()) addInto1(out[dx], (*a)[dx], rat(1));
            if (b && dx < b->size()) addInto1(out[dx], (*b)[dx], rat(1));
        }
    }
    trim3(r.c);
    return r;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
    return *this + o.scale(rat(-1));
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
    TriPoly r;
    if (c.empty() || o.c.empty()) return r;
    for (std::size_t at = 0; at < c.size(); ++at)
        for (std::size_t ax = 0; ax < c[at].size(); ++ax)
            for (std::size_t an = 0; an < c[at][ax].size(); ++an) {
                const Rational& ca = c[at][ax][an];
                if (ca == 0) continue;
                for (std::size_t bt = 0; bt < o.c.size(); ++bt)
                    for (std::size_t bx = 0; bx < o.c[bt].size(); ++bx)
                        for (std::size_t bn = 0; bn < o.c[bt][bx].size(); ++bn) {
                            const Rational& cb = o.c[bt][bx][bn];
                            if (cb == 0) continue;
                            const std::size_t dt = at + bt;
                            const std::size_t dx = ax + bx;
                            const std::size_t dn = an + bn;
                            if (r.c.size() <= dt) r.c.resize(dt + 1);
                            if (r.c[dt].size() <= dx) r.c[dt].resize(dx + 1);
                            if (r.c[dt][dx].size() <= dn) r.c[dt][dx].resize(dn + 1);
                            r.c[dt][dx][dn] += ca * cb;
                        }
            }
    trim3(r.c);
    return r;
}

TriPoly TriPoly::scale(const Rational& s) const {
    TriPoly r;
    if (s == 0) return r;
    r.c = c;
    for (Layer2& plane : r.c)
        for (Layer1& row : plane)
            for (Rational& v : row) v *= s;
    return r;
}

TriPoly TriPoly::shiftT(long k) const {
    TriPoly r;
    if (c.empty()) return r;
    r.c.resize(c.size() + static_cast<std::size_t>(k));
    for (std::size_t dt = 0; dt < c.size(); ++dt)
        r.c[dt + static_cast<std::size_t>(k)] = c[dt];
    return r;
}

TriPoly TriPoly::diffT() const {
    TriPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (std::size_t dt = 1; dt < c.size(); ++dt) {
        r.c[dt - 1] = c[dt];
        for (Layer1& row : r.c[dt - 1])
            for (Rational& v : row) v *= rat(static_cast<long>(dt));
    }
    trim3(r.c);
    return r;
}

bool TriPoly::operator==(const TriPoly& o) const {
    return (*this - o).isZero();
}

std::vector<MonoPoly> TriPoly::atNu(const Rational& nu) const {
    std::vector<MonoPoly> out;
    out.reserve(c.size());
    for (const Layer2& plane : c) {
        MonoPoly p;
        for (std::size_t dx = 0; dx < plane.size(); ++dx) {
            Rational v = 0;
            // Horner in nu
            for (std::size_t dn = plane[dx].size(); dn-- > 0;)
                v = v * nu + plane[dx][dn];
            if (v != 0) p += MonoPoly::monomial(v, static_cast<long>(dx));
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool TriPoly::integerCoefficients() const {
    for (const Layer2& plane : c)
        for (const Layer1& row : plane)
            for (const Rational& v : row)
                if (!isInt(v)) return false;
    return true;
}

// --- slice polynomials ----------------------------------------------------

long SlicePoly::maxDegree() const {
    long d = -1;
    for (const auto& row : entry)
        for (const auto& e : row)
            d = std::max(d, static_cast<long>(e.size()) - 1);
    return d;
}

Rational SlicePoly::evaluate(long i, long j, const Rational& lambda) const {
    const auto& e = entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Rational v = 0;
    for (std::size_t d = e.size(); d-- > 0;) v = v * lambda + e[d];
    return v;
}

namespace {

// The rescaled coefficient entry before content reduction, as an exact value
// at mu = nu + n.  Relative to the bare expansion coefficient this carries
// the extra factor Gamma(mu+2l) (mu+1)_{2l-1} (for size >= 2x2; at 1x1 the
// trailing Pochhammer is dropped), which turns every entry into a polynomial
// in mu of degree at most 2l-1.
Rational tildeRawEntry(long k, long i, long j, const Rational& mu, const SizeParam& size) {
    const long twoEll = size.twoEll;
    if ((k + i + j) % 2 != 0) return 0;
    const Rational b = binomialRat(twoEll, k) * binomialRat(k, (k + i - j) / 2) *
                       binomialRat(twoEll - k, (i + j - k) / 2);
    if (b == 0) return 0;
    const long d1 = (i + j - k) / 2;
    const long d2 = (k + i + j) / 2;
    const long d3 = (k - i + j) / 2;
    const long d4 = (k + i - j) / 2;
    const Rational sign = (k % 2 == 0) ? rat(1) : rat(-1);
    Rational v = sign * (mu + twoEll) * (mu + twoEll - k) * b;
    v *= pochhammer(mu, d1);
    v *= gammaRatioShift(mu + twoEll, -d2, 1 - d3);
    v *= gammaRatioShift(mu + twoEll, 0, 1 - d4);
    v *= pochhammer(mu + 1, std::max(0L, twoEll - 1));
    return v;
}

// Univariate helpers on MonoPoly used by the interpolation stage.  The
// variable is mu throughout; the shift to the slice variable happens last.

MonoPoly polyRemainder(MonoPoly a, const MonoPoly& b) {
    while (!a.isZero() && a.degree() >= b.degree()) {
        const Rational q = a.coeff(a.degree()) / b.coeff(b.degree());
        a -= (MonoPoly::monomial(q, a.degree() - b.degree()) * b);
    }
    return a;
}

MonoPoly polyGcd(MonoPoly a, MonoPoly b) {
    while (!b.isZero()) {
        MonoPoly r = polyRemainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.isZero()) a = a * (rat(1) / a.coeff(a.degree()));
    return a;
}

// Newton interpolation through (nodes[d], values[d]); returns the monomial
// coefficients of the unique polynomial of degree < nodes.size().
MonoPoly newtonInterpolate(const std::vector<Rational>& nodes,
                           const std::vector<Rational>& values) {
    const std::size_t m = nodes.size();
    std::vector<Rational> dd = values; // divided differences, updated in place
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t d = m - 1; d >= level; --d)
            dd[d] = (dd[d] - dd[d - 1]) / (nodes[d] - nodes[d - level]);
    MonoPoly p;
    MonoPoly basis = MonoPoly::constant(rat(1));
    for (std::size_t d = 0; d < m; ++d) {
        p += basis * dd[d];
        basis = basis * (MonoPoly::x() - MonoPoly::constant(nodes[d]));
    }
    return p;
}

// Replaces mu by (lambda - offset) in p; returns coefficients in lambda.
MonoPoly taylorShift(const MonoPoly& p, long offset) {
    const MonoPoly lin = MonoPoly::x() - MonoPoly::constant(rat(offset));
    MonoPoly out;
    for (long d = p.degree(); d >= 0; --d) {
        out = out * lin;
        out += MonoPoly::constant(p.coeff(d));
    }
    return out;
}

SlicePoly buildSlice(long k, const Rational& nu, const SizeParam& size) {
    const long twoEll = size.twoEll;
    const long dim = size.dim();
    const long floorEll = twoEll / 2;
    const long baseNodes = std::max(1L, 2 * twoEll); // covers degree <= 2l-1
    const long extraNodes = 3;

    // Interpolation nodes mu_d = nu + k + d, matching n = k, k+1, ...
    std::vector<Rational> nodes;
    for (long d = 0; d < baseNodes + extraNodes; ++d)
        nodes.push_back(nu + rat(k + d));

    std::vector<std::vector<MonoPoly>> raw(
        static_cast<std::size_t>(dim), std::vector<MonoPoly>(static_cast<std::size_t>(dim)));
    long maxRawDeg = -1;
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            std::vector<Rational> values;
            values.reserve(nodes.size());
            for (const Rational& mu : nodes)
                values.push_back(tildeRawEntry(k, i, j, mu, size));
            std::vector<Rational> head(values.begin(), values.begin() + baseNodes);
            std::vector<Rational> headNodes(nodes.begin(), nodes.begin() + baseNodes);
            MonoPoly p = newtonInterpolate(headNodes, head);
            for (long d = baseNodes; d < baseNodes + extraNodes; ++d)
                if (p.evaluate(nodes[static_cast<std::size_t>(d)]) !=
                    values[static_cast<std::size_t>(d)])
                    throw InterpolationMismatch(
                        "slice entry is not polynomial of the expected degree");
            for (long d = 0; d <= p.degree(); ++d)
                if (!isInt(p.coeff(d)))
                    throw InterpolationMismatch("slice entry has non-integer coefficients");
            maxRawDeg = std::max(maxRawDeg, p.degree());
            raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(p);
        }

    // Remove the common linear content until the max degree drops to floor(l).
    const long need = std::max(0L, maxRawDeg - floorEll);
    std::vector<long> shifts;
    if (need > 0) {
        MonoPoly content;
        for (const auto& row : raw)
            for (const MonoPoly& e : row)
                if (!e.isZero()) content = content.isZero() ? e : polyGcd(content, e);
        MonoPoly probe = content;
        for (long s = -(4 * twoEll + 2); s <= 4 * twoEll + 2 && static_cast<long>(shifts.size()) < need; ++s) {
            while (static_cast<long>(shifts.size()) < need &&
                   probe.evaluate(rat(-s)) == 0) {
                probe = probe.divideExact(MonoPoly::x() + MonoPoly::constant(rat(s)));
                shifts.push_back(s);
            }
        }
        if (static_cast<long>(shifts.size()) < need)
            throw InterpolationMismatch("content of slice lacks the expected linear factors");
        for (auto& row : raw)
            for (MonoPoly& e : row)
                for (long s : shifts)
                    if (!e.isZero())
                        e = e.divideExact(MonoPoly::x() + MonoPoly::constant(rat(s)));
    }

    SlicePoly out;
    out.k = k;
    out.entry.assign(static_cast<std::size_t>(dim),
                     std::vector<std::vector<Rational>>(static_cast<std::size_t>(dim)));
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            // mu = lambda_k - (2l - k)
            MonoPoly inLambda =
                taylorShift(raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                            twoEll - k);
            if (inLambda.degree() > floorEll)
                throw InterpolationMismatch("reduced slice exceeds the expected degree");
            std::vector<Rational> coeffs;
            for (long d = 0; d <= inLambda.degree(); ++d) {
                if (!isInt(inLambda.coeff(d)))
                    throw InterpolationMismatch("reduced slice has non-integer coefficients");
                coeffs.push_back(inLambda.coeff(d));
            }
            out.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::move(coeffs);
        }
    for (long s : shifts)
        out.removedRoots.push_back(rat(twoEll - k - s)); // lambda-roots, removal order
    return out;
}

const SlicePoly& cachedSlice(long k, const Rational& nu, const SizeParam& size) {
    thread_local std::map<std::pair<long, long>, SlicePoly> cache;
    const auto key = std::make_pair(size.twoEll, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, buildSlice(k, nu, size)).first;
    return it->second;
}

} // namespace

SlicePoly polyInLambda(long k, const Rational& nu, const SizeParam& size) {
    requireWeightSpec(WeightSpec{size, nu});
    if (k < 0 || k > size.twoEll)
        throw IndexError("slice index out of range");
    return cachedSlice(k, nu, size);
}

RatMatrix tildeF(long k, long n, const Rational& nu, const SizeParam& size) {
    requireWeightSpec(WeightSpec{size, nu});
    const long dim = size.dim();
    RatMatrix out(dim);
    if (n < 0 || k < 0 || k > std::min(n, size.twoEll)) return out;
    const SlicePoly& slice = cachedSlice(k, nu, size);
    const Rational lambda = nu + rat(size.twoEll + n - k);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            out.at(i, j) = slice.evaluate(i, j, lambda);
    return out;
}

std::vector<MatPoly> seriesCoefficients(const Rational& nu, const SizeParam& size, long order) {
    requireWeightSpec(WeightSpec{size, nu});
    const Rational lamG = nu + rat(size.twoEll);
    std::vector<MatPoly> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        MatPoly sum(size.dim());
        for (long k = 0; k <= std::min(n, size.twoEll); ++k)
            sum = sum + MatPoly::constant(tildeF(k, n, nu, size))
                            .scalarPolyMul(gegenbauer(n - k, lamG));
        out.push_back(std::move(sum));
    }
    return out;
}

ClosedForm closedForm(const Rational& nu, const SizeParam& size) {
    requireWeightSpec(WeightSpec{size, nu});
    const long twoEll = size.twoEll;
    const long dim = size.dim();
    const long floorEll = twoEll / 2;

    // Power sums S_j = sum_m (lamG + m)^j C_m^(lamG) t^m = N_j / R^(lamG+j):
    // N_0 = 1 and N_{j+1} = lamG N_j R + t R dN_j/dt - (lamG+j) t (dR/dt) N_j.
    const TriPoly lamG = TriPoly::nuPlus(twoEll);
    const TriPoly R = TriPoly::seriesKernel();
    const TriPoly Rt = TriPoly::seriesKernelDt();
    std::vector<TriPoly> N{TriPoly::constant(rat(1))};
    for (long j = 0; j < floorEll; ++j) {
        const TriPoly& Nj = N.back();
        TriPoly next = lamG * Nj * R + (R * Nj.diffT()).shiftT(1) -
                       ((lamG + TriPoly::constant(rat(j))) * Rt * Nj).shiftT(1);
        N.push_back(std::move(next));
    }
    std::vector<TriPoly> Rpow(static_cast<std::size_t>(floorEll) + 1);
    Rpow[0] = TriPoly::constant(rat(1));
    for (long e = 1; e <= floorEll; ++e) Rpow[static_cast<std::size_t>(e)] = Rpow[e - 1] * R;

    ClosedForm cf;
    cf.size = size;
    cf.floorEll = floorEll;
    cf.numerator.assign(static_cast<std::size_t>(dim),
                        std::vector<TriPoly>(static_cast<std::size_t>(dim)));
    for (long k = 0; k <= twoEll; ++k) {
        const SlicePoly& slice = cachedSlice(k, nu, size);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) {
                const auto& coeffs =
                    slice.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                TriPoly acc;
                for (std::size_t e = 0; e < coeffs.size(); ++e) {
                    if (coeffs[e] == 0) continue;
                    acc = acc + (N[e] * Rpow[static_cast<std::size_t>(floorEll) - e])
                                    .scale(coeffs[e]);
                }
                if (!acc.isZero())
                    cf.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        cf.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                        acc.shiftT(k);
            }
    }
    for (const auto& row : cf.numerator)
        for (const TriPoly& e : row)
            if (!e.integerCoefficients())
                throw SeriesMismatch("numerator has non-integer coefficients");

    // Verify the expansion: numerator * sum_m C_m^(nu+2l+floor(l)) t^m must
    // reproduce the partial sums term by term.
    const long order = std::max(12L, 2 * twoEll + 6);
    const Rational sigma = nu + rat(twoEll + floorEll);
    const std::vector<MatPoly> direct = seriesCoefficients(nu, size, order);
    std::vector<std::vector<std::vector<MonoPoly>>> numAt(
        static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        numAt[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim));
        for (long j = 0; j < dim; ++j)
            numAt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                cf.numerator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].atNu(nu);
    }
    for (long n = 0; n <= order; ++n) {
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) {
                const auto& tSlices =
                    numAt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                MonoPoly lhs;
                for (long d = 0; d <= n && d < static_cast<long>(tSlices.size()); ++d)
                    lhs += tSlices[static_cast<std::size_t>(d)] * gegenbauer(n - d, sigma);
                if (lhs != direct[static_cast<std::size_t>(n)].entry(i, j))
                    throw SeriesMismatch("closed form disagrees with the series expansion");
            }
    }
    cf.verifiedOrder = order;
    return cf;
}

} // namespace mgeg
