#include "mgeg/matpoly.hpp"

namespace mgeg {

MatPoly::MatPoly(long dim, std::vector<RatMatrix> coeffs) : dim_(dim), c_(std::move(coeffs)) {
    for (const auto& m : c_)
        if (m.dim() != dim_) throw Error("MatPoly: coefficient dimension mismatch");
    trim();
}

MatPoly MatPoly::identity(long dim) {
    return MatPoly(dim, {RatMatrix::identity(dim)});
}

MatPoly MatPoly::constant(const RatMatrix& m) {
    return MatPoly(m.dim(), {m});
}

void MatPoly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

RatMatrix MatPoly::coeff(long d) const {
    if (d < 0 || d >= static_cast<long>(c_.size())) return RatMatrix::zero(dim_);
    return c_[static_cast<size_t>(d)];
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
    if (dim_ != o.dim_) throw Error("MatPoly: dimension mismatch in +");
    std::vector<RatMatrix> v;
    const size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (size_t d = 0; d < n; ++d) v.push_back(coeff(static_cast<long>(d)) + o.coeff(static_cast<long>(d)));
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
    if (dim_ != o.dim_) throw Error("MatPoly: dimension mismatch in -");
    std::vector<RatMatrix> v;
    const size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (size_t d = 0; d < n; ++d) v.push_back(coeff(static_cast<long>(d)) - o.coeff(static_cast<long>(d)));
    return MatPoly(dim_, std::move(v));
}

bool MatPoly::operator==(const MatPoly& o) const { return dim_ == o.dim_ && c_ == o.c_; }

MatPoly MatPoly::shiftUp(long k) const {
    if (isZero() || k == 0) return *this;
    std::vector<RatMatrix> v(static_cast<size_t>(k), RatMatrix::zero(dim_));
    v.insert(v.end(), c_.begin(), c_.end());
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::leftMul(const RatMatrix& m) const {
    std::vector<RatMatrix> v;
    v.reserve(c_.size());
    for (const auto& cd : c_) v.push_back(m * cd);
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::rightMul(const RatMatrix& m) const {
    std::vector<RatMatrix> v;
    v.reserve(c_.size());
    for (const auto& cd : c_) v.push_back(cd * m);
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::scale(const Rational& s) const {
    std::vector<RatMatrix> v;
    v.reserve(c_.size());
    for (const auto& cd : c_) v.push_back(cd * s);
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::scalarPolyMul(const MonoPoly& p) const {
    if (isZero() || p.isZero()) return MatPoly(dim_);
    std::vector<RatMatrix> v(c_.size() + static_cast<size_t>(p.degree()), RatMatrix::zero(dim_));
    for (size_t d = 0; d < c_.size(); ++d)
        for (long e = 0; e <= p.degree(); ++e) {
            const Rational& f = p.coeff(e);
            if (f != 0) v[d + static_cast<size_t>(e)] += c_[d] * f;
        }
    return MatPoly(dim_, std::move(v));
}

MatPoly MatPoly::derivative() const {
    if (c_.size() <= 1) return MatPoly(dim_);
    std::vector<RatMatrix> v;
    v.reserve(c_.size() - 1);
    for (size_t d = 1; d < c_.size(); ++d) v.push_back(c_[d] * Rational(static_cast<long>(d)));
    return MatPoly(dim_, std::move(v));
}

RatMatrix MatPoly::evaluate(const Rational& at) const {
    RatMatrix acc = RatMatrix::zero(dim_);
    for (size_t d = c_.size(); d-- > 0;) acc = acc * at + c_[d];
    return acc;
}

MonoPoly MatPoly::entry(long i, long j) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& cd : c_) v.push_back(cd.at(i, j));
    return MonoPoly(std::move(v));
}

bool MatPoly::allCoeffsSymmetric() const {
    for (const auto& cd : c_)
        if (!cd.isSymmetric()) return false;
    return true;
}

MatPoly MatGegSeries::toMatPoly() const {
    MatPoly acc(dim);
    for (size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m].isZero()) continue;
        acc = acc + MatPoly::constant(coeffs[m]).scalarPolyMul(gegenbauer(static_cast<long>(m), lambda));
    }
    return acc;
}

} // namespace mgeg
