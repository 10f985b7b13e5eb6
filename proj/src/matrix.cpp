#include "mgeg/matrix.hpp"

namespace mgeg {

RatMatrix RatMatrix::identity(long n) {
    RatMatrix m(n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::antidiagonal(long n) {
    RatMatrix m(n);
    for (long i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(static_cast<long>(d.size()));
    for (long i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix r = *this;
    r += o;
    return r;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (n_ != o.n_) throw Error("RatMatrix: size mismatch in +");
    for (size_t s = 0; s < a_.size(); ++s) a_[s] += o.a_[s];
    return *this;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (n_ != o.n_) throw Error("RatMatrix: size mismatch in -");
    RatMatrix r = *this;
    for (size_t s = 0; s < a_.size(); ++s) r.a_[s] -= o.a_[s];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (n_ != o.n_) throw Error("RatMatrix: size mismatch in *");
    RatMatrix r(n_);
    for (long i = 0; i < n_; ++i)
        for (long k = 0; k < n_; ++k) {
            const Rational& f = at(i, k);
            if (f == 0) continue;
            for (long j = 0; j < n_; ++j) {
                const Rational& g = o.at(k, j);
                if (g == 0) continue;
                r.at(i, j) += f * g;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(n_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::isZero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool RatMatrix::isSymmetric() const {
    for (long i = 0; i < n_; ++i)
        for (long j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::isDiagonal() const {
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

RatMatrix RatMatrix::diagInverse() const {
    if (!isDiagonal()) throw Error("diagInverse: matrix is not diagonal");
    RatMatrix r(n_);
    for (long i = 0; i < n_; ++i) {
        if (at(i, i) == 0) throw Error("diagInverse: zero diagonal entry");
        r.at(i, i) = Rational(1) / at(i, i);
    }
    return r;
}

RatMatrix RatMatrix::commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

} // namespace mgeg
