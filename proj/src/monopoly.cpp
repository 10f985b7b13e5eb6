#include "mgeg/monopoly.hpp"

#include <algorithm>

namespace mgeg {

namespace {
const Rational kZero = 0;
}

MonoPoly::MonoPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

MonoPoly MonoPoly::constant(const Rational& c) {
    if (c == 0) return MonoPoly();
    return MonoPoly(std::vector<Rational>{c});
}

MonoPoly MonoPoly::x() { return MonoPoly(std::vector<Rational>{0, 1}); }

MonoPoly MonoPoly::monomial(const Rational& c, long d) {
    if (c == 0) return MonoPoly();
    std::vector<Rational> v(static_cast<size_t>(d) + 1, kZero);
    v.back() = c;
    return MonoPoly(std::move(v));
}

void MonoPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& MonoPoly::coeff(long d) const {
    if (d < 0 || d >= static_cast<long>(c_.size())) return kZero;
    return c_[static_cast<size_t>(d)];
}

MonoPoly MonoPoly::operator+(const MonoPoly& o) const {
    MonoPoly r = *this;
    r += o;
    return r;
}

MonoPoly& MonoPoly::operator+=(const MonoPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
    trim();
    return *this;
}

MonoPoly MonoPoly::operator-(const MonoPoly& o) const {
    MonoPoly r = *this;
    r -= o;
    return r;
}

MonoPoly& MonoPoly::operator-=(const MonoPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
    trim();
    return *this;
}

MonoPoly MonoPoly::operator-() const {
    MonoPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

MonoPoly MonoPoly::operator*(const MonoPoly& o) const {
    if (isZero() || o.isZero()) return MonoPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, kZero);
    for (size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (size_t b = 0; b < o.c_.size(); ++b) {
            if (o.c_[b] == 0) continue;
            v[a + b] += c_[a] * o.c_[b];
        }
    }
    return MonoPoly(std::move(v));
}

MonoPoly MonoPoly::operator*(const Rational& s) const {
    if (s == 0) return MonoPoly();
    MonoPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

MonoPoly MonoPoly::shiftUp(long k) const {
    if (isZero() || k == 0) return *this;
    std::vector<Rational> v(c_.size() + static_cast<size_t>(k), kZero);
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return MonoPoly(std::move(v));
}

MonoPoly MonoPoly::derivative() const {
    if (c_.size() <= 1) return MonoPoly();
    std::vector<Rational> v(c_.size() - 1, kZero);
    for (size_t d = 1; d < c_.size(); ++d) v[d - 1] = c_[d] * static_cast<long>(d);
    return MonoPoly(std::move(v));
}

Rational MonoPoly::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (size_t d = c_.size(); d-- > 0;) acc = acc * at + c_[d];
    return acc;
}

MonoPoly MonoPoly::divideExact(const MonoPoly& divisor) const {
    if (divisor.isZero()) throw Error("divideExact: division by zero polynomial");
    if (isZero()) return MonoPoly();
    if (degree() < divisor.degree()) throw Error("divideExact: nonzero remainder (degree too small)");
    std::vector<Rational> rem = c_;
    std::vector<Rational> q(c_.size() - divisor.c_.size() + 1, kZero);
    const Rational& lead = divisor.c_.back();
    for (long d = degree() - divisor.degree(); d >= 0; --d) {
        Rational f = rem[static_cast<size_t>(d + divisor.degree())] / lead;
        q[static_cast<size_t>(d)] = f;
        if (f == 0) continue;
        for (size_t s = 0; s < divisor.c_.size(); ++s)
            rem[static_cast<size_t>(d) + s] -= f * divisor.c_[s];
    }
    for (const auto& c : rem)
        if (c != 0) throw Error("divideExact: nonzero remainder");
    return MonoPoly(std::move(q));
}

} // namespace mgeg
