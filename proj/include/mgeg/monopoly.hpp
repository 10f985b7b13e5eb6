#pragma once

#include <vector>

#include "mgeg/rational.hpp"

namespace mgeg {

// Dense univariate polynomial over Rational in the monomial basis.
// Invariant: the coefficient vector never ends in a zero (the zero
// polynomial is the empty vector, with degree() == -1).
class MonoPoly {
  public:
    MonoPoly() = default;
    explicit MonoPoly(std::vector<Rational> coeffs);

    static MonoPoly zero() { return MonoPoly(); }
    static MonoPoly constant(const Rational& c);
    static MonoPoly x();
    // c * x^d
    static MonoPoly monomial(const Rational& c, long d);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    // Coefficient of x^d (0 beyond the stored range).
    const Rational& coeff(long d) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    MonoPoly operator+(const MonoPoly& o) const;
    MonoPoly operator-(const MonoPoly& o) const;
    MonoPoly operator*(const MonoPoly& o) const;
    MonoPoly operator*(const Rational& s) const;
    MonoPoly operator-() const;
    MonoPoly& operator+=(const MonoPoly& o);
    MonoPoly& operator-=(const MonoPoly& o);
    bool operator==(const MonoPoly& o) const { return c_ == o.c_; }
    bool operator!=(const MonoPoly& o) const { return c_ != o.c_; }

    // Multiplies by x^k (k >= 0).
    MonoPoly shiftUp(long k) const;
    MonoPoly derivative() const;
    Rational evaluate(const Rational& at) const;

    // Exact division; throws Error if the remainder is nonzero.
    MonoPoly divideExact(const MonoPoly& divisor) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

inline MonoPoly operator*(const Rational& s, const MonoPoly& p) { return p * s; }

} // namespace mgeg
