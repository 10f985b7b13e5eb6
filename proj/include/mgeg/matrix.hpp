#pragma once

#include <vector>

#include "mgeg/rational.hpp"

namespace mgeg {

// Matrix size parameter: matrices are (twoEll+1) x (twoEll+1) where twoEll
// is a nonnegative integer (twice the half-integer family parameter).
struct SizeParam {
    long twoEll = 0;
    long dim() const { return twoEll + 1; }
};

// Dense square matrix over Rational.
class RatMatrix {
  public:
    RatMatrix() = default;
    explicit RatMatrix(long n) : n_(n), a_(static_cast<size_t>(n * n), Rational(0)) {}

    static RatMatrix identity(long n);
    static RatMatrix zero(long n) { return RatMatrix(n); }
    // Antidiagonal (i,j) -> [i + j == n-1]; commuting with it encodes the
    // persymmetry of the whole family.
    static RatMatrix antidiagonal(long n);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    long dim() const { return n_; }
    Rational& at(long i, long j) { return a_[static_cast<size_t>(i * n_ + j)]; }
    const Rational& at(long i, long j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& s) const;
    RatMatrix& operator+=(const RatMatrix& o);
    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transpose() const;
    bool isZero() const;
    bool isSymmetric() const;
    bool isDiagonal() const;
    // Inverse of a diagonal matrix; throws Error on a zero diagonal entry or
    // a nonzero off-diagonal entry.
    RatMatrix diagInverse() const;
    // A*B - B*A
    static RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

  private:
    long n_ = 0;
    std::vector<Rational> a_;
};

inline RatMatrix operator*(const Rational& s, const RatMatrix& m) { return m * s; }

} // namespace mgeg
