#pragma once

#include <vector>

#include "mgeg/gegenbauer.hpp"
#include "mgeg/matrix.hpp"

namespace mgeg {

// Matrix-valued polynomial sum_d coeffs[d] x^d with square Rational matrix
// coefficients. Trailing zero matrices are trimmed; the zero polynomial has
// an empty coefficient list.
class MatPoly {
  public:
    MatPoly() = default;
    explicit MatPoly(long dim) : dim_(dim) {}
    MatPoly(long dim, std::vector<RatMatrix> coeffs);

    static MatPoly identity(long dim);
    static MatPoly constant(const RatMatrix& m);

    long dim() const { return dim_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    // Coefficient matrix of x^d (zero matrix beyond the stored range).
    RatMatrix coeff(long d) const;
    const std::vector<RatMatrix>& coeffs() const { return c_; }

    MatPoly operator+(const MatPoly& o) const;
    MatPoly operator-(const MatPoly& o) const;
    bool operator==(const MatPoly& o) const;
    bool operator!=(const MatPoly& o) const { return !(*this == o); }

    // x^k * p
    MatPoly shiftUp(long k) const;
    // Left / right multiplication by a constant matrix.
    MatPoly leftMul(const RatMatrix& m) const;
    MatPoly rightMul(const RatMatrix& m) const;
    MatPoly scale(const Rational& s) const;
    // Multiplication by a scalar polynomial.
    MatPoly scalarPolyMul(const MonoPoly& p) const;
    MatPoly derivative() const;
    RatMatrix evaluate(const Rational& at) const;

    // The (i,j) scalar entry as a MonoPoly.
    MonoPoly entry(long i, long j) const;
    bool allCoeffsSymmetric() const;

  private:
    void trim();
    long dim_ = 0;
    std::vector<RatMatrix> c_;
};

// Finite expansion sum_m coeffs[m] * C_m^(lambda)(x) with matrix
// coefficients.
struct MatGegSeries {
    Rational lambda;
    long dim = 0;
    std::vector<RatMatrix> coeffs;

    MatPoly toMatPoly() const;
};

} // namespace mgeg
