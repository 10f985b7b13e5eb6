#pragma once

#include "mgeg/connection.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mgeg {

// Seed for the angular offset of the circle initializer; any fixed value
// works, the surveys only need reproducibility.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

// Classification tolerance and residual bound used throughout this module.
inline constexpr double kClassifyTol = 1e-8;
inline constexpr double kResidualBound = 1e-9;

struct ComplexRoot {
    double re = 0.0;
    double im = 0.0;
    double residual = 0.0; // |p(root)| / (sum_k |c_k| |root|^k)
};

struct ZeroReport {
    long twoEll = 0;
    Rational nu;
    long n = 0;
    long i = 0;
    long j = 0;
    long echelon = 0;
    long degree = -1;              // degree of the entry polynomial (-1: zero poly)
    long exactZeroMultiplicity = 0; // trailing-zero count = multiplicity of x = 0
    std::vector<ComplexRoot> roots; // all degree-many roots, x = 0 included
    bool converged = true;
    // classification flags (tolerance kClassifyTol)
    bool allRealInInterval = false;
    long imagPairCount = 0;       // conjugate pairs with |re| < tol
    long nonRealCount = 0;        // roots with |im| >= tol
    long boundaryCount = 0;       // real roots within tol of x = +-1
    int interlacesWithPrev = -1;  // -1 not checked / not applicable
};

// 1 + min{i, 2l-i, j, 2l-j}: the distance of the entry to the matrix border.
long echelonIndex(long i, long j, const SizeParam& size);

// Entry (i,j) of hatP_n, assembled from the expansion over scalar Gegenbauer
// polynomials of parameter nu + 2l (at most echelon(i,j) nonzero terms).
MonoPoly entryPoly(long n, const Rational& nu, const SizeParam& size, long i, long j);

// All deg(p) complex roots: exact multiplicity of x = 0 from the trailing
// zero coefficients, the rest by Aberth-Ehrlich iteration from a circle
// initializer with Newton refinement and conjugate pairing.  Throws
// ConvergenceFailure when the iteration cap is hit, UnsupportedParameter for
// degrees above 200.
std::vector<ComplexRoot> findRoots(const MonoPoly& p, std::uint64_t seed = kDefaultSeed);

// Fills the classification flags of a report whose roots are computed.
ZeroReport classify(ZeroReport report);

// True iff the sorted real roots of the (i,j) entry polynomials at degrees n
// and n-1 strictly alternate (within the classification tolerance).  Throws
// DegenerateInput when the real-root counts do not differ by exactly one.
bool interlaceCheck(long i, long j, long n, const Rational& nu, const SizeParam& size,
                    std::uint64_t seed = kDefaultSeed);

// Classified reports for every entry (i,j) and every n in [nMin, nMax],
// ordered by (n, i, j).  Root solves run on `threads` workers; the output is
// independent of the thread count.  ConvergenceFailure is recorded on the
// report (converged = false), never silently dropped.
std::vector<ZeroReport> survey(const SizeParam& size, const Rational& nu, long nMin,
                               long nMax, int threads = 1,
                               std::uint64_t seed = kDefaultSeed);

// CSV rows (twoEll, nu, n, i, j, echelon, re, im, residual) with header.
void writeCsv(std::ostream& os, const std::vector<ZeroReport>& reports);

// 600x600 scatter of one report over [-1.1, 1.1]^2 with the real axis drawn.
void writeSvg(std::ostream& os, const ZeroReport& report);

} // namespace mgeg
