#pragma once

#include <gmpxx.h>

#include <string>

#include "mgeg/errors.hpp"

namespace mgeg {

// All exact arithmetic runs over arbitrary-precision rationals. mpq_class
// keeps values canonical (reduced, positive denominator) through arithmetic;
// the helpers below canonicalize on construction and parsing.
using Rational = mpq_class;

// p/q with reduction; q must be nonzero.
Rational rat(long p, long q = 1);

// Parses "p", "p/q" or "-p/q" (arbitrary precision). Throws Error on
// malformed input or zero denominator.
Rational ratParse(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string ratStr(const Rational& v);

// True iff v is an integer <= 0 (a Gamma pole).
bool isNonposInt(const Rational& v);

// True iff v is an integer.
bool isInt(const Rational& v);

// Rounds to the nearest double (single rounding step).
double toDouble(const Rational& v);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1. Negative k uses
// the reciprocal convention (a)_{-m} = 1 / ((a-1)(a-2)...(a-m)) and throws
// PoleError when that denominator vanishes.
Rational pochhammer(const Rational& a, long k);

// n! as a Rational; n >= 0.
Rational factorialRat(long n);

// Binomial coefficient with the usual extension: 0 when k < 0 or k > n.
Rational binomialRat(long n, long k);

// How gammaRatioShift treats nonpositive-integer Gamma arguments.
//  Strict        : any pole raises PoleError.
//  ReciprocalZero: a pole in the denominator position makes the whole ratio
//                  zero (the 1/Gamma(z) = 0 convention); a numerator pole
//                  still raises PoleError.
enum class PoleConvention { Strict, ReciprocalZero };

// Gamma(base + topShift) / Gamma(base + botShift) for integer shifts,
// evaluated exactly as a Pochhammer product in whichever direction applies.
Rational gammaRatioShift(const Rational& base, long topShift, long botShift,
                         PoleConvention conv = PoleConvention::Strict);

} // namespace mgeg
