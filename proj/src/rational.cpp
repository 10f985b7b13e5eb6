#include "mgeg/rational.hpp"

namespace mgeg {

Rational rat(long p, long q) {
    if (q == 0) throw Error("rat: zero denominator");
    Rational v(p, q);
    v.canonicalize();
    return v;
}

Rational ratParse(const std::string& s) {
    if (s.empty()) throw Error("ratParse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("ratParse: malformed rational '" + s + "'");
    if (v.get_den() == 0) throw Error("ratParse: zero denominator in '" + s + "'");
    v.canonicalize();
    return v;
}

std::string ratStr(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool isInt(const Rational& v) { return v.get_den() == 1; }

bool isNonposInt(const Rational& v) { return isInt(v) && v.get_num() <= 0; }

double toDouble(const Rational& v) { return v.get_d(); }

Rational pochhammer(const Rational& a, long k) {
    Rational prod = 1;
    if (k >= 0) {
        Rational term = a;
        for (long s = 0; s < k; ++s) {
            prod *= term;
            term += 1;
        }
        return prod;
    }
    // (a)_{-m} = 1 / ((a-1)(a-2)...(a+k)); vanishing factor means a pole.
    Rational term = a - 1;
    for (long s = 0; s < -k; ++s) {
        if (term == 0)
            throw PoleError("pochhammer: reciprocal rising factorial hit zero at base " + ratStr(a));
        prod *= term;
        term -= 1;
    }
    return Rational(1) / prod;
}

Rational factorialRat(long n) {
    if (n < 0) throw Error("factorialRat: negative argument");
    Rational prod = 1;
    for (long s = 2; s <= n; ++s) prod *= s;
    return prod;
}

Rational binomialRat(long n, long k) {
    if (k < 0 || k > n) return 0;
    // Multiplicative form keeps intermediate values integral.
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational gammaRatioShift(const Rational& base, long topShift, long botShift, PoleConvention conv) {
    const Rational top = base + topShift;
    const Rational bot = base + botShift;
    const bool topPole = isNonposInt(top);
    const bool botPole = isNonposInt(bot);
    if (topPole)
        throw PoleError("gammaRatioShift: Gamma argument " + ratStr(top) + " is a nonpositive integer (numerator)");
    if (botPole) {
        if (conv == PoleConvention::ReciprocalZero) return 0;
        throw PoleError("gammaRatioShift: Gamma argument " + ratStr(bot) + " is a nonpositive integer (denominator)");
    }
    // Gamma(bot + (top-bot)) / Gamma(bot) = (bot)_{top-bot}, both directions.
    return pochhammer(bot, topShift - botShift);
}

} // namespace mgeg
