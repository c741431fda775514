#ifndef ORETEL_NUMERIC_HPP
#define ORETEL_NUMERIC_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace oretel {

using Integer = mpz_class;
using Rational = mpq_class;

// Degree of the zero polynomial. Chosen far from INT_MIN so that
// expressions like deg - 1 or deg + r*gamma cannot wrap around.
constexpr int kNegInf = INT_MIN / 4;

inline bool is_neg_inf(int d) { return d <= kNegInf / 2; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), canonical positive.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Rational r(int_gcd(a.get_num(), b.get_num()), int_lcm(a.get_den(), b.get_den()));
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& a, unsigned long e) {
    Rational r(int_pow(a.get_num(), e), int_pow(a.get_den(), e));
    r.canonicalize();
    return r;
}

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files / expressions.
struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& what, int ln = 0, int col = 0)
        : Error(what), line(ln), column(col) {}
};

// A system failed a structural check (admissibility, compatibility, ...).
struct ValidationError : Error {
    std::string check;
    ValidationError(const std::string& which, const std::string& what)
        : Error(which + ": " + what), check(which) {}
};

// Mathematically impossible request (inexact division, zero input, ...).
struct MathError : Error {
    explicit MathError(const std::string& what) : Error(what) {}
};

} // namespace oretel

#endif
