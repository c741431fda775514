#ifndef ORETEL_RATFUNC_HPP
#define ORETEL_RATFUNC_HPP

#include "oretel/poly.hpp"

namespace oretel {

// Reduced rational function in K(x, y). Normal form: gcd(num, den) = 1 and
// the denominator is in primitive integer form (content 1, positive leading
// coefficient); all rational content lives in the numerator.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& n, const Poly& d) { assign(n, d); }

    static RatFunc variable(int v) { return RatFunc(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }
    // pre: is_polynomial()
    const Poly& as_poly() const;
    // denominator free of x and y (a unit of K)
    bool den_is_unit() const { return !den_.depends_on(kVarX) && !den_.depends_on(kVarY); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;
    RatFunc pow(int k) const; // negative exponents allowed

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    int deg_num(int v) const { return num_.deg(v); }
    int deg_den(int v) const { return den_.deg(v); }
    bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }

private:
    void assign(const Poly& n, const Poly& d);
    Poly num_, den_;
};

inline RatFunc operator*(const Poly& p, const RatFunc& f) { return RatFunc(p) * f; }
inline RatFunc operator*(const RatFunc& f, const Poly& p) { return f * RatFunc(p); }

} // namespace oretel

#endif
