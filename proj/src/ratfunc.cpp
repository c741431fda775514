#include "oretel/ratfunc.hpp"

namespace oretel {

void RatFunc::assign(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw MathError("zero denominator");
    if (n.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(n, d);
    Poly nn = Poly::divide_exact(n, g);
    Poly dd = Poly::divide_exact(d, g);
    // push all rational content into the numerator, canonical sign on den
    Rational dc = dd.content();
    num_ = nn * (Rational(1) / dc);
    den_ = dd.drop_content();
}

const Poly& RatFunc::as_poly() const {
    if (!is_polynomial()) throw MathError("not a polynomial");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    Poly g = Poly::gcd(den_, o.den_);
    Poly da = Poly::divide_exact(den_, g);
    Poly db = Poly::divide_exact(o.den_, g);
    return RatFunc(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-cancel before multiplying
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly n1 = Poly::divide_exact(num_, g1);
    Poly d2 = Poly::divide_exact(o.den_, g1);
    Poly n2 = Poly::divide_exact(o.num_, g2);
    Poly d1 = Poly::divide_exact(den_, g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc r(1);
    RatFunc b(*this);
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

} // namespace oretel
