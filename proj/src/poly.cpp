#include "oretel/poly.hpp"

#include <algorithm>
#include <cassert>

namespace oretel {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> e(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < e_.size(); ++i) e[i] += e_[i];
    for (size_t i = 0; i < o.e_.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    std::vector<int> e(e_);
    for (size_t i = 0; i < o.e_.size(); ++i) e[i] -= o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
    std::vector<int> e(e_);
    for (int& x : e) x *= k;
    return Monomial(std::move(e));
}

Monomial Monomial::without(int v) const {
    std::vector<int> e(e_);
    if (v < static_cast<int>(e.size())) e[static_cast<size_t>(v)] = 0;
    return Monomial(std::move(e));
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    size_t n = std::max(a.e_.size(), b.e_.size());
    for (size_t i = 0; i < n; ++i) {
        int ea = i < a.e_.size() ? a.e_[i] : 0;
        int eb = i < b.e_.size() ? b.e_[i] : 0;
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) : content_(c) {
    if (content_ != 0) terms_.emplace(Monomial(), Integer(1));
}

Poly Poly::variable(int v, int k) {
    return term(Rational(1), Monomial::var(v, k));
}

Poly Poly::term(const Rational& c, const Monomial& m) {
    Poly p;
    if (c != 0) {
        p.content_ = c;
        p.terms_.emplace(m, Integer(1));
    }
    return p;
}

void Poly::normalize(Rational pre_content, TermMap&& raw) {
    for (auto it = raw.begin(); it != raw.end();)
        it = it->second == 0 ? raw.erase(it) : std::next(it);
    if (raw.empty() || pre_content == 0) {
        content_ = 0;
        terms_.clear();
        return;
    }
    Integer g(0);
    for (const auto& [m, c] : raw) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    // sign from the graded-lex leading coefficient
    if (raw.rbegin()->second < 0) g = -g;
    if (g != 1) {
        for (auto& [m, c] : raw) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            c = q;
        }
    }
    content_ = pre_content * Rational(g);
    content_.canonicalize();
    terms_ = std::move(raw);
}

Rational Poly::constant_value() const {
    if (is_zero()) return Rational(0);
    assert(is_constant());
    return content_ * Rational(terms_.begin()->second);
}

int Poly::deg(int v) const {
    if (is_zero()) return kNegInf;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(v));
    return d;
}

int Poly::total_degree() const {
    if (is_zero()) return kNegInf;
    return terms_.rbegin()->first.total();
}

std::vector<int> Poly::variables() const {
    size_t w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.width());
    std::vector<int> out;
    for (size_t v = 0; v < w; ++v)
        if (deg(static_cast<int>(v)) > 0) out.push_back(static_cast<int>(v));
    return out;
}

int Poly::single_variable() const {
    auto vs = variables();
    if (vs.empty()) return -2;
    return vs.size() == 1 ? vs[0] : -1;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Rational(0);
    return content_ * Rational(it->second);
}

Poly Poly::coeff_wrt(int v, int k) const {
    TermMap raw;
    for (const auto& [m, c] : terms_)
        if (m.deg(v) == k) raw.emplace(m.without(v), c);
    return from_raw(content_, std::move(raw));
}

Poly Poly::operator-() const {
    Poly p(*this);
    p.content_ = -p.content_;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Rational g = rat_gcd(content_, o.content_);
    Rational sa = content_ / g, sb = o.content_ / g;
    sa.canonicalize();
    sb.canonicalize();
    assert(sa.get_den() == 1 && sb.get_den() == 1);
    const Integer fa = sa.get_num(), fb = sb.get_num();
    TermMap raw(terms_);
    if (fa != 1)
        for (auto& [m, c] : raw) c *= fa;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = raw.emplace(m, c * fb);
        if (!inserted) it->second += c * fb;
    }
    return from_raw(g, std::move(raw));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    // dense fast path for univariate operands in the same variable
    int va = single_variable(), vb = o.single_variable();
    if (va >= -2 && vb >= -2 && va != -1 && vb != -1 && (va == vb || va == -2 || vb == -2)) {
        int v = va >= 0 ? va : vb;
        if (v >= 0) {
            int da = deg(v), db = o.deg(v);
            std::vector<Integer> A(static_cast<size_t>(da) + 1), B(static_cast<size_t>(db) + 1),
                C(static_cast<size_t>(da + db) + 1);
            for (const auto& [m, c] : terms_) A[static_cast<size_t>(m.deg(v))] = c;
            for (const auto& [m, c] : o.terms_) B[static_cast<size_t>(m.deg(v))] = c;
            for (int i = 0; i <= da; ++i) {
                if (A[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; j <= db; ++j) {
                    if (B[static_cast<size_t>(j)] == 0) continue;
                    C[static_cast<size_t>(i + j)] += A[static_cast<size_t>(i)] * B[static_cast<size_t>(j)];
                }
            }
            TermMap raw;
            for (int k = 0; k <= da + db; ++k)
                if (C[static_cast<size_t>(k)] != 0)
                    raw.emplace(k == 0 ? Monomial() : Monomial::var(v, k),
                                std::move(C[static_cast<size_t>(k)]));
            return from_raw(content_ * o.content_, std::move(raw));
        }
    }
    TermMap raw;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            Integer c = ca * cb;
            auto [it, inserted] = raw.emplace(std::move(m), std::move(c));
            if (!inserted) it->second += ca * cb;
        }
    }
    return from_raw(content_ * o.content_, std::move(raw));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly p(*this);
    p.content_ *= c;
    p.content_.canonicalize();
    return p;
}

Poly Poly::pow(int k) const {
    assert(k >= 0);
    Poly r(1);
    Poly b(*this);
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        int c = Monomial::cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (a.content_ != b.content_) return a.content_ < b.content_ ? -1 : 1;
    return 0;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly* quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        if (quotient) *quotient = Poly();
        return true;
    }
    // dense synthetic division when both are univariate in the same variable
    int va = a.single_variable(), vb = b.single_variable();
    if (vb == -2) {
        if (quotient) *quotient = a * (Rational(1) / b.constant_value());
        return true;
    }
    if (va == vb && va >= 0) {
        int v = va;
        int da = a.deg(v), db = b.deg(v);
        if (da < db) return false;
        std::vector<Rational> A(static_cast<size_t>(da) + 1), B(static_cast<size_t>(db) + 1);
        for (const auto& [m, c] : a.terms_) A[static_cast<size_t>(m.deg(v))] = a.content_ * Rational(c);
        for (const auto& [m, c] : b.terms_) B[static_cast<size_t>(m.deg(v))] = b.content_ * Rational(c);
        std::vector<Rational> Q(static_cast<size_t>(da - db) + 1);
        for (int k = da - db; k >= 0; --k) {
            Rational q = A[static_cast<size_t>(k + db)] / B[static_cast<size_t>(db)];
            q.canonicalize();
            Q[static_cast<size_t>(k)] = q;
            if (q != 0)
                for (int j = 0; j <= db; ++j)
                    A[static_cast<size_t>(k + j)] -= q * B[static_cast<size_t>(j)];
        }
        for (int j = 0; j < db; ++j)
            if (A[static_cast<size_t>(j)] != 0) return false;
        if (quotient) {
            Poly q;
            for (int k = 0; k <= da - db; ++k)
                if (Q[static_cast<size_t>(k)] != 0)
                    q += term(Q[static_cast<size_t>(k)], k == 0 ? Monomial() : Monomial::var(v, k));
            *quotient = q;
        }
        return true;
    }
    // generic sparse long division by the graded-lex leading term
    Poly r(a);
    Poly q;
    const Monomial& ltb = b.terms_.rbegin()->first;
    const Rational lcb = b.content_ * Rational(b.terms_.rbegin()->second);
    while (!r.is_zero()) {
        const Monomial& ltr = r.terms_.rbegin()->first;
        if (!ltb.divides(ltr)) return false;
        Rational c = (r.content_ * Rational(r.terms_.rbegin()->second)) / lcb;
        c.canonicalize();
        Poly t = term(c, ltr.divide_by(ltb));
        q += t;
        r -= t * b;
    }
    if (quotient) *quotient = q;
    return true;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
    Poly q;
    if (!try_divide(a, b, &q)) throw MathError("inexact division");
    return q;
}

Poly Poly::prem(const Poly& a, const Poly& b, int v) {
    assert(!b.is_zero());
    int db = b.deg(v);
    if (db == 0) return Poly();
    Poly r(a);
    Poly lb = b.leading_coeff_wrt(v);
    int dr = r.deg(v);
    while (!r.is_zero() && dr >= db) {
        Poly lr = r.coeff_wrt(v, dr);
        r = lb * r - lr * Poly::variable(v, dr - db) * b;
        int nd = r.deg(v);
        assert(r.is_zero() || nd < dr);
        dr = nd;
    }
    return r;
}

Poly Poly::content_wrt(int v) const {
    if (is_zero()) return Poly();
    Poly g;
    for (int k = 0; k <= deg(v); ++k) {
        Poly c = coeff_wrt(v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.drop_content() : gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly Poly::primitive_wrt(int v) const {
    if (is_zero()) return Poly();
    Poly c = content_wrt(v);
    return divide_exact(*this, c).drop_content();
}

Poly Poly::drop_content() const {
    if (is_zero()) return Poly();
    Poly p(*this);
    p.content_ = 1;
    return p;
}

Poly Poly::normalized_factor(int v) const {
    if (is_zero()) return Poly();
    Poly p = drop_content();
    Poly lc = p.leading_coeff_wrt(v);
    if (lc.is_constant()) return p * (Rational(1) / lc.constant_value());
    return p;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.drop_content();
    if (b.is_zero()) return a.drop_content();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    auto va = a.variables();
    auto vb = b.variables();
    int v = std::min(va.front(), vb.front());
    if (!a.depends_on(v) || !b.depends_on(v)) {
        // v occurs in only one of them: gcd lives in the v-free content
        const Poly& with = a.depends_on(v) ? a : b;
        const Poly& wout = a.depends_on(v) ? b : a;
        return gcd(with.content_wrt(v), wout);
    }
    Poly ca = a.content_wrt(v), cb = b.content_wrt(v);
    Poly cg = gcd(ca, cb);
    Poly p = divide_exact(a, ca).drop_content();
    Poly q = divide_exact(b, cb).drop_content();
    if (p.deg(v) < q.deg(v)) std::swap(p, q);
    // primitive PRS
    while (true) {
        Poly r = prem(p, q, v);
        if (r.is_zero()) break;
        if (r.deg(v) == 0) {
            q = Poly(1);
            break;
        }
        p = q;
        q = r.primitive_wrt(v);
    }
    Poly g = q.is_constant() ? Poly(1) : q.primitive_wrt(v);
    return (cg * g).drop_content();
}

Poly Poly::gcd_wrt(const Poly& a, const Poly& b, int v) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& o = a.is_zero() ? b : a;
        if (!o.depends_on(v)) return Poly(1);
        return o.primitive_wrt(v).normalized_factor(v);
    }
    if (!a.depends_on(v) || !b.depends_on(v)) return Poly(1);
    Poly g = gcd(a.primitive_wrt(v), b.primitive_wrt(v));
    if (!g.depends_on(v)) return Poly(1);
    return g.primitive_wrt(v).normalized_factor(v);
}

Poly Poly::derivative(int v) const {
    TermMap raw;
    for (const auto& [m, c] : terms_) {
        int k = m.deg(v);
        if (k == 0) continue;
        Monomial dm = m.divide_by(Monomial::var(v));
        auto [it, inserted] = raw.emplace(std::move(dm), c * k);
        if (!inserted) it->second += c * k;
    }
    return from_raw(content_, std::move(raw));
}

Poly Poly::shifted(int v, int by) const {
    if (by == 0 || !depends_on(v)) return *this;
    // Horner in v with polynomial coefficients
    int d = deg(v);
    Poly acc;
    Poly vimage = Poly::variable(v) + Poly(by);
    for (int k = d; k >= 0; --k) {
        acc = acc * vimage + coeff_wrt(v, k);
    }
    return acc;
}

Poly Poly::qscaled(int v, int qvar, int t) const {
    assert(t >= 0);
    if (t == 0) return *this;
    TermMap raw;
    for (const auto& [m, c] : terms_) {
        int k = m.deg(v);
        Monomial nm = m * Monomial::var(qvar, t * k);
        raw.emplace(std::move(nm), c);
    }
    return from_raw(content_, std::move(raw));
}

Poly Poly::subst_rational(int v, const Rational& c) const {
    if (!depends_on(v)) return *this;
    int d = deg(v);
    Poly acc;
    for (int k = d; k >= 0; --k) {
        acc = acc * c + coeff_wrt(v, k);
    }
    return acc;
}

std::vector<std::pair<Poly, int>> Poly::squarefree_decomposition(const Poly& p, int v) {
    if (p.is_zero()) throw MathError("squarefree decomposition of 0");
    std::vector<std::pair<Poly, int>> out;
    if (!p.depends_on(v)) return out;
    // Yun's algorithm on the v-primitive part
    Poly f = p.primitive_wrt(v);
    Poly fp = f.derivative(v);
    Poly a = gcd(f, fp);
    Poly b = divide_exact(f, a);
    Poly c = divide_exact(fp, a);
    Poly d = (c - b.derivative(v)).drop_content();
    int i = 1;
    while (b.depends_on(v)) {
        Poly s = gcd(b, d);
        if (s.depends_on(v)) out.emplace_back(s.normalized_factor(v), i);
        b = divide_exact(b, s);
        c = divide_exact(d, s);
        d = (c - b.derivative(v)).drop_content();
        ++i;
    }
    return out;
}

} // namespace oretel
