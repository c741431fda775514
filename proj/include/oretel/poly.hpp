#ifndef ORETEL_POLY_HPP
#define ORETEL_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "oretel/numeric.hpp"

namespace oretel {

// Variable slots. Parameters occupy indices 2, 3, ...
constexpr int kVarX = 0;
constexpr int kVarY = 1;
constexpr int kFirstParam = 2;

// Exponent vector with trailing zeros stripped.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) { trim(); }
    static Monomial var(int v, int k = 1) {
        std::vector<int> e(static_cast<size_t>(v) + 1, 0);
        e[static_cast<size_t>(v)] = k;
        return Monomial(std::move(e));
    }

    int deg(int v) const {
        return v < static_cast<int>(e_.size()) ? e_[static_cast<size_t>(v)] : 0;
    }
    int total() const {
        int t = 0;
        for (int k : e_) t += k;
        return t;
    }
    size_t width() const { return e_.size(); }
    bool is_one() const { return e_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divide_by(const Monomial& o) const; // this / o, pre: o | this
    Monomial pow(int k) const;
    Monomial without(int v) const; // exponent of v zeroed

    // Graded lexicographic, x > y > parameters.
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }
    std::vector<int> e_;
};

struct MonoGradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) < 0;
    }
};

// Sparse multivariate polynomial over Q in x, y and declared parameters.
// Normal form: `content * sum(terms)` where the stored integer coefficients
// are coprime and the graded-lex leading coefficient is positive. The zero
// polynomial has empty terms and content 0, so equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Integer, MonoGradedLex>;

    Poly() : content_(0) {}
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(const Integer& c) : Poly(Rational(c)) {}
    explicit Poly(const Rational& c);
    static Poly variable(int v, int k = 1);
    static Poly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    // pre: is_constant()
    Rational constant_value() const;

    const Rational& content() const { return content_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Degrees; kNegInf for the zero polynomial.
    int deg(int v) const;
    int total_degree() const;
    // Variables actually present.
    std::vector<int> variables() const;
    bool depends_on(int v) const { return deg(v) > 0; }
    // -2 when constant, -1 when more than one variable, else the variable.
    int single_variable() const;

    Rational coefficient(const Monomial& m) const;
    Poly coeff_wrt(int v, int k) const;   // coefficient of v^k, a poly in the other vars
    Poly leading_coeff_wrt(int v) const { return coeff_wrt(v, deg(v)); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;
    Poly pow(int k) const;

    bool operator==(const Poly& o) const {
        return content_ == o.content_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Deterministic total order (for canonical sorting of factor lists).
    static int cmp(const Poly& a, const Poly& b);

    // Exact division over Q[vars]; returns false if o does not divide.
    static bool try_divide(const Poly& a, const Poly& b, Poly* quotient);
    // pre: b | a ("inexact division" otherwise)
    static Poly divide_exact(const Poly& a, const Poly& b);

    // Pseudo-remainder w.r.t. v: lc(b)^k * a = q*b + r with deg_v(r) < deg_v(b).
    static Poly prem(const Poly& a, const Poly& b, int v);

    // Full multivariate gcd, primitive integer normal form (content 1, lc > 0).
    static Poly gcd(const Poly& a, const Poly& b);
    // gcd in K(other vars)[v]; content w.r.t. v stripped, then monic in v when
    // the leading coefficient is rational, primitive otherwise.
    static Poly gcd_wrt(const Poly& a, const Poly& b, int v);

    // Content/primitive part w.r.t. one variable (content = gcd of v-coefficients).
    Poly content_wrt(int v) const;
    Poly primitive_wrt(int v) const;

    // Canonical factor form: strip Q-content; monic in v if the v-leading
    // coefficient is rational, otherwise primitive with positive sign.
    Poly normalized_factor(int v) const;
    // Pure integer normal form: content forced to 1 (sign canonical).
    Poly drop_content() const;

    Poly derivative(int v) const;
    Poly shifted(int v, int by) const;              // v -> v + by
    Poly qscaled(int v, int qvar, int t) const;     // v -> q^t v, pre: t >= 0
    Poly subst_rational(int v, const Rational& c) const;

    // p = c * prod s_i^i with s_i squarefree, pairwise coprime, normalized;
    // the cofactor c is v-free. Yun's gcd chain; pre: p != 0.
    static std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p, int v);

private:
    void normalize(Rational pre_content, TermMap&& raw);
    static Poly from_raw(Rational pre_content, TermMap&& raw) {
        Poly p;
        p.normalize(std::move(pre_content), std::move(raw));
        return p;
    }

    Rational content_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

} // namespace oretel

#endif
