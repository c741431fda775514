#include "oretel/ore.hpp"

#include <cassert>
#include <random>

namespace oretel {

std::string kind_name(OreKind k) {
    switch (k) {
        case OreKind::derivation: return "derivation";
        case OreKind::shift: return "shift";
        case OreKind::forward_difference: return "forward_difference";
        case OreKind::q_shift: return "q_shift";
        case OreKind::q_difference: return "q_difference";
    }
    return "?";
}

OreKind kind_from_name(const std::string& s) {
    if (s == "derivation") return OreKind::derivation;
    if (s == "shift") return OreKind::shift;
    if (s == "forward_difference") return OreKind::forward_difference;
    if (s == "q_shift") return OreKind::q_shift;
    if (s == "q_difference") return OreKind::q_difference;
    throw ParseError("unknown Ore kind '" + s + "'");
}

static OreAction default_action(OreKind k) {
    switch (k) {
        case OreKind::derivation: return OreAction::delta;
        case OreKind::shift: return OreAction::sigma;
        case OreKind::forward_difference: return OreAction::delta;
        case OreKind::q_shift: return OreAction::sigma;
        case OreKind::q_difference: return OreAction::delta;
    }
    return OreAction::delta;
}

SigmaType OreSpec::sigma_type(int var) const {
    switch (kind(var)) {
        case OreKind::derivation: return SigmaType::identity;
        case OreKind::shift:
        case OreKind::forward_difference: return SigmaType::int_shift;
        case OreKind::q_shift:
        case OreKind::q_difference: return SigmaType::q_scale;
    }
    return SigmaType::identity;
}

Poly OreSpec::sigma_poly(const Poly& p, int var, int t) const {
    switch (sigma_type(var)) {
        case SigmaType::identity: return p;
        case SigmaType::int_shift: return p.shifted(var, t);
        case SigmaType::q_scale:
            if (t < 0) throw MathError("negative q-shift power on a polynomial");
            return p.qscaled(var, q_var_, t);
    }
    return p;
}

RatFunc OreSpec::sigma(const RatFunc& f, int var, int t) const {
    if (t == 0 || sigma_is_identity(var)) return f;
    if (sigma_type(var) == SigmaType::int_shift)
        return RatFunc(f.num().shifted(var, t), f.den().shifted(var, t));
    // q-scale: v -> q^t v; negative t via q-denominators
    int tp = t >= 0 ? t : -t;
    Poly n = f.num().qscaled(var, q_var_, tp);
    Poly d = f.den().qscaled(var, q_var_, tp);
    if (t >= 0) return RatFunc(n, d);
    // sigma^{-t}(f)(v) = f(v / q^{t}): scale exponents the other way by
    // multiplying through with q^{t * deg}.
    int dn = f.num().deg(var), dd = f.den().deg(var);
    Poly qn = Poly::variable(q_var_, tp * dn);
    Poly qd = Poly::variable(q_var_, tp * dd);
    // f(v/q^tp) = [num scaled with q^{-tp}] / [den scaled with q^{-tp}]
    // = (q^{tp*dd}/q^{tp*dn}) * num_rev / den_rev where rev multiplies the
    // coefficient of v^k by q^{tp*(d-k)}.
    Poly nrev, drev;
    for (int k = 0; k <= dn; ++k)
        nrev += f.num().coeff_wrt(var, k) * Poly::variable(var, k) * Poly::variable(q_var_, tp * (dn - k));
    for (int k = 0; k <= dd; ++k)
        drev += f.den().coeff_wrt(var, k) * Poly::variable(var, k) * Poly::variable(q_var_, tp * (dd - k));
    return RatFunc(nrev * qd, drev * qn);
}

Poly OreSpec::delta_poly(const Poly& p, int var) const {
    switch (kind(var)) {
        case OreKind::derivation: return p.derivative(var);
        case OreKind::shift:
        case OreKind::q_shift: return Poly();
        case OreKind::forward_difference: return p.shifted(var, 1) - p;
        case OreKind::q_difference: return p.qscaled(var, q_var_, 1) - p;
    }
    return Poly();
}

RatFunc OreSpec::delta(const RatFunc& f, int var) const {
    switch (kind(var)) {
        case OreKind::shift:
        case OreKind::q_shift: return RatFunc();
        case OreKind::forward_difference:
        case OreKind::q_difference: return sigma(f, var, 1) - f;
        case OreKind::derivation: break;
    }
    // delta(n/d) = (delta(n) d - n delta(d)) / (d sigma(d)); sigma = id here
    const Poly& n = f.num();
    const Poly& d = f.den();
    return RatFunc(n.derivative(var) * d - n * d.derivative(var), d * d);
}

Poly OreSpec::sigma_normalized(const Poly& p, int var, int t) const {
    if (p.is_zero()) return p;
    if (t == 0 || sigma_is_identity(var)) return p.drop_content();
    if (sigma_type(var) == SigmaType::int_shift) return p.shifted(var, t).drop_content();
    RatFunc f = sigma(RatFunc(p), var, t);
    assert(f.den_is_unit());
    return f.num().drop_content();
}

OreSpec OreSpec::make(OreKind kx, OreKind ky, const FieldSpec& field) {
    OreSpec s;
    s.kind_x_ = kx;
    s.kind_y_ = ky;
    s.action_x_ = default_action(kx);
    s.action_y_ = default_action(ky);
    bool needs_q = false;
    for (OreKind k : {kx, ky})
        if (k == OreKind::q_shift || k == OreKind::q_difference) needs_q = true;
    if (needs_q) {
        s.q_var_ = field.q_index();
        if (s.q_var_ < 0)
            throw ValidationError("algebra", "q_shift/q_difference requires a parameter named q");
    }

    // Spot-check the degree assumptions and sigma commutation.
    std::mt19937_64 rng(0x5eedu);
    auto rand_poly = [&]() {
        Poly p;
        std::uniform_int_distribution<int> dx(0, 2), dy(0, 2), dc(-4, 4);
        for (int t = 0; t < 4; ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            p += Rational(c) * Poly::variable(kVarX, dx(rng)) * Poly::variable(kVarY, dy(rng));
        }
        return p;
    };
    for (int it = 0; it < 8; ++it) {
        Poly p = rand_poly();
        if (p.is_zero()) continue;
        for (int v : {kVarX, kVarY}) {
            int other = v == kVarX ? kVarY : kVarX;
            Poly sp = s.sigma_poly(p, v, 1);
            if (sp.deg(v) != p.deg(v) || sp.deg(other) != p.deg(other))
                throw ValidationError("algebra", "sigma degree assumption violated");
            Poly dp = s.delta_poly(p, v);
            // q-difference keeps the degree in its own variable; every other
            // delta strictly lowers it.
            int allowance = s.kind(v) == OreKind::q_difference ? 0 : 1;
            if (!dp.is_zero() && (dp.deg(v) > p.deg(v) - allowance || dp.deg(other) > p.deg(other)))
                throw ValidationError("algebra", "delta degree assumption violated");
        }
        Poly xy = s.sigma_poly(s.sigma_poly(p, kVarX, 1), kVarY, 1);
        Poly yx = s.sigma_poly(s.sigma_poly(p, kVarY, 1), kVarX, 1);
        if (xy != yx) throw ValidationError("algebra", "sigma_x sigma_y != sigma_y sigma_x");
    }
    return s;
}

// ------------------------------------------------------------- OreOperator

OreOperator OreOperator::monomial(int i, int j, const RatFunc& c) {
    OreOperator t;
    t.set(i, j, c);
    return t;
}

int OreOperator::ord_x() const {
    int d = kNegInf;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first);
    return d;
}

int OreOperator::ord_y() const {
    int d = kNegInf;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.second);
    return d;
}

RatFunc OreOperator::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RatFunc() : it->second;
}

void OreOperator::set(int i, int j, const RatFunc& c) {
    assert(i >= 0 && j >= 0);
    if (c.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = c;
}

OreOperator OreOperator::operator-() const {
    OreOperator r(*this);
    for (auto& [ij, c] : r.terms_) c = -c;
    return r;
}

OreOperator OreOperator::operator+(const OreOperator& o) const {
    OreOperator r(*this);
    for (const auto& [ij, c] : o.terms_) r.set(ij.first, ij.second, r.coeff(ij.first, ij.second) + c);
    return r;
}

OreOperator OreOperator::operator-(const OreOperator& o) const { return *this + (-o); }

OreOperator OreOperator::scale_left(const RatFunc& c) const {
    OreOperator r;
    if (c.is_zero()) return r;
    for (const auto& [ij, k] : terms_) r.set(ij.first, ij.second, c * k);
    return r;
}

std::vector<RatFunc> push_through(int var, int k, const RatFunc& f, const OreSpec& spec) {
    std::vector<RatFunc> cur{f};
    for (int step = 0; step < k; ++step) {
        std::vector<RatFunc> next(cur.size() + 1);
        for (size_t m = 0; m < cur.size(); ++m) {
            if (cur[m].is_zero()) continue;
            next[m + 1] += spec.sigma(cur[m], var, 1);
            next[m] += spec.delta(cur[m], var);
        }
        cur = std::move(next);
    }
    return cur;
}

OreOperator op_multiply(const OreOperator& a, const OreOperator& b, const OreSpec& spec) {
    OreOperator r;
    for (const auto& [ij1, c1] : a.terms()) {
        for (const auto& [ij2, c2] : b.terms()) {
            // Dx^i1 Dy^j1 c2 = sum over (l, m) of coeff Dx^l Dy^m
            std::vector<RatFunc> ys = push_through(kVarY, ij1.second, c2, spec);
            for (size_t m = 0; m < ys.size(); ++m) {
                if (ys[m].is_zero()) continue;
                std::vector<RatFunc> xs = push_through(kVarX, ij1.first, ys[m], spec);
                for (size_t l = 0; l < xs.size(); ++l) {
                    if (xs[l].is_zero()) continue;
                    int i = static_cast<int>(l) + ij2.first;
                    int j = static_cast<int>(m) + ij2.second;
                    r.set(i, j, r.coeff(i, j) + c1 * xs[l]);
                }
            }
        }
    }
    return r;
}

OreOperator op_pow(const OreOperator& a, int k, const OreSpec& spec) {
    assert(k >= 0);
    OreOperator r(RatFunc(1));
    OreOperator b(a);
    while (k > 0) {
        if (k & 1) r = op_multiply(r, b, spec);
        k >>= 1;
        if (k) b = op_multiply(b, b, spec);
    }
    return r;
}

RatFunc op_apply_rat(const OreOperator& a, const RatFunc& f, const OreSpec& spec) {
    auto act = [&](int var, const RatFunc& g) {
        return spec.action(var) == OreAction::sigma ? spec.sigma(g, var, 1) : spec.delta(g, var);
    };
    RatFunc out;
    for (const auto& [ij, c] : a.terms()) {
        RatFunc g = f;
        for (int j = 0; j < ij.second; ++j) g = act(kVarY, g);
        for (int i = 0; i < ij.first; ++i) g = act(kVarX, g);
        out += c * g;
    }
    return out;
}

} // namespace oretel
