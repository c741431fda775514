#include "oretel/dfinite.hpp"

#include <cassert>

namespace oretel {

std::string ValidationReport::summary() const {
    if (ok) return "valid";
    std::string s;
    for (const auto& i : issues) {
        if (!s.empty()) s += "; ";
        s += i.check + ": " + i.detail;
    }
    return s;
}

DFiniteSystem::DFiniteSystem(FieldSpec field, OreSpec spec, int n, Poly u, std::vector<Poly> U,
                             Poly v, std::vector<Poly> V, std::vector<Poly> e,
                             std::optional<std::vector<OreOperator>> lifts)
    : field_(std::move(field)),
      spec_(spec),
      n_(n),
      u_(std::move(u)),
      v_(std::move(v)),
      U_(std::move(U)),
      V_(std::move(V)),
      e_(std::move(e)),
      lifts_(std::move(lifts)) {
    if (n_ < 1) throw ValidationError("dimension", "n must be >= 1");
    if (U_.size() != static_cast<size_t>(n_ * n_) || V_.size() != static_cast<size_t>(n_ * n_))
        throw ValidationError("matrices", "U and V must be n x n");
    if (e_.size() != static_cast<size_t>(n_)) throw ValidationError("vector", "e must have length n");
    if (u_.is_zero() || v_.is_zero()) throw ValidationError("denominator", "u and v must be nonzero");
    // canonicalize the denominators; the matrices absorb the content
    Rational cu = u_.content();
    u_ = u_.drop_content();
    if (cu != 1)
        for (Poly& p : U_) p = p * (Rational(1) / cu);
    Rational cv = v_.content();
    v_ = v_.drop_content();
    if (cv != 1)
        for (Poly& p : V_) p = p * (Rational(1) / cv);
    if (lifts_ && lifts_->size() != static_cast<size_t>(n_))
        throw ValidationError("lifts", "need exactly n lifting operators");
}

int DFiniteSystem::deg_y_U() const {
    int d = kNegInf;
    for (const Poly& p : U_) d = std::max(d, p.deg(kVarY));
    return d;
}

int DFiniteSystem::deg_y_V() const {
    int d = kNegInf;
    for (const Poly& p : V_) d = std::max(d, p.deg(kVarY));
    return d;
}

std::vector<RatFunc> vector_apply_dx(const std::vector<RatFunc>& w, const DFiniteSystem& sys) {
    assert(w.size() == static_cast<size_t>(sys.n()));
    const OreSpec& spec = sys.spec();
    std::vector<RatFunc> out(w.size());
    RatFunc uinv = RatFunc(1) / RatFunc(sys.u());
    std::vector<RatFunc> sw(w.size());
    for (size_t i = 0; i < w.size(); ++i) sw[i] = spec.sigma(w[i], kVarX, 1);
    for (int k = 0; k < sys.n(); ++k) {
        RatFunc acc;
        for (int j = 0; j < sys.n(); ++j) acc += sw[static_cast<size_t>(j)] * RatFunc(sys.U(j, k));
        out[static_cast<size_t>(k)] = acc * uinv + spec.delta(w[static_cast<size_t>(k)], kVarX);
    }
    return out;
}

std::vector<RatFunc> vector_apply_dy(const std::vector<RatFunc>& w, const DFiniteSystem& sys) {
    assert(w.size() == static_cast<size_t>(sys.n()));
    const OreSpec& spec = sys.spec();
    std::vector<RatFunc> out(w.size());
    RatFunc vinv = RatFunc(1) / RatFunc(sys.v());
    std::vector<RatFunc> sw(w.size());
    for (size_t i = 0; i < w.size(); ++i) sw[i] = spec.sigma(w[i], kVarY, 1);
    for (int k = 0; k < sys.n(); ++k) {
        RatFunc acc;
        for (int j = 0; j < sys.n(); ++j) acc += sw[static_cast<size_t>(j)] * RatFunc(sys.V(j, k));
        out[static_cast<size_t>(k)] = acc * vinv + spec.delta(w[static_cast<size_t>(k)], kVarY);
    }
    return out;
}

std::vector<RatFunc> op_apply_vector(const OreOperator& op, const std::vector<RatFunc>& w,
                                     const DFiniteSystem& sys) {
    std::vector<RatFunc> out(w.size());
    for (const auto& [ij, c] : op.terms()) {
        std::vector<RatFunc> cur = w;
        for (int j = 0; j < ij.second; ++j) cur = vector_apply_dy(cur, sys);
        for (int i = 0; i < ij.first; ++i) cur = vector_apply_dx(cur, sys);
        for (size_t k = 0; k < out.size(); ++k) out[k] += c * cur[k];
    }
    return out;
}

ValidationReport validate(const DFiniteSystem& sys) {
    ValidationReport rep;
    auto fail = [&](const std::string& check, const std::string& detail) {
        rep.ok = false;
        rep.issues.push_back({check, detail});
    };

    bool e_zero = true;
    for (const Poly& p : sys.e())
        if (!p.is_zero()) e_zero = false;
    if (e_zero) fail("admissibility", "e is the zero vector");

    // commutation (Dx Dy - Dy Dx) w = 0 on unit vectors
    for (int j = 0; j < sys.n(); ++j) {
        std::vector<RatFunc> unit(static_cast<size_t>(sys.n()));
        unit[static_cast<size_t>(j)] = RatFunc(1);
        std::vector<RatFunc> xy = vector_apply_dx(vector_apply_dy(unit, sys), sys);
        std::vector<RatFunc> yx = vector_apply_dy(vector_apply_dx(unit, sys), sys);
        for (int k = 0; k < sys.n(); ++k) {
            if (xy[static_cast<size_t>(k)] != yx[static_cast<size_t>(k)]) {
                fail("compatibility",
                     "(DxDy - DyDx) b_" + std::to_string(j + 1) + " != 0 at coordinate " +
                         std::to_string(k + 1));
                break;
            }
        }
        if (!rep.ok) break;
    }

    // differential case: the squarefree part of u must divide that of v
    if (sys.spec().kind(kVarX) == OreKind::derivation &&
        sys.spec().kind(kVarY) == OreKind::derivation) {
        Poly sfu(1), sfv(1);
        for (const auto& [f, m] : Poly::squarefree_decomposition(sys.u(), kVarY)) sfu *= f;
        for (const auto& [f, m] : Poly::squarefree_decomposition(sys.v(), kVarY)) sfv *= f;
        if (!Poly::try_divide(sfv, sfu, nullptr))
            fail("denominator-consistency",
                 "squarefree part of u does not divide the squarefree part of v");
    }

    if (sys.lifts()) {
        std::vector<RatFunc> ev(sys.e().size());
        for (size_t i = 0; i < ev.size(); ++i) ev[i] = RatFunc(sys.e()[i]);
        for (int i = 0; i < sys.n(); ++i) {
            std::vector<RatFunc> img = op_apply_vector((*sys.lifts())[static_cast<size_t>(i)], ev, sys);
            for (int k = 0; k < sys.n(); ++k) {
                RatFunc want = k == i ? RatFunc(1) : RatFunc();
                if (img[static_cast<size_t>(k)] != want) {
                    fail("lifts", "B_" + std::to_string(i + 1) + " e != unit vector " +
                                      std::to_string(i + 1));
                    break;
                }
            }
            if (!rep.ok) break;
        }
    }
    return rep;
}

void validate_or_throw(const DFiniteSystem& sys) {
    ValidationReport rep = validate(sys);
    if (!rep.ok) throw ValidationError(rep.issues.front().check, rep.issues.front().detail);
}

IterateTable iterate_dx_e(const DFiniteSystem& sys, int r) {
    assert(r >= 0);
    const OreSpec& spec = sys.spec();
    const int n = sys.n();
    const int gamma = std::max(sys.u().deg(kVarY), sys.deg_y_U());
    int deg_e = kNegInf;
    for (const Poly& p : sys.e()) deg_e = std::max(deg_e, p.deg(kVarY));

    IterateTable t;
    t.r = r;
    t.rows.push_back(sys.e());
    Poly ut; // sum_{j<i} delta_x(sigma_x^j(u))
    for (int i = 0; i < r; ++i) {
        const std::vector<Poly>& w = t.rows.back();
        Poly su = spec.sigma_poly(sys.u(), kVarX, i);
        std::vector<Poly> sw(w.size());
        for (size_t k = 0; k < w.size(); ++k) sw[k] = spec.sigma_poly(w[k], kVarX, 1);
        std::vector<Poly> next(w.size());
        for (int k = 0; k < n; ++k) {
            Poly acc;
            for (int j = 0; j < n; ++j) acc += sw[static_cast<size_t>(j)] * sys.U(j, k);
            acc += su * spec.delta_poly(w[static_cast<size_t>(k)], kVarX);
            acc -= ut * sw[static_cast<size_t>(k)];
            next[static_cast<size_t>(k)] = acc;
        }
        // Lemma-style degree bound, asserted on every produced row
        int bound = deg_e + (i + 1) * gamma;
        for (const Poly& p : next)
            if (!p.is_zero() && p.deg(kVarY) > bound)
                throw MathError("iterate: y-degree bound violated");
        t.rows.push_back(std::move(next));
        ut += spec.delta_poly(su, kVarX);
    }
    t.denominator = rising_factorial_poly(sys.u(), r, kVarX, spec);
    for (int i = 0; i <= r; ++i)
        t.rescale.push_back(
            rising_factorial_poly(spec.sigma_poly(sys.u(), kVarX, i), r - i, kVarX, spec));
    return t;
}

CompanionData companion_from_scalar(const OreOperator& L, const OreSpec& spec) {
    (void)spec;
    if (L.is_zero() || L.ord_x() < 1) throw MathError("companion form needs order >= 1 in Dx");
    if (L.ord_y() > 0) throw MathError("companion form: operator must not involve Dy");
    const int n = L.ord_x();
    // clear denominators
    Poly den(1);
    for (const auto& [ij, c] : L.terms()) {
        Poly g = Poly::gcd(den, c.den());
        den = den * Poly::divide_exact(c.den(), g);
    }
    std::vector<Poly> A(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        RatFunc a = L.coeff(i, 0) * RatFunc(den);
        A[static_cast<size_t>(i)] = a.as_poly();
    }
    CompanionData out;
    out.n = n;
    Rational c = A[static_cast<size_t>(n)].content();
    out.u = A[static_cast<size_t>(n)].drop_content();
    out.U.assign(static_cast<size_t>(n * n), Poly());
    for (int i = 0; i + 1 < n; ++i) out.U[static_cast<size_t>(i * n + i + 1)] = out.u;
    for (int j = 0; j < n; ++j)
        out.U[static_cast<size_t>((n - 1) * n + j)] = -A[static_cast<size_t>(j)] * (Rational(1) / c);
    out.e.assign(static_cast<size_t>(n), Poly());
    out.e[0] = Poly(1);
    return out;
}

} // namespace oretel
