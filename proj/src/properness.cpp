#include "oretel/properness.hpp"

#include <algorithm>
#include <cassert>

namespace oretel {

std::string factor_class_name(FactorClass c) {
    switch (c) {
        case FactorClass::x_only: return "x-only";
        case FactorClass::y_only: return "y-only";
        case FactorClass::integer_linear: return "integer-linear";
        case FactorClass::split_blocking: return "split-blocking";
    }
    return "?";
}

namespace {

int gcd_int(int a, int b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Largest divisor of w invariant under (x, y) -> (x + b, y - a), i.e. the
// part built from polynomials in a*x + b*y.
Poly invariant_part(const Poly& w, int a, int b) {
    Poly g = w.drop_content();
    int span = std::max(1, w.total_degree());
    Poly t = g;
    for (int j = 1; j <= span; ++j) {
        t = t.shifted(kVarX, b).shifted(kVarY, -a);
        g = Poly::gcd(g, t);
        if (!g.depends_on(kVarX) && !g.depends_on(kVarY)) return Poly(1);
    }
    return g;
}

// Interpret g, which is invariant under the (a,b)-translation, as a
// univariate polynomial G(s) in s = a*x + b*y; G is represented in the y
// slot. Returns nullopt if g is not of that shape.
std::optional<Poly> as_univariate_in_s(const Poly& g, int a, int b) {
    Poly G;
    if (b != 0) {
        Poly slice = g.subst_rational(kVarX, Rational(0));
        int d = slice.deg(kVarY);
        for (int k = 0; k <= d; ++k) {
            Poly ck = slice.coeff_wrt(kVarY, k);
            if (ck.is_zero()) continue;
            G += ck * rat_pow(Rational(1, b), static_cast<unsigned long>(k)) *
                 Poly::variable(kVarY, k);
        }
    } else {
        Poly slice = g.subst_rational(kVarY, Rational(0));
        int d = slice.deg(kVarX);
        for (int k = 0; k <= d; ++k) {
            Poly ck = slice.coeff_wrt(kVarX, k).drop_content();
            ck = slice.coeff_wrt(kVarX, k);
            if (ck.is_zero()) continue;
            G += ck * rat_pow(Rational(1, a), static_cast<unsigned long>(k)) *
                 Poly::variable(kVarY, k);
        }
    }
    // verify g == G(a x + b y)
    Poly s = Rational(a) * Poly::variable(kVarX) + Rational(b) * Poly::variable(kVarY);
    Poly check;
    int d = G.deg(kVarY);
    for (int k = d; k >= 0; --k) check = check * s + G.coeff_wrt(kVarY, k);
    if (check != g) return std::nullopt;
    return G;
}

// Rational roots of G (univariate in the y slot, coefficients may involve
// parameters) with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(Poly G) {
    std::vector<std::pair<Rational, int>> out;
    if (G.deg(kVarY) < 1) return out;
    // Collect candidates from a parameter-free "slice": group the terms by
    // their parameter monomial and take the gcd of the slices.
    std::map<Monomial, Poly> slices;
    for (const auto& [m, c] : G.terms()) {
        Monomial pm = m.without(kVarY);
        Poly& s = slices[pm];
        s += Poly::term(G.content() * Rational(c), Monomial::var(kVarY, m.deg(kVarY)));
    }
    Poly R;
    for (const auto& [pm, s] : slices) R = R.is_zero() ? s.drop_content() : Poly::gcd(R, s);
    if (R.deg(kVarY) < 1) return out;
    // rational root theorem on R
    Integer lead = R.leading_coeff_wrt(kVarY).constant_value().get_num();
    Integer trail(0);
    int low = 0;
    while (R.coeff_wrt(kVarY, low).is_zero()) ++low;
    if (low > 0) {
        // y^low divides: root 0
        int m = 0;
        Poly q, yv = Poly::variable(kVarY);
        while (Poly::try_divide(G, yv, &q)) {
            G = q;
            ++m;
        }
        if (m > 0) out.emplace_back(Rational(0), m);
    }
    trail = R.coeff_wrt(kVarY, low).constant_value().get_num();
    std::vector<Integer> ps, qs;
    auto divisors = [](const Integer& n) {
        std::vector<Integer> d;
        Integer a = abs(n);
        for (Integer i = 1; i * i <= a; ++i)
            if (a % i == 0) {
                d.push_back(i);
                d.push_back(a / i);
            }
        return d;
    };
    for (const Integer& p : divisors(trail))
        for (const Integer& q : divisors(lead))
            for (int sgn : {1, -1}) {
                Rational c(sgn * p, q);
                c.canonicalize();
                bool seen = false;
                for (auto& [r, m] : out)
                    if (r == c) seen = true;
                if (seen) continue;
                Poly lin = Poly::variable(kVarY) - Poly(c);
                Poly q2;
                int m = 0;
                while (Poly::try_divide(G, lin, &q2)) {
                    G = q2;
                    ++m;
                }
                if (m > 0) out.emplace_back(c, m);
            }
    return out;
}

} // namespace

IntegerLinearDecomposition integer_linear_decompose(const Poly& p) {
    IntegerLinearDecomposition out;
    out.remainder = p;
    if (p.is_zero() || p.is_constant()) return out;
    Poly w = p;
    int dx = std::max(0, p.deg(kVarX));
    int dy = std::max(0, p.deg(kVarY));
    for (int a = 0; a <= dx; ++a) {
        for (int b = (a == 0 ? 1 : -dy); b <= dy; ++b) {
            if (a == 0 && b != 1) continue;
            if (b == 0 && a != 1) continue;
            if (gcd_int(a, b) != 1) continue;
            if (w.is_constant()) break;
            Poly inv = invariant_part(w, a, b);
            if (inv.is_constant()) continue;
            auto G = as_univariate_in_s(inv, a, b);
            if (!G) continue;
            Poly s = Rational(a) * Poly::variable(kVarX) + Rational(b) * Poly::variable(kVarY);
            // degree-1 G: the whole invariant block is one linear factor
            if (G->deg(kVarY) == 1 && !G->leading_coeff_wrt(kVarY).is_constant()) continue;
            if (G->deg(kVarY) == 1) {
                Rational lc = G->leading_coeff_wrt(kVarY).constant_value();
                Poly c0 = G->coeff_wrt(kVarY, 0) * (Rational(1) / lc);
                Poly lin = s + c0;
                int m = 0;
                Poly q;
                while (Poly::try_divide(w, lin, &q)) {
                    w = q;
                    ++m;
                }
                if (m > 0) out.terms.push_back({a, b, RatFunc(c0), m});
                continue;
            }
            for (const auto& [c, mult] : rational_roots(*G)) {
                Poly lin = s + Poly(c);
                int m = 0;
                Poly q;
                while (m < mult && Poly::try_divide(w, lin, &q)) {
                    w = q;
                    ++m;
                }
                if (m > 0) out.terms.push_back({a, b, RatFunc(Poly(c)), m});
            }
        }
    }
    out.remainder = w;
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& s, const auto& t) {
        if (s.a != t.a) return s.a < t.a;
        if (s.b != t.b) return s.b < t.b;
        return Poly::cmp(s.c.num(), t.c.num()) < 0;
    });
    return out;
}

namespace {

// sigma_x^s(atom) == sigma_y^t(atom) modulo units for some 1 <= s, t != 0.
// Search bounds follow from the direction of the underlying linear form:
// s <= deg_y(atom), |t| <= deg_x(atom).
std::optional<std::pair<int, int>> recurrence_direction(const Poly& atom, const OreSpec& spec) {
    int smax = std::max(1, atom.deg(kVarY));
    int tmax = std::max(1, atom.deg(kVarX));
    for (int s = 1; s <= smax; ++s) {
        Poly xs = spec.sigma_normalized(atom, kVarX, s);
        for (int t = 1; t <= tmax; ++t) {
            if (spec.sigma_normalized(atom, kVarY, t) == xs) return std::make_pair(s, t);
            if (spec.sigma_normalized(atom, kVarY, -t) == xs) return std::make_pair(s, -t);
        }
    }
    return std::nullopt;
}

std::optional<IntegerLinearDecomposition::Term> as_linear_form(const Poly& atom) {
    if (atom.deg(kVarX) > 1 || atom.deg(kVarY) > 1 || atom.total_degree() > 1) return std::nullopt;
    Poly ax = atom.coeff_wrt(kVarX, 1);
    Poly by = atom.coeff_wrt(kVarY, 1);
    if (!ax.is_constant() || !by.is_constant()) return std::nullopt;
    Rational a = ax.constant_value() * atom.content();
    Rational b = by.constant_value() * atom.content();
    if (a.get_den() != 1 || b.get_den() != 1) return std::nullopt;
    if (!a.get_num().fits_sint_p() || !b.get_num().fits_sint_p()) return std::nullopt;
    Poly c = atom.coeff_wrt(kVarX, 0).coeff_wrt(kVarY, 0) * atom.content();
    return IntegerLinearDecomposition::Term{static_cast<int>(a.get_num().get_si()),
                                            static_cast<int>(b.get_num().get_si()), RatFunc(c), 1};
}

} // namespace

PropernessDecision is_y_proper(const Poly& u, const OreSpec& spec) {
    if (u.is_zero()) throw MathError("properness of the zero polynomial");
    PropernessDecision out;
    out.proper = true;

    SigmaType sx = spec.sigma_type(kVarX);
    SigmaType sy = spec.sigma_type(kVarY);

    FactorAtlas at = FactorAtlas::build({u}, kVarY, spec);
    const Poly& cof = at.cofactor(0);
    if (!cof.is_constant())
        out.classification.push_back({cof.drop_content(), FactorClass::x_only, 1, 0, 0, {}});

    for (size_t k = 0; k < at.atoms().size(); ++k) {
        const Poly& atom = at.atoms()[k];
        int mult = at.multiplicity(0, k);
        if (mult == 0) continue;
        ClassifiedFactor cf{atom, FactorClass::split_blocking, mult, 0, 0, {}};
        bool y_only = atom.deg(kVarX) == 0;
        if (y_only) {
            cf.cls = FactorClass::y_only;
        } else if (auto lin = as_linear_form(atom); lin && lin->b != 0) {
            cf.cls = FactorClass::integer_linear;
            cf.a = lin->a;
            cf.b = lin->b;
            cf.c = lin->c;
        } else if (sx != SigmaType::identity && sy != SigmaType::identity) {
            if (auto st = recurrence_direction(atom, spec)) {
                cf.cls = FactorClass::integer_linear;
                cf.a = std::abs(st->second);
                cf.b = st->second >= 0 ? st->first : -st->first;
            }
        }
        out.classification.push_back(cf);

        bool atom_ok = false;
        if (sx == SigmaType::identity && sy == SigmaType::identity) {
            atom_ok = true;
        } else if (sx == SigmaType::identity) {
            // fac(u, r, x) = u^r; only sigma_y-stable factors stay bounded
            atom_ok = !spec.sigma_is_identity(kVarY) &&
                      spec.sigma_normalized(atom, kVarY, 1) == atom;
        } else if (sy == SigmaType::identity) {
            // split case: the y-part must be free of x
            atom_ok = y_only;
        } else {
            atom_ok = !y_only && (cf.cls == FactorClass::integer_linear);
        }
        if (!atom_ok) {
            out.proper = false;
            if (!out.reason.empty()) out.reason += "; ";
            out.reason += "factor of class " + factor_class_name(cf.cls) +
                          " blocks y-properness";
        }
    }
    return out;
}

namespace {

int clamp0(int v) { return v < 0 ? 0 : v; }

int height_from_eta(const DFiniteSystem& sys, int eta) {
    int dv = sys.v().deg(kVarY);
    int dV = sys.deg_y_V();
    int m = std::max(dv - 1, is_neg_inf(dV) ? dv - 1 : dV);
    return clamp0(eta + m);
}

} // namespace

int compute_gamma(const DFiniteSystem& sys) {
    int dU = sys.deg_y_U();
    return clamp0(std::max(sys.u().deg(kVarY), is_neg_inf(dU) ? 0 : dU));
}

PropernessReport analyze_properness(const DFiniteSystem& sys, std::optional<int> phi_override) {
    PropernessReport rep;
    PropernessDecision dec = is_y_proper(sys.u(), sys.spec());
    rep.proper = dec.proper;
    rep.reason = dec.reason;
    rep.classification = dec.classification;
    rep.gamma = compute_gamma(sys);
    rep.phi = phi_bound(sys, phi_override);
    if (!rep.proper) return rep;

    const OreSpec& spec = sys.spec();
    // probe eta = deg_y of the left border of the unmatched part g, over a
    // window of r wide enough for every chain pattern to have emerged
    long spread = 0;
    {
        FactorAtlas at = FactorAtlas::build({sys.u(), sys.v()}, kVarY, spec);
        for (const auto& orb : at.orbits())
            if (!orb.slots.empty()) spread = std::max(spread, orb.slots.back().pos);
    }
    int rstab = static_cast<int>(std::min<long>(spread + 3, 24));
    int eta = 0;
    Witness wit1;
    std::vector<int> probes;
    for (int r = 1; r <= rstab; ++r) {
        Poly d = rising_factorial_poly(sys.u(), r, kVarX, spec);
        Witness w = match_decomposition(d, sys.v(), kVarY, spec);
        if (r == 1) wit1 = w;
        probes.push_back(w.g_border_deg);
        eta = std::max(eta, w.g_border_deg);
    }
    if (probes.size() >= 2 && probes.back() != probes[probes.size() - 2] &&
        rstab == 24)
        rep.eta_upper_bound_only = true;

    // certification at r = 1 and r = n * height + n
    check_witness(wit1, sys.u(), sys.v(), kVarY, spec);
    int height = height_from_eta(sys, eta);
    int rbig = sys.n() * height + sys.n();
    if (rbig > rstab) {
        Poly d = rising_factorial_poly(sys.u(), rbig, kVarX, spec);
        Witness w = match_decomposition(d, sys.v(), kVarY, spec);
        check_witness(w, d, sys.v(), kVarY, spec);
        if (w.g_border_deg > eta) {
            eta = w.g_border_deg;
            rep.eta_upper_bound_only = true;
            height = height_from_eta(sys, eta);
        }
    } else {
        Poly d = rising_factorial_poly(sys.u(), std::max(1, rbig), kVarX, spec);
        check_witness(match_decomposition(d, sys.v(), kVarY, spec), d, sys.v(), kVarY, spec);
    }
    if (sys.spec().sigma_is_identity(kVarX) && sys.spec().sigma_is_identity(kVarY) && eta != 0)
        throw MathError("eta must vanish when both sigmas are the identity");

    rep.eta = eta;
    rep.height = height;
    rep.witness_r1 = wit1;
    rep.order_bound = sys.n() * rep.height + rep.phi;
    return rep;
}

int compute_eta(const DFiniteSystem& sys) {
    PropernessReport rep = analyze_properness(sys);
    if (!rep.proper) throw MathError("eta undefined: u is not y-proper (" + rep.reason + ")");
    return rep.eta;
}

int compute_height(const DFiniteSystem& sys) {
    PropernessReport rep = analyze_properness(sys);
    if (!rep.proper) throw MathError("height undefined: u is not y-proper");
    return rep.height;
}

int phi_bound(const DFiniteSystem& sys, std::optional<int> phi_override) {
    if (phi_override) {
        if (*phi_override < 0 || *phi_override > sys.n())
            throw MathError("phi override must lie in [0, n]");
        return *phi_override;
    }
    return sys.n();
}

} // namespace oretel
