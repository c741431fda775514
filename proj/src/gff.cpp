#include "oretel/gff.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace oretel {

RatFunc rising_factorial(const RatFunc& a, int i, int var, const OreSpec& spec) {
    assert(i >= 0);
    RatFunc r(1);
    RatFunc cur = a;
    for (int j = 0; j < i; ++j) {
        r *= cur;
        if (j + 1 < i) cur = spec.sigma(cur, var, 1);
    }
    return r;
}

Poly rising_factorial_poly(const Poly& a, int i, int var, const OreSpec& spec) {
    assert(i >= 0);
    Poly r(1);
    Poly cur = a;
    for (int j = 0; j < i; ++j) {
        r *= cur;
        if (j + 1 < i) cur = spec.sigma_poly(cur, var, 1);
    }
    return r;
}

// ------------------------------------------------------------- FactorAtlas

std::optional<long> FactorAtlas::sigma_offset(const Poly& a, const Poly& b, int var,
                                              const OreSpec& spec) {
    switch (spec.sigma_type(var)) {
        case SigmaType::identity:
            if (a == b) return 0;
            return std::nullopt;
        case SigmaType::int_shift: {
            int d = a.deg(var);
            if (d != b.deg(var) || d <= 0) return std::nullopt;
            if (a == b) return 0;
            Poly lca = a.leading_coeff_wrt(var);
            if (lca != b.leading_coeff_wrt(var)) return std::nullopt;
            // coeff of var^{d-1} drifts by t*d*lc under sigma^t
            Poly diff = b.coeff_wrt(var, d - 1) - a.coeff_wrt(var, d - 1);
            Poly step = Rational(d) * lca;
            Poly quot;
            if (!Poly::try_divide(diff, step, &quot) || !quot.is_constant()) return std::nullopt;
            Rational t = quot.constant_value();
            if (t.get_den() != 1) return std::nullopt;
            long ti = t.get_num().get_si();
            if (spec.sigma_normalized(a, var, static_cast<int>(ti)) == b) return ti;
            return std::nullopt;
        }
        case SigmaType::q_scale: {
            if (a.deg(var) != b.deg(var)) return std::nullopt;
            if (a == b) return 0;
            for (int t = 1; t <= 12; ++t) {
                if (spec.sigma_normalized(a, var, t) == b) return t;
                if (spec.sigma_normalized(a, var, -t) == b) return -t;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

FactorAtlas FactorAtlas::build(const std::vector<Poly>& inputs, int var, const OreSpec& spec) {
    FactorAtlas at;
    at.var_ = var;
    at.spec_ = spec;

    // squarefree basis of the var-positive parts
    std::vector<Poly> pool;
    auto add_piece = [&](const Poly& p) {
        if (!p.depends_on(var)) return;
        Poly n = p.primitive_wrt(var).drop_content();
        for (const Poly& q : pool)
            if (q == n) return;
        pool.push_back(n);
    };
    int span = 4;
    for (const Poly& p : inputs) {
        if (p.is_zero()) throw MathError("factor atlas of the zero polynomial");
        if (p.depends_on(var)) span += p.deg(var);
        for (const auto& [f, m] : Poly::squarefree_decomposition(p, var)) add_piece(f);
    }

    // refine to a pairwise coprime basis, then against sigma-translates so
    // that distinct atoms never meet any translate of another atom
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < pool.size() && !changed; ++i) {
            for (size_t j = 0; j < pool.size() && !changed; ++j) {
                if (i == j) continue;
                Poly g = Poly::gcd(pool[i], pool[j]);
                if (!g.depends_on(var)) continue;
                if (g == pool[i]) { // pool[i] divides pool[j]
                    pool[j] = Poly::divide_exact(pool[j], g).primitive_wrt(var).drop_content();
                    if (!pool[j].depends_on(var)) pool.erase(pool.begin() + static_cast<long>(j));
                } else {
                    Poly rest = Poly::divide_exact(pool[i], g).primitive_wrt(var).drop_content();
                    pool[i] = g.primitive_wrt(var).drop_content();
                    if (rest.depends_on(var)) pool.push_back(rest);
                }
                changed = true;
            }
        }
        if (changed || spec.sigma_is_identity(var)) continue;
        for (size_t i = 0; i < pool.size() && !changed; ++i) {
            for (size_t j = 0; j < pool.size() && !changed; ++j) {
                for (int t = 1; t <= span && !changed; ++t) {
                    for (int sgn : {1, -1}) {
                        Poly sb = spec.sigma_normalized(pool[j], var, sgn * t);
                        Poly g = Poly::gcd(pool[i], sb);
                        if (!g.depends_on(var) || g == pool[i]) continue;
                        Poly rest = Poly::divide_exact(pool[i], g).primitive_wrt(var).drop_content();
                        pool[i] = g.primitive_wrt(var).drop_content();
                        if (rest.depends_on(var)) pool.push_back(rest);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const Poly& a, const Poly& b) { return Poly::cmp(a, b) < 0; });
    at.atoms_ = pool;

    // multiplicities by repeated exact division
    for (const Poly& p : inputs) {
        std::vector<int> m(pool.size(), 0);
        Poly w = p;
        for (size_t k = 0; k < pool.size(); ++k) {
            Poly q;
            while (Poly::try_divide(w, pool[k], &q)) {
                w = q;
                ++m[k];
            }
        }
        if (w.depends_on(var))
            throw MathError("factor atlas: residue still depends on the main variable");
        at.mult_.push_back(std::move(m));
        at.cofactor_.push_back(w);
    }

    // sigma-orbits with positions
    std::vector<bool> assigned(pool.size(), false);
    for (size_t i = 0; i < pool.size(); ++i) {
        if (assigned[i]) continue;
        Orbit orb;
        orb.fixed = !spec.sigma_is_identity(var) &&
                    spec.sigma_normalized(pool[i], var, 1) == pool[i];
        orb.slots.push_back({0, i});
        assigned[i] = true;
        if (!orb.fixed && !spec.sigma_is_identity(var)) {
            for (size_t j = i + 1; j < pool.size(); ++j) {
                if (assigned[j]) continue;
                auto t = sigma_offset(pool[i], pool[j], var, spec);
                if (t) {
                    orb.slots.push_back({*t, j});
                    assigned[j] = true;
                }
            }
        }
        long lo = orb.slots.front().pos;
        for (const auto& s : orb.slots) lo = std::min(lo, s.pos);
        for (auto& s : orb.slots) s.pos -= lo;
        std::sort(orb.slots.begin(), orb.slots.end(),
                  [](const OrbitSlot& a, const OrbitSlot& b) { return a.pos < b.pos; });
        at.orbits_.push_back(std::move(orb));
    }
    return at;
}

// --------------------------------------------------------------------- GFF

GFFDecomposition gff(const Poly& p, int var, const OreSpec& spec) {
    if (p.is_zero()) throw MathError("gff of the zero polynomial");
    GFFDecomposition out;
    if (!p.depends_on(var)) {
        out.content = RatFunc(p);
        return out;
    }
    FactorAtlas at = FactorAtlas::build({p}, var, spec);

    // caps[orbit] maps position -> remaining multiplicity
    std::vector<std::map<long, int>> caps(at.orbits().size());
    int mmax = 1;
    for (size_t o = 0; o < at.orbits().size(); ++o) {
        for (const auto& slot : at.orbits()[o].slots) {
            int m = at.multiplicity(0, slot.atom);
            if (m > 0) caps[o][slot.pos] = m;
        }
        if (at.orbits()[o].fixed) {
            for (const auto& [pos, m] : caps[o]) mmax = std::max(mmax, m);
        } else {
            // longest run of consecutive occupied positions
            int run = 0;
            long prev = 0;
            bool first = true;
            for (const auto& [pos, m] : caps[o]) {
                run = (!first && pos == prev + 1) ? run + 1 : 1;
                mmax = std::max(mmax, run);
                prev = pos;
                first = false;
            }
        }
    }

    std::map<int, Poly> entries;
    for (int m = mmax; m >= 1; --m) {
        Poly q(1);
        for (size_t o = 0; o < at.orbits().size(); ++o) {
            if (at.orbits()[o].fixed) {
                for (auto& [pos, cap] : caps[o]) {
                    int mu = cap / m;
                    if (mu > 0) {
                        q *= at.atoms()[at.orbits()[o].slots.front().atom].pow(mu);
                        cap -= mu * m;
                    }
                }
                continue;
            }
            auto& cm = caps[o];
            for (auto it = cm.begin(); it != cm.end(); ++it) {
                while (it->second > 0) {
                    int mu = it->second;
                    for (long j = 1; j < m; ++j) {
                        auto jt = cm.find(it->first + j);
                        mu = std::min(mu, jt == cm.end() ? 0 : jt->second);
                        if (mu == 0) break;
                    }
                    if (mu == 0) break;
                    size_t atom = SIZE_MAX;
                    for (const auto& slot : at.orbits()[o].slots)
                        if (slot.pos == it->first) atom = slot.atom;
                    assert(atom != SIZE_MAX);
                    q *= at.atoms()[atom].pow(mu);
                    for (long j = 0; j < m; ++j) cm[it->first + j] -= mu;
                }
            }
        }
        if (!q.is_constant()) entries.emplace(m, q.normalized_factor(var));
    }
    Poly assembled(1);
    for (const auto& [m, f] : entries) {
        out.factors.push_back({f, m});
        assembled *= rising_factorial_poly(f, m, var, spec);
    }
    out.content = RatFunc(p) / RatFunc(assembled);
    if (out.content.depends_on(var)) throw MathError("gff: content not free of the variable");
    return out;
}

RatFunc gff_reassemble(const GFFDecomposition& d, int var, const OreSpec& spec) {
    RatFunc r = d.content;
    for (const auto& e : d.factors) r *= RatFunc(rising_factorial_poly(e.factor, e.index, var, spec));
    return r;
}

Poly left_border(const GFFDecomposition& d) {
    Poly b(1);
    for (const auto& e : d.factors) b *= e.factor;
    return b;
}

Poly right_border(const GFFDecomposition& d, int var, const OreSpec& spec) {
    Poly b(1);
    for (const auto& e : d.factors) b *= spec.sigma_poly(e.factor, var, e.index - 1);
    return b;
}

Poly left_border(const Poly& p, int var, const OreSpec& spec) {
    return left_border(gff(p, var, spec));
}

Poly right_border(const Poly& p, int var, const OreSpec& spec) {
    GFFDecomposition d = gff(p, var, spec);
    return right_border(d, var, spec);
}

// ----------------------------------------------------------------- Witness

Witness match_decomposition(const Poly& d, const Poly& v, int var, const OreSpec& spec) {
    if (d.is_zero() || v.is_zero()) throw MathError("witness decomposition of zero");
    FactorAtlas at = FactorAtlas::build({d, v}, var, spec);
    Witness w;

    std::vector<std::map<long, int>> dcap(at.orbits().size()), vcap(at.orbits().size());
    for (size_t o = 0; o < at.orbits().size(); ++o) {
        for (const auto& slot : at.orbits()[o].slots) {
            int md = at.multiplicity(0, slot.atom);
            int mv = at.multiplicity(1, slot.atom);
            if (md > 0) dcap[o][slot.pos] = md;
            if (mv > 0) vcap[o][slot.pos] = mv;
        }
    }

    for (size_t o = 0; o < at.orbits().size(); ++o) {
        auto atom_at = [&](long pos) -> const Poly& {
            for (const auto& slot : at.orbits()[o].slots)
                if (slot.pos == pos) return at.atoms()[slot.atom];
            throw MathError("witness: missing orbit slot");
        };
        if (at.orbits()[o].fixed) {
            for (auto& [pos, vc] : vcap[o]) {
                auto dt = dcap[o].find(pos);
                if (dt == dcap[o].end()) continue;
                while (vc > 0 && dt->second > 0) {
                    w.factors.push_back({atom_at(pos), dt->second, 1});
                    dt->second = 0;
                    --vc;
                }
            }
            continue;
        }
        for (auto& [pos, vc] : vcap[o]) {
            auto dt = dcap[o].find(pos);
            if (dt == dcap[o].end()) continue;
            while (vc > 0 && dcap[o][pos] > 0) {
                int len = 0;
                while (true) {
                    auto jt = dcap[o].find(pos + len);
                    if (jt == dcap[o].end() || jt->second <= 0) break;
                    ++len;
                }
                if (len == 0) break;
                w.factors.push_back({atom_at(pos), len, 1});
                for (long j = 0; j < len; ++j) dcap[o][pos + j] -= 1;
                --vc;
            }
        }
    }

    Poly fac_d(1), fac_v(1);
    for (const auto& f : w.factors) {
        fac_d *= rising_factorial_poly(f.f, f.p, var, spec);
        fac_v *= rising_factorial_poly(f.f, f.q, var, spec);
    }
    w.g = RatFunc(d) / RatFunc(fac_d);
    if (!w.g.den_is_unit()) throw MathError("witness: g is not polynomial");
    RatFunc hshift = RatFunc(v) / RatFunc(fac_v);
    if (!hshift.den_is_unit()) throw MathError("witness: v factor mismatch");
    w.h = spec.sigma(hshift, var, -1);
    if (!w.h.den_is_unit()) throw MathError("witness: h is not polynomial");

    if (w.g.num().depends_on(var)) {
        GFFDecomposition gd = gff(w.g.num(), var, spec);
        w.g_left_border = left_border(gd);
        w.g_border_deg = w.g_left_border.deg(var);
    } else {
        w.g_left_border = Poly(1);
        w.g_border_deg = 0;
    }
    return w;
}

void check_witness(const Witness& w, const Poly& d, const Poly& v, int var, const OreSpec& spec) {
    RatFunc fac_d(1), fac_v(1);
    for (const auto& f : w.factors) {
        if (f.p < f.q || f.q < 1) throw MathError("witness: exponent constraint violated");
        fac_d *= RatFunc(rising_factorial_poly(f.f, f.p, var, spec));
        fac_v *= RatFunc(rising_factorial_poly(f.f, f.q, var, spec));
    }
    if (w.g * fac_d != RatFunc(d)) throw MathError("witness: d reassembly failed");
    if (spec.sigma(w.h, var, 1) * fac_v != RatFunc(v)) throw MathError("witness: v reassembly failed");
}

} // namespace oretel
