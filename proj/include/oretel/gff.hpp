#ifndef ORETEL_GFF_HPP
#define ORETEL_GFF_HPP

#include <optional>
#include <vector>

#include "oretel/ore.hpp"

namespace oretel {

// fac(a, i) = a * sigma(a) * ... * sigma^{i-1}(a)
RatFunc rising_factorial(const RatFunc& a, int i, int var, const OreSpec& spec);
Poly rising_factorial_poly(const Poly& a, int i, int var, const OreSpec& spec);

// Greatest factorial factorization p = content * prod fac(p_i, i) with at
// most one entry per index, maximal-degree factors chosen greedily from the
// top index down. For sigma = id this is the squarefree decomposition.
struct GFFEntry {
    Poly factor;
    int index;
};
struct GFFDecomposition {
    RatFunc content; // free of `var`
    std::vector<GFFEntry> factors; // ascending index
};

GFFDecomposition gff(const Poly& p, int var, const OreSpec& spec);
RatFunc gff_reassemble(const GFFDecomposition& d, int var, const OreSpec& spec);

Poly left_border(const GFFDecomposition& d);                                 // prod p_i
Poly right_border(const GFFDecomposition& d, int var, const OreSpec& spec);  // prod sigma^{i-1}(p_i)
Poly left_border(const Poly& p, int var, const OreSpec& spec);
Poly right_border(const Poly& p, int var, const OreSpec& spec);

// Pairwise-coprime factor basis of a set of polynomials, refined so that
// sigma-translates of atoms either coincide or are coprime, with the
// sigma-orbit structure made explicit. All atoms are `var`-positive and in
// integer normal form; the var-free cofactors keep everything else.
class FactorAtlas {
public:
    static FactorAtlas build(const std::vector<Poly>& inputs, int var, const OreSpec& spec);

    int var() const { return var_; }
    const std::vector<Poly>& atoms() const { return atoms_; }
    int multiplicity(size_t input, size_t atom) const { return mult_[input][atom]; }
    const Poly& cofactor(size_t input) const { return cofactor_[input]; }

    struct OrbitSlot {
        long pos;
        size_t atom;
    };
    struct Orbit {
        bool fixed; // sigma(a) equals a up to a unit
        std::vector<OrbitSlot> slots; // ascending pos, normalized to min pos 0
    };
    const std::vector<Orbit>& orbits() const { return orbits_; }

    // sigma^t(a) == b modulo units, exact over all integers t.
    static std::optional<long> sigma_offset(const Poly& a, const Poly& b, int var,
                                            const OreSpec& spec);

private:
    int var_ = kVarY;
    OreSpec spec_;
    std::vector<Poly> atoms_;
    std::vector<std::vector<int>> mult_;
    std::vector<Poly> cofactor_;
    std::vector<Orbit> orbits_;
};

// Witness for the properness decomposition: d = g * prod fac(f_i, p_i),
// v = sigma(h) * prod fac(f_i, q_i) with p_i >= q_i >= 1. g and h are
// polynomials up to a unit of K (their denominators are parameter monomials).
struct WitnessFactor {
    Poly f;
    int p;
    int q;
};
struct Witness {
    std::vector<WitnessFactor> factors;
    RatFunc g, h;
    Poly g_left_border;
    int g_border_deg; // deg_var of the left border of g; 0 when g is var-free
};

Witness match_decomposition(const Poly& d, const Poly& v, int var, const OreSpec& spec);
// Recheck the two product identities above; throws on failure.
void check_witness(const Witness& w, const Poly& d, const Poly& v, int var, const OreSpec& spec);

} // namespace oretel

#endif
