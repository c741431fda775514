#ifndef ORETEL_DFINITE_HPP
#define ORETEL_DFINITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oretel/gff.hpp"

namespace oretel {

struct ValidationIssue {
    std::string check;
    std::string detail;
};
struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    std::string summary() const;
};

// The quotient A/a presented by multiplication matrices Dx b = (U/u) b,
// Dy b = (V/v) b and the polynomial vector e representing 1.
class DFiniteSystem {
public:
    DFiniteSystem(FieldSpec field, OreSpec spec, int n, Poly u, std::vector<Poly> U, Poly v,
                  std::vector<Poly> V, std::vector<Poly> e,
                  std::optional<std::vector<OreOperator>> lifts = std::nullopt);

    const FieldSpec& field() const { return field_; }
    const OreSpec& spec() const { return spec_; }
    int n() const { return n_; }
    const Poly& u() const { return u_; }
    const Poly& v() const { return v_; }
    const Poly& U(int i, int j) const { return U_[static_cast<size_t>(i * n_ + j)]; }
    const Poly& V(int i, int j) const { return V_[static_cast<size_t>(i * n_ + j)]; }
    const std::vector<Poly>& e() const { return e_; }
    const std::optional<std::vector<OreOperator>>& lifts() const { return lifts_; }

    int deg_y_U() const;
    int deg_y_V() const;

private:
    FieldSpec field_;
    OreSpec spec_;
    int n_;
    Poly u_, v_;
    std::vector<Poly> U_, V_;
    std::vector<Poly> e_;
    std::optional<std::vector<OreOperator>> lifts_;
};

// Admissibility, the commutation check Dx Dy = Dy Dx applied to every unit
// vector through the matrix actions, the differential-case denominator
// condition, and lift consistency.
ValidationReport validate(const DFiniteSystem& sys);
void validate_or_throw(const DFiniteSystem& sys);

// Dx w = sigma_x(w) U/u + delta_x(w), componentwise on row vectors.
std::vector<RatFunc> vector_apply_dx(const std::vector<RatFunc>& w, const DFiniteSystem& sys);
std::vector<RatFunc> vector_apply_dy(const std::vector<RatFunc>& w, const DFiniteSystem& sys);
std::vector<RatFunc> op_apply_vector(const OreOperator& op, const std::vector<RatFunc>& w,
                                     const DFiniteSystem& sys);

// Dx^i e = w_i / fac(u, i, x) with the Lemma-style degree control
// deg_y(w_i) <= deg_y(e) + i * max(deg_y u, deg_y U), asserted per row.
struct IterateTable {
    int r = 0;
    std::vector<std::vector<Poly>> rows; // rows[i] = w_i, i = 0..r
    Poly denominator;                    // fac(u, r, x)
    // fac(sigma^i(u), r - i, x): rows[i] * rescale[i] over the common denominator
    std::vector<Poly> rescale;
};
IterateTable iterate_dx_e(const DFiniteSystem& sys, int r);

// Companion presentation of a scalar operator L in Dx only, basis
// {1, Dx, ..., Dx^{n-1}}: returns (u, U, e) with e = (1, 0, ..., 0).
struct CompanionData {
    Poly u;
    std::vector<Poly> U;
    std::vector<Poly> e;
    int n = 0;
};
CompanionData companion_from_scalar(const OreOperator& L, const OreSpec& spec);

} // namespace oretel

#endif
