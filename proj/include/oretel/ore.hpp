#ifndef ORETEL_ORE_HPP
#define ORETEL_ORE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oretel/field_spec.hpp"
#include "oretel/ratfunc.hpp"

namespace oretel {

enum class OreKind { derivation, shift, forward_difference, q_shift, q_difference };
enum class OreAction { delta, sigma };
enum class SigmaType { identity, int_shift, q_scale };

std::string kind_name(OreKind k);
OreKind kind_from_name(const std::string& s);

// The pair of commuting (sigma, delta) actions defining A = K(x,y)[Dx,Dy].
class OreSpec {
public:
    OreSpec() = default;
    // Validates q availability and spot-checks the degree assumptions and
    // sigma commutation on seeded random polynomials.
    static OreSpec make(OreKind kx, OreKind ky, const FieldSpec& field);

    OreKind kind(int var) const { return var == kVarX ? kind_x_ : kind_y_; }
    OreAction action(int var) const { return var == kVarX ? action_x_ : action_y_; }
    SigmaType sigma_type(int var) const;
    bool sigma_is_identity(int var) const { return sigma_type(var) == SigmaType::identity; }
    int q_var() const { return q_var_; }

    // sigma^t; for q-scaled variables t must be >= 0 at the Poly level.
    Poly sigma_poly(const Poly& p, int var, int t = 1) const;
    RatFunc sigma(const RatFunc& f, int var, int t = 1) const;
    Poly delta_poly(const Poly& p, int var) const;
    RatFunc delta(const RatFunc& f, int var) const;

    // sigma^t with integer normal form output (units and content dropped);
    // valid for any t. Used for factor-orbit bookkeeping.
    Poly sigma_normalized(const Poly& p, int var, int t) const;

private:
    OreKind kind_x_ = OreKind::derivation;
    OreKind kind_y_ = OreKind::derivation;
    OreAction action_x_ = OreAction::delta;
    OreAction action_y_ = OreAction::delta;
    int q_var_ = -1;
};

// Element of K(x,y)[Dx,Dy], coefficients written on the left of Dx^i Dy^j.
class OreOperator {
public:
    using TermMap = std::map<std::pair<int, int>, RatFunc>;

    OreOperator() = default;
    OreOperator(const RatFunc& c) { set(0, 0, c); }
    static OreOperator dx(int k = 1) { return monomial(k, 0); }
    static OreOperator dy(int k = 1) { return monomial(0, k); }
    static OreOperator monomial(int i, int j, const RatFunc& c = RatFunc(1));

    bool is_zero() const { return terms_.empty(); }
    int ord_x() const;
    int ord_y() const;
    const TermMap& terms() const { return terms_; }
    RatFunc coeff(int i, int j) const;
    void set(int i, int j, const RatFunc& c);

    OreOperator operator-() const;
    OreOperator operator+(const OreOperator& o) const;
    OreOperator operator-(const OreOperator& o) const;
    OreOperator scale_left(const RatFunc& c) const;

    bool operator==(const OreOperator& o) const { return terms_ == o.terms_; }
    bool operator!=(const OreOperator& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

// Noncommutative product via Dv a = sigma_v(a) Dv + delta_v(a).
OreOperator op_multiply(const OreOperator& a, const OreOperator& b, const OreSpec& spec);
OreOperator op_pow(const OreOperator& a, int k, const OreSpec& spec);

// Action on the rational-function module; Dv acts by sigma_v or delta_v
// according to spec.action(v).
RatFunc op_apply_rat(const OreOperator& a, const RatFunc& f, const OreSpec& spec);

// Dv^k * f expanded as sum of coeff[m] * Dv^m.
std::vector<RatFunc> push_through(int var, int k, const RatFunc& f, const OreSpec& spec);

} // namespace oretel

#endif
