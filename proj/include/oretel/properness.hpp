#ifndef ORETEL_PROPERNESS_HPP
#define ORETEL_PROPERNESS_HPP

#include <optional>

#include "oretel/dfinite.hpp"

namespace oretel {

enum class FactorClass { x_only, y_only, integer_linear, split_blocking };
std::string factor_class_name(FactorClass c);

struct ClassifiedFactor {
    Poly factor;
    FactorClass cls;
    int multiplicity = 1;
    // direction data for integer-linear factors; c only for degree-1 forms
    int a = 0, b = 0;
    std::optional<RatFunc> c;
};

// Maximal product of factors a*x + b*y + c with integer a, b (gcd-normalized,
// a >= 0) extracted from p; the remainder carries everything else.
struct IntegerLinearDecomposition {
    struct Term {
        int a, b;
        RatFunc c;
        int multiplicity;
    };
    std::vector<Term> terms;
    Poly remainder;
};
IntegerLinearDecomposition integer_linear_decompose(const Poly& p);

struct PropernessDecision {
    bool proper;
    std::string reason; // set when not proper
    std::vector<ClassifiedFactor> classification;
};
// y-properness of u w.r.t. the two endomorphisms of the algebra.
PropernessDecision is_y_proper(const Poly& u, const OreSpec& spec);

struct PropernessReport {
    bool proper = false;
    std::string reason;
    std::vector<ClassifiedFactor> classification;
    int eta = 0;
    bool eta_upper_bound_only = false;
    int gamma = 0;
    int height = 0;
    int phi = 0;
    int order_bound = 0; // n * height + phi
    Witness witness_r1;  // representative decomposition at r = 1
};

// Full analysis: properness, eta (probed and certified at r = 1 and
// r = n*height + n by witness reassembly), gamma, height, phi, order bound.
PropernessReport analyze_properness(const DFiniteSystem& sys,
                                    std::optional<int> phi_override = std::nullopt);

int compute_eta(const DFiniteSystem& sys);
int compute_gamma(const DFiniteSystem& sys);
int compute_height(const DFiniteSystem& sys);
int phi_bound(const DFiniteSystem& sys, std::optional<int> phi_override = std::nullopt);

} // namespace oretel

#endif
