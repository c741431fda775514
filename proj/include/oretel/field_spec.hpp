#ifndef ORETEL_FIELD_SPEC_HPP
#define ORETEL_FIELD_SPEC_HPP

#include <string>
#include <vector>

#include "oretel/numeric.hpp"
#include "oretel/poly.hpp"

namespace oretel {

// The ground field K = Q(parameters). Parameters are transcendental symbols,
// pairwise distinct and distinct from x, y, Dx, Dy.
class FieldSpec {
public:
    FieldSpec() = default;
    explicit FieldSpec(std::vector<std::string> params) : params_(std::move(params)) {
        for (size_t i = 0; i < params_.size(); ++i) {
            const std::string& s = params_[i];
            if (s == "x" || s == "y" || s == "Dx" || s == "Dy" || s.empty())
                throw ValidationError("field", "invalid parameter symbol '" + s + "'");
            for (size_t j = i + 1; j < params_.size(); ++j)
                if (params_[j] == s)
                    throw ValidationError("field", "duplicate parameter symbol '" + s + "'");
        }
    }

    const std::vector<std::string>& parameters() const { return params_; }
    size_t parameter_count() const { return params_.size(); }

    // -1 if unknown
    int var_index(const std::string& name) const {
        if (name == "x") return kVarX;
        if (name == "y") return kVarY;
        for (size_t i = 0; i < params_.size(); ++i)
            if (params_[i] == name) return kFirstParam + static_cast<int>(i);
        return -1;
    }

    std::string var_name(int v) const {
        if (v == kVarX) return "x";
        if (v == kVarY) return "y";
        int i = v - kFirstParam;
        if (i >= 0 && i < static_cast<int>(params_.size())) return params_[static_cast<size_t>(i)];
        return "?v" + std::to_string(v);
    }

    int q_index() const {
        for (size_t i = 0; i < params_.size(); ++i)
            if (params_[i] == "q") return kFirstParam + static_cast<int>(i);
        return -1;
    }

private:
    std::vector<std::string> params_;
};

} // namespace oretel

#endif
