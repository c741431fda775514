#ifndef ORETEL_LINALG_HPP
#define ORETEL_LINALG_HPP

#include <vector>

#include "oretel/ratfunc.hpp"

namespace oretel {

// Dense matrix over K(x): entries are polynomials in x and the parameters
// (denominators are cleared row-wise on construction from rational entries).
class KxMatrix {
public:
    KxMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        if (rows < 1 || cols < 1) throw MathError("matrix dimensions must be positive");
    }
    static KxMatrix from_ratfunc(const std::vector<std::vector<RatFunc>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

private:
    int rows_, cols_;
    std::vector<Poly> a_;
};

// Basis of the right nullspace over K(x), computed by fraction-free
// (Bareiss) elimination with minimal-degree pivoting. Basis vectors are
// cleared to polynomial entries with content removed and scaled so the
// first nonzero entry is monic in x when its leading coefficient is
// rational. Every returned vector is re-checked against A post hoc.
std::vector<std::vector<Poly>> nullspace(const KxMatrix& A);

} // namespace oretel

#endif
