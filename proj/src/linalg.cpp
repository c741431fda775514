#include "oretel/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace oretel {

KxMatrix KxMatrix::from_ratfunc(const std::vector<std::vector<RatFunc>>& rows) {
    if (rows.empty() || rows.front().empty()) throw MathError("empty matrix");
    KxMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != m.cols()) throw MathError("ragged matrix");
        Poly den(1);
        for (const RatFunc& f : row) {
            if (f.depends_on(kVarY)) throw MathError("matrix entry depends on y");
            Poly g = Poly::gcd(den, f.den());
            den = den * Poly::divide_exact(f.den(), g);
        }
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& f = row[static_cast<size_t>(j)];
            m.at(i, j) = f.num() * Poly::divide_exact(den, f.den());
        }
    }
    return m;
}

namespace {

void strip_row_content(KxMatrix& m, int i) {
    Poly g;
    for (int j = 0; j < m.cols(); ++j) {
        const Poly& e = m.at(i, j);
        if (e.is_zero()) continue;
        g = g.is_zero() ? e.drop_content() : Poly::gcd(g, e);
        if (g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) {
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j).drop_content();
        return;
    }
    for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero())
            m.at(i, j) = Poly::divide_exact(m.at(i, j), g).drop_content();
}

int entry_degree(const Poly& p) { return std::max(p.deg(kVarX), p.total_degree()); }

} // namespace

std::vector<std::vector<Poly>> nullspace(const KxMatrix& A) {
    const int rows = A.rows(), cols = A.cols();
    KxMatrix m = A;
    for (int i = 0; i < rows; ++i) strip_row_content(m, i);

    // Bareiss echelon form: pivots chosen per column, minimal degree first.
    std::vector<int> pivot_col; // per pivot row
    Poly prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int best = -1;
        for (int i = row; i < rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (best < 0 || entry_degree(m.at(i, col)) < entry_degree(m.at(best, col))) best = i;
        }
        if (best < 0) continue;
        if (best != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(row, j), m.at(best, j));
        const Poly piv = m.at(row, col);
        for (int i = row + 1; i < rows; ++i) {
            if (m.at(i, col).is_zero() && prev == Poly(1)) {
                // nothing to eliminate and no pending division
            }
            const Poly lead = m.at(i, col);
            for (int j = col; j < cols; ++j) {
                Poly t = piv * m.at(i, j) - lead * m.at(row, j);
                m.at(i, j) = Poly::divide_exact(t, prev);
            }
        }
        prev = piv;
        pivot_col.push_back(col);
        ++row;
    }
    const int rank = row;

    // Back substitution over K(x) for each free column.
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Poly>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<RatFunc> w(static_cast<size_t>(cols));
        w[static_cast<size_t>(free_col)] = RatFunc(1);
        for (int pr = rank - 1; pr >= 0; --pr) {
            int pc = pivot_col[static_cast<size_t>(pr)];
            RatFunc acc;
            for (int j = pc + 1; j < cols; ++j)
                if (!w[static_cast<size_t>(j)].is_zero())
                    acc += RatFunc(m.at(pr, j)) * w[static_cast<size_t>(j)];
            w[static_cast<size_t>(pc)] = -acc / RatFunc(m.at(pr, pc));
        }
        // clear denominators, strip content
        Poly den(1);
        for (const RatFunc& f : w) {
            if (f.is_zero()) continue;
            Poly g = Poly::gcd(den, f.den());
            den = den * Poly::divide_exact(f.den(), g);
        }
        std::vector<Poly> vp(static_cast<size_t>(cols));
        Poly content;
        for (int j = 0; j < cols; ++j) {
            const RatFunc& f = w[static_cast<size_t>(j)];
            if (f.is_zero()) continue;
            vp[static_cast<size_t>(j)] = f.num() * Poly::divide_exact(den, f.den());
            content = content.is_zero() ? vp[static_cast<size_t>(j)].drop_content()
                                        : Poly::gcd(content, vp[static_cast<size_t>(j)]);
        }
        if (!content.is_zero() && !content.is_constant())
            for (Poly& p : vp)
                if (!p.is_zero()) p = Poly::divide_exact(p, content);
        // first nonzero entry monic in x when possible
        for (const Poly& p : vp) {
            if (p.is_zero()) continue;
            Poly norm = p.normalized_factor(kVarX);
            Rational scale(1);
            if (!p.is_zero() && !norm.is_zero()) {
                // norm = p / (content * lc); recover the scalar
                // p = s * norm with s rational when lc is rational
                Poly lc = p.drop_content().leading_coeff_wrt(kVarX);
                if (lc.is_constant()) scale = Rational(1) / (p.content() * lc.constant_value());
            }
            if (scale != 1)
                for (Poly& q : vp) q = q * scale;
            else
                for (Poly& q : vp) q = q * (Rational(1) / p.content());
            break;
        }
        basis.push_back(std::move(vp));
    }

    // post-hoc check A w = 0 for every basis vector
    for (const auto& vec : basis) {
        for (int i = 0; i < rows; ++i) {
            Poly acc;
            for (int j = 0; j < cols; ++j)
                if (!vec[static_cast<size_t>(j)].is_zero())
                    acc += A.at(i, j) * vec[static_cast<size_t>(j)];
            if (!acc.is_zero()) throw MathError("nullspace: A w != 0 post-check failed");
        }
    }
    return basis;
}

} // namespace oretel
