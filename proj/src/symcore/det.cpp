#include "eulerdisc/symcore.hpp"

#include <stdexcept>

namespace eulerdisc::symcore {

namespace {

void check_square(const PolyMatrix& m)
{
    if (m.empty())
        throw std::invalid_argument("det: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("det: matrix is not square");
}

const VarTablePtr& table_of(const PolyMatrix& m)
{
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.vars())
                return e.vars();
    static const VarTablePtr none = make_vars({});
    return none;
}

MultiPoly laplace(const PolyMatrix& m, const VarTablePtr& vars)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MultiPoly sum(vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly t = m[0][c] * laplace(minor, vars);
        if (c % 2 == 0)
            sum += t;
        else
            sum -= t;
    }
    return sum;
}

} // namespace

MultiPoly det_cofactor(const PolyMatrix& m)
{
    check_square(m);
    return laplace(m, table_of(m));
}

MultiPoly det(const PolyMatrix& m)
{
    check_square(m);
    const VarTablePtr& vars = table_of(m);
    const std::size_t n = m.size();
    if (n <= 3)
        return laplace(m, vars);
    PolyMatrix a = m;
    for (auto& row : a)
        for (auto& e : row)
            if (!e.vars())
                e = MultiPoly(vars);
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return MultiPoly(vars);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("det: Bareiss division was not exact");
                a[i][j] = *std::move(q);
            }
            a[i][k] = MultiPoly(vars);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

} // namespace eulerdisc::symcore
