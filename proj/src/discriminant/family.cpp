#include "eulerdisc/family.hpp"

#include "eulerdisc/combi.hpp"

#include <numeric>
#include <stdexcept>

namespace eulerdisc {

RationalMatrix::RationalMatrix(const std::vector<std::vector<mpq_class>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("RationalMatrix: ragged rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::with_identity_prefix() const
{
    RationalMatrix m(rows_, rows_ + cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        m.at(r, r) = 1;
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(r, rows_ + c) = at(r, c);
    }
    return m;
}

void ParamFamily::validate() const
{
    if (k < 0)
        throw std::invalid_argument("family: k must be non-negative");
    if (static_cast<int>(entries.size()) != k + 1)
        throw std::invalid_argument("family: expected k+1 = " + std::to_string(k + 1) + " rows, got " +
                                    std::to_string(entries.size()));
    if (cols() == 0)
        throw std::invalid_argument("family: no columns");
    for (const auto& row : entries) {
        if (row.size() != cols())
            throw std::invalid_argument("family: ragged rows");
        for (const auto& e : row)
            if (e.vars() != params && !(e.vars() && params && *e.vars() == *params))
                throw std::invalid_argument("family: entry uses a different parameter table");
    }
}

RationalMatrix ParamFamily::evaluate(const std::vector<mpq_class>& point) const
{
    RationalMatrix m(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            m.at(r, c) = entries[r][c].evaluate(point);
    return m;
}

ParamFamily ParamFamily::substituted(std::size_t var, const symcore::MultiPoly& value) const
{
    ParamFamily f = *this;
    for (auto& row : f.entries)
        for (auto& e : row)
            e = e.substitute(var, value);
    return f;
}

std::vector<Minor> ParamFamily::minors() const
{
    std::vector<Minor> out;
    const int nr = static_cast<int>(rows()), nc = static_cast<int>(cols());
    for (int m = 1; m <= std::min(nr, nc); ++m) {
        std::vector<int> ri(m);
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::vector<int> ci(m);
            std::iota(ci.begin(), ci.end(), 0);
            do {
                symcore::PolyMatrix sub;
                for (int r : ri) {
                    std::vector<symcore::MultiPoly> row;
                    for (int c : ci)
                        row.push_back(entries[r][c]);
                    sub.push_back(std::move(row));
                }
                out.push_back({ri, ci, symcore::det(sub)});
            } while (combi::next_combination(ci, nc));
        } while (combi::next_combination(ri, nr));
    }
    return out;
}

std::vector<mpq_class> random_rational_point(std::mt19937_64& rng, std::size_t n, long bound)
{
    std::uniform_int_distribution<long> d(1, bound);
    std::vector<mpq_class> p(n);
    for (auto& x : p) {
        const long num = d(rng);
        const long den = d(rng);
        x = mpq_class(num, den);
        x.canonicalize();
    }
    return p;
}

} // namespace eulerdisc
