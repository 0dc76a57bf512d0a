#pragma once
//
// Parametrized coefficient blocks z of the matrix [E_{k+1} | z].
//

#include "eulerdisc/symcore.hpp"

#include <random>
#include <vector>

namespace eulerdisc {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const std::vector<std::vector<mpq_class>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpq_class& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    /// [E_rows | this]
    RationalMatrix with_identity_prefix() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

struct Minor {
    std::vector<int> rows;
    std::vector<int> cols;
    symcore::MultiPoly value;
};

struct ParamFamily {
    int k = 0;
    symcore::VarTablePtr params;
    /// (k+1) x (n-k) block; entries share `params`.
    std::vector<std::vector<symcore::MultiPoly>> entries;

    std::size_t rows() const noexcept { return entries.size(); }
    std::size_t cols() const noexcept { return entries.empty() ? 0 : entries.front().size(); }
    /// Throws std::invalid_argument on shape or table mismatches.
    void validate() const;

    RationalMatrix evaluate(const std::vector<mpq_class>& point) const;
    /// Replace a parameter by a polynomial in the same table.
    ParamFamily substituted(std::size_t var, const symcore::MultiPoly& value) const;
    /// Every square minor of the block with |I| = |J| >= 1, in (size, I, J) order.
    std::vector<Minor> minors() const;
};

/// Rational point with numerators and denominators uniform in [1, bound].
std::vector<mpq_class> random_rational_point(std::mt19937_64& rng, std::size_t n, long bound = 10000);

} // namespace eulerdisc
