#pragma once
//
// Matroids given by a rank oracle, the beta invariant and Euler characteristics
// of arrangement complements.
//

#include "eulerdisc/family.hpp"

#include <cstdint>
#include <vector>

namespace eulerdisc::matroid {

using Mask = std::uint64_t;

class Matroid {
public:
    virtual ~Matroid() = default;
    virtual std::size_t size() const = 0;
    virtual int rank(Mask s) const = 0;

    Mask ground() const { return size() >= 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
    int rank() const { return rank(ground()); }
};

/// Column matroid of a rational matrix.
class LinearMatroid : public Matroid {
public:
    explicit LinearMatroid(const RationalMatrix& m);

    using Matroid::rank;
    std::size_t size() const override { return columns_.size(); }
    int rank(Mask s) const override;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<mpz_class>> columns_;
};

/// Matroid given by its list of bases.
class BasisMatroid : public Matroid {
public:
    BasisMatroid(std::size_t size, std::vector<Mask> bases);

    using Matroid::rank;
    std::size_t size() const override { return n_; }
    int rank(Mask s) const override;

private:
    std::size_t n_;
    std::vector<Mask> bases_;
};

/// Crapo beta invariant by deletion-contraction.
std::int64_t beta(const Matroid& m);

/// (-1)^{r(E)} sum over S of (-1)^{|S|} r(S).
std::int64_t beta_subset_sum(const Matroid& m);

/// Tutte polynomial by subset expansion: coefficient [i][j] of x^i y^j.
std::vector<std::vector<mpz_class>> tutte_polynomial(const Matroid& m);

/// Beta invariant of the columns of [E_{k+1} | z]; equals (-1)^k chi(X_z).
std::int64_t signed_euler_char(const RationalMatrix& z);

struct GenericSample {
    std::int64_t chi = 0;
    std::vector<std::vector<mpq_class>> points;
};

/// Signed Euler characteristic at `trials` random points off the zero sets of `avoid`.
/// Throws HypothesisError when no such point is found or the samples disagree.
GenericSample generic_euler_char(const ParamFamily& f, const std::vector<symcore::MultiPoly>& avoid, int trials,
                                 std::mt19937_64& rng);

/// Convenience form: avoids every nonzero minor of the family.
std::int64_t generic_euler_char(const ParamFamily& f, int trials, std::uint64_t seed);

} // namespace eulerdisc::matroid
