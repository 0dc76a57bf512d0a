#pragma once

#include "eulerdisc/symcore.hpp"

#include <random>

namespace testutil {

using eulerdisc::symcore::Exponent;
using eulerdisc::symcore::MultiPoly;
using eulerdisc::symcore::Term;
using eulerdisc::symcore::VarTablePtr;

inline MultiPoly random_poly(std::mt19937_64& rng, const VarTablePtr& vars, int max_terms = 4, int max_deg = 2,
                             int coeff_range = 5)
{
    std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), coeff(-coeff_range, coeff_range);
    std::vector<Term> ts;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponent e(vars->size());
        for (auto& x : e)
            x = static_cast<std::uint32_t>(deg(rng));
        ts.push_back({e, coeff(rng)});
    }
    return MultiPoly::from_terms(vars, ts);
}

inline std::vector<mpq_class> random_point(std::mt19937_64& rng, std::size_t n, int range = 9)
{
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<mpq_class> p(n);
    for (auto& x : p)
        x = d(rng);
    return p;
}

} // namespace testutil
