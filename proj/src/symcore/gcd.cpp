#include "eulerdisc/symcore.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eulerdisc::symcore {

namespace {

// Coefficients of p as a polynomial in x; entry i multiplies x^i.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, std::size_t x)
{
    std::vector<std::vector<Term>> parts(p.degree_in(x) + 1);
    for (const auto& t : p.terms()) {
        Term r = t;
        r.exp[x] = 0;
        parts[t.exp[x]].push_back(std::move(r));
    }
    std::vector<MultiPoly> out;
    out.reserve(parts.size());
    for (auto& ts : parts)
        out.push_back(MultiPoly::from_terms(p.vars(), std::move(ts)));
    return out;
}

MultiPoly x_power(const VarTablePtr& vars, std::size_t x, unsigned e)
{
    Exponent exp(vars->size(), 0);
    exp[x] = e;
    return MultiPoly::monomial(vars, std::move(exp), 1);
}

MultiPoly gcd_many(const std::vector<MultiPoly>& ps)
{
    MultiPoly g(ps.front().vars());
    for (const auto& p : ps) {
        if (p.is_zero())
            continue;
        g = gcd(g, p);
        if (g.is_constant())
            break;
    }
    return g;
}

MultiPoly must_divide(const MultiPoly& a, const MultiPoly& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw std::logic_error("gcd: expected exact division failed");
    return *std::move(q);
}

// Content in x (a polynomial free of x) and the primitive part.
std::pair<MultiPoly, MultiPoly> split_content(const MultiPoly& p, std::size_t x)
{
    MultiPoly c = gcd_many(coeffs_in(p, x));
    if (c.is_constant())
        return {MultiPoly::constant(p.vars(), 1), canonical_poly(p)};
    return {c, canonical_poly(must_divide(p, c))};
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t x)
{
    const unsigned db = b.degree_in(x);
    const MultiPoly lcb = coeffs_in(b, x).back();
    MultiPoly r = a;
    while (!r.is_zero()) {
        const unsigned dr = r.degree_in(x);
        if (dr < db)
            break;
        const MultiPoly lcr = coeffs_in(r, x).back();
        r = r * lcb - lcr * x_power(a.vars(), x, dr - db) * b;
    }
    return r;
}

MultiPoly gcd_in(const MultiPoly& a, const MultiPoly& b, std::size_t x)
{
    auto [ca, pa] = split_content(a, x);
    auto [cb, pb] = split_content(b, x);
    const MultiPoly c = gcd(ca, cb);
    if (pa.degree_in(x) < pb.degree_in(x))
        std::swap(pa, pb);
    MultiPoly g(a.vars());
    for (;;) {
        MultiPoly r = pseudo_remainder(pa, pb, x);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree_in(x) == 0)
            return c;
        pa = std::move(pb);
        pb = split_content(r, x).second;
    }
    return c * split_content(g, x).second;
}

} // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b)
{
    const VarTablePtr& vars = a.vars() ? a.vars() : b.vars();
    if (a.is_zero())
        return b.is_zero() ? MultiPoly(vars) : canonical_poly(b);
    if (b.is_zero())
        return canonical_poly(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(vars, 1);
    const auto sa = a.support(), sb = b.support();
    std::vector<std::size_t> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    if (common.empty())
        return MultiPoly::constant(vars, 1);
    const MultiPoly ca = canonical_poly(a), cb = canonical_poly(b);
    if (ca == cb)
        return ca;
    if (divide_exact(cb, ca))
        return ca;
    if (divide_exact(ca, cb))
        return cb;
    if (ca.total_degree() == 1 || cb.total_degree() == 1)
        return MultiPoly::constant(vars, 1);
    return canonical_poly(gcd_in(ca, cb, common.front()));
}

std::vector<MultiPoly> coprime_basis(const std::vector<MultiPoly>& ps)
{
    std::vector<MultiPoly> basis;
    std::deque<MultiPoly> work;
    for (const auto& p : ps) {
        if (p.is_zero())
            throw std::invalid_argument("coprime_basis: zero polynomial");
        if (!p.is_constant())
            work.push_back(canonical_poly(p));
    }
    while (!work.empty()) {
        MultiPoly q = canonical_poly(work.front());
        work.pop_front();
        if (q.is_constant())
            continue;
        if (std::find(basis.begin(), basis.end(), q) != basis.end())
            continue;
        bool split = false;
        if (q.total_degree() > 1) {
            for (std::size_t v : q.support()) {
                MultiPoly g = gcd(q, q.derivative(v));
                if (!g.is_constant()) {
                    work.push_back(must_divide(q, g));
                    work.push_back(std::move(g));
                    split = true;
                    break;
                }
            }
        }
        if (split)
            continue;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            MultiPoly g = gcd(basis[i], q);
            if (g.is_constant())
                continue;
            MultiPoly b = std::move(basis[i]);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            work.push_back(must_divide(b, g));
            work.push_back(must_divide(q, g));
            work.push_back(std::move(g));
            split = true;
            break;
        }
        if (!split)
            basis.push_back(std::move(q));
    }
    std::sort(basis.begin(), basis.end(), factor_order_less);
    return basis;
}

std::optional<std::vector<unsigned>> factor_over_basis(const MultiPoly& p, const std::vector<MultiPoly>& basis)
{
    if (p.is_zero())
        return std::nullopt;
    std::vector<unsigned> exps(basis.size(), 0);
    MultiPoly rem = p;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_constant())
            continue;
        while (!rem.is_constant()) {
            auto q = divide_exact(rem, basis[i]);
            if (!q) {
                // Rational multiples: retry after clearing content.
                q = divide_exact(canonical_poly(rem), basis[i]);
                if (!q)
                    break;
            }
            rem = *std::move(q);
            ++exps[i];
        }
    }
    if (!rem.is_constant())
        return std::nullopt;
    return exps;
}

} // namespace eulerdisc::symcore
