#include "eulerdisc/discriminant.hpp"

#include "eulerdisc/errors.hpp"
#include "eulerdisc/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eulerdisc::discriminant {

using combi::PatternGraph;
using combi::VertexSet;

symcore::VarTablePtr edge_variables(const PatternGraph& g)
{
    std::vector<std::string> names;
    for (const auto& e : g.edges())
        names.push_back("z" + g.edge_label(e));
    return symcore::make_vars(std::move(names));
}

MultiPoly edmonds_minor(const PatternGraph& g, const symcore::VarTablePtr& vars, const VertexSet& I,
                        const VertexSet& J)
{
    symcore::PolyMatrix m;
    for (int i : I) {
        std::vector<MultiPoly> row;
        for (int j : J) {
            auto it = std::find(g.edges().begin(), g.edges().end(), combi::EdgePair{i, j});
            if (it == g.edges().end())
                row.push_back(MultiPoly(vars));
            else
                row.push_back(MultiPoly::variable(vars, it - g.edges().begin()));
        }
        m.push_back(std::move(row));
    }
    return symcore::det(m);
}

ParamFamily edmonds_family(const PatternGraph& g)
{
    ParamFamily f;
    f.k = static_cast<int>(g.left().size()) - 1;
    f.params = edge_variables(g);
    f.entries.assign(g.left().size(), std::vector<MultiPoly>(g.right().size(), MultiPoly(f.params)));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [i, j] = g.edges()[e];
        const auto r = std::find(g.left().begin(), g.left().end(), i) - g.left().begin();
        const auto c = std::find(g.right().begin(), g.right().end(), j) - g.right().begin();
        f.entries[r][c] = MultiPoly::variable(f.params, e);
    }
    return f;
}

PadReport pad_sparse_report(const PatternGraph& g)
{
    if (!combi::is_connected(g))
        throw HypothesisError("pattern graph is not connected");
    const auto vars = edge_variables(g);
    PadReport out;
    out.product = FactoredPolynomial(vars);
    const auto& L = g.left();
    const auto& R = g.right();
    for (int m = 1; m <= static_cast<int>(std::min(L.size(), R.size())); ++m) {
        std::vector<int> li(m);
        std::iota(li.begin(), li.end(), 0);
        do {
            std::vector<int> ri(m);
            std::iota(ri.begin(), ri.end(), 0);
            do {
                VertexSet I, J;
                for (int x : li)
                    I.push_back(L[x]);
                for (int x : ri)
                    J.push_back(R[x]);
                const PatternGraph h = combi::induced(g, I, J);
                if (!combi::is_connected(h)) {
                    out.rejected.push_back({I, J, "disconnected", {}});
                    continue;
                }
                const auto star = combi::condition_star(h);
                if (!star.holds) {
                    out.rejected.push_back({I, J, "condition (*)", star.violator});
                    continue;
                }
                PadFactor f{I, J, symcore::canonical_poly(edmonds_minor(g, vars, I, J)), 0};
                f.exponent = static_cast<unsigned>(lattice::subdiagram_volume(g, h));
                out.product.multiply(f.poly, f.exponent);
                out.factors.push_back(std::move(f));
            } while (combi::next_combination(ri, static_cast<int>(R.size())));
        } while (combi::next_combination(li, static_cast<int>(L.size())));
    }
    return out;
}

FactoredPolynomial pad_sparse(const PatternGraph& g)
{
    return pad_sparse_report(g).product;
}

FactoredPolynomial pad_dense(int k, int n)
{
    if (k < 0 || n <= k)
        throw HypothesisError("pad_dense requires n > k >= 0");
    std::vector<combi::EdgePair> edges;
    for (int i = 0; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return pad_sparse(PatternGraph(k + 1, n - k, std::move(edges)));
}

bool degree_check(const FactoredPolynomial& e, const lattice::PointConfiguration& c)
{
    const auto dim = lattice::lattice_normalize(c).dimension;
    return static_cast<std::int64_t>(e.total_degree()) == (dim + 1) * lattice::normalized_volume(c);
}

namespace {

bool avoids(const std::vector<MultiPoly>& avoid, const std::vector<mpq_class>& p)
{
    return std::all_of(avoid.begin(), avoid.end(), [&](const MultiPoly& a) { return a.evaluate(p) != 0; });
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> pf;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e)
            pf.emplace_back(q, e);
    }
    if (n > 1)
        pf.emplace_back(n, 1);
    std::vector<std::uint64_t> out{1};
    for (auto [q, e] : pf) {
        const std::size_t s = out.size();
        std::uint64_t pw = 1;
        for (int i = 0; i < e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < s; ++j)
                out.push_back(out[j] * pw);
        }
    }
    return out;
}

mpq_class horner(const std::vector<mpz_class>& c, const mpq_class& x)
{
    mpq_class v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * x + *it;
    return v;
}

// Rational roots of sum c[e] x^e, or nullopt when the search is out of range.
std::optional<std::vector<mpq_class>> rational_roots(std::vector<mpz_class> c)
{
    static const mpz_class limit("1000000000000");
    std::vector<mpq_class> roots;
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == 0)
        ++lo;
    if (lo == c.size())
        return std::nullopt;
    if (lo > 0)
        roots.push_back(0);
    c.erase(c.begin(), c.begin() + lo);
    if (c.size() == 1)
        return roots;
    const mpz_class a0 = abs(c.front()), an = abs(c.back());
    if (a0 > limit || an > limit)
        return std::nullopt;
    const auto ps = divisors(a0.get_ui());
    const auto qs = divisors(an.get_ui());
    if (ps.size() * qs.size() > 20000)
        return std::nullopt;
    for (auto p : ps)
        for (auto q : qs) {
            if (std::gcd(p, q) != 1)
                continue;
            for (int s : {1, -1}) {
                mpq_class x(mpz_class(s) * mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(q)));
                x.canonicalize();
                if (horner(c, x) == 0)
                    roots.push_back(x);
            }
        }
    return roots;
}

std::optional<std::vector<mpq_class>> solve_linear(const MultiPoly& delta, const std::vector<MultiPoly>& avoid,
                                                   std::mt19937_64& rng, int budget)
{
    std::vector<std::size_t> lin;
    for (std::size_t v = 0; v < delta.nvars(); ++v)
        if (delta.degree_in(v) == 1)
            lin.push_back(v);
    if (lin.empty())
        return std::nullopt;
    for (int t = 0; t < budget; ++t) {
        const std::size_t v = lin[t % lin.size()];
        auto p = random_rational_point(rng, delta.nvars());
        mpq_class a = 0, b = 0;
        for (const auto& term : delta.terms()) {
            mpq_class m = term.coeff;
            for (std::size_t u = 0; u < delta.nvars(); ++u)
                if (u != v)
                    for (unsigned e = 0; e < term.exp[u]; ++e)
                        m *= p[u];
            (term.exp[v] ? a : b) += m;
        }
        if (a == 0)
            continue;
        p[v] = -b / a;
        if (delta.evaluate(p) == 0 && avoids(avoid, p))
            return p;
    }
    return std::nullopt;
}

std::optional<std::vector<mpq_class>> solve_fiber(const MultiPoly& delta, const std::vector<MultiPoly>& avoid,
                                                  std::mt19937_64& rng, int budget)
{
    const auto vars = delta.support();
    if (vars.empty())
        return std::nullopt;
    std::uniform_int_distribution<int> small(-8, 8);
    for (int t = 0; t < budget; ++t) {
        const std::size_t v = vars[t % vars.size()];
        std::vector<mpq_class> p(delta.nvars());
        for (auto& x : p)
            x = small(rng);
        std::vector<mpz_class> c(delta.degree_in(v) + 1, 0);
        for (const auto& term : delta.terms()) {
            mpz_class m = term.coeff;
            for (std::size_t u = 0; u < delta.nvars(); ++u)
                if (u != v)
                    for (unsigned e = 0; e < term.exp[u]; ++e)
                        m *= p[u].get_num();
            c[term.exp[v]] += m;
        }
        auto roots = rational_roots(c);
        if (!roots)
            continue;
        for (const auto& r : *roots) {
            p[v] = r;
            if (avoids(avoid, p))
                return p;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<mpq_class>> witness_point(const MultiPoly& delta, const std::vector<MultiPoly>& avoid,
                                                    std::mt19937_64& rng, int budget)
{
    if (delta.is_constant())
        throw std::invalid_argument("witness_point: constant polynomial");
    if (auto p = solve_linear(delta, avoid, rng, budget))
        return p;
    return solve_fiber(delta, avoid, rng, 10 * budget);
}

DiscriminantReport euler_disc(const ParamFamily& f, const DiscOptions& opt)
{
    f.validate();
    const std::size_t rows = f.rows(), cols = f.cols();
    if (rows + cols > 63)
        throw SizeLimitError("family has more than 63 columns in [E | z]");

    std::vector<Minor> minors;
    for (auto& m : f.minors())
        if (!m.value.is_zero())
            minors.push_back(std::move(m));
    if (minors.empty())
        throw HypothesisError("every minor of the family vanishes identically");
    std::vector<MultiPoly> values;
    for (const auto& m : minors)
        values.push_back(m.value);
    const auto basis = symcore::coprime_basis(values);

    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<unsigned>> exps;
    for (const auto& m : minors) {
        auto e = symcore::factor_over_basis(m.value, basis);
        if (!e)
            throw std::logic_error("minor does not factor over the coprime basis");
        exps.emplace(std::make_pair(m.rows, m.cols), std::move(*e));
    }

    // Bases of [E | z] at a generic point of {basis[skip] = 0}; skip = npos for the generic point.
    const std::size_t total = rows + cols;
    auto stratum_bases = [&](std::size_t skip) {
        std::vector<matroid::Mask> bases;
        std::vector<int> t(rows);
        std::iota(t.begin(), t.end(), 0);
        do {
            std::vector<int> I, J;
            std::vector<bool> in_a(rows, false);
            for (int x : t)
                if (x < static_cast<int>(rows))
                    in_a[x] = true;
                else
                    J.push_back(x - static_cast<int>(rows));
            for (std::size_t r = 0; r < rows; ++r)
                if (!in_a[r])
                    I.push_back(static_cast<int>(r));
            bool ok = true;
            if (!J.empty()) {
                auto it = exps.find({I, J});
                ok = it != exps.end() && (skip == static_cast<std::size_t>(-1) || it->second[skip] == 0);
            }
            if (ok) {
                matroid::Mask m = 0;
                for (int x : t)
                    m |= matroid::Mask{1} << x;
                bases.push_back(m);
            }
        } while (combi::next_combination(t, static_cast<int>(total)));
        return bases;
    };

    DiscriminantReport out;
    out.reduced = FactoredPolynomial(f.params);
    out.with_multiplicity = FactoredPolynomial(f.params);
    std::mt19937_64 rng(opt.seed);
    const auto sample = matroid::generic_euler_char(f, basis, opt.trials, rng);
    out.chi_star = sample.chi;
    const std::int64_t chi_comb = matroid::beta(matroid::BasisMatroid(total, stratum_bases(-1)));
    if (chi_comb != out.chi_star) {
        out.flagged = true;
        out.notes.push_back("sampled chi* " + std::to_string(out.chi_star) + " differs from the generic matroid value " +
                            std::to_string(chi_comb));
    }
    if (out.chi_star == 0)
        throw HypothesisError("generic Euler characteristic is zero");

    for (std::size_t i = 0; i < basis.size(); ++i) {
        FactorReport r;
        r.factor = basis[i];
        r.stratum_exponent = out.chi_star - matroid::beta(matroid::BasisMatroid(total, stratum_bases(i)));
        if (opt.witnesses) {
            std::vector<MultiPoly> avoid;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i)
                    avoid.push_back(basis[j]);
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(i)};
            std::mt19937_64 wrng(seq);
            r.witness = witness_point(basis[i], avoid, wrng, opt.witness_budget);
            if (r.witness) {
                r.exponent = out.chi_star - matroid::signed_euler_char(f.evaluate(*r.witness));
                if (*r.exponent != r.stratum_exponent) {
                    out.flagged = true;
                    out.notes.push_back("witness and stratum exponents differ for " + basis[i].to_string());
                }
            } else {
                out.flagged = true;
                out.notes.push_back("no rational witness for " + basis[i].to_string());
            }
        }
        const std::int64_t e = r.exponent.value_or(r.stratum_exponent);
        out.reduced.multiply(basis[i]);
        if (e > 0)
            out.with_multiplicity.multiply(basis[i], static_cast<unsigned>(e));
        else
            out.notes.push_back("no Euler characteristic drop on " + basis[i].to_string());
        out.per_factor.push_back(std::move(r));
    }
    return out;
}

} // namespace eulerdisc::discriminant
