#include "eulerdisc/cosmo.hpp"

#include "eulerdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eulerdisc::cosmo {

using combi::CosmoGraph;
using combi::SubgraphSelection;
using symcore::MultiPoly;
using symcore::RationalFunction;

symcore::VarTablePtr energy_variables(const CosmoGraph& g)
{
    std::vector<std::string> names;
    for (int v = 1; v <= g.vertex_count(); ++v)
        names.push_back("X" + std::to_string(v));
    for (const auto& e : g.edges())
        names.push_back("Y" + e.id);
    return symcore::make_vars(std::move(names));
}

namespace {

bool contains(const combi::VertexSet& s, int v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

LinearForm form_of(const CosmoGraph& g, const symcore::VarTablePtr& vars, const SubgraphSelection& h)
{
    const int n = g.vertex_count();
    LinearForm f{MultiPoly(vars), std::vector<int>(n, 0), h};
    for (int v : h.vertices) {
        f.constant += MultiPoly::variable(vars, v - 1);
        f.alpha[v - 1] = 1;
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& ed = g.edges()[e];
        const int inside = contains(h.vertices, ed.u) + contains(h.vertices, ed.v);
        const MultiPoly y = MultiPoly::variable(vars, n + e);
        if (inside == 1)
            f.constant += y;
        else if (inside == 2 && std::find(h.edges.begin(), h.edges.end(), e) == h.edges.end())
            f.constant += y.scaled(2);
    }
    return f;
}

class Recursion {
public:
    Recursion(const CosmoGraph& g, symcore::VarTablePtr vars) : g_(g), vars_(std::move(vars)) {}

    RationalFunction psi(const combi::VertexSet& verts, const std::vector<std::size_t>& edges,
                         const std::map<int, MultiPoly>& energy)
    {
        std::string key;
        for (int v : verts)
            key += std::to_string(v) + ":" + energy.at(v).to_string() + ";";
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        MultiPoly total(vars_);
        for (int v : verts)
            total += energy.at(v);
        RationalFunction out;
        if (verts.size() == 1) {
            out = RationalFunction::inverse_of(total);
        } else {
            std::optional<RationalFunction> sum;
            for (std::size_t e : edges) {
                const auto& ed = g_.edges()[e];
                std::vector<std::size_t> rest;
                for (std::size_t f : edges)
                    if (f != e)
                        rest.push_back(f);
                const combi::VertexSet side_u = component(ed.u, verts, rest);
                combi::VertexSet side_v;
                for (int v : verts)
                    if (!contains(side_u, v))
                        side_v.push_back(v);
                const MultiPoly y = MultiPoly::variable(vars_, g_.vertex_count() + e);
                auto term = part(side_u, rest, energy, ed.u, y) * part(side_v, rest, energy, ed.v, y);
                sum = sum ? *sum + term : term;
            }
            out = *sum * RationalFunction::inverse_of(total);
            out.reduce();
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    RationalFunction part(const combi::VertexSet& side, const std::vector<std::size_t>& edges,
                          std::map<int, MultiPoly> energy, int endpoint, const MultiPoly& y)
    {
        energy.at(endpoint) += y;
        std::vector<std::size_t> inner;
        for (std::size_t e : edges)
            if (contains(side, g_.edges()[e].u))
                inner.push_back(e);
        return psi(side, inner, energy);
    }

    combi::VertexSet component(int start, const combi::VertexSet& verts, const std::vector<std::size_t>& edges) const
    {
        std::set<int> seen{start};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (std::size_t e : edges) {
                const auto& ed = g_.edges()[e];
                const int w = ed.u == v ? ed.v : ed.v == v ? ed.u : 0;
                if (w && contains(verts, w) && seen.insert(w).second)
                    stack.push_back(w);
            }
        }
        return {seen.begin(), seen.end()};
    }

    const CosmoGraph& g_;
    symcore::VarTablePtr vars_;
    std::map<std::string, RationalFunction> memo_;
};

} // namespace

std::vector<LinearForm> facet_forms(const CosmoGraph& g, int max_vertices, int max_edges)
{
    const auto vars = energy_variables(g);
    const auto subs = combi::connected_subgraphs(g, max_vertices, max_edges);
    SubgraphSelection all;
    for (int v = 1; v <= g.vertex_count(); ++v)
        all.vertices.push_back(v);
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        all.edges.push_back(e);
    std::vector<LinearForm> out{form_of(g, vars, all)};
    for (const auto& h : subs) {
        if (h == all)
            continue;
        LinearForm f = form_of(g, vars, h);
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const LinearForm& o) { return o.constant == f.constant && o.alpha == f.alpha; });
        if (!dup)
            out.push_back(std::move(f));
    }
    return out;
}

RationalFunction wavefunction(const CosmoGraph& g, int max_vertices, long numerator_limit)
{
    if (!g.is_tree())
        throw HypothesisError("wavefunction recursion requires a tree");
    if (g.vertex_count() > max_vertices)
        throw SizeLimitError("wavefunction limited to " + std::to_string(max_vertices) + " vertices");
    // The numerator is homogeneous of degree #facets - (2n - 1); bound its dense size.
    const long forms = static_cast<long>(facet_forms(g, max_vertices).size());
    const long deg = std::max(0L, forms - (2L * g.vertex_count() - 1));
    const long nv = g.vertex_count() + static_cast<long>(g.edges().size());
    mpz_class monomials;
    mpz_bin_uiui(monomials.get_mpz_t(), deg + nv - 1, nv - 1);
    if (monomials > numerator_limit)
        throw SizeLimitError("wavefunction numerator may have up to " + monomials.get_str() + " terms (limit " +
                             std::to_string(numerator_limit) + ")");
    const auto vars = energy_variables(g);
    combi::VertexSet verts;
    std::map<int, MultiPoly> energy;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        verts.push_back(v);
        energy.emplace(v, MultiPoly::variable(vars, v - 1));
    }
    std::vector<std::size_t> edges(g.edges().size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        edges[e] = e;
    return Recursion(g, vars).psi(verts, edges, energy);
}

ParamFamily coefficient_family(const CosmoGraph& g, int max_vertices, int max_edges)
{
    const auto forms = facet_forms(g, max_vertices, max_edges);
    ParamFamily f;
    f.k = g.vertex_count();
    f.params = energy_variables(g);
    f.entries.assign(f.k + 1, {});
    for (const auto& l : forms) {
        f.entries[0].push_back(l.constant);
        for (int v = 0; v < f.k; ++v)
            f.entries[v + 1].push_back(MultiPoly::constant(f.params, l.alpha[v]));
    }
    return f;
}

combi::PatternGraph cosmo_pattern(const CosmoGraph& g, int max_vertices, int max_edges)
{
    const auto f = coefficient_family(g, max_vertices, max_edges);
    const int rows = static_cast<int>(f.rows()), cols = static_cast<int>(f.cols());
    std::vector<combi::EdgePair> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!f.entries[r][c].is_zero())
                edges.emplace_back(r, rows + c);
    return combi::PatternGraph(rows, cols, std::move(edges));
}

symcore::FactoredPolynomial cosmo_pad(const CosmoGraph& g, int max_vertices, int max_edges)
{
    return discriminant::pad_sparse(cosmo_pattern(g, max_vertices, max_edges));
}

discriminant::DiscriminantReport cosmo_euler_disc(const CosmoGraph& g, const discriminant::DiscOptions& opt,
                                                  int max_vertices, int max_edges)
{
    auto rep = discriminant::euler_disc(coefficient_family(g, max_vertices, max_edges), opt);
    for (auto& f : rep.per_factor) {
        if (f.factor.size() != 1 || f.factor.total_degree() != 1)
            continue;
        const auto s = f.factor.support();
        f.numerator_normalized = s.size() == 1 && s.front() >= static_cast<std::size_t>(g.vertex_count());
    }
    return rep;
}

} // namespace eulerdisc::cosmo
