#include "eulerdisc/combi.hpp"

#include "eulerdisc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eulerdisc::combi {

bool next_combination(std::vector<int>& c, int n)
{
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
    return true;
}

PatternGraph::PatternGraph(int left_size, int right_size, std::vector<EdgePair> edges)
{
    if (left_size < 1 || right_size < 1)
        throw HypothesisError("pattern graph needs at least one vertex on each side");
    ambient_ = left_size + right_size;
    left_.resize(left_size);
    right_.resize(right_size);
    std::iota(left_.begin(), left_.end(), 0);
    std::iota(right_.begin(), right_.end(), left_size);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        if (a < 0 || a >= left_size || b < left_size || b >= ambient_)
            throw HypothesisError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " does not join the left side 0.." + std::to_string(left_size - 1) +
                                  " to the right side " + std::to_string(left_size) + ".." +
                                  std::to_string(ambient_ - 1));
        if (i > 0 && edges[i - 1] == edges[i])
            throw HypothesisError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (edges.empty())
        throw HypothesisError("pattern graph has no edges");
    std::vector<bool> covered(ambient_, false);
    for (const auto& [a, b] : edges)
        covered[a] = covered[b] = true;
    for (int v = 0; v < ambient_; ++v)
        if (!covered[v])
            throw HypothesisError("vertex " + std::to_string(v) + " is not an endpoint of any edge");
    edges_ = std::move(edges);
}

PatternGraph PatternGraph::subgraph(VertexSet left, VertexSet right, std::vector<EdgePair> edges, int ambient)
{
    PatternGraph g;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::sort(edges.begin(), edges.end());
    g.left_ = std::move(left);
    g.right_ = std::move(right);
    g.edges_ = std::move(edges);
    g.ambient_ = ambient;
    return g;
}

VertexSet PatternGraph::vertices() const
{
    VertexSet v = left_;
    v.insert(v.end(), right_.begin(), right_.end());
    return v;
}

bool PatternGraph::has_edge(int i, int j) const
{
    return std::binary_search(edges_.begin(), edges_.end(), EdgePair{i, j});
}

std::string PatternGraph::edge_label(const EdgePair& e) const
{
    if (ambient_ > 10)
        return std::to_string(e.first) + "_" + std::to_string(e.second);
    return std::to_string(e.first) + std::to_string(e.second);
}

PatternGraph induced(const PatternGraph& g, const VertexSet& I, const VertexSet& J)
{
    std::set<int> si(I.begin(), I.end()), sj(J.begin(), J.end());
    std::vector<EdgePair> edges;
    for (const auto& e : g.edges())
        if (si.count(e.first) && sj.count(e.second))
            edges.push_back(e);
    return PatternGraph::subgraph(VertexSet(si.begin(), si.end()), VertexSet(sj.begin(), sj.end()), std::move(edges),
                                  g.ambient_size());
}

namespace {

bool connected_on(const VertexSet& vertices, const std::vector<EdgePair>& edges)
{
    if (vertices.size() <= 1)
        return true;
    std::map<int, std::vector<int>> adj;
    for (int v : vertices)
        adj[v];
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> seen{vertices.front()};
    std::vector<int> stack{vertices.front()};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (seen.insert(w).second)
                stack.push_back(w);
    }
    return seen.size() == adj.size();
}

} // namespace

bool is_connected(const PatternGraph& g)
{
    return connected_on(g.vertices(), g.edges());
}

VertexSet neighborhood(const PatternGraph& g, const VertexSet& T)
{
    std::set<int> t(T.begin(), T.end()), out;
    for (const auto& [a, b] : g.edges()) {
        if (t.count(a))
            out.insert(b);
        if (t.count(b))
            out.insert(a);
    }
    return {out.begin(), out.end()};
}

namespace {

struct Kuhn {
    std::map<int, std::vector<int>> adj;
    std::map<int, int> match_of_target;
    std::set<int> visited_src, visited_dst;

    bool augment(int u)
    {
        visited_src.insert(u);
        for (int w : adj[u]) {
            if (!visited_dst.insert(w).second)
                continue;
            auto it = match_of_target.find(w);
            if (it == match_of_target.end() || augment(it->second)) {
                match_of_target[w] = u;
                return true;
            }
        }
        return false;
    }
};

} // namespace

MatchingResult saturating_matching(const PatternGraph& g, Side side)
{
    const VertexSet& src = side == Side::left ? g.left() : g.right();
    Kuhn k;
    for (int v : src)
        k.adj[v];
    for (const auto& [a, b] : g.edges()) {
        if (side == Side::left)
            k.adj[a].push_back(b);
        else
            k.adj[b].push_back(a);
    }
    MatchingResult r;
    for (int u : src) {
        k.visited_src.clear();
        k.visited_dst.clear();
        if (!k.augment(u)) {
            r.hall_violator.assign(k.visited_src.begin(), k.visited_src.end());
            return r;
        }
    }
    std::vector<EdgePair> m;
    for (const auto& [dst, s] : k.match_of_target)
        m.push_back(side == Side::left ? EdgePair{s, dst} : EdgePair{dst, s});
    std::sort(m.begin(), m.end());
    r.matching = std::move(m);
    return r;
}

StarResult condition_star(const PatternGraph& g)
{
    const int n1 = static_cast<int>(g.left().size());
    if (g.left().size() != g.right().size())
        throw HypothesisError("condition (*) needs |V_1| = |V_2|, got " + std::to_string(g.left().size()) + " and " +
                              std::to_string(g.right().size()));
    StarResult r;
    if (n1 == 1) {
        r.holds = is_connected(g);
        return r;
    }
    if (n1 > 12)
        throw SizeLimitError("condition (*) enumeration limited to |V_1| <= 12");
    for (int k = 1; k < n1; ++k) {
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        do {
            VertexSet w;
            for (int i : c)
                w.push_back(g.left()[i]);
            if (neighborhood(g, w).size() <= w.size()) {
                r.violator = std::move(w);
                return r;
            }
        } while (next_combination(c, n1));
    }
    r.holds = true;
    return r;
}

Contraction contract(const PatternGraph& g, const PatternGraph& h)
{
    if (!is_connected(h))
        throw HypothesisError("contracted subgraph is not connected");
    const VertexSet hv = h.vertices(), gv = g.vertices();
    const std::set<int> inside(hv.begin(), hv.end());
    for (int v : hv)
        if (std::find(gv.begin(), gv.end(), v) == gv.end())
            throw HypothesisError("subgraph vertex " + std::to_string(v) + " is not in the graph");
    for (const auto& e : h.edges())
        if (!g.has_edge(e.first, e.second))
            throw HypothesisError("subgraph edge is not in the graph");
    Contraction c;
    for (int v : gv)
        if (!inside.count(v))
            c.surviving_vertices.push_back(v);
    for (const auto& e : g.edges()) {
        if (h.has_edge(e.first, e.second))
            continue;
        ContractedEdge ce{e, {}};
        if (!inside.count(e.first))
            ce.endpoints.push_back(e.first);
        if (!inside.count(e.second))
            ce.endpoints.push_back(e.second);
        c.edges.push_back(std::move(ce));
    }
    return c;
}

CosmoGraph::CosmoGraph(int vertex_count, std::vector<CosmoEdge> edges) : n_(vertex_count)
{
    if (vertex_count < 1)
        throw HypothesisError("graph needs at least one vertex");
    std::map<std::pair<int, int>, int> multiplicity, seen;
    for (auto& e : edges) {
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw HypothesisError("edge endpoint outside 1.." + std::to_string(n_));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.id.empty())
            ++multiplicity[{e.u, e.v}];
    }
    for (auto& e : edges) {
        if (!e.id.empty())
            continue;
        std::string base = n_ >= 10 ? std::to_string(e.u) + "_" + std::to_string(e.v)
                                    : std::to_string(e.u) + std::to_string(e.v);
        if (multiplicity[{e.u, e.v}] > 1)
            base += static_cast<char>('a' + seen[{e.u, e.v}]++);
        e.id = std::move(base);
    }
    std::set<std::string> ids;
    for (const auto& e : edges)
        if (!ids.insert(e.id).second)
            throw HypothesisError("duplicate edge id '" + e.id + "'");
    edges_ = std::move(edges);
    SubgraphSelection all;
    for (int v = 1; v <= n_; ++v)
        all.vertices.push_back(v);
    all.edges.resize(edges_.size());
    std::iota(all.edges.begin(), all.edges.end(), 0);
    if (!is_connected(*this, all))
        throw HypothesisError("graph is not connected");
}

bool CosmoGraph::is_tree() const
{
    for (const auto& e : edges_)
        if (e.u == e.v)
            return false;
    return static_cast<int>(edges_.size()) == n_ - 1;
}

bool is_connected(const CosmoGraph& g, const SubgraphSelection& s)
{
    std::vector<EdgePair> es;
    for (std::size_t i : s.edges)
        es.emplace_back(g.edges().at(i).u, g.edges().at(i).v);
    return connected_on(s.vertices, es);
}

std::vector<SubgraphSelection> connected_subgraphs(const CosmoGraph& g, int max_vertices, int max_edges)
{
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw SizeLimitError("connected subgraph enumeration limited to " + std::to_string(max_vertices) +
                             " vertices, graph has " + std::to_string(n));
    if (static_cast<int>(g.edges().size()) > max_edges)
        throw SizeLimitError("connected subgraph enumeration limited to " + std::to_string(max_edges) +
                             " edges, graph has " + std::to_string(g.edges().size()));
    std::vector<SubgraphSelection> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        do {
            SubgraphSelection base;
            for (int i : c)
                base.vertices.push_back(i + 1);
            std::vector<std::size_t> inner;
            for (std::size_t e = 0; e < g.edges().size(); ++e) {
                const auto& ed = g.edges()[e];
                if (std::binary_search(base.vertices.begin(), base.vertices.end(), ed.u) &&
                    std::binary_search(base.vertices.begin(), base.vertices.end(), ed.v))
                    inner.push_back(e);
            }
            const int m = static_cast<int>(inner.size());
            for (int j = 0; j <= m; ++j) {
                std::vector<int> ec(j);
                std::iota(ec.begin(), ec.end(), 0);
                do {
                    SubgraphSelection s{base.vertices, {}};
                    for (int i : ec)
                        s.edges.push_back(inner[i]);
                    if (is_connected(g, s))
                        out.push_back(std::move(s));
                } while (next_combination(ec, m));
            }
        } while (next_combination(c, n));
    }
    return out;
}

} // namespace eulerdisc::combi
