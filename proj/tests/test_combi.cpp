#include <doctest.h>

#include "eulerdisc/combi.hpp"
#include "eulerdisc/errors.hpp"
#include "eulerdisc/symcore.hpp"

#include <random>
#include <set>

using namespace eulerdisc;
using namespace eulerdisc::combi;

namespace {

PatternGraph artificial()
{
    return PatternGraph(3, 4, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}});
}

PatternGraph two_site()
{
    return PatternGraph(3, 3, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 5}});
}

// Random bipartite graph without the every-vertex-covered requirement.
PatternGraph random_bipartite(std::mt19937_64& rng, int a, int b, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<EdgePair> e;
    VertexSet l, r;
    for (int i = 0; i < a; ++i)
        l.push_back(i);
    for (int j = 0; j < b; ++j)
        r.push_back(a + j);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (coin(rng))
                e.emplace_back(i, a + j);
    return PatternGraph::subgraph(l, r, e, a + b);
}

bool hall_holds_brute(const PatternGraph& g)
{
    const int n = static_cast<int>(g.left().size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet w;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1)
                w.push_back(g.left()[i]);
        if (neighborhood(g, w).size() < w.size())
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("pattern graph validation")
{
    CHECK_THROWS_AS(PatternGraph(2, 2, {{0, 2}, {1, 3}, {0, 2}}), HypothesisError);
    CHECK_THROWS_AS(PatternGraph(2, 2, {{0, 2}, {0, 3}}), HypothesisError);
    CHECK_THROWS_AS(PatternGraph(2, 2, {{0, 1}}), HypothesisError);
    CHECK_THROWS_AS(PatternGraph(1, 1, {}), HypothesisError);
    PatternGraph g = artificial();
    CHECK(g.edges().size() == 8);
    CHECK(g.edge_label({1, 5}) == "15");
}

TEST_CASE("induced subgraphs")
{
    PatternGraph g = artificial();
    PatternGraph a = induced(g, {0, 1, 2}, {3, 4, 6});
    CHECK(a.edges().size() == 6);
    CHECK(is_connected(a));

    PatternGraph b = induced(g, {0, 1}, {5, 6});
    CHECK(b.edges() == std::vector<EdgePair>{{1, 5}, {1, 6}});
    CHECK(b.left() == VertexSet{0, 1});
    CHECK_FALSE(is_connected(b));

    PatternGraph c = induced(g, g.left(), g.right());
    CHECK(c.edges() == g.edges());
    CHECK(c.vertices() == g.vertices());
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(PatternGraph::subgraph({0}, {}, {}, 1)));
    PatternGraph g = artificial();
    std::vector<EdgePair> rest;
    for (const auto& e : g.edges())
        if (e.first != 0)
            rest.push_back(e);
    CHECK_FALSE(is_connected(PatternGraph::subgraph(g.left(), g.right(), rest, 7)));
    CHECK(is_connected(g));
}

TEST_CASE("neighborhoods")
{
    PatternGraph g = artificial();
    CHECK(neighborhood(g, {}).empty());
    CHECK(neighborhood(g, {0}) == VertexSet{3, 4});
    CHECK(neighborhood(g, {1, 2}) == VertexSet{3, 4, 5, 6});
    CHECK(neighborhood(g, {5}) == VertexSet{1, 2});
}

TEST_CASE("saturating matchings and Hall violators")
{
    PatternGraph k22(2, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto m = saturating_matching(k22, Side::left);
    REQUIRE(m.matching);
    CHECK(m.matching->size() == 2);

    auto ts = saturating_matching(two_site(), Side::left);
    REQUIRE(ts.matching);
    CHECK(ts.matching->size() == 3);

    // Left vertices 0 and 1 both only see vertex 3.
    PatternGraph bad(3, 3, {{0, 3}, {1, 3}, {2, 4}, {2, 5}});
    auto r = saturating_matching(bad, Side::left);
    CHECK_FALSE(r.matching);
    REQUIRE(!r.hall_violator.empty());
    CHECK(neighborhood(bad, r.hall_violator).size() < r.hall_violator.size());

    // Four right vertices cannot be saturated by three left ones.
    auto right = saturating_matching(artificial(), Side::right);
    CHECK_FALSE(right.matching);
    CHECK(neighborhood(artificial(), right.hall_violator).size() < right.hall_violator.size());
    CHECK(saturating_matching(artificial(), Side::left).matching);
    CHECK(saturating_matching(two_site(), Side::right).matching);
}

TEST_CASE("Hall equivalence on random small graphs")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 400; ++t) {
        const int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
        PatternGraph g = random_bipartite(rng, a, b, 0.35 + 0.1 * (t % 4));
        auto m = saturating_matching(g, Side::left);
        CHECK(m.matching.has_value() == hall_holds_brute(g));
        if (m.matching) {
            std::set<int> used_l, used_r;
            for (const auto& [i, j] : *m.matching) {
                CHECK(g.has_edge(i, j));
                CHECK(used_l.insert(i).second);
                CHECK(used_r.insert(j).second);
            }
            CHECK(used_l.size() == g.left().size());
        } else {
            CHECK(neighborhood(g, m.hall_violator).size() < m.hall_violator.size());
        }
    }
}

TEST_CASE("perfect matching iff symbolic determinant is nonzero")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 120; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        PatternGraph g = random_bipartite(rng, n, n, 0.3 + 0.1 * (t % 5));
        std::vector<std::string> names;
        for (const auto& e : g.edges())
            names.push_back("z" + std::to_string(e.first) + "_" + std::to_string(e.second));
        auto vars = symcore::make_vars(names);
        symcore::PolyMatrix m(n, std::vector<symcore::MultiPoly>(n, symcore::MultiPoly(vars)));
        for (std::size_t k = 0; k < g.edges().size(); ++k) {
            const auto [i, j] = g.edges()[k];
            m[i][j - n] = symcore::MultiPoly::variable(vars, k);
        }
        const bool nonzero = !symcore::det(m).is_zero();
        CHECK(nonzero == saturating_matching(g, Side::left).matching.has_value());
    }
}

TEST_CASE("condition (*)")
{
    CHECK(condition_star(PatternGraph(1, 1, {{0, 1}})).holds);
    PatternGraph g = artificial();
    CHECK(condition_star(two_site()).holds);
    CHECK_THROWS_AS(condition_star(g), HypothesisError);

    // K_{2,2} on {1,2} x {5,6} satisfies (*); its minor is a factor of E_A.
    CHECK(condition_star(induced(g, {1, 2}, {5, 6})).holds);
    auto vars = symcore::make_vars({"z15", "z16", "z25", "z26"});
    symcore::PolyMatrix m{{symcore::parse("z15", vars), symcore::parse("z16", vars)},
                          {symcore::parse("z25", vars), symcore::parse("z26", vars)}};
    CHECK(symcore::det(m).to_string() == "z15*z26 - z16*z25");

    // Vertex 0 is isolated.
    StarResult iso = condition_star(induced(g, {0, 1}, {5, 6}));
    CHECK_FALSE(iso.holds);
    CHECK(iso.violator == VertexSet{0});

    // Connected (path 0-3-1-5) but N({0}) = {3}.
    PatternGraph path = induced(g, {0, 1}, {3, 5});
    CHECK(is_connected(path));
    StarResult r = condition_star(path);
    CHECK_FALSE(r.holds);
    CHECK(r.violator == VertexSet{0});
}

TEST_CASE("condition (*) implies single-edge deletions keep a saturating matching")
{
    std::mt19937_64 rng(23);
    int tested = 0;
    for (int t = 0; t < 400; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        PatternGraph g = random_bipartite(rng, n, n, 0.55);
        if (!condition_star(g).holds)
            continue;
        ++tested;
        for (std::size_t k = 0; k < g.edges().size(); ++k) {
            std::vector<EdgePair> e = g.edges();
            e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK(saturating_matching(PatternGraph::subgraph(g.left(), g.right(), e, 2 * n), Side::left).matching);
        }
    }
    CHECK(tested > 20);
}

TEST_CASE("contraction")
{
    PatternGraph g = artificial();
    Contraction c = contract(g, induced(g, {0}, {3}));
    CHECK(c.edges.size() == 7);
    CHECK(c.surviving_vertices == VertexSet{1, 2, 4, 5, 6});

    CHECK(contract(g, g).edges.empty());

    Contraction d = contract(g, induced(g, {0, 1, 2}, {3, 4, 5}));
    REQUIRE(d.edges.size() == 2);
    CHECK(d.edges[0].edge == EdgePair{1, 6});
    CHECK(d.edges[1].edge == EdgePair{2, 6});
    CHECK(d.edges[0].endpoints == VertexSet{6});
    CHECK(d.surviving_vertices == VertexSet{6});

    CHECK_THROWS_AS(contract(g, induced(g, {0, 1}, {5, 6})), HypothesisError);
}

TEST_CASE("cosmo graphs and connected subgraphs")
{
    CosmoGraph two(2, {{1, 2, ""}});
    CHECK(two.edges()[0].id == "12");
    auto s2 = connected_subgraphs(two);
    REQUIRE(s2.size() == 3);
    CHECK(s2[0].vertices == VertexSet{1});
    CHECK(s2[2].edges == std::vector<std::size_t>{0});

    CosmoGraph bubble(2, {{1, 2, ""}, {1, 2, ""}});
    CHECK(bubble.edges()[0].id == "12a");
    CHECK(bubble.edges()[1].id == "12b");
    CHECK(connected_subgraphs(bubble).size() == 5);
    CHECK_FALSE(bubble.is_tree());

    CosmoGraph three(3, {{1, 2, ""}, {2, 3, ""}});
    CHECK(three.is_tree());
    auto s3 = connected_subgraphs(three);
    CHECK(s3.size() == 6);

    CosmoGraph star(4, {{1, 2, ""}, {1, 3, ""}, {1, 4, ""}});
    for (const auto& s : connected_subgraphs(star)) {
        CHECK(is_connected(star, s));
        for (std::size_t e : s.edges) {
            CHECK(std::binary_search(s.vertices.begin(), s.vertices.end(), star.edges()[e].u));
            CHECK(std::binary_search(s.vertices.begin(), s.vertices.end(), star.edges()[e].v));
        }
    }

    CosmoGraph named(2, {{2, 1, "a"}});
    CHECK(named.edges()[0].u == 1);
    CHECK(named.edges()[0].id == "a");
    CHECK_THROWS_AS(CosmoGraph(3, {{1, 2, ""}}), HypothesisError);
    CHECK_THROWS_AS(CosmoGraph(2, {{1, 2, "a"}, {1, 2, "a"}}), HypothesisError);
    CHECK_THROWS_AS(connected_subgraphs(CosmoGraph(9, {{1, 2, ""}, {2, 3, ""}, {3, 4, ""}, {4, 5, ""}, {5, 6, ""},
                                                       {6, 7, ""}, {7, 8, ""}, {8, 9, ""}})),
                    SizeLimitError);
}
