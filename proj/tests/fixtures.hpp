#pragma once

#include "eulerdisc/combi.hpp"
#include "eulerdisc/family.hpp"

#include <random>

namespace fixtures {

using eulerdisc::ParamFamily;
using eulerdisc::combi::EdgePair;
using eulerdisc::combi::PatternGraph;

inline PatternGraph artificial()
{
    return PatternGraph(3, 4, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}});
}

inline PatternGraph two_site()
{
    return PatternGraph(3, 3, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 5}});
}

inline PatternGraph three_site()
{
    return PatternGraph(4, 6,
                        {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {1, 4}, {1, 5}, {1, 8}, {2, 4}, {2, 6},
                         {2, 8}, {2, 9}, {3, 4}, {3, 7}, {3, 9}});
}

/// Connected bipartite pattern with every vertex covered, sides of size 1..max_side.
inline PatternGraph random_connected_pattern(std::mt19937_64& rng, int max_side = 4, double p = 0.55)
{
    std::uniform_int_distribution<int> side(1, max_side);
    std::bernoulli_distribution coin(p);
    for (;;) {
        const int a = side(rng), b = side(rng);
        std::vector<EdgePair> e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (coin(rng))
                    e.emplace_back(i, a + j);
        try {
            PatternGraph g(a, b, e);
            if (eulerdisc::combi::is_connected(g))
                return g;
        } catch (const std::exception&) {
        }
    }
}

inline ParamFamily family(int k, const std::vector<std::string>& params,
                          const std::vector<std::vector<std::string>>& rows)
{
    ParamFamily f;
    f.k = k;
    f.params = eulerdisc::symcore::make_vars(params);
    for (const auto& r : rows) {
        f.entries.emplace_back();
        for (const auto& s : r)
            f.entries.back().push_back(eulerdisc::symcore::parse(s, f.params));
    }
    f.validate();
    return f;
}

inline ParamFamily z1_family()
{
    return family(2, {"w1", "w2", "w3"},
                  {{"w1+w2", "1", "0", "0"}, {"1", "0", "1", "w2+w3"}, {"0", "w1-w3", "w1+w2+w3", "1"}});
}

inline ParamFamily z2_family()
{
    const auto f = z1_family();
    return f.substituted(2, eulerdisc::symcore::parse("-w1-w2", f.params));
}

inline ParamFamily two_site_physical()
{
    return family(2, {"X1", "X2", "Y12"}, {{"X1+X2", "X1+Y12", "X2+Y12"}, {"1", "1", "0"}, {"1", "0", "1"}});
}

inline ParamFamily three_site_physical()
{
    return family(3, {"X1", "X2", "X3", "Y12", "Y23"},
                  {{"X1+X2+X3", "X1+Y12", "X2+Y12+Y23", "X3+Y23", "X1+X2+Y23", "X2+X3+Y12"},
                   {"1", "1", "0", "0", "1", "0"},
                   {"1", "0", "1", "0", "1", "1"},
                   {"1", "0", "0", "1", "0", "1"}});
}

} // namespace fixtures
