// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "eulerdisc/combi.hpp"
#include "eulerdisc/cosmo.hpp"
#include "eulerdisc/discriminant.hpp"
#include "eulerdisc/errors.hpp"
#include "eulerdisc/lattice.hpp"
#include "eulerdisc/matroid.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace eulerdisc;
using combi::PatternGraph;
using symcore::FactoredPolynomial;
using symcore::MultiPoly;
using symcore::parse;

namespace {

struct Checker {
    std::vector<std::string> failures;
    int checks = 0;

    void operator()(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

using Expected = std::vector<std::pair<std::string, unsigned>>;

// Factor set and exponents, exactly.
void expect_factors(Checker& check, const std::string& tag, const FactoredPolynomial& e, const Expected& expected)
{
    check(e.size() == expected.size(),
          tag + ": " + std::to_string(e.size()) + " factors, expected " + std::to_string(expected.size()));
    for (const auto& [text, exp] : expected) {
        const auto got = e.exponent_of(parse(text, e.vars()));
        check(got == exp, tag + ": " + text + " has exponent " + (got ? std::to_string(*got) : "none") +
                              ", expected " + std::to_string(exp));
    }
}

std::string vec(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------

void criterion1(Checker& check)
{
    const auto g = fixtures::artificial();
    const auto c = lattice::edge_config(g);
    const int dim = lattice::lattice_normalize(c).dimension;
    const auto fv = lattice::f_vector(c);
    const auto vol = lattice::normalized_volume(c);
    check(dim == 5, "dim " + std::to_string(dim) + ", expected 5");
    check(fv == std::vector<std::int64_t>{8, 26, 41, 31, 10}, "f-vector " + vec(fv) + ", expected (8,26,41,31,10)");
    check(vol == 5, "volume " + std::to_string(vol) + ", expected 5");

    const auto e = discriminant::pad_sparse(g);
    expect_factors(check, "E_A", e,
                   {{"z03", 3},
                    {"z13", 3},
                    {"z04", 3},
                    {"z24", 3},
                    {"z15", 2},
                    {"z25", 2},
                    {"z16", 2},
                    {"z26", 2},
                    {"z15*z26 - z16*z25", 2},
                    {"z03*z24*z15 + z13*z04*z25", 1},
                    {"z03*z24*z16 + z13*z04*z26", 1}});
    std::multiset<unsigned> exps;
    for (const auto& f : e.factors())
        exps.insert(f.exponent);
    check(exps == std::multiset<unsigned>{3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1}, "exponent multiset");
    check(e.total_degree() == 30, "total degree " + std::to_string(e.total_degree()) + ", expected 30");
}

void criterion2(Checker& check)
{
    const auto g = fixtures::artificial();
    // Leading Hilbert coefficients 1/8 and 1/12 times 4!.
    const auto u03 = lattice::subdiagram_volume(g, combi::induced(g, {0}, {3}));
    const auto u15 = lattice::subdiagram_volume(g, combi::induced(g, {1}, {5}));
    check(u03 == 24 / 8, "u(03) = " + std::to_string(u03) + ", expected 3");
    check(u15 == 24 / 12, "u(15) = " + std::to_string(u15) + ", expected 2");
}

void criterion3(Checker& check)
{
    const auto g = fixtures::two_site();
    const auto c = lattice::edge_config(g);
    auto fv = lattice::f_vector(c);
    fv.push_back(1);
    check(fv == std::vector<std::int64_t>{7, 17, 18, 8, 1}, "f-vector " + vec(fv) + ", expected (7,17,18,8,1)");
    const auto vol = lattice::normalized_volume(c);
    check(vol == 4, "volume " + std::to_string(vol) + ", expected 4");

    const auto e = discriminant::pad_sparse(g);
    check(e.total_degree() == 20, "E_A degree " + std::to_string(e.total_degree()) + ", expected 20");
    expect_factors(check, "E_A", e,
                   {{"z03", 1},
                    {"z04", 2},
                    {"z05", 2},
                    {"z13", 2},
                    {"z14", 2},
                    {"z23", 2},
                    {"z25", 2},
                    {"z03*z14 - z04*z13", 1},
                    {"z03*z25 - z05*z23", 1},
                    {"z03*z14*z25 - z05*z14*z23 - z04*z13*z25", 1}});

    const auto r = discriminant::euler_disc(fixtures::two_site_physical());
    check(r.chi_star == 4, "chi* = " + std::to_string(r.chi_star) + ", expected 4");
    expect_factors(check, "E_chi", r.with_multiplicity,
                   {{"X1+X2", 1}, {"X1+Y12", 2}, {"X2+Y12", 2}, {"X2-Y12", 1}, {"X1-Y12", 1}, {"Y12", 1}});
}

void criterion4(Checker& check)
{
    const auto e = discriminant::pad_sparse(fixtures::three_site());
    check(e.total_degree() == 270, "E_A degree " + std::to_string(e.total_degree()) + ", expected 270");

    const auto r = discriminant::euler_disc(fixtures::three_site_physical());
    const Expected printed{{"X1+X2+X3", 1},      {"X1+Y12", 10},       {"X2+Y12+Y23", 9},    {"X3+Y23", 10},
                           {"X1+X2+Y23", 3},     {"X2+X3+Y12", 3},     {"X2+X3-Y12", 1},     {"X3-Y23", 6},
                           {"X1+X3-Y12-Y23", 1}, {"X1-Y12", 6},        {"X1+X2-Y23", 1},     {"X1-X3-Y12+Y23", 1},
                           {"X2-Y12+Y23", 3},    {"X2+Y12-Y23", 3},    {"Y12", 6},           {"Y23", 6},
                           {"X3-2*Y12-Y23", 1},  {"X1-Y12-2*Y23", 1},  {"X2-Y12-Y23", 1},    {"X1-Y12+2*Y23", 1},
                           {"X3+2*Y12-Y23", 1},  {"Y12-Y23", 1},       {"Y12+Y23", 1}};

    std::set<std::string> want, got;
    for (const auto& [t, x] : printed)
        want.insert(symcore::canonical_poly(parse(t, r.reduced.vars())).to_string());
    for (const auto& f : r.reduced.factors())
        got.insert(f.poly.to_string());
    check(want == got, "E_chi factor set differs");
    expect_factors(check, "E_chi", r.with_multiplicity, printed);
    check(r.with_multiplicity.total_degree() == 77,
          "E_chi degree " + std::to_string(r.with_multiplicity.total_degree()) + ", expected 77");

    // Exponents confirmed by an actual witness point.
    int verified = 0;
    for (const auto& f : r.per_factor) {
        if (!f.exponent)
            continue;
        for (const auto& [t, x] : printed)
            if (symcore::canonical_poly(parse(t, r.reduced.vars())) == f.factor && *f.exponent == x)
                ++verified;
    }
    check(verified >= 6, std::to_string(verified) + " witness-verified exponents, expected at least 6");
    check(r.chi_star == 30, "chi* = " + std::to_string(r.chi_star) + ", expected 30");
}

void criterion5(Checker& check)
{
    const auto z1 = discriminant::euler_disc(fixtures::z1_family());
    check(z1.chi_star == 5, "Z1 chi* = " + std::to_string(z1.chi_star) + ", expected 5");
    expect_factors(check, "Z1", z1.with_multiplicity,
                   {{"w1+w2", 3},
                    {"w1-w3", 3},
                    {"w2+w3", 2},
                    {"w1+w2+w3", 2},
                    {"w1*w2+w1*w3+w2^2+2*w2*w3+w3^2-1", 2},
                    {"w1^2+w1*w2-w1*w3+w1-w2*w3+w2+w3", 1},
                    {"w1^2*w2+w1^2*w3+w1*w2^2-w1*w3^2-w2^2*w3-w2*w3^2+1", 1}});

    const auto fam = fixtures::z2_family();
    const auto z2 = discriminant::euler_disc(fam);
    check(z2.chi_star == 3, "Z2 chi* = " + std::to_string(z2.chi_star) + ", expected 3");
    // Printed over (w1, w2, w3); restrict to w3 = -w1 - w2.
    const auto w3 = parse("-w1-w2", fam.params);
    Expected restricted;
    for (const auto& [t, x] : Expected{{"w1+w2", 2},
                                       {"w1-w3", 2},
                                       {"w2+w3", 2},
                                       {"w1^2*w2+w1^2*w3+w1*w2^2-w1*w3^2-w2^2*w3-w2*w3^2+1", 1}})
        restricted.emplace_back(parse(t, fam.params).substitute(2, w3).to_string(), x);
    expect_factors(check, "Z2", z2.with_multiplicity, restricted);

    // Every witness exponent must agree with the printed one; a missing witness must flag the run.
    for (const auto* rep : {&z1, &z2})
        for (const auto& f : rep->per_factor) {
            const auto printed = rep->with_multiplicity.exponent_of(f.factor).value_or(0);
            if (f.exponent)
                check(*f.exponent == static_cast<std::int64_t>(printed),
                      "witness exponent of " + f.factor.to_string() + " is " + std::to_string(*f.exponent));
            else
                check(rep->flagged, "unknown exponent of " + f.factor.to_string() + " without a flag");
        }
}

// (a) Hall equivalence and matching <-> determinant, exhaustive up to 4+4.
void property_a(Checker& check)
{
    std::vector<std::string> names;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            names.push_back("z" + std::to_string(i) + std::to_string(j));
    const auto vars = symcore::make_vars(names);

    int hall = 0, dets = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            combi::VertexSet l, r;
            for (int i = 0; i < a; ++i)
                l.push_back(i);
            for (int j = 0; j < b; ++j)
                r.push_back(a + j);
            for (unsigned mask = 0; mask < (1u << (a * b)); ++mask) {
                std::vector<combi::EdgePair> e;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        if (mask >> (i * b + j) & 1)
                            e.emplace_back(i, a + j);
                const auto g = PatternGraph::subgraph(l, r, e, a + b);
                const bool matched = combi::saturating_matching(g, combi::Side::left).matching.has_value();

                bool hall_ok = true;
                for (unsigned w = 1; w < (1u << a) && hall_ok; ++w) {
                    combi::VertexSet W;
                    for (int i = 0; i < a; ++i)
                        if (w >> i & 1)
                            W.push_back(i);
                    hall_ok = combi::neighborhood(g, W).size() >= W.size();
                }
                check(matched == hall_ok, "Hall equivalence fails on a " + std::to_string(a) + "+" +
                                              std::to_string(b) + " pattern, mask " + std::to_string(mask));
                ++hall;

                if (a == b) {
                    symcore::PolyMatrix m(a, std::vector<MultiPoly>(a, MultiPoly(vars)));
                    for (const auto& [i, j] : e)
                        m[i][j - a] = MultiPoly::variable(vars, i * 4 + (j - a));
                    check(!symcore::det(m).is_zero() == matched,
                          "matching/determinant mismatch on " + std::to_string(a) + "x" + std::to_string(a) +
                              " mask " + std::to_string(mask));
                    ++dets;
                }
            }
        }
    int expected = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            expected += 1 << (a * b);
    check(hall == expected, "Hall pattern count " + std::to_string(hall));
    check(dets == 2 + 16 + 512 + 65536, "determinant pattern count " + std::to_string(dets));
}

// (b) deg E_A = (dim + 1) vol.
void property_b(Checker& check)
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 20; ++t) {
        const auto g = fixtures::random_connected_pattern(rng);
        check(discriminant::degree_check(discriminant::pad_sparse(g), lattice::edge_config(g)),
              "degree identity fails on random pattern " + std::to_string(t));
    }
}

// (c) Volume exponents equal chi drops at witnesses.
void property_c(Checker& check)
{
    std::mt19937_64 rng(2025);
    for (const auto& g : {fixtures::artificial(), fixtures::two_site()}) {
        const auto pad = discriminant::pad_sparse(g);
        const auto fam = discriminant::edmonds_family(g);
        const auto vol = lattice::normalized_volume(lattice::edge_config(g));
        std::vector<MultiPoly> all;
        for (const auto& f : pad.factors())
            all.push_back(f.poly);
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto others = all;
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            const auto w = discriminant::witness_point(all[i], others, rng);
            if (!w) {
                check(false, "no witness for " + all[i].to_string());
                continue;
            }
            const auto chi = matroid::signed_euler_char(fam.evaluate(*w));
            check(vol - chi == pad.factors()[i].exponent,
                  all[i].to_string() + ": drop " + std::to_string(vol - chi) + ", exponent " +
                      std::to_string(pad.factors()[i].exponent));
        }
    }
}

class MinorView : public matroid::Matroid {
public:
    MinorView(const Matroid& base, matroid::Mask contracted, matroid::Mask kept) : base_(base), c_(contracted)
    {
        for (std::size_t i = 0; i < base.size(); ++i)
            if (kept >> i & 1)
                map_.push_back(i);
    }
    using Matroid::rank;
    std::size_t size() const override { return map_.size(); }
    int rank(matroid::Mask s) const override
    {
        matroid::Mask t = 0;
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (s >> i & 1)
                t |= matroid::Mask{1} << map_[i];
        return base_.rank(t | c_) - base_.rank(c_);
    }

private:
    const Matroid& base_;
    matroid::Mask c_;
    std::vector<std::size_t> map_;
};

// (d) beta(M) = beta(M \ e) + beta(M / e) for e neither loop nor coloop.
void property_d(Checker& check)
{
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    for (int t = 0; t < 1000 && done < 50; ++t) {
        const std::size_t rows = 2 + t % 3, cols = 5 + t % 4;
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = entry(rng);
        const matroid::LinearMatroid lm(m);
        const auto ground = lm.ground();
        const std::size_t e = rng() % cols;
        const auto bit = matroid::Mask{1} << e;
        if (lm.rank(bit) == 0 || lm.rank(ground & ~bit) < lm.rank())
            continue;
        const MinorView del(lm, 0, ground & ~bit), con(lm, bit, ground & ~bit);
        check(matroid::beta(lm) == matroid::beta(del) + matroid::beta(con),
              "deletion-contraction fails on matroid " + std::to_string(t));
        ++done;
    }
    check(done == 50, std::to_string(done) + " matroids tested, expected 50");
}

combi::CosmoGraph pruefer_tree(int n, const std::vector<int>& seq)
{
    std::vector<int> degree(n + 1, 1);
    for (int x : seq)
        ++degree[x];
    std::vector<combi::CosmoEdge> edges;
    for (int x : seq)
        for (int leaf = 1; leaf <= n; ++leaf)
            if (degree[leaf] == 1) {
                edges.push_back({leaf, x, ""});
                --degree[leaf];
                --degree[x];
                break;
            }
    int u = 0, w = 0;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1)
            (u ? w : u) = v;
    if (n >= 2)
        edges.push_back({u, w, ""});
    return combi::CosmoGraph(n, edges);
}

// (e) Poles of psi are exactly the facet forms, all labeled trees up to 5 vertices.
void property_e(Checker& check)
{
    int trees = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> seq(n >= 2 ? n - 2 : 0, 1);
        for (;;) {
            const auto g = pruefer_tree(n, seq);
            const auto psi = cosmo::wavefunction(g);
            std::set<std::string> poles, forms;
            bool simple = true;
            for (const auto& f : psi.denominator.factors()) {
                poles.insert(f.poly.to_string());
                simple = simple && f.exponent == 1;
            }
            for (const auto& f : cosmo::facet_forms(g))
                forms.insert(symcore::canonical_poly(f.constant).to_string());
            check(simple && poles == forms, "poles differ from facets on tree " + std::to_string(trees));
            ++trees;
            int i = static_cast<int>(seq.size()) - 1;
            while (i >= 0 && seq[i] == n)
                seq[i--] = 1;
            if (i < 0)
                break;
            ++seq[i];
        }
    }
    check(trees == 1 + 1 + 3 + 16 + 125, std::to_string(trees) + " trees");
}

// (f) Parse/print round trip and evaluation homomorphism.
void property_f(Checker& check)
{
    std::mt19937_64 rng(2027);
    const auto v = symcore::make_vars({"a", "b", "c", "d"});
    for (int i = 0; i < 200; ++i) {
        const auto p = testutil::random_poly(rng, v, 6, 3, 50);
        check(parse(p.to_string(), v) == p, "round trip fails on " + p.to_string());
        const auto q = testutil::random_poly(rng, v);
        const auto pt = testutil::random_point(rng, 4);
        check((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt), "product evaluation");
        check((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt), "sum evaluation");
    }
}

void criterion6(Checker& check)
{
    property_a(check);
    property_b(check);
    property_c(check);
    property_d(check);
    property_e(check);
    property_f(check);
}

void criterion7(Checker& check)
{
    const auto g = fixtures::two_site();
    const auto fam = discriminant::edmonds_family(g);
    const auto pad = discriminant::pad_sparse(g);
    std::vector<MultiPoly> all;
    for (const auto& f : pad.factors())
        all.push_back(f.poly);
    std::mt19937_64 rng(2028);
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto others = all;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        for (int t = 0; t < 20; ++t) {
            const auto w = discriminant::witness_point(all[i], others, rng);
            if (!w) {
                check(false, "no point on " + all[i].to_string());
                continue;
            }
            const auto chi = matroid::signed_euler_char(fam.evaluate(*w));
            check(chi < 4, "chi = " + std::to_string(chi) + " on " + all[i].to_string());
        }
    }
    int off = 0;
    while (off < 20) {
        const auto p = random_rational_point(rng, fam.params->size());
        bool on = false;
        for (const auto& f : all)
            on = on || f.evaluate(p) == 0;
        if (on)
            continue;
        const auto chi = matroid::signed_euler_char(fam.evaluate(p));
        check(chi == 4, "chi = " + std::to_string(chi) + " off the discriminant");
        ++off;
    }
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        double limit_s;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, 60, criterion1},  {2, 5, criterion2},   {3, 30, criterion3}, {4, 600, criterion4},
        {5, 120, criterion5}, {6, 300, criterion6}, {7, 60, criterion7},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Checker check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        check(secs < c.limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");

        const bool ok = check.failures.empty();
        failed += !ok;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << check.checks
             << " checks, " << secs << " s, limit " << c.limit_s << " s)";
        for (const auto& f : check.failures)
            line << "; " << f;
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
