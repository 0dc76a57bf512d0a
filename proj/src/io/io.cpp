#include "eulerdisc/io.hpp"

#include "eulerdisc/errors.hpp"

#include <fstream>
#include <sstream>

namespace eulerdisc::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg)
{
    throw ParseError(where + ": " + msg);
}

const Json& field(const Json& j, const char* name, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    const auto it = j.find(name);
    if (it == j.end())
        fail(where, std::string("missing field '") + name + "'");
    return *it;
}

int as_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<int>();
}

// Side given either as a size or as an explicit label list starting at `first`.
int side_size(const Json& j, int first, const std::string& where)
{
    if (j.is_number_integer())
        return j.get<int>();
    if (!j.is_array())
        fail(where, "expected a size or a list of labels");
    int expect = first;
    for (const auto& x : j) {
        if (as_int(x, where) != expect)
            fail(where, "labels must be consecutive starting at " + std::to_string(first));
        ++expect;
    }
    return static_cast<int>(j.size());
}

std::string entry_text(const Json& j, const std::string& where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    fail(where, "expected an expression string or an integer");
}

std::string loc(const char* name, std::size_t r, std::size_t c)
{
    return std::string(name) + "[" + std::to_string(r) + "][" + std::to_string(c) + "] (row " +
           std::to_string(r + 1) + ", column " + std::to_string(c + 1) + ")";
}

Json vertex_json(const combi::VertexSet& s)
{
    return Json(s);
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

combi::PatternGraph pattern_from_json(const Json& j)
{
    const int left = side_size(field(j, "left", "pattern"), 0, "pattern.left");
    const int right = side_size(field(j, "right", "pattern"), left, "pattern.right");
    const auto& edges = field(j, "edges", "pattern");
    if (!edges.is_array())
        fail("pattern.edges", "expected a list of [i, j] pairs");
    std::vector<combi::EdgePair> e;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "pattern.edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2)
            fail(where, "expected [i, j]");
        e.emplace_back(as_int(edges[i][0], where), as_int(edges[i][1], where));
    }
    return combi::PatternGraph(left, right, e);
}

combi::CosmoGraph cosmo_from_json(const Json& j)
{
    const int n = as_int(field(j, "vertices", "graph"), "graph.vertices");
    const auto& edges = field(j, "edges", "graph");
    if (!edges.is_array())
        fail("graph.edges", "expected a list of [u, v] pairs");
    std::vector<combi::CosmoEdge> e;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "graph.edges[" + std::to_string(i) + "]";
        const auto& x = edges[i];
        if (!x.is_array() || x.size() < 2 || x.size() > 3)
            fail(where, "expected [u, v] or [u, v, \"id\"]");
        combi::CosmoEdge ce{as_int(x[0], where), as_int(x[1], where), ""};
        if (x.size() == 3) {
            if (!x[2].is_string())
                fail(where, "edge id must be a string");
            ce.id = x[2].get<std::string>();
        }
        e.push_back(ce);
    }
    return combi::CosmoGraph(n, e);
}

ParamFamily family_from_json(const Json& j)
{
    ParamFamily f;
    f.k = as_int(field(j, "k", "family"), "family.k");
    const auto& params = field(j, "params", "family");
    if (!params.is_array())
        fail("family.params", "expected a list of names");
    std::vector<std::string> names;
    for (const auto& p : params) {
        if (!p.is_string())
            fail("family.params", "parameter names must be strings");
        names.push_back(p.get<std::string>());
    }
    try {
        f.params = symcore::make_vars(names);
    } catch (const std::invalid_argument& ex) {
        fail("family.params", ex.what());
    }

    const auto& rows = field(j, "entries", "family");
    if (!rows.is_array())
        fail("family.entries", "expected a list of rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array())
            fail("family.entries[" + std::to_string(r) + "]", "expected a row");
        f.entries.emplace_back();
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const std::string where = loc("family.entries", r, c);
            try {
                f.entries.back().push_back(symcore::parse(entry_text(rows[r][c], where), f.params));
            } catch (const ParseError& ex) {
                fail(where, ex.what());
            }
        }
    }
    try {
        f.validate();
    } catch (const std::invalid_argument& ex) {
        fail("family", ex.what());
    }

    if (const auto it = j.find("substitute"); it != j.end()) {
        if (!it->is_object())
            fail("family.substitute", "expected an object {name: expression}");
        for (const auto& [name, value] : it->items()) {
            const std::string where = "family.substitute." + name;
            const auto var = f.params->find(name);
            if (!var)
                fail(where, "unknown parameter");
            try {
                f = f.substituted(*var, symcore::parse(entry_text(value, where), f.params));
            } catch (const ParseError& ex) {
                fail(where, ex.what());
            }
        }
    }
    return f;
}

RationalMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        fail("matrix", "expected a nonempty list of rows");
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array())
            fail("matrix[" + std::to_string(r) + "]", "expected a row");
        rows.emplace_back();
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            const std::string where = loc("matrix", r, c);
            mpq_class q;
            if (j[r][c].is_number_integer()) {
                q = mpq_class(mpz_class(std::to_string(j[r][c].get<long long>())));
            } else if (j[r][c].is_string()) {
                const auto s = j[r][c].get<std::string>();
                if (q.set_str(s, 10) != 0)
                    fail(where, "not a rational number: '" + s + "'");
                if (q.get_den() == 0)
                    fail(where, "zero denominator");
                q.canonicalize();
            } else {
                fail(where, "expected an integer or a \"p/q\" string");
            }
            rows.back().push_back(q);
        }
    }
    try {
        return RationalMatrix(rows);
    } catch (const std::invalid_argument& ex) {
        fail("matrix", ex.what());
    }
}

std::string to_string(const combi::VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

Json to_json(const symcore::FactoredPolynomial& f)
{
    Json factors = Json::array();
    for (const auto& x : f.factors())
        factors.push_back({{"poly", x.poly.to_string()}, {"exponent", x.exponent}});
    return {{"factors", factors}, {"total_degree", f.total_degree()}, {"text", f.to_string()}};
}

Json to_json(const discriminant::PadReport& r)
{
    Json out = to_json(r.product);
    Json minors = Json::array();
    for (const auto& f : r.factors)
        minors.push_back({{"I", vertex_json(f.I)},
                          {"J", vertex_json(f.J)},
                          {"poly", f.poly.to_string()},
                          {"exponent", f.exponent}});
    Json rejected = Json::array();
    for (const auto& x : r.rejected) {
        Json e{{"I", vertex_json(x.I)}, {"J", vertex_json(x.J)}, {"reason", x.reason}};
        if (!x.violator.empty())
            e["W"] = vertex_json(x.violator);
        rejected.push_back(e);
    }
    out["minors"] = minors;
    out["rejected"] = rejected;
    return out;
}

Json to_json(const discriminant::DiscriminantReport& r)
{
    Json per = Json::array();
    for (const auto& f : r.per_factor) {
        Json e{{"factor", f.factor.to_string()},
               {"stratum_exponent", f.stratum_exponent},
               {"numerator_normalized", f.numerator_normalized}};
        e["exponent"] = f.exponent ? Json(*f.exponent) : Json("unknown");
        if (f.witness) {
            Json w = Json::array();
            for (const auto& q : *f.witness)
                w.push_back(q.get_str());
            e["witness"] = w;
        }
        per.push_back(e);
    }
    return {{"chi_star", r.chi_star},
            {"reduced", to_json(r.reduced)},
            {"with_multiplicity", to_json(r.with_multiplicity)},
            {"per_factor", per},
            {"flagged", r.flagged},
            {"notes", r.notes}};
}

Json to_json(const symcore::RationalFunction& r)
{
    return {{"numerator", r.numerator.to_string()},
            {"numerator_terms", r.numerator.terms().size()},
            {"scale", r.scale.get_str()},
            {"denominator", to_json(r.denominator)}};
}

Json to_json(const cosmo::LinearForm& f, const combi::CosmoGraph& g)
{
    Json edges = Json::array();
    for (auto e : f.subgraph.edges)
        edges.push_back(g.edges().at(e).id);
    return {{"form", f.constant.to_string()},
            {"alpha", f.alpha},
            {"vertices", vertex_json(f.subgraph.vertices)},
            {"edges", edges}};
}

std::string render(const std::string& text, const Json& structured)
{
    std::string out = text;
    if (!out.empty() && out.back() != '\n')
        out += '\n';
    out += "--- json\n";
    out += structured.dump(2);
    out += '\n';
    return out;
}

} // namespace eulerdisc::io
