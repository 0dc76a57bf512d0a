#include "eulerdisc/cosmo.hpp"
#include "eulerdisc/discriminant.hpp"
#include "eulerdisc/errors.hpp"
#include "eulerdisc/io.hpp"
#include "eulerdisc/lattice.hpp"
#include "eulerdisc/matroid.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace eulerdisc;
using io::Json;

namespace {

struct JobConfig {
    std::string command;
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    int max_vertices = 8;
    int max_points = 20;
    bool no_witness = false;
    bool check_degree = false;
};

struct Report {
    std::ostringstream text;
    Json data = Json::object();
};

void factor_lines(std::ostream& os, const symcore::FactoredPolynomial& f)
{
    for (const auto& x : f.factors())
        os << "  " << x.poly.to_string() << (x.exponent > 1 ? "  ^" + std::to_string(x.exponent) : "") << '\n';
}

void run_pad(const JobConfig& cfg, Report& rep)
{
    const auto g = io::pattern_from_json(io::read_json_file(cfg.input));
    const auto r = discriminant::pad_sparse_report(g);
    rep.data = io::to_json(r);
    rep.text << "E_A: " << r.product.size() << " factors, total degree " << r.product.total_degree() << '\n';
    for (const auto& f : r.factors)
        rep.text << "  I=" << io::to_string(f.I) << " J=" << io::to_string(f.J) << "  " << f.poly.to_string()
                 << "  ^" << f.exponent << '\n';
    for (const auto& x : r.rejected) {
        rep.text << "  rejected I=" << io::to_string(x.I) << " J=" << io::to_string(x.J) << ": " << x.reason;
        if (!x.violator.empty())
            rep.text << ", violated by W=" << io::to_string(x.violator);
        rep.text << '\n';
    }
    if (cfg.check_degree) {
        const bool ok = discriminant::degree_check(r.product, lattice::edge_config(g));
        rep.data["degree_check"] = ok;
        rep.text << "degree check: " << (ok ? "pass" : "FAIL") << '\n';
    }
}

void disc_text(std::ostream& os, const discriminant::DiscriminantReport& r)
{
    os << "chi* = " << r.chi_star << '\n';
    os << "E_chi: " << r.with_multiplicity.to_string() << '\n';
    os << "total degree " << r.with_multiplicity.total_degree() << ", " << r.reduced.size() << " factors\n";
    for (const auto& f : r.per_factor) {
        os << "  " << f.factor.to_string() << "  exponent "
           << (f.exponent ? std::to_string(*f.exponent) : std::string("unknown")) << ", stratum "
           << f.stratum_exponent;
        if (f.numerator_normalized)
            os << ", numerator-normalized";
        os << '\n';
    }
    for (const auto& n : r.notes)
        os << "note: " << n << '\n';
    if (r.flagged)
        os << "FLAGGED\n";
}

discriminant::DiscOptions disc_options(const JobConfig& cfg)
{
    discriminant::DiscOptions opt;
    opt.seed = cfg.seed;
    opt.witnesses = !cfg.no_witness;
    return opt;
}

void run_euler_disc(const JobConfig& cfg, Report& rep)
{
    const auto f = io::family_from_json(io::read_json_file(cfg.input));
    const auto r = discriminant::euler_disc(f, disc_options(cfg));
    rep.data = io::to_json(r);
    disc_text(rep.text, r);
}

void run_beta(const JobConfig& cfg, Report& rep)
{
    const auto j = io::read_json_file(cfg.input);
    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError("beta: missing field 'matrix'");
    const auto m = io::matrix_from_json(j["matrix"]);
    bool prefix = true;
    if (const auto it = j.find("identity_prefix"); it != j.end()) {
        if (!it->is_boolean())
            throw ParseError("beta: identity_prefix must be a boolean");
        prefix = it->get<bool>();
    }
    if (m.rows() + (prefix ? m.rows() : 0) + m.cols() > 64)
        throw SizeLimitError("beta: at most 63 columns");
    const std::int64_t b = prefix ? matroid::signed_euler_char(m) : matroid::beta(matroid::LinearMatroid(m));
    rep.data = {{"beta", b}, {"identity_prefix", prefix}};
    rep.text << "beta = " << b << '\n';
}

void run_polytope(const JobConfig& cfg, Report& rep)
{
    const auto g = io::pattern_from_json(io::read_json_file(cfg.input));
    const auto c = lattice::edge_config(g);
    const int dim = lattice::lattice_normalize(c).dimension;
    const auto vol = lattice::normalized_volume(c);
    const auto fv = lattice::f_vector(c, 8, static_cast<std::size_t>(cfg.max_points));
    rep.data = {{"dimension", dim}, {"volume", vol}, {"f_vector", fv}};
    rep.text << "dimension " << dim << ", normalized volume " << vol << "\nf-vector (";
    for (std::size_t i = 0; i < fv.size(); ++i)
        rep.text << (i ? "," : "") << fv[i];
    rep.text << ")\n";
}

void run_cosmo_psi(const JobConfig& cfg, Report& rep)
{
    const auto g = io::cosmo_from_json(io::read_json_file(cfg.input));
    const auto psi = cosmo::wavefunction(g, cfg.max_vertices);
    rep.data = io::to_json(psi);
    rep.text << "numerator: " << psi.numerator.terms().size() << " terms, degree " << psi.numerator.total_degree()
             << "\nscale " << psi.scale.get_str() << "\ndenominator: " << psi.denominator.size() << " factors\n";
    factor_lines(rep.text, psi.denominator);
}

void run_cosmo_facets(const JobConfig& cfg, Report& rep)
{
    const auto g = io::cosmo_from_json(io::read_json_file(cfg.input));
    const auto forms = cosmo::facet_forms(g, cfg.max_vertices);
    Json list = Json::array();
    rep.text << forms.size() << " facet forms\n";
    for (const auto& f : forms) {
        list.push_back(io::to_json(f, g));
        rep.text << "  " << f.constant.to_string() << "  vertices " << io::to_string(f.subgraph.vertices) << '\n';
    }
    rep.data = {{"facets", list}};
}

void run_cosmo_disc(const JobConfig& cfg, Report& rep)
{
    const auto g = io::cosmo_from_json(io::read_json_file(cfg.input));
    const auto r = cosmo::cosmo_euler_disc(g, disc_options(cfg), cfg.max_vertices);
    rep.data = io::to_json(r);
    disc_text(rep.text, r);
}

int run(const JobConfig& cfg)
{
    Report rep;
    if (cfg.command == "pad")
        run_pad(cfg, rep);
    else if (cfg.command == "euler-disc")
        run_euler_disc(cfg, rep);
    else if (cfg.command == "beta")
        run_beta(cfg, rep);
    else if (cfg.command == "polytope")
        run_polytope(cfg, rep);
    else if (cfg.command == "cosmo-psi")
        run_cosmo_psi(cfg, rep);
    else if (cfg.command == "cosmo-facets")
        run_cosmo_facets(cfg, rep);
    else
        run_cosmo_disc(cfg, rep);
    rep.data["command"] = cfg.command;
    rep.data["seed"] = cfg.seed;

    const auto out = io::render(rep.text.str(), rep.data);
    if (cfg.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!(f << out))
            throw std::runtime_error("cannot write '" + cfg.output + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euler discriminants of linear arrangement families"};
    app.require_subcommand(1);
    JobConfig cfg;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"pad", "principal A-determinant of a pattern graph"},
        {"euler-disc", "Euler discriminant of a parametrized family"},
        {"beta", "beta invariant of a rational matrix"},
        {"polytope", "dimension, volume and f-vector of the edge polytope"},
        {"cosmo-psi", "wavefunction coefficient of a tree"},
        {"cosmo-facets", "facet forms of the cosmological polytope"},
        {"cosmo-disc", "Euler discriminant of the cosmological family"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", cfg.input, "input JSON file")->required();
        sub->add_option("-o,--output", cfg.output, "report file (default stdout)");
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--max-vertices", cfg.max_vertices, "cosmological graph size limit")->capture_default_str();
        sub->add_option("--max-points", cfg.max_points, "face enumeration point limit")->capture_default_str();
        sub->add_flag("--no-witness", cfg.no_witness, "skip witness searches");
        sub->add_flag("--check-degree", cfg.check_degree, "check deg E_A = (dim + 1) vol");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return run(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violated: " << e.what() << '\n';
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
