#pragma once
//
// Principal A-determinants of sparse linear arrangements and Euler
// discriminants of parametrized families.
//

#include "eulerdisc/combi.hpp"
#include "eulerdisc/family.hpp"
#include "eulerdisc/lattice.hpp"
#include "eulerdisc/symcore.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace eulerdisc::discriminant {

using symcore::FactoredPolynomial;
using symcore::MultiPoly;

/// One variable z_ij per edge, named "z" + edge label, in edge order.
symcore::VarTablePtr edge_variables(const combi::PatternGraph& g);

/// Edmonds matrix of g as a family over edge_variables(g).
ParamFamily edmonds_family(const combi::PatternGraph& g);

/// det z_{I,J} of the Edmonds matrix; I and J are vertex labels.
MultiPoly edmonds_minor(const combi::PatternGraph& g, const symcore::VarTablePtr& vars, const combi::VertexSet& I,
                        const combi::VertexSet& J);

struct PadFactor {
    combi::VertexSet I, J;
    MultiPoly poly;
    unsigned exponent = 0;
};

struct RejectedPair {
    combi::VertexSet I, J;
    /// "disconnected" or "condition (*)".
    std::string reason;
    /// Violating W for condition (*) failures.
    combi::VertexSet violator;
};

struct PadReport {
    FactoredPolynomial product;
    std::vector<PadFactor> factors;
    std::vector<RejectedPair> rejected;
};

/// Every (I, J) with |I| = |J| >= 1, classified.  Throws HypothesisError if g is disconnected.
PadReport pad_sparse_report(const combi::PatternGraph& g);
FactoredPolynomial pad_sparse(const combi::PatternGraph& g);
/// Complete bipartite pattern on rows 0..k and columns k+1..n.
FactoredPolynomial pad_dense(int k, int n);

/// Total degree equals (dim + 1) * normalized volume.
bool degree_check(const FactoredPolynomial& e, const lattice::PointConfiguration& c);

/// Rational point with delta = 0 and every polynomial of `avoid` nonzero.
std::optional<std::vector<mpq_class>> witness_point(const MultiPoly& delta, const std::vector<MultiPoly>& avoid,
                                                    std::mt19937_64& rng, int budget = 400);

struct FactorReport {
    MultiPoly factor;
    /// chi* minus chi at the witness; absent when no witness was found.
    std::optional<std::int64_t> exponent;
    std::optional<std::vector<mpq_class>> witness;
    /// chi* minus beta of the matroid of a generic point of the stratum.
    std::int64_t stratum_exponent = 0;
    bool numerator_normalized = false;
};

struct DiscriminantReport {
    FactoredPolynomial reduced;
    FactoredPolynomial with_multiplicity;
    std::int64_t chi_star = 0;
    std::vector<FactorReport> per_factor;
    /// Set when some exponent is unknown or witness and stratum disagree.
    bool flagged = false;
    std::vector<std::string> notes;
};

struct DiscOptions {
    std::uint64_t seed = 0;
    int trials = 3;
    bool witnesses = true;
    int witness_budget = 400;
};

/// Throws HypothesisError if every minor vanishes identically or chi* = 0.
DiscriminantReport euler_disc(const ParamFamily& f, const DiscOptions& opt = {});

} // namespace eulerdisc::discriminant
