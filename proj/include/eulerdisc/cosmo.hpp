#pragma once
//
// Tree-level wavefunction coefficients, cosmological-polytope facets and the
// coefficient families they define.
//

#include "eulerdisc/combi.hpp"
#include "eulerdisc/discriminant.hpp"
#include "eulerdisc/family.hpp"
#include "eulerdisc/symcore.hpp"

#include <vector>

namespace eulerdisc::cosmo {

/// X1..Xn followed by one Y per edge, named "Y" + edge id.
symcore::VarTablePtr energy_variables(const combi::CosmoGraph& g);

struct LinearForm {
    /// L(X, Y) over energy_variables.
    symcore::MultiPoly constant;
    /// 0/1 coefficient of the shift alpha_v, indexed by vertex - 1.
    std::vector<int> alpha;
    combi::SubgraphSelection subgraph;
};

/// One form per connected subgraph, the scattering facet first; duplicates dropped.
std::vector<LinearForm> facet_forms(const combi::CosmoGraph& g, int max_vertices = 8, int max_edges = 12);

/// psi_g by edge-deletion recursion.  Throws HypothesisError for graphs with cycles and
/// SizeLimitError when the dense bound on the numerator exceeds `numerator_limit` terms.
symcore::RationalFunction wavefunction(const combi::CosmoGraph& g, int max_vertices = 8,
                                       long numerator_limit = 300000);

/// k = vertex count; row 0 holds the forms, row v the alpha_v coefficients.
ParamFamily coefficient_family(const combi::CosmoGraph& g, int max_vertices = 8, int max_edges = 12);

/// Bipartite sparsity pattern of coefficient_family.
combi::PatternGraph cosmo_pattern(const combi::CosmoGraph& g, int max_vertices = 8, int max_edges = 12);

symcore::FactoredPolynomial cosmo_pad(const combi::CosmoGraph& g, int max_vertices = 8, int max_edges = 12);

/// euler_disc of coefficient_family; single-Y factors are marked numerator_normalized.
discriminant::DiscriminantReport cosmo_euler_disc(const combi::CosmoGraph& g,
                                                  const discriminant::DiscOptions& opt = {}, int max_vertices = 8,
                                                  int max_edges = 12);

} // namespace eulerdisc::cosmo
