#pragma once
//
// Bipartite coefficient-pattern graphs and general multigraphs.
//

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulerdisc::combi {

using VertexSet = std::vector<int>;
using EdgePair = std::pair<int, int>;

/// Bipartite graph with left labels 0..k and right labels k+1..n.  Edges are
/// kept sorted; vertex lists may contain isolated vertices for induced subgraphs.
class PatternGraph {
public:
    PatternGraph() = default;
    /// Validated full graph: every vertex must be an endpoint and edges unique.
    PatternGraph(int left_size, int right_size, std::vector<EdgePair> edges);

    const VertexSet& left() const noexcept { return left_; }
    const VertexSet& right() const noexcept { return right_; }
    const std::vector<EdgePair>& edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return left_.size() + right_.size(); }
    VertexSet vertices() const;
    bool has_edge(int i, int j) const;
    /// Total number of labels in the ambient graph (k+1 + n-k).
    int ambient_size() const noexcept { return ambient_; }

    /// "03" style label, or "0_13" when the ambient graph has a label >= 10.
    std::string edge_label(const EdgePair& e) const;

    /// Unchecked construction used for subgraphs.
    static PatternGraph subgraph(VertexSet left, VertexSet right, std::vector<EdgePair> edges, int ambient);

private:
    VertexSet left_, right_;
    std::vector<EdgePair> edges_;
    int ambient_ = 0;
};

/// Subgraph on I ∪ J with every edge of g inside it; isolated vertices kept.
PatternGraph induced(const PatternGraph& g, const VertexSet& I, const VertexSet& J);

bool is_connected(const PatternGraph& g);

/// Vertices adjacent to some element of T.
VertexSet neighborhood(const PatternGraph& g, const VertexSet& T);

enum class Side { left, right };

struct MatchingResult {
    /// Present iff a matching saturating the requested side exists.
    std::optional<std::vector<EdgePair>> matching;
    /// When absent: a set W on the requested side with |N(W)| < |W|.
    VertexSet hall_violator;
};

MatchingResult saturating_matching(const PatternGraph& g, Side side);

struct StarResult {
    bool holds = false;
    /// A nonempty proper W ⊂ V_1 with |W| >= |N(W)|, when one exists.
    VertexSet violator;
};

/// Condition (*): requires |left| == |right|; throws HypothesisError otherwise.
StarResult condition_star(const PatternGraph& g);

struct ContractedEdge {
    EdgePair edge;
    /// Endpoints that survive the contraction (0, 1 or 2 of them).
    VertexSet endpoints;
};

struct Contraction {
    VertexSet surviving_vertices;
    std::vector<ContractedEdge> edges;
};

/// Contract a connected subgraph h of g.  Throws HypothesisError if h is not connected.
Contraction contract(const PatternGraph& g, const PatternGraph& h);

struct CosmoEdge {
    int u = 0;
    int v = 0;
    std::string id;
};

/// Multigraph on vertices 1..n with identified (possibly parallel) edges.
class CosmoGraph {
public:
    CosmoGraph() = default;
    /// Edges without an id are named "ij", with a letter suffix for parallel pairs.
    CosmoGraph(int vertex_count, std::vector<CosmoEdge> edges);

    int vertex_count() const noexcept { return n_; }
    const std::vector<CosmoEdge>& edges() const noexcept { return edges_; }
    bool is_tree() const;

private:
    int n_ = 0;
    std::vector<CosmoEdge> edges_;
};

struct SubgraphSelection {
    VertexSet vertices;
    /// Indices into CosmoGraph::edges().
    std::vector<std::size_t> edges;

    friend bool operator==(const SubgraphSelection&, const SubgraphSelection&) = default;
};

bool is_connected(const CosmoGraph& g, const SubgraphSelection& s);

/// All connected subgraphs ordered by vertex count, vertex labels, edge count, edge indices.
std::vector<SubgraphSelection> connected_subgraphs(const CosmoGraph& g, int max_vertices = 8, int max_edges = 12);

/// Iterate the k-subsets of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& c, int n);

} // namespace eulerdisc::combi
