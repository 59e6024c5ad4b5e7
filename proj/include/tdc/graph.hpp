#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdc {

using VertexId = int;

/// Immutable simple undirected graph with dense 0-based vertex ids and
/// sorted adjacency lists. Construction validates simplicity (no loops,
/// no parallel edges). All queries are const and safe to share across
/// threads.
class Graph {
public:
    Graph() : n_(0), m_(0) {}

    /// Builds from an edge list; throws std::invalid_argument on a
    /// self-loop, a duplicate edge, or an endpoint outside [0, n).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    int m_;
    std::vector<std::vector<int>> adj_;
};

/// A parsed graph file: the graph plus the original vertex labels
/// (labels[i] is the label the file used for vertex i).
struct LoadedGraph {
    Graph graph;
    std::vector<long long> labels;
};

/// Parses the text graph format:
///   c <comment>
///   p <n> <m>
///   e <u> <v>      (exactly m of these)
/// Labels that all lie in [0, n) are taken as the vertex ids themselves;
/// otherwise there must be exactly n distinct labels, which are mapped to
/// 0..n-1 in ascending order. Throws parse_error with a 1-based line
/// number on malformed input, self-loops, or duplicate edges.
LoadedGraph load_graph(std::string_view text);

/// Renders a graph back into the file format (identity labels if labels
/// is empty). Comment lines may be prepended by the caller.
std::string format_graph(const Graph& g, const std::vector<long long>& labels = {});

int max_degree(const Graph& g);  // throws std::invalid_argument on an empty graph

/// Vertex sets of the connected components, each sorted ascending,
/// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Induced subgraph on `vertices` (must be sorted, distinct, valid).
/// Vertex i of the result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Active-vertex mask used by the colorer's reductions; the graph itself
/// is never mutated. mask[v] != 0 means v is present.
using VertexMask = std::vector<char>;

VertexMask full_mask(const Graph& g);
int masked_degree(const Graph& g, const VertexMask& mask, int v);
std::vector<int> masked_neighbors(const Graph& g, const VertexMask& mask, int v);
/// Components of the induced subgraph on the mask, sorted like
/// connected_components.
std::vector<std::vector<int>> masked_components(const Graph& g, const VertexMask& mask);

}  // namespace tdc
