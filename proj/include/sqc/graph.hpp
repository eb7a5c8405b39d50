// Undirected simple graphs with exact distance-2, subdivision and total-graph
// operators, plus the small structural predicates used by the verifiers.
#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sqc {

// Vertex index list, sorted ascending, duplicate-free.
using VertexSet = std::vector<int>;

// Normalized edge, first < second.
using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted; equality is equality of adjacency structure.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;

    // All edges, lexicographic by (min endpoint, max endpoint).
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    friend Graph make_graph(int n, const std::vector<Edge>& edges);
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Builds a graph from an edge list. Endpoints may come in any order and
// duplicates collapse. Out-of-range endpoints or self-loops throw
// std::invalid_argument.
Graph make_graph(int n, const std::vector<Edge>& edges);

// u ~ v iff u != v and their distance in g is at most 2.
Graph square(const Graph& g);

// One new vertex per edge, placed on that edge. Original vertices keep their
// indices; edge vertices follow in lexicographic edge order.
Graph subdivide(const Graph& g);

// Vertices are V(g) plus one vertex per edge (same order as subdivide):
// vertex-vertex adjacency from g, edge-edge when the edges share an endpoint,
// vertex-edge by incidence. Equals square(subdivide(g)) vertex for vertex.
Graph total_graph(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the set
    VertexSet new_to_old;         // dense ascending relabeling
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

struct Bipartition {
    VertexSet side0, side1;  // lowest-index vertex of each component in side0
};

// std::nullopt iff g contains an odd cycle; odd_closed_walk then returns one.
std::optional<Bipartition> bipartition(const Graph& g);

// Closed walk (first == last) of odd edge length, empty when g is bipartite.
std::vector<int> odd_closed_walk(const Graph& g);

// Nonempty disjoint vertex sets covering V exactly.
struct PartitionCertificate {
    std::vector<VertexSet> parts;
};

// True iff every part is independent and every cross-part pair is adjacent.
// Throws std::invalid_argument if cert is not a partition of V(g).
bool is_complete_multipartite(const Graph& g, const PartitionCertificate& cert);

// Degree multiset, sorted ascending.
std::vector<int> degree_profile(const Graph& g);

}  // namespace sqc
