// Builders for the labeled bipartite graph family whose squares contain large
// complete multipartite subgraphs. The base graph wires n grid blocks of n*n
// vertices to hub families indexed by cyclic Latin squares; each further round
// clones every grid vertex n-1 times and attaches one more hub family keyed on
// the new copy coordinate.
#pragma once

#include "sqc/graph.hpp"
#include "sqc/latin.hpp"

#include <vector>

namespace sqc {

// P: grid vertex (copy_path, row k, column j).
// Q: base hub family, i in 1..n-1, position j in 1..n.
// U: per-round hub family, round r in 1..rounds, i in 1..n-1, position j.
// S: column hub, m in 1..n.
enum class Role { P, Q, U, S };

struct VertexLabel {
    Role role = Role::P;
    std::vector<int> copy_path;  // P only; length == rounds, entries 1..n
    int k = 0;                   // P: row 1..n
    int j = 0;                   // P: column 1..n; Q/U: position 1..n
    int i = 0;                   // Q/U: family index 1..n-1
    int round = 0;               // U only: 1..rounds
    int m = 0;                   // S only: 1..n

    bool operator==(const VertexLabel&) const = default;
};

// Canonical vertex order: all P first (lexicographic by copy_path, then k,
// then j), then Q by (i, j), then U by (round, i, j), then S by m.
// All label coordinates are 1-based; graph indices are dense and 0-based.
struct LabeledGraph {
    Graph graph;
    std::vector<VertexLabel> labels;
    int n = 0;       // prime parameter
    int rounds = 0;  // duplication rounds applied

    bool operator==(const LabeledGraph&) const = default;
};

// Canonical index for a label (n, rounds as in the owning graph).
int label_index(const VertexLabel& lab, int n, int rounds);

// Round-0 graph on 2n^2 vertices, built from its explicit edge families:
// hub (i,j) meets grid vertex (k, L_i(j,k)) for every k; column hub m meets
// every grid vertex in column m. Throws std::domain_error unless n >= 3 prime.
LabeledGraph build_base(int n);

// One duplication round, built from its explicit edge families (block-indexed
// grid, base hubs per block, round-1 hubs keyed on the block coordinate,
// column hubs across all blocks). Same preconditions as build_base.
LabeledGraph build_one_round(int n);

// Layer-wise builder for any rounds >= 0: per round, clone every grid vertex
// n-1 times (copies keep the original's hub neighbors) and attach the new hub
// family keyed on the fresh copy coordinate. Equals build_base at rounds=0 and
// build_one_round at rounds=1, label for label.
LabeledGraph build_iterated(int n, int rounds);

// Clones grid vertex v `copies` times; each copy receives exactly N(v), the
// copies are pairwise nonadjacent and not adjacent to v, and they append to
// the end of the vertex order with copy_path extended by 2..copies+1.
// Throws std::invalid_argument when v is a hub or copies < 1.
LabeledGraph duplicate_vertex(const LabeledGraph& g, int v, int copies);

// The canonical partition used to color the square: one part per grid cell
// group (copy_path, k), then each Q family, each U family per (round, i), and
// S. Part count: n^(rounds+1) + (rounds+1)(n-1) + 1.
PartitionCertificate part_sets(const LabeledGraph& g);

long long part_count_formula(int n, int rounds);

// Label queries (vertex index sets into g.graph, sorted ascending).
VertexSet p_vertices(const LabeledGraph& g);
VertexSet hub_vertices(const LabeledGraph& g);
VertexSet p_block(const LabeledGraph& g, int block);  // rounds==1: copy_path == {block}
VertexSet p_cell(const LabeledGraph& g, const std::vector<int>& copy_path, int k);
VertexSet t_column(const LabeledGraph& g, int block, int m);  // rounds==1
VertexSet q_family(const LabeledGraph& g, int i);
VertexSet u_family(const LabeledGraph& g, int round, int i);
VertexSet s_vertices(const LabeledGraph& g);

}  // namespace sqc
