// Exact list-coloring tools: a backtracking solver with forward checking, a
// bad-assignment search that enumerates list assignments up to color renaming,
// and a brute-force list-chromatic oracle for small graphs.
#pragma once

#include "sqc/graph.hpp"

#include <optional>
#include <vector>

namespace sqc {

// Finite color lists, one per vertex, nonnegative integer colors.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

ListAssignment uniform_lists(int vertex_count, int k);  // {0..k-1} everywhere

using VertexColoring = std::vector<int>;

bool is_proper(const Graph& g, const VertexColoring& coloring);
bool respects_lists(const ListAssignment& L, const VertexColoring& coloring);

enum class SolveStatus { Colorable, Uncolorable, Unknown };

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<VertexColoring> coloring;  // present iff Colorable
    long long nodes = 0;                     // color placement attempts
};

// Complete backtracking search: static vertex order (degree descending, ties
// by index), colors tried ascending, forward checking on neighbor lists.
// node_budget 0 means unlimited; Unknown is returned only on budget exhaustion.
// Throws std::invalid_argument when the assignment does not cover every vertex
// or contains negative colors.
SolveResult solve_lists(const Graph& g, const ListAssignment& L, long long node_budget = 0);

// Colors every vertex by its part index. Throws std::invalid_argument when
// cert is not a partition or some part has an internal edge (witness edge in
// the message).
VertexColoring color_from_partition(const Graph& g, const PartitionCertificate& cert);

struct BadSearchResult {
    std::optional<ListAssignment> assignment;  // first uncolorable one found
    long long assignments_tested = 0;
    bool exhausted = false;  // whole canonical space enumerated
};

// Enumerates k-lists over palette 0..cap-1 in lexicographic order, one
// representative per color-renaming class (colors appear in first-use order),
// and returns the first assignment the exact solver rejects. palette_cap 0
// means k*|V| (no canonical assignment needs more). budget limits the number
// of assignments tested, 0 = unlimited.
BadSearchResult find_bad_assignment(const Graph& g, int k, int palette_cap = 0,
                                    long long budget = 0);

struct OracleOptions {
    int max_k = 4;
    int size_guard = 8;   // refuse larger graphs
    int palette_cap = 0;  // 0: k*|V| per level (exhaustive up to renaming)
};

struct OracleResult {
    std::optional<int> list_chromatic;  // least k <= max_k with no bad k-assignment
    int chromatic = 0;                  // exact, via uniform lists
    std::optional<ListAssignment> lower_bound_witness;  // bad assignment one level below
    long long assignments_tested = 0;
};

// Exhaustive list-chromatic computation for graphs within the size guard.
// Throws std::invalid_argument when the guard is exceeded.
OracleResult list_chromatic_oracle(const Graph& g, const OracleOptions& opts = {});

}  // namespace sqc
