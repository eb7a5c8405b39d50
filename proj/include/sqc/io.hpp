// JSON and DOT serialization for graphs, list assignments, colorings,
// verification reports, and bound summaries, plus small file helpers.
// Writers emit ordered_json so output bytes are stable across runs.
#pragma once

#include "sqc/choose.hpp"
#include "sqc/construction.hpp"
#include "sqc/graph.hpp"
#include "sqc/verify.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace sqc {

// {"n": vertex count, "edges": [[u,v], ...]} with u < v, lexicographic.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Same as graph_to_json plus {"prime", "rounds", "labels": [...]}, one label
// object per vertex in index order. Readers accept plain graph files through
// graph_from_json; labeled readers require the label fields.
nlohmann::ordered_json labeled_graph_to_json(const LabeledGraph& g);
LabeledGraph labeled_graph_from_json(const nlohmann::json& j);

// {"lists": {"0": [...], ..., "<n-1>": [...]}}; every vertex key required.
nlohmann::ordered_json lists_to_json(const ListAssignment& L);
ListAssignment lists_from_json(const nlohmann::json& j);

// {"colors": [...]}, one entry per vertex.
nlohmann::ordered_json coloring_to_json(const VertexColoring& coloring);
VertexColoring coloring_from_json(const nlohmann::json& j);

// {"claim", "status": "pass"|"fail", "witness": [...], "stats", "inputs"}.
nlohmann::ordered_json report_to_json(const VerificationReport& rep, int n, int rounds);

nlohmann::ordered_json gap_report_to_json(const GapReport& rep);

// Undirected DOT. with_labels annotates vertices with their role coordinates.
std::string to_dot(const Graph& g);
std::string to_dot(const LabeledGraph& g, bool with_labels);

// FNV-1a 64-bit digest of a file's bytes. Throws std::runtime_error when the
// file cannot be read.
uint64_t fnv1a64_file(const std::string& path);
std::string to_hex64(uint64_t value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sqc
