#include "sqc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sqc {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(n, edges);
}

namespace {

const char* role_name(Role r) {
    switch (r) {
        case Role::P: return "P";
        case Role::Q: return "Q";
        case Role::U: return "U";
        case Role::S: return "S";
    }
    throw std::invalid_argument("unknown role");
}

Role role_from_name(const std::string& s) {
    if (s == "P") return Role::P;
    if (s == "Q") return Role::Q;
    if (s == "U") return Role::U;
    if (s == "S") return Role::S;
    throw std::invalid_argument("unknown role \"" + s + "\"");
}

ordered_json label_to_json(const VertexLabel& lab) {
    ordered_json j;
    j["role"] = role_name(lab.role);
    switch (lab.role) {
        case Role::P:
            j["copy_path"] = lab.copy_path;
            j["k"] = lab.k;
            j["j"] = lab.j;
            break;
        case Role::Q:
            j["i"] = lab.i;
            j["j"] = lab.j;
            break;
        case Role::U:
            j["round"] = lab.round;
            j["i"] = lab.i;
            j["j"] = lab.j;
            break;
        case Role::S:
            j["m"] = lab.m;
            break;
    }
    return j;
}

VertexLabel label_from_json(const json& j) {
    VertexLabel lab;
    lab.role = role_from_name(j.at("role").get<std::string>());
    switch (lab.role) {
        case Role::P:
            lab.copy_path = j.at("copy_path").get<std::vector<int>>();
            lab.k = j.at("k").get<int>();
            lab.j = j.at("j").get<int>();
            break;
        case Role::Q:
            lab.i = j.at("i").get<int>();
            lab.j = j.at("j").get<int>();
            break;
        case Role::U:
            lab.round = j.at("round").get<int>();
            lab.i = j.at("i").get<int>();
            lab.j = j.at("j").get<int>();
            break;
        case Role::S:
            lab.m = j.at("m").get<int>();
            break;
    }
    return lab;
}

}  // namespace

ordered_json labeled_graph_to_json(const LabeledGraph& g) {
    ordered_json j = graph_to_json(g.graph);
    j["prime"] = g.n;
    j["rounds"] = g.rounds;
    auto labels = ordered_json::array();
    for (const auto& lab : g.labels) labels.push_back(label_to_json(lab));
    j["labels"] = std::move(labels);
    return j;
}

LabeledGraph labeled_graph_from_json(const json& j) {
    LabeledGraph g;
    g.graph = graph_from_json(j);
    g.n = j.at("prime").get<int>();
    g.rounds = j.at("rounds").get<int>();
    const auto& labels = j.at("labels");
    if (static_cast<int>(labels.size()) != g.graph.vertex_count())
        throw std::invalid_argument("label count does not match vertex count");
    g.labels.reserve(labels.size());
    for (const auto& l : labels) g.labels.push_back(label_from_json(l));
    return g;
}

ordered_json lists_to_json(const ListAssignment& L) {
    ordered_json lists;
    for (size_t v = 0; v < L.lists.size(); ++v) lists[std::to_string(v)] = L.lists[v];
    ordered_json j;
    j["lists"] = std::move(lists);
    return j;
}

ListAssignment lists_from_json(const json& j) {
    const auto& lists = j.at("lists");
    if (!lists.is_object()) throw std::invalid_argument("\"lists\" must be an object");
    ListAssignment L;
    L.lists.resize(lists.size());
    for (size_t v = 0; v < L.lists.size(); ++v) {
        const std::string key = std::to_string(v);
        if (!lists.contains(key))
            throw std::invalid_argument("list assignment missing vertex " + key);
        L.lists[v] = lists.at(key).get<std::vector<int>>();
    }
    return L;
}

ordered_json coloring_to_json(const VertexColoring& coloring) {
    ordered_json j;
    j["colors"] = coloring;
    return j;
}

VertexColoring coloring_from_json(const json& j) {
    return j.at("colors").get<VertexColoring>();
}

ordered_json report_to_json(const VerificationReport& rep, int n, int rounds) {
    ordered_json j;
    j["claim"] = rep.claim_id;
    j["status"] = rep.pass ? "pass" : "fail";
    auto witness = ordered_json::array();
    for (const auto& w : rep.witness) {
        ordered_json item;
        item["kind"] = w.kind;
        item["vertices"] = w.vertices;
        item["info"] = w.info;
        witness.push_back(std::move(item));
    }
    j["witness"] = std::move(witness);
    j["stats"] = rep.stats;
    j["inputs"] = ordered_json{{"n", n}, {"rounds", rounds}};
    return j;
}

ordered_json gap_report_to_json(const GapReport& rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["rounds"] = rep.rounds;
    j["formula_only"] = rep.formula_only;
    j["chi_upper"] = rep.part_count;
    j["upper_witnessed"] = rep.upper_witnessed;
    j["vetrik_strict_lower"] = rep.vetrik_strict;
    j["chi_list_lower"] = rep.list_lower;
    if (rep.kierstead_exact)
        j["kierstead_exact"] = *rep.kierstead_exact;
    else
        j["kierstead_exact"] = nullptr;
    j["gap_lower"] = rep.gap_lower;
    if (rep.quadratic_gap_bound)
        j["quadratic_gap_bound"] = *rep.quadratic_gap_bound;
    else
        j["quadratic_gap_bound"] = nullptr;
    j["certified"] = rep.certified;
    return j;
}

namespace {

std::string dot_label(const VertexLabel& lab) {
    std::ostringstream out;
    switch (lab.role) {
        case Role::P: {
            out << "p " << lab.k << "," << lab.j;
            if (!lab.copy_path.empty()) {
                out << "|";
                for (size_t i = 0; i < lab.copy_path.size(); ++i) {
                    if (i) out << ".";
                    out << lab.copy_path[i];
                }
            }
            break;
        }
        case Role::Q: out << "q " << lab.i << "," << lab.j; break;
        case Role::U: out << "u " << lab.round << ":" << lab.i << "," << lab.j; break;
        case Role::S: out << "s " << lab.m; break;
    }
    return out.str();
}

std::string dot_body(const Graph& g, const std::vector<VertexLabel>* labels) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (labels) out << " [label=\"" << dot_label((*labels)[v]) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const Graph& g) { return dot_body(g, nullptr); }

std::string to_dot(const LabeledGraph& g, bool with_labels) {
    return dot_body(g.graph, with_labels ? &g.labels : nullptr);
}

uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    uint64_t h = 14695981039346656037ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::string to_hex64(uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[value & 0xf];
        value >>= 4;
    }
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sqc
