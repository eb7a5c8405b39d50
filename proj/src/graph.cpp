#include "sqc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace sqc {

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = neighbors(u);
    (void)neighbors(v);  // range check
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already lexicographic: u ascending, adj_[u] sorted
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& lst : g.adj_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        g.edge_count_ += static_cast<int>(lst.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> out;
    std::vector<char> mark(n, 0);
    std::vector<int> touched;
    for (int v = 0; v < n; ++v) {
        touched.clear();
        for (int u : g.neighbors(v)) {
            if (!mark[u]) { mark[u] = 1; touched.push_back(u); }
            for (int w : g.neighbors(u))
                if (!mark[w]) { mark[w] = 1; touched.push_back(w); }
        }
        for (int u : touched) {
            if (u > v) out.emplace_back(v, u);
            mark[u] = 0;
        }
    }
    return make_graph(n, out);
}

Graph subdivide(const Graph& g) {
    const int n = g.vertex_count();
    const auto es = g.edges();
    std::vector<Edge> out;
    out.reserve(2 * es.size());
    for (int idx = 0; idx < static_cast<int>(es.size()); ++idx) {
        const int ev = n + idx;
        out.emplace_back(es[idx].first, ev);
        out.emplace_back(es[idx].second, ev);
    }
    return make_graph(n + static_cast<int>(es.size()), out);
}

Graph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<Edge> out;
    for (const auto& e : es) out.push_back(e);  // vertex-vertex
    for (int i = 0; i < m; ++i) {
        out.emplace_back(es[i].first, n + i);   // vertex-edge incidences
        out.emplace_back(es[i].second, n + i);
        for (int j = i + 1; j < m; ++j) {
            if (es[i].first == es[j].first || es[i].first == es[j].second ||
                es[i].second == es[j].first || es[i].second == es[j].second)
                out.emplace_back(n + i, n + j);  // edges sharing an endpoint
        }
    }
    return make_graph(n + m, out);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.old_to_new.assign(g.vertex_count(), -1);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced set vertex out of range");
        if (out.old_to_new[v] != -1)
            throw std::invalid_argument("induced set has duplicates");
        out.old_to_new[v] = 0;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (out.old_to_new[v] == 0) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    std::vector<Edge> es;
    for (int v : out.new_to_old)
        for (int u : g.neighbors(v))
            if (u > v && out.old_to_new[u] != -1)
                es.emplace_back(out.old_to_new[v], out.old_to_new[u]);
    out.graph = make_graph(static_cast<int>(out.new_to_old.size()), es);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
            if (g.adjacent(s[a], s[b])) return false;
    return true;
}

namespace {

// BFS 2-coloring; side[v] in {-1,0,1}. Returns an odd-closed-walk witness via
// parent chains when a same-side edge shows up, empty otherwise.
std::vector<int> two_color(const Graph& g, std::vector<int>& side) {
    const int n = g.vertex_count();
    side.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    parent[u] = v;
                    q.push(u);
                } else if (side[u] == side[v]) {
                    // Odd closed walk: root..v, edge v-u, u..root.
                    std::vector<int> up, down;
                    for (int x = v; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = u; x != -1; x = parent[x]) down.push_back(x);
                    std::reverse(up.begin(), up.end());  // root .. v
                    std::vector<int> walk = up;
                    for (int x : down) walk.push_back(x);  // u .. root
                    return walk;
                }
            }
        }
    }
    return {};
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> side;
    if (!two_color(g, side).empty()) return std::nullopt;
    Bipartition b;
    for (int v = 0; v < g.vertex_count(); ++v)
        (side[v] == 0 ? b.side0 : b.side1).push_back(v);
    return b;
}

std::vector<int> odd_closed_walk(const Graph& g) {
    std::vector<int> side;
    return two_color(g, side);
}

bool is_complete_multipartite(const Graph& g, const PartitionCertificate& cert) {
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < cert.parts.size(); ++p) {
        if (cert.parts[p].empty())
            throw std::invalid_argument("empty part in partition certificate");
        for (int v : cert.parts[p]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition vertex out of range");
            if (part_of[v] != -1)
                throw std::invalid_argument("partition parts overlap at vertex " +
                                            std::to_string(v));
            part_of[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw std::invalid_argument("partition misses vertex " + std::to_string(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((part_of[u] == part_of[v]) == g.adjacent(u, v)) return false;
    return true;
}

std::vector<int> degree_profile(const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace sqc
