#include "sqc/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sqc {

namespace {

long long ipow(int b, int e) {
    long long r = 1;
    for (int x = 0; x < e; ++x) r *= b;
    return r;
}

void check_params(int n, int rounds) {
    if (rounds < 0) throw std::domain_error("rounds must be >= 0");
    if (n < 3) throw std::domain_error("builder requires n >= 3, got " + std::to_string(n));
    if (!is_prime(n)) throw std::domain_error("builder requires prime n, got " + std::to_string(n));
}

// Lexicographic successor of a 1-based copy path; false once exhausted.
bool next_path(std::vector<int>& path, int n) {
    for (int r = static_cast<int>(path.size()) - 1; r >= 0; --r) {
        if (path[r] < n) {
            ++path[r];
            std::fill(path.begin() + r + 1, path.end(), 1);
            return true;
        }
    }
    return false;
}

std::vector<VertexLabel> canonical_labels(int n, int rounds) {
    std::vector<VertexLabel> labs;
    labs.reserve(static_cast<size_t>(ipow(n, rounds + 2)) + (rounds + 1) * (n - 1) * n + n);
    std::vector<int> path(rounds, 1);
    do {
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j) {
                VertexLabel lab;
                lab.role = Role::P;
                lab.copy_path = path;
                lab.k = k;
                lab.j = j;
                labs.push_back(std::move(lab));
            }
    } while (next_path(path, n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            VertexLabel lab;
            lab.role = Role::Q;
            lab.i = i;
            lab.j = j;
            labs.push_back(std::move(lab));
        }
    for (int r = 1; r <= rounds; ++r)
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n; ++j) {
                VertexLabel lab;
                lab.role = Role::U;
                lab.round = r;
                lab.i = i;
                lab.j = j;
                labs.push_back(std::move(lab));
            }
    for (int m = 1; m <= n; ++m) {
        VertexLabel lab;
        lab.role = Role::S;
        lab.m = m;
        labs.push_back(std::move(lab));
    }
    return labs;
}

}  // namespace

int label_index(const VertexLabel& lab, int n, int rounds) {
    const long long np = ipow(n, rounds + 2);
    const long long nq = np + static_cast<long long>(n - 1) * n;
    const long long nu = nq + static_cast<long long>(rounds) * (n - 1) * n;
    long long idx = -1;
    switch (lab.role) {
        case Role::P: {
            if (static_cast<int>(lab.copy_path.size()) != rounds)
                throw std::invalid_argument("copy_path length does not match rounds");
            long long path_idx = 0;
            for (int c : lab.copy_path) path_idx = path_idx * n + (c - 1);
            idx = path_idx * n * n + static_cast<long long>(lab.k - 1) * n + (lab.j - 1);
            break;
        }
        case Role::Q:
            idx = np + static_cast<long long>(lab.i - 1) * n + (lab.j - 1);
            break;
        case Role::U:
            idx = nq +
                  (static_cast<long long>(lab.round - 1) * (n - 1) + (lab.i - 1)) * n +
                  (lab.j - 1);
            break;
        case Role::S:
            idx = nu + (lab.m - 1);
            break;
    }
    return static_cast<int>(idx);
}

LabeledGraph build_base(int n) {
    check_params(n, 0);
    const auto mols = mols_family(n);
    LabeledGraph out;
    out.n = n;
    out.rounds = 0;
    out.labels = canonical_labels(n, 0);

    std::vector<Edge> es;
    VertexLabel p{Role::P, {}, 0, 0, 0, 0, 0};
    VertexLabel q{Role::Q, {}, 0, 0, 0, 0, 0};
    VertexLabel s{Role::S, {}, 0, 0, 0, 0, 0};
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            q.i = i;
            q.j = j;
            const int qi = label_index(q, n, 0);
            for (int k = 1; k <= n; ++k) {
                p.k = k;
                p.j = mols[i - 1].value(j, k);
                es.emplace_back(std::min(qi, label_index(p, n, 0)),
                                std::max(qi, label_index(p, n, 0)));
            }
        }
    for (int m = 1; m <= n; ++m) {
        s.m = m;
        const int si = label_index(s, n, 0);
        for (int k = 1; k <= n; ++k) {
            p.k = k;
            p.j = m;
            es.emplace_back(std::min(si, label_index(p, n, 0)),
                            std::max(si, label_index(p, n, 0)));
        }
    }
    out.graph = make_graph(static_cast<int>(out.labels.size()), es);
    return out;
}

LabeledGraph build_one_round(int n) {
    check_params(n, 1);
    const auto mols = mols_family(n);
    LabeledGraph out;
    out.n = n;
    out.rounds = 1;
    out.labels = canonical_labels(n, 1);

    std::vector<Edge> es;
    VertexLabel p{Role::P, {0}, 0, 0, 0, 0, 0};
    auto p_idx = [&](int block, int k, int col) {
        p.copy_path[0] = block;
        p.k = k;
        p.j = col;
        return label_index(p, n, 1);
    };
    // Base hubs: inside every block, hub (i,j) meets row k at column L_i(j,k).
    for (int block = 1; block <= n; ++block)
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n; ++j) {
                VertexLabel q{Role::Q, {}, 0, j, i, 0, 0};
                const int qi = label_index(q, n, 1);
                for (int k = 1; k <= n; ++k) {
                    const int pi = p_idx(block, k, mols[i - 1].value(j, k));
                    es.emplace_back(std::min(qi, pi), std::max(qi, pi));
                }
            }
    // Round-1 hubs: hub (i,j) meets the whole column L_i(j,block) of each block.
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            VertexLabel u{Role::U, {}, 0, j, i, 1, 0};
            const int ui = label_index(u, n, 1);
            for (int block = 1; block <= n; ++block) {
                const int col = mols[i - 1].value(j, block);
                for (int k = 1; k <= n; ++k) {
                    const int pi = p_idx(block, k, col);
                    es.emplace_back(std::min(ui, pi), std::max(ui, pi));
                }
            }
        }
    // Column hubs: hub m meets column m of every block.
    for (int m = 1; m <= n; ++m) {
        VertexLabel s{Role::S, {}, 0, 0, 0, 0, m};
        const int si = label_index(s, n, 1);
        for (int block = 1; block <= n; ++block)
            for (int k = 1; k <= n; ++k) {
                const int pi = p_idx(block, k, m);
                es.emplace_back(std::min(si, pi), std::max(si, pi));
            }
    }
    out.graph = make_graph(static_cast<int>(out.labels.size()), es);
    return out;
}

namespace {

// One duplication round on top of `old` (rounds r-1 -> r): every grid vertex
// becomes n labeled copies (coordinate 1 is the original), hub adjacency is
// inherited per copy, and the round-r hub family keys on the new coordinate.
LabeledGraph add_round(const LabeledGraph& old, const std::vector<LatinSquare>& mols) {
    const int n = old.n;
    const int r = old.rounds + 1;
    LabeledGraph out;
    out.n = n;
    out.rounds = r;
    out.labels = canonical_labels(n, r);

    std::vector<Edge> es;
    for (const auto& [a, b] : old.graph.edges()) {
        const bool a_is_p = old.labels[a].role == Role::P;
        const VertexLabel& pl = a_is_p ? old.labels[a] : old.labels[b];
        const VertexLabel& hl = a_is_p ? old.labels[b] : old.labels[a];
        const int hi = label_index(hl, n, r);
        VertexLabel copy = pl;
        copy.copy_path.push_back(0);
        for (int c = 1; c <= n; ++c) {
            copy.copy_path.back() = c;
            const int pi = label_index(copy, n, r);
            es.emplace_back(std::min(hi, pi), std::max(hi, pi));
        }
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            VertexLabel u{Role::U, {}, 0, j, i, r, 0};
            const int ui = label_index(u, n, r);
            for (const auto& lab : out.labels) {
                if (lab.role != Role::P) continue;
                if (lab.j != mols[i - 1].value(j, lab.copy_path[r - 1])) continue;
                const int pi = label_index(lab, n, r);
                es.emplace_back(std::min(ui, pi), std::max(ui, pi));
            }
        }
    out.graph = make_graph(static_cast<int>(out.labels.size()), es);
    return out;
}

}  // namespace

LabeledGraph build_iterated(int n, int rounds) {
    check_params(n, rounds);
    const auto mols = mols_family(n);
    LabeledGraph g = build_base(n);
    for (int r = 1; r <= rounds; ++r) g = add_round(g, mols);
    return g;
}

LabeledGraph duplicate_vertex(const LabeledGraph& g, int v, int copies) {
    if (v < 0 || v >= g.graph.vertex_count())
        throw std::invalid_argument("duplicate_vertex: vertex out of range");
    if (g.labels[v].role != Role::P)
        throw std::invalid_argument("duplicate_vertex: only grid vertices can be cloned");
    if (copies < 1) throw std::invalid_argument("duplicate_vertex: copies must be >= 1");

    const int old_n = g.graph.vertex_count();
    LabeledGraph out;
    out.n = g.n;
    out.rounds = g.rounds;
    out.labels = g.labels;
    std::vector<Edge> es = g.graph.edges();
    for (int c = 0; c < copies; ++c) {
        const int nv = old_n + c;
        VertexLabel lab = g.labels[v];
        lab.copy_path.push_back(c + 2);  // original counts as copy 1
        out.labels.push_back(std::move(lab));
        for (int u : g.graph.neighbors(v))
            es.emplace_back(std::min(u, nv), std::max(u, nv));
    }
    out.graph = make_graph(old_n + copies, es);
    return out;
}

namespace {

VertexSet collect(const LabeledGraph& g, bool (*pred)(const VertexLabel&, int, int, int),
                  int a, int b, int c) {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(g.labels.size()); ++v)
        if (pred(g.labels[v], a, b, c)) out.push_back(v);
    return out;
}

}  // namespace

VertexSet p_vertices(const LabeledGraph& g) {
    return collect(
        g, [](const VertexLabel& l, int, int, int) { return l.role == Role::P; }, 0, 0, 0);
}

VertexSet hub_vertices(const LabeledGraph& g) {
    return collect(
        g, [](const VertexLabel& l, int, int, int) { return l.role != Role::P; }, 0, 0, 0);
}

VertexSet p_block(const LabeledGraph& g, int block) {
    if (g.rounds != 1) throw std::invalid_argument("p_block needs a one-round graph");
    return collect(
        g,
        [](const VertexLabel& l, int b, int, int) {
            return l.role == Role::P && !l.copy_path.empty() && l.copy_path[0] == b;
        },
        block, 0, 0);
}

VertexSet p_cell(const LabeledGraph& g, const std::vector<int>& copy_path, int k) {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(g.labels.size()); ++v) {
        const auto& l = g.labels[v];
        if (l.role == Role::P && l.k == k && l.copy_path == copy_path) out.push_back(v);
    }
    return out;
}

VertexSet t_column(const LabeledGraph& g, int block, int m) {
    if (g.rounds != 1) throw std::invalid_argument("t_column needs a one-round graph");
    return collect(
        g,
        [](const VertexLabel& l, int b, int mm, int) {
            return l.role == Role::P && !l.copy_path.empty() && l.copy_path[0] == b && l.j == mm;
        },
        block, m, 0);
}

VertexSet q_family(const LabeledGraph& g, int i) {
    return collect(
        g, [](const VertexLabel& l, int ii, int, int) { return l.role == Role::Q && l.i == ii; },
        i, 0, 0);
}

VertexSet u_family(const LabeledGraph& g, int round, int i) {
    return collect(
        g,
        [](const VertexLabel& l, int rr, int ii, int) {
            return l.role == Role::U && l.round == rr && l.i == ii;
        },
        round, i, 0);
}

VertexSet s_vertices(const LabeledGraph& g) {
    return collect(
        g, [](const VertexLabel& l, int, int, int) { return l.role == Role::S; }, 0, 0, 0);
}

long long part_count_formula(int n, int rounds) {
    return ipow(n, rounds + 1) + static_cast<long long>(rounds + 1) * (n - 1) + 1;
}

PartitionCertificate part_sets(const LabeledGraph& g) {
    PartitionCertificate cert;
    // Distinct copy paths in lexicographic order (identical to canonical order
    // for builder outputs).
    std::vector<std::vector<int>> paths;
    for (const auto& l : g.labels)
        if (l.role == Role::P) paths.push_back(l.copy_path);
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    for (const auto& path : paths)
        for (int k = 1; k <= g.n; ++k) {
            VertexSet part = p_cell(g, path, k);
            if (!part.empty()) cert.parts.push_back(std::move(part));
        }
    for (int i = 1; i <= g.n - 1; ++i) {
        VertexSet part = q_family(g, i);
        if (!part.empty()) cert.parts.push_back(std::move(part));
    }
    for (int r = 1; r <= g.rounds; ++r)
        for (int i = 1; i <= g.n - 1; ++i) {
            VertexSet part = u_family(g, r, i);
            if (!part.empty()) cert.parts.push_back(std::move(part));
        }
    {
        VertexSet part = s_vertices(g);
        if (!part.empty()) cert.parts.push_back(std::move(part));
    }

    std::vector<char> seen(g.graph.vertex_count(), 0);
    long long covered = 0;
    for (const auto& part : cert.parts)
        for (int v : part) {
            if (seen[v]) throw std::invalid_argument("part_sets: labels induce overlapping parts");
            seen[v] = 1;
            ++covered;
        }
    if (covered != g.graph.vertex_count())
        throw std::invalid_argument("part_sets: labels do not cover every vertex");
    return cert;
}

}  // namespace sqc
