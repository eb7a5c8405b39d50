#include "sqc/choose.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqc {

ListAssignment uniform_lists(int vertex_count, int k) {
    if (vertex_count < 0 || k < 0) throw std::invalid_argument("bad uniform_lists arguments");
    std::vector<int> base(k);
    for (int c = 0; c < k; ++c) base[c] = c;
    return ListAssignment{std::vector<std::vector<int>>(vertex_count, base)};
}

bool is_proper(const Graph& g, const VertexColoring& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

bool respects_lists(const ListAssignment& L, const VertexColoring& coloring) {
    if (L.lists.size() != coloring.size()) return false;
    for (size_t v = 0; v < coloring.size(); ++v) {
        const auto& l = L.lists[v];
        if (std::find(l.begin(), l.end(), coloring[v]) == l.end()) return false;
    }
    return true;
}

namespace {

// Vertices sorted by degree descending, index ascending.
std::vector<int> solver_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Forward-checking backtracker over multi-word color masks.
struct MaskSolver {
    const Graph& g;
    int n;
    int words;
    std::vector<uint64_t> mask;  // live colors, n rows of `words`
    std::vector<int> order;
    std::vector<int> chosen;  // palette index or -1
    std::vector<std::pair<size_t, uint64_t>> undo;
    long long nodes = 0;
    long long budget = 0;
    bool over_budget = false;

    MaskSolver(const Graph& graph, int word_count)
        : g(graph), n(graph.vertex_count()), words(word_count),
          mask(static_cast<size_t>(graph.vertex_count()) * word_count, 0),
          order(solver_order(graph)), chosen(graph.vertex_count(), -1) {}

    bool dfs(int depth) {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < words; ++w) {
            uint64_t bits = mask[static_cast<size_t>(v) * words + w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                ++nodes;
                if (budget > 0 && nodes > budget) {
                    over_budget = true;
                    return false;
                }
                chosen[v] = w * 64 + b;
                const size_t mark = undo.size();
                bool dead = false;
                for (int u : g.neighbors(v)) {
                    if (chosen[u] != -1) continue;
                    const size_t cell = static_cast<size_t>(u) * words + w;
                    if (!(mask[cell] & (1ull << b))) continue;
                    undo.emplace_back(cell, mask[cell]);
                    mask[cell] &= ~(1ull << b);
                    bool empty = true;
                    for (int x = 0; x < words; ++x)
                        if (mask[static_cast<size_t>(u) * words + x]) {
                            empty = false;
                            break;
                        }
                    if (empty) {
                        dead = true;
                        break;
                    }
                }
                if (!dead && dfs(depth + 1)) return true;
                while (undo.size() > mark) {
                    mask[undo.back().first] = undo.back().second;
                    undo.pop_back();
                }
                chosen[v] = -1;
                if (over_budget) return false;
            }
        }
        return false;
    }
};

}  // namespace

SolveResult solve_lists(const Graph& g, const ListAssignment& L, long long node_budget) {
    const int n = g.vertex_count();
    if (static_cast<int>(L.lists.size()) != n)
        throw std::invalid_argument("list assignment must cover every vertex exactly once");
    if (node_budget < 0) throw std::invalid_argument("node budget must be >= 0");

    std::vector<int> palette;
    for (const auto& l : L.lists) {
        for (int c : l)
            if (c < 0) throw std::invalid_argument("colors must be nonnegative");
        palette.insert(palette.end(), l.begin(), l.end());
    }
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

    SolveResult res;
    for (const auto& l : L.lists)
        if (l.empty()) {
            res.status = SolveStatus::Uncolorable;
            return res;
        }
    if (n == 0) {
        res.status = SolveStatus::Colorable;
        res.coloring = VertexColoring{};
        return res;
    }

    const int words = (static_cast<int>(palette.size()) + 63) / 64;
    MaskSolver solver(g, words);
    solver.budget = node_budget;
    for (int v = 0; v < n; ++v)
        for (int c : L.lists[v]) {
            const int idx = static_cast<int>(
                std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
            solver.mask[static_cast<size_t>(v) * words + idx / 64] |= 1ull << (idx % 64);
        }

    const bool ok = solver.dfs(0);
    res.nodes = solver.nodes;
    if (ok) {
        res.status = SolveStatus::Colorable;
        VertexColoring col(n);
        for (int v = 0; v < n; ++v) col[v] = palette[solver.chosen[v]];
        res.coloring = std::move(col);
    } else {
        res.status = solver.over_budget ? SolveStatus::Unknown : SolveStatus::Uncolorable;
    }
    return res;
}

VertexColoring color_from_partition(const Graph& g, const PartitionCertificate& cert) {
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < cert.parts.size(); ++p) {
        if (cert.parts[p].empty()) throw std::invalid_argument("empty part");
        for (int v : cert.parts[p]) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (part_of[v] != -1) throw std::invalid_argument("partition parts overlap");
            part_of[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw std::invalid_argument("partition misses vertex " + std::to_string(v));
    for (const auto& [u, v] : g.edges())
        if (part_of[u] == part_of[v])
            throw std::invalid_argument("part " + std::to_string(part_of[u]) +
                                        " not independent: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    VertexColoring col(n);
    for (int v = 0; v < n; ++v) col[v] = part_of[v];
    return col;
}

namespace {

// Canonical enumeration of k-list assignments up to color renaming: vertices
// in index order, each list a sorted k-subset of the colors seen so far plus
// a contiguous run of fresh ones. Tests each complete assignment with an
// exact forward-checking search.
struct BadSearch {
    const Graph& g;
    int n, k, cap;
    long long budget;
    std::vector<std::vector<int>> cur;   // chosen list per vertex (palette indices)
    std::vector<uint64_t> lmask;         // single-word list masks (cap <= 64 path)
    std::vector<int> order;              // solver order
    std::vector<std::pair<int, uint64_t>> undo;
    std::vector<uint64_t> live;
    std::vector<int> chosen;
    long long tested = 0;
    bool stop = false;
    bool exhausted_all = true;
    std::optional<ListAssignment> found;

    BadSearch(const Graph& graph, int kk, int cap_, long long budget_)
        : g(graph), n(graph.vertex_count()), k(kk), cap(cap_), budget(budget_),
          cur(graph.vertex_count(), std::vector<int>(kk)),
          lmask(graph.vertex_count(), 0), order(solver_order(graph)),
          live(graph.vertex_count(), 0), chosen(graph.vertex_count(), -1) {}

    bool fast() const { return cap <= 64; }

    bool leaf_colorable_masks() {
        std::copy(lmask.begin(), lmask.end(), live.begin());
        std::fill(chosen.begin(), chosen.end(), -1);
        undo.clear();
        return dfs_masks(0);
    }

    bool dfs_masks(int depth) {
        if (depth == n) return true;
        const int v = order[depth];
        uint64_t bits = live[v];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            chosen[v] = b;
            const size_t mark = undo.size();
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (chosen[u] != -1) continue;
                if (!(live[u] & (1ull << b))) continue;
                undo.emplace_back(u, live[u]);
                live[u] &= ~(1ull << b);
                if (!live[u]) {
                    dead = true;
                    break;
                }
            }
            if (!dead && dfs_masks(depth + 1)) return true;
            while (undo.size() > mark) {
                live[undo.back().first] = undo.back().second;
                undo.pop_back();
            }
            chosen[v] = -1;
        }
        return false;
    }

    void test_leaf() {
        bool colorable;
        if (fast()) {
            colorable = leaf_colorable_masks();
        } else {
            ListAssignment asn{cur};
            colorable = solve_lists(g, asn).status == SolveStatus::Colorable;
        }
        ++tested;
        if (!colorable) {
            found = ListAssignment{cur};
            stop = true;
            return;
        }
        if (budget > 0 && tested >= budget) {
            stop = true;
            exhausted_all = false;
        }
    }

    void rec(int v, int used) {
        if (stop) return;
        if (v == n) {
            test_leaf();
            return;
        }
        const int limit = std::min(used + k, cap);
        if (limit < k) return;  // cannot fill a k-list at all
        auto& comb = cur[v];
        for (int c = 0; c < k; ++c) comb[c] = c;
        for (;;) {
            // Fresh colors must form the run used..used+t-1.
            int t = 0;
            while (t < k && comb[k - 1 - t] >= used) ++t;
            bool canonical = true;
            for (int x = 0; x < t; ++x)
                if (comb[k - t + x] != used + x) {
                    canonical = false;
                    break;
                }
            if (canonical) {
                if (fast()) {
                    uint64_t m = 0;
                    for (int c : comb) m |= 1ull << c;
                    lmask[v] = m;
                }
                rec(v + 1, used + t);
                if (stop) return;
            }
            // next k-combination of [0, limit) in lexicographic order
            int i = k - 1;
            while (i >= 0 && comb[i] == limit - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int x = i + 1; x < k; ++x) comb[x] = comb[x - 1] + 1;
        }
    }
};

}  // namespace

BadSearchResult find_bad_assignment(const Graph& g, int k, int palette_cap, long long budget) {
    if (k < 1) throw std::invalid_argument("list size must be >= 1");
    if (palette_cap < 0 || budget < 0)
        throw std::invalid_argument("palette cap and budget must be >= 0");
    const int n = g.vertex_count();
    BadSearchResult res;
    if (n == 0) {
        res.exhausted = true;  // no assignment can be bad on an empty graph
        return res;
    }
    long long cap_ll = palette_cap == 0 ? static_cast<long long>(k) * n : palette_cap;
    if (cap_ll < k) throw std::invalid_argument("palette cap below list size");
    // A canonical assignment introduces at most k colors per vertex.
    cap_ll = std::min(cap_ll, static_cast<long long>(k) * n);

    BadSearch search(g, k, static_cast<int>(cap_ll), budget);
    search.rec(0, 0);
    res.assignments_tested = search.tested;
    if (search.found) {
        // Cross-check the leaf verdict with the general solver before returning.
        if (solve_lists(g, *search.found).status != SolveStatus::Uncolorable)
            throw std::logic_error("bad-assignment search disagrees with the solver");
        res.assignment = std::move(search.found);
        res.exhausted = false;
    } else {
        res.exhausted = search.exhausted_all;
    }
    return res;
}

OracleResult list_chromatic_oracle(const Graph& g, const OracleOptions& opts) {
    const int n = g.vertex_count();
    if (opts.max_k < 1) throw std::invalid_argument("max_k must be >= 1");
    if (n > opts.size_guard)
        throw std::invalid_argument("oracle size guard exceeded: " + std::to_string(n) +
                                    " vertices > " + std::to_string(opts.size_guard));
    OracleResult res;
    if (n == 0) {
        res.list_chromatic = 0;
        return res;
    }
    for (int k = 1; k <= n; ++k) {
        if (solve_lists(g, uniform_lists(n, k)).status == SolveStatus::Colorable) {
            res.chromatic = k;
            break;
        }
    }
    for (int k = 1; k <= opts.max_k; ++k) {
        const int cap = opts.palette_cap == 0 ? k * n : opts.palette_cap;
        BadSearchResult r = find_bad_assignment(g, k, cap, 0);
        res.assignments_tested += r.assignments_tested;
        if (!r.assignment) {
            res.list_chromatic = k;
            break;
        }
        res.lower_bound_witness = std::move(r.assignment);
    }
    return res;
}

}  // namespace sqc
