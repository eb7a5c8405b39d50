#include "sqc/verify.hpp"

#include "sqc/choose.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>

namespace sqc {

verification_error::verification_error(VerificationReport rep)
    : std::runtime_error("verification failed: " + rep.claim_id), report_(std::move(rep)) {}

namespace {

// Row-per-vertex adjacency bitsets for cheap common-neighbor tests.
struct AdjBits {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> bits;

    explicit AdjBits(const Graph& g)
        : n(g.vertex_count()), words((g.vertex_count() + 63) / 64),
          bits(static_cast<size_t>(g.vertex_count()) * words, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                bits[static_cast<size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    }

    bool common_neighbor(int u, int v) const {
        const uint64_t* a = &bits[static_cast<size_t>(u) * words];
        const uint64_t* b = &bits[static_cast<size_t>(v) * words];
        for (int w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }
};

bool square_adjacent(const Graph& g, const AdjBits& bits, int u, int v) {
    return g.adjacent(u, v) || bits.common_neighbor(u, v);
}

void require_rounds(const LabeledGraph& g, int rounds, const char* what) {
    if (g.rounds != rounds)
        throw std::invalid_argument(std::string(what) + " needs a graph with rounds == " +
                                    std::to_string(rounds) + ", got " +
                                    std::to_string(g.rounds));
}

void add_witness(VerificationReport& rep, std::string kind, std::vector<int> vertices,
                 std::vector<long long> info) {
    if (rep.witness.empty())
        rep.witness.push_back({std::move(kind), std::move(vertices), std::move(info)});
    rep.pass = false;
}

}  // namespace

VerificationReport verify_hub_neighborhoods(const LabeledGraph& g) {
    require_rounds(g, 1, "hub-neighborhoods");
    const int n = g.n;
    VerificationReport rep;
    rep.claim_id = "hub-neighborhoods";
    rep.pass = true;

    VertexSet q_hubs;
    for (int v = 0; v < g.graph.vertex_count(); ++v)
        if (g.labels[v].role == Role::Q) q_hubs.push_back(v);

    long long checks = 0;
    for (int block = 1; block <= n; ++block) {
        // Grid neighbors of each base hub inside this block.
        std::vector<VertexSet> nbr_in_block(q_hubs.size());
        for (size_t qi = 0; qi < q_hubs.size(); ++qi) {
            const int w = q_hubs[qi];
            std::vector<int> by_row(n + 1, 0), by_col(n + 1, 0);
            for (int u : g.graph.neighbors(w)) {
                const auto& lab = g.labels[u];
                if (lab.role != Role::P || lab.copy_path.empty() || lab.copy_path[0] != block)
                    continue;
                nbr_in_block[qi].push_back(u);
                ++by_row[lab.k];
                ++by_col[lab.j];
            }
            for (int k = 1; k <= n; ++k) {
                ++checks;
                if (by_row[k] != 1)
                    add_witness(rep, "cell-count", {w}, {block, k, 1, by_row[k]});
            }
            for (int m = 1; m <= n; ++m) {
                ++checks;
                if (by_col[m] != 1)
                    add_witness(rep, "column-count", {w}, {block, m, 1, by_col[m]});
            }
        }
        for (size_t a = 0; a < q_hubs.size(); ++a)
            for (size_t b = a + 1; b < q_hubs.size(); ++b) {
                ++checks;
                std::vector<int> shared;
                std::set_intersection(nbr_in_block[a].begin(), nbr_in_block[a].end(),
                                      nbr_in_block[b].begin(), nbr_in_block[b].end(),
                                      std::back_inserter(shared));
                if (shared.size() > 1)
                    add_witness(rep, "overlap", {q_hubs[a], q_hubs[b], shared[0], shared[1]},
                                {block, static_cast<long long>(shared.size())});
            }
        for (int v = 0; v < g.graph.vertex_count(); ++v) {
            const auto& lab = g.labels[v];
            if (lab.role != Role::P || lab.copy_path.empty() || lab.copy_path[0] != block)
                continue;
            std::vector<int> by_family(n, 0);
            for (int u : g.graph.neighbors(v))
                if (g.labels[u].role == Role::Q) ++by_family[g.labels[u].i];
            for (int i = 1; i <= n - 1; ++i) {
                ++checks;
                if (by_family[i] != 1)
                    add_witness(rep, "hub-degree", {v}, {block, i, 1, by_family[i]});
            }
        }
    }
    rep.stats["blocks"] = n;
    rep.stats["base_hubs"] = static_cast<long long>(q_hubs.size());
    rep.stats["checks"] = checks;
    return rep;
}

VerificationReport verify_independence(const Graph& square_graph,
                                       const PartitionCertificate& parts) {
    VerificationReport rep;
    rep.claim_id = "parts-independent";
    rep.pass = true;
    long long pairs = 0;
    for (size_t p = 0; p < parts.parts.size(); ++p) {
        const auto& part = parts.parts[p];
        for (size_t a = 0; a < part.size(); ++a)
            for (size_t b = a + 1; b < part.size(); ++b) {
                ++pairs;
                if (square_graph.adjacent(part[a], part[b]))
                    add_witness(rep, "part-adjacent", {part[a], part[b]},
                                {static_cast<long long>(p)});
            }
    }
    rep.stats["parts"] = static_cast<long long>(parts.parts.size());
    rep.stats["pairs"] = pairs;
    return rep;
}

namespace {

// Checks one block's clique decomposition; fills fam, stops at the first
// violation and records it in rep.
void check_block_cliques(const LabeledGraph& g, const AdjBits& bits, int block,
                         CliqueFamily& fam, VerificationReport& rep) {
    const int n = g.n;
    fam.block = block;
    fam.hubs.clear();
    fam.cliques.clear();

    const VertexSet block_vertices = p_block(g, block);
    std::vector<int> rank(g.graph.vertex_count(), -1);
    for (size_t r = 0; r < block_vertices.size(); ++r) rank[block_vertices[r]] = static_cast<int>(r);
    const int bsz = static_cast<int>(block_vertices.size());

    VertexSet hubs;
    for (int v = 0; v < g.graph.vertex_count(); ++v)
        if (g.labels[v].role == Role::Q || g.labels[v].role == Role::S) hubs.push_back(v);

    std::vector<int> owner(static_cast<size_t>(bsz) * bsz, -1);
    long long covered = 0;
    for (int hub : hubs) {
        VertexSet clique;
        for (int u : g.graph.neighbors(hub))
            if (rank[u] != -1) clique.push_back(u);
        if (static_cast<int>(clique.size()) != n) {
            add_witness(rep, "clique-size", {hub},
                        {block, n, static_cast<long long>(clique.size())});
            return;
        }
        for (size_t a = 0; a < clique.size(); ++a)
            for (size_t b = a + 1; b < clique.size(); ++b) {
                if (!square_adjacent(g.graph, bits, clique[a], clique[b])) {
                    add_witness(rep, "clique-gap", {hub, clique[a], clique[b]}, {block});
                    return;
                }
                const size_t key =
                    static_cast<size_t>(rank[clique[a]]) * bsz + rank[clique[b]];
                if (owner[key] != -1) {
                    add_witness(rep, "clique-overlap",
                                {owner[key], hub, clique[a], clique[b]}, {block});
                    return;
                }
                owner[key] = hub;
                ++covered;
            }
        fam.hubs.push_back(hub);
        fam.cliques.push_back(std::move(clique));
    }

    long long square_edges = 0;
    int miss_a = -1, miss_b = -1;
    for (int a = 0; a < bsz; ++a)
        for (int b = a + 1; b < bsz; ++b)
            if (square_adjacent(g.graph, bits, block_vertices[a], block_vertices[b])) {
                ++square_edges;
                if (miss_a == -1 && owner[static_cast<size_t>(a) * bsz + b] == -1) {
                    miss_a = block_vertices[a];
                    miss_b = block_vertices[b];
                }
            }
    if (square_edges != covered)
        add_witness(rep, "cover-count", {miss_a, miss_b}, {block, covered, square_edges});
}

}  // namespace

CliqueFamily clique_family(const LabeledGraph& g, int block) {
    require_rounds(g, 1, "clique-cover");
    if (block < 1 || block > g.n) throw std::invalid_argument("block index out of range");
    AdjBits bits(g.graph);
    CliqueFamily fam;
    VerificationReport rep;
    rep.claim_id = "clique-cover";
    rep.pass = true;
    check_block_cliques(g, bits, block, fam, rep);
    if (!rep.pass) throw verification_error(rep);
    return fam;
}

VerificationReport verify_clique_cover(const LabeledGraph& g) {
    require_rounds(g, 1, "clique-cover");
    AdjBits bits(g.graph);
    VerificationReport rep;
    rep.claim_id = "clique-cover";
    rep.pass = true;
    long long cliques = 0;
    for (int block = 1; block <= g.n && rep.pass; ++block) {
        CliqueFamily fam;
        check_block_cliques(g, bits, block, fam, rep);
        cliques += static_cast<long long>(fam.cliques.size());
    }
    rep.stats["blocks"] = g.n;
    rep.stats["cliques"] = cliques;
    rep.stats["clique_size"] = g.n;
    return rep;
}

std::vector<VerificationReport> verify_square_multipartite(const LabeledGraph& g) {
    VerificationReport main_rep, cross_rep;
    main_rep.claim_id = "square-multipartite";
    main_rep.pass = true;
    cross_rep.claim_id = "cross-block-adjacency";
    cross_rep.pass = true;

    const PartitionCertificate parts = part_sets(g);
    std::vector<int> part_of(g.graph.vertex_count(), -1);
    std::vector<int> grid_parts;
    VertexSet grid;
    for (size_t p = 0; p < parts.parts.size(); ++p) {
        if (g.labels[parts.parts[p][0]].role != Role::P) continue;
        grid_parts.push_back(static_cast<int>(p));
        for (int v : parts.parts[p]) {
            part_of[v] = static_cast<int>(p);
            grid.push_back(v);
        }
    }
    std::sort(grid.begin(), grid.end());

    AdjBits bits(g.graph);
    long long in_pairs = 0, cross_pairs = 0;
    for (size_t a = 0; a < grid.size(); ++a)
        for (size_t b = a + 1; b < grid.size(); ++b) {
            const int u = grid[a], v = grid[b];
            const bool adj2 = square_adjacent(g.graph, bits, u, v);
            if (part_of[u] == part_of[v]) {
                ++in_pairs;
                if (adj2) add_witness(main_rep, "inpart-adjacent", {u, v}, {part_of[u]});
            } else {
                ++cross_pairs;
                if (!adj2) {
                    add_witness(main_rep, "cross-missing", {u, v}, {part_of[u], part_of[v]});
                    add_witness(cross_rep, "cross-missing", {u, v}, {part_of[u], part_of[v]});
                }
            }
        }
    main_rep.stats["grid_parts"] = static_cast<long long>(grid_parts.size());
    main_rep.stats["inside_pairs"] = in_pairs;
    main_rep.stats["cross_pairs"] = cross_pairs;
    cross_rep.stats["cross_pairs"] = cross_pairs;
    return {main_rep, cross_rep};
}

bool recheck_witness(const LabeledGraph& g, const VerificationReport& rep) {
    if (rep.pass || rep.witness.empty()) return false;
    const WitnessItem& w = rep.witness.front();
    const auto& labels = g.labels;
    const int V = g.graph.vertex_count();
    for (int v : w.vertices)
        if (v < 0 || v >= V) return false;

    auto in_block = [&](int v, long long block) {
        return labels[v].role == Role::P && !labels[v].copy_path.empty() &&
               labels[v].copy_path[0] == block;
    };
    auto dist_le_2 = [&](int u, int v) {
        if (g.graph.adjacent(u, v)) return true;
        for (int x : g.graph.neighbors(u))
            if (g.graph.adjacent(x, v)) return true;
        return false;
    };

    if (w.kind == "cell-count" || w.kind == "column-count") {
        const int hub = w.vertices.at(0);
        const long long block = w.info.at(0), coord = w.info.at(1);
        const long long expected = w.info.at(2), actual = w.info.at(3);
        long long count = 0;
        for (int u : g.graph.neighbors(hub))
            if (in_block(u, block) &&
                (w.kind == "cell-count" ? labels[u].k : labels[u].j) == coord)
                ++count;
        return count == actual && count != expected;
    }
    if (w.kind == "overlap" || w.kind == "clique-overlap") {
        const int h1 = w.vertices.at(0), h2 = w.vertices.at(1);
        const int x = w.vertices.at(2), y = w.vertices.at(3);
        const long long block = w.info.at(0);
        return x != y && h1 != h2 && in_block(x, block) && in_block(y, block) &&
               g.graph.adjacent(h1, x) && g.graph.adjacent(h1, y) &&
               g.graph.adjacent(h2, x) && g.graph.adjacent(h2, y);
    }
    if (w.kind == "hub-degree") {
        const int v = w.vertices.at(0);
        const long long fam = w.info.at(1), expected = w.info.at(2), actual = w.info.at(3);
        long long count = 0;
        for (int u : g.graph.neighbors(v))
            if (labels[u].role == Role::Q && labels[u].i == fam) ++count;
        return count == actual && count != expected;
    }
    if (w.kind == "part-adjacent" || w.kind == "inpart-adjacent") {
        const int u = w.vertices.at(0), v = w.vertices.at(1);
        const auto parts = part_sets(g);
        const size_t p = static_cast<size_t>(w.info.at(0));
        if (p >= parts.parts.size()) return false;
        const auto& part = parts.parts[p];
        return std::binary_search(part.begin(), part.end(), u) &&
               std::binary_search(part.begin(), part.end(), v) && dist_le_2(u, v);
    }
    if (w.kind == "clique-size") {
        const int hub = w.vertices.at(0);
        const long long block = w.info.at(0), expected = w.info.at(1), actual = w.info.at(2);
        long long count = 0;
        for (int u : g.graph.neighbors(hub))
            if (in_block(u, block)) ++count;
        return count == actual && count != expected;
    }
    if (w.kind == "clique-gap") {
        const int x = w.vertices.at(1), y = w.vertices.at(2);
        return x != y && !dist_le_2(x, y);
    }
    if (w.kind == "cover-count") {
        const int x = w.vertices.at(0), y = w.vertices.at(1);
        const long long block = w.info.at(0);
        if (x == y || !in_block(x, block) || !in_block(y, block)) return false;
        if (!dist_le_2(x, y)) return false;
        for (int h = 0; h < V; ++h) {
            if (labels[h].role != Role::Q && labels[h].role != Role::S) continue;
            if (g.graph.adjacent(h, x) && g.graph.adjacent(h, y)) return false;
        }
        return true;
    }
    if (w.kind == "cross-missing") {
        const int u = w.vertices.at(0), v = w.vertices.at(1);
        const auto parts = part_sets(g);
        const size_t pu = static_cast<size_t>(w.info.at(0)),
                     pv = static_cast<size_t>(w.info.at(1));
        if (pu >= parts.parts.size() || pv >= parts.parts.size() || pu == pv) return false;
        return std::binary_search(parts.parts[pu].begin(), parts.parts[pu].end(), u) &&
               std::binary_search(parts.parts[pv].begin(), parts.parts[pv].end(), v) &&
               !dist_le_2(u, v);
    }
    return false;
}

std::vector<std::string> claim_ids(int rounds) {
    if (rounds == 1)
        return {"hub-neighborhoods", "parts-independent", "clique-cover",
                "square-multipartite", "cross-block-adjacency"};
    return {"parts-independent", "square-multipartite", "cross-block-adjacency"};
}

namespace {

VerificationReport run_one_claim(const LabeledGraph& g, const std::string& claim) {
    if (claim == "hub-neighborhoods") return verify_hub_neighborhoods(g);
    if (claim == "parts-independent")
        return verify_independence(square(g.graph), part_sets(g));
    if (claim == "clique-cover") return verify_clique_cover(g);
    if (claim == "square-multipartite") return verify_square_multipartite(g)[0];
    if (claim == "cross-block-adjacency") return verify_square_multipartite(g)[1];
    throw std::invalid_argument("unknown claim: " + claim);
}

}  // namespace

std::vector<VerificationReport> run_claims(const LabeledGraph& g,
                                           const std::vector<std::string>& claims,
                                           int workers) {
    const auto valid = claim_ids(g.rounds);
    for (const auto& c : claims)
        if (std::find(valid.begin(), valid.end(), c) == valid.end())
            throw std::invalid_argument("claim not applicable at rounds=" +
                                        std::to_string(g.rounds) + ": " + c);

    std::vector<VerificationReport> out(claims.size());
    if (workers <= 1 || claims.size() <= 1) {
        for (size_t i = 0; i < claims.size(); ++i) out[i] = run_one_claim(g, claims[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(claims.size());
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= claims.size()) return;
            try {
                out[i] = run_one_claim(g, claims[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(claims.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

long long vetrik_bound(long long n, long long r) {
    if (n < 2 || r < 2) throw std::domain_error("vetrik_bound needs n >= 2 and r >= 2");
    return (n - 1) * ((2 * r - 1) / n);
}

long long kierstead_value(long long r) {
    if (r < 1) throw std::domain_error("kierstead_value needs r >= 1");
    return (4 * r + 1) / 3;  // == ceil((4r-1)/3)
}

GapReport gap_report(int n, int rounds) {
    if (rounds < 0) throw std::domain_error("rounds must be >= 0");
    if (n < 3 || !is_prime(n)) throw std::domain_error("gap report requires prime n >= 3");

    GapReport rep;
    rep.n = n;
    rep.rounds = rounds;
    rep.formula_only = (rounds != 1 && rounds != 2);
    rep.part_count = part_count_formula(n, rounds);

    long long grid_parts = 1;
    for (int r = 0; r <= rounds; ++r) grid_parts *= n;  // n^(rounds+1)
    rep.vetrik_strict = vetrik_bound(n, grid_parts);
    rep.list_lower = rep.vetrik_strict + 1;
    if (n == 3) {
        rep.kierstead_exact = kierstead_value(grid_parts);
        rep.list_lower = std::max(rep.list_lower, *rep.kierstead_exact);
    }
    rep.gap_lower = rep.list_lower - rep.part_count;
    if (rounds == 1)
        rep.quadratic_gap_bound = static_cast<long long>(n) * n - 6LL * n + 3;

    if (!rep.formula_only) {
        const LabeledGraph g = build_iterated(n, rounds);
        const Graph sq = square(g.graph);
        const PartitionCertificate parts = part_sets(g);
        bool ok = verify_independence(sq, parts).pass &&
                  static_cast<long long>(parts.parts.size()) == rep.part_count;
        if (ok) {
            const VertexColoring coloring = color_from_partition(sq, parts);
            ok = is_proper(sq, coloring);
        }
        rep.upper_witnessed = ok;
    }
    rep.certified = !rep.formula_only && rep.upper_witnessed && rep.gap_lower >= 1;
    return rep;
}

}  // namespace sqc
