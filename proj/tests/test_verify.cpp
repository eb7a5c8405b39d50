#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sqc/construction.hpp"
#include "sqc/graph.hpp"
#include "sqc/verify.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace sqc;

namespace {

LabeledGraph with_edges(const LabeledGraph& g, std::vector<Edge> es) {
    LabeledGraph out = g;
    out.graph = make_graph(g.graph.vertex_count(), es);
    return out;
}

LabeledGraph delete_edge_at(const LabeledGraph& g, size_t idx) {
    auto es = g.graph.edges();
    es.erase(es.begin() + static_cast<long>(idx));
    return with_edges(g, std::move(es));
}

LabeledGraph add_edge(const LabeledGraph& g, int u, int v) {
    auto es = g.graph.edges();
    es.emplace_back(std::min(u, v), std::max(u, v));
    return with_edges(g, std::move(es));
}

}  // namespace

TEST_CASE("all claims pass on clean one round graphs") {
    for (int n : {3, 5}) {
        const LabeledGraph g = build_one_round(n);
        for (const auto& rep : run_claims(g, claim_ids(1))) {
            CHECK(rep.pass);
            CHECK(rep.witness.empty());
        }
    }
}

TEST_CASE("applicable claims pass on the two round graph") {
    const LabeledGraph g = build_iterated(3, 2);
    CHECK(claim_ids(2) ==
          std::vector<std::string>{"parts-independent", "square-multipartite",
                                   "cross-block-adjacency"});
    for (const auto& rep : run_claims(g, claim_ids(2))) CHECK(rep.pass);
}

TEST_CASE("claim lists are pinned and non-members are rejected") {
    CHECK(claim_ids(1) ==
          std::vector<std::string>{"hub-neighborhoods", "parts-independent", "clique-cover",
                                   "square-multipartite", "cross-block-adjacency"});
    const LabeledGraph g1 = build_one_round(3);
    CHECK_THROWS_AS(run_claims(g1, {"no-such-claim"}), std::invalid_argument);
    CHECK_THROWS_AS(run_claims(build_base(3), {"hub-neighborhoods"}), std::invalid_argument);
}

TEST_CASE("parallel claim evaluation matches the serial order") {
    const LabeledGraph g = build_one_round(3);
    const auto serial = run_claims(g, claim_ids(1), 1);
    const auto parallel = run_claims(g, claim_ids(1), 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].claim_id == parallel[i].claim_id);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].stats == parallel[i].stats);
    }
}

TEST_CASE("square multipartite stats count the grid pairs") {
    const LabeledGraph g = build_one_round(3);
    const auto reps = verify_square_multipartite(g);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].stats.at("grid_parts") == 9);
    CHECK(reps[0].stats.at("inside_pairs") == 27);
    CHECK(reps[0].stats.at("cross_pairs") == 324);
    CHECK(reps[1].stats.at("cross_pairs") == 324);
}

TEST_CASE("clique families decompose each block of the square") {
    const LabeledGraph g = build_one_round(3);
    for (int block = 1; block <= 3; ++block) {
        const CliqueFamily fam = clique_family(g, block);
        CHECK(fam.block == block);
        CHECK(fam.hubs.size() == 9);
        REQUIRE(fam.cliques.size() == 9);
        const VertexSet block_set = p_block(g, block);
        for (const auto& clique : fam.cliques) {
            CHECK(clique.size() == 3);
            for (int v : clique)
                CHECK(std::binary_search(block_set.begin(), block_set.end(), v));
        }
    }
    CHECK_THROWS_AS(clique_family(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(clique_family(build_base(3), 1), std::invalid_argument);
}

TEST_CASE("a broken clique family throws with the offending hub") {
    const LabeledGraph g = build_one_round(3);
    // Remove the block-2 column-1 edge of column hub m=1 (index 39).
    const int s_hub = label_index(VertexLabel{Role::S, {}, 0, 0, 0, 0, 1}, 3, 1);
    const int p = label_index(VertexLabel{Role::P, {2}, 1, 1, 0, 0, 0}, 3, 1);
    auto es = g.graph.edges();
    const Edge target{std::min(p, s_hub), std::max(p, s_hub)};
    es.erase(std::find(es.begin(), es.end(), target));
    const LabeledGraph mutant = with_edges(g, std::move(es));

    CHECK_NOTHROW(clique_family(mutant, 1));
    try {
        clique_family(mutant, 2);
        FAIL("expected verification_error");
    } catch (const verification_error& e) {
        CHECK(e.report().claim_id == "clique-cover");
        REQUIRE(!e.report().witness.empty());
        CHECK(e.report().witness.front().kind == "clique-size");
        CHECK(e.report().witness.front().vertices.front() == s_hub);
        CHECK(recheck_witness(mutant, e.report()));
    }
}

TEST_CASE("merging two independent parts produces an adjacency witness") {
    const LabeledGraph g = build_one_round(3);
    const Graph sq = square(g.graph);
    PartitionCertificate parts = part_sets(g);
    const VertexSet fam2 = q_family(g, 2);
    VertexSet& fam1 = *std::find_if(parts.parts.begin(), parts.parts.end(),
                                    [&](const VertexSet& p) { return p == q_family(g, 1); });
    fam1.insert(fam1.end(), fam2.begin(), fam2.end());
    std::sort(fam1.begin(), fam1.end());
    parts.parts.erase(std::find(parts.parts.begin(), parts.parts.end(), fam2));

    const VerificationReport rep = verify_independence(sq, parts);
    CHECK_FALSE(rep.pass);
    REQUIRE(!rep.witness.empty());
    const WitnessItem& w = rep.witness.front();
    CHECK(w.kind == "part-adjacent");
    CHECK(sq.adjacent(w.vertices.at(0), w.vertices.at(1)));
    CHECK(g.labels[w.vertices.at(0)].role == Role::Q);
    CHECK(g.labels[w.vertices.at(1)].role == Role::Q);
}

TEST_CASE("every single edge deletion is caught by some claim") {
    const LabeledGraph g = build_one_round(3);
    const auto claims = claim_ids(1);
    REQUIRE(g.graph.edge_count() == 135);
    for (size_t e = 0; e < 135; ++e) {
        const LabeledGraph mutant = delete_edge_at(g, e);
        const auto reports = run_claims(mutant, claims);
        bool caught = false;
        for (const auto& rep : reports) {
            if (rep.pass) continue;
            caught = true;
            REQUIRE(!rep.witness.empty());
            CHECK(recheck_witness(mutant, rep));
        }
        CHECK(caught);
    }
}

TEST_CASE("added edges are caught with rechecked witnesses") {
    const LabeledGraph g = build_one_round(3);

    // Same grid cell: vertices 0 and 1 are rows k=1, columns 1 and 2 of block 1.
    const LabeledGraph cell_mutant = add_edge(g, 0, 1);
    const auto cell_reports = run_claims(cell_mutant, {"parts-independent"});
    CHECK_FALSE(cell_reports[0].pass);
    CHECK(cell_reports[0].witness.front().kind == "part-adjacent");
    CHECK(recheck_witness(cell_mutant, cell_reports[0]));

    // Extra base hub edge doubles a row count inside block 1.
    const int q_hub = label_index(VertexLabel{Role::Q, {}, 0, 1, 1, 0, 0}, 3, 1);
    const LabeledGraph hub_mutant = add_edge(g, q_hub, 1);
    const auto hub_reports = run_claims(hub_mutant, {"hub-neighborhoods"});
    CHECK_FALSE(hub_reports[0].pass);
    CHECK(hub_reports[0].witness.front().kind == "cell-count");
    CHECK(recheck_witness(hub_mutant, hub_reports[0]));
}

TEST_CASE("recheck refuses passing reports and malformed witnesses") {
    const LabeledGraph g = build_one_round(3);
    VerificationReport ok;
    ok.claim_id = "parts-independent";
    ok.pass = true;
    CHECK_FALSE(recheck_witness(g, ok));

    // Cell mates 0 and 1 are not within distance two, so this witness is fake.
    VerificationReport bogus;
    bogus.claim_id = "parts-independent";
    bogus.pass = false;
    bogus.witness.push_back({"part-adjacent", {0, 1}, {0}});
    CHECK_FALSE(recheck_witness(g, bogus));

    VerificationReport out_of_range;
    out_of_range.claim_id = "parts-independent";
    out_of_range.pass = false;
    out_of_range.witness.push_back({"part-adjacent", {0, 999}, {0}});
    CHECK_FALSE(recheck_witness(g, out_of_range));
}

TEST_CASE("closed form bounds are pinned") {
    CHECK(vetrik_bound(3, 9) == 10);
    CHECK(vetrik_bound(3, 27) == 34);
    CHECK(vetrik_bound(5, 25) == 36);
    CHECK(vetrik_bound(7, 49) == 78);
    CHECK_THROWS_AS(vetrik_bound(1, 5), std::domain_error);
    CHECK_THROWS_AS(vetrik_bound(3, 1), std::domain_error);

    CHECK(kierstead_value(1) == 1);
    CHECK(kierstead_value(2) == 3);
    CHECK(kierstead_value(9) == 12);
    CHECK(kierstead_value(27) == 36);
    CHECK(kierstead_value(49) == 65);
    CHECK_THROWS_AS(kierstead_value(0), std::domain_error);
}

TEST_CASE("gap report composes witnessed upper and closed form lower bounds") {
    const GapReport big = gap_report(7, 1);
    CHECK(big.part_count == 62);
    CHECK(big.vetrik_strict == 78);
    CHECK(big.list_lower == 79);
    CHECK(big.gap_lower == 17);
    CHECK(big.quadratic_gap_bound == 10);
    CHECK(big.gap_lower > *big.quadratic_gap_bound);
    CHECK(big.upper_witnessed);
    CHECK(big.certified);
    CHECK_FALSE(big.kierstead_exact.has_value());

    const GapReport two = gap_report(3, 2);
    CHECK(two.part_count == 34);
    CHECK(two.kierstead_exact == 36);
    CHECK(two.list_lower == 36);
    CHECK(two.gap_lower == 2);
    CHECK_FALSE(two.quadratic_gap_bound.has_value());
    CHECK(two.upper_witnessed);
    CHECK(two.certified);

    const GapReport small = gap_report(3, 1);
    CHECK(small.part_count == 14);
    CHECK(small.kierstead_exact == 12);
    CHECK(small.list_lower == 12);
    CHECK(small.gap_lower == -2);
    CHECK(small.upper_witnessed);
    CHECK_FALSE(small.certified);

    const GapReport five = gap_report(5, 1);
    CHECK(five.part_count == 34);
    CHECK(five.list_lower == 37);
    CHECK(five.gap_lower == 3);
    CHECK(five.certified);

    const GapReport base = gap_report(3, 0);
    CHECK(base.formula_only);
    CHECK_FALSE(base.upper_witnessed);
    CHECK_FALSE(base.certified);

    CHECK_THROWS_AS(gap_report(4, 1), std::domain_error);
    CHECK_THROWS_AS(gap_report(3, -1), std::domain_error);
}
