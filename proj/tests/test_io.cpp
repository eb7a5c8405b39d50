#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sqc/construction.hpp"
#include "sqc/io.hpp"
#include "sqc/verify.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

using namespace sqc;
using namespace sqc::test;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string()) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("plain graph serialization is pinned and round-trips") {
    const Graph g = path_graph(3);
    const auto j = graph_to_json(g);
    CHECK(j.dump() == R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(graph_from_json(nlohmann::json::parse(j.dump())) == g);

    CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")));
    CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0]]})")));
    CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,2]]})")));
}

TEST_CASE("labeled graphs round-trip with every role") {
    for (const LabeledGraph& g : {build_base(3), build_one_round(3), build_iterated(3, 2)}) {
        const auto j = labeled_graph_to_json(g);
        const LabeledGraph back = labeled_graph_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == g);
    }

    const auto j = labeled_graph_to_json(build_base(3));
    CHECK(j["labels"][0].dump() == R"({"role":"P","copy_path":[],"k":1,"j":1})");
    CHECK(j["labels"][10].dump() == R"({"role":"Q","i":1,"j":2})");
    CHECK(j["labels"][16].dump() == R"({"role":"S","m":2})");
    CHECK(j["prime"] == 3);
    CHECK(j["rounds"] == 0);

    const auto j1 = labeled_graph_to_json(build_one_round(3));
    CHECK(j1["labels"][33].dump() == R"({"role":"U","round":1,"i":1,"j":1})");
}

TEST_CASE("label parsing rejects malformed documents") {
    auto doc = nlohmann::json::parse(labeled_graph_to_json(build_base(3)).dump());
    doc["labels"].erase(0);
    CHECK_THROWS(labeled_graph_from_json(doc));

    auto bad_role = nlohmann::json::parse(labeled_graph_to_json(build_base(3)).dump());
    bad_role["labels"][0]["role"] = "X";
    CHECK_THROWS(labeled_graph_from_json(bad_role));
}

TEST_CASE("list assignments and colorings round-trip") {
    const ListAssignment L{{{0, 2}, {1}, {0, 1, 5}}};
    const auto j = lists_to_json(L);
    CHECK(j.dump() == R"({"lists":{"0":[0,2],"1":[1],"2":[0,1,5]}})");
    CHECK(lists_from_json(nlohmann::json::parse(j.dump())).lists == L.lists);

    CHECK_THROWS(lists_from_json(nlohmann::json::parse(R"({"lists":{"0":[1],"2":[2]}})")));
    CHECK_THROWS(lists_from_json(nlohmann::json::parse(R"({"lists":[[0]]})")));

    const VertexColoring col{2, 0, 1};
    CHECK(coloring_to_json(col).dump() == R"({"colors":[2,0,1]})");
    CHECK(coloring_from_json(nlohmann::json::parse(R"({"colors":[2,0,1]})")) == col);
}

TEST_CASE("verification reports serialize status, witness, and stats") {
    VerificationReport rep;
    rep.claim_id = "clique-cover";
    rep.pass = false;
    rep.witness.push_back({"clique-size", {39}, {2, 3, 2}});
    rep.stats["blocks"] = 3;
    const auto j = report_to_json(rep, 3, 1);
    CHECK(j["claim"] == "clique-cover");
    CHECK(j["status"] == "fail");
    CHECK(j["witness"][0]["kind"] == "clique-size");
    CHECK(j["witness"][0]["vertices"] == nlohmann::ordered_json::array({39}));
    CHECK(j["witness"][0]["info"] == nlohmann::ordered_json::array({2, 3, 2}));
    CHECK(j["stats"]["blocks"] == 3);
    CHECK(j["inputs"]["n"] == 3);
    CHECK(j["inputs"]["rounds"] == 1);

    rep.pass = true;
    rep.witness.clear();
    CHECK(report_to_json(rep, 3, 1)["status"] == "pass");
}

TEST_CASE("gap reports serialize optional fields as null") {
    const auto one = gap_report_to_json(gap_report(3, 1));
    CHECK(one["chi_upper"] == 14);
    CHECK(one["kierstead_exact"] == 12);
    CHECK(one["chi_list_lower"] == 12);
    CHECK(one["gap_lower"] == -2);
    CHECK(one["quadratic_gap_bound"] == -6);
    CHECK(one["certified"] == false);
    CHECK(one["upper_witnessed"] == true);

    const auto base = gap_report_to_json(gap_report(3, 0));
    CHECK(base["formula_only"] == true);
    CHECK(base["quadratic_gap_bound"].is_null());
}

TEST_CASE("DOT export lists vertices then edges") {
    CHECK(to_dot(path_graph(2)) == "graph g {\n  0;\n  1;\n  0 -- 1;\n}\n");
    const std::string labeled = to_dot(build_base(3), true);
    CHECK(labeled.find("0 [label=\"p 1,1\"];") != std::string::npos);
    CHECK(labeled.find("[label=\"q 1,2\"];") != std::string::npos);
    CHECK(labeled.find("[label=\"s 2\"];") != std::string::npos);
    const std::string round = to_dot(build_one_round(3), true);
    CHECK(round.find("[label=\"p 1,1|1\"];") != std::string::npos);
    CHECK(round.find("[label=\"u 1:1,1\"];") != std::string::npos);
    CHECK(to_dot(build_base(3), false) == to_dot(build_base(3).graph));
}

TEST_CASE("file digests and text helpers") {
    TempFile f("sqc_io_digest_test.txt");
    write_text_file(f.path, "");
    CHECK(fnv1a64_file(f.path) == 14695981039346656037ull);  // offset basis
    CHECK(to_hex64(14695981039346656037ull) == "cbf29ce484222325");

    const std::string payload = "squares of subdivisions\n";
    write_text_file(f.path, payload);
    CHECK(read_text_file(f.path) == payload);
    uint64_t expect = 14695981039346656037ull;
    for (unsigned char c : payload) {
        expect ^= c;
        expect *= 1099511628211ull;
    }
    CHECK(fnv1a64_file(f.path) == expect);
    CHECK(to_hex64(0) == "0000000000000000");

    CHECK_THROWS_AS(fnv1a64_file("/nonexistent/sqc/file"), std::runtime_error);
    CHECK_THROWS_AS(read_text_file("/nonexistent/sqc/file"), std::runtime_error);
}
