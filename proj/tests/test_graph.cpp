#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hoffman/graph.hpp"

using namespace hoffman;
using namespace hoffman::testing;

TEST_CASE("Hoffman graph JSON round trip") {
    auto j = nlohmann::json::parse(
        R"({"slim":["v"],"fat":["f1","f2"],"edges":[["v","f1"],["v","f2"]]})");
    HoffmanGraph h = HoffmanGraph::from_json(j);
    h.validate();
    CHECK(h.slim_vertices == std::vector<VertexId>{"v"});
    CHECK(h.fat_vertices == std::vector<VertexId>{"f1", "f2"});
    CHECK(h.adjacent("v", "f1"));
    CHECK_FALSE(h.adjacent("f1", "f2"));

    HoffmanGraph back = HoffmanGraph::from_json(h.to_json());
    CHECK(back.slim_vertices == h.slim_vertices);
    CHECK(back.fat_vertices == h.fat_vertices);
    CHECK(back.edges == h.edges);
}

TEST_CASE("Hoffman graph invariant violations") {
    SUBCASE("edge between fat vertices") {
        HoffmanGraph h;
        h.slim_vertices = {"v"};
        h.fat_vertices = {"f1", "f2"};
        h.add_edge("v", "f1");
        h.add_edge("v", "f2");
        h.add_edge("f1", "f2");
        CHECK_THROWS_AS(h.validate(), InputError);
    }
    SUBCASE("isolated fat vertex") {
        HoffmanGraph h;
        h.slim_vertices = {"v"};
        h.fat_vertices = {"f"};
        CHECK_THROWS_AS(h.validate(), InputError);
    }
    SUBCASE("slim/fat overlap") {
        HoffmanGraph h;
        h.slim_vertices = {"v"};
        h.fat_vertices = {"v"};
        CHECK_THROWS_AS(h.validate(), InputError);
    }
    SUBCASE("edge with unknown endpoint") {
        auto j = nlohmann::json::parse(
            R"({"slim":["v"],"fat":[],"edges":[["v","w"]]})");
        CHECK_THROWS_AS(HoffmanGraph::from_json(j).validate(), InputError);
    }
}

TEST_CASE("induced subgraph keeps roles, drops isolated fats") {
    SUBCASE("K_{1,2} restricted to {v,f1} is K_{1,1}") {
        auto r = induced_hoffman_subgraph(k1t(2), {"v", "f1"});
        CHECK(r.graph.slim_vertices == std::vector<VertexId>{"v"});
        CHECK(r.graph.fat_vertices == std::vector<VertexId>{"f1"});
        CHECK(r.graph.edges.size() == 1);
        CHECK(r.dropped_fat_vertices.empty());
    }
    SUBCASE("restriction that isolates a fat vertex reports the drop") {
        auto r = induced_hoffman_subgraph(
            h_one(), {"v*", "v1", "f+", "f-", "f1", "f2"});
        CHECK(r.dropped_fat_vertices == std::vector<VertexId>{"f2"});
        CHECK(r.graph.slim_vertices.size() == 2);
        CHECK(r.graph.fat_vertices.size() == 3);
        r.graph.validate();
    }
    SUBCASE("empty keep set yields the empty graph") {
        auto r = induced_hoffman_subgraph(h_one(), {});
        CHECK(r.graph.slim_vertices.empty());
        CHECK(r.graph.fat_vertices.empty());
        CHECK(r.graph.edges.empty());
    }
    SUBCASE("unknown vertex in keep") {
        CHECK_THROWS_AS(induced_hoffman_subgraph(k1t(2), {"nope"}), InputError);
    }
}

TEST_CASE("neighbors splits by role") {
    auto [s0, f0] = neighbors(k1t(3), "v");
    CHECK(s0.empty());
    CHECK(f0 == std::vector<VertexId>{"f1", "f2", "f3"});

    auto [s1, f1] = neighbors(h_one(), "v*");
    CHECK(s1 == std::vector<VertexId>{"v1"});
    CHECK(f1 == std::vector<VertexId>{"f+", "f-"});

    auto [s2, f2] = neighbors(h_one(), "f1");
    CHECK(s2 == std::vector<VertexId>{"v1"});
    CHECK(f2.empty());

    CHECK_THROWS_AS(neighbors(h_one(), "zz"), InputError);
}

TEST_CASE("is_fat") {
    CHECK(is_fat(k1t(1)));
    CHECK(is_fat(h_two()));
    HoffmanGraph triangle;
    triangle.slim_vertices = {"a", "b", "c"};
    triangle.add_edge("a", "b");
    triangle.add_edge("b", "c");
    triangle.add_edge("a", "c");
    CHECK_FALSE(is_fat(triangle));
}

TEST_CASE("fat_pair_count counts induced K_{1,2} subgraphs") {
    CHECK(fat_pair_count(k1t(1)) == 0);
    CHECK(fat_pair_count(k1t(2)) == 1);
    CHECK(fat_pair_count(k1t(3)) == 3);
    CHECK(fat_pair_count(h_one()) == 1);
    CHECK(fat_pair_count(h_two()) == 1);
}
