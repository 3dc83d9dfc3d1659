#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hoffman/analysis.hpp"
#include "hoffman/characterization.hpp"

using namespace hoffman;
using namespace hoffman::testing;

namespace {

// Two adjacent slim vertices with `common` shared fat neighbors.
HoffmanGraph quasi_clique(int common) {
    HoffmanGraph h;
    h.slim_vertices = {"a", "b"};
    h.add_edge("a", "b");
    for (int i = 0; i < common; ++i) {
        VertexId f = "f" + std::to_string(i);
        h.fat_vertices.push_back(f);
        h.add_edge("a", f);
        h.add_edge("b", f);
    }
    return h;
}

}  // namespace

TEST_CASE("b_matrix") {
    CHECK(b_matrix(k1t(2)).at(0, 0) == Rational(-2));

    HoffmanGraph triangle;
    triangle.slim_vertices = {"a", "b", "c"};
    triangle.add_edge("a", "b");
    triangle.add_edge("b", "c");
    triangle.add_edge("a", "c");
    RatMatrix t = b_matrix(triangle);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t.at(i, j) == Rational(i == j ? 0 : 1));

    // order (v*, v1, v2)
    RatMatrix b = b_matrix(h_one());
    CHECK(slim_order(h_one()) == std::vector<VertexId>{"v*", "v1", "v2"});
    RatMatrix want(3);
    want.set(0, 0, Rational(-2));
    want.set(1, 1, Rational(-1));
    want.set(2, 2, Rational(-1));
    want.set(0, 1, Rational(1));
    want.set(1, 2, Rational(1));
    CHECK(b == want);
}

TEST_CASE("special_graph") {
    CHECK(special_graph(k1t(2)).vertices == std::vector<VertexId>{"v"});
    CHECK(special_graph(k1t(2)).plus_edges.empty());
    CHECK(special_graph(k1t(2)).minus_edges.empty());

    EdgeSignedGraph s1 = special_graph(h_one());
    CHECK(s1.is_plus("v*", "v1"));
    CHECK(s1.is_plus("v1", "v2"));
    CHECK(s1.plus_edges.size() == 2);
    CHECK(s1.minus_edges.empty());
    CHECK(special_graph(h_two()) == s1);

    HoffmanGraph m;  // two non-adjacent slims sharing one fat
    m.slim_vertices = {"a", "b"};
    m.fat_vertices = {"f"};
    m.add_edge("a", "f");
    m.add_edge("b", "f");
    EdgeSignedGraph sm = special_graph(m);
    CHECK(sm.is_minus("a", "b"));
    CHECK(sm.plus_edges.empty());

    // adjacent with a common fat: neither edge
    EdgeSignedGraph sq = special_graph(quasi_clique(1));
    CHECK(sq.plus_edges.empty());
    CHECK(sq.minus_edges.empty());
}

TEST_CASE("is_indecomposable") {
    CHECK(is_indecomposable(h_one()));
    CHECK_FALSE(is_indecomposable(quasi_clique(1)));

    HoffmanGraph two;  // disjoint union of two K_{1,1}
    two.slim_vertices = {"a", "b"};
    two.fat_vertices = {"fa", "fb"};
    two.add_edge("a", "fa");
    two.add_edge("b", "fb");
    CHECK_FALSE(is_indecomposable(two));

    HoffmanGraph empty;
    CHECK_THROWS_AS(is_indecomposable(empty), InputError);
}

TEST_CASE("validate_decomposition") {
    HoffmanGraph q = quasi_clique(1);
    SUBCASE("trivial decomposition") {
        Decomposition d;
        d.parts.push_back({"a", "b", "f0"});
        CHECK(validate_decomposition(q, d).ok);
    }
    SUBCASE("split with one shared fat passes (iv)") {
        Decomposition d;
        d.parts.push_back({"a", "f0"});
        d.parts.push_back({"b", "f0"});
        CHECK(validate_decomposition(q, d).ok);
    }
    SUBCASE("splitting an edge with no common fat violates (iv)") {
        HoffmanGraph h;
        h.slim_vertices = {"a", "b"};
        h.fat_vertices = {"fa", "fb"};
        h.add_edge("a", "b");
        h.add_edge("a", "fa");
        h.add_edge("b", "fb");
        Decomposition d;
        d.parts.push_back({"a", "fa"});
        d.parts.push_back({"b", "fb"});
        auto check = validate_decomposition(h, d);
        CHECK_FALSE(check.ok);
        CHECK(check.violation.find("(iv)") != std::string::npos);
    }
    SUBCASE("missing fat neighbor violates (iii)") {
        Decomposition d;
        d.parts.push_back({"a"});
        d.parts.push_back({"b", "f0"});
        auto check = validate_decomposition(q, d);
        CHECK_FALSE(check.ok);
        CHECK(check.violation.find("(iii)") != std::string::npos);
    }
    SUBCASE("unknown vertex") {
        Decomposition d;
        d.parts.push_back({"zz"});
        CHECK_THROWS_AS(validate_decomposition(q, d), InputError);
    }
}

TEST_CASE("decompose_by_special_components") {
    CHECK(decompose_by_special_components(h_one()).parts.size() == 1);

    HoffmanGraph two;  // K_{1,1} + K_{1,2}, disjoint
    two.slim_vertices = {"a", "b"};
    two.fat_vertices = {"fa", "g1", "g2"};
    two.add_edge("a", "fa");
    two.add_edge("b", "g1");
    two.add_edge("b", "g2");
    CHECK(decompose_by_special_components(two).parts.size() == 2);

    HoffmanGraph q = quasi_clique(1);
    Decomposition d = decompose_by_special_components(q);
    CHECK(d.parts.size() == 2);
    // min-rule: lambda_min of the whole equals the min over the parts
    auto whole = classify_lambda_min(b_matrix(q), Rational(3));
    for (const auto& part : d.parts) {
        auto sub = induced_hoffman_subgraph(q, part).graph;
        CHECK(classify_lambda_min(b_matrix(sub), Rational(3)).relation ==
              whole.relation);
    }
}

TEST_CASE("special-component partition can fail validation") {
    HoffmanGraph q2 = quasi_clique(2);
    q2.validate();
    Decomposition p = special_component_partition(q2);
    CHECK(p.parts.size() == 2);
    auto check = validate_decomposition(q2, p);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("(iv)") != std::string::npos);
    CHECK_THROWS_AS(decompose_by_special_components(q2), InternalError);
}

TEST_CASE("decomposition JSON round trip") {
    Decomposition d;
    d.parts.push_back({"v1", "f1"});
    d.parts.push_back({"v2", "f1"});
    Decomposition back = Decomposition::from_json(d.to_json());
    CHECK(back.parts == d.parts);
}

TEST_CASE("verify_reduced_representation") {
    SUBCASE("K_{1,1} with the zero vector, norm 1") {
        ReducedRepresentation r;
        r.norm = 1;
        r.dimension = 1;
        r.vectors["v"] = {Rational(0)};
        CHECK(verify_reduced_representation(k1t(1), r).ok);
    }
    SUBCASE("constructed psi for h_one") {
        ReducedRepresentation r = build_psi(h_one(), "v*");
        CHECK(r.norm == 3);
        CHECK(verify_reduced_representation(h_one(), r).ok);
    }
    SUBCASE("scaling one vector breaks the diagonal case") {
        ReducedRepresentation r = build_psi(h_one(), "v*");
        for (auto& x : r.vectors["v*"]) x *= 2;
        auto check = verify_reduced_representation(h_one(), r);
        CHECK_FALSE(check.ok);
        CHECK_FALSE(check.first_failure.empty());
    }
    SUBCASE("coverage mismatch") {
        ReducedRepresentation r;
        r.norm = 1;
        r.dimension = 1;
        r.vectors["w"] = {Rational(0)};
        CHECK_THROWS_AS(verify_reduced_representation(k1t(1), r), InputError);
    }
}

TEST_CASE("B entries match special edges when lambda_min >= -3") {
    for (const HoffmanGraph& h : {h_one(), h_two()}) {
        auto verdict = classify_lambda_min(b_matrix(h), Rational(3));
        REQUIRE(verdict.relation != Relation::Less);
        EdgeSignedGraph s = special_graph(h);
        auto order = slim_order(h);
        RatMatrix b = b_matrix(h);
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j) {
                Rational want = s.is_plus(order[i], order[j])    ? Rational(1)
                                : s.is_minus(order[i], order[j]) ? Rational(-1)
                                                                 : Rational(0);
                CHECK(b.at((int)i, (int)j) == want);
            }
    }
}
