#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hoffman/canonical.hpp"
#include "hoffman/characterization.hpp"

using namespace hoffman;
using namespace hoffman::testing;

namespace {

EdgeSignedGraph plus_path(int n) {
    EdgeSignedGraph s;
    for (int i = 0; i < n; ++i) s.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        s.plus_edges.insert(
            make_pair_sorted("v" + std::to_string(i), "v" + std::to_string(i + 1)));
    return s;
}

}  // namespace

TEST_CASE("check_theorem_conditions on h_one") {
    TheoremReport r = check_theorem_conditions(h_one(), "v*");
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK(r.k12_count == 1);
    CHECK(r.cond_iii);
    CHECK(r.cond_iv);
    CHECK(r.cond_v);
    CHECK(r.spectral_verdict.relation == Relation::Greater);
    CHECK(r.equivalence_holds);
}

TEST_CASE("two K_{1,2} copies break condition (ii) and the verdict drops") {
    HoffmanGraph h;  // slim edge, two fats at each end
    h.slim_vertices = {"a", "b"};
    h.fat_vertices = {"f1", "f2", "f3", "f4"};
    h.add_edge("a", "b");
    h.add_edge("a", "f1");
    h.add_edge("a", "f2");
    h.add_edge("b", "f3");
    h.add_edge("b", "f4");
    TheoremReport r = check_theorem_conditions(h, "a");
    CHECK_FALSE(r.cond_ii);
    CHECK(r.k12_count == 2);
    CHECK(r.spectral_verdict.relation == Relation::Equal);
    CHECK(r.equivalence_holds);
}

TEST_CASE("a 4-cycle in the special graph breaks condition (i)") {
    HoffmanGraph h;
    h.slim_vertices = {"a", "b", "c", "d"};
    h.add_edge("a", "b");
    h.add_edge("b", "c");
    h.add_edge("c", "d");
    h.add_edge("a", "d");
    h.fat_vertices = {"fa", "fb", "fc", "fd", "fa2"};
    h.add_edge("a", "fa");
    h.add_edge("a", "fa2");
    h.add_edge("b", "fb");
    h.add_edge("c", "fc");
    h.add_edge("d", "fd");
    TheoremReport r = check_theorem_conditions(h, "a");
    CHECK_FALSE(r.cond_i);
    REQUIRE(r.cond_i_witness.has_value());
    CHECK(r.spectral_verdict.relation != Relation::Greater);
    CHECK(r.equivalence_holds);
}

TEST_CASE("check_theorem_conditions preconditions") {
    CHECK_THROWS_AS(check_theorem_conditions(h_one(), "v1"), InputError);  // one fat
    CHECK_THROWS_AS(check_theorem_conditions(h_one(), "f+"), InputError);  // not slim

    HoffmanGraph notfat = h_one();
    notfat.fat_vertices = {"f+", "f-", "f1"};
    notfat.edges.erase(make_pair_sorted("v2", "f2"));
    CHECK_THROWS_AS(check_theorem_conditions(notfat, "v*"), InputError);

    HoffmanGraph dec;  // decomposable: two slims, one shared fat, no slim edge
    dec.slim_vertices = {"a", "b"};
    dec.fat_vertices = {"f1", "f2", "g"};
    dec.add_edge("a", "f1");
    dec.add_edge("a", "f2");
    dec.add_edge("b", "g");
    CHECK_THROWS_AS(check_theorem_conditions(dec, "a"), InputError);
}

TEST_CASE("build_psi") {
    SUBCASE("degenerate K_{1,2}: one-dimensional, Gram = [1]") {
        ReducedRepresentation r = build_psi(k1t(2), "v");
        CHECK(r.norm == 3);
        CHECK(r.dimension == 1);
        REQUIRE(r.vectors.count("v"));
        Rational g(0);
        for (const auto& x : r.vectors["v"]) g += x * x;
        CHECK(g == Rational(1));  // 3 - |fat neighbors| = 1
        CHECK(verify_reduced_representation(k1t(2), r).ok);
    }
    SUBCASE("h_one: dimension 3, full rank") {
        ReducedRepresentation r = build_psi(h_one(), "v*");
        CHECK(r.dimension == 3);
        std::vector<std::vector<Rational>> rows;
        for (const auto& [v, vec] : r.vectors) rows.push_back(vec);
        CHECK(rational_rank(rows, r.dimension) == 3);
        CHECK(verify_reduced_representation(h_one(), r).ok);
    }
    SUBCASE("rejected when a condition fails") {
        HoffmanGraph h;  // condition (ii) fails: two K_{1,2} copies
        h.slim_vertices = {"a", "b"};
        h.fat_vertices = {"f1", "f2", "f3", "f4"};
        h.add_edge("a", "b");
        h.add_edge("a", "f1");
        h.add_edge("a", "f2");
        h.add_edge("b", "f3");
        h.add_edge("b", "f4");
        CHECK_THROWS_AS(build_psi(h, "a"), InputError);
    }
}

TEST_CASE("signed_admissibility") {
    EdgeSignedGraph p = plus_path(3);
    SUBCASE("end vertex of a (+)-path is admissible") {
        auto r = signed_admissibility(p, "v0");
        CHECK(r.all_conditions());
    }
    SUBCASE("cut vertex fails (iii)") {
        auto r = signed_admissibility(p, "v1");
        CHECK(r.cond_i);
        CHECK(r.cond_ii);
        CHECK_FALSE(r.cond_iii);
    }
    SUBCASE("vertex other than v* on two (-)-edges fails (ii)") {
        EdgeSignedGraph s;
        s.vertices = {"m", "x", "y"};
        s.minus_edges.insert(make_pair_sorted("m", "x"));
        s.minus_edges.insert(make_pair_sorted("m", "y"));
        s.plus_edges.insert(make_pair_sorted("x", "y"));
        CHECK(signed_admissibility(s, "m").all_conditions());  // T*_1 at v*
        auto r = signed_admissibility(s, "x");
        CHECK_FALSE(r.cond_ii);
        CHECK(r.cond_ii_witness == VertexId("m"));
    }
    SUBCASE("single vertex is degenerate but admissible") {
        EdgeSignedGraph one;
        one.vertices = {"v"};
        auto r = signed_admissibility(one, "v");
        CHECK(r.all_conditions());
        CHECK(r.degenerate_single_vertex);
    }
    SUBCASE("disconnected input is rejected") {
        EdgeSignedGraph two;
        two.vertices = {"a", "b"};
        CHECK_THROWS_AS(signed_admissibility(two, "a"), InputError);
    }
}

TEST_CASE("construct_hoffman_from_signed") {
    SUBCASE("(+)(+)-path realizes h_one up to isomorphism") {
        auto res = construct_hoffman_from_signed(plus_path(3), "v0");
        CHECK_FALSE(res.degenerate_single_vertex);
        CHECK(canonical_form(res.graph) == canonical_form(h_one()));
    }
    SUBCASE("single vertex maps to K_{1,2}") {
        EdgeSignedGraph one;
        one.vertices = {"v"};
        auto res = construct_hoffman_from_signed(one, "v");
        CHECK(res.degenerate_single_vertex);
        CHECK(canonical_form(res.graph) == canonical_form(k1t(2)));
    }
    SUBCASE("T*_1 block at v* receives no pendant fats") {
        EdgeSignedGraph s;
        s.vertices = {"m", "x", "y"};
        s.minus_edges.insert(make_pair_sorted("m", "x"));
        s.minus_edges.insert(make_pair_sorted("m", "y"));
        s.plus_edges.insert(make_pair_sorted("x", "y"));
        auto res = construct_hoffman_from_signed(s, "m");
        CHECK(res.graph.slim_vertices.size() == 3);
        CHECK(res.graph.fat_vertices.size() == 2);  // one per (-)-edge only
        CHECK(res.graph.fat_neighbors("m").size() == 2);
        CHECK(special_graph(res.graph) == s);
    }
    SUBCASE("inadmissible marking is rejected") {
        CHECK_THROWS_AS(construct_hoffman_from_signed(plus_path(3), "v1"),
                        InputError);
    }
}

TEST_CASE("hat_adjacency") {
    PlainGraph edge = plain_path({"a", "b"});
    RatMatrix m = hat_adjacency(edge, "a");
    CHECK(m.at(0, 0) == Rational(-1));
    CHECK(m.at(0, 1) == Rational(1));
    CHECK(m.at(1, 1) == Rational(0));
}

TEST_CASE("check_theorem5") {
    SUBCASE("single edge: line graph of P_3, both ends are end edges") {
        auto r = check_theorem5(plain_path({"a", "b"}), "a");
        CHECK(r.spectral_side);
        CHECK(r.line_tree_side);
        CHECK(r.agree);
    }
    SUBCASE("triangle: line graph of K_{1,3}") {
        auto r = check_theorem5(plain_complete({"a", "b", "c"}), "a");
        CHECK(r.line_tree_side);
        CHECK(r.agree);
    }
    SUBCASE("4-cycle: both sides false") {
        auto r = check_theorem5(plain_cycle({"a", "b", "c", "d"}), "a");
        CHECK_FALSE(r.spectral_side);
        CHECK_FALSE(r.line_tree_side);
        CHECK_FALSE(r.line_tree_failure.empty());
        CHECK(r.agree);
    }
    SUBCASE("middle edge of a long path: spectral side false, sides agree") {
        auto r = check_theorem5(plain_path({"a", "b", "c", "d", "e"}), "c");
        CHECK_FALSE(r.spectral_side);
        CHECK_FALSE(r.line_tree_side);
        CHECK(r.agree);
    }
    SUBCASE("disconnected input is rejected") {
        PlainGraph g;
        g.vertices = {"a", "b"};
        CHECK_THROWS_AS(check_theorem5(g, "a"), InputError);
    }
}
