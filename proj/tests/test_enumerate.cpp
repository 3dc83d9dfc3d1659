#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hoffman/analysis.hpp"
#include "hoffman/canonical.hpp"
#include "hoffman/enumerate.hpp"

using namespace hoffman;
using namespace hoffman::testing;

namespace {

int count_order(const std::vector<PlainGraph>& gs, size_t n) {
    int c = 0;
    for (const auto& g : gs)
        if (g.vertices.size() == n) ++c;
    return c;
}

}  // namespace

TEST_CASE("one slim vertex: exactly K_{1,1}, K_{1,2}, K_{1,3}") {
    EnumerationBounds b;
    b.max_slim = 1;
    b.max_fat = 3;
    b.filter_fat = true;
    auto graphs = enumerate_hoffman(b);
    REQUIRE(graphs.size() == 3);
    std::set<std::string> got;
    for (const auto& h : graphs) got.insert(canonical_form(h));
    CHECK(got == std::set<std::string>{canonical_form(k1t(1)), canonical_form(k1t(2)),
                                       canonical_form(k1t(3))});
}

TEST_CASE("canonical and naive enumeration agree") {
    EnumerationBounds b;
    b.max_slim = 2;
    b.max_fat = 2;
    auto fast = enumerate_hoffman(b);
    auto naive = enumerate_hoffman_naive(b);
    CHECK(fast.size() == naive.size());
    std::set<std::string> a, c;
    for (const auto& h : fast) a.insert(canonical_form(h));
    for (const auto& h : naive) c.insert(canonical_form(h));
    CHECK(a == c);
}

TEST_CASE("enumeration bounds") {
    EnumerationBounds empty;
    empty.max_slim = 0;
    CHECK(enumerate_hoffman(empty).empty());

    EnumerationBounds big;
    big.max_slim = 5;
    CHECK_THROWS_AS(enumerate_hoffman(big), InputError);
    EnumerationBounds fat;
    fat.max_fat = 7;
    CHECK_THROWS_AS(enumerate_hoffman(fat), InputError);
    EnumerationBounds naive3;
    naive3.max_slim = 3;
    CHECK_THROWS_AS(enumerate_hoffman_naive(naive3), InputError);
}

TEST_CASE("enumerated graphs satisfy the invariants and are pairwise distinct") {
    EnumerationBounds b;
    b.max_slim = 2;
    b.max_fat = 3;
    b.filter_fat = true;
    auto graphs = enumerate_hoffman(b);
    std::set<std::string> forms;
    for (const auto& h : graphs) {
        h.validate();
        CHECK(is_fat(h));
        CHECK(forms.insert(canonical_form(h)).second);
    }
}

TEST_CASE("theorem oracle is clean and the mutation hook reports failures") {
    EnumerationBounds b;
    b.max_slim = 2;
    b.max_fat = 3;
    CHECK(oracle_theorem_equivalence(b).empty());
    CHECK_FALSE(oracle_theorem_equivalence(b, /*break_condition_ii=*/true).empty());
}

TEST_CASE("signed construction round trip is clean") {
    CHECK(roundtrip_signed(3).empty());
}

TEST_CASE("nonuniqueness demo") {
    NonuniquenessReport r = nonuniqueness_demo();
    CHECK(r.same_special);
    CHECK(r.distinct);
    CHECK(r.both_greater);
    CHECK(r.ok());
    CHECK(special_graph(r.h1) == special_graph(r.h2));
    CHECK(canonical_form(r.h1) != canonical_form(r.h2));
}

TEST_CASE("audits are clean at small bounds") {
    EnumerationBounds b;
    b.max_slim = 2;
    b.max_fat = 3;
    CHECK(min_rule_audit(b).empty());
    CHECK(monotonicity_audit(b).empty());
}

TEST_CASE("graph census counts") {
    auto all = graph_census(5);
    CHECK(count_order(all, 1) == 1);
    CHECK(count_order(all, 2) == 2);
    CHECK(count_order(all, 3) == 4);
    CHECK(count_order(all, 4) == 11);
    CHECK(count_order(all, 5) == 34);

    auto conn = connected_graph_census(5);
    CHECK(count_order(conn, 3) == 2);
    CHECK(count_order(conn, 4) == 6);
    CHECK(count_order(conn, 5) == 21);
    for (const auto& g : conn) CHECK(g.connected());
}

TEST_CASE("tree census counts") {
    auto trees = tree_census(4);  // trees on 2..5 vertices
    CHECK(count_order(trees, 2) == 1);
    CHECK(count_order(trees, 3) == 1);
    CHECK(count_order(trees, 4) == 2);
    CHECK(count_order(trees, 5) == 3);
    for (const auto& t : trees) {
        CHECK(t.connected());
        CHECK(t.edges.size() == t.vertices.size() - 1);
    }
}

TEST_CASE("line_graph") {
    PlainGraph lp = line_graph(plain_path({"a", "b", "c"}));
    CHECK(lp.vertices.size() == 2);
    CHECK(lp.adjacent("a|b", "b|c"));

    PlainGraph star;  // K_{1,3} -> triangle
    star.vertices = {"c", "x", "y", "z"};
    star.add_edge("c", "x");
    star.add_edge("c", "y");
    star.add_edge("c", "z");
    PlainGraph ls = line_graph(star);
    CHECK(ls.vertices.size() == 3);
    CHECK(ls.edges.size() == 3);
}
