#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hoffman/lemmas.hpp"

using namespace hoffman;

TEST_CASE("path lemma") {
    CHECK(verify_path_lemma(2, {1}, {}));
    CHECK(verify_path_lemma(2, {-1}, {}));
    CHECK(verify_path_lemma(4, {1, -1, 1}, {Rational(-1), Rational(-1)}));
    // deepened middle entries stay at-most -3
    CHECK(verify_path_lemma(4, {1, 1, 1}, {Rational(-2), Rational(-1)}));
    CHECK_THROWS_AS(verify_path_lemma(1, {}, {}), InputError);
    CHECK_THROWS_AS(verify_path_lemma(3, {1}, {Rational(-1)}), InputError);
    CHECK_THROWS_AS(verify_path_lemma(3, {1, 2}, {Rational(-1)}), InputError);
}

TEST_CASE("D_n lemma") {
    CHECK(verify_Dn_lemma(4, {1, 1, 1}));
    CHECK(verify_Dn_lemma(4, {-1, 1, -1}));
    CHECK(verify_Dn_lemma(6, {1, -1, 1, -1, 1}));
    CHECK_THROWS_AS(verify_Dn_lemma(3, {1, 1}), InputError);
    CHECK_THROWS_AS(verify_Dn_lemma(4, {1, 1}), InputError);
}

TEST_CASE("path + K_{1,1,2} lemma") {
    for (int eps : {0, 1}) {
        CHECK(verify_path_clique_lemma(1, {}, eps));
        CHECK(verify_path_clique_lemma(3, {1, -1}, eps));
    }
    CHECK_THROWS_AS(verify_path_clique_lemma(1, {}, 2), InputError);
    CHECK_THROWS_AS(verify_path_clique_lemma(0, {}, 0), InputError);
    CHECK_THROWS_AS(verify_path_clique_lemma(2, {}, 0), InputError);
}

TEST_CASE("cycle lemma") {
    CHECK(verify_cycle_lemma(4, {1, 1, -1, -1}));
    CHECK(verify_cycle_lemma(5, {1, 1, -1, -1, -1}));
    CHECK(verify_cycle_lemma(6, {-1, -1, -1, -1, -1, -1}));
    // odd number of (+)-edges is outside the lemma
    CHECK_THROWS_AS(verify_cycle_lemma(4, {1, 1, 1, -1}), InputError);
    CHECK_THROWS_AS(verify_cycle_lemma(2, {1, 1}), InputError);
    CHECK_THROWS_AS(verify_cycle_lemma(4, {1, 1, -1}), InputError);
}

TEST_CASE("path + cycle lemma") {
    // cycle (+)-count must be odd: product of eps_2..eps_n equals (-1)^(n-1)
    CHECK(verify_path_cycle_lemma(1, 3, {}, {1, 1}));
    CHECK(verify_path_cycle_lemma(2, 3, {1}, {-1, -1}));
    CHECK(verify_path_cycle_lemma(2, 4, {-1}, {-1, -1, -1}));
    CHECK_THROWS_AS(verify_path_cycle_lemma(1, 3, {}, {-1, 1}), InputError);
    CHECK_THROWS_AS(verify_path_cycle_lemma(0, 3, {}, {-1, 1}), InputError);
    CHECK_THROWS_AS(verify_path_cycle_lemma(1, 2, {}, {1}), InputError);
}

TEST_CASE("fixed matrix families all verify") {
    auto entries = verify_fixed_matrix_lemmas();
    CHECK(entries.size() >= 40);  // 32 K_{1,1,2} cases alone
    for (const auto& e : entries) {
        CAPTURE(e.lemma);
        CAPTURE(e.params.dump());
        CHECK(e.pass);
        CHECK(e.counterexample.is_null());
    }
}

TEST_CASE("lemma suite sweep") {
    LemmaSweepBounds b;
    b.path_max = 4;
    b.dn_max = 5;
    b.path_clique_max = 3;
    b.cycle_max = 5;
    b.path_cycle_max = 6;
    auto entries = run_lemma_suite(b);
    CHECK(!entries.empty());
    for (const auto& e : entries) {
        CAPTURE(e.lemma);
        CHECK(e.pass);
    }
    nlohmann::json j = lemma_report_json(entries);
    REQUIRE(j.is_array());
    CHECK(j.size() == entries.size());
    for (const auto& e : j) CHECK(e["pass"].get<bool>());
}
