#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmk/group.hpp"
#include "testutil.hpp"

using namespace mmk;
using namespace mmk::testutil;

TEST_CASE("A3 group build") {
    auto g = a3_group();
    CHECK(g->r == 4);
    CHECK(g->elements[0] == rv({q(0), q(0)}));
    CHECK(g->elements[1] == rv({q(3, 4), q(1, 4)}));
    CHECK(g->elements[2] == rv({q(1, 2), q(1, 2)}));
    CHECK(g->elements[3] == rv({q(1, 4), q(3, 4)}));
    // rho_i = class of x^i
    for (int i = 0; i < 4; ++i) CHECK(g->char_reps[i] == rv({q(i), q(0)}));
    CHECK(g->chi_index[0] == 1);
    CHECK(g->chi_index[1] == 3);
    for (int i = 0; i < 4; ++i) {
        CHECK(g->k_table[i][0] == (i + 1) % 4);
        CHECK(g->k_table[i][1] == (i + 3) % 4);
    }
}

TEST_CASE("pmI4 and trivial groups") {
    auto g = pmi4_group();
    CHECK(g->r == 2);
    CHECK(g->elements[1] == rv({q(1, 2), q(1, 2), q(1, 2), q(1, 2)}));
    CHECK(g->age(1) == 2);
    CHECK(g->junior_elements().empty());

    auto t = trivial_group();
    CHECK(t->r == 1);
    CHECK(t->junior_elements().empty());
    CHECK(t->char_reps[0] == rv({q(0), q(0)}));
}

TEST_CASE("ages and juniors of A3") {
    auto g = a3_group();
    CHECK(g->age(0) == 0);
    CHECK(g->age(1) == 1);
    CHECK(g->age(2) == 1);
    CHECK(g->age(3) == 1);
    CHECK(g->junior_elements() == std::vector<int>{1, 2, 3});
}

TEST_CASE("character pairings") {
    auto a4 = a4_group();
    // rho_1 = class of x against the generator (3/5,2/5)
    CHECK(a4->char_pairing(1, 1) == q(3, 5));
    CHECK(a4->char_pairing(0, 1) == 0);
    auto a3 = a3_group();
    CHECK(a3->char_pairing(2, 2) == 0); // x^2 against (1/2,1/2)
}

TEST_CASE("character table separates elements and characters") {
    for (const auto& g : {a3_group(), a4_group(), pmi4_group()}) {
        for (int i = 0; i < g->r; ++i)
            for (int i2 = i + 1; i2 < g->r; ++i2) {
                bool same_row = true, same_col = true;
                for (int e = 0; e < g->r; ++e) {
                    if (g->char_pairing(i, e) != g->char_pairing(i2, e)) same_row = false;
                    if (g->char_pairing(e, i) != g->char_pairing(e, i2)) same_col = false;
                }
                CHECK(!same_row);
                CHECK(!same_col);
            }
    }
}

TEST_CASE("k table consistency") {
    for (const auto& g : random_cyclic_groups(12)) {
        for (int j = 0; j < g->n; ++j) {
            std::vector<char> hit(g->r, 0);
            for (int i = 0; i < g->r; ++i) {
                int k = g->k_table[i][j];
                hit[k] = 1;
                // class of m_i + f_j equals class of m_k
                RatVec sum = rv_add(g->char_reps[i], rv_unit(g->n, j));
                CHECK(g->char_class_of(sum) == k);
            }
            for (char h : hit) CHECK(h == 1); // permutation
        }
    }
}

TEST_CASE("age duality for elements without zero coordinates") {
    for (const auto& g : random_cyclic_groups(15)) {
        for (int e = 1; e < g->r; ++e) {
            bool no_zero = true;
            for (const auto& x : g->elements[e])
                if (x == 0) no_zero = false;
            if (!no_zero) continue;
            RatVec neg = rv_mod1(rv_scale(q(-1), g->elements[e]));
            int inv = g->element_index(neg);
            REQUIRE(inv >= 0);
            CHECK(g->age(e) + g->age(inv) == g->n);
        }
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(build_group(2, {{4, {3, 2}}}), validation_error);  // SL violated
    CHECK_THROWS_AS(build_group(2, {{4, {5, 1}}}), validation_error);  // weight out of range
    CHECK_THROWS_AS(build_group(2, {{4, {3}}}), validation_error);     // wrong arity
    // duplicate generators collapse
    auto g = build_group(2, {{4, {3, 1}}, {4, {3, 1}}, {2, {1, 1}}});
    CHECK(g->r == 4);
    // order-1 generators are ignored
    CHECK(build_group(2, {{1, {0, 0}}})->r == 1);
}

TEST_CASE("invariant monomial basis pairs integrally") {
    for (const auto& g : random_cyclic_groups(10)) {
        RatMat mg = invariant_monomial_basis(*g);
        CHECK(static_cast<int>(mg.size()) == g->n);
        for (const auto& m : mg)
            for (int e = 0; e < g->r; ++e) CHECK(g->monomial_pairing(m, e) == 0);
    }
}
