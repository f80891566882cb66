#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmk/fan.hpp"
#include "testutil.hpp"

using namespace mmk;
using namespace mmk::testutil;

TEST_CASE("initial fans") {
    Fan f = initial_fan(a3_group());
    CHECK(f.rays.size() == 2);
    CHECK(f.max_cones.size() == 1);
    // index of Z^2 in N_G is 4: the lattice basis determinant is 1/4
    Rat d = mat_det(f.lattice_basis);
    CHECK((d == q(1, 4) || d == q(-1, 4)));

    Fan t = initial_fan(trivial_group(3));
    CHECK(t.rays.size() == 3);
    CHECK(mat_det(t.lattice_basis) == 1);

    Fan p = initial_fan(pmi4_group());
    Rat dp = mat_det(p.lattice_basis);
    CHECK((dp == q(1, 2) || dp == q(-1, 2)));
}

TEST_CASE("star subdivision of the A4 fan") {
    Fan f = star_subdivide(initial_fan(a4_group()), rv({q(3, 5), q(2, 5)}));
    CHECK(f.rays.size() == 3);
    REQUIRE(f.max_cones.size() == 2);
    // cones {e1, v} and {v, e2}
    int v_idx = f.ray_index(rv({q(3, 5), q(2, 5)}));
    REQUIRE(v_idx >= 0);
    CHECK(f.labels[v_idx].exceptional);
    for (const auto& mc : f.max_cones) CHECK(std::find(mc.begin(), mc.end(), v_idx) != mc.end());
}

TEST_CASE("A3 subdivision chain gives the circular fan") {
    auto g = a3_group();
    Fan f = initial_fan(g);
    f = star_subdivide(f, rv({q(3, 4), q(1, 4)}));
    f = star_subdivide(f, rv({q(1, 2), q(1, 2)}));
    f = star_subdivide(f, rv({q(1, 4), q(3, 4)}));
    CHECK(f.rays.size() == 5);
    CHECK(f.max_cones.size() == 4);
    FanClass cls = classify_fan(f);
    CHECK(cls.simplicial);
    CHECK(cls.smooth);
    CHECK(cls.crepant);
    CHECK(cls.relative_minimal_model);
    // every maximal cone pairs rays adjacent in the circular order e1, t1, t2, t3, e2
    std::vector<RatVec> order = {rv({q(1), q(0)}), rv({q(3, 4), q(1, 4)}), rv({q(1, 2), q(1, 2)}),
                                 rv({q(1, 4), q(3, 4)}), rv({q(0), q(1)})};
    for (const auto& mc : f.max_cones) {
        REQUIRE(mc.size() == 2);
        int a = -1, b = -1;
        for (int t = 0; t < 5; ++t) {
            if (rv_compare(f.rays[mc[0]], order[t]) == 0) a = t;
            if (rv_compare(f.rays[mc[1]], order[t]) == 0) b = t;
        }
        CHECK(std::abs(a - b) == 1);
    }
}

TEST_CASE("interior subdivision replaces one cone by n") {
    // n = 3 example: Z/3 with weights (1,1,1); v = (1/3,1/3,1/3) is interior
    auto g = build_group(3, {{3, {1, 1, 1}}});
    Fan f0 = initial_fan(g);
    Fan f = star_subdivide(f0, rv({q(1, 3), q(1, 3), q(1, 3)}));
    CHECK(f.max_cones.size() == 3);
    CHECK(f.rays.size() == 4);
}

TEST_CASE("subdivision errors") {
    Fan f = initial_fan(a3_group());
    CHECK_THROWS_AS(star_subdivide(f, rv({q(1, 3), q(1, 3)})), validation_error); // not a lattice point
    CHECK_THROWS_AS(star_subdivide(f, rv({q(1), q(0)})), validation_error);       // already a ray
    CHECK_THROWS_AS(star_subdivide(f, rv({q(-1, 4), q(1, 4)})), validation_error); // outside support
    CHECK_THROWS_AS(star_subdivide(f, rv({q(3, 2), q(1, 2)})), validation_error);  // not primitive
}

TEST_CASE("classification of partial and singular models") {
    Fan p = initial_fan(pmi4_group());
    FanClass cls = classify_fan(p);
    CHECK(cls.simplicial);
    CHECK(!cls.smooth);
    CHECK(cls.crepant);
    CHECK(cls.relative_minimal_model);

    Fan a4_partial = star_subdivide(initial_fan(a4_group()), rv({q(3, 5), q(2, 5)}));
    CHECK(!classify_fan(a4_partial).relative_minimal_model);
}

TEST_CASE("resolve") {
    ResolveResult a3 = resolve(a3_group());
    CHECK(a3.fan.max_cones.size() == 4);
    CHECK(a3.history.size() == 3);
    CHECK(classify_fan(a3.fan).relative_minimal_model);

    ResolveResult p = resolve(pmi4_group());
    CHECK(p.history.empty());
    CHECK(p.fan.rays.size() == 4);

    ResolveResult t = resolve(trivial_group());
    CHECK(classify_fan(t.fan).smooth);

    CHECK_THROWS_AS(resolve(a3_group(), std::vector<int>{1, 2}), validation_error);
}

TEST_CASE("subdivision preserves support and adds one ray") {
    auto g = a4_group();
    Fan f = initial_fan(g);
    for (int junior : g->junior_elements()) {
        size_t before = f.rays.size();
        f = star_subdivide(f, g->elements[junior]);
        CHECK(f.rays.size() == before + 1); // validate() checks the volume cover
    }
}

TEST_CASE("two-dimensional resolutions do not depend on the junior order") {
    for (const auto& g : random_cyclic_groups(10)) {
        if (g->n != 2) continue;
        std::vector<int> ord = g->junior_elements();
        Fan f1 = resolve(g, ord).fan;
        std::reverse(ord.begin(), ord.end());
        Fan f2 = resolve(g, ord).fan;
        REQUIRE(f1.rays.size() == f2.rays.size());
        // same ray set and same cone set as vector sets
        for (const auto& r : f1.rays) CHECK(f2.ray_index(r) >= 0);
        CHECK(f1.max_cones.size() == f2.max_cones.size());
        for (const auto& mc : f1.max_cones) {
            std::vector<std::string> key1;
            for (int i : mc) key1.push_back(rv_to_string(f1.rays[i]));
            std::sort(key1.begin(), key1.end());
            bool found = false;
            for (const auto& mc2 : f2.max_cones) {
                std::vector<std::string> key2;
                for (int i : mc2) key2.push_back(rv_to_string(f2.rays[i]));
                std::sort(key2.begin(), key2.end());
                if (key1 == key2) found = true;
            }
            CHECK(found);
        }
    }
}
