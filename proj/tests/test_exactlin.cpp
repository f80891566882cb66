#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mmk/hnf.hpp"
#include "mmk/polycone.hpp"
#include "testutil.hpp"

using namespace mmk;
using namespace mmk::testutil;

TEST_CASE("hnf basis of standard examples") {
    auto h1 = hnf_basis({rv({q(1), q(0)}), rv({q(0), q(1)}), rv({q(3), q(1)})});
    CHECK(h1.rank == 2);
    CHECK(h1.basis == RatMat{rv({q(1), q(0)}), rv({q(0), q(1)})});

    auto h2 = hnf_basis({rv({q(2), q(0)}), rv({q(0), q(2)}), rv({q(1), q(1)})});
    CHECK(h2.rank == 2);
    CHECK(h2.basis == RatMat{rv({q(1), q(1)}), rv({q(0), q(2)})});

    auto h3 = hnf_basis({});
    CHECK(h3.rank == 0);
    CHECK(h3.basis.empty());
}

TEST_CASE("hnf is invariant under input permutation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        RatMat rows;
        int k = 1 + trial % 4;
        for (int i = 0; i < k; ++i) rows.push_back(rv({q(pick(rng)), q(pick(rng)), q(pick(rng))}));
        RatMat shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(hnf_basis(rows).basis == hnf_basis(shuffled).basis);
    }
}

TEST_CASE("left kernel and smith form") {
    HnfKernel k = hnf_with_left_kernel({{Int(1), Int(1)}, {Int(2), Int(2)}});
    REQUIRE(k.kernel.size() == 1);
    CHECK(k.kernel[0][0] * 1 + k.kernel[0][1] * 2 == 0);

    SmithResult s = smith_normal_form({{Int(2), Int(0)}, {Int(0), Int(4)}});
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);
}

TEST_CASE("dual cone worked examples") {
    PolyCone orthant(2, {rv({q(1), q(0)}), rv({q(0), q(1)})});
    CHECK(cone_equal(dual_cone(orthant), orthant));

    PolyCone halfline(2, {rv({q(1), q(0)})});
    PolyCone dual = dual_cone(halfline);
    // a halfplane: x >= 0
    CHECK(cone_contains(dual, rv({q(1), q(0)})));
    CHECK(cone_contains(dual, rv({q(0), q(1)})));
    CHECK(cone_contains(dual, rv({q(0), q(-1)})));
    CHECK(!cone_contains(dual, rv({q(-1), q(5)})));
    CHECK(dual.generators().size() == 3);

    PolyCone wedge(2, {rv({q(2), q(1)}), rv({q(1), q(2)})});
    PolyCone expect(2, {rv({q(2), q(-1)}), rv({q(-1), q(2)})});
    CHECK(cone_equal(dual_cone(wedge), expect));
}

TEST_CASE("cone membership worked examples") {
    PolyCone orthant(2, {rv({q(1), q(0)}), rv({q(0), q(1)})});
    CHECK(cone_contains(orthant, rv({q(3), q(5)})));
    CHECK(!cone_contains(orthant, rv({q(-1), q(0)})));
    PolyCone wedge(2, {rv({q(2), q(1)}), rv({q(1), q(2)})});
    CHECK(cone_contains(wedge, rv({q(1), q(1)})));
    CHECK(!cone_contains(wedge, rv({q(1), q(0)})));
    CHECK_THROWS_AS(cone_contains(wedge, rv({q(1)})), usage_error);
}

TEST_CASE("intersection and minimal face") {
    PolyCone a(2, {rv({q(1), q(0)}), rv({q(1), q(1)})});
    PolyCone b(2, {rv({q(1), q(1)}), rv({q(0), q(1)})});
    CHECK(cone_equal(intersect_cones(a, b), PolyCone(2, {rv({q(1), q(1)})})));

    PolyCone orthant(2, {rv({q(1), q(0)}), rv({q(0), q(1)})});
    PolyCone edge(2, {rv({q(1), q(0)})});
    CHECK(cone_equal(minimal_face(orthant, edge), edge));
    PolyCone inner(2, {rv({q(1), q(1)})});
    CHECK(cone_equal(minimal_face(orthant, inner), orthant));
    CHECK_THROWS_AS(minimal_face(edge, orthant), usage_error);

    CHECK(is_face_of(orthant, edge));
    CHECK(!is_face_of(orthant, inner));
    CHECK(is_face_of(orthant, PolyCone(2, {})));
}

TEST_CASE("face enumeration of the 3-orthant") {
    PolyCone c(3, {rv({q(1), q(0), q(0)}), rv({q(0), q(1), q(0)}), rv({q(0), q(0), q(1)})});
    CHECK(all_faces(c).size() == 8); // cone, 3 facets, 3 rays, origin
}

TEST_CASE("random cones: generators, duality, double description consistency") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> pick(-4, 4);
    std::uniform_int_distribution<int> dims(2, 4), counts(1, 6);
    int nontrivial = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int d = dims(rng), k = counts(rng);
        std::vector<RatVec> gens;
        for (int i = 0; i < k; ++i) {
            RatVec v(d);
            for (int t = 0; t < d; ++t) v[t] = q(pick(rng));
            gens.push_back(v);
        }
        PolyCone c(d, gens);
        if (!c.generators().empty()) ++nontrivial;
        for (const auto& g : c.generators()) CHECK(cone_contains(c, g));
        PolyCone dual = dual_cone(c);
        for (const auto& h : c.halfspaces()) CHECK(cone_contains(dual, h));
        CHECK(cone_equal(dual_cone(dual), c));
        CHECK(cone_equal(cone_from_halfspaces(d, c.halfspaces()), c));
    }
    CHECK(nontrivial > 200);
}

TEST_CASE("dimension guard") {
    std::vector<RatVec> gens;
    CHECK_THROWS_AS(PolyCone(40, gens), resource_error);
}
