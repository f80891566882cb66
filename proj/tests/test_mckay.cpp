#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mmk/mckay.hpp"
#include "testutil.hpp"

using namespace mmk;
using namespace mmk::testutil;

namespace {

Pattern pattern_from_arrows(const McKayQuiver& q, const std::vector<std::pair<int, int>>& arrows) {
    Pattern p = empty_pattern(q.r, q.n);
    for (auto [i, j] : arrows) p.set(i, j, true);
    return p;
}

// fiber at sigma_1 of the A3 worked family: x:0->1, y:0->3, y:3->2
Pattern a3_sigma1_pattern(const McKayQuiver& q) {
    return pattern_from_arrows(q, {{0, 0}, {0, 1}, {3, 1}});
}

} // namespace

TEST_CASE("quiver weights") {
    McKayQuiver q = build_mckay(a3_group());
    RatVec w = q.wt(0, 0);
    CHECK(rv_coord_sum(w) == 0);
    CHECK(w[1] == 1);
    CHECK(w[0] == -1);

    McKayQuiver t = build_mckay(trivial_group());
    CHECK(t.wt(0, 0) == rv({q(0)})); // loops carry the zero weight

    McKayQuiver p = build_mckay(pmi4_group());
    CHECK(p.r == 2);
    for (int j = 0; j < 4; ++j) {
        CHECK(p.k(0, j) == 1);
        CHECK(p.k(1, j) == 0);
    }
}

TEST_CASE("pattern validation") {
    McKayQuiver q = build_mckay(a3_group());
    CHECK(validate_pattern(q, a3_sigma1_pattern(q)));

    // x: 0->1 and y: 1->0 alone break the commutation relation at vertex 0
    Pattern bad = pattern_from_arrows(q, {{0, 0}, {1, 1}});
    CHECK(!validate_pattern(q, bad));

    Pattern ones = empty_pattern(q.r, q.n);
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j) ones.set(i, j, true);
    CHECK(validate_pattern(q, ones));
}

TEST_CASE("components") {
    McKayQuiver q = build_mckay(a3_group());
    CHECK(components(q, a3_sigma1_pattern(q)).size() == 1);

    Pattern sigma2 = pattern_from_arrows(q, {{1, 0}});
    auto comps = components(q, sigma2);
    CHECK(comps == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});

    CHECK(components(q, empty_pattern(q.r, q.n)).size() == 4);
}

TEST_CASE("closed subsets") {
    McKayQuiver q = build_mckay(a3_group());
    auto closed = closed_subsets(q, a3_sigma1_pattern(q));
    std::set<std::vector<int>> got(closed.begin(), closed.end());
    std::set<std::vector<int>> expect = {{}, {1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
    CHECK(got == expect);

    Pattern sigma2 = pattern_from_arrows(q, {{1, 0}});
    CHECK(closed_subsets(q, sigma2).size() == 12);

    CHECK(closed_subsets(q, empty_pattern(q.r, q.n)).size() == 16);
}

TEST_CASE("closed subsets form a lattice") {
    McKayQuiver q = build_mckay(a4_group());
    Pattern p = pattern_from_arrows(q, {{0, 0}, {2, 0}, {0, 1}, {4, 1}});
    auto closed = closed_subsets(q, p);
    std::set<std::vector<int>> all(closed.begin(), closed.end());
    for (const auto& a : closed)
        for (const auto& b : closed) {
            std::vector<int> uni, inter;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            CHECK(all.count(uni));
            CHECK(all.count(inter));
        }
}

TEST_CASE("stability") {
    McKayQuiver q = build_mckay(a3_group());
    ThetaVec theta = make_theta(rv({q(-3), q(1), q(1), q(1)}));
    CHECK(check_stability(q, a3_sigma1_pattern(q), theta) == Stability::Stable);

    Pattern sigma2 = pattern_from_arrows(q, {{1, 0}});
    CHECK(check_stability(q, sigma2, theta) == Stability::Unstable);

    ThetaVec zero = make_theta(rv({q(0), q(0), q(0), q(0)}));
    CHECK(check_stability(q, a3_sigma1_pattern(q), zero) == Stability::Semistable);

    CHECK_THROWS_AS(make_theta(rv({q(1), q(1)})), validation_error);
}

TEST_CASE("unstable is monotone under support growth") {
    // removing arrows keeps a negative closed witness closed
    McKayQuiver q = build_mckay(a3_group());
    ThetaVec theta = make_theta(rv({q(-3), q(1), q(1), q(1)}));
    Pattern sigma2 = pattern_from_arrows(q, {{1, 0}});
    REQUIRE(check_stability(q, sigma2, theta) == Stability::Unstable);
    Pattern smaller = empty_pattern(q.r, q.n);
    CHECK(check_stability(q, smaller, theta) == Stability::Unstable);
}

TEST_CASE("guards") {
    // r = 16 is allowed, larger groups are rejected by the enumeration guard
    auto big = build_group(2, {{17, {16, 1}}});
    McKayQuiver q = build_mckay(big);
    CHECK_THROWS_AS(closed_subsets(q, empty_pattern(q.r, q.n)), resource_error);
}

TEST_CASE("dot export mentions monomial labels") {
    McKayQuiver q = build_mckay(a3_group());
    std::string dot = quiver_dot(q);
    CHECK(dot.find("x^2") != std::string::npos);
    CHECK(dot.find("digraph") != std::string::npos);
}
