#pragma once

// Randomized invariant suites shared by the property-test binary and the
// acceptance runner. Each suite runs at least `cases` checks over cyclic
// groups with |G| <= 8 and n in {2,3}; a failure throws with a description.

#include <set>
#include <sstream>

#include "mmk/lift.hpp"
#include "mmk/moduli.hpp"
#include "testutil.hpp"

namespace mmk::suites {

using namespace mmk::testutil;

inline void fail(const std::string& what) { throw std::runtime_error(what); }

struct Corpus {
    std::vector<AbelianActionPtr> groups;
    std::vector<std::shared_ptr<const Fan>> fans;
    std::mt19937 rng{987654321u};

    explicit Corpus(int group_count) {
        groups = random_cyclic_groups(group_count);
        for (const auto& g : groups) fans.push_back(std::make_shared<const Fan>(resolve(g).fan));
    }
};

// (a) reductor values are nonnegative integers and frac(b) equals the pairing
inline int suite_reductor_and_fractional(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        for (int i = 0; i < fam.r(); ++i)
            for (int j = 0; j < fam.n(); ++j)
                for (int k = 0; k < fam.m(); ++k) {
                    Rat cv = fam.reductor_c(i, j, k);
                    if (!rat_is_integer(cv) || cv < 0) fail("reductor value not a nonnegative integer");
                }
        const Fan& fan = *fam.fan;
        for (int k = 0; k < fam.m(); ++k) {
            int g = fan.labels[fan.exceptional_ray(k)].junior_element;
            for (int i = 0; i < fam.r(); ++i)
                if (rat_frac(fam.b[i][k]) != fan.group->char_pairing(i, g))
                    fail("fractional part of b disagrees with the character pairing");
        }
        ++done;
    }
    return done;
}

// (b) summand count equals r - dim C_F(sigma) on every fiber
inline int suite_summands(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        for (const auto& mc : fam.fan->max_cones) {
            ThetaConeInfo info = theta_cone(fam, mc);
            int comps = static_cast<int>(components(fam.quiver, fiber(fam, mc)).size());
            if (comps != info.summands) fail("summands != r - dim C_F(sigma) on a max cone");
            ++done;
        }
        for (int k = 0; k < fam.m(); ++k) {
            ThetaConeInfo info = theta_cone(fam, {fam.fan->exceptional_ray(k)});
            int comps = static_cast<int>(components(fam.quiver, exceptional_fiber(fam, k)).size());
            if (comps != info.summands) fail("summands != r - dim C_F(sigma) on a ray");
            ++done;
        }
    }
    return done;
}

// (c) twisting by S and then by its complement restores the family
inline int suite_twist_roundtrip(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        if (fam.m() == 0) continue;
        int ell = std::uniform_int_distribution<int>(0, fam.m() - 1)(c.rng);
        Pattern pat = exceptional_fiber(fam, ell);
        for (const auto& s : closed_subsets(fam.quiver, pat)) {
            if (s.empty() || static_cast<int>(s.size()) == fam.r()) continue;
            std::set<int> in(s.begin(), s.end());
            std::vector<int> comp;
            for (int i = 0; i < fam.r(); ++i)
                if (!in.count(i)) comp.push_back(i);
            GnatFamily back = twist(twist(fam, ell, s), ell, comp);
            if (back.b != fam.b) fail("twist round-trip does not restore the family");
            ++done;
            if (done >= cases) break;
        }
    }
    return done;
}

// (d) the walk lands with theta inside every exceptional-ray Theta-cone
inline int suite_walk_postcondition(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        ThetaVec theta = random_generic_theta(fam.r(), c.rng);
        GnatFamily walked = walk(fam, theta);
        for (int k = 0; k < walked.m(); ++k) {
            ThetaConeInfo info = theta_cone(walked, {walked.fan->exceptional_ray(k)});
            if (!cone_contains(info.cone, theta.theta)) fail("walk post-condition violated");
        }
        ++done;
    }
    return done;
}

// (e) fibers at exceptional rays are connected
inline int suite_exceptional_connected(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        for (int k = 0; k < fam.m(); ++k) {
            exceptional_fiber(fam, k); // throws when disconnected
            ++done;
        }
        if (fam.m() == 0) ++done;
    }
    return done;
}

// (f) supports only grow when passing from a cone to one of its faces
inline int suite_face_monotonicity(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.fans.size()) {
        GnatFamily fam = random_twisted_family(c.fans[t], c.rng);
        for (const auto& mc : fam.fan->max_cones) {
            Pattern big = fiber(fam, mc);
            for (size_t drop = 0; drop < mc.size(); ++drop) {
                std::vector<int> face;
                for (size_t u = 0; u < mc.size(); ++u)
                    if (u != drop) face.push_back(mc[u]);
                Pattern small = fiber(fam, face);
                for (int i = 0; i < fam.r(); ++i)
                    for (int j = 0; j < fam.n(); ++j)
                        if (big.get(i, j) && !small.get(i, j)) fail("face monotonicity violated");
                ++done;
            }
        }
    }
    return done;
}

// (g) push-down inverts the lift on every chart pattern of the recursive family
inline int suite_push_lift(Corpus& c, int cases) {
    int done = 0;
    auto walk_reports = [&](const std::vector<ChartReport>& reports, auto&& self) -> void {
        for (const auto& rep : reports) {
            for (size_t t = 0; t < rep.chart_patterns.size(); ++t) {
                Pattern lifted = lift_pattern(*rep.ctx, rep.chart_patterns[t]);
                if (!(lifted == rep.lifted_patterns[t])) fail("lift is not reproducible");
                Pattern back = push_pattern(*rep.ctx, lifted);
                if (!(back == rep.chart_patterns[t])) fail("push(lift(F)) != F");
                Pattern relift = lift_pattern(*rep.ctx, back);
                if (!(relift == lifted)) fail("lift(push(F)) != F");
                ++done;
            }
            self(rep.children, self);
        }
    };
    for (size_t t = 0; done < cases; t = (t + 1) % c.groups.size()) {
        SpecialFamilyResult res = build_special_family(c.groups[t]);
        walk_reports(res.charts, walk_reports);
        if (res.family.m() <= 1) ++done; // groups with nothing to lift still count as a case
    }
    return done;
}

// (h) resolution fans are smooth in dimensions 2 and 3
inline int suite_resolve_smooth(Corpus& c, int cases) {
    int done = 0;
    for (size_t t = 0; done < cases; t = (t + 1) % c.groups.size()) {
        // shuffle the junior order
        std::vector<int> ord = c.groups[t]->junior_elements();
        std::shuffle(ord.begin(), ord.end(), c.rng);
        ResolveResult res = resolve(c.groups[t], ord);
        FanClass cls = classify_fan(res.fan);
        if (!cls.smooth || !cls.crepant || !cls.relative_minimal_model)
            fail("resolution is not a smooth crepant relative minimal model");
        ++done;
    }
    return done;
}

} // namespace mmk::suites
