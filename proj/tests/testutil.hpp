#pragma once

#include <random>
#include <vector>

#include "mmk/fan.hpp"
#include "mmk/gnat.hpp"
#include "mmk/group.hpp"

namespace mmk::testutil {

inline Rat q(long n, long d = 1) { return Rat(n, d); }

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline AbelianActionPtr a3_group() { return build_group(2, {{4, {3, 1}}}); }
inline AbelianActionPtr a4_group() { return build_group(2, {{5, {3, 2}}}); }
inline AbelianActionPtr pmi4_group() { return build_group(4, {{2, {1, 1, 1, 1}}}); }
inline AbelianActionPtr trivial_group(int n = 2) { return build_group(n, {}); }

inline std::shared_ptr<const Fan> a3_fan() {
    return std::make_shared<const Fan>(resolve(a3_group()).fan);
}

// the worked family with coefficient columns (0,3/4,1/2,1/4), (0,1/2,1,1/2),
// (0,-3/4,-1/2,-1/4)
inline GnatFamily a3_paper_family(std::shared_ptr<const Fan> fan = nullptr) {
    if (!fan) fan = a3_fan();
    RatMat b = {
        {q(0), q(0), q(0)},
        {q(3, 4), q(1, 2), q(-3, 4)},
        {q(1, 2), q(1), q(-1, 2)},
        {q(1, 4), q(1, 2), q(-1, 4)},
    };
    return make_family(fan, b);
}

// deterministic pool of cyclic groups in SL_n with |G| <= 8, n in {2,3}
inline std::vector<AbelianActionPtr> random_cyclic_groups(int count, unsigned seed = 20240811) {
    std::mt19937 rng(seed);
    std::vector<AbelianActionPtr> out;
    std::uniform_int_distribution<int> pick_n(2, 3);
    std::uniform_int_distribution<int> pick_r(2, 8);
    while (static_cast<int>(out.size()) < count) {
        int n = pick_n(rng);
        int r = pick_r(rng);
        std::vector<long> w(n);
        long sum = 0;
        for (int j = 0; j + 1 < n; ++j) {
            w[j] = std::uniform_int_distribution<long>(0, r - 1)(rng);
            sum += w[j];
        }
        w[n - 1] = ((r - sum % r) % r);
        bool zero = true;
        for (long x : w)
            if (x) zero = false;
        if (zero) continue;
        out.push_back(build_group(n, {{r, w}}));
    }
    return out;
}

// generic integral theta for a group of order r
inline ThetaVec random_generic_theta(int r, std::mt19937& rng) {
    std::uniform_int_distribution<long> pick(-9, 9);
    while (true) {
        RatVec t(r);
        long sum = 0;
        for (int i = 0; i + 1 < r; ++i) {
            long v = pick(rng);
            t[i] = Rat(v);
            sum += v;
        }
        t[r - 1] = Rat(-sum);
        bool generic = true;
        for (unsigned long mask = 1; mask + 1 < (1UL << r) && generic; ++mask) {
            Rat s(0);
            for (int i = 0; i < r; ++i)
                if ((mask >> i) & 1UL) s += t[i];
            if (s == 0) generic = false;
        }
        if (generic) return ThetaVec{t};
    }
}

// a family reached from the canonical one by a few random valid twists
inline GnatFamily random_twisted_family(std::shared_ptr<const Fan> fan, std::mt19937& rng, int max_twists = 3) {
    GnatFamily fam = canonical_family(fan);
    int m = fan->exceptional_count();
    if (m == 0) return fam;
    int twists = std::uniform_int_distribution<int>(0, max_twists)(rng);
    for (int t = 0; t < twists; ++t) {
        int ell = std::uniform_int_distribution<int>(0, m - 1)(rng);
        Pattern pat = exceptional_fiber(fam, ell);
        std::vector<std::vector<int>> options;
        for (const auto& s : closed_subsets(fam.quiver, pat))
            if (!s.empty() && static_cast<int>(s.size()) < fam.r()) options.push_back(s);
        if (options.empty()) continue;
        const auto& s = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
        fam = twist(fam, ell, s);
    }
    return fam;
}

} // namespace mmk::testutil
