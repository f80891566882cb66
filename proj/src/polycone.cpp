#include "mmk/polycone.hpp"

#include <algorithm>
#include <atomic>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <set>

#include "mmk/hnf.hpp"

namespace mmk {

namespace {

constexpr int kDimGuard = 32;

void check_dim_guard(int dim) {
    if (dim > kDimGuard * guard_multiplier())
        throw resource_error("polyhedral ambient dimension " + std::to_string(dim) +
                             " exceeds guard (set MMK_GUARD_LIMITS to raise)");
}

std::vector<RatVec> normalize_dedupe(int dim, const std::vector<RatVec>& vs) {
    std::vector<RatVec> out;
    std::set<std::string> seen;
    for (const auto& v : vs) {
        if (static_cast<int>(v.size()) != dim) throw usage_error("generator dimension mismatch");
        RatVec p = rv_primitive(v);
        if (rv_is_zero(p)) continue;
        std::string k = rv_to_string(p);
        if (seen.insert(k).second) out.push_back(std::move(p));
    }
    return out;
}

// sign-canonical primitive vector for lineality directions: first nonzero > 0
RatVec sign_canonical(RatVec v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return rv_scale(Rat(-1), v);
    }
    return v;
}

using Bits = boost::dynamic_bitset<>;

} // namespace

// Incremental double description: maintain extreme rays + lineality of the
// intersection of the processed halfspaces, starting from the whole space.
GeneratorDescription generators_from_halfspaces(int dim, const std::vector<RatVec>& inequalities) {
    check_dim_guard(dim);
    std::vector<RatVec> ineqs = normalize_dedupe(dim, inequalities);
    size_t total = ineqs.size();

    std::vector<RatVec> lin;
    for (int i = 0; i < dim; ++i) lin.push_back(rv_unit(dim, i));
    std::vector<RatVec> rays;
    std::vector<Bits> tight; // per ray, over inequality indices

    for (size_t idx = 0; idx < total; ++idx) {
        const RatVec& a = ineqs[idx];
        int l0 = -1;
        for (size_t t = 0; t < lin.size(); ++t)
            if (rv_dot(a, lin[t]) != 0) {
                l0 = static_cast<int>(t);
                break;
            }
        if (l0 >= 0) {
            RatVec L0 = lin[l0];
            Rat pa = rv_dot(a, L0);
            if (pa < 0) {
                L0 = rv_scale(Rat(-1), L0);
                pa = -pa;
            }
            lin.erase(lin.begin() + l0);
            for (auto& l : lin) {
                Rat pl = rv_dot(a, l);
                if (pl != 0) l = sign_canonical(rv_primitive(rv_sub(l, rv_scale(pl / pa, L0))));
            }
            for (size_t r = 0; r < rays.size(); ++r) {
                Rat pr = rv_dot(a, rays[r]);
                if (pr != 0) rays[r] = rv_primitive(rv_sub(rays[r], rv_scale(pr / pa, L0)));
                tight[r].set(idx);
            }
            // L0 itself becomes the ray covering the positive side; it is
            // tight at every previously processed inequality (it was lineality).
            rays.push_back(rv_primitive(L0));
            Bits b(total);
            for (size_t j = 0; j < idx; ++j) b.set(j);
            tight.push_back(std::move(b));
            continue;
        }

        std::vector<Rat> val(rays.size());
        bool any_neg = false;
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = rv_dot(a, rays[r]);
            if (val[r] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) tight[r].set(idx);
            continue;
        }
        std::vector<RatVec> new_rays;
        std::vector<Bits> new_tight;
        std::set<std::string> seen;
        auto push = [&](RatVec v, Bits b) {
            std::string k = rv_to_string(v);
            if (seen.insert(k).second) {
                new_rays.push_back(std::move(v));
                new_tight.push_back(std::move(b));
            }
        };
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] > 0) push(rays[r], tight[r]);
            if (val[r] == 0) {
                Bits b = tight[r];
                b.set(idx);
                push(rays[r], std::move(b));
            }
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (val[n] >= 0) continue;
                // combinatorial adjacency: no third ray is tight everywhere both are
                Bits common = tight[p] & tight[n];
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if ((common & ~tight[r]).none()) adjacent = false;
                }
                if (!adjacent) continue;
                RatVec w = rv_primitive(rv_sub(rv_scale(val[p], rays[n]), rv_scale(val[n], rays[p])));
                if (rv_is_zero(w)) continue;
                Bits b(total);
                for (size_t j = 0; j <= idx; ++j)
                    if (rv_dot(ineqs[j], w) == 0) b.set(j);
                push(std::move(w), std::move(b));
            }
        }
        rays = std::move(new_rays);
        tight = std::move(new_tight);
    }

    GeneratorDescription out;
    out.rays = std::move(rays);
    std::sort(out.rays.begin(), out.rays.end(),
              [](const RatVec& a, const RatVec& b) { return rv_compare(a, b) < 0; });
    // canonicalize the lineality basis via HNF (unique for the spanned lattice)
    if (!lin.empty()) {
        RatMat prim;
        for (const auto& l : lin) prim.push_back(rv_primitive(l));
        HnfBasis h = hnf_basis(prim);
        out.lineality = h.basis;
    }
    return out;
}

std::vector<RatVec> flatten_generators(const GeneratorDescription& g) {
    std::vector<RatVec> out = g.rays;
    for (const auto& l : g.lineality) {
        out.push_back(l);
        out.push_back(rv_scale(Rat(-1), l));
    }
    return out;
}

PolyCone::PolyCone(int ambient_dim, std::vector<RatVec> generators) : ambient_(ambient_dim) {
    check_dim_guard(ambient_dim);
    gens_ = normalize_dedupe(ambient_dim, generators);
    std::sort(gens_.begin(), gens_.end(),
              [](const RatVec& a, const RatVec& b) { return rv_compare(a, b) < 0; });
}

const std::vector<RatVec>& PolyCone::halfspaces() const {
    auto cached = std::atomic_load(&halfspace_cache_);
    if (!cached) {
        GeneratorDescription dual = generators_from_halfspaces(ambient_, gens_);
        auto fresh = std::make_shared<const std::vector<RatVec>>(flatten_generators(dual));
        std::atomic_store(&halfspace_cache_, std::static_pointer_cast<const std::vector<RatVec>>(fresh));
        cached = fresh;
    }
    return *cached;
}

int PolyCone::dim() const {
    RatMat m(gens_.begin(), gens_.end());
    return mat_rank(std::move(m));
}

bool PolyCone::is_strongly_convex() const {
    for (const auto& g : gens_)
        if (contains(rv_scale(Rat(-1), g))) return false;
    return true;
}

bool PolyCone::contains(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw usage_error("cone membership dimension mismatch");
    for (const auto& h : halfspaces())
        if (rv_dot(h, v) < 0) return false;
    return true;
}

std::string PolyCone::key() const {
    // gens_ are already primitive-sorted but possibly redundant; reduce to the
    // minimal description for a stable identity.
    GeneratorDescription dual = generators_from_halfspaces(ambient_, halfspaces());
    std::string k = "R";
    for (const auto& r : dual.rays) k += rv_to_string(r);
    k += "|L";
    for (const auto& l : dual.lineality) k += rv_to_string(l);
    return k;
}

PolyCone cone_from_halfspaces(int dim, const std::vector<RatVec>& inequalities) {
    return PolyCone(dim, flatten_generators(generators_from_halfspaces(dim, inequalities)));
}

PolyCone dual_cone(const PolyCone& c) {
    check_dim_guard(c.ambient_dim());
    return cone_from_halfspaces(c.ambient_dim(), c.generators());
}

bool cone_contains(const PolyCone& c, const RatVec& v) { return c.contains(v); }

bool cone_subset(const PolyCone& a, const PolyCone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw usage_error("cone dimension mismatch");
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

bool cone_equal(const PolyCone& a, const PolyCone& b) { return cone_subset(a, b) && cone_subset(b, a); }

PolyCone intersect_cones(const PolyCone& a, const PolyCone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw usage_error("cone dimension mismatch");
    std::vector<RatVec> hs = a.halfspaces();
    const auto& hb = b.halfspaces();
    hs.insert(hs.end(), hb.begin(), hb.end());
    return cone_from_halfspaces(a.ambient_dim(), hs);
}

PolyCone minimal_face(const PolyCone& a, const PolyCone& s) {
    if (!cone_subset(s, a)) throw usage_error("minimal_face: second cone is not contained in the first");
    std::vector<RatVec> hs = a.halfspaces();
    std::vector<RatVec> cut = hs;
    for (const auto& h : hs) {
        bool tight = true;
        for (const auto& g : s.generators())
            if (rv_dot(h, g) != 0) {
                tight = false;
                break;
            }
        if (tight) cut.push_back(rv_scale(Rat(-1), h));
    }
    return cone_from_halfspaces(a.ambient_dim(), cut);
}

bool is_face_of(const PolyCone& a, const PolyCone& f) {
    if (!cone_subset(f, a)) return false;
    return cone_equal(minimal_face(a, f), f);
}

std::vector<PolyCone> all_faces(const PolyCone& c) {
    std::vector<PolyCone> out;
    std::set<std::string> seen;
    std::vector<PolyCone> work{c};
    while (!work.empty()) {
        PolyCone cur = std::move(work.back());
        work.pop_back();
        if (!seen.insert(cur.key()).second) continue;
        out.push_back(cur);
        for (const auto& h : cur.halfspaces()) {
            bool proper = false;
            for (const auto& g : cur.generators())
                if (rv_dot(h, g) > 0) {
                    proper = true;
                    break;
                }
            if (!proper) continue;
            std::vector<RatVec> hs = cur.halfspaces();
            hs.push_back(rv_scale(Rat(-1), h));
            work.push_back(cone_from_halfspaces(cur.ambient_dim(), hs));
        }
    }
    return out;
}

PolyCone cone_hull(const PolyCone& a, const PolyCone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw usage_error("cone dimension mismatch");
    std::vector<RatVec> gens = a.generators();
    const auto& gb = b.generators();
    gens.insert(gens.end(), gb.begin(), gb.end());
    return PolyCone(a.ambient_dim(), gens);
}

} // namespace mmk
