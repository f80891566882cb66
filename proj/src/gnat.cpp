#include "mmk/gnat.hpp"

#include <algorithm>
#include <set>

namespace mmk {

const RatVec& GnatFamily::junior_vector(int k) const {
    int ray = fan->exceptional_ray(k);
    int g = fan->labels[ray].junior_element;
    if (g < 0) throw internal_error("exceptional ray without a group element");
    return fan->group->elements[g];
}

Rat GnatFamily::reductor_c(int i, int j, int k) const {
    return b[i][k] + junior_vector(k)[j] - b[quiver.k(i, j)][k];
}

GnatFamily make_family(std::shared_ptr<const Fan> fan, RatMat b) {
    GnatFamily f;
    f.fan = fan;
    f.quiver = build_mckay(fan->group);
    int r = f.r(), m = fan->exceptional_count();
    if (static_cast<int>(b.size()) != r) throw validation_error("coefficient matrix must have r rows");
    for (const auto& row : b)
        if (static_cast<int>(row.size()) != m)
            throw validation_error("coefficient matrix must have one column per exceptional ray");
    f.b = std::move(b);

    for (int k = 0; k < m; ++k) {
        int ray = fan->exceptional_ray(k);
        int g = fan->labels[ray].junior_element;
        if (g < 0)
            throw validation_error("exceptional ray " + std::to_string(k + 1) +
                                   " is not the weight vector of a group element");
        if (fan->group->age(g) != 1)
            throw validation_error("exceptional ray " + std::to_string(k + 1) +
                                   " is not crepant (its group element is not junior)");
    }
    for (int k = 0; k < m; ++k)
        if (f.b[0][k] != 0) throw validation_error("family is not normalized: b[0][" + std::to_string(k + 1) +
                                                   "] = " + rat_to_string(f.b[0][k]));

    std::string bad;
    int bad_count = 0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < f.n(); ++j)
            for (int k = 0; k < m; ++k) {
                Rat c = f.reductor_c(i, j, k);
                if (!rat_is_integer(c) || c < 0) {
                    ++bad_count;
                    if (bad_count <= 16)
                        bad += "\n  c(i=" + std::to_string(i) + ", j=" + std::to_string(j + 1) +
                               ", k=" + std::to_string(k + 1) + ") = " + rat_to_string(c);
                }
            }
    if (bad_count)
        throw validation_error("reductor condition violated at " + std::to_string(bad_count) + " triple(s):" + bad);
    return f;
}

GnatFamily canonical_family(std::shared_ptr<const Fan> fan) {
    int r = fan->group->r, m = fan->exceptional_count();
    RatMat b(r, RatVec(m, Rat(0)));
    for (int k = 0; k < m; ++k) {
        int g = fan->labels[fan->exceptional_ray(k)].junior_element;
        if (g < 0)
            throw validation_error("canonical family requires exceptional rays at group weight vectors");
        for (int i = 0; i < r; ++i) b[i][k] = fan->group->char_pairing(i, g);
    }
    return make_family(fan, std::move(b));
}

Pattern fiber(const GnatFamily& f, const std::vector<int>& cone) {
    if (!f.fan->is_cone(cone)) throw usage_error("ray index set is not a cone of the fan");
    std::vector<char> coord_in(f.n(), 0);
    std::vector<int> exc;
    for (int idx : cone) {
        const RayLabel& l = f.fan->labels.at(idx);
        if (l.exceptional)
            exc.push_back(l.index);
        else
            coord_in[l.index] = 1;
    }
    Pattern pat = empty_pattern(f.r(), f.n());
    for (int i = 0; i < f.r(); ++i)
        for (int j = 0; j < f.n(); ++j) {
            if (coord_in[j]) continue; // delta = 0
            bool on = true;
            for (int k : exc)
                if (f.reductor_c(i, j, k) > 0) {
                    on = false;
                    break;
                }
            pat.set(i, j, on);
        }
    if (!validate_pattern(f.quiver, pat)) throw internal_error("fiber pattern violates the quiver relations");
    return pat;
}

Pattern exceptional_fiber(const GnatFamily& f, int k) {
    Pattern pat = fiber(f, {f.fan->exceptional_ray(k)});
    if (components(f.quiver, pat).size() != 1)
        throw internal_error("fiber at exceptional ray " + std::to_string(k + 1) +
                             " is disconnected; crepancy guarantees connectivity");
    return pat;
}

std::vector<RatVec> fiber_monomials(const GnatFamily& f, const std::vector<int>& cone) {
    int n = f.n();
    if (static_cast<int>(cone.size()) != n) throw usage_error("fiber monomials require a full-dimensional cone");
    if (!f.fan->is_cone(cone)) throw usage_error("ray index set is not a cone of the fan");
    RatMat m;
    for (int idx : cone) m.push_back(f.fan->rays.at(idx));
    if (mat_rank(m) != n) throw usage_error("fiber monomials require a simplicial cone");
    RatMat inv = mat_inverse(m);

    std::vector<RatVec> out;
    for (int i = 0; i < f.r(); ++i) {
        RatVec rhs(n);
        for (int t = 0; t < n; ++t) {
            const RayLabel& l = f.fan->labels.at(cone[t]);
            rhs[t] = l.exceptional ? f.b[i][l.index] : Rat(0);
        }
        // solve <ray_t, m_i> = rhs_t
        out.push_back(mat_apply(inv, rhs));
    }
    return out;
}

ThetaConeInfo theta_cone(const GnatFamily& f, const std::vector<int>& cone) {
    Pattern pat = fiber(f, cone);
    std::vector<RatVec> gens;
    for (int i = 0; i < f.r(); ++i)
        for (int j = 0; j < f.n(); ++j)
            if (pat.get(i, j)) gens.push_back(f.quiver.wt(i, j));
    ThetaConeInfo info;
    info.cone = PolyCone(f.r(), gens);
    info.dim = info.cone.dim();
    info.summands = f.r() - info.dim;
    int ncomp = static_cast<int>(components(f.quiver, pat).size());
    if (ncomp != info.summands)
        throw internal_error("summand count disagrees with the Theta-cone dimension");
    return info;
}

GnatFamily twist(const GnatFamily& f, int ell, const std::vector<int>& s) {
    std::set<int> in(s.begin(), s.end());
    if (in.empty() || static_cast<int>(in.size()) >= f.r())
        throw usage_error("twist subset must be a proper nonempty vertex set");
    Pattern pat = exceptional_fiber(f, ell);
    for (int i : in) {
        if (i < 0 || i >= f.r()) throw usage_error("twist subset contains an invalid vertex");
        for (int j = 0; j < f.n(); ++j)
            if (pat.get(i, j) && !in.count(f.quiver.k(i, j)))
                throw usage_error("twist subset is not closed: arrow x_" + std::to_string(j + 1) + " from " +
                                  std::to_string(i) + " escapes to " + std::to_string(f.quiver.k(i, j)));
    }
    bool zero_in = in.count(0) != 0;
    RatMat b = f.b;
    for (int i = 0; i < f.r(); ++i) {
        bool i_in = in.count(i) != 0;
        if (zero_in && !i_in) b[i][ell] += 1;
        if (!zero_in && i_in) b[i][ell] -= 1;
    }
    GnatFamily out = make_family(f.fan, std::move(b));
    // the complement is a submodule of the twisted fiber
    {
        Pattern np = exceptional_fiber(out, ell);
        for (int i = 0; i < f.r(); ++i) {
            if (in.count(i)) continue;
            for (int j = 0; j < f.n(); ++j)
                if (np.get(i, j) && in.count(f.quiver.k(i, j)))
                    throw internal_error("twist failed to exchange sub- and quotient representations");
        }
    }
    return out;
}

GnatFamily walk(const GnatFamily& f, const ThetaVec& theta) {
    int r = f.r();
    if (static_cast<int>(theta.theta.size()) != r) throw usage_error("theta length mismatch");
    if (r > 20) throw resource_error("walk limited to groups of order <= 20");
    // genericity: theta(S) != 0 for every proper nonempty subset
    for (unsigned long mask = 1; mask + 1 < (1UL << r); ++mask) {
        Rat t(0);
        for (int i = 0; i < r; ++i)
            if ((mask >> i) & 1UL) t += theta.theta[i];
        if (t == 0) {
            std::string s;
            for (int i = 0; i < r; ++i)
                if ((mask >> i) & 1UL) s += (s.empty() ? "" : ",") + std::to_string(i);
            throw validation_error("theta is not generic: it vanishes on {" + s + "}");
        }
    }

    long cap = 1000000;
    if (r <= 4) cap = std::min<long>(cap, 1L << (1 << r));

    GnatFamily cur = f;
    for (int ell = 0; ell < f.m(); ++ell) {
        long steps = 0;
        while (true) {
            ThetaConeInfo info = theta_cone(cur, {cur.fan->exceptional_ray(ell)});
            if (cone_contains(info.cone, theta.theta)) break;
            if (++steps > cap) throw internal_error("walk exceeded its iteration cap");

            Pattern pat = exceptional_fiber(cur, ell);
            // interior point of the current full-dimensional cone
            RatVec p = rv_zero(r);
            for (const auto& g : info.cone.generators()) p = rv_add(p, g);

            bool found = false;
            Rat best_t;
            std::vector<int> best_s;
            for (const auto& s : closed_subsets(cur.quiver, pat)) {
                if (s.empty() || static_cast<int>(s.size()) == r) continue;
                Rat ts(0), ps(0);
                for (int i : s) {
                    ts += theta.theta[i];
                    ps += p[i];
                }
                if (ts >= 0) continue;
                if (ps <= 0)
                    throw internal_error("interior point degenerate on a closed subset; cone not full-dimensional");
                Rat t = ps / (ps - ts);
                if (!found || t < best_t || (t == best_t && s < best_s)) {
                    found = true;
                    best_t = t;
                    best_s = s;
                }
            }
            if (!found)
                throw internal_error("theta lies outside the Theta-cone but no closed subset separates it");
            cur = twist(cur, ell, best_s);
        }
    }
    return cur;
}

} // namespace mmk
