#include "mmk/moduli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mmk/hnf.hpp"

namespace mmk {

std::vector<CoxGenerator> cox_generators(const Fan& fan) {
    if (!classify_fan(fan).relative_minimal_model)
        throw usage_error("Cox generators require a relative minimal model fan");
    int m = fan.exceptional_count();
    std::vector<CoxGenerator> out;
    for (int j = 0; j < fan.n(); ++j) {
        CoxGenerator g;
        g.label = "y" + std::to_string(j + 1);
        g.is_coordinate = true;
        g.index = j;
        g.valuation.resize(m);
        for (int k = 0; k < m; ++k) {
            int g_elt = fan.labels[fan.exceptional_ray(k)].junior_element;
            g.valuation[k] = fan.group->elements[g_elt][j];
        }
        out.push_back(std::move(g));
    }
    for (int k = 0; k < m; ++k) {
        CoxGenerator g;
        g.label = "z" + std::to_string(k + 1);
        g.is_coordinate = false;
        g.index = k;
        g.valuation = rv_zero(m);
        g.valuation[k] = -1;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::vector<PhiEntry>> phi_map(const GnatFamily& f) {
    int r = f.r(), n = f.n(), m = f.m();
    std::vector<std::vector<PhiEntry>> out(r, std::vector<PhiEntry>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            PhiEntry e;
            e.j = j;
            e.t_exponents.resize(m);
            int head = f.quiver.k(i, j);
            for (int k = 0; k < m; ++k) {
                e.t_exponents[k] = f.b[head][k] - f.b[i][k];
                // factorization through the Cox generators: z_k exponent is the
                // reductor value, necessarily a nonnegative integer
                Rat c = f.reductor_c(i, j, k);
                if (!rat_is_integer(c) || c < 0)
                    throw internal_error("phi image leaves the Cox ring at arrow (" + std::to_string(i) + "," +
                                         std::to_string(j + 1) + ")");
            }
            out[i][j] = std::move(e);
        }
    return out;
}

IntMat psi_matrix(const GnatFamily& f, std::optional<std::vector<Int>> grading_orders) {
    int r = f.r(), m = f.m();
    std::vector<Int> grading;
    if (grading_orders) {
        grading = *grading_orders;
        if (static_cast<int>(grading.size()) != m)
            throw validation_error("grading orders: expected one entry per exceptional ray");
    } else {
        for (int k = 0; k < m; ++k) {
            int g = f.fan->labels[f.fan->exceptional_ray(k)].junior_element;
            grading.push_back(f.fan->group->orders[g]);
        }
    }
    IntMat out(m, IntVec(r - 1, 0));
    for (int k = 0; k < m; ++k)
        for (int i = 1; i < r; ++i) {
            Rat v = Rat(grading[k]) * f.b[i][k];
            if (!rat_is_integer(v)) {
                std::string msg = "psi matrix entry (" + std::to_string(k + 1) + "," + std::to_string(i) +
                                  ") is not integral at grading order " + rat_to_string(Rat(grading[k]));
                if (grading_orders) throw validation_error(msg);
                throw internal_error(msg);
            }
            out[k][i - 1] = rat_num(v);
        }
    return out;
}

MVLattice mv_lattice(const McKayQuiver& quiver) {
    int r = quiver.r, n = quiver.n;
    if (static_cast<long>(r) * n > 64 * guard_multiplier())
        throw resource_error("M_V lattice limited to r*n <= 64 (set MMK_GUARD_LIMITS to raise)");
    MVLattice mv;
    mv.r = r;
    mv.n = n;
    int width = (r - 1) + n;

    // mu(i,j): wt(i,j) written in the basis e_1..e_{r-1} of Z^r/diagonal
    // (e_0 = -(e_1+...+e_{r-1})), followed by f_j
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            IntVec row(width, 0);
            int head = quiver.k(i, j);
            auto add_vertex = [&](int v, int sign) {
                if (v == 0) {
                    for (int t = 0; t < r - 1; ++t) row[t] -= sign;
                } else {
                    row[v - 1] += sign;
                }
            };
            if (head != i) {
                add_vertex(head, 1);
                add_vertex(i, -1);
            }
            row[(r - 1) + j] = 1;
            mv.mu.push_back(std::move(row));
        }

    mv.basis = hnf_rows(mv.mu);
    mv.q = static_cast<int>(mv.basis.size());
    int expected = (r == 1) ? n : n + r - 1;
    if (mv.q != expected)
        throw internal_error("M_V rank " + std::to_string(mv.q) + ", expected " + std::to_string(expected));

    // coordinates of each mu in the HNF basis
    RatMat basis_rat;
    for (const auto& row : mv.basis) basis_rat.push_back(rv_from_int(row));
    for (const auto& row : mv.mu) {
        RatVec c;
        if (!mat_solve_left(basis_rat, rv_from_int(row), c) || !rv_is_integral(c))
            throw internal_error("arrow weight does not lie in the lattice it generates");
        mv.mu_coords.push_back(rv_to_int(c));
    }

    // invariant sublattice: combinations with vanishing first block
    IntMat first_block;
    for (const auto& row : mv.basis) first_block.push_back(IntVec(row.begin(), row.begin() + (r - 1)));
    HnfKernel kern = hnf_with_left_kernel(first_block);
    IntMat inv_rows;
    for (const auto& c : kern.kernel) {
        IntVec w(n, 0);
        for (int t = 0; t < mv.q; ++t)
            for (int s = 0; s < n; ++s) w[s] += c[t] * mv.basis[t][(r - 1) + s];
        inv_rows.push_back(std::move(w));
    }
    mv.invariant_basis = hnf_rows(std::move(inv_rows));
    if (static_cast<int>(mv.invariant_basis.size()) != n)
        throw internal_error("invariant sublattice has rank " + std::to_string(mv.invariant_basis.size()) +
                             ", expected " + std::to_string(n));
    for (const auto& row : mv.invariant_basis)
        for (int g = 0; g < r; ++g)
            if (quiver.group->monomial_pairing(rv_from_int(row), g) != 0)
                throw internal_error("invariant sublattice contains a non-invariant monomial");

    // projection q_G: for u in basis-dual coordinates, q_G(u) is the vector w
    // with <w, m_s> = <u, coords of (0|m_s)> over the invariant basis
    RatMat d; // n x q
    for (const auto& row : mv.invariant_basis) {
        IntVec full(width, 0);
        for (int s = 0; s < n; ++s) full[(r - 1) + s] = row[s];
        RatVec c;
        if (!mat_solve_left(basis_rat, rv_from_int(full), c) || !rv_is_integral(c))
            throw internal_error("invariant element escapes the lattice");
        d.push_back(c);
    }
    RatMat mg; // n x n, rows m_s
    for (const auto& row : mv.invariant_basis) mg.push_back(rv_from_int(row));
    RatMat mg_inv = mat_inverse(mg);
    // w = mg^{-T} * (D u); build n x q matrix
    mv.qg.assign(n, RatVec(mv.q, Rat(0)));
    for (int a = 0; a < n; ++a)
        for (int t = 0; t < mv.q; ++t) {
            Rat s(0);
            for (int b2 = 0; b2 < n; ++b2) s += mg_inv[a][b2] * d[b2][t];
            mv.qg[a][t] = s;
        }
    return mv;
}

PolyCone sigma_tilde(const MVLattice& mv, const GnatFamily& f, const std::vector<int>& cone) {
    Pattern pat = fiber(f, cone);
    std::vector<RatVec> ineqs;
    for (int i = 0; i < mv.r; ++i)
        for (int j = 0; j < mv.n; ++j) {
            RatVec c = rv_from_int(mv.mu_coords[i * mv.n + j]);
            ineqs.push_back(c);
            if (pat.get(i, j)) ineqs.push_back(rv_scale(Rat(-1), c)); // invertible: equality
        }
    return cone_from_halfspaces(mv.q, ineqs);
}

PolyCone qg_image(const MVLattice& mv, const PolyCone& tilde) {
    std::vector<RatVec> gens;
    for (const auto& g : tilde.generators()) gens.push_back(mat_apply(mv.qg, g));
    return PolyCone(mv.n, gens);
}

QuotientFanReport quotient_fan(const GnatFamily& f) {
    const Fan& fan = *f.fan;
    if (!classify_fan(fan).relative_minimal_model)
        throw usage_error("quotient fan requires a relative minimal model fan");
    MVLattice mv = mv_lattice(f.quiver);

    QuotientFanReport rep;
    bool all_indecomposable = true;
    std::vector<PolyCone> images;
    for (const auto& mc : fan.max_cones) {
        Pattern pat = fiber(f, mc);
        if (components(f.quiver, pat).size() != 1) {
            all_indecomposable = false;
            rep.witness_cones.push_back(mc);
        }
        PolyCone tilde = sigma_tilde(mv, f, mc);
        PolyCone img = qg_image(mv, tilde);
        if (!cone_subset(fan.cone_of(mc), img))
            throw internal_error("projected cone does not contain its source cone");
        images.push_back(std::move(img));
    }

    // step (1): keep the cones maximal with respect to inclusion
    std::vector<PolyCone> s;
    for (const auto& c : images) {
        bool dominated = false;
        for (const auto& d : images)
            if (!cone_equal(c, d) && cone_subset(c, d)) {
                dominated = true;
                break;
            }
        bool dup = false;
        for (const auto& d : s)
            if (cone_equal(c, d)) {
                dup = true;
                break;
            }
        if (!dominated && !dup) s.push_back(c);
    }

    // step (2): merge until pairwise intersections are faces
    long cap = 10000L * guard_multiplier();
    long steps = 0;
    while (true) {
        if (++steps > cap) throw internal_error("quotient fan coarsening exceeded its iteration cap");
        bool changed = false;
        for (size_t a = 0; a < s.size() && !changed; ++a)
            for (size_t b = 0; b < s.size() && !changed; ++b) {
                if (a == b) continue;
                PolyCone inter = intersect_cones(s[a], s[b]);
                if (is_face_of(s[a], inter)) continue;
                PolyCone tau2 = minimal_face(s[b], inter);
                PolyCone merged;
                size_t target;
                if (!cone_subset(tau2, s[a])) {
                    merged = cone_hull(s[a], tau2);
                    target = a;
                } else {
                    PolyCone tau1 = minimal_face(s[a], inter);
                    merged = cone_hull(s[b], tau1);
                    target = b;
                }
                std::vector<PolyCone> next;
                for (size_t t = 0; t < s.size(); ++t) {
                    if (t == target || cone_subset(s[t], merged)) continue;
                    next.push_back(s[t]);
                }
                next.push_back(merged);
                s = std::move(next);
                changed = true;
            }
        if (!changed) break;
    }

    // N_G-primitive generator on the ray of an integer-primitive direction
    auto ng_primitive = [&fan](const RatVec& d) {
        RatVec c = fan.lattice_coords(d);
        if (!rv_is_integral(c)) return d; // not a lattice direction; leave as is
        Int g = iv_gcd(rv_to_int(c));
        return g > 1 ? rv_scale(Rat(1, g), d) : d;
    };

    // store cones with their minimal generator description
    std::set<std::string> ray_keys;
    for (const auto& c : s) {
        GeneratorDescription g = generators_from_halfspaces(fan.n(), c.halfspaces());
        if (!g.lineality.empty()) throw internal_error("quotient fan produced a non-pointed cone");
        std::vector<RatVec> gens;
        for (const auto& rvec : g.rays) {
            gens.push_back(ng_primitive(rvec));
            std::string k = rv_to_string(rv_primitive(rvec));
            if (ray_keys.insert(k).second) rep.sigma_f_rays.push_back(ng_primitive(rvec));
        }
        std::sort(gens.begin(), gens.end(), [](const RatVec& a, const RatVec& b) { return rv_compare(a, b) < 0; });
        rep.sigma_f_max.push_back(c);
        rep.sigma_f_max_gens.push_back(std::move(gens));
    }
    std::sort(rep.sigma_f_rays.begin(), rep.sigma_f_rays.end(),
              [](const RatVec& a, const RatVec& b) { return rv_compare(a, b) < 0; });
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        std::string k = rv_to_string(rv_primitive(fan.rays[i]));
        if (!ray_keys.count(k)) rep.contracted_rays.push_back(static_cast<int>(i));
    }

    // alpha is an isomorphism exactly when the maximal cones agree as point sets
    {
        bool same = s.size() == fan.max_cones.size();
        if (same)
            for (const auto& mc : fan.max_cones) {
                PolyCone c = fan.cone_of(mc);
                bool hit = false;
                for (const auto& d : s)
                    if (cone_equal(c, d)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    same = false;
                    break;
                }
            }
        rep.alpha_is_iso = same;
    }

    if (all_indecomposable) {
        rep.verdict = ModuliVerdict::FineModuli;
        if (!rep.alpha_is_iso)
            throw internal_error("all fibers are indecomposable but the quotient fan differs from the fan");
    } else {
        rep.verdict = ModuliVerdict::NotFine;
    }
    return rep;
}

} // namespace mmk
