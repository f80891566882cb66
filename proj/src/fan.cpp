#include "mmk/fan.hpp"

#include <algorithm>
#include <set>

namespace mmk {

int Fan::exceptional_count() const {
    int m = 0;
    for (const auto& l : labels)
        if (l.exceptional) ++m;
    return m;
}

int Fan::exceptional_ray(int k) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i].exceptional && labels[i].index == k) return static_cast<int>(i);
    throw usage_error("no exceptional ray with index " + std::to_string(k));
}

int Fan::coordinate_ray(int j) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (!labels[i].exceptional && labels[i].index == j) return static_cast<int>(i);
    throw usage_error("no coordinate ray with index " + std::to_string(j));
}

int Fan::ray_index(const RatVec& v) const {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rv_compare(rays[i], v) == 0) return static_cast<int>(i);
    return -1;
}

int Fan::exceptional_element(int k) const {
    int i = exceptional_ray(k);
    return labels[i].junior_element;
}

PolyCone Fan::cone_of(const std::vector<int>& ray_indices) const {
    std::vector<RatVec> gens;
    for (int i : ray_indices) gens.push_back(rays.at(i));
    return PolyCone(n(), gens);
}

bool Fan::is_cone(const std::vector<int>& ray_indices) const {
    std::set<int> want(ray_indices.begin(), ray_indices.end());
    for (const auto& mc : max_cones) {
        std::set<int> have(mc.begin(), mc.end());
        if (std::includes(have.begin(), have.end(), want.begin(), want.end())) return true;
    }
    return false;
}

RatVec Fan::lattice_coords(const RatVec& v) const {
    RatVec c;
    if (!mat_solve_left(lattice_basis, v, c)) throw usage_error("vector outside the lattice span");
    return c;
}

bool Fan::in_lattice(const RatVec& v) const {
    RatVec c;
    if (!mat_solve_left(lattice_basis, v, c)) return false;
    return rv_is_integral(c);
}

bool Fan::all_simplicial() const {
    for (const auto& mc : max_cones) {
        RatMat m;
        for (int i : mc) m.push_back(rays[i]);
        if (mat_rank(m) != static_cast<int>(mc.size())) return false;
    }
    return true;
}

void Fan::validate() const {
    int nn = n();
    for (const auto& rvec : rays)
        if (static_cast<int>(rvec.size()) != nn) throw validation_error("ray dimension mismatch");
    std::set<std::string> seen;
    for (const auto& rvec : rays)
        if (!seen.insert(rv_to_string(rvec)).second) throw validation_error("duplicate ray");
    for (const auto& mc : max_cones) {
        if (mc.empty()) throw validation_error("empty maximal cone");
        for (int i : mc)
            if (i < 0 || i >= static_cast<int>(rays.size())) throw validation_error("cone ray index out of range");
        if (!std::is_sorted(mc.begin(), mc.end())) throw validation_error("cone ray indices must be sorted");
        PolyCone c = cone_of(mc);
        if (!c.is_strongly_convex()) throw validation_error("maximal cone is not strongly convex");
    }
    // pairwise intersections must be faces of both
    std::vector<PolyCone> cones;
    for (const auto& mc : max_cones) cones.push_back(cone_of(mc));
    for (size_t a = 0; a < cones.size(); ++a)
        for (size_t b = a + 1; b < cones.size(); ++b) {
            PolyCone inter = intersect_cones(cones[a], cones[b]);
            if (!is_face_of(cones[a], inter) || !is_face_of(cones[b], inter))
                throw validation_error("fan condition violated between maximal cones " + std::to_string(a) +
                                       " and " + std::to_string(b));
        }
    // support check (volume cover) for full-dimensional simplicial fans
    bool simplicial_full = true;
    for (const auto& mc : max_cones)
        if (static_cast<int>(mc.size()) != nn) simplicial_full = false;
    if (simplicial_full && all_simplicial()) {
        Rat vol(0);
        for (const auto& mc : max_cones) {
            RatMat m;
            for (int i : mc) m.push_back(rays[i]);
            Rat d = mat_det(std::move(m));
            vol += d < 0 ? Rat(-d) : d;
        }
        if (vol != 1) throw validation_error("fan support does not cover the coordinate cone");
    }
}

Fan initial_fan(AbelianActionPtr group) {
    Fan f;
    f.group = group;
    f.lattice_basis = group->lattice_basis;
    int n = group->n;
    std::vector<int> cone;
    for (int j = 0; j < n; ++j) {
        f.rays.push_back(rv_unit(n, j));
        f.labels.push_back(RayLabel{false, j, group->element_index(rv_unit(n, j))});
        cone.push_back(j);
    }
    f.max_cones.push_back(cone);
    f.validate();
    return f;
}

Fan star_subdivide(const Fan& fan, const RatVec& v) {
    int n = fan.n();
    if (static_cast<int>(v.size()) != n) throw usage_error("subdivision point dimension mismatch");
    if (!fan.in_lattice(v)) throw validation_error("subdivision point is not a lattice point: " + rv_to_string(v));
    {
        RatVec c = fan.lattice_coords(v);
        if (iv_gcd(rv_to_int(c)) != 1)
            throw validation_error("subdivision point is not primitive: " + rv_to_string(v));
    }
    if (fan.ray_index(v) >= 0) throw validation_error("subdivision point is already a ray: " + rv_to_string(v));
    if (!fan.all_simplicial()) throw usage_error("star subdivision requires a simplicial fan");

    bool inside = false;
    Fan out;
    out.group = fan.group;
    out.lattice_basis = fan.lattice_basis;
    out.rays = fan.rays;
    out.labels = fan.labels;
    int new_ray = static_cast<int>(out.rays.size());
    out.rays.push_back(v);
    {
        RayLabel l;
        l.exceptional = true;
        l.index = fan.exceptional_count();
        l.junior_element = fan.group->element_index(rv_mod1(v));
        if (l.junior_element >= 0 && rv_compare(fan.group->elements[l.junior_element], v) != 0)
            l.junior_element = -1; // point of the lattice but not a group weight vector
        out.labels.push_back(l);
    }

    for (const auto& mc : fan.max_cones) {
        RatMat m;
        for (int i : mc) m.push_back(fan.rays[i]);
        RatVec coeff;
        bool in_span = mat_solve_left(m, v, coeff);
        bool in_cone = in_span;
        if (in_span)
            for (const auto& c : coeff)
                if (c < 0) in_cone = false;
        if (!in_cone) {
            out.max_cones.push_back(mc);
            continue;
        }
        inside = true;
        for (size_t l = 0; l < mc.size(); ++l) {
            if (coeff[l] == 0) continue; // v lies on the facet omitting this ray
            std::vector<int> nc;
            for (size_t t = 0; t < mc.size(); ++t)
                if (t != l) nc.push_back(mc[t]);
            nc.push_back(new_ray);
            std::sort(nc.begin(), nc.end());
            out.max_cones.push_back(nc);
        }
    }
    if (!inside) throw validation_error("subdivision point lies outside the fan support: " + rv_to_string(v));
    out.validate();
    return out;
}

FanClass classify_fan(const Fan& fan) {
    FanClass out;
    out.simplicial = fan.all_simplicial();
    out.crepant = true;
    for (const auto& r : fan.rays)
        if (rv_coord_sum(r) != 1) out.crepant = false;

    out.smooth = out.simplicial;
    if (out.smooth) {
        for (const auto& mc : fan.max_cones) {
            if (static_cast<int>(mc.size()) != fan.n()) {
                out.smooth = false;
                break;
            }
            RatMat coords;
            for (int i : mc) coords.push_back(fan.lattice_coords(fan.rays[i]));
            Rat d = mat_det(std::move(coords));
            if (d != 1 && d != -1) {
                out.smooth = false;
                break;
            }
        }
    }

    std::set<std::string> ray_set;
    for (const auto& r : fan.rays) ray_set.insert(rv_to_string(r));
    std::set<std::string> want;
    for (int j = 0; j < fan.n(); ++j) want.insert(rv_to_string(rv_unit(fan.n(), j)));
    for (int g : fan.group->junior_elements()) want.insert(rv_to_string(fan.group->elements[g]));
    out.relative_minimal_model = out.simplicial && ray_set == want;
    return out;
}

ResolveResult resolve(AbelianActionPtr group, std::optional<std::vector<int>> junior_order) {
    std::vector<int> juniors = group->junior_elements();
    std::vector<int> order = junior_order.value_or(juniors);
    {
        std::set<int> a(order.begin(), order.end()), b(juniors.begin(), juniors.end());
        if (a != b || order.size() != juniors.size())
            throw validation_error("junior_order must be a permutation of the junior elements");
    }
    ResolveResult out{initial_fan(group), {}};
    for (int g : order) {
        const RatVec& v = group->elements.at(g);
        if (out.fan.ray_index(v) >= 0) continue; // already present; noted by omission from history
        out.fan = star_subdivide(out.fan, v);
        out.history.push_back(v);
    }
    return out;
}

} // namespace mmk
