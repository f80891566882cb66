#pragma once

#include <optional>
#include <vector>

#include "mmk/group.hpp"
#include "mmk/polycone.hpp"

namespace mmk {

struct RayLabel {
    bool exceptional = false;
    int index = 0;           // coordinate j or exceptional k, 0-based
    int junior_element = -1; // group element id when the ray is v_g, else -1
};

// A fan in (N_G)_R supported on the cone spanned by e_1..e_n. Rays are stored
// N_G-primitive in ambient Q^n coordinates; maximal cones are sorted ray-index
// sets. The fan condition is checked on construction.
class Fan {
public:
    AbelianActionPtr group;
    RatMat lattice_basis; // Z-basis of N_G (rows)
    std::vector<RatVec> rays;
    std::vector<RayLabel> labels;
    std::vector<std::vector<int>> max_cones;

    int n() const { return group->n; }
    int exceptional_count() const;
    // ray index of an exceptional label k, or of a coordinate label j
    int exceptional_ray(int k) const;
    int coordinate_ray(int j) const;
    int ray_index(const RatVec& v) const; // -1 when absent
    // group element id of exceptional ray k
    int exceptional_element(int k) const;
    PolyCone cone_of(const std::vector<int>& ray_indices) const;
    // true when the sorted index set is a face of some maximal cone
    bool is_cone(const std::vector<int>& ray_indices) const;
    // coordinates of a lattice vector in lattice_basis (must be integral)
    RatVec lattice_coords(const RatVec& v) const;
    bool in_lattice(const RatVec& v) const;
    bool all_simplicial() const;

    void validate() const; // fan condition + support check
};

struct FanClass {
    bool simplicial = false;
    bool smooth = false;
    bool crepant = false;
    bool relative_minimal_model = false;
};

Fan initial_fan(AbelianActionPtr group);
Fan star_subdivide(const Fan& fan, const RatVec& v);
FanClass classify_fan(const Fan& fan);

struct ResolveResult {
    Fan fan;
    std::vector<RatVec> history; // subdivision points actually applied
};
ResolveResult resolve(AbelianActionPtr group, std::optional<std::vector<int>> junior_order = std::nullopt);

} // namespace mmk
