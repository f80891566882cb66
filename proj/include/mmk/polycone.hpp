#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmk/rational.hpp"

namespace mmk {

// Finitely generated rational cone. Generators may include opposite pairs
// spanning a lineality space, so the type covers non-pointed cones (duals of
// lower-dimensional cones). Generators are stored as primitive integer
// vectors; the halfspace (inner normal) representation is computed lazily and
// cached. Values are immutable after construction.
class PolyCone {
public:
    PolyCone() : ambient_(0) {}
    PolyCone(int ambient_dim, std::vector<RatVec> generators);

    int ambient_dim() const { return ambient_; }
    const std::vector<RatVec>& generators() const { return gens_; }

    // Inner normals; a vector lies in the cone iff it pairs >= 0 with all of
    // them. Includes opposite pairs cutting out the cone's linear span.
    const std::vector<RatVec>& halfspaces() const;

    int dim() const;
    bool is_strongly_convex() const;
    bool contains(const RatVec& v) const;

    // canonical identity for point-set dedup (sorted primitive extreme rays +
    // HNF lineality basis)
    std::string key() const;

private:
    int ambient_;
    std::vector<RatVec> gens_;
    mutable std::shared_ptr<const std::vector<RatVec>> halfspace_cache_;
};

// Minimal generator description of {x : <a,x> >= 0 for all a}: extreme rays
// modulo lineality, plus a basis of the lineality space.
struct GeneratorDescription {
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
};
GeneratorDescription generators_from_halfspaces(int dim, const std::vector<RatVec>& inequalities);

// flatten rays + (±)lineality into one generator list
std::vector<RatVec> flatten_generators(const GeneratorDescription& g);

PolyCone cone_from_halfspaces(int dim, const std::vector<RatVec>& inequalities);

PolyCone dual_cone(const PolyCone& c);
bool cone_contains(const PolyCone& c, const RatVec& v);
bool cone_subset(const PolyCone& a, const PolyCone& b); // a ⊆ b
bool cone_equal(const PolyCone& a, const PolyCone& b);  // point-set equality
PolyCone intersect_cones(const PolyCone& a, const PolyCone& b);
// smallest face of a containing s; s must be contained in a
PolyCone minimal_face(const PolyCone& a, const PolyCone& s);
bool is_face_of(const PolyCone& a, const PolyCone& f);
// every face, the cone itself and the zero face included
std::vector<PolyCone> all_faces(const PolyCone& c);
// cone generated by the union of generators
PolyCone cone_hull(const PolyCone& a, const PolyCone& b);

} // namespace mmk
