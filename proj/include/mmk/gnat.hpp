#pragma once

#include <memory>
#include <vector>

#include "mmk/fan.hpp"
#include "mmk/mckay.hpp"
#include "mmk/polycone.hpp"

namespace mmk {

// A gnat family on a toric partial resolution: the rational coefficient
// matrix b[i][k] of the divisors D_{rho_i} = sum_k b[i][k] E_k, normalized so
// that b[0][k] = 0. Validity means the reductor condition
//   c(i,j,k) = b[i][k] + v_{g_k,j} - b[k(i,j)][k]  in  Z_{>=0}
// for every vertex i, coordinate j and exceptional ray k.
struct GnatFamily {
    std::shared_ptr<const Fan> fan;
    McKayQuiver quiver;
    RatMat b; // r x m

    int r() const { return quiver.r; }
    int n() const { return quiver.n; }
    int m() const { return static_cast<int>(fan->exceptional_count()); }
    // weight vector of the junior element attached to exceptional ray k
    const RatVec& junior_vector(int k) const;
    Rat reductor_c(int i, int j, int k) const;
};

GnatFamily make_family(std::shared_ptr<const Fan> fan, RatMat b);
GnatFamily canonical_family(std::shared_ptr<const Fan> fan);

// distinguished fiber over the cone given by fan ray indices
Pattern fiber(const GnatFamily& f, const std::vector<int>& cone);
// fiber at the exceptional ray k, with the connectivity guarantee checked
Pattern exceptional_fiber(const GnatFamily& f, int k);

// Laurent monomial exponents m_i attached to a full-dimensional simplicial cone
std::vector<RatVec> fiber_monomials(const GnatFamily& f, const std::vector<int>& cone);

struct ThetaConeInfo {
    PolyCone cone; // in sum-zero R^r
    int dim = 0;
    int summands = 0;
};
ThetaConeInfo theta_cone(const GnatFamily& f, const std::vector<int>& cone);

// coefficient shift exchanging the subrepresentation on S (closed in the
// fiber at exceptional ray ell) with its complement
GnatFamily twist(const GnatFamily& f, int ell, const std::vector<int>& s);

// repeated facet-crossing twists until theta lies in the Theta-cone of every
// exceptional-ray fiber; theta must be generic
GnatFamily walk(const GnatFamily& f, const ThetaVec& theta);

} // namespace mmk
