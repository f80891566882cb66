#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmk/gnat.hpp"

namespace mmk {

struct CoxGenerator {
    std::string label;
    bool is_coordinate = false; // y_j when true, z_k otherwise
    int index = 0;              // j or k, 0-based
    RatVec valuation;           // over exceptional rays
};
std::vector<CoxGenerator> cox_generators(const Fan& fan);

struct PhiEntry {
    int j = 0;          // coordinate of the arrow
    RatVec t_exponents; // (b[k(i,j)][k] - b[i][k])_k, rational
};
// table indexed [i][j]
std::vector<std::vector<PhiEntry>> phi_map(const GnatFamily& f);

// matrix of psi^* on characters: entry [k][i-1] = grading_k * b[i][k]
IntMat psi_matrix(const GnatFamily& f, std::optional<std::vector<Int>> grading_orders = std::nullopt);

// Character lattice M_V of the orbit-closure torus of the coherent component,
// as the subgroup of Z^(r-1) + Z^n generated by the arrow weights
// mu(i,j) = (wt(i,j), f_j); N_V is its dual, carried in coordinates dual to
// the HNF basis of M_V.
struct MVLattice {
    int r = 1, n = 0, q = 0; // q = rank
    IntMat basis;            // q rows of length (r-1)+n, HNF
    IntMat mu;               // (r*n) rows, mu[(i*n)+j]
    IntMat mu_coords;        // mu in basis coordinates, rows of length q
    IntMat invariant_basis;  // n rows of length n: basis of M_G (second block)
    RatMat qg;               // n x q: the projection N_V -> N_G
};
MVLattice mv_lattice(const McKayQuiver& quiver);

// cone of the normalized coherent component attached to a cone of the fan,
// in N_V coordinates
PolyCone sigma_tilde(const MVLattice& mv, const GnatFamily& f, const std::vector<int>& cone);
// image under the projection to (N_G)_R
PolyCone qg_image(const MVLattice& mv, const PolyCone& tilde);

enum class ModuliVerdict { FineModuli, NotFine };

struct QuotientFanReport {
    ModuliVerdict verdict = ModuliVerdict::NotFine;
    bool alpha_is_iso = false;
    std::vector<std::vector<int>> witness_cones; // max cones with decomposable fibers
    std::vector<int> contracted_rays;            // ray indices of the fan absent from Sigma_F
    std::vector<PolyCone> sigma_f_max;           // maximal cones of Sigma_F
    std::vector<std::vector<RatVec>> sigma_f_max_gens; // minimal generators, N_G-primitive
    std::vector<RatVec> sigma_f_rays;
};
QuotientFanReport quotient_fan(const GnatFamily& f);

} // namespace mmk
