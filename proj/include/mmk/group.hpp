#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mmk/rational.hpp"

namespace mmk {

struct GeneratorSpec {
    long order = 1;
    std::vector<long> weights;
};

// A finite abelian subgroup of SL_n(C) acting diagonally, stored as weight
// vectors v_g in [0,1)^n. Irreducible characters are represented by monomial
// exponent vectors in Z^n; rho_0 is trivial. Immutable after build.
class AbelianAction {
public:
    int n = 0;
    int r = 1;
    std::vector<RatVec> elements;  // v_g, identity first (BFS closure order)
    std::vector<long> orders;      // r_g
    std::vector<RatVec> char_reps; // integral exponent vectors m_i, rho_0 = 0 first
    std::vector<int> chi_index;    // character index of x_j, j = 0..n-1
    std::vector<std::vector<int>> k_table; // k(i,j): class of m_i + f_j
    RatMat lattice_basis;          // Z-basis of N_G = Z^n + sum Z v_g, HNF rows / scale

    long age(int g) const;
    std::vector<int> junior_elements() const;
    // representative in [0,1) of <rho_i, g> in Q/Z
    Rat char_pairing(int i, int g) const;
    // class index of an integral exponent vector
    int char_class_of(const RatVec& monomial) const;
    // element lookup by weight vector (exact); -1 when absent
    int element_index(const RatVec& v) const;
    bool is_cyclic() const;
    // pairing of an arbitrary integral monomial with element g, in [0,1)
    Rat monomial_pairing(const RatVec& monomial, int g) const;
};

using AbelianActionPtr = std::shared_ptr<const AbelianAction>;

AbelianActionPtr build_group(int n, const std::vector<GeneratorSpec>& generators);

// HNF basis of the invariant monomial lattice M_G = {m : <m, v_g> in Z for all g}
RatMat invariant_monomial_basis(const AbelianAction& g);

// human-readable monomial such as "x^2*y" (x,y,z,w for n <= 4, else x1..xn)
std::string monomial_string(const RatVec& exponents);

} // namespace mmk
