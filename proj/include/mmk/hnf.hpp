#pragma once

#include "mmk/rational.hpp"

namespace mmk {

// Row-style Hermite normal form of the lattice generated by the input rows:
// pivots positive and strictly to the right as rows descend, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped; the result is the
// canonical basis of the row lattice.
IntMat hnf_rows(IntMat rows);

// HNF of A together with a basis of the left kernel {c : c*A = 0} (integer rows).
struct HnfKernel {
    IntMat hnf;
    IntMat kernel;
};
HnfKernel hnf_with_left_kernel(const IntMat& a);

// Smith normal form diagonal d_1 | d_2 | ... of a square integer matrix plus
// the right transform V (unimodular) with U*A*V diagonal.
struct SmithResult {
    IntVec diag;
    IntMat right; // V
};
SmithResult smith_normal_form(IntMat a);

// Spec-facing wrapper: vectors must be integral.
struct HnfBasis {
    RatMat basis;
    int rank;
};
HnfBasis hnf_basis(const RatMat& vectors);

} // namespace mmk
