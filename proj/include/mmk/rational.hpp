#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mmk/errors.hpp"

namespace mmk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// floor and representative in [0,1)
Int rat_floor(const Rat& q);
Rat rat_frac(const Rat& q);
bool rat_is_integer(const Rat& q);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s); // "3/4", "-2", "0"

// vector helpers
RatVec rv_zero(int dim);
RatVec rv_unit(int dim, int j);
RatVec rv_add(const RatVec& a, const RatVec& b);
RatVec rv_sub(const RatVec& a, const RatVec& b);
RatVec rv_scale(const Rat& c, const RatVec& a);
Rat rv_dot(const RatVec& a, const RatVec& b);
bool rv_is_zero(const RatVec& a);
RatVec rv_mod1(const RatVec& a);
Rat rv_coord_sum(const RatVec& a);
int rv_compare(const RatVec& a, const RatVec& b); // lexicographic
std::string rv_to_string(const RatVec& a);

// scale to an integer vector with content 1, preserving direction; zero stays zero
RatVec rv_primitive(const RatVec& a);
// true if all entries are integers
bool rv_is_integral(const RatVec& a);
IntVec rv_to_int(const RatVec& a);
RatVec rv_from_int(const IntVec& a);
Int iv_gcd(const IntVec& a);

// dense exact linear algebra (desk scale)
int mat_rank(RatMat m);
// solve x * m = rhs for a row vector x (m: k x d, rhs: d); empty result if inconsistent
bool mat_solve_left(const RatMat& m, const RatVec& rhs, RatVec& x);
// inverse of a square matrix; throws usage_error when singular
RatMat mat_inverse(const RatMat& m);
Rat mat_det(RatMat m);
RatMat mat_transpose(const RatMat& m);
RatVec mat_apply(const RatMat& m, const RatVec& v);      // m * v (rows dot v)
RatVec mat_apply_left(const RatVec& v, const RatMat& m); // v * m

} // namespace mmk
