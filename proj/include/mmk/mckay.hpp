#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mmk/group.hpp"

namespace mmk {

// McKay quiver of an abelian action: one vertex per irreducible character,
// one arrow (i,j) per vertex and coordinate, with head k(i,j).
class McKayQuiver {
public:
    AbelianActionPtr group;
    int r = 1;
    int n = 0;

    int k(int i, int j) const { return group->k_table[i][j]; }
    // T^r-weight of the arrow coordinate x_{i,j}: e_{k(i,j)} - e_i (sum zero)
    RatVec wt(int i, int j) const;
};

McKayQuiver build_mckay(AbelianActionPtr group);

// 0/1 support matrix of a distinguished quiver representation
struct Pattern {
    int r = 1;
    int n = 0;
    std::vector<std::vector<char>> p;

    bool get(int i, int j) const { return p[i][j] != 0; }
    void set(int i, int j, bool v) { p[i][j] = v ? 1 : 0; }
    bool operator==(const Pattern& o) const { return r == o.r && n == o.n && p == o.p; }
};

Pattern empty_pattern(int r, int n);

// stability parameter: rational vector of length r summing to zero
struct ThetaVec {
    RatVec theta;
};
ThetaVec make_theta(RatVec v);

bool validate_pattern(const McKayQuiver& q, const Pattern& pat);
// connected components of the undirected support graph (vertex partition)
std::vector<std::vector<int>> components(const McKayQuiver& q, const Pattern& pat);
// all successor-closed vertex subsets (submodule supports), including {} and all
std::vector<std::vector<int>> closed_subsets(const McKayQuiver& q, const Pattern& pat);

enum class Stability { Stable, Semistable, Unstable };
std::string to_string(Stability s);
Stability check_stability(const McKayQuiver& q, const Pattern& pat, const ThetaVec& theta);

// DOT export of the full quiver; when a pattern is given, only its supported
// arrows are drawn solid and the rest dashed
std::string quiver_dot(const McKayQuiver& q, const Pattern* support = nullptr);

} // namespace mmk
