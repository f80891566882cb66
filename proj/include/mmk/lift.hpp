#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mmk/gnat.hpp"

namespace mmk {

// Chart data at a star-subdivision point v with omitted coordinate ell: the
// quotient group G_ell = N_G / <v, e_j (j != ell)> acting in the chart
// coordinates xi_1..xi_n, and the round-down map on characters.
struct ChartContext {
    AbelianActionPtr parent;
    McKayQuiver parent_quiver;
    RatVec v;
    int ell = 0;           // 0-based omitted coordinate
    RatMat xi_basis;       // exponent vectors of xi_1..xi_n in M ⊗ Q
    AbelianActionPtr chart_group;
    McKayQuiver chart_quiver;
    std::vector<int> char_map; // rho_i -> index of the rounded-down character

    // ambient Q^n -> chart coordinates (w = sum w'_j e_j with e_ell replaced by v)
    RatVec to_chart(const RatVec& w) const;
    RatVec from_chart(const RatVec& w) const;
    // whether pairing <m_i, v> + v_j crosses an integer (the floor jump)
    bool floor_jump(int i, int j) const;
};

ChartContext chart_context(AbelianActionPtr group, const RatVec& v, int ell);

// round-down of an integral monomial into chart exponents
RatVec round_down(const ChartContext& ctx, const RatVec& monomial);
int round_down_char(const ChartContext& ctx, int i);

enum class ArrowCase { Case1, Case2, Case3 };
ArrowCase classify_arrow(const ChartContext& ctx, int i, int j);

// lift of a distinguished chart constellation to the full group
Pattern lift_pattern(const ChartContext& ctx, const Pattern& chart_pattern);
// inverse direction; the input must arise from a fiber over the chart
Pattern push_pattern(const ChartContext& ctx, const Pattern& pattern);

// recover a coefficient column from a connected distinguished pattern at the
// exceptional ray k by propagating b along supported arrows from b[0] = 0
RatVec solve_b_from_pattern(const Fan& fan, const Pattern& pattern, int k);

struct ChartReport {
    std::shared_ptr<const ChartContext> ctx;
    std::vector<int> parent_columns;       // exceptional indices recovered via this chart
    std::vector<Pattern> chart_patterns;   // chart fiber per recovered column
    std::vector<Pattern> lifted_patterns;  // its lift per recovered column
    std::vector<ChartReport> children;
};

struct SpecialFamilyResult {
    std::shared_ptr<const Fan> fan;
    GnatFamily family;
    std::vector<ChartReport> charts;
};

// The recursive family over the iterated blow-up resolution: canonical column
// at the first junior, then per chart the lift of the recursively built
// family of the chart quotient group.
SpecialFamilyResult build_special_family(AbelianActionPtr group,
                                         std::optional<std::vector<int>> junior_order = std::nullopt);

} // namespace mmk
