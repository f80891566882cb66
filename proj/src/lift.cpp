#include "mmk/lift.hpp"

#include <algorithm>
#include <set>

namespace mmk {

RatVec ChartContext::to_chart(const RatVec& w) const {
    int n = parent->n;
    RatVec out(n);
    Rat t = w[ell] / v[ell];
    out[ell] = t;
    for (int j = 0; j < n; ++j)
        if (j != ell) out[j] = w[j] - t * v[j];
    return out;
}

RatVec ChartContext::from_chart(const RatVec& w) const {
    int n = parent->n;
    RatVec out = rv_scale(w[ell], v);
    for (int j = 0; j < n; ++j)
        if (j != ell) out[j] += w[j];
    return out;
}

bool ChartContext::floor_jump(int i, int j) const {
    Rat s = rat_frac(rv_dot(parent->char_reps[i], v));
    return s + v[j] >= 1;
}

RatVec round_down(const ChartContext& ctx, const RatVec& monomial) {
    if (!rv_is_integral(monomial)) throw usage_error("round-down expects an integral monomial");
    int n = ctx.parent->n;
    RatVec out(n);
    for (int j = 0; j < n; ++j)
        if (j != ctx.ell) out[j] = monomial[j];
    out[ctx.ell] = Rat(rat_floor(rv_dot(ctx.v, monomial)));
    return out;
}

int round_down_char(const ChartContext& ctx, int i) { return ctx.char_map.at(i); }

ChartContext chart_context(AbelianActionPtr group, const RatVec& v, int ell) {
    int n = group->n;
    if (ell < 0 || ell >= n) throw usage_error("chart coordinate out of range");
    if (static_cast<int>(v.size()) != n) throw usage_error("chart point dimension mismatch");
    if (v[ell] == 0) throw usage_error("chart requires a nonzero coordinate at the omitted slot");
    {
        int g = group->element_index(rv_mod1(v));
        if (g < 0 || rv_compare(group->elements[g], v) != 0 || group->age(g) != 1)
            throw usage_error("chart point must be the weight vector of a junior element");
    }

    ChartContext ctx;
    ctx.parent = group;
    ctx.parent_quiver = build_mckay(group);
    ctx.v = v;
    ctx.ell = ell;

    ctx.xi_basis.assign(n, RatVec());
    for (int j = 0; j < n; ++j) {
        if (j == ell) {
            ctx.xi_basis[j] = rv_scale(Rat(1) / v[ell], rv_unit(n, ell));
        } else {
            RatVec e = rv_unit(n, j);
            e[ell] = -v[j] / v[ell];
            ctx.xi_basis[j] = e;
        }
    }

    // chart group: closure of the images of e_ell and all parent weight vectors
    std::vector<GeneratorSpec> gens;
    auto add_gen = [&](const RatVec& w) {
        RatVec c = rv_mod1(ctx.to_chart(w));
        Int l = 1;
        for (const auto& x : c) l = lcm(l, rat_den(x));
        GeneratorSpec spec;
        spec.order = static_cast<long>(l);
        for (const auto& x : c) spec.weights.push_back(static_cast<long>(rat_num(x) * (l / rat_den(x))));
        gens.push_back(std::move(spec));
    };
    add_gen(rv_unit(n, ell));
    for (const auto& w : group->elements) add_gen(w);
    ctx.chart_group = build_group(n, gens);
    ctx.chart_quiver = build_mckay(ctx.chart_group);
    {
        Rat expect = Rat(group->r) * v[ell];
        if (!rat_is_integer(expect) || Rat(ctx.chart_group->r) != expect)
            throw internal_error("chart group order " + std::to_string(ctx.chart_group->r) +
                                 " does not match the lattice index");
    }

    // round-down on characters, with representative independence checked over
    // a basis of the invariant monomial lattice
    RatMat mg = invariant_monomial_basis(*group);
    for (int i = 0; i < group->r; ++i) {
        RatVec rd = round_down(ctx, group->char_reps[i]);
        int cls = ctx.chart_group->char_class_of(rd);
        for (const auto& mu : mg) {
            RatVec rd2 = round_down(ctx, rv_add(group->char_reps[i], mu));
            if (ctx.chart_group->char_class_of(rd2) != cls)
                throw internal_error("round-down is not well-defined on character " + std::to_string(i));
        }
        ctx.char_map.push_back(cls);
    }
    {
        std::set<int> hit(ctx.char_map.begin(), ctx.char_map.end());
        if (static_cast<int>(hit.size()) != ctx.chart_group->r)
            throw internal_error("round-down is not surjective onto the chart characters");
    }
    return ctx;
}

ArrowCase classify_arrow(const ChartContext& ctx, int i, int j) {
    bool jump = ctx.floor_jump(i, j);
    ArrowCase c;
    if (j == ctx.ell)
        c = jump ? ArrowCase::Case1 : ArrowCase::Case3;
    else
        c = jump ? ArrowCase::Case2 : ArrowCase::Case1;
    // character-level consistency
    int head = ctx.char_map[ctx.parent_quiver.k(i, j)];
    int base = ctx.char_map[i];
    const McKayQuiver& cq = ctx.chart_quiver;
    bool ok = false;
    switch (c) {
    case ArrowCase::Case1: ok = head == cq.k(base, j); break;
    case ArrowCase::Case2: ok = head == cq.k(cq.k(base, ctx.ell), j); break;
    case ArrowCase::Case3: ok = head == base; break;
    }
    if (!ok) throw internal_error("arrow classification is inconsistent with the chart characters");
    return c;
}

Pattern lift_pattern(const ChartContext& ctx, const Pattern& chart_pattern) {
    const McKayQuiver& cq = ctx.chart_quiver;
    if (chart_pattern.r != cq.r || chart_pattern.n != cq.n) throw usage_error("chart pattern shape mismatch");
    if (!validate_pattern(cq, chart_pattern)) throw usage_error("chart pattern violates the quiver relations");
    int r = ctx.parent->r, n = ctx.parent->n;
    Pattern out = empty_pattern(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            int base = ctx.char_map[i];
            bool on = true;
            switch (classify_arrow(ctx, i, j)) {
            case ArrowCase::Case1: on = chart_pattern.get(base, j); break;
            case ArrowCase::Case2:
                on = chart_pattern.get(base, ctx.ell) && chart_pattern.get(cq.k(base, ctx.ell), j);
                break;
            case ArrowCase::Case3: on = true; break;
            }
            out.set(i, j, on);
        }
    if (!validate_pattern(ctx.parent_quiver, out))
        throw internal_error("lifted pattern violates the quiver relations");
    return out;
}

Pattern push_pattern(const ChartContext& ctx, const Pattern& pattern) {
    const McKayQuiver& pq = ctx.parent_quiver;
    if (pattern.r != pq.r || pattern.n != pq.n) throw usage_error("pattern shape mismatch");
    if (!validate_pattern(pq, pattern)) throw usage_error("pattern violates the quiver relations");
    int rc = ctx.chart_group->r, n = ctx.parent->n;
    Pattern out = empty_pattern(rc, n);
    for (int ic = 0; ic < rc; ++ic)
        for (int j = 0; j < n; ++j) {
            bool found = false, value = false;
            for (int i = 0; i < ctx.parent->r; ++i) {
                if (ctx.char_map[i] != ic) continue;
                if (classify_arrow(ctx, i, j) != ArrowCase::Case1) continue;
                bool v = pattern.get(i, j);
                if (!found) {
                    found = true;
                    value = v;
                } else if (v != value) {
                    throw usage_error("pattern is not liftable: inconsistent values over chart arrow (" +
                                      std::to_string(ic) + "," + std::to_string(j + 1) + ")");
                }
            }
            if (!found) throw internal_error("no direct preimage for a chart arrow");
            out.set(ic, j, value);
        }
    if (!validate_pattern(ctx.chart_quiver, out))
        throw usage_error("pattern is not liftable: its push-down violates the quiver relations");
    return out;
}

RatVec solve_b_from_pattern(const Fan& fan, const Pattern& pattern, int k) {
    McKayQuiver q = build_mckay(fan.group);
    if (pattern.r != q.r || pattern.n != q.n) throw usage_error("pattern shape mismatch");
    int g = fan.labels[fan.exceptional_ray(k)].junior_element;
    if (g < 0) throw usage_error("exceptional ray is not a group weight vector");
    const RatVec& vg = fan.group->elements[g];
    if (components(q, pattern).size() != 1) throw usage_error("coefficient recovery requires a connected pattern");

    int r = q.r;
    RatVec b(r);
    std::vector<char> known(r, 0);
    known[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int i2 = 0; i2 < r; ++i2)
            for (int j = 0; j < q.n; ++j) {
                if (!pattern.get(i2, j)) continue;
                int head = q.k(i2, j);
                if (i2 == i && !known[head]) {
                    b[head] = b[i] + vg[j];
                    known[head] = 1;
                    queue.push_back(head);
                }
                if (head == i && !known[i2]) {
                    b[i2] = b[i] - vg[j];
                    known[i2] = 1;
                    queue.push_back(i2);
                }
            }
    }
    for (int i = 0; i < r; ++i)
        if (!known[i]) throw internal_error("connected pattern left an unreached vertex");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q.n; ++j) {
            Rat c = b[i] + vg[j] - b[q.k(i, j)];
            if (pattern.get(i, j) && c != 0)
                throw validation_error("pattern is inconsistent along supported arrow (" + std::to_string(i) +
                                       "," + std::to_string(j + 1) + ")");
            if (!rat_is_integer(c) || c < 0)
                throw validation_error("recovered column violates the reductor condition at (" +
                                       std::to_string(i) + "," + std::to_string(j + 1) + ")");
        }
    return b;
}

namespace {

struct BuildOut {
    RatMat b;
    std::vector<ChartReport> charts;
};

BuildOut build_columns(AbelianActionPtr g, const std::vector<int>& ord, const Fan& fan_g) {
    int r = g->r, n = g->n;
    int m = static_cast<int>(ord.size());
    BuildOut out;
    out.b.assign(r, RatVec(m, Rat(0)));
    if (m == 0) return out;
    std::vector<char> have(m, 0);

    int g1 = ord[0];
    const RatVec v = g->elements[g1];
    for (int i = 0; i < r; ++i) out.b[i][0] = g->char_pairing(i, g1);
    have[0] = 1;

    // base-case consistency: the one-blow-up canonical fibers obey the
    // closed-form description b[i][0] + v_ell = b[k(i,ell)][0]
    auto x1 = std::make_shared<Fan>(star_subdivide(initial_fan(g), v));
    {
        RatMat col(r, RatVec(1));
        for (int i = 0; i < r; ++i) col[i][0] = out.b[i][0];
        GnatFamily fam1 = make_family(x1, col);
        for (int ell = 0; ell < n; ++ell) {
            if (v[ell] == 0) continue;
            std::vector<int> cone;
            for (int j = 0; j < n; ++j)
                if (j != ell) cone.push_back(x1->coordinate_ray(j));
            cone.push_back(x1->exceptional_ray(0));
            std::sort(cone.begin(), cone.end());
            Pattern fib = fiber(fam1, cone);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) {
                    bool expect = (j == ell) && (out.b[i][0] + v[ell] == out.b[fam1.quiver.k(i, ell)][0]);
                    if (fib.get(i, j) != expect)
                        throw internal_error("one-blow-up fiber disagrees with its closed form");
                }
        }
    }

    for (int ell = 0; ell < n; ++ell) {
        if (v[ell] == 0) continue;
        auto ctx = std::make_shared<const ChartContext>(chart_context(g, v, ell));
        if (ctx->chart_group->r == 1) continue;

        std::vector<RatVec> chart_cone_gens;
        for (int j = 0; j < n; ++j)
            if (j != ell) chart_cone_gens.push_back(rv_unit(n, j));
        chart_cone_gens.push_back(v);
        PolyCone sigma_ell(n, chart_cone_gens);

        std::vector<int> chart_ord;      // chart element ids, in parent order
        std::vector<int> parent_columns; // parent exceptional index per entry
        for (int t = 1; t < m; ++t) {
            const RatVec& w = g->elements[ord[t]];
            if (!cone_contains(sigma_ell, w)) continue;
            RatVec wc = rv_mod1(ctx->to_chart(w));
            int ce = ctx->chart_group->element_index(wc);
            if (ce < 0 || ctx->chart_group->age(ce) != 1)
                throw internal_error("junior inside a chart does not map to a chart junior");
            chart_ord.push_back(ce);
            parent_columns.push_back(t);
        }
        {
            std::set<int> mapped(chart_ord.begin(), chart_ord.end());
            auto cj = ctx->chart_group->junior_elements();
            std::set<int> all(cj.begin(), cj.end());
            if (mapped != all || mapped.size() != chart_ord.size())
                throw internal_error("chart juniors do not match the rays inside the chart");
        }

        auto chart_fan = std::make_shared<Fan>(resolve(ctx->chart_group, chart_ord).fan);
        BuildOut sub = build_columns(ctx->chart_group, chart_ord, *chart_fan);
        GnatFamily chart_family = make_family(chart_fan, sub.b);

        ChartReport report;
        report.ctx = ctx;
        report.children = std::move(sub.charts);
        for (size_t t = 0; t < chart_ord.size(); ++t) {
            Pattern cp = exceptional_fiber(chart_family, static_cast<int>(t));
            Pattern lifted = lift_pattern(*ctx, cp);
            RatVec col = solve_b_from_pattern(fan_g, lifted, parent_columns[t]);
            int pk = parent_columns[t];
            if (have[pk]) {
                for (int i = 0; i < r; ++i)
                    if (out.b[i][pk] != col[i])
                        throw internal_error("chart gluing mismatch on column " + std::to_string(pk + 1));
            } else {
                for (int i = 0; i < r; ++i) out.b[i][pk] = col[i];
                have[pk] = 1;
            }
            report.parent_columns.push_back(pk);
            report.chart_patterns.push_back(std::move(cp));
            report.lifted_patterns.push_back(std::move(lifted));
        }
        out.charts.push_back(std::move(report));
    }
    for (int k = 0; k < m; ++k)
        if (!have[k]) throw internal_error("column " + std::to_string(k + 1) + " was not reached by any chart");
    return out;
}

} // namespace

SpecialFamilyResult build_special_family(AbelianActionPtr group, std::optional<std::vector<int>> junior_order) {
    std::vector<int> juniors = group->junior_elements();
    std::vector<int> ord = junior_order.value_or(juniors);
    ResolveResult res = resolve(group, ord);
    auto fan = std::make_shared<Fan>(std::move(res.fan));
    if (fan->exceptional_count() != static_cast<int>(ord.size()))
        throw internal_error("resolution skipped a junior subdivision");

    BuildOut cols = build_columns(group, ord, *fan);
    SpecialFamilyResult out{fan, make_family(fan, std::move(cols.b)), std::move(cols.charts)};
    return out;
}

} // namespace mmk
