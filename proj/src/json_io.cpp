#include "mmk/json_io.hpp"

#include <algorithm>

namespace mmk {

Json rat_to_json(const Rat& q) {
    return Json::array({rat_num(q).str(), rat_den(q).str()});
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        auto part = [](const Json& x) -> Int {
            if (x.is_number_integer()) return Int(static_cast<long long>(x.get<long long>()));
            if (x.is_string()) return Int(x.get<std::string>());
            throw validation_error("rational parts must be integers or strings");
        };
        Int n = part(j[0]), d = part(j[1]);
        if (d == 0) throw validation_error("rational with zero denominator");
        return Rat(n, d);
    }
    throw validation_error("expected a rational as integer, \"a/b\" string, or [num,den]");
}

Json vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("expected a vector array");
    RatVec out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

Json group_to_json(const AbelianAction& g) {
    Json out;
    out["n"] = g.n;
    // emitted in the canonical single-generator-per-element form
    Json gens = Json::array();
    for (int e = 1; e < g.r; ++e) {
        Json one;
        one["order"] = g.orders[e];
        Json w = Json::array();
        for (const auto& x : g.elements[e]) w.push_back(static_cast<long>(rat_num(x) * (g.orders[e] / rat_den(x))));
        one["weights"] = w;
        gens.push_back(one);
    }
    out["generators"] = gens;
    return out;
}

AbelianActionPtr group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw validation_error("group spec requires \"n\" and \"generators\"");
    int n = j.at("n").get<int>();
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j.at("generators")) {
        GeneratorSpec spec;
        spec.order = g.at("order").get<long>();
        for (const auto& w : g.at("weights")) spec.weights.push_back(w.get<long>());
        gens.push_back(std::move(spec));
    }
    return build_group(n, gens);
}

namespace {

std::string label_string(const RayLabel& l) {
    return (l.exceptional ? "E" : "e") + std::to_string(l.index + 1);
}

RayLabel label_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'e' && s[0] != 'E')) throw validation_error("malformed ray label: " + s);
    RayLabel l;
    l.exceptional = s[0] == 'E';
    l.index = std::stoi(s.substr(1)) - 1;
    return l;
}

} // namespace

Json fan_to_json(const Fan& f) {
    Json out;
    Json rays = Json::array();
    for (const auto& r : f.rays) rays.push_back(vec_to_json(r));
    out["rays"] = rays;
    Json labels = Json::array();
    for (const auto& l : f.labels) labels.push_back(label_string(l));
    out["labels"] = labels;
    out["max_cones"] = f.max_cones;
    Json basis = Json::array();
    for (const auto& b : f.lattice_basis) basis.push_back(vec_to_json(b));
    out["lattice_basis"] = basis;
    return out;
}

Fan fan_from_json(AbelianActionPtr group, const Json& j) {
    Fan f;
    f.group = group;
    f.lattice_basis = group->lattice_basis;
    for (const auto& r : j.at("rays")) f.rays.push_back(vec_from_json(r));
    for (const auto& l : j.at("labels")) {
        RayLabel lab = label_from_string(l.get<std::string>());
        f.labels.push_back(lab);
    }
    if (f.labels.size() != f.rays.size()) throw validation_error("fan labels and rays differ in length");
    for (size_t i = 0; i < f.labels.size(); ++i) {
        if (f.labels[i].exceptional)
            f.labels[i].junior_element = group->element_index(rv_mod1(f.rays[i]));
        else if (rv_compare(f.rays[i], rv_unit(group->n, f.labels[i].index)) != 0)
            throw validation_error("coordinate ray does not match its label");
    }
    for (const auto& mc : j.at("max_cones")) {
        std::vector<int> cone;
        for (const auto& i : mc) cone.push_back(i.get<int>());
        std::sort(cone.begin(), cone.end());
        f.max_cones.push_back(cone);
    }
    f.validate();
    return f;
}

Json family_to_json(const GnatFamily& f) {
    Json out;
    Json b = Json::array();
    for (const auto& row : f.b) b.push_back(vec_to_json(row));
    out["b"] = b;
    return out;
}

RatMat family_matrix_from_json(const Json& j) {
    const Json& b = j.is_object() ? j.at("b") : j;
    RatMat out;
    for (const auto& row : b) out.push_back(vec_from_json(row));
    return out;
}

Json pattern_support_json(const McKayQuiver& q, const Pattern& p) {
    Json arrows = Json::array();
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j)
            if (p.get(i, j)) {
                Json a;
                a["tail"] = i;
                a["coord"] = j + 1;
                a["head"] = q.k(i, j);
                arrows.push_back(a);
            }
    return arrows;
}

Json chart_report_json(const ChartReport& c) {
    Json out;
    out["v"] = vec_to_json(c.ctx->v);
    out["ell"] = c.ctx->ell + 1;
    out["chart_group_order"] = c.ctx->chart_group->r;
    Json xi = Json::array();
    for (const auto& row : c.ctx->xi_basis) xi.push_back(vec_to_json(row));
    out["xi_exponents"] = xi;
    out["char_map"] = c.ctx->char_map;
    Json cols = Json::array();
    for (size_t t = 0; t < c.parent_columns.size(); ++t) {
        Json e;
        e["column"] = c.parent_columns[t] + 1;
        e["chart_support"] = pattern_support_json(c.ctx->chart_quiver, c.chart_patterns[t]);
        e["lifted_support"] = pattern_support_json(c.ctx->parent_quiver, c.lifted_patterns[t]);
        cols.push_back(e);
    }
    out["columns"] = cols;
    Json children = Json::array();
    for (const auto& ch : c.children) children.push_back(chart_report_json(ch));
    out["children"] = children;
    return out;
}

Json quotient_report_json(const Fan& fan, const QuotientFanReport& rep) {
    Json out;
    out["verdict"] = rep.verdict == ModuliVerdict::FineModuli ? "fine-moduli" : "not-fine";
    out["alpha_is_iso"] = rep.alpha_is_iso;
    out["witness_cones"] = rep.witness_cones;
    out["contracted_rays"] = rep.contracted_rays;
    Json sf;
    Json rays = Json::array();
    for (const auto& r : rep.sigma_f_rays) rays.push_back(vec_to_json(r));
    sf["rays"] = rays;
    Json cones = Json::array();
    for (const auto& c : rep.sigma_f_max_gens) {
        Json gens = Json::array();
        for (const auto& g : c) gens.push_back(vec_to_json(g));
        cones.push_back(gens);
    }
    sf["max_cones"] = cones;
    out["sigma_f"] = sf;
    (void)fan;
    return out;
}

RatVec theta_from_json(const Json& j) { return vec_from_json(j); }

RatVec theta_from_string(const std::string& csv) {
    RatVec out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(rat_from_string(cur));
            cur.clear();
        }
    };
    for (char c : csv) {
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

} // namespace mmk
