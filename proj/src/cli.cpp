#include "mmk/cli.hpp"

#include <fstream>

namespace mmk {

namespace {

struct Workspace {
    AbelianActionPtr group;
    std::optional<std::vector<int>> junior_order;
    std::shared_ptr<const Fan> fan;
    std::vector<RatVec> history;
};

Workspace load_workspace(const Json& config) {
    Workspace ws;
    if (!config.contains("group")) throw validation_error("config requires a \"group\" object");
    ws.group = group_from_json(config.at("group"));
    if (config.contains("junior_order")) {
        std::vector<int> ord;
        for (const auto& x : config.at("junior_order")) ord.push_back(x.get<int>());
        ws.junior_order = ord;
    }
    ResolveResult res = resolve(ws.group, ws.junior_order);
    ws.fan = std::make_shared<const Fan>(std::move(res.fan));
    ws.history = std::move(res.history);
    return ws;
}

RatVec require_theta(const Json& config, const RunOptions& opt, const Json* inline_theta) {
    if (opt.theta) return theta_from_string(*opt.theta);
    if (inline_theta && !inline_theta->is_null() && !inline_theta->is_boolean())
        return theta_from_json(*inline_theta);
    if (config.contains("theta")) return theta_from_json(config.at("theta"));
    throw validation_error("a stability parameter is required (--theta or config \"theta\")");
}

GnatFamily resolve_family(const Workspace& ws, const Json& config, const Json& spec, const RunOptions& opt);

GnatFamily family_from_spec(const Workspace& ws, const Json& config, const Json& spec, const RunOptions& opt) {
    if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        if (s == "canonical") return canonical_family(ws.fan);
        if (s == "special") return build_special_family(ws.group, ws.junior_order).family;
        throw validation_error("unknown family spec \"" + s + "\"");
    }
    if (spec.is_object() && spec.contains("walk")) {
        GnatFamily start = spec.contains("from") ? family_from_spec(ws, config, spec.at("from"), opt)
                                                 : canonical_family(ws.fan);
        RatVec theta = require_theta(config, opt, &spec.at("walk"));
        return walk(start, make_theta(theta));
    }
    if (spec.is_object() && spec.contains("b")) return make_family(ws.fan, family_matrix_from_json(spec));
    if (spec.is_array()) return make_family(ws.fan, family_matrix_from_json(spec));
    throw validation_error("family spec must be \"canonical\", \"special\", {\"b\":...} or {\"walk\":...}");
}

GnatFamily resolve_family(const Workspace& ws, const Json& config, const Json& spec, const RunOptions& opt) {
    return family_from_spec(ws, config, spec, opt);
}

GnatFamily config_family(const Workspace& ws, const Json& config, const RunOptions& opt) {
    if (!config.contains("family")) throw validation_error("config requires a \"family\" entry for this command");
    return family_from_spec(ws, config, config.at("family"), opt);
}

Json family_report(const GnatFamily& fam) {
    Json out = family_to_json(fam);
    Json cols = Json::array();
    for (int k = 0; k < fam.m(); ++k) {
        Json c;
        c["index"] = k + 1;
        int ray = fam.fan->exceptional_ray(k);
        c["ray"] = vec_to_json(fam.fan->rays[ray]);
        c["element"] = fam.fan->labels[ray].junior_element;
        cols.push_back(c);
    }
    out["columns"] = cols;
    out["valid"] = true;
    return out;
}

Json cmd_group_info(const Workspace& ws) {
    const AbelianAction& g = *ws.group;
    Json out;
    out["n"] = g.n;
    out["r"] = g.r;
    Json elements = Json::array();
    for (const auto& e : g.elements) elements.push_back(vec_to_json(e));
    out["elements"] = elements;
    out["orders"] = g.orders;
    Json ages = Json::array();
    for (int e = 0; e < g.r; ++e) ages.push_back(g.age(e));
    out["ages"] = ages;
    out["juniors"] = g.junior_elements();
    Json chars = Json::array();
    for (int i = 0; i < g.r; ++i) {
        Json c;
        c["index"] = i;
        c["monomial"] = vec_to_json(g.char_reps[i]);
        c["string"] = monomial_string(g.char_reps[i]);
        chars.push_back(c);
    }
    out["characters"] = chars;
    out["chi"] = g.chi_index;
    out["k_table"] = g.k_table;
    return out;
}

Json cmd_resolve(const Workspace& ws) {
    Json out = fan_to_json(*ws.fan);
    Json hist = Json::array();
    for (const auto& v : ws.history) hist.push_back(vec_to_json(v));
    out["history"] = hist;
    FanClass cls = classify_fan(*ws.fan);
    Json c;
    c["simplicial"] = cls.simplicial;
    c["smooth"] = cls.smooth;
    c["crepant"] = cls.crepant;
    c["relative_minimal_model"] = cls.relative_minimal_model;
    out["classification"] = c;
    return out;
}

Json cmd_quiver(const Workspace& ws, const RunOptions& opt) {
    McKayQuiver q = build_mckay(ws.group);
    Json out;
    Json verts = Json::array();
    for (int i = 0; i < q.r; ++i) verts.push_back(monomial_string(ws.group->char_reps[i]));
    out["vertices"] = verts;
    out["k_table"] = ws.group->k_table;
    std::string dot = quiver_dot(q);
    if (opt.dot_path) {
        std::ofstream f(*opt.dot_path);
        if (!f) throw validation_error("cannot write DOT file " + *opt.dot_path);
        f << dot;
        out["dot_file"] = *opt.dot_path;
    } else {
        out["dot"] = dot;
    }
    return out;
}

Json cmd_fibers(const Workspace& ws, const Json& config, const RunOptions& opt) {
    GnatFamily fam = config_family(ws, config, opt);
    std::optional<ThetaVec> theta;
    if (opt.theta) theta = make_theta(theta_from_string(*opt.theta));
    else if (config.contains("theta")) theta = make_theta(theta_from_json(config.at("theta")));

    Json cones = Json::array();
    for (const auto& mc : ws.fan->max_cones) {
        Json c;
        c["rays"] = mc;
        Json rv = Json::array();
        for (int i : mc) rv.push_back(vec_to_json(ws.fan->rays[i]));
        c["ray_vectors"] = rv;
        Pattern pat = fiber(fam, mc);
        c["support"] = pattern_support_json(fam.quiver, pat);
        c["components"] = components(fam.quiver, pat);
        ThetaConeInfo info = theta_cone(fam, mc);
        c["summands"] = info.summands;
        if (static_cast<int>(mc.size()) == ws.fan->n()) {
            Json mono = Json::array(), mono_s = Json::array();
            for (const auto& m : fiber_monomials(fam, mc)) {
                mono.push_back(vec_to_json(m));
                mono_s.push_back(monomial_string(m));
            }
            c["monomials"] = mono;
            c["monomial_strings"] = mono_s;
        }
        if (theta) c["stability"] = to_string(check_stability(fam.quiver, pat, *theta));
        cones.push_back(c);
    }
    Json out;
    out["cones"] = cones;
    return out;
}

Json cmd_moduli(const Workspace& ws, const Json& config, const RunOptions& opt) {
    GnatFamily fam = config_family(ws, config, opt);
    QuotientFanReport rep = quotient_fan(fam);
    Json out = quotient_report_json(*ws.fan, rep);

    Json cox = Json::array();
    for (const auto& g : cox_generators(*ws.fan)) {
        Json e;
        e["label"] = g.label;
        e["valuation"] = vec_to_json(g.valuation);
        cox.push_back(e);
    }
    out["cox_generators"] = cox;

    Json phi = Json::array();
    auto table = phi_map(fam);
    for (int i = 0; i < fam.r(); ++i)
        for (int j = 0; j < fam.n(); ++j) {
            Json e;
            e["tail"] = i;
            e["coord"] = j + 1;
            e["head"] = fam.quiver.k(i, j);
            e["t_exponents"] = vec_to_json(table[i][j].t_exponents);
            phi.push_back(e);
        }
    out["phi"] = phi;

    std::optional<std::vector<Int>> grading;
    if (config.contains("grading_orders")) {
        std::vector<Int> g;
        for (const auto& x : config.at("grading_orders")) g.push_back(Int(x.get<long>()));
        grading = g;
    }
    IntMat psi = psi_matrix(fam, grading);
    Json psij = Json::array();
    for (const auto& row : psi) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        psij.push_back(r);
    }
    out["psi"] = psij;
    return out;
}

Json cmd_lift(const Workspace& ws) {
    SpecialFamilyResult res = build_special_family(ws.group, ws.junior_order);
    Json out;
    Json charts = Json::array();
    for (const auto& c : res.charts) charts.push_back(chart_report_json(c));
    out["charts"] = charts;
    out["family"] = family_to_json(res.family);
    return out;
}

} // namespace

Json parse_config_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t byte = e.byte;
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw validation_error("malformed JSON at line " + std::to_string(line) + " column " +
                               std::to_string(col));
    }
}

RunResult run_command(const std::string& command, const std::string& sub, const Json& config,
                      const RunOptions& options) {
    RunResult res;
    try {
        Workspace ws = load_workspace(config);
        Json out;
        if (command == "group-info") {
            out = cmd_group_info(ws);
        } else if (command == "resolve") {
            out = cmd_resolve(ws);
        } else if (command == "quiver") {
            out = cmd_quiver(ws, options);
        } else if (command == "family") {
            GnatFamily fam = [&] {
                if (sub == "validate") return config_family(ws, config, options);
                if (sub == "canonical") return canonical_family(ws.fan);
                if (sub == "special") return build_special_family(ws.group, ws.junior_order).family;
                if (sub == "walk") {
                    GnatFamily start = config.contains("family")
                                           ? family_from_spec(ws, config, config.at("family"), options)
                                           : canonical_family(ws.fan);
                    RatVec theta = require_theta(config, options, nullptr);
                    return walk(start, make_theta(theta));
                }
                throw validation_error("family subcommand must be validate|canonical|special|walk");
            }();
            out = family_report(fam);
        } else if (command == "fibers") {
            out = cmd_fibers(ws, config, options);
        } else if (command == "moduli") {
            out = cmd_moduli(ws, config, options);
        } else if (command == "lift") {
            out = cmd_lift(ws);
        } else {
            throw validation_error("unknown command \"" + command + "\"");
        }
        res.output = out.dump(2) + "\n";
        if (options.out_path) {
            std::ofstream f(*options.out_path);
            if (!f) throw validation_error("cannot write output file " + *options.out_path);
            f << res.output;
        }
        res.exit_code = 0;
    } catch (const resource_error& e) {
        res.exit_code = 3;
        res.error = e.what();
    } catch (const validation_error& e) {
        res.exit_code = 2;
        res.error = e.what();
    } catch (const usage_error& e) {
        res.exit_code = 2;
        res.error = e.what();
    } catch (const internal_error& e) {
        res.exit_code = 4;
        res.error = e.what();
    }
    return res;
}

} // namespace mmk
