#include "mmk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mmk/hnf.hpp"

namespace mmk {

namespace {

long element_order(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, rat_den(x));
    return static_cast<long>(l);
}

// fingerprint of a character class: pairings with every group element
std::string class_fingerprint(const AbelianAction& g, const RatVec& monomial) {
    std::string s;
    for (int e = 0; e < g.r; ++e) s += rat_to_string(g.monomial_pairing(monomial, e)) + ";";
    return s;
}

} // namespace

long AbelianAction::age(int g) const {
    Rat s = rv_coord_sum(elements.at(g));
    if (!rat_is_integer(s)) throw internal_error("age is not an integer; SL condition violated");
    return static_cast<long>(rat_num(s));
}

std::vector<int> AbelianAction::junior_elements() const {
    std::vector<int> out;
    for (int g = 0; g < r; ++g)
        if (age(g) == 1) out.push_back(g);
    return out;
}

Rat AbelianAction::monomial_pairing(const RatVec& monomial, int g) const {
    return rat_frac(rv_dot(monomial, elements.at(g)));
}

Rat AbelianAction::char_pairing(int i, int g) const { return monomial_pairing(char_reps.at(i), g); }

int AbelianAction::char_class_of(const RatVec& monomial) const {
    if (!rv_is_integral(monomial)) throw usage_error("character monomial must be integral");
    for (int i = 0; i < r; ++i) {
        bool same = true;
        for (int e = 0; e < r && same; ++e)
            if (monomial_pairing(monomial, e) != char_pairing(i, e)) same = false;
        if (same) return i;
    }
    throw internal_error("monomial does not match any character class");
}

int AbelianAction::element_index(const RatVec& v) const {
    for (int g = 0; g < r; ++g)
        if (rv_compare(elements[g], v) == 0) return g;
    return -1;
}

bool AbelianAction::is_cyclic() const {
    for (int g = 0; g < r; ++g)
        if (orders[g] == static_cast<long>(r)) return true;
    return r == 1;
}

AbelianActionPtr build_group(int n, const std::vector<GeneratorSpec>& generators) {
    if (n < 1) throw validation_error("dimension must be at least 1");
    auto g = std::make_shared<AbelianAction>();
    g->n = n;

    std::vector<RatVec> gens;
    for (size_t idx = 0; idx < generators.size(); ++idx) {
        const auto& spec = generators[idx];
        if (spec.order < 1) throw validation_error("generator " + std::to_string(idx) + ": order must be positive");
        if (static_cast<int>(spec.weights.size()) != n)
            throw validation_error("generator " + std::to_string(idx) + ": expected " + std::to_string(n) +
                                   " weights");
        long sum = 0;
        RatVec v(n);
        for (int j = 0; j < n; ++j) {
            long w = spec.weights[j];
            if (w < 0 || w >= spec.order)
                throw validation_error("generator " + std::to_string(idx) + ": weight " + std::to_string(w) +
                                       " outside [0, order)");
            sum += w;
            v[j] = Rat(w, spec.order);
        }
        if (sum % spec.order != 0)
            throw validation_error("generator " + std::to_string(idx) +
                                   " violates the SL condition (weights sum to " + std::to_string(sum) +
                                   " mod " + std::to_string(spec.order) + ")");
        if (spec.order == 1 || rv_is_zero(v)) continue; // ineffective
        gens.push_back(std::move(v));
    }

    // breadth-first closure under addition mod Z^n, identity first
    g->elements.push_back(rv_zero(n));
    std::map<std::string, int> seen{{rv_to_string(g->elements[0]), 0}};
    for (size_t head = 0; head < g->elements.size(); ++head) {
        RatVec cur = g->elements[head];
        for (const auto& gen : gens) {
            RatVec nxt = rv_mod1(rv_add(cur, gen));
            std::string k = rv_to_string(nxt);
            if (!seen.count(k)) {
                seen.emplace(k, static_cast<int>(g->elements.size()));
                g->elements.push_back(nxt);
            }
        }
    }
    g->r = static_cast<int>(g->elements.size());
    for (const auto& v : g->elements) g->orders.push_back(element_order(v));

    // N_G basis: HNF of Z^n together with all v_g, computed on a cleared denominator
    {
        Int scale = 1;
        for (const auto& v : g->elements)
            for (const auto& x : v) scale = lcm(scale, rat_den(x));
        IntMat rows;
        for (int j = 0; j < n; ++j) {
            IntVec e(n, 0);
            e[j] = scale;
            rows.push_back(e);
        }
        for (const auto& v : g->elements) {
            IntVec w(n);
            for (int j = 0; j < n; ++j) w[j] = rat_num(v[j]) * (scale / rat_den(v[j]));
            rows.push_back(w);
        }
        IntMat h = hnf_rows(std::move(rows));
        for (const auto& row : h) {
            RatVec b(n);
            for (int j = 0; j < n; ++j) b[j] = Rat(row[j], scale);
            g->lattice_basis.push_back(b);
        }
    }

    // exponent of the group: E * f_j is trivial for all j
    long exponent = 1;
    for (long o : g->orders) exponent = std::lcm(exponent, o);

    // enumerate character classes with lex-smallest representatives in [0,E)^n
    std::vector<RatVec> class_reps;
    std::map<std::string, int> class_by_print;
    {
        RatVec m(n, Rat(0));
        auto fp = [&](const RatVec& mono) { return class_fingerprint(*g, mono); };
        while (true) {
            std::string f = fp(m);
            if (!class_by_print.count(f)) {
                class_by_print.emplace(f, static_cast<int>(class_reps.size()));
                class_reps.push_back(m);
                if (static_cast<int>(class_reps.size()) == g->r) break;
            }
            // lexicographic increment over [0,E)^n
            int j = n - 1;
            while (j >= 0) {
                m[j] += 1;
                if (m[j] < exponent) break;
                m[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
        if (static_cast<int>(class_reps.size()) != g->r)
            throw internal_error("character enumeration found " + std::to_string(class_reps.size()) +
                                 " classes for a group of order " + std::to_string(g->r));
    }

    // character ordering: trivial first; for cyclic G successive powers of the
    // first coordinate character that generates the character group; otherwise
    // lexicographic in Smith-normal-form coordinates.
    std::vector<RatVec> ordered;
    ordered.push_back(rv_zero(n)); // rho_0
    bool powers_done = false;
    if (g->is_cyclic() && g->r > 1) {
        int j0 = -1;
        for (int j = 0; j < n && j0 < 0; ++j) {
            Int l = 1;
            for (int e = 0; e < g->r; ++e) l = lcm(l, rat_den(g->monomial_pairing(rv_unit(n, j), e)));
            if (l == g->r) j0 = j;
        }
        if (j0 >= 0) {
            for (int i = 1; i < g->r; ++i) ordered.push_back(rv_scale(Rat(i), rv_unit(n, j0)));
            powers_done = true;
        }
    }
    if (!powers_done && g->r > 1) {
        // SNF coordinates of Z^n / M_G with M_G the dual lattice of N_G
        RatMat mg_rows = invariant_monomial_basis(*g);
        IntMat a;
        for (const auto& row : mg_rows) a.push_back(rv_to_int(row));
        SmithResult snf = smith_normal_form(a);
        auto snf_coords = [&](const RatVec& m) {
            IntVec mi = rv_to_int(m);
            IntVec c(snf.diag.size(), 0);
            for (size_t t = 0; t < snf.diag.size(); ++t) {
                Int s = 0;
                for (int j = 0; j < n; ++j) s += mi[j] * snf.right[j][t];
                if (snf.diag[t] != 0) {
                    s %= snf.diag[t];
                    if (s < 0) s += snf.diag[t];
                }
                c[t] = s;
            }
            return c;
        };
        std::vector<std::pair<IntVec, RatVec>> keyed;
        for (const auto& rep : class_reps) {
            if (rv_is_zero(rep)) continue;
            keyed.emplace_back(snf_coords(rep), rep);
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& kv : keyed) ordered.push_back(kv.second);
    }
    g->char_reps = std::move(ordered);

    // sanity: the chosen representatives hit every class exactly once
    {
        std::map<std::string, int> hit;
        for (int i = 0; i < g->r; ++i) {
            std::string f = class_fingerprint(*g, g->char_reps[i]);
            if (!class_by_print.count(f)) throw internal_error("character representative has unknown class");
            if (hit.count(f)) throw internal_error("duplicate character class in ordering");
            hit.emplace(f, i);
        }
    }

    for (int j = 0; j < n; ++j) g->chi_index.push_back(g->char_class_of(rv_unit(n, j)));
    g->k_table.assign(g->r, std::vector<int>(n, 0));
    for (int i = 0; i < g->r; ++i)
        for (int j = 0; j < n; ++j)
            g->k_table[i][j] = g->char_class_of(rv_add(g->char_reps[i], rv_unit(n, j)));
    return g;
}

RatMat invariant_monomial_basis(const AbelianAction& g) {
    RatMat inv = mat_inverse(g.lattice_basis);
    RatMat mg = mat_transpose(inv); // dual basis of N_G; integral since Z^n <= N_G
    HnfBasis h = hnf_basis(mg);
    return h.basis;
}

std::string monomial_string(const RatVec& exponents) {
    int n = static_cast<int>(exponents.size());
    auto var = [&](int j) -> std::string {
        static const char* names = "xyzw";
        if (n <= 4) return std::string(1, names[j]);
        return "x" + std::to_string(j + 1);
    };
    std::string num, den;
    for (int j = 0; j < n; ++j) {
        if (exponents[j] == 0) continue;
        Rat e = exponents[j];
        bool neg = e < 0;
        Rat a = neg ? Rat(-e) : e;
        std::string part = var(j);
        if (a != 1) part += "^" + rat_to_string(a);
        std::string& side = neg ? den : num;
        if (!side.empty()) side += "*";
        side += part;
    }
    if (num.empty() && den.empty()) return "1";
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + den;
}

} // namespace mmk
