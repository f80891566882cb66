#include "mmk/mckay.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mmk {

RatVec McKayQuiver::wt(int i, int j) const {
    RatVec w = rv_zero(r);
    int head = k(i, j);
    if (head != i) {
        w[head] = 1;
        w[i] = -1;
    }
    return w;
}

McKayQuiver build_mckay(AbelianActionPtr group) {
    McKayQuiver q;
    q.group = group;
    q.r = group->r;
    q.n = group->n;
    return q;
}

Pattern empty_pattern(int r, int n) {
    Pattern pat;
    pat.r = r;
    pat.n = n;
    pat.p.assign(r, std::vector<char>(n, 0));
    return pat;
}

ThetaVec make_theta(RatVec v) {
    if (rv_coord_sum(v) != 0) throw validation_error("theta must sum to zero");
    return ThetaVec{std::move(v)};
}

bool validate_pattern(const McKayQuiver& q, const Pattern& pat) {
    if (pat.r != q.r || pat.n != q.n) throw usage_error("pattern shape mismatch");
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j)
            for (int j2 = j + 1; j2 < q.n; ++j2) {
                bool left = pat.get(i, j) && pat.get(q.k(i, j), j2);
                bool right = pat.get(i, j2) && pat.get(q.k(i, j2), j);
                if (left != right) return false;
            }
    return true;
}

std::vector<std::vector<int>> components(const McKayQuiver& q, const Pattern& pat) {
    std::vector<int> parent(q.r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j)
            if (pat.get(i, j)) parent[find(i)] = find(q.k(i, j));
    std::vector<std::vector<int>> buckets(q.r);
    for (int i = 0; i < q.r; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& b : buckets)
        if (!b.empty()) out.push_back(std::move(b));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// strongly connected components (iterative Tarjan), returned with a component
// id per vertex
int scc_of(const McKayQuiver& q, const Pattern& pat, std::vector<int>& comp) {
    int r = q.r;
    std::vector<std::vector<int>> adj(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q.n; ++j)
            if (pat.get(i, j) && q.k(i, j) != i) adj[i].push_back(q.k(i, j));
    comp.assign(r, -1);
    std::vector<int> low(r, -1), num(r, -1), stk;
    std::vector<char> on(r, 0);
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        size_t edge;
    };
    for (int s = 0; s < r; ++s) {
        if (num[s] >= 0) continue;
        std::vector<Frame> frames{{s, 0}};
        num[s] = low[s] = counter++;
        stk.push_back(s);
        on[s] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on[w] = 1;
                    frames.push_back({w, 0});
                } else if (on[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on[w] = 0;
                        comp[w] = ncomp;
                        if (w == f.v) break;
                    }
                    ++ncomp;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return ncomp;
}

} // namespace

std::vector<std::vector<int>> closed_subsets(const McKayQuiver& q, const Pattern& pat) {
    if (q.r > 16 * guard_multiplier())
        throw resource_error("closed-subset enumeration limited to 16 vertices (set MMK_GUARD_LIMITS to raise)");
    std::vector<int> comp;
    int ncomp = scc_of(q, pat, comp);
    if (ncomp > 62) throw resource_error("closed-subset enumeration: too many strongly connected components");
    // successor mask per SCC over the condensation
    std::vector<unsigned long> succ(ncomp, 0);
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j)
            if (pat.get(i, j) && comp[q.k(i, j)] != comp[i]) succ[comp[i]] |= 1UL << comp[q.k(i, j)];
    std::vector<unsigned long> verts(ncomp, 0);
    for (int i = 0; i < q.r; ++i) verts[comp[i]] |= 1UL << i;

    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1UL << ncomp); ++mask) {
        bool ok = true;
        for (int c = 0; c < ncomp && ok; ++c)
            if ((mask >> c) & 1UL)
                if ((succ[c] & mask) != succ[c]) ok = false;
        if (!ok) continue;
        std::vector<int> s;
        for (int c = 0; c < ncomp; ++c)
            if ((mask >> c) & 1UL)
                for (int i = 0; i < q.r; ++i)
                    if ((verts[c] >> i) & 1UL) s.push_back(i);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::string to_string(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Semistable: return "semistable";
    default: return "unstable";
    }
}

Stability check_stability(const McKayQuiver& q, const Pattern& pat, const ThetaVec& theta) {
    if (static_cast<int>(theta.theta.size()) != q.r) throw usage_error("theta length mismatch");
    bool strict = true;
    for (const auto& s : closed_subsets(q, pat)) {
        if (s.empty() || static_cast<int>(s.size()) == q.r) continue;
        Rat t(0);
        for (int i : s) t += theta.theta[i];
        if (t < 0) return Stability::Unstable;
        if (t == 0) strict = false;
    }
    if (!strict) return Stability::Semistable;
    return Stability::Stable;
}

std::string quiver_dot(const McKayQuiver& q, const Pattern* support) {
    std::string dot = "digraph mckay {\n";
    for (int i = 0; i < q.r; ++i)
        dot += "  v" + std::to_string(i) + " [label=\"" + monomial_string(q.group->char_reps[i]) + "\"];\n";
    for (int i = 0; i < q.r; ++i)
        for (int j = 0; j < q.n; ++j) {
            dot += "  v" + std::to_string(i) + " -> v" + std::to_string(q.k(i, j)) + " [label=\"" +
                   monomial_string(rv_unit(q.n, j)) + "\"";
            if (support && !support->get(i, j)) dot += ", style=dashed";
            dot += "];\n";
        }
    dot += "}\n";
    return dot;
}

} // namespace mmk
