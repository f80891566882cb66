#include "mmk/hnf.hpp"

#include <algorithm>

namespace mmk {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// In-place row HNF on rows[row0..], columns scanned left to right.
// Returns the rank. Optionally carries a companion matrix through the same
// row operations (for kernel extraction).
int hnf_inplace(IntMat& rows, IntMat* companion) {
    int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return 0;
    int ncols = static_cast<int>(rows[0].size());
    auto add_row = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < ncols; ++c) rows[dst][c] += f * rows[src][c];
        if (companion)
            for (size_t c = 0; c < (*companion)[dst].size(); ++c)
                (*companion)[dst][c] += f * (*companion)[src][c];
    };
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(rows[a], rows[b]);
        if (companion) std::swap((*companion)[a], (*companion)[b]);
    };
    auto negate_row = [&](int a) {
        for (int c = 0; c < ncols; ++c) rows[a][c] = -rows[a][c];
        if (companion)
            for (auto& x : (*companion)[a]) x = -x;
    };

    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        // reduce the column below `rank` to a single nonzero entry by gcd steps
        while (true) {
            int best = -1;
            for (int r = rank; r < nrows; ++r)
                if (rows[r][col] != 0 && (best < 0 || iabs(rows[r][col]) < iabs(rows[best][col])))
                    best = r;
            if (best < 0) break;
            swap_rows(rank, best);
            bool done = true;
            for (int r = rank + 1; r < nrows; ++r) {
                if (rows[r][col] == 0) continue;
                Int q = rows[r][col] / rows[rank][col]; // truncated; remainder loop finishes the job
                add_row(r, rank, -q);
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[rank][col] == 0) continue; // column has no pivot
        if (rows[rank][col] < 0) negate_row(rank);
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < rank; ++r) {
            Int q = rows[r][col] / rows[rank][col];
            if (rows[r][col] % rows[rank][col] < 0) q -= 1;
            if (q != 0) add_row(r, rank, -q);
        }
        ++rank;
    }
    return rank;
}

} // namespace

IntMat hnf_rows(IntMat rows) {
    int rank = hnf_inplace(rows, nullptr);
    rows.resize(rank);
    return rows;
}

HnfKernel hnf_with_left_kernel(const IntMat& a) {
    IntMat rows = a;
    int n = static_cast<int>(rows.size());
    IntMat u(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    int rank = hnf_inplace(rows, &u);
    HnfKernel out;
    out.hnf.assign(rows.begin(), rows.begin() + rank);
    out.kernel.assign(u.begin() + rank, u.end());
    return out;
}

SmithResult smith_normal_form(IntMat a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    IntMat v(m, IntVec(m, 0));
    for (int i = 0; i < m; ++i) v[i][i] = 1;
    auto col_add = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < m; ++r) v[r][dst] += f * v[r][src];
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int r = 0; r < n; ++r) std::swap(a[r][x], a[r][y]);
        for (int r = 0; r < m; ++r) std::swap(v[r][x], v[r][y]);
    };
    auto col_neg = [&](int x) {
        for (int r = 0; r < n; ++r) a[r][x] = -a[r][x];
        for (int r = 0; r < m; ++r) v[r][x] = -v[r][x];
    };
    auto row_add = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < m; ++c) a[dst][c] += f * a[src][c];
    };

    int t = 0;
    int lim = std::min(n, m);
    while (t < lim) {
        // find a nonzero entry in the remaining block
        int pr = -1, pc = -1;
        for (int r = t; r < n; ++r)
            for (int c = t; c < m; ++c)
                if (a[r][c] != 0 && (pr < 0 || iabs(a[r][c]) < iabs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        col_swap(t, pc);
        bool clean = true;
        for (int r = t + 1; r < n; ++r)
            if (a[r][t] != 0) {
                row_add(r, t, -Int(a[r][t] / a[t][t]));
                if (a[r][t] != 0) clean = false;
            }
        for (int c = t + 1; c < m; ++c)
            if (a[t][c] != 0) {
                col_add(c, t, -Int(a[t][c] / a[t][t]));
                if (a[t][c] != 0) clean = false;
            }
        if (!clean) continue;
        // enforce divisibility d_t | a[r][c]
        bool restart = false;
        for (int r = t + 1; r < n && !restart; ++r)
            for (int c = t + 1; c < m && !restart; ++c)
                if (a[r][c] % a[t][t] != 0) {
                    row_add(t, r, 1);
                    restart = true;
                }
        if (restart) continue;
        if (a[t][t] < 0) col_neg(t);
        ++t;
    }
    SmithResult out;
    for (int i = 0; i < t; ++i) out.diag.push_back(a[i][i]);
    out.right = v;
    return out;
}

HnfBasis hnf_basis(const RatMat& vectors) {
    IntMat rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(rv_to_int(v));
    IntMat h = hnf_rows(std::move(rows));
    HnfBasis out;
    out.rank = static_cast<int>(h.size());
    for (const auto& r : h) out.basis.push_back(rv_from_int(r));
    return out;
}

} // namespace mmk
