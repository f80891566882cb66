#include "mmk/rational.hpp"

#include <cstdlib>
#include <sstream>

namespace mmk {

long guard_multiplier() {
    static long mult = [] {
        const char* s = std::getenv("MMK_GUARD_LIMITS");
        if (!s) return 1L;
        long v = std::atol(s);
        return v >= 1 ? v : 1L;
    }();
    return mult;
}

Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q); // d > 0
    Int t = n / d;
    if (n % d != 0 && n < 0) t -= 1;
    return t;
}

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

bool rat_is_integer(const Rat& q) { return denominator(q) == 1; }

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw validation_error("malformed rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int n(t.substr(0, slash)), d(t.substr(slash + 1));
        if (d == 0) bad();
        return Rat(n, d);
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);
}

RatVec rv_zero(int dim) { return RatVec(dim, Rat(0)); }

RatVec rv_unit(int dim, int j) {
    RatVec v(dim, Rat(0));
    v[j] = 1;
    return v;
}

RatVec rv_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw usage_error("vector dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec rv_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw usage_error("vector dimension mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec rv_scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat rv_dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw usage_error("vector dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool rv_is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

RatVec rv_mod1(const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = rat_frac(a[i]);
    return r;
}

Rat rv_coord_sum(const RatVec& a) {
    Rat s(0);
    for (const auto& x : a) s += x;
    return s;
}

int rv_compare(const RatVec& a, const RatVec& b) {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

std::string rv_to_string(const RatVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(a[i]);
    }
    return s + ")";
}

RatVec rv_primitive(const RatVec& a) {
    if (rv_is_zero(a)) return a;
    Int l = 1;
    for (const auto& x : a) l = lcm(l, rat_den(x));
    IntVec w(a.size());
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        w[i] = rat_num(a[i]) * (l / rat_den(a[i]));
        g = gcd(g, w[i]);
    }
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(w[i] / g);
    return r;
}

bool rv_is_integral(const RatVec& a) {
    for (const auto& x : a)
        if (!rat_is_integer(x)) return false;
    return true;
}

IntVec rv_to_int(const RatVec& a) {
    if (!rv_is_integral(a)) throw usage_error("vector is not integral: " + rv_to_string(a));
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = rat_num(a[i]);
    return r;
}

RatVec rv_from_int(const IntVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

Int iv_gcd(const IntVec& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    return g;
}

int mat_rank(RatMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int c2 = c; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

bool mat_solve_left(const RatMat& m, const RatVec& rhs, RatVec& x) {
    // x * m = rhs  <=>  m^T x^T = rhs^T; Gaussian elimination on the transpose.
    int k = static_cast<int>(m.size());
    int d = k ? static_cast<int>(m[0].size()) : 0;
    if (static_cast<int>(rhs.size()) != d) throw usage_error("solve dimension mismatch");
    RatMat aug(d, RatVec(k + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = m[j][i];
        aug[i][k] = rhs[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < k && row < d; ++c) {
        int p = -1;
        for (int r = row; r < d; ++r)
            if (aug[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(aug[row], aug[p]);
        for (int r = 0; r < d; ++r) {
            if (r == row || aug[r][c] == 0) continue;
            Rat f = aug[r][c] / aug[row][c];
            for (int c2 = c; c2 <= k; ++c2) aug[r][c2] -= f * aug[row][c2];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int r = row; r < d; ++r)
        if (aug[r][k] != 0) return false;
    x.assign(k, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
    return true;
}

RatMat mat_inverse(const RatMat& m) {
    int n = static_cast<int>(m.size());
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw usage_error("inverse of non-square matrix");
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (aug[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) throw usage_error("singular matrix");
        std::swap(aug[c], aug[p]);
        Rat piv = aug[c][c];
        for (int c2 = 0; c2 < 2 * n; ++c2) aug[c][c2] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            Rat f = aug[r][c];
            for (int c2 = 0; c2 < 2 * n; ++c2) aug[r][c2] -= f * aug[c][c2];
        }
    }
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Rat mat_det(RatMat m) {
    int n = static_cast<int>(m.size());
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(m[c], m[p]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int c2 = c; c2 < n; ++c2) m[r][c2] -= f * m[c][c2];
        }
    }
    return det;
}

RatMat mat_transpose(const RatMat& m) {
    if (m.empty()) return {};
    RatMat t(m[0].size(), RatVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
    RatVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = rv_dot(m[i], v);
    return r;
}

RatVec mat_apply_left(const RatVec& v, const RatMat& m) {
    if (m.empty()) return {};
    RatVec r(m[0].size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j] += v[i] * m[i][j];
    return r;
}

} // namespace mmk
