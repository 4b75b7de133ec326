#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superchain {

/*
 * Exact sparse linear algebra over Q: ranks, kernels and cohomology of finite
 * complexes.  Rows are kept as primitive integer vectors (content divided out)
 * so elimination runs in mpz arithmetic; pivots are chosen Markowitz-style to
 * limit fill-in.  Matrices below a size threshold take a dense path.
 */

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    // one sorted (col, value) list per row, no zeros, no duplicate columns
    std::vector<std::vector<std::pair<int, Rational>>> row_data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}

    static SparseMatrix from_triplets(int r, int c,
                                      const std::vector<std::tuple<int, int, Rational>>& ts) {
        SparseMatrix m(r, c);
        std::map<std::pair<int, int>, Rational> acc;
        for (auto& [i, j, v] : ts) {
            if (i < 0 || i >= r || j < 0 || j >= c) throw std::out_of_range("triplet out of range");
            acc[{i, j}] += v;
        }
        for (auto& [ij, v] : acc)
            if (v != 0) m.row_data[ij.first].emplace_back(ij.second, v);
        return m;
    }

    void set(int i, int j, const Rational& v) {
        auto& row = row_data[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == j) {
            if (v == 0) row.erase(it); else it->second = v;
        } else if (v != 0) {
            row.insert(it, {j, v});
        }
    }

    Rational get(int i, int j) const {
        const auto& row = row_data[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == j) return it->second;
        return Rational(0);
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (auto& r : row_data) n += r.size();
        return n;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (auto& [j, v] : row_data[i]) t.row_data[j].emplace_back(i, v);
        return t;
    }

    SparseMatrix multiply(const SparseMatrix& b) const {
        if (cols != b.rows) throw std::invalid_argument("shape mismatch in multiply");
        SparseMatrix out(rows, b.cols);
        for (int i = 0; i < rows; ++i) {
            std::map<int, Rational> acc;
            for (auto& [k, v] : row_data[i])
                for (auto& [j, w] : b.row_data[k]) acc[j] += v * w;
            for (auto& [j, v] : acc)
                if (v != 0) out.row_data[i].emplace_back(j, v);
        }
        return out;
    }

    bool is_zero() const {
        for (auto& r : row_data)
            if (!r.empty()) return false;
        return true;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if ((int)x.size() != cols) throw std::invalid_argument("vector length mismatch");
        std::vector<Rational> y(rows, Rational(0));
        for (int i = 0; i < rows; ++i)
            for (auto& [j, v] : row_data[i]) y[i] += v * x[j];
        return y;
    }
};

namespace detail {

using IRow = std::vector<std::pair<int, Integer>>; // sorted sparse integer row

// scale a rational row to a primitive integer row (kernel/rank invariant)
inline IRow primitive_row(const std::vector<std::pair<int, Rational>>& row) {
    Integer l = 1;
    for (auto& [j, v] : row) l = lcm(l, Integer(denominator(v)));
    IRow out;
    out.reserve(row.size());
    Integer g = 0;
    for (auto& [j, v] : row) {
        Integer n = Integer(numerator(v)) * (l / Integer(denominator(v)));
        g = gcd(g, n);
        out.emplace_back(j, std::move(n));
    }
    if (g > 1)
        for (auto& [j, n] : out) n /= g;
    return out;
}

// r := (b*r - a*other) / content, exact
inline IRow row_combine(const IRow& r, const Integer& b, const IRow& other, const Integer& a) {
    IRow out;
    out.reserve(r.size() + other.size());
    std::size_t i = 0, k = 0;
    Integer g = 0;
    while (i < r.size() || k < other.size()) {
        if (k == other.size() || (i < r.size() && r[i].first < other[k].first)) {
            out.emplace_back(r[i].first, b * r[i].second);
            ++i;
        } else if (i == r.size() || other[k].first < r[i].first) {
            out.emplace_back(other[k].first, -a * other[k].second);
            ++k;
        } else {
            Integer v = b * r[i].second - a * other[k].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i; ++k;
        }
    }
    for (auto& [j, v] : out) g = gcd(g, v);
    if (g > 1)
        for (auto& [j, v] : out) v /= g;
    return out;
}

inline int dense_rank_bareiss(const SparseMatrix& m) {
    const int n = m.rows, c = m.cols;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(c, Integer(0)));
    for (int i = 0; i < n; ++i) {
        IRow pr = primitive_row(m.row_data[i]);
        for (auto& [j, v] : pr) a[i][j] = v;
    }
    Integer prev = 1;
    int rank = 0, row = 0;
    for (int col = 0; col < c && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < c; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row; ++rank;
    }
    return rank;
}

} // namespace detail

struct EliminationResult {
    int rank = 0;
    // echelon rows (primitive integer entries stored as Rational) and their pivot columns
    std::vector<std::vector<std::pair<int, Rational>>> echelon;
    std::vector<int> pivot_cols;
};

// Sparse fraction-free elimination with Markowitz-style pivoting.
inline EliminationResult eliminate(const SparseMatrix& m) {
    using detail::IRow;
    std::vector<IRow> rows;
    rows.reserve(m.rows);
    for (auto& r : m.row_data)
        if (!r.empty()) rows.push_back(detail::primitive_row(r));

    EliminationResult res;
    std::vector<int> col_count(m.cols, 0);
    std::vector<bool> active(rows.size(), true);

    auto recount = [&]() {
        std::fill(col_count.begin(), col_count.end(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (active[i])
                for (auto& [j, v] : rows[i]) ++col_count[j];
    };
    recount();

    std::size_t remaining = rows.size();
    while (remaining > 0) {
        // Markowitz: minimize (nnz(row)-1)*(nnz(col)-1) over candidate pivots
        long best_score = -1;
        std::size_t best_row = 0;
        int best_col = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            for (auto& [j, v] : rows[i]) {
                long score = (long)(rows[i].size() - 1) * (long)(col_count[j] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_row = i;
                    best_col = j;
                }
            }
            if (best_score == 0) break;
        }
        if (best_col < 0) break;

        IRow piv = std::move(rows[best_row]);
        active[best_row] = false;
        --remaining;
        Integer pval;
        for (auto& [j, v] : piv)
            if (j == best_col) { pval = v; break; }

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            Integer a = 0;
            for (auto& [j, v] : rows[i])
                if (j == best_col) { a = v; break; }
            if (a == 0) continue;
            rows[i] = detail::row_combine(rows[i], pval, piv, a);
            if (rows[i].empty()) { active[i] = false; --remaining; }
        }
        recount();

        std::vector<std::pair<int, Rational>> ech;
        ech.reserve(piv.size());
        for (auto& [j, v] : piv) ech.emplace_back(j, Rational(v));
        res.echelon.push_back(std::move(ech));
        res.pivot_cols.push_back(best_col);
        ++res.rank;
    }
    return res;
}

inline int rank(const SparseMatrix& m, int dense_threshold = 64) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (m.rows <= dense_threshold && m.cols <= dense_threshold)
        return detail::dense_rank_bareiss(m);
    return eliminate(m).rank;
}

// Exact basis of the null space; size = cols - rank.
inline std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    EliminationResult e = eliminate(m);

    // Order echelon rows by pivot column and back-substitute per free column.
    std::vector<int> order(e.echelon.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return e.pivot_cols[a] < e.pivot_cols[b]; });

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : e.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(m.cols, Rational(0));
        x[free_col] = 1;
        for (int oi = (int)order.size() - 1; oi >= 0; --oi) {
            const auto& row = e.echelon[order[oi]];
            int pc = e.pivot_cols[order[oi]];
            Rational s(0);
            Rational pivval(0);
            for (auto& [j, v] : row) {
                if (j == pc) pivval = v;
                else s += v * x[j];
            }
            x[pc] = -s / pivval;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

struct NotAComplexError : std::runtime_error {
    int degree;
    explicit NotAComplexError(int deg)
        : std::runtime_error("maps[" + std::to_string(deg + 1) + "] * maps[" +
                             std::to_string(deg) + "] != 0"),
          degree(deg) {}
};

// Finite complex: spaces[p] is the dimension in degree p (contiguous range),
// maps[p] : degree p -> p+1, so maps[p] is spaces[p+1] x spaces[p].
struct FiniteComplex {
    std::vector<int> spaces;
    std::vector<SparseMatrix> maps; // size = spaces.size() - 1 (or equal, trailing map to 0)

    void validate_shapes() const {
        for (std::size_t p = 0; p + 1 < spaces.size(); ++p) {
            if (p >= maps.size()) throw std::invalid_argument("missing differential");
            if (maps[p].rows != spaces[p + 1] || maps[p].cols != spaces[p])
                throw std::invalid_argument("differential shape mismatch at degree " +
                                            std::to_string(p));
        }
    }

    void validate_composability() const {
        for (std::size_t p = 0; p + 1 < maps.size(); ++p)
            if (!maps[p + 1].multiply(maps[p]).is_zero()) throw NotAComplexError((int)p);
    }
};

inline std::vector<int> cohomology_dims(const FiniteComplex& c) {
    c.validate_shapes();
    c.validate_composability();
    std::size_t n = c.spaces.size();
    std::vector<int> ranks(n, 0); // rank of maps[p] (0 past the end)
    for (std::size_t p = 0; p + 1 < n; ++p) ranks[p] = rank(c.maps[p]);
    std::vector<int> h(n);
    for (std::size_t p = 0; p < n; ++p) {
        int ker = c.spaces[p] - (p + 1 < n ? ranks[p] : 0);
        int im = (p == 0) ? 0 : ranks[p - 1];
        h[p] = ker - im;
    }
    return h;
}

/*
 * Small dense utilities over Q used by the mixed-complex and sl(1|1) machinery:
 * row spaces, sums and intersections of subspaces, solving.  Dimensions there
 * stay small, so simple dense RREF is the right tool.
 */

using Mat = std::vector<std::vector<Rational>>; // dense, row major

inline Mat mat_zero(int r, int c) { return Mat(r, std::vector<Rational>(c, Rational(0))); }

inline Mat mat_mul(const Mat& a, const Mat& b) {
    int r = (int)a.size();
    int k = r ? (int)a[0].size() : 0;
    int c = b.empty() ? 0 : (int)b[0].size();
    if ((int)b.size() != k) throw std::invalid_argument("mat_mul shape mismatch");
    Mat out = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Rational inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

inline int mat_rank(Mat m) { return (int)rref(m).size(); }

// basis (as RREF rows) of the row space
inline Mat row_space(Mat m) { rref(m); return m; }

inline Mat mat_vstack(const Mat& a, const Mat& b) {
    Mat out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// dim(span(a) + span(b))
inline int rank_of_sum(const Mat& a, const Mat& b) { return mat_rank(mat_vstack(a, b)); }

// dim((span(a) + span(b)) / span(b))
inline int rank_modulo(const Mat& a, const Mat& b) {
    return rank_of_sum(a, b) - mat_rank(b);
}

// kernel basis of a dense map (rows = target, cols = source), vectors as rows
inline Mat dense_kernel(const Mat& m, int cols) {
    std::vector<std::tuple<int, int, Rational>> ts;
    for (int i = 0; i < (int)m.size(); ++i)
        for (int j = 0; j < cols; ++j)
            if (m[i][j] != 0) ts.emplace_back(i, j, m[i][j]);
    auto vecs = kernel_basis(SparseMatrix::from_triplets((int)m.size(), cols, ts));
    Mat out;
    for (auto& v : vecs) out.push_back(v);
    return out;
}

// intersection of two row spans, basis as rows
inline Mat span_intersection(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    int cols = (int)a[0].size();
    // solve x*a = y*b: kernel of [a^T | -b^T] gives coefficients
    int na = (int)a.size(), nb = (int)b.size();
    Mat sys = mat_zero(cols, na + nb);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < na; ++i) sys[j][i] = a[i][j];
        for (int i = 0; i < nb; ++i) sys[j][na + i] = -b[i][j];
    }
    Mat ker = dense_kernel(sys, na + nb);
    Mat out;
    for (auto& coef : ker) {
        std::vector<Rational> v(cols, Rational(0));
        for (int i = 0; i < na; ++i)
            if (coef[i] != 0)
                for (int j = 0; j < cols; ++j) v[j] += coef[i] * a[i][j];
        bool nz = false;
        for (auto& x : v) if (x != 0) { nz = true; break; }
        if (nz) out.push_back(std::move(v));
    }
    return row_space(std::move(out));
}

} // namespace superchain
