#pragma once

#include "linalg.hpp"
#include "root_data.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace superchain {

/*
 * Finite-dimensional Lie superalgebras as basis + structure constants + torus
 * weights + parities.  Basis order is fixed at construction and drives every
 * Koszul sign downstream, so builders sort deterministically.
 *
 * Brackets are stored for ordered pairs a <= b; [e_b, e_a] is recovered from
 * super-antisymmetry [x,y] = -(-1)^{|x||y|}[y,x].
 */

struct SuperLie {
    std::vector<std::string> labels;
    std::vector<Weight> weights;   // torus weight per basis element
    std::vector<int> parity;       // 0 even, 1 odd
    std::optional<std::vector<int>> grading; // optional Z-degree per element
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> brackets; // a<=b only
    std::vector<int> coord_positions; // pi-position per torus coordinate; empty if none

    int dim() const { return (int)labels.size(); }
    int torus_rank() const { return weights.empty() ? 0 : (int)weights[0].size(); }

    // cone is pointed iff every coordinate carries a position (weights of all
    // elements strictly decrease the positional functional)
    bool pointed() const { return !coord_positions.empty(); }

    const std::vector<std::pair<int, Rational>>& bracket_ordered(int a, int b) const {
        static const std::vector<std::pair<int, Rational>> empty;
        auto it = brackets.find({a, b});
        return it == brackets.end() ? empty : it->second;
    }

    // [e_a, e_b] for arbitrary order
    std::vector<std::pair<int, Rational>> bracket(int a, int b) const {
        if (a <= b) return bracket_ordered(a, b);
        auto v = bracket_ordered(b, a);
        Rational s = ((parity[a] & parity[b]) != 0) ? Rational(1) : Rational(-1);
        for (auto& [k, c] : v) c *= s;
        return v;
    }

    void set_bracket(int a, int b, std::vector<std::pair<int, Rational>> v) {
        if (a > b) throw std::invalid_argument("set_bracket expects a <= b");
        std::vector<std::pair<int, Rational>> clean;
        for (auto& [k, c] : v)
            if (c != 0) clean.push_back({k, c});
        if (!clean.empty()) brackets[{a, b}] = std::move(clean);
    }

    // weight and parity additivity of every stored bracket
    void validate() const {
        for (auto& [ab, terms] : brackets) {
            auto [a, b] = ab;
            for (auto& [k, c] : terms) {
                if (weights[k] != weights[a] + weights[b])
                    throw std::logic_error("bracket violates weight additivity at " + labels[a] +
                                           "," + labels[b]);
                if (parity[k] != ((parity[a] + parity[b]) % 2))
                    throw std::logic_error("bracket violates parity additivity");
            }
        }
    }

    std::string content_key() const {
        std::ostringstream os;
        os << "superlie v1\n";
        for (int i = 0; i < dim(); ++i)
            os << labels[i] << ';' << weight_str(weights[i]) << ';' << parity[i] << '\n';
        for (auto& [ab, terms] : brackets) {
            os << ab.first << ',' << ab.second << ':';
            for (auto& [k, c] : terms) os << k << '=' << to_string(c) << ' ';
            os << '\n';
        }
        return os.str();
    }
};

namespace detail {
// ad(x)y as a dense coefficient vector
inline std::vector<Rational> ad_apply(const SuperLie& a, int x,
                                      const std::vector<Rational>& y) {
    std::vector<Rational> out(a.dim(), Rational(0));
    for (int b = 0; b < a.dim(); ++b) {
        if (y[b] == 0) continue;
        for (auto& [k, c] : a.bracket(x, b)) out[k] += y[b] * c;
    }
    return out;
}
} // namespace detail

// Graded Jacobi identity on all basis triples:
//   (-1)^{|a||c|}[[a,b],c] + (-1)^{|b||a|}[[b,c],a] + (-1)^{|c||b|}[[c,a],b] = 0
inline bool verify_jacobi(const SuperLie& g) {
    int n = g.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                std::vector<Rational> acc(n, Rational(0));
                auto add_term = [&](int x, int y, int z, int sa, int sc) {
                    // sign (-1)^{|x||z|} * [[x,y],z]
                    Rational s = ((g.parity[sa] & g.parity[sc]) != 0) ? Rational(-1) : Rational(1);
                    std::vector<Rational> xy(n, Rational(0));
                    for (auto& [k, v] : g.bracket(x, y)) xy[k] += v;
                    for (int k = 0; k < n; ++k) {
                        if (xy[k] == 0) continue;
                        for (auto& [l, w] : g.bracket(k, z)) acc[l] += s * xy[k] * w;
                    }
                };
                add_term(a, b, c, a, c);
                add_term(b, c, a, b, a);
                add_term(c, a, b, c, b);
                for (auto& v : acc)
                    if (v != 0) return false;
            }
    return true;
}

/*
 * Nilpotent radical n_pi of the parabolic of shape (m_1..m_M | m_{M+1}..m_{M+N}):
 * matrix units E_pq with block(p) strictly pi-before block(q), bracket the
 * matrix supercommutator, weight(E_pq) = e_p - e_q.  Basis sorted by
 * (pi-position of source block, pi-position of target block, row, column),
 * where E_pq maps coordinate q (source) to coordinate p (target).
 */
inline SuperLie build_nilradical(const ParabolicShape& shape,
                                 const std::vector<int>* block_degree = nullptr) {
    int m = shape.total_dim();
    auto pos = shape.coord_positions();

    struct Unit { int p, q; };
    std::vector<Unit> units;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            int bp = shape.coord_block(p), bq = shape.coord_block(q);
            if (shape.shuffle.before(bp, bq)) units.push_back({p, q});
        }
    std::sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
        int ka[4] = {pos[a.q], pos[a.p], a.p, a.q};
        int kb[4] = {pos[b.q], pos[b.p], b.p, b.q};
        return std::lexicographical_compare(ka, ka + 4, kb, kb + 4);
    });

    SuperLie g;
    std::map<std::pair<int, int>, int> index;
    std::vector<int> degrees;
    for (auto& u : units) {
        index[{u.p, u.q}] = g.dim();
        g.labels.push_back("E" + std::to_string(u.p + 1) + "," + std::to_string(u.q + 1));
        g.weights.push_back(root_weight(m, u.p, u.q));
        int bp = shape.coord_block(u.p), bq = shape.coord_block(u.q);
        g.parity.push_back(shape.block_is_odd(bp) != shape.block_is_odd(bq) ? 1 : 0);
        if (block_degree) degrees.push_back((*block_degree)[bq] - (*block_degree)[bp]);
    }
    if (block_degree) g.grading = degrees;
    // matrix supercommutator: [E_pq, E_rs] = delta_qr E_ps - (-1)^{|x||y|} delta_sp E_rq
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a; b < g.dim(); ++b) {
            auto [p, q] = std::pair(units[a].p, units[a].q);
            auto [r, s] = std::pair(units[b].p, units[b].q);
            std::map<int, Rational> terms;
            if (q == r) {
                auto it = index.find({p, s});
                if (it != index.end()) terms[it->second] += 1;
            }
            if (s == p) {
                Rational koszul = ((g.parity[a] & g.parity[b]) != 0) ? Rational(-1) : Rational(1);
                auto it = index.find({r, q});
                if (it != index.end()) terms[it->second] -= koszul;
            }
            std::vector<std::pair<int, Rational>> v(terms.begin(), terms.end());
            g.set_bracket(a, b, std::move(v));
        }
    g.coord_positions = pos;
    g.validate();
    return g;
}

struct NotAdjacentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Borel shuffles pi, pi' are adjacent when they differ by transposing the
// positions of one even coordinate i and one odd coordinate j with
// pi(j) = pi(i) + 1.  Returns (i, j) as 0-based block indices.
inline std::pair<int, int> adjacent_transposition(const Shuffle& pi, const Shuffle& pi_prime) {
    if (pi.M != pi_prime.M || pi.N != pi_prime.N)
        throw NotAdjacentError("shuffles of different type");
    int m = pi.size();
    std::vector<int> diff;
    for (int b = 0; b < m; ++b)
        if (pi.perm[b] != pi_prime.perm[b]) diff.push_back(b);
    if (diff.size() != 2) throw NotAdjacentError("shuffles do not differ by one transposition");
    int i = diff[0], j = diff[1];
    if (i >= pi.M || j < pi.M) throw NotAdjacentError("transposed pair is not an odd pair");
    if (!(pi_prime.perm[i] == pi.perm[j] && pi_prime.perm[j] == pi.perm[i]))
        throw NotAdjacentError("not a transposition");
    if (pi.perm[j] != pi.perm[i] + 1 && pi.perm[i] != pi.perm[j] + 1)
        throw NotAdjacentError("transposed positions are not neighbors");
    return {i, j};
}

struct InterpolatingL {
    SuperLie L;
    SuperLie J;        // (n_pi cap n_pi')^{sl(1|1)}, a nilradical of gl(M-1|N-1)
    int idx_e_ij = -1; // distinguished sl(1|1) triple inside L
    int idx_e_ji = -1;
    int idx_h = -1;
    std::vector<int> J_in_L; // indices of J's basis inside L
    int coord_i = -1, coord_j = -1; // transposed flat coordinates
};

/*
 * L = sl(1|1) |x (n_pi cap n_pi') for adjacent Borel shuffles: the span of
 * n_pi, n_pi' and h = [e_ij, e_ji].  Built by explicit matrix units plus h;
 * h has weight 0 so the weight cone of L is not pointed.
 */
inline InterpolatingL build_interpolating_L(const ParabolicShape& shape_pi,
                                            const Shuffle& pi_prime) {
    if (!shape_pi.is_borel()) throw std::invalid_argument("interpolating L needs a Borel shape");
    const Shuffle& pi = shape_pi.shuffle;
    auto [bi, bj] = adjacent_transposition(pi, pi_prime);
    if (pi.perm[bj] != pi.perm[bi] + 1)
        throw NotAdjacentError("expected pi(j) = pi(i) + 1 with |pi'| = |pi| + 1");
    int m = pi.size();
    int ci = shape_pi.block_start(bi); // flat coordinate of the even block
    int cj = shape_pi.block_start(bj);
    auto pos = shape_pi.coord_positions();

    // matrix units of n_pi (sorted as in build_nilradical) plus e_ji
    struct Unit { int p, q; };
    std::vector<Unit> units;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            if (pos[p] < pos[q]) units.push_back({p, q});
    std::sort(units.begin(), units.end(), [&](const Unit& a, const Unit& b) {
        int ka[4] = {pos[a.q], pos[a.p], a.p, a.q};
        int kb[4] = {pos[b.q], pos[b.p], b.p, b.q};
        return std::lexicographical_compare(ka, ka + 4, kb, kb + 4);
    });
    units.push_back({cj, ci}); // e_ji

    SuperLie L;
    std::map<std::pair<int, int>, int> index;
    for (auto& u : units) {
        index[{u.p, u.q}] = L.dim();
        L.labels.push_back("E" + std::to_string(u.p + 1) + "," + std::to_string(u.q + 1));
        L.weights.push_back(root_weight(m, u.p, u.q));
        L.parity.push_back(shape_pi.coord_is_odd(u.p) != shape_pi.coord_is_odd(u.q) ? 1 : 0);
    }
    int idx_h = L.dim();
    L.labels.push_back("h");
    L.weights.push_back(weight_zero(m));
    L.parity.push_back(0);

    for (int a = 0; a < L.dim(); ++a)
        for (int b = a; b < L.dim(); ++b) {
            std::map<int, Rational> terms;
            if (a < (int)units.size() && b < (int)units.size()) {
                auto [p, q] = std::pair(units[a].p, units[a].q);
                auto [r, s] = std::pair(units[b].p, units[b].q);
                Rational koszul = ((L.parity[a] & L.parity[b]) != 0) ? Rational(-1) : Rational(1);
                // diagonal outputs only arise from the pair {e_ij, e_ji} and
                // combine to h = E_ii + E_jj
                Rational diag_i(0), diag_j(0);
                auto add_unit = [&](int pp, int qq, const Rational& coef) {
                    if (pp == qq) {
                        if (pp == ci) diag_i += coef;
                        else if (pp == cj) diag_j += coef;
                        else throw std::logic_error("unexpected diagonal bracket output");
                        return;
                    }
                    auto it = index.find({pp, qq});
                    if (it == index.end()) throw std::logic_error("bracket escapes L");
                    terms[it->second] += coef;
                };
                if (q == r) add_unit(p, s, Rational(1));        // xy
                if (s == p) add_unit(r, q, -koszul);            // -(-1)^{|x||y|} yx
                if (diag_i != diag_j) throw std::logic_error("diagonal output is not a multiple of h");
                if (diag_i != 0) terms[idx_h] += diag_i;
            } else if (a < (int)units.size()) {
                // ordered pair (E_pq, h): [E, h] = -[h, E] = -(w_i + w_j) E
                const Weight& w = L.weights[a];
                int hval = w[ci] + w[cj];
                if (hval != 0) terms[a] += Rational(-hval);
            }
            std::vector<std::pair<int, Rational>> v(terms.begin(), terms.end());
            L.set_bracket(a, b, std::move(v));
        }

    InterpolatingL out;
    out.coord_i = ci;
    out.coord_j = cj;
    out.idx_h = idx_h;
    out.idx_e_ij = index.at({ci, cj});
    out.idx_e_ji = index.at({cj, ci});

    // J = units commuting with the sl(1|1): E_pq with p,q not in {ci,cj}
    SuperLie J;
    for (int k = 0; k < (int)units.size(); ++k) {
        auto& u = units[k];
        if (u.p == ci || u.p == cj || u.q == ci || u.q == cj) continue;
        out.J_in_L.push_back(k);
        J.labels.push_back(L.labels[k]);
        J.weights.push_back(L.weights[k]);
        J.parity.push_back(L.parity[k]);
    }
    for (int a = 0; a < J.dim(); ++a)
        for (int b = a; b < J.dim(); ++b) {
            std::vector<std::pair<int, Rational>> v;
            for (auto& [k, c] : L.bracket(out.J_in_L[a], out.J_in_L[b])) {
                auto it = std::find(out.J_in_L.begin(), out.J_in_L.end(), k);
                if (it == out.J_in_L.end()) throw std::logic_error("J is not closed");
                v.push_back({(int)(it - out.J_in_L.begin()), c});
            }
            J.set_bracket(a, b, std::move(v));
        }
    // J keeps the ambient torus coordinates; its cone is pointed via the
    // ambient positions restricted away from ci, cj
    J.coord_positions = shape_pi.coord_positions();

    out.L = std::move(L);
    out.J = std::move(J);
    out.L.validate();
    out.J.validate();
    return out;
}

// standalone sl(1|1): basis Q+, Q-, H with [Q+,Q-] = H
inline SuperLie build_sl11() {
    SuperLie g;
    g.labels = {"Q+", "Q-", "H"};
    g.weights = {{1, -1}, {-1, 1}, {0, 0}};
    g.parity = {1, 1, 0};
    g.set_bracket(0, 1, {{2, Rational(1)}});
    g.validate();
    return g;
}

} // namespace superchain
