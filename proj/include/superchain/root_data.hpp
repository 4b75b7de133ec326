#pragma once

#include "weight.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superchain {

/*
 * Shuffles, parabolic shapes, roots and the sector combinatorics of the closed
 * Euler-coefficient formula.
 *
 * Conventions fixed once for the whole library:
 *   - a shape has M even blocks then N odd blocks; flat coordinates are grouped
 *     block by block in that order;
 *   - the shuffle perm assigns each block its position, i <_pi j iff
 *     perm(i) < perm(j);
 *   - the nilradical is spanned by matrix units E_pq with block(p) strictly
 *     pi-before block(q); weight(E_pq) = e_p - e_q, and the dual cochain is
 *     counted at the same weight e_p - e_q in every table and series
 *     (generating-function bookkeeping).
 */

struct NotAShuffleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyBlockError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Shuffle {
    int M = 0;
    int N = 0;
    std::vector<int> perm; // perm[i] = position of block i, 1-based values

    int size() const { return M + N; }
    int pos(int block) const { return perm[block]; } // block 0-based

    bool before(int i, int j) const { return perm[i] < perm[j]; }

    // number of inverted odd pairs = length within the shuffle poset
    int length() const {
        int l = 0;
        for (int i = 0; i < M; ++i)
            for (int j = M; j < M + N; ++j)
                if (perm[j] < perm[i]) ++l;
        return l;
    }

    bool operator==(const Shuffle& o) const {
        return M == o.M && N == o.N && perm == o.perm;
    }
};

inline Shuffle make_shuffle(int M, int N, std::vector<int> perm) {
    if ((int)perm.size() != M + N) throw NotAShuffleError("permutation has wrong length");
    std::vector<bool> seen(M + N + 1, false);
    for (int v : perm) {
        if (v < 1 || v > M + N || seen[v]) throw NotAShuffleError("not a permutation");
        seen[v] = true;
    }
    for (int i = 0; i + 1 < M; ++i)
        if (perm[i] >= perm[i + 1]) throw NotAShuffleError("not increasing on the even side");
    for (int i = M; i + 1 < M + N; ++i)
        if (perm[i] >= perm[i + 1]) throw NotAShuffleError("not increasing on the odd side");
    return Shuffle{M, N, std::move(perm)};
}

inline Shuffle identity_shuffle(int M, int N) {
    std::vector<int> p(M + N);
    std::iota(p.begin(), p.end(), 1);
    return Shuffle{M, N, std::move(p)};
}

// The shuffle pi_1 sending 1,...,2N to 1, N+1, 2, N+2, ..., N, 2N.
inline Shuffle interleaving_shuffle(int N) {
    std::vector<int> p(2 * N);
    for (int i = 0; i < N; ++i) {
        p[i] = 2 * i + 1;
        p[N + i] = 2 * i + 2;
    }
    return Shuffle{N, N, std::move(p)};
}

// all (M,N)-shuffles, lexicographic in the set of odd-side positions
inline std::vector<Shuffle> all_shuffles(int M, int N) {
    std::vector<Shuffle> out;
    std::vector<int> pick(N);
    // choose the positions of the odd blocks
    std::vector<bool> used;
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == N) {
            std::vector<bool> odd_pos(M + N + 1, false);
            for (int v : pick) odd_pos[v] = true;
            std::vector<int> perm(M + N);
            int e = 0;
            for (int v = 1; v <= M + N; ++v)
                if (!odd_pos[v]) perm[e++] = v;
            for (int i = 0; i < N; ++i) perm[M + i] = pick[i];
            out.push_back(Shuffle{M, N, perm});
            return;
        }
        for (int v = from; v <= M + N; ++v) {
            pick[idx] = v;
            rec(idx + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

struct ParabolicShape {
    std::vector<int> even_blocks; // m_1..m_M
    std::vector<int> odd_blocks;  // m_{M+1}..m_{M+N}
    Shuffle shuffle;

    int M() const { return (int)even_blocks.size(); }
    int N() const { return (int)odd_blocks.size(); }
    int num_blocks() const { return M() + N(); }
    int block_size(int b) const {
        return b < M() ? even_blocks[b] : odd_blocks[b - M()];
    }
    bool block_is_odd(int b) const { return b >= M(); }

    int total_dim() const {
        int m = 0;
        for (int b = 0; b < num_blocks(); ++b) m += block_size(b);
        return m;
    }

    // first flat coordinate of block b (0-based coordinates)
    int block_start(int b) const {
        int s = 0;
        for (int i = 0; i < b; ++i) s += block_size(i);
        return s;
    }

    int coord_block(int c) const {
        int b = 0;
        while (c >= block_start(b) + block_size(b)) ++b;
        return b;
    }

    bool coord_is_odd(int c) const { return block_is_odd(coord_block(c)); }

    // pi-position of each flat coordinate: blocks ordered by shuffle position,
    // coordinates consecutive inside a block (the refined shuffle of a shape)
    std::vector<int> coord_positions() const {
        int m = total_dim();
        std::vector<int> pos(m, 0);
        for (int b = 0; b < num_blocks(); ++b) {
            int base = 0;
            for (int b2 = 0; b2 < num_blocks(); ++b2)
                if (shuffle.before(b2, b)) base += block_size(b2);
            for (int t = 0; t < block_size(b); ++t) pos[block_start(b) + t] = base + t + 1;
        }
        return pos;
    }

    // flatten to the Borel of gl(m_ev|m_od) with the refined shuffle
    ParabolicShape refined_borel() const {
        int mev = 0, mod = 0;
        for (int x : even_blocks) mev += x;
        for (int x : odd_blocks) mod += x;
        auto pos = coord_positions();
        int m = total_dim();
        // coordinate c of the refined shape <-> unit block; even coordinates first
        std::vector<int> perm;
        for (int c = 0; c < m; ++c)
            if (!coord_is_odd(c)) perm.push_back(pos[c]);
        for (int c = 0; c < m; ++c)
            if (coord_is_odd(c)) perm.push_back(pos[c]);
        ParabolicShape out;
        out.even_blocks.assign(mev, 1);
        out.odd_blocks.assign(mod, 1);
        out.shuffle = make_shuffle(mev, mod, perm);
        return out;
    }

    bool is_borel() const {
        for (int b = 0; b < num_blocks(); ++b)
            if (block_size(b) != 1) return false;
        return true;
    }
};

inline ParabolicShape make_shape(std::vector<int> even_blocks, std::vector<int> odd_blocks,
                                 std::vector<int> perm) {
    for (int x : even_blocks)
        if (x <= 0) throw EmptyBlockError("even block of size " + std::to_string(x));
    for (int x : odd_blocks)
        if (x <= 0) throw EmptyBlockError("odd block of size " + std::to_string(x));
    Shuffle s = make_shuffle((int)even_blocks.size(), (int)odd_blocks.size(), std::move(perm));
    return ParabolicShape{std::move(even_blocks), std::move(odd_blocks), std::move(s)};
}

struct GradedShape {
    ParabolicShape shape;
    std::vector<int> block_degree; // V-degree per block
};

// Shape of the dg-framework: graded_dims[i] = (degree, dimension), nonzero dims.
// Even degrees become the even blocks (by increasing degree), odd degrees the
// odd blocks; the shuffle ranks all degrees increasingly.
inline GradedShape shape_from_graded(const std::vector<std::pair<int, int>>& graded_dims) {
    std::vector<std::pair<int, int>> ev, od;
    for (auto& [deg, dim] : graded_dims) {
        if (dim <= 0) throw EmptyBlockError("graded piece of dimension 0");
        (deg % 2 == 0 ? ev : od).push_back({deg, dim});
    }
    auto by_deg = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(ev.begin(), ev.end(), by_deg);
    std::sort(od.begin(), od.end(), by_deg);
    std::vector<std::pair<int, int>> blocks; // (degree, block index)
    std::vector<int> even_blocks, odd_blocks;
    for (auto& [d, n] : ev) { blocks.push_back({d, (int)blocks.size()}); even_blocks.push_back(n); }
    for (auto& [d, n] : od) { blocks.push_back({d, (int)blocks.size()}); odd_blocks.push_back(n); }
    std::vector<std::pair<int, int>> order(blocks);
    std::sort(order.begin(), order.end());
    std::vector<int> perm(blocks.size());
    for (int r = 0; r < (int)order.size(); ++r) perm[order[r].second] = r + 1;
    GradedShape out;
    out.shape = make_shape(std::move(even_blocks), std::move(odd_blocks), std::move(perm));
    for (auto& [d, b] : blocks) out.block_degree.push_back(d);
    return out;
}

// ---- text grammar ----------------------------------------------------------

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') { out.push_back(std::stoi(cur)); cur.clear(); }
        else cur.push_back(ch);
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

// "m1,...,mM|mM+1,...,mM+N"
inline std::pair<std::vector<int>, std::vector<int>> parse_shape_text(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) return {parse_int_list(s), {}};
    return {parse_int_list(s.substr(0, bar)), parse_int_list(s.substr(bar + 1))};
}

inline ParabolicShape parse_shape(const std::string& shape_text, const std::string& shuffle_text) {
    auto [ev, od] = parse_shape_text(shape_text);
    std::vector<int> perm;
    if (shuffle_text.empty()) {
        perm.resize(ev.size() + od.size());
        std::iota(perm.begin(), perm.end(), 1);
    } else {
        perm = parse_int_list(shuffle_text);
    }
    return make_shape(ev, od, perm);
}

// ---- roots -----------------------------------------------------------------

// One entry per matrix-unit root space of n_pi: e_p - e_q with block(p)
// pi-before block(q); parity odd iff the blocks sit on opposite sides.
inline std::vector<std::pair<Weight, int>> positive_roots(const ParabolicShape& shape) {
    std::vector<std::pair<Weight, int>> out;
    int m = shape.total_dim();
    int nb = shape.num_blocks();
    for (int bi = 0; bi < nb; ++bi)
        for (int bj = 0; bj < nb; ++bj) {
            if (!shape.shuffle.before(bi, bj)) continue;
            int parity = (shape.block_is_odd(bi) != shape.block_is_odd(bj)) ? 1 : 0;
            for (int p = shape.block_start(bi); p < shape.block_start(bi) + shape.block_size(bi); ++p)
                for (int q = shape.block_start(bj); q < shape.block_start(bj) + shape.block_size(bj); ++q)
                    out.push_back({root_weight(m, p, q), parity});
        }
    return out;
}

// delta^pi = sum of odd roots alpha_{ji} positive for b_pi, negative for the
// standard Borel: pairs i <= M < j with pi(j) < pi(i).  Blocks all of size 1.
inline Weight delta_pi(const Shuffle& pi) {
    int m = pi.size();
    Weight d(m, 0);
    for (int i = 0; i < pi.M; ++i)
        for (int j = pi.M; j < m; ++j)
            if (pi.perm[j] < pi.perm[i]) d += root_weight(m, j, i);
    return d;
}

// ---- sectors (closed Euler-coefficient formula) ----------------------------

struct SectorSpec {
    std::vector<int> phi; // phi[i] in {N..2N-1}, bijection {0..N-1} -> {N..2N-1}
    Shuffle pi;           // M = N
};

// Chords [a_{pi(i)}, a_{pi(phi(i))}] on a circle with 2N clockwise points;
// chords (p,q) and (r,s) cross iff exactly one of r,s lies strictly inside the
// cyclic interval (p,q).  Returns (-1)^{number of crossings}.
inline int arc_crossing_sign(const SectorSpec& spec) {
    int N = spec.pi.M;
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < N; ++i)
        chords.push_back({spec.pi.perm[i], spec.pi.perm[spec.phi[i]]});
    auto inside = [&](int p, int q, int x) {
        // strictly inside the clockwise interval from p to q
        if (p < q) return p < x && x < q;
        return x > p || x < q;
    };
    int crossings = 0;
    for (std::size_t a = 0; a < chords.size(); ++a)
        for (std::size_t b = a + 1; b < chords.size(); ++b) {
            auto [p, q] = chords[a];
            auto [r, s] = chords[b];
            if (inside(p, q, r) != inside(p, q, s)) ++crossings;
        }
    return (crossings % 2 == 0) ? 1 : -1;
}

// lambda in S(phi,pi): lambda = sum_i c_i alpha_{i,phi(i)} with c_i >= 0 where
// pi(i) < pi(phi(i)) and c_i < 0 where pi(i) > pi(phi(i)).
inline bool sector_membership(const Weight& lambda, const SectorSpec& spec) {
    int N = spec.pi.M;
    if ((int)lambda.size() != 2 * N) throw std::invalid_argument("weight length != 2N");
    for (int i = 0; i < N; ++i)
        if (lambda[spec.phi[i]] != -lambda[i]) return false;
    for (int i = 0; i < N; ++i) {
        int c = lambda[i];
        if (spec.pi.perm[i] < spec.pi.perm[spec.phi[i]]) {
            if (c < 0) return false;
        } else {
            if (c >= 0) return false;
        }
    }
    return true;
}

// all bijections {0..N-1} -> {N..2N-1} in lexicographic order
inline std::vector<std::vector<int>> all_sector_bijections(int N) {
    std::vector<int> base(N);
    for (int i = 0; i < N; ++i) base[i] = N + i;
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// sign bridging the CE-degree Euler characteristic and the total-parity one:
// (-1)^{sum of odd-side coordinates of lambda}
inline int parity_flip_sign(const ParabolicShape& shape, const Weight& lambda) {
    long s = 0;
    for (int c = 0; c < (int)lambda.size(); ++c)
        if (shape.coord_is_odd(c)) s += lambda[c];
    return (s % 2 == 0) ? 1 : -1;
}

} // namespace superchain
