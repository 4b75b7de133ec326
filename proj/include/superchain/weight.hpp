#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superchain {

// Torus character in the flat coordinates s = (s_1, ..., s_m).
using Weight = std::vector<int>;

inline Weight weight_zero(int m) { return Weight(m, 0); }

inline Weight operator+(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

inline Weight operator-(const Weight& a) {
    Weight c(a);
    for (auto& x : c) x = -x;
    return c;
}

inline Weight& operator+=(Weight& a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// root alpha_{pq} = e_p - e_q (0-based coordinates)
inline Weight root_weight(int m, int p, int q) {
    Weight w(m, 0);
    w[p] += 1;
    w[q] -= 1;
    return w;
}

inline std::string weight_str(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

// componentwise bounds [lo, hi] per coordinate
struct WeightBox {
    std::vector<std::pair<int, int>> bounds;

    int dim() const { return (int)bounds.size(); }

    static WeightBox cube(int m, int lo, int hi) {
        WeightBox b;
        b.bounds.assign(m, {lo, hi});
        return b;
    }

    bool contains(const Weight& w) const {
        if ((int)w.size() != dim()) return false;
        for (int i = 0; i < dim(); ++i)
            if (w[i] < bounds[i].first || w[i] > bounds[i].second) return false;
        return true;
    }

    WeightBox intersect(const WeightBox& o) const {
        WeightBox b;
        for (int i = 0; i < dim(); ++i)
            b.bounds.push_back({std::max(bounds[i].first, o.bounds[i].first),
                                std::min(bounds[i].second, o.bounds[i].second)});
        return b;
    }

    WeightBox shifted(const Weight& w) const {
        WeightBox b = *this;
        for (int i = 0; i < dim(); ++i) {
            b.bounds[i].first += w[i];
            b.bounds[i].second += w[i];
        }
        return b;
    }

    WeightBox padded(int k) const {
        WeightBox b = *this;
        for (auto& [lo, hi] : b.bounds) { lo -= k; hi += k; }
        return b;
    }

    std::vector<Weight> enumerate() const {
        std::vector<Weight> out;
        Weight w(dim());
        for (int i = 0; i < dim(); ++i) {
            if (bounds[i].first > bounds[i].second) return {};
            w[i] = bounds[i].first;
        }
        while (true) {
            out.push_back(w);
            int i = dim() - 1;
            while (i >= 0) {
                if (++w[i] <= bounds[i].second) break;
                w[i] = bounds[i].first;
                --i;
            }
            if (i < 0) break;
        }
        return out;
    }
};

} // namespace superchain
