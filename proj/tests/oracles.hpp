#pragma once

// Brute-force reference implementations used to cross-check the library.
// These deliberately share no code or strategy with the main algorithms:
// plain exhaustive scans with first-to-last ordering and no heuristics.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hyperchroma/hypergraph.hpp"

namespace oracle {

using hyperchroma::Edge;
using hyperchroma::EdgeList;
using hyperchroma::Hypergraph;

inline bool edges_meet(const Edge& a, const Edge& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return true;
    return false;
}

// Size of the largest pairwise-intersecting edge family, by scanning all
// 2^m subsets. Only usable for small m.
inline int max_intersecting(const Hypergraph& h) {
    int m = h.m();
    if (m > 22) throw std::invalid_argument("oracle::max_intersecting: too many edges");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; j < m && ok; ++j)
                if ((mask >> j & 1) && !edges_meet(h.edge(i), h.edge(j))) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcountl(mask));
    }
    return best;
}

namespace detail {

inline bool colorable(const Hypergraph& h, int t, std::vector<int>& color, int at) {
    if (at == h.m()) return true;
    for (int c = 0; c < t; ++c) {
        bool clash = false;
        for (int j = 0; j < at && !clash; ++j)
            if (color[j] == c && edges_meet(h.edge(at), h.edge(j))) clash = true;
        if (clash) continue;
        color[at] = c;
        if (colorable(h, t, color, at + 1)) return true;
    }
    color[at] = -1;
    return false;
}

inline void count_proper(const Hypergraph& h, int t, std::vector<int>& color, int at,
                         long long& total, bool surjective_only) {
    if (at == h.m()) {
        if (surjective_only) {
            std::vector<bool> used(t, false);
            for (int c : color) used[c] = true;
            for (int c = 0; c < t; ++c)
                if (!used[c]) return;
        }
        ++total;
        return;
    }
    for (int c = 0; c < t; ++c) {
        bool clash = false;
        for (int j = 0; j < at && !clash; ++j)
            if (color[j] == c && edges_meet(h.edge(at), h.edge(j))) clash = true;
        if (clash) continue;
        color[at] = c;
        count_proper(h, t, color, at + 1, total, surjective_only);
    }
    color[at] = -1;
}

} // namespace detail

// Chromatic index by trying t = 1, 2, ... with naive backtracking in
// edge-list order.
inline int chromatic_index(const Hypergraph& h) {
    if (h.m() == 0) return 0;
    for (int t = 1;; ++t) {
        std::vector<int> color(h.m(), -1);
        if (detail::colorable(h, t, color, 0)) return t;
    }
}

// Number of proper edge colorings with palette {0..t-1}, counted as plain
// functions (no identification of palettes).
inline long long proper_coloring_count(const Hypergraph& h, int t, bool surjective_only) {
    long long total = 0;
    std::vector<int> color(h.m(), -1);
    detail::count_proper(h, t, color, 0, total, surjective_only);
    return total;
}

// Surjective proper colorings up to relabeling of the palette. Relabeling
// acts freely on surjective colorings, so the raw count divides by t!.
inline long long colorings_up_to_relabel(const Hypergraph& h, int t) {
    long long raw = proper_coloring_count(h, t, true);
    long long fact = 1;
    for (int i = 2; i <= t; ++i) fact *= i;
    if (raw % fact != 0) throw std::logic_error("oracle: count not divisible by t!");
    return raw / fact;
}

// Automorphism count by scanning all n! vertex permutations.
inline long long automorphism_count(const Hypergraph& h) {
    if (h.n() > 9) throw std::invalid_argument("oracle::automorphism_count: too many vertices");
    EdgeList original = h.edges();
    std::sort(original.begin(), original.end());
    std::vector<int> perm(h.n());
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        EdgeList mapped;
        mapped.reserve(original.size());
        for (const Edge& e : original) {
            Edge im;
            im.reserve(e.size());
            for (int v : e) im.push_back(perm[v]);
            std::sort(im.begin(), im.end());
            mapped.push_back(std::move(im));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == original) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace oracle
