#pragma once

#include <algorithm>
#include <iterator>

#include "hyperchroma/hypergraph.hpp"

inline hyperchroma::Hypergraph make_h(int n, hyperchroma::EdgeList edges) {
    return hyperchroma::Hypergraph::make(n, std::move(edges));
}

// Index of the edge with the given vertex set, or -1.
inline int edge_index(const hyperchroma::Hypergraph& h, hyperchroma::Edge e) {
    std::sort(e.begin(), e.end());
    for (int i = 0; i < h.m(); ++i)
        if (h.edge(i) == e) return i;
    return -1;
}

// Every edge other than e0 meets e0 in exactly one vertex x0, and for each
// further vertex x of e0 exactly one edge through x avoids it.
inline bool star_pairing_ok(const hyperchroma::Hypergraph& h,
                            const hyperchroma::Edge& e0) {
    using hyperchroma::Edge;
    using hyperchroma::Hypergraph;
    int e0_index = edge_index(h, Edge(e0));
    if (e0_index < 0) return false;
    for (int i = 0; i < h.m(); ++i) {
        if (i == e0_index) continue;
        const Edge& e = h.edge(i);
        Edge common;
        std::set_intersection(e.begin(), e.end(), e0.begin(), e0.end(),
                              std::back_inserter(common));
        if (common.size() != 1) return false;
        for (int x : e0) {
            if (x == common[0]) continue;
            int disjoint = 0;
            for (int j : h.star(x))
                if (j != e0_index &&
                    Hypergraph::intersection_size(h.edge(j), e) == 0)
                    ++disjoint;
            if (disjoint != 1) return false;
        }
    }
    return true;
}
