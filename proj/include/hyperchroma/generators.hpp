#pragma once

#include <array>
#include <stdexcept>

#include "galois.hpp"
#include "hypergraph.hpp"

namespace hyperchroma {

// Coordinate chart for plane-derived hypergraphs: the point (x, y) over a
// field of order q is the vertex q*x + y.
struct PlaneCoords {
    GaloisField field;

    explicit PlaneCoords(int order) : field(order) {}

    int vertex_of(int x, int y) const { return field.order() * x + y; }
    int x_of(int v) const { return v / field.order(); }
    int y_of(int v) const { return v % field.order(); }
};

struct Plane {
    Hypergraph hypergraph;
    PlaneCoords coords;
};

// Membership certificate for the class of linear k-uniform hypergraphs on
// k^2 vertices with k^2+1 edges, a distinguished edge whose vertices all
// have degree k+1, and minimum degree k elsewhere.
struct HkCertificate {
    bool member = false;
    int k = 0;
    std::vector<int> e0;             // vertex set of the distinguished edge, empty if none
    std::vector<int> degrees;
    // conditions[0]: linear and k-uniform
    // conditions[1]: k^2 vertices
    // conditions[2]: k^2+1 edges
    // conditions[3]: some edge has all vertices of degree k+1
    // conditions[4]: every vertex has degree at least k
    std::array<bool, 5> conditions{};
    int first_violated = -1;
};

inline HkCertificate check_class_Hk(const Hypergraph& h, int k) {
    HkCertificate c;
    c.k = k;
    c.degrees = h.degrees();

    bool uniform = true;
    for (const Edge& e : h.edges())
        if (static_cast<int>(e.size()) != k) uniform = false;
    c.conditions[0] = k >= 2 && uniform && h.is_linear();
    c.conditions[1] = h.n() == k * k;
    c.conditions[2] = h.m() == k * k + 1;

    for (int i = 0; i < h.m() && c.e0.empty(); ++i) {
        bool all_high = true;
        for (int x : h.edge(i))
            if (c.degrees[x] != k + 1) all_high = false;
        if (all_high) c.e0 = h.edge(i);
    }
    c.conditions[3] = !c.e0.empty();

    c.conditions[4] = true;
    for (int v = 0; v < h.n(); ++v)
        if (c.degrees[v] < k) c.conditions[4] = false;

    c.member = true;
    for (int i = 0; i < 5; ++i)
        if (!c.conditions[i]) {
            c.member = false;
            if (c.first_violated == -1) c.first_violated = i;
        }
    return c;
}

struct HkMember {
    Hypergraph hypergraph;
    HkCertificate certificate;
    PlaneCoords coords;
};

// Field plane of prime power order k: vertices are the k^2 points of the
// coordinate plane, edges the k^2+k affine lines (k verticals x = c and
// k^2 graphs y = s*x + b).
inline Plane field_plane(int k) {
    PlaneCoords coords(k);
    const GaloisField& f = coords.field;
    EdgeList edges;
    for (int c = 0; c < k; ++c) {
        Edge e;
        for (int y = 0; y < k; ++y) e.push_back(coords.vertex_of(c, y));
        edges.push_back(std::move(e));
    }
    for (int s = 0; s < k; ++s)
        for (int b = 0; b < k; ++b) {
            Edge e;
            for (int x = 0; x < k; ++x) e.push_back(coords.vertex_of(x, f.add(f.mul(s, x), b)));
            edges.push_back(std::move(e));
        }
    return Plane{Hypergraph::make(k * k, std::move(edges)), std::move(coords)};
}

// Field plane with all vertical lines except the axis x = 0 removed.
// The surviving vertical {0, ..., k-1} is the distinguished edge.
inline HkMember truncated_plane(int k) {
    Plane p = field_plane(k);
    EdgeList kept;
    for (const Edge& e : p.hypergraph.edges()) {
        bool vertical = p.coords.x_of(e.front()) == p.coords.x_of(e.back());
        if (!vertical || p.coords.x_of(e.front()) == 0) kept.push_back(e);
    }
    Hypergraph h = Hypergraph::make(p.hypergraph.n(), std::move(kept));
    HkCertificate cert = check_class_Hk(h, k);
    return HkMember{std::move(h), std::move(cert), std::move(p.coords)};
}

// Second member of the class, built from the field plane around the origin
// x0 = (0,0): drop the k-1 lines through x0 of nonzero slope, keep both
// axes and all horizontals, and reroute each vertical x = j (j != 0)
// through x0 in place of its lost axis point (j,0).
inline HkMember twisted_plane(int k) {
    if (k < 3) throw std::invalid_argument("twisted plane requires order at least 3");
    PlaneCoords coords(k);
    const GaloisField& f = coords.field;
    EdgeList edges;

    Edge e0;
    for (int y = 0; y < k; ++y) e0.push_back(coords.vertex_of(0, y));
    edges.push_back(std::move(e0));

    for (int c = 0; c < k; ++c) {
        Edge e;
        for (int x = 0; x < k; ++x) e.push_back(coords.vertex_of(x, c));
        edges.push_back(std::move(e));
    }

    for (int j = 1; j < k; ++j) {
        Edge a{coords.vertex_of(0, 0)};
        for (int y = 1; y < k; ++y) a.push_back(coords.vertex_of(j, y));
        edges.push_back(std::move(a));
    }

    for (int s = 1; s < k; ++s)
        for (int b = 1; b < k; ++b) {
            Edge e;
            for (int x = 0; x < k; ++x) e.push_back(coords.vertex_of(x, f.add(f.mul(s, x), b)));
            edges.push_back(std::move(e));
        }

    Hypergraph h = Hypergraph::make(k * k, std::move(edges));
    HkCertificate cert = check_class_Hk(h, k);
    return HkMember{std::move(h), std::move(cert), std::move(coords)};
}

// The order-3 twisted plane in its classical published labeling (built
// around the point (0,2) instead of the origin). Isomorphic to
// twisted_plane(3) but not equal as a labeled hypergraph.
inline Hypergraph h3_prime_literal() {
    return Hypergraph::make(9, {{0, 1, 2},
                                {0, 3, 6},
                                {0, 4, 8},
                                {0, 5, 7},
                                {1, 4, 7},
                                {1, 3, 8},
                                {1, 5, 6},
                                {2, 5, 8},
                                {2, 3, 4},
                                {2, 7, 6}});
}

} // namespace hyperchroma
