#pragma once

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace hyperchroma {

using Edge = std::vector<int>;
using EdgeList = std::vector<Edge>;

// Undirected simple graph with adjacency rows stored as bitsets.
struct SimpleGraph {
    int n = 0;
    std::vector<Bitset> rows;
    std::vector<int> degrees;

    explicit SimpleGraph(int vertices = 0)
        : n(vertices), rows(vertices, Bitset(vertices)), degrees(vertices, 0) {}

    bool adjacent(int u, int v) const { return rows[u].test(v); }

    void add_edge(int u, int v) {
        if (u == v || adjacent(u, v)) return;
        rows[u].set(v);
        rows[v].set(u);
        ++degrees[u];
        ++degrees[v];
    }

    int max_degree() const {
        int d = 0;
        for (int x : degrees) d = std::max(d, x);
        return d;
    }
};

// Exact maximum clique (branch and bound with a greedy coloring bound).
// Returns one maximum clique as a sorted vertex list.
inline std::vector<int> max_clique(const SimpleGraph& g) {
    if (g.n == 0) return {};

    struct Solver {
        const SimpleGraph& g;
        std::vector<int> best;
        std::vector<int> current;

        explicit Solver(const SimpleGraph& graph) : g(graph) {}

        void expand(std::vector<int>& cand) {
            // Greedy-color the candidates; a vertex of color c can extend the
            // current clique to at most current.size() + c vertices.
            int nc = static_cast<int>(cand.size());
            std::vector<int> color(nc, 0);
            std::vector<int> order;
            order.reserve(nc);
            {
                std::vector<char> used(nc, 0);
                int colored = 0;
                int c = 1;
                while (colored < nc) {
                    Bitset forbidden(g.n);
                    for (int i = 0; i < nc; ++i) {
                        if (used[i]) continue;
                        int v = cand[i];
                        if (forbidden.test(v)) continue;
                        used[i] = 1;
                        color[static_cast<int>(order.size())] = c;
                        order.push_back(v);
                        forbidden |= g.rows[v];
                        ++colored;
                    }
                    ++c;
                }
            }
            for (int i = nc - 1; i >= 0; --i) {
                if (current.size() + color[i] <= best.size()) return;
                int v = order[i];
                current.push_back(v);
                std::vector<int> next;
                for (int j = 0; j < i; ++j)
                    if (g.adjacent(v, order[j])) next.push_back(order[j]);
                if (current.size() + next.size() > best.size()) {
                    if (next.empty()) {
                        if (current.size() > best.size()) best = current;
                    } else {
                        expand(next);
                    }
                }
                current.pop_back();
            }
        }
    };

    Solver solver(g);
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::stable_sort(all.begin(), all.end(), [&](int a, int b) {
        return g.degrees[a] > g.degrees[b];
    });
    solver.expand(all);
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

// Exact rational, reduced, denominator positive.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;

    Fraction(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct HypergraphStats {
    int vertex_count = 0;
    int edge_count = 0;
    int min_degree = 0;
    int max_degree = 0;
    int rank = 0;              // largest edge size, 0 when there are no edges
    int antirank = INT_MAX;    // smallest edge size, INT_MAX when there are no edges
    Fraction mean_edge_size{0, 1};
    int max_intersecting = 0;  // largest pairwise-intersecting edge family
};

// Finite hypergraph on vertices 0..n-1. Edges hold sorted distinct vertices.
// Values are immutable once constructed.
class Hypergraph {
public:
    // Strict factory: rejects edges of size < 2 and duplicate edges,
    // and stores the edge list in lexicographic order.
    static Hypergraph make(int n, EdgeList edges) {
        normalize(n, edges, /*min_size=*/2);
        std::sort(edges.begin(), edges.end());
        for (size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw std::invalid_argument("duplicate edge");
        return Hypergraph(n, std::move(edges));
    }

    // Relaxed factory: keeps the given edge order, allows single-vertex
    // edges and duplicate edges, and records both conditions as flags.
    static Hypergraph make_ordered(int n, EdgeList edges) {
        normalize(n, edges, /*min_size=*/1);
        return Hypergraph(n, std::move(edges));
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool loopless() const { return loopless_; }
    bool has_duplicate_edges() const { return duplicates_; }

    int degree(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("degree: bad vertex");
        int d = 0;
        for (const Edge& e : edges_)
            if (std::binary_search(e.begin(), e.end(), v)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const Edge& e : edges_)
            for (int v : e) ++d[v];
        return d;
    }

    // Indices of edges containing v, in edge-list order.
    std::vector<int> star(int v) const {
        std::vector<int> s;
        for (int i = 0; i < m(); ++i)
            if (std::binary_search(edges_[i].begin(), edges_[i].end(), v)) s.push_back(i);
        return s;
    }

    static int intersection_size(const Edge& a, const Edge& b) {
        int count = 0;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) {
                ++i;
            } else if (a[i] > b[j]) {
                ++j;
            } else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    }

    // Number of other edges meeting edge i.
    int edge_degree(int i) const {
        if (i < 0 || i >= m()) throw std::out_of_range("edge_degree: bad edge index");
        int d = 0;
        for (int j = 0; j < m(); ++j)
            if (j != i && intersection_size(edges_[i], edges_[j]) > 0) ++d;
        return d;
    }

    // Indices of edges other than i that are disjoint from edge i.
    std::vector<int> parallel_set(int i) const {
        if (i < 0 || i >= m()) throw std::out_of_range("parallel_set: bad edge index");
        std::vector<int> out;
        for (int j = 0; j < m(); ++j)
            if (j != i && intersection_size(edges_[i], edges_[j]) == 0) out.push_back(j);
        return out;
    }

    Hypergraph remove_edge(int i) const {
        if (i < 0 || i >= m()) throw std::out_of_range("remove_edge: bad edge index");
        EdgeList rest;
        rest.reserve(edges_.size() - 1);
        for (int j = 0; j < m(); ++j)
            if (j != i) rest.push_back(edges_[j]);
        return Hypergraph(n_, std::move(rest));
    }

    bool is_linear() const {
        for (int i = 0; i < m(); ++i)
            for (int j = i + 1; j < m(); ++j)
                if (intersection_size(edges_[i], edges_[j]) > 1) return false;
        return true;
    }

    bool is_uniform() const {
        for (const Edge& e : edges_)
            if (e.size() != edges_.front().size()) return false;
        return true;
    }

    bool is_uniform(int k) const {
        for (const Edge& e : edges_)
            if (static_cast<int>(e.size()) != k) return false;
        return true;
    }

    int max_degree() const {
        std::vector<int> d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }

    // Graph on the same vertices joining u,v whenever some edge contains both.
    SimpleGraph two_section() const {
        SimpleGraph g(n_);
        for (const Edge& e : edges_)
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
        return g;
    }

    // Graph on the edges joining i,j whenever edges i and j intersect.
    SimpleGraph line_graph() const {
        SimpleGraph g(m());
        for (int i = 0; i < m(); ++i)
            for (int j = i + 1; j < m(); ++j)
                if (intersection_size(edges_[i], edges_[j]) > 0) g.add_edge(i, j);
        return g;
    }

    // Incidence transpose: vertex j of the dual is primal edge j, and dual
    // edge x (listed for x = 0..n-1) is the star of primal vertex x.
    // Applying it twice returns the original hypergraph exactly, provided
    // neither side has an isolated vertex.
    Hypergraph dual() const {
        EdgeList stars;
        stars.reserve(n_);
        for (int v = 0; v < n_; ++v) {
            Edge s = star(v);
            if (s.empty())
                throw std::invalid_argument("dual: isolated vertex " + std::to_string(v));
            stars.push_back(std::move(s));
        }
        return Hypergraph(m(), std::move(stars));
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Hypergraph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
        for (const Edge& e : edges_)
            if (e.size() < 2) loopless_ = false;
        EdgeList sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1]) duplicates_ = true;
    }

    static void normalize(int n, EdgeList& edges, size_t min_size) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (Edge& e : edges) {
            if (e.size() < min_size)
                throw std::invalid_argument(min_size == 2 ? "edge of size < 2" : "empty edge");
            std::sort(e.begin(), e.end());
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] >= n)
                    throw std::invalid_argument("vertex out of range: " + std::to_string(e[i]));
                if (i > 0 && e[i] == e[i - 1])
                    throw std::invalid_argument("repeated vertex in edge: " + std::to_string(e[i]));
            }
        }
    }

    int n_ = 0;
    EdgeList edges_;
    bool loopless_ = true;
    bool duplicates_ = false;
};

inline HypergraphStats stats(const Hypergraph& h) {
    HypergraphStats s;
    s.vertex_count = h.n();
    s.edge_count = h.m();
    auto deg = h.degrees();
    s.min_degree = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
    s.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    long long total_size = 0;
    for (const Edge& e : h.edges()) {
        int sz = static_cast<int>(e.size());
        s.rank = std::max(s.rank, sz);
        s.antirank = std::min(s.antirank, sz);
        total_size += sz;
    }
    s.mean_edge_size = h.m() == 0 ? Fraction{0, 1} : Fraction{total_size, h.m()};
    s.max_intersecting = h.m() == 0 ? 0 : static_cast<int>(max_clique(h.line_graph()).size());
    return s;
}

} // namespace hyperchroma
