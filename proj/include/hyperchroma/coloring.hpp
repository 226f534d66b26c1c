#pragma once

#include <atomic>
#include <bitset>
#include <climits>
#include <optional>
#include <thread>

#include "generators.hpp"
#include "hypergraph.hpp"

namespace hyperchroma {

// Edge coloring: color[i] is the color of edge i, colors run 0..num_colors-1.
struct EdgeColoring {
    std::vector<int> color;
    int num_colors = 0;
};

// True iff no two intersecting edges share a color. Throws when the
// coloring is partial or uses a color outside 0..num_colors-1.
inline bool verify_coloring(const Hypergraph& h, const EdgeColoring& col) {
    if (static_cast<int>(col.color.size()) != h.m())
        throw std::invalid_argument("coloring does not cover every edge");
    for (int c : col.color)
        if (c < 0 || c >= col.num_colors)
            throw std::invalid_argument("color out of range: " + std::to_string(c));
    for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j)
            if (col.color[i] == col.color[j] &&
                Hypergraph::intersection_size(h.edge(i), h.edge(j)) > 0)
                return false;
    return true;
}

// First-fit coloring in the given edge order (edge-list order by default).
inline EdgeColoring greedy_color(const Hypergraph& h, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != h.m())
        throw std::invalid_argument("order must list every edge");
    EdgeColoring out;
    out.color.assign(h.m(), -1);
    for (int e : order) {
        std::vector<char> used(h.m() + 1, 0);
        for (int j = 0; j < h.m(); ++j)
            if (out.color[j] >= 0 &&
                Hypergraph::intersection_size(h.edge(e), h.edge(j)) > 0)
                used[out.color[j]] = 1;
        int c = 0;
        while (used[c]) ++c;
        out.color[e] = c;
        out.num_colors = std::max(out.num_colors, c + 1);
    }
    return out;
}

inline EdgeColoring greedy_color(const Hypergraph& h) {
    std::vector<int> order(h.m());
    std::iota(order.begin(), order.end(), 0);
    return greedy_color(h, order);
}

struct ExactResult {
    int q = 0;
    EdgeColoring witness;
};

namespace detail {

constexpr int kMaxColors = 128;

// Backtracking search for a proper t-coloring of the line graph.
// Deterministic: saturation-first branching with degree and index
// tie-breaks, colors tried in increasing order, and at most one fresh
// color (the next unused index) available at any node. A maximum clique
// is preassigned colors 0,1,2,... before the search; both restrictions
// preserve at least one representative of every color class.
struct ColoringSearch {
    int m;
    int t;
    std::vector<std::vector<int>> nbr;
    std::vector<int> lg_deg;
    std::vector<int> color;
    std::vector<std::vector<int>> cnt;
    std::vector<std::bitset<kMaxColors>> mask;
    std::vector<int> sat;
    int used = 0;
    int colored = 0;
    long long nodes = 0;
    long long budget;
    bool aborted = false;

    ColoringSearch(const Hypergraph& h, int colors, long long node_budget)
        : m(h.m()),
          t(colors),
          nbr(h.m()),
          lg_deg(h.m(), 0),
          color(h.m(), -1),
          cnt(h.m(), std::vector<int>(colors, 0)),
          mask(h.m()),
          sat(h.m(), 0),
          budget(node_budget) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (Hypergraph::intersection_size(h.edge(i), h.edge(j)) > 0) {
                    nbr[i].push_back(j);
                    nbr[j].push_back(i);
                }
        for (int i = 0; i < m; ++i) lg_deg[i] = static_cast<int>(nbr[i].size());
    }

    void place(int e, int c) {
        color[e] = c;
        ++colored;
        for (int a : nbr[e])
            if (++cnt[a][c] == 1) {
                mask[a].set(c);
                ++sat[a];
            }
    }

    void unplace(int e, int c) {
        color[e] = -1;
        --colored;
        for (int a : nbr[e])
            if (--cnt[a][c] == 0) {
                mask[a].reset(c);
                --sat[a];
            }
    }

    bool solve() {
        if (colored == m) return true;
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        int limit = std::min(used, t - 1);
        int pick = -1;
        for (int e = 0; e < m; ++e) {
            if (color[e] >= 0) continue;
            int avail = 0;
            for (int c = 0; c <= limit; ++c)
                if (!mask[e].test(c)) ++avail;
            if (avail == 0) return false;
            if (pick == -1 || sat[e] > sat[pick] ||
                (sat[e] == sat[pick] && lg_deg[e] > lg_deg[pick]))
                pick = e;
        }
        for (int c = 0; c <= limit; ++c) {
            if (mask[pick].test(c)) continue;
            bool fresh = c == used;
            if (fresh) ++used;
            place(pick, c);
            if (solve()) return true;
            unplace(pick, c);
            if (fresh) --used;
            if (aborted) return false;
        }
        return false;
    }
};

} // namespace detail

// Exact chromatic index with a node budget; returns nothing when the
// budget runs out first. Deterministic in the input alone.
inline std::optional<ExactResult> exact_chromatic_index_budget(const Hypergraph& h,
                                                               long long max_nodes) {
    if (h.m() == 0) return ExactResult{0, EdgeColoring{{}, 0}};
    EdgeColoring greedy = greedy_color(h);
    int ub = greedy.num_colors;
    std::vector<int> clique = max_clique(h.line_graph());
    int lb = static_cast<int>(clique.size());
    if (lb == ub) return ExactResult{lb, std::move(greedy)};
    if (ub > detail::kMaxColors)
        throw std::invalid_argument("instances needing more than 128 colors are unsupported");

    long long remaining = max_nodes;
    for (int t = lb; t < ub; ++t) {
        detail::ColoringSearch search(h, t, remaining);
        for (int i = 0; i < static_cast<int>(clique.size()) && i < t; ++i) {
            search.place(clique[i], i);
            ++search.used;
        }
        if (search.solve()) {
            EdgeColoring witness{std::move(search.color), t};
            return ExactResult{t, std::move(witness)};
        }
        if (search.aborted) return std::nullopt;
        remaining -= search.nodes;
        if (remaining <= 0) return std::nullopt;
    }
    return ExactResult{ub, std::move(greedy)};
}

inline ExactResult exact_chromatic_index(const Hypergraph& h) {
    auto r = exact_chromatic_index_budget(h, LLONG_MAX);
    return *r;
}

// Classification of an edge as a line of the coordinate plane.
struct LineClass {
    bool vertical = false;
    int slope = 0;      // y = slope*x + intercept when not vertical
    int intercept = 0;  // the fixed x when vertical
};

inline LineClass classify_line(const PlaneCoords& coords, const Edge& e) {
    int k = coords.field.order();
    if (static_cast<int>(e.size()) != k) throw std::invalid_argument("not a line");
    bool vertical = true;
    for (int v : e)
        if (coords.x_of(v) != coords.x_of(e.front())) vertical = false;
    if (vertical) return LineClass{true, 0, coords.x_of(e.front())};

    const GaloisField& f = coords.field;
    int x0 = coords.x_of(e[0]), y0 = coords.y_of(e[0]);
    int x1 = coords.x_of(e[1]), y1 = coords.y_of(e[1]);
    if (x0 == x1) throw std::invalid_argument("not a line");
    int s = f.mul(f.sub(y1, y0), f.inv(f.sub(x1, x0)));
    int b = f.sub(y0, f.mul(s, x0));
    for (int v : e)
        if (coords.y_of(v) != f.add(f.mul(s, coords.x_of(v)), b))
            throw std::invalid_argument("not a line");
    return LineClass{false, s, b};
}

// Optimal coloring of the exact field plane of its order: verticals get
// color k, the line y = s*x + b gets color s. Uses k+1 colors.
inline EdgeColoring color_affine_plane(const Hypergraph& h, const PlaneCoords& coords) {
    int k = coords.field.order();
    if (h.n() != k * k || h.m() != k * k + k)
        throw std::invalid_argument("not a field plane of order " + std::to_string(k));
    EdgeColoring out;
    out.num_colors = k + 1;
    out.color.reserve(h.m());
    for (const Edge& e : h.edges()) {
        LineClass lc = classify_line(coords, e);
        out.color.push_back(lc.vertical ? k : lc.slope);
    }
    return out;
}

// Star-pairing coloring for class members: the distinguished edge gets its
// own color; the off-edge stars of its vertices partition the rest, stars
// are taken in pairs, even stars get fresh colors and each edge of the odd
// star inherits the color of its unique disjoint partner in the even star.
// Uses 1 + k*ceil(k/2) colors.
inline EdgeColoring color_class_Hk(const Hypergraph& h, const HkCertificate& cert) {
    if (!cert.member)
        throw std::invalid_argument("certificate does not witness class membership");

    int e0 = -1;
    for (int i = 0; i < h.m(); ++i)
        if (h.edge(i) == cert.e0) e0 = i;

    EdgeColoring out;
    out.color.assign(h.m(), -1);
    out.color[e0] = 0;
    int next = 1;
    for (size_t pair = 0; pair * 2 < cert.e0.size(); ++pair) {
        int xa = cert.e0[pair * 2];
        std::vector<int> star_a;
        for (int e : h.star(xa))
            if (e != e0) star_a.push_back(e);
        for (int e : star_a) out.color[e] = next++;

        if (pair * 2 + 1 < cert.e0.size()) {
            int xb = cert.e0[pair * 2 + 1];
            for (int e : h.star(xb)) {
                if (e == e0) continue;
                int partner = -1;
                for (int a : star_a)
                    if (Hypergraph::intersection_size(h.edge(e), h.edge(a)) == 0) {
                        if (partner != -1)
                            throw std::invalid_argument("star pairing is not unique");
                        partner = a;
                    }
                if (partner == -1)
                    throw std::invalid_argument("star pairing has no disjoint partner");
                out.color[e] = out.color[partner];
            }
        }
    }
    out.num_colors = next;
    return out;
}

// Optimal coloring of the twisted plane, one per nonzero slope lambda:
// the axis edge gets color 0, the rerouted vertical through (j, *) gets
// color j together with the slope-lambda line through (j, 0), horizontals
// share color k, and each remaining slope gets one color. Uses 2k-1 colors.
inline EdgeColoring color_twisted_plane(const Hypergraph& h, const PlaneCoords& coords,
                                        int lambda) {
    int k = coords.field.order();
    if (lambda < 1 || lambda >= k)
        throw std::invalid_argument("slope parameter must be a nonzero field element");
    HkMember reference = twisted_plane(k);
    if (!(reference.hypergraph == h))
        throw std::invalid_argument("not the twisted plane of order " + std::to_string(k));

    const GaloisField& f = coords.field;
    auto slope_rank = [&](int s) {
        int rank = 0;
        for (int v = 1; v < s; ++v)
            if (v != lambda) ++rank;
        return rank + 1;
    };

    EdgeColoring out;
    out.num_colors = 2 * k - 1;
    out.color.reserve(h.m());
    for (const Edge& e : h.edges()) {
        bool axis = true;
        for (int v : e)
            if (coords.x_of(v) != 0) axis = false;
        if (axis) {
            out.color.push_back(0);
            continue;
        }
        if (e.front() == coords.vertex_of(0, 0)) {
            bool rerouted = true;
            for (size_t i = 2; i < e.size(); ++i)
                if (coords.x_of(e[i]) != coords.x_of(e[1])) rerouted = false;
            if (rerouted && coords.x_of(e[1]) != 0) {
                out.color.push_back(coords.x_of(e[1]));
                continue;
            }
        }
        LineClass lc = classify_line(coords, e);
        if (lc.vertical) throw std::invalid_argument("unexpected vertical line");
        if (lc.slope == 0) {
            out.color.push_back(k);
        } else if (lc.slope == lambda) {
            out.color.push_back(f.mul(f.neg(lc.intercept), f.inv(lambda)));
        } else {
            out.color.push_back(k + slope_rank(lc.slope));
        }
    }
    return out;
}

// An edge is critical when deleting it lowers the chromatic index.
inline bool is_critical(const Hypergraph& h, int e) {
    int q = exact_chromatic_index(h).q;
    return exact_chromatic_index(h.remove_edge(e)).q == q - 1;
}

struct CriticalityReport {
    int q = 0;
    std::vector<int> critical;  // indices of critical edges, increasing
};

// Criticality scan over all edges. An edge with fewer than q-1 neighbors
// in the line graph can never be critical, so those skip the re-solve.
// With threads > 1 the per-edge re-solves run on a worker pool; results
// do not depend on the thread count.
inline CriticalityReport critical_edges(const Hypergraph& h, int threads = 0) {
    CriticalityReport report;
    report.q = exact_chromatic_index(h).q;
    if (h.m() == 0) return report;

    std::vector<char> crit(h.m(), 0);
    auto probe = [&](int e) {
        if (h.edge_degree(e) < report.q - 1) return;
        crit[e] = exact_chromatic_index(h.remove_edge(e)).q == report.q - 1;
    };

    if (threads <= 1) {
        for (int e = 0; e < h.m(); ++e) probe(e);
    } else {
        std::atomic<int> cursor{0};
        auto worker = [&] {
            while (true) {
                int e = cursor.fetch_add(1);
                if (e >= h.m()) return;
                probe(e);
            }
        };
        std::vector<std::thread> pool;
        int count = std::min(threads, h.m());
        pool.reserve(count);
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (int e = 0; e < h.m(); ++e)
        if (crit[e]) report.critical.push_back(e);
    return report;
}

// Number of proper colorings with colors drawn from {0..t-1}, counted up
// to color relabeling (each class counted once via the representative in
// which colors first appear in increasing edge-index order). When
// surjective is set, only colorings using all t colors count.
inline long long count_colorings_up_to_relabel(const Hypergraph& h, int t, bool surjective,
                                               int guard = 20) {
    if (h.m() > guard)
        throw std::invalid_argument("edge count exceeds the enumeration guard");
    if (t < 0) throw std::invalid_argument("negative color count");

    std::vector<std::vector<int>> nbr(h.m());
    for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j)
            if (Hypergraph::intersection_size(h.edge(i), h.edge(j)) > 0) {
                nbr[i].push_back(j);
                nbr[j].push_back(i);
            }

    std::vector<int> color(h.m(), -1);
    long long count = 0;
    auto recurse = [&](auto&& self, int e, int used) -> void {
        if (surjective && used + (h.m() - e) < t) return;
        if (e == h.m()) {
            if (!surjective || used == t) ++count;
            return;
        }
        int limit = std::min(used, t - 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int a : nbr[e])
                if (color[a] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[e] = c;
            self(self, e + 1, c == used ? used + 1 : used);
            color[e] = -1;
        }
    };
    if (h.m() == 0) return (!surjective || t == 0) ? 1 : 0;
    recurse(recurse, 0, 0);
    return count;
}

} // namespace hyperchroma
