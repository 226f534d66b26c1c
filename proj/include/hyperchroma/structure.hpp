#pragma once

#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"

namespace hyperchroma {

// Per-edge low-degree witness: for each edge, a vertex x in it with
// deg(x) <= |e| (the smallest such), or -1 when the edge has none.
struct ConditionStarReport {
    bool holds = true;
    std::vector<int> witness;
};

inline ConditionStarReport condition_star(const Hypergraph& h) {
    ConditionStarReport r;
    auto deg = h.degrees();
    r.witness.assign(h.m(), -1);
    for (int i = 0; i < h.m(); ++i) {
        const Edge& e = h.edge(i);
        for (int x : e) {
            if (deg[x] <= static_cast<int>(e.size())) {
                r.witness[i] = x;
                break;
            }
        }
        if (r.witness[i] == -1) r.holds = false;
    }
    return r;
}

// Checks the finite affine plane axioms exhaustively: k-uniformity with
// |V| = k^2 and regularity k+1, every vertex pair on exactly one edge,
// and exactly one edge through each external vertex disjoint from a
// given edge.
inline bool is_affine_plane(const Hypergraph& h) {
    if (h.m() == 0 || !h.is_uniform()) return false;
    int k = static_cast<int>(h.edge(0).size());
    if (k < 2) return false;
    if (h.n() != k * k || h.m() != k * (k + 1)) return false;
    auto deg = h.degrees();
    for (int v = 0; v < h.n(); ++v)
        if (deg[v] != k + 1) return false;

    std::vector<std::vector<int>> cover(h.n(), std::vector<int>(h.n(), 0));
    for (const Edge& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                ++cover[e[i]][e[j]];
                ++cover[e[j]][e[i]];
            }
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (cover[u][v] != 1) return false;

    for (int i = 0; i < h.m(); ++i) {
        const Edge& e = h.edge(i);
        for (int p = 0; p < h.n(); ++p) {
            if (std::binary_search(e.begin(), e.end(), p)) continue;
            int through_disjoint = 0;
            for (int j = 0; j < h.m(); ++j) {
                if (j == i) continue;
                const Edge& a = h.edge(j);
                if (std::binary_search(a.begin(), a.end(), p) &&
                    Hypergraph::intersection_size(e, a) == 0)
                    ++through_disjoint;
            }
            if (through_disjoint != 1) return false;
        }
    }
    return true;
}

// Split of the edge index set by size against sqrt(n) (exact integer
// comparisons) and, below that threshold, by presence of a low-degree
// witness vertex.
struct EdgePartition {
    std::vector<int> e_prime;  // |e|^2 >= n
    std::vector<int> e_minus;  // |e|^2 < n and some x in e has deg(x) <= |e|
    std::vector<int> e_plus;   // |e|^2 < n and every x in e has deg(x) > |e|
};

inline EdgePartition partition_edges(const Hypergraph& h) {
    EdgePartition p;
    auto deg = h.degrees();
    long long n = h.n();
    for (int i = 0; i < h.m(); ++i) {
        const Edge& e = h.edge(i);
        long long sz = static_cast<long long>(e.size());
        if (sz * sz >= n) {
            p.e_prime.push_back(i);
            continue;
        }
        bool witness = false;
        for (int x : e)
            if (deg[x] <= static_cast<int>(e.size())) {
                witness = true;
                break;
            }
        (witness ? p.e_minus : p.e_plus).push_back(i);
    }
    return p;
}

// Which sufficient conditions for the chromatic index bounds hold.
// Each field is a hypothesis test; the two bound fields give the values
// the satisfied hypotheses imply as upper bounds for q(H).
struct TheoremReport {
    bool low_degree_witnesses = false;            // every edge has x with deg(x) <= |e|
    bool antirank_at_least_sqrt_n = false;        // ar(H)^2 >= n
    bool max_degree_at_most_sqrt_n_plus_one = false;  // (Delta-1)^2 <= n
    bool uniform_small_vertex_count = false;      // k-uniform with n <= k^2+k-2
    int uniform_k = 0;                            // the k above, 0 if not applicable
    bool partition_covers_all = false;            // size/degree split leaves no residue
    int section_degree_bound = 0;                 // Delta([H]_2) + 1
    int vertex_count_bound = 0;                   // n
};

inline TheoremReport theorem_hypotheses(const Hypergraph& h) {
    if (!h.is_linear()) throw std::invalid_argument("theorem_hypotheses: input not linear");
    if (!h.loopless()) throw std::invalid_argument("theorem_hypotheses: input has a loop");
    TheoremReport r;
    HypergraphStats s = stats(h);
    long long n = h.n();

    r.low_degree_witnesses = condition_star(h).holds;

    if (h.m() == 0) {
        r.antirank_at_least_sqrt_n = true;
    } else {
        long long ar = s.antirank;
        r.antirank_at_least_sqrt_n = ar * ar >= n;
    }

    if (s.max_degree == 0) {
        r.max_degree_at_most_sqrt_n_plus_one = true;
    } else {
        long long d = s.max_degree - 1;
        r.max_degree_at_most_sqrt_n_plus_one = d * d <= n;
    }

    if (h.m() > 0 && h.is_uniform()) {
        int k = static_cast<int>(h.edge(0).size());
        if (k >= 2) {
            r.uniform_k = k;
            r.uniform_small_vertex_count =
                n <= static_cast<long long>(k) * k + k - 2;
        }
    }

    r.partition_covers_all = partition_edges(h).e_plus.empty();
    r.section_degree_bound = h.two_section().max_degree() + 1;
    r.vertex_count_bound = h.n();
    return r;
}

enum class CheckStatus { pass, fail, skipped };

// Exact arithmetic checks of the counting identities and bounds relating
// degrees, edge degrees, the 2-section and the line graph. Checks whose
// derivation needs linearity (or the stated degree hypotheses) report
// skipped when the input does not qualify.
struct IdentityReport {
    CheckStatus degree_sum = CheckStatus::pass;              // sum deg(x) = sum |e|
    CheckStatus edge_count_bound = CheckStatus::pass;        // |E| * ar <= n * Delta
    CheckStatus vertex_degree_bound = CheckStatus::pass;     // deg(x)(ar-1) <= n-1
    CheckStatus edge_size_bound = CheckStatus::pass;         // |e|(delta-1) <= |E|-1
    CheckStatus edge_degree_bounds = CheckStatus::pass;      // d(e) <= |E|-1 etc.
    CheckStatus edge_degree_formula = CheckStatus::pass;     // d(e) = sum_{x in e}(deg(x)-1)
    CheckStatus edge_degree_sum = CheckStatus::pass;         // sum d(e) = sum deg(deg-1)
    CheckStatus section_degree_formula = CheckStatus::pass;  // deg_2(x) = sum_{e: x}(|e|-1)
    CheckStatus section_degree_sum = CheckStatus::pass;      // sum deg_2 = sum(|e|^2-|e|)
    CheckStatus section_max_bound = CheckStatus::pass;       // Delta_2 >= (ar-1)Delta
    CheckStatus line_degree_bound = CheckStatus::pass;       // Delta(L) <= r(Delta-1)

    bool all_passed() const {
        for (CheckStatus c : {degree_sum, edge_count_bound, vertex_degree_bound,
                              edge_size_bound, edge_degree_bounds, edge_degree_formula,
                              edge_degree_sum, section_degree_formula, section_degree_sum,
                              section_max_bound, line_degree_bound})
            if (c == CheckStatus::fail) return false;
        return true;
    }
};

inline IdentityReport verify_identities(const Hypergraph& h) {
    IdentityReport r;
    bool linear = h.is_linear();
    auto deg = h.degrees();
    HypergraphStats s = stats(h);
    auto check = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };

    long long deg_total = 0;
    for (int d : deg) deg_total += d;
    long long size_total = 0;
    for (const Edge& e : h.edges()) size_total += static_cast<long long>(e.size());
    r.degree_sum = check(deg_total == size_total);

    r.edge_count_bound =
        h.m() == 0
            ? CheckStatus::pass
            : check(static_cast<long long>(h.m()) * s.antirank <=
                    static_cast<long long>(h.n()) * s.max_degree);

    bool degree_hyps = linear && h.m() > 0 && s.min_degree >= 2 && s.antirank >= 2;
    if (!degree_hyps) {
        r.vertex_degree_bound = CheckStatus::skipped;
        r.edge_size_bound = CheckStatus::skipped;
    } else {
        bool vd = true;
        for (int v = 0; v < h.n(); ++v)
            if (static_cast<long long>(deg[v]) * (s.antirank - 1) > h.n() - 1) vd = false;
        r.vertex_degree_bound = check(vd);
        bool es = true;
        for (const Edge& e : h.edges())
            if (static_cast<long long>(e.size()) * (s.min_degree - 1) > h.m() - 1) es = false;
        r.edge_size_bound = check(es);
    }

    std::vector<int> ed(h.m());
    long long ed_total = 0;
    bool ed_bounds = true;
    for (int i = 0; i < h.m(); ++i) {
        ed[i] = h.edge_degree(i);
        ed_total += ed[i];
        if (ed[i] > h.m() - 1) ed_bounds = false;
    }
    if (ed_total > static_cast<long long>(h.m()) * (h.m() - 1)) ed_bounds = false;
    r.edge_degree_bounds = check(ed_bounds);

    if (!linear) {
        r.edge_degree_formula = CheckStatus::skipped;
        r.edge_degree_sum = CheckStatus::skipped;
        r.section_degree_formula = CheckStatus::skipped;
        r.section_degree_sum = CheckStatus::skipped;
        r.section_max_bound = CheckStatus::skipped;
    } else {
        bool edf = true;
        for (int i = 0; i < h.m(); ++i) {
            long long rhs = 0;
            for (int x : h.edge(i)) rhs += deg[x] - 1;
            if (ed[i] != rhs) edf = false;
        }
        r.edge_degree_formula = check(edf);

        long long deg_square = 0;
        for (int d : deg) deg_square += static_cast<long long>(d - 1) * d;
        r.edge_degree_sum = check(ed_total == deg_square);

        SimpleGraph sec = h.two_section();
        bool sdf = true;
        long long sec_total = 0;
        for (int v = 0; v < h.n(); ++v) {
            long long rhs = 0;
            for (int i : h.star(v)) rhs += static_cast<long long>(h.edge(i).size()) - 1;
            if (sec.degrees[v] != rhs) sdf = false;
            sec_total += sec.degrees[v];
        }
        r.section_degree_formula = check(sdf);

        long long size_square = 0;
        for (const Edge& e : h.edges()) {
            long long sz = static_cast<long long>(e.size());
            size_square += sz * sz - sz;
        }
        r.section_degree_sum = check(sec_total == size_square);

        r.section_max_bound =
            h.m() == 0 ? CheckStatus::pass
                       : check(sec.max_degree() >=
                               static_cast<long long>(s.antirank - 1) * s.max_degree);
    }

    if (h.m() == 0) {
        r.line_degree_bound = CheckStatus::pass;
    } else {
        SimpleGraph lg = h.line_graph();
        r.line_degree_bound = check(lg.max_degree() <=
                                    static_cast<long long>(s.rank) * (s.max_degree - 1));
    }
    return r;
}

} // namespace hyperchroma
