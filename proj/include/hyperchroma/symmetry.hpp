#pragma once

#include <optional>
#include <set>
#include <string>

#include "hypergraph.hpp"

namespace hyperchroma {

struct Permutation {
    std::vector<int> to;  // to[x] is the image of x

    int size() const { return static_cast<int>(to.size()); }
};

inline Permutation identity_perm(int n) {
    Permutation p;
    p.to.resize(n);
    std::iota(p.to.begin(), p.to.end(), 0);
    return p;
}

// Composition acts left-of-right: compose(a, b) maps x to a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing different sizes");
    Permutation c;
    c.to.resize(a.size());
    for (int x = 0; x < a.size(); ++x) c.to[x] = a.to[b.to[x]];
    return c;
}

inline Permutation inverse(const Permutation& p) {
    Permutation q;
    q.to.resize(p.size());
    for (int x = 0; x < p.size(); ++x) q.to[p.to[x]] = x;
    return q;
}

inline Permutation perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity_perm(n);
    std::vector<char> seen(n, 0);
    for (const auto& cycle : cycles)
        for (size_t i = 0; i < cycle.size(); ++i) {
            int x = cycle[i];
            if (x < 0 || x >= n) throw std::invalid_argument("cycle entry out of range");
            if (seen[x]) throw std::invalid_argument("repeated entry in cycles");
            seen[x] = 1;
            p.to[x] = cycle[(i + 1) % cycle.size()];
        }
    return p;
}

inline std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (int v = 0; v < p.size(); ++v) {
        if (seen[v] || p.to[v] == v) continue;
        out += '(';
        int x = v;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = p.to[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// Image hypergraph: vertices renamed, vertex lists re-sorted, and the edge
// list put back in lexicographic order.
inline Hypergraph apply(const Permutation& p, const Hypergraph& h) {
    if (p.size() != h.n()) throw std::invalid_argument("permutation size mismatch");
    EdgeList edges;
    edges.reserve(h.m());
    for (const Edge& e : h.edges()) {
        Edge img;
        img.reserve(e.size());
        for (int v : e) img.push_back(p.to[v]);
        std::sort(img.begin(), img.end());
        edges.push_back(std::move(img));
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph::make_ordered(h.n(), std::move(edges));
}

namespace detail {

// Backtracking canonical labeling over vertex colorings refined against
// the incidence structure. Classes renumber by sorted signature, which is
// invariant under relabeling, so the minimum leaf form is canonical. The
// search is exhaustive: every leaf whose form ties the minimum is kept,
// and those leaves are exactly the color-respecting relabelings onto the
// canonical form, so they carry the full automorphism group.
struct CanonicalSearch {
    int n;
    int m;
    EdgeList edges;
    std::vector<std::vector<int>> stars;
    EdgeList best_form;
    std::vector<int> best_perm;
    std::vector<std::vector<int>> tied_perms;
    bool have_best = false;
    long long leaves = 0;
    static constexpr long long kLeafCap = 5'000'000;

    CanonicalSearch(int vertices, EdgeList list)
        : n(vertices), m(static_cast<int>(list.size())), edges(std::move(list)), stars(vertices) {
        for (int i = 0; i < m; ++i)
            for (int v : edges[i]) stars[v].push_back(i);
    }

    static int renumber(std::vector<std::vector<int>>& sigs, std::vector<int>& cls) {
        std::vector<std::vector<int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (size_t i = 0; i < sigs.size(); ++i)
            cls[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
        return static_cast<int>(sorted.size());
    }

    void refine(std::vector<int>& vc, std::vector<int>& ec) const {
        int vcount = -1, ecount = -1;
        while (true) {
            std::vector<std::vector<int>> esig(m);
            for (int e = 0; e < m; ++e) {
                esig[e].push_back(ec[e]);
                std::vector<int> member;
                for (int v : edges[e]) member.push_back(vc[v]);
                std::sort(member.begin(), member.end());
                esig[e].insert(esig[e].end(), member.begin(), member.end());
            }
            int ec2 = renumber(esig, ec);

            std::vector<std::vector<int>> vsig(n);
            for (int v = 0; v < n; ++v) {
                vsig[v].push_back(vc[v]);
                std::vector<int> inc;
                for (int e : stars[v]) inc.push_back(ec[e]);
                std::sort(inc.begin(), inc.end());
                vsig[v].insert(vsig[v].end(), inc.begin(), inc.end());
            }
            int vc2 = renumber(vsig, vc);

            if (vc2 == vcount && ec2 == ecount) return;
            vcount = vc2;
            ecount = ec2;
        }
    }

    void search(std::vector<int> vc, std::vector<int> ec) {
        refine(vc, ec);
        int cell = -1;
        {
            std::vector<int> count(n, 0);
            for (int v = 0; v < n; ++v) ++count[vc[v]];
            for (int c = 0; c < n; ++c)
                if (count[c] >= 2) {
                    cell = c;
                    break;
                }
        }
        if (cell == -1) {
            leaf(vc);
            return;
        }
        for (int u = 0; u < n; ++u) {
            if (vc[u] != cell) continue;
            std::vector<int> child = vc;
            for (int v = 0; v < n; ++v) child[v] = child[v] * 2 + (v == u ? 0 : 1);
            search(std::move(child), ec);
        }
    }

    void leaf(const std::vector<int>& perm) {
        if (++leaves > kLeafCap)
            throw std::runtime_error("canonical labeling search exceeded its leaf cap");
        EdgeList form;
        form.reserve(m);
        for (const Edge& e : edges) {
            Edge img;
            img.reserve(e.size());
            for (int v : e) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            form.push_back(std::move(img));
        }
        std::sort(form.begin(), form.end());
        if (!have_best || form < best_form) {
            best_form = std::move(form);
            best_perm = perm;
            have_best = true;
            tied_perms.clear();
            tied_perms.push_back(perm);
        } else if (form == best_form) {
            tied_perms.push_back(perm);
        }
    }

    void run(const std::vector<int>& initial_vc) {
        std::vector<int> vc = initial_vc;
        std::vector<int> ec(m, 0);
        if (n == 0) {
            best_form = edges;
            std::sort(best_form.begin(), best_form.end());
            have_best = true;
            return;
        }
        search(std::move(vc), std::move(ec));
    }
};

struct SplitParts {
    std::vector<int> covered;   // ascending original ids
    std::vector<int> isolated;  // ascending original ids
    std::vector<int> index_of;  // original id -> index in covered, or -1
    EdgeList induced;           // edges rewritten to covered indices
};

inline SplitParts split_isolated(const Hypergraph& h) {
    SplitParts s;
    s.index_of.assign(h.n(), -1);
    std::vector<char> hit(h.n(), 0);
    for (const Edge& e : h.edges())
        for (int v : e) hit[v] = 1;
    for (int v = 0; v < h.n(); ++v)
        (hit[v] ? s.covered : s.isolated).push_back(v);
    for (size_t i = 0; i < s.covered.size(); ++i) s.index_of[s.covered[i]] = static_cast<int>(i);
    s.induced.reserve(h.m());
    for (const Edge& e : h.edges()) {
        Edge img;
        img.reserve(e.size());
        for (int v : e) img.push_back(s.index_of[v]);
        std::sort(img.begin(), img.end());
        s.induced.push_back(std::move(img));
    }
    return s;
}

inline void check_canonical_scale(size_t covered) {
    if (covered > 30)
        throw std::invalid_argument("canonical labeling supports at most 30 covered vertices");
}

} // namespace detail

// Canonical representative of the isomorphism class of h together with the
// relabeling that produces it: apply(relabeling, h) equals the form.
struct CanonicalForm {
    Hypergraph hypergraph;
    Permutation relabeling;
};

inline CanonicalForm canonical_form(const Hypergraph& h) {
    detail::SplitParts s = detail::split_isolated(h);
    detail::check_canonical_scale(s.covered.size());
    Permutation relabel;
    relabel.to.assign(h.n(), -1);
    EdgeList form;
    if (!s.covered.empty()) {
        detail::CanonicalSearch search(static_cast<int>(s.covered.size()), s.induced);
        search.run(std::vector<int>(s.covered.size(), 0));
        form = search.best_form;
        for (size_t i = 0; i < s.covered.size(); ++i)
            relabel.to[s.covered[i]] = search.best_perm[i];
    }
    int next = static_cast<int>(s.covered.size());
    for (int v : s.isolated) relabel.to[v] = next++;
    return CanonicalForm{Hypergraph::make_ordered(h.n(), std::move(form)), std::move(relabel)};
}

inline std::optional<Permutation> isomorphism(const Hypergraph& h1, const Hypergraph& h2) {
    if (h1.n() != h2.n() || h1.m() != h2.m()) return std::nullopt;
    auto sizes = [](const Hypergraph& h) {
        std::vector<int> s;
        for (const Edge& e : h.edges()) s.push_back(static_cast<int>(e.size()));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(h1) != sizes(h2)) return std::nullopt;
    auto degs = [](const Hypergraph& h) {
        auto d = h.degrees();
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(h1) != degs(h2)) return std::nullopt;

    CanonicalForm c1 = canonical_form(h1);
    CanonicalForm c2 = canonical_form(h2);
    if (!(c1.hypergraph == c2.hypergraph)) return std::nullopt;
    Permutation sigma = compose(inverse(c2.relabeling), c1.relabeling);
    if (!(apply(sigma, h1) == apply(identity_perm(h2.n()), h2)))
        throw std::logic_error("canonical forms agreed but the witness failed");
    return sigma;
}

inline bool are_isomorphic(const Hypergraph& h1, const Hypergraph& h2) {
    return isomorphism(h1, h2).has_value();
}

struct AutGroup {
    std::vector<Permutation> generators;
    long long order = 1;
};

namespace detail {

inline std::set<std::vector<int>> closure(const std::vector<std::vector<int>>& gens, int n) {
    std::set<std::vector<int>> seen;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    seen.insert(id);
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<int> q(n);
                for (int x = 0; x < n; ++x) q[x] = g[p[x]];
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline long long factorial_checked(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

inline AutGroup automorphism_group(const Hypergraph& h) {
    detail::SplitParts s = detail::split_isolated(h);
    int iso = static_cast<int>(s.isolated.size());
    if (iso > 20)
        throw std::invalid_argument("automorphism group with more than 20 isolated vertices");

    AutGroup out;
    std::vector<std::vector<int>> covered_gens;
    long long covered_order = 1;

    if (!s.covered.empty()) {
        detail::check_canonical_scale(s.covered.size());
        int cn = static_cast<int>(s.covered.size());
        detail::CanonicalSearch search(cn, s.induced);
        search.run(std::vector<int>(cn, 0));

        std::vector<int> inv_best(cn);
        for (int i = 0; i < cn; ++i) inv_best[search.best_perm[i]] = i;
        std::set<std::vector<int>> auts;
        for (const auto& p : search.tied_perms) {
            std::vector<int> sigma(cn);
            for (int x = 0; x < cn; ++x) sigma[x] = inv_best[p[x]];
            auts.insert(std::move(sigma));
        }
        covered_order = static_cast<long long>(auts.size());

        std::set<std::vector<int>> have = detail::closure(covered_gens, cn);
        for (const auto& sigma : auts) {
            if (have.count(sigma)) continue;
            covered_gens.push_back(sigma);
            have = detail::closure(covered_gens, cn);
        }
        if (static_cast<long long>(have.size()) != covered_order)
            throw std::logic_error("automorphism closure does not match the leaf count");
    }

    out.order = covered_order * detail::factorial_checked(iso);

    for (const auto& g : covered_gens) {
        Permutation p = identity_perm(h.n());
        for (size_t i = 0; i < s.covered.size(); ++i) p.to[s.covered[i]] = s.covered[g[i]];
        out.generators.push_back(std::move(p));
    }
    if (iso >= 2) {
        Permutation swap_two = identity_perm(h.n());
        std::swap(swap_two.to[s.isolated[0]], swap_two.to[s.isolated[1]]);
        out.generators.push_back(std::move(swap_two));
        if (iso >= 3) {
            Permutation cyc = identity_perm(h.n());
            for (int i = 0; i < iso; ++i) cyc.to[s.isolated[i]] = s.isolated[(i + 1) % iso];
            out.generators.push_back(std::move(cyc));
        }
    }
    return out;
}

struct EnumerateOptions {
    bool allow_large = false;          // required beyond k = 3
    long long node_budget = 50'000'000;
};

struct EnumerationResult {
    std::vector<Hypergraph> representatives;
    bool complete = true;
};

namespace detail {

// Canonical key of a partially built class member, colored so that only
// relabelings fixing the distinguished edge setwise, the processed star
// centers setwise, and the off-edge vertices setwise are considered.
// Isomorphic colored partials have identical completion sets up to
// isomorphism, so pruning repeats is sound.
inline EdgeList colored_partial_key(int n, const EdgeList& edges, int k, int processed) {
    CanonicalSearch search(n, edges);
    std::vector<int> vc(n, 2);
    for (int v = 0; v < k; ++v) vc[v] = v < processed ? 0 : 1;
    search.run(vc);
    return search.best_form;
}

} // namespace detail

// Exhaustive generation of the class members for a given k, one
// representative per isomorphism class. The distinguished edge is fixed
// as {0..k-1}; the off-edge stars of its vertices are built in order,
// each a partition of the off vertices into blocks avoiding covered
// pairs, with isomorph rejection after every completed star.
inline EnumerationResult enumerate_Hk(int k, EnumerateOptions opt = {}) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k > 3 && !opt.allow_large)
        throw std::invalid_argument("enumeration beyond k = 3 must be enabled explicitly");

    const int n = k * k;
    EnumerationResult result;
    EdgeList edges;
    Edge e0(k);
    std::iota(e0.begin(), e0.end(), 0);
    edges.push_back(e0);

    std::vector<char> covered(static_cast<size_t>(n) * n, 0);
    auto cover = [&](const Edge& e, char val) {
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                covered[static_cast<size_t>(e[i]) * n + e[j]] = val;
                covered[static_cast<size_t>(e[j]) * n + e[i]] = val;
            }
    };
    cover(e0, 1);

    std::vector<std::set<EdgeList>> seen_partial(k);
    std::set<EdgeList> seen_final;
    long long nodes = 0;

    auto out_of_budget = [&] {
        if (nodes >= opt.node_budget) {
            result.complete = false;
            return true;
        }
        ++nodes;
        return false;
    };

    auto finalize = [&] {
        Hypergraph h = Hypergraph::make(n, edges);
        CanonicalForm cf = canonical_form(h);
        EdgeList key = cf.hypergraph.edges();
        if (seen_final.insert(std::move(key)).second)
            result.representatives.push_back(std::move(cf.hypergraph));
    };

    auto build_stars = [&](auto&& self, int star) -> void {
        if (result.complete == false) return;
        if (star == k) {
            finalize();
            return;
        }
        if (star > 0) {
            EdgeList key = detail::colored_partial_key(n, edges, k, star);
            if (!seen_partial[star].insert(std::move(key)).second) return;
        }

        // Partition the off vertices into k blocks of size k-1 around the
        // center, each block free of covered pairs. Blocks are generated
        // smallest-free-vertex-first with ascending members, so each
        // partition appears exactly once. The first star is fixed to
        // consecutive blocks: every first partition is equivalent to it
        // under a relabeling of the off vertices.
        if (star == 0) {
            EdgeList star_edges;
            for (int b = 0; b < k; ++b) {
                Edge e{0};
                for (int t = 0; t < k - 1; ++t) e.push_back(k + b * (k - 1) + t);
                star_edges.push_back(std::move(e));
            }
            for (const Edge& e : star_edges) {
                cover(e, 1);
                edges.push_back(e);
            }
            self(self, 1);
            for (const Edge& e : star_edges) {
                cover(e, 0);
                edges.pop_back();
            }
            return;
        }

        // Per-level scratch: the recursive call into the next star must not
        // disturb this level's partial partition.
        std::vector<char> assigned(n, 0);
        auto next_free = [&] {
            for (int v = k; v < n; ++v)
                if (!assigned[v]) return v;
            return -1;
        };

        auto place_blocks = [&](auto&& place, int blocks_done) -> void {
            if (result.complete == false) return;
            if (out_of_budget()) return;
            int r = next_free();
            if (r == -1) {
                self(self, star + 1);
                return;
            }
            Edge block{star, r};
            assigned[r] = 1;
            auto choose = [&](auto&& again, int from) -> void {
                if (result.complete == false) return;
                if (static_cast<int>(block.size()) == k) {
                    Edge e = block;
                    std::sort(e.begin(), e.end());
                    cover(e, 1);
                    edges.push_back(e);
                    place(place, blocks_done + 1);
                    edges.pop_back();
                    cover(e, 0);
                    return;
                }
                for (int v = from; v < n; ++v) {
                    if (assigned[v]) continue;
                    bool ok = !covered[static_cast<size_t>(star) * n + v];
                    for (size_t i = 1; i < block.size() && ok; ++i)
                        if (covered[static_cast<size_t>(block[i]) * n + v]) ok = false;
                    if (!ok) continue;
                    block.push_back(v);
                    assigned[v] = 1;
                    again(again, v + 1);
                    assigned[v] = 0;
                    block.pop_back();
                }
            };
            if (covered[static_cast<size_t>(star) * n + r]) {
                // The smallest free vertex already meets the center: no
                // valid block can contain it, so this partition dies.
            } else {
                choose(choose, r + 1);
            }
            assigned[r] = 0;
        };

        place_blocks(place_blocks, 0);
    };

    build_stars(build_stars, 0);
    return result;
}

struct MaximalityCheck {
    bool maximal = true;
    Edge extension;  // lexicographically first addable edge when not maximal
};

// Whether h admits no additional size-k edge meeting every existing edge
// in at most one vertex. The candidate search walks k-subsets in
// lexicographic order, pruning on covered vertex pairs.
inline MaximalityCheck is_maximal_linear(const Hypergraph& h, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const int n = h.n();
    std::vector<char> covered(static_cast<size_t>(n) * n, 0);
    for (const Edge& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                covered[static_cast<size_t>(e[i]) * n + e[j]] = 1;
                covered[static_cast<size_t>(e[j]) * n + e[i]] = 1;
            }

    Edge chosen;
    auto search = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (covered[static_cast<size_t>(u) * n + v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    MaximalityCheck out;
    if (search(search, 0)) {
        out.maximal = false;
        out.extension = chosen;
    }
    return out;
}

} // namespace hyperchroma
