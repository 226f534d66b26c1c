#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include "hypergraph.hpp"

namespace hyperchroma {

// Packing bound: a linear k-uniform hypergraph on n vertices has at most
// n(n-1)/(k(k-1)) edges, since each edge uses k(k-1)/2 of the n(n-1)/2
// vertex pairs and no pair repeats.
inline long long max_linear_edges(long long n, long long k) {
    return n * (n - 1) / (k * (k - 1));
}

struct RandomHypergraph {
    Hypergraph hypergraph;
    bool reached_target = false;  // false when rejection sampling stalled early
};

// Deterministic-in-seed rejection sampler for linear k-uniform hypergraphs.
// Draws uniform k-subsets and keeps one when it covers no already-covered
// vertex pair; gives up on a draw streak with no progress and returns what
// it has, flagged.
inline RandomHypergraph random_linear_hypergraph(int n, int k, int m, uint64_t seed) {
    if (k < 2) throw std::invalid_argument("random_linear_hypergraph: k < 2");
    if (n < k) throw std::invalid_argument("random_linear_hypergraph: n < k");
    if (m < 0) throw std::invalid_argument("random_linear_hypergraph: m < 0");
    long long cap = max_linear_edges(n, k);
    if (m > cap)
        throw std::invalid_argument("random_linear_hypergraph: m exceeds packing bound " +
                                    std::to_string(cap));

    std::mt19937_64 rng(seed);
    auto pair_index = [n](int a, int b) { return a * n + b; };
    Bitset covered(n * n);
    EdgeList edges;
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);

    long long stall = 0;
    const long long stall_limit = 2000 + 200LL * k * n;
    while (static_cast<int>(edges.size()) < m && stall < stall_limit) {
        // Partial Fisher-Yates draw of a k-subset.
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        Edge e(pool.begin(), pool.begin() + k);
        std::sort(e.begin(), e.end());
        bool fresh = true;
        for (size_t i = 0; i < e.size() && fresh; ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (covered.test(pair_index(e[i], e[j]))) {
                    fresh = false;
                    break;
                }
        if (!fresh) {
            ++stall;
            continue;
        }
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) covered.set(pair_index(e[i], e[j]));
        edges.push_back(std::move(e));
        stall = 0;
    }

    RandomHypergraph out{Hypergraph::make(n, std::move(edges)), false};
    out.reached_target = out.hypergraph.m() == m;
    return out;
}

} // namespace hyperchroma
