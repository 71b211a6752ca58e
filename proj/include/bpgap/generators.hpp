#pragma once

// Named small graphs, seeded random graphs, and one representative of every
// isomorphism class on up to 7 vertices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bpgap/graph.hpp"

namespace bpgap::gen {

inline Graph complete(std::size_t k) {
    Graph g(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

inline Graph edgeless(std::size_t k) { return Graph(k); }

inline Graph path(std::size_t k) {
    Graph g(k);
    for (std::size_t u = 0; u + 1 < k; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph cycle(std::size_t k) {
    if (k < 3) throw InvalidInput("cycle: need at least 3 vertices");
    Graph g = path(k);
    g.add_edge(0, k - 1);
    return g;
}

// Parts [0, a) and [a, a + b).
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

template <typename Rng>
Graph random_graph(std::size_t k, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

namespace detail {

// Edge mask with bit index pair_index(u, v) for u < v.
inline std::size_t pair_index(std::size_t u, std::size_t v, std::size_t k) {
    if (u > v) std::swap(u, v);
    return u * k - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint32_t canonical_mask(std::uint32_t mask, std::size_t k) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            if ((mask >> pair_index(u, v, k)) & 1u) edges.emplace_back(u, v);
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t m = 0;
        for (auto [u, v] : edges) m |= std::uint32_t{1} << pair_index(perm[u], perm[v], k);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph from_mask(std::uint32_t mask, std::size_t k) {
    Graph g(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            if ((mask >> pair_index(u, v, k)) & 1u) g.add_edge(u, v);
    return g;
}

} // namespace detail

// One graph per isomorphism class on exactly k vertices (k <= 7), ordered by
// canonical edge mask. Classes on k vertices are grown from those on k - 1.
inline std::vector<Graph> graphs_on(std::size_t k) {
    if (k > 7) throw ResourceLimit("graphs_on: enumeration limited to 7 vertices");
    std::set<std::uint32_t> classes{0};
    for (std::size_t n = 1; n <= k; ++n) {
        std::set<std::uint32_t> next;
        for (std::uint32_t prev : classes) {
            // Re-index the (n-1)-vertex mask into n vertices, then attach vertex n-1.
            std::uint32_t base = 0;
            for (std::size_t u = 0; u + 1 < n; ++u)
                for (std::size_t v = u + 1; v + 1 < n; ++v)
                    if ((prev >> detail::pair_index(u, v, n - 1)) & 1u)
                        base |= std::uint32_t{1} << detail::pair_index(u, v, n);
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                std::uint32_t m = base;
                for (std::size_t u = 0; u + 1 < n; ++u)
                    if ((nb >> u) & 1u) m |= std::uint32_t{1} << detail::pair_index(u, n - 1, n);
                next.insert(detail::canonical_mask(m, n));
            }
        }
        classes = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint32_t m : classes) out.push_back(detail::from_mask(m, k));
    return out;
}

// Every isomorphism class on 0..k vertices.
inline std::vector<Graph> graphs_up_to(std::size_t k) {
    std::vector<Graph> out;
    for (std::size_t n = 0; n <= k; ++n) {
        auto level = graphs_on(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace bpgap::gen
