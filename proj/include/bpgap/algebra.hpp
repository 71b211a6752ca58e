#pragma once

// Lower-bound machinery for t-biclique covers of the complete graph K_k.
//
// For a cover {B(U_j, W_j)} with every edge covered between 1 and t times,
// inclusion-exclusion over index sets S with 0 < |S| <= t gives
//     J - I = sum_S sigma(|S|) A_S,   sigma(s) = (-1)^(s+1),
// where A_S is the adjacency matrix of the common intersection H_S. Each H_S
// splits into at most 2^(|S|-1) edge-disjoint bicliques; replacing every
// biclique matrix B by its one-sided half B' (rank one) leaves an antisymmetric
// residual T with I + T = J - sum 2 sigma B', so k = rank(I + T) <= 1 + #B'.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bpgap/generators.hpp"
#include "bpgap/graph.hpp"
#include "bpgap/rational_matrix.hpp"

namespace bpgap {

// 1 + sum_{s=1}^{t} 2^(s-1) C(d, s).
inline std::uint64_t peck_bound(std::uint64_t d, std::uint64_t t) {
    using boost::multiprecision::cpp_int;
    cpp_int total = 1, binom = 1, pow2 = 1;
    for (std::uint64_t s = 1; s <= t && s <= d; ++s) {
        binom = binom * (d - s + 1) / s;
        total += pow2 * binom;
        pow2 *= 2;
    }
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ResourceLimit("peck_bound: value exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

using IndexSet = std::vector<std::size_t>; // sorted 0-based indices into cover.parts

namespace detail {
inline void check_index_set(const BicliqueSystem& cover, const IndexSet& s) {
    if (s.empty()) throw InvalidInput("index set must be nonempty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= cover.parts.size()) throw InvalidInput("index set refers to a missing biclique");
        if (i && s[i] <= s[i - 1]) throw InvalidInput("index set must be strictly increasing");
    }
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// All index sets of [d] of size 1..t, by size then lexicographically.
inline std::vector<IndexSet> small_subsets(std::size_t d, std::size_t t) {
    std::vector<IndexSet> out;
    for (std::size_t s = 1; s <= t && s <= d; ++s) {
        IndexSet cur(s);
        for (std::size_t i = 0; i < s; ++i) cur[i] = i;
        while (true) {
            out.push_back(cur);
            std::size_t i = s;
            while (i > 0 && cur[i - 1] == d - s + i - 1) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < s; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}
} // namespace detail

// H_S: the pairs covered by every biclique indexed in S.
inline Graph intersection_graph(const BicliqueSystem& cover, const IndexSet& s) {
    detail::check_index_set(cover, s);
    Graph h(cover.host_order);
    const Biclique& first = cover.parts[s.front()];
    for (Vertex a : first.left())
        for (Vertex b : first.right()) {
            bool all = true;
            for (std::size_t j = 1; j < s.size() && all; ++j) all = cover.parts[s[j]].covers(a, b);
            if (all) h.add_edge(a, b);
        }
    return h;
}

// Edge-disjoint bicliques (X_z, Y_z) whose union is H_S. The largest index of S
// is the distinguished one; bit j of z (j-th smaller index) picks which side of
// that biclique meets X_z. Empty-sided candidates are dropped.
inline std::vector<Biclique> split_intersection(const BicliqueSystem& cover, const IndexSet& s) {
    detail::check_index_set(cover, s);
    const Biclique& last = cover.parts[s.back()];
    const std::size_t others = s.size() - 1;
    std::vector<Biclique> out;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << others); ++z) {
        VertexSet x = last.left(), y = last.right();
        for (std::size_t j = 0; j < others && !x.empty() && !y.empty(); ++j) {
            const Biclique& b = cover.parts[s[j]];
            const bool flipped = (z >> j) & 1u;
            x = detail::intersect(x, flipped ? b.right() : b.left());
            y = detail::intersect(y, flipped ? b.left() : b.right());
        }
        if (!x.empty() && !y.empty()) out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

enum class SignConvention {
    alternating_plus,  // sigma(s) = (-1)^(s+1)
    alternating_minus, // sigma(s) = (-1)^s
};

inline std::string to_string(SignConvention c) {
    return c == SignConvention::alternating_plus ? "(-1)^(s+1)" : "(-1)^s";
}

inline int sign_of(SignConvention c, std::size_t s) {
    const int plus = (s % 2 == 1) ? 1 : -1;
    return c == SignConvention::alternating_plus ? plus : -plus;
}

inline RationalMatrix adjacency_matrix(const Graph& g) {
    RationalMatrix a(g.order(), g.order());
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
    return a;
}

namespace detail {
inline void require_cover_of_complete(const BicliqueSystem& cover) {
    const Certificate c = verify_biclique_system(gen::complete(cover.host_order), cover);
    if (!c.pass) throw InvalidInput("cover is not a valid t-cover of the complete graph");
}
} // namespace detail

inline Certificate verify_cover_identity(const BicliqueSystem& cover,
                                         SignConvention sign = SignConvention::alternating_plus) {
    detail::require_cover_of_complete(cover);
    const std::size_t k = cover.host_order;
    RationalMatrix sum(k, k);
    const auto subsets = detail::small_subsets(cover.size(), cover.multiplicity_bound);
    for (const auto& s : subsets) sum += adjacency_matrix(intersection_graph(cover, s)) * Rational(sign_of(sign, s.size()));

    const RationalMatrix target = RationalMatrix::ones(k) - RationalMatrix::identity(k);
    const RationalMatrix diff = target - sum;

    Certificate cert;
    cert.claim = "cover_identity";
    cert.param("k", k).param("d", cover.size()).param("t", cover.multiplicity_bound).param("sign", to_string(sign));
    cert.pass = diff.max_abs_entry() == 0;
    cert.note("index_sets", subsets.size());
    cert.note("max_discrepancy", to_string(diff.max_abs_entry()));
    if (!cert.pass) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                if (diff(r, c) != 0 && !cert.find_witness("entry"))
                    cert.note("entry", std::to_string(r + 1) + " " + std::to_string(c + 1) + " expected " +
                                           to_string(target(r, c)) + " got " + to_string(sum(r, c)));
    }
    return cert;
}

// Builds the rank-one halves B' and the residual T and checks (i) rank B' = 1,
// (ii) T antisymmetric, (iii) I + T = J - sum 2 sigma B' has full rank k, and
// (iv) k <= #B' + 1 <= peck_bound(d, t).
inline Certificate rank_certificate(const BicliqueSystem& cover) {
    detail::require_cover_of_complete(cover);
    const std::size_t k = cover.host_order;
    const std::size_t d = cover.size();
    const std::size_t t = cover.multiplicity_bound;

    RationalMatrix halves(k, k); // sum 2 sigma B'
    RationalMatrix residual(k, k);
    std::size_t terms = 0;
    bool rank_one = true;
    for (const auto& s : detail::small_subsets(d, t)) {
        const Rational sigma = sign_of(SignConvention::alternating_plus, s.size());
        for (const auto& b : split_intersection(cover, s)) {
            RationalMatrix half(k, k);
            for (Vertex x : b.left())
                for (Vertex y : b.right()) half(x, y) = 1;
            rank_one = rank_one && half.rank() == 1;
            const RationalMatrix full = half + half.transpose();
            halves += half * (2 * sigma);
            residual += (full - half * Rational(2)) * sigma;
            ++terms;
        }
    }

    const RationalMatrix shifted = RationalMatrix::identity(k) + residual;
    const bool consistent = shifted == RationalMatrix::ones(k) - halves;
    const std::size_t full_rank = shifted.rank();
    const Rational det = shifted.determinant();
    const std::uint64_t bound = peck_bound(d, t);

    Certificate cert;
    cert.claim = "rank_certificate";
    cert.param("k", k).param("d", d).param("t", t);
    cert.note("rank_one_terms", terms);
    cert.note("all_rank_one", std::string(rank_one ? "yes" : "no"));
    cert.note("residual_antisymmetric", std::string(residual.is_antisymmetric() ? "yes" : "no"));
    cert.note("decomposition_consistent", std::string(consistent ? "yes" : "no"));
    cert.note("rank_I_plus_T", full_rank);
    cert.note("det_I_plus_T", to_string(det));
    cert.note("m", bound - 1);
    cert.note("peck_bound", bound);
    cert.note("conclusion", std::to_string(k) + " <= " + std::to_string(terms + 1) + " <= " + std::to_string(bound));
    cert.pass = rank_one && residual.is_antisymmetric() && consistent && full_rank == k && det != 0 &&
                k <= terms + 1 && terms + 1 <= bound;
    return cert;
}

// A random valid t-cover of K_k: repeatedly grow a biclique around a random
// uncovered edge, adding vertices to either side while no pair exceeds t.
template <typename Rng>
BicliqueSystem random_t_cover(std::size_t k, std::size_t t, Rng& rng) {
    if (t == 0) throw InvalidInput("random_t_cover: t must be positive");
    BicliqueSystem cover{k, {}, t};
    std::vector<std::size_t> count(k * k, 0);
    while (true) {
        std::vector<std::pair<Vertex, Vertex>> open;
        for (Vertex u = 0; u < k; ++u)
            for (Vertex v = u + 1; v < k; ++v)
                if (count[u * k + v] == 0) open.emplace_back(u, v);
        if (open.empty()) break;
        auto [u, v] = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        if (std::bernoulli_distribution(0.5)(rng)) std::swap(u, v);
        VertexSet left{u}, right{v};
        std::vector<Vertex> rest;
        for (Vertex x = 0; x < k; ++x)
            if (x != u && x != v) rest.push_back(x);
        std::shuffle(rest.begin(), rest.end(), rng);
        std::uniform_int_distribution<int> side(0, 2);
        for (Vertex x : rest) {
            const int choice = side(rng);
            if (choice == 0) continue;
            VertexSet& mine = choice == 1 ? left : right;
            const VertexSet& across = choice == 1 ? right : left;
            bool ok = true;
            for (Vertex y : across) ok = ok && count[x * k + y] < t;
            if (ok) mine.push_back(x);
        }
        for (Vertex a : left)
            for (Vertex b : right) {
                ++count[a * k + b];
                ++count[b * k + a];
            }
        cover.parts.emplace_back(std::move(left), std::move(right));
    }
    return cover;
}

} // namespace bpgap
