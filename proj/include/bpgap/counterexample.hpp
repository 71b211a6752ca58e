#pragma once

// The graph G(n) on [n]^7 (x ~ y iff rho(x, y) ∈ S), its 30 edge-disjoint
// pieces G_i (rho(x, y) ∈ S_i), the reduced graphs on [n]^5 whose n^2-blowups
// are the G_i, the resulting explicit biclique partition of G(n), and the
// t-cover of the OR power G^t.
//
// Vertex index of a grid point (x_1, ..., x_d), x_i ∈ [1, n], is the mixed-radix
// number sum (x_i - 1) * n^(d - i): coordinate 1 is most significant.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bpgap/cube.hpp"
#include "bpgap/graph.hpp"

namespace bpgap {

inline constexpr std::size_t kDefaultVertexLimit = 10000;
inline constexpr std::size_t kDefaultPowerVertexLimit = 16384;

class GridPoint {
public:
    GridPoint() = default;
    explicit GridPoint(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw InvalidInput("GridPoint: arity must be positive");
        for (auto c : coords_)
            if (c == 0) throw InvalidInput("GridPoint: coordinates are 1-based");
    }

    std::size_t arity() const { return coords_.size(); }
    const std::vector<std::uint32_t>& coords() const { return coords_; }
    std::uint32_t operator[](std::size_t i) const { return coords_.at(i - 1); } // 1-based

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;

private:
    std::vector<std::uint32_t> coords_;
};

inline CubePoint rho(const GridPoint& x, const GridPoint& y) { return rho(x.coords(), y.coords()); }

// Restriction of x to the 1-based coordinates in `coords`, in increasing order.
inline GridPoint project(const GridPoint& x, const std::set<std::size_t>& coords) {
    std::vector<std::uint32_t> out;
    for (std::size_t c : coords) {
        if (c < 1 || c > x.arity()) throw InvalidInput("project: coordinate index out of range");
        out.push_back(x[c]);
    }
    return GridPoint(std::move(out));
}

// n^power, or a resource-limit error when it exceeds `limit`.
inline std::size_t checked_vertex_count(std::size_t n, std::size_t power, std::size_t limit) {
    if (n == 0) throw InvalidInput("grid side n must be positive");
    std::size_t count = 1;
    for (std::size_t i = 0; i < power; ++i) {
        if (count > limit / n) count = limit + 1;
        else count *= n;
    }
    if (count > limit)
        throw ResourceLimit("graph on " + std::to_string(n) + "^" + std::to_string(power) +
                            " vertices exceeds vertex limit " + std::to_string(limit));
    return count;
}

inline std::size_t grid_index(const GridPoint& x, std::size_t n) {
    std::size_t idx = 0;
    for (auto c : x.coords()) {
        if (c > n) throw InvalidInput("grid_index: coordinate exceeds n");
        idx = idx * n + (c - 1);
    }
    return idx;
}

inline GridPoint grid_point(std::size_t index, std::size_t n, std::size_t arity) {
    std::vector<std::uint32_t> coords(arity);
    for (std::size_t i = arity; i-- > 0;) {
        coords[i] = static_cast<std::uint32_t>(index % n + 1);
        index /= n;
    }
    return GridPoint(std::move(coords));
}

// Graph on [n]^arity with x ~ y iff rho(x, y) ∈ admissible.
inline Graph build_grid_graph(std::size_t n, const CubeSet& admissible, std::size_t vertex_limit) {
    const std::size_t arity = admissible.dim();
    if (admissible.contains(CubePoint::zeros(arity))) throw InvalidInput("build_grid_graph: admissible set contains 0^d");
    const std::size_t order = checked_vertex_count(n, arity, vertex_limit);
    const auto table = admissible.table();

    std::vector<std::uint32_t> digits(order * arity);
    for (std::size_t v = 0; v < order; ++v) {
        std::size_t r = v;
        for (std::size_t i = arity; i-- > 0;) {
            digits[v * arity + i] = static_cast<std::uint32_t>(r % n);
            r /= n;
        }
    }
    Graph g(order);
    for (std::size_t u = 0; u < order; ++u) {
        const std::uint32_t* du = &digits[u * arity];
        for (std::size_t v = u + 1; v < order; ++v) {
            const std::uint32_t* dv = &digits[v * arity];
            std::uint32_t code = 0;
            for (std::size_t i = 0; i < arity; ++i) code = (code << 1) | (du[i] != dv[i] ? 1u : 0u);
            if (table[code]) g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph build_G(std::size_t n, std::size_t vertex_limit = kDefaultVertexLimit) {
    return build_grid_graph(n, build_S(), vertex_limit);
}

inline CubeSet subcube_set(const Subcube& part) {
    CubeSet s(part.dim());
    for (const auto& p : part.members()) s.insert(p);
    return s;
}

inline Graph build_G_i(std::size_t n, const Subcube& part, std::size_t vertex_limit = kDefaultVertexLimit) {
    if (part.dim() != 7) throw InvalidInput("build_G_i: part must be a subcube of Q_7");
    return build_grid_graph(n, subcube_set(part), vertex_limit);
}

// G~_i together with the index map of its n^2-blowup onto G_i.
struct ReducedGraph {
    Graph graph;                       // on [n]^5, indexed over the fixed coordinates
    std::size_t copies = 1;            // n^2
    std::vector<std::size_t> to_full;  // blowup index r * copies + c -> vertex of G_i
};

// x~ ~ y~ iff they differ exactly at the fixed coordinates carrying 1. Copy c of
// reduced vertex r is the grid point whose fixed coordinates spell r and whose
// free coordinates spell c (both mixed radix, increasing position order).
inline ReducedGraph reduced_graph(std::size_t n, const Subcube& part, std::size_t vertex_limit = kDefaultVertexLimit) {
    if (part.dim() != 7 || part.fixed().size() != 5)
        throw InvalidInput("reduced_graph: part must be a subcube of Q_7 with exactly 5 fixed coordinates");
    checked_vertex_count(n, 7, vertex_limit);

    std::vector<std::size_t> fixed_pos;
    std::vector<std::uint8_t> pattern;
    for (const auto& [coord, value] : part.fixed()) {
        fixed_pos.push_back(coord);
        pattern.push_back(value);
    }
    const auto free_pos = part.free_coords();

    CubeSet admissible(5);
    admissible.insert(CubePoint(pattern));
    ReducedGraph out;
    out.graph = build_grid_graph(n, admissible, vertex_limit);
    out.copies = n * n;

    const std::size_t reduced_order = out.graph.order();
    out.to_full.resize(reduced_order * out.copies);
    std::vector<std::uint32_t> coords(7);
    for (std::size_t r = 0; r < reduced_order; ++r) {
        const GridPoint rp = grid_point(r, n, 5);
        for (std::size_t c = 0; c < out.copies; ++c) {
            const GridPoint cp = grid_point(c, n, 2);
            for (std::size_t k = 0; k < 5; ++k) coords[fixed_pos[k] - 1] = rp.coords()[k];
            for (std::size_t k = 0; k < 2; ++k) coords[free_pos[k] - 1] = cp.coords()[k];
            out.to_full[r * out.copies + c] = grid_index(GridPoint(coords), n);
        }
    }
    return out;
}

// The bicliques contributed by one piece: star partition of G~_i, blown up by n^2.
inline std::vector<Biclique> partition_piece(std::size_t n, const Subcube& part,
                                             std::size_t vertex_limit = kDefaultVertexLimit) {
    const ReducedGraph red = reduced_graph(n, part, vertex_limit);
    std::vector<Biclique> out;
    for (const auto& b : star_partition(red.graph).parts) {
        const Biclique lifted = blowup_biclique(b, red.copies);
        auto map = [&](const VertexSet& s) {
            VertexSet m;
            m.reserve(s.size());
            for (Vertex v : s) m.push_back(static_cast<Vertex>(red.to_full[v]));
            return m;
        };
        out.emplace_back(map(lifted.left()), map(lifted.right()));
    }
    return out;
}

inline std::size_t partition_size_bound(std::size_t n) {
    std::size_t n5 = 1;
    for (int i = 0; i < 5; ++i) n5 *= n;
    return 30 * (n5 - 1);
}

inline BicliqueSystem partition_G(std::size_t n, std::size_t vertex_limit = kDefaultVertexLimit) {
    const std::size_t order = checked_vertex_count(n, 7, vertex_limit);
    BicliqueSystem sys{order, {}, 1};
    for (const auto& part : decompose_S()) {
        auto piece = partition_piece(n, part, vertex_limit);
        sys.parts.insert(sys.parts.end(), piece.begin(), piece.end());
    }
    return sys;
}

// Builds the partition piece by piece and streams it into the multiplicity
// counter, so only one piece is held at a time.
inline Certificate verify_partition_G(const Graph& g, std::size_t n, std::size_t vertex_limit = kDefaultVertexLimit) {
    if (g.order() != checked_vertex_count(n, 7, vertex_limit)) throw InvalidInput("verify_partition_G: order mismatch");
    MultiplicityCounter counter(g.order(), 1);
    std::size_t total = 0;
    for (const auto& part : decompose_S()) {
        for (const auto& b : partition_piece(n, part, vertex_limit)) {
            counter.add(b);
            ++total;
        }
    }
    Certificate cert = finish_multiplicity_check(g, counter, 1, total, nullptr);
    cert.claim = "partition_G";
    cert.param("n", n).param("size_bound", partition_size_bound(n));
    if (cert.pass && total > partition_size_bound(n)) {
        cert.pass = false;
        cert.note("violation", std::string("size_bound_exceeded"));
    }
    return cert;
}

struct PowerCover {
    Graph graph;          // G^t, tuple (h_1, ..., h_t) -> mixed radix with h_1 most significant
    BicliqueSystem cover; // multiplicity bound t
    std::size_t base_partition_size = 0;
};

// Lifts the explicit partition of G(n) through each coordinate of G^t.
inline PowerCover cover_G_power(std::size_t n, std::size_t t, std::size_t vertex_limit = kDefaultPowerVertexLimit) {
    if (t == 0) throw InvalidInput("cover_G_power: t must be positive");
    const std::size_t order = checked_vertex_count(n, 7 * t, vertex_limit);
    const Graph g = build_G(n, vertex_limit);
    const BicliqueSystem base = partition_G(n, vertex_limit);

    PowerCover out;
    out.graph = g;
    for (std::size_t i = 1; i < t; ++i) out.graph = or_product(g, out.graph);
    out.cover = BicliqueSystem{order, {}, t};
    out.base_partition_size = base.size();

    const std::size_t base_n = g.order();
    for (std::size_t coord = 0; coord < t; ++coord) {
        std::size_t below = 1; // weight of coordinate `coord`
        for (std::size_t j = coord + 1; j < t; ++j) below *= base_n;
        const std::size_t above = order / (below * base_n);
        auto lift = [&](const VertexSet& s) {
            VertexSet out_set;
            out_set.reserve(s.size() * above * below);
            for (std::size_t hi = 0; hi < above; ++hi)
                for (Vertex v : s)
                    for (std::size_t lo = 0; lo < below; ++lo)
                        out_set.push_back(static_cast<Vertex>((hi * base_n + v) * below + lo));
            return out_set;
        };
        for (const auto& b : base.parts) out.cover.parts.emplace_back(lift(b.left()), lift(b.right()));
    }
    return out;
}

// The pieces G_i have pairwise disjoint edge sets whose union is E(G(n)).
inline Certificate verify_edge_disjoint_pieces(std::size_t n, std::size_t vertex_limit = kDefaultVertexLimit) {
    const Graph g = build_G(n, vertex_limit);
    std::vector<Word> rows(g.storage().size(), 0);
    const std::size_t stride = words_for(g.order());
    std::size_t sum = 0, overlap = 0;
    for (const auto& part : decompose_S()) {
        const Graph gi = build_G_i(n, part, vertex_limit);
        sum += gi.edge_count();
        for (std::size_t u = 0; u < g.order(); ++u) {
            const auto src = gi.row(u);
            for (std::size_t k = 0; k < stride; ++k) {
                overlap += static_cast<std::size_t>(std::popcount(rows[u * stride + k] & src[k]));
                rows[u * stride + k] |= src[k];
            }
        }
    }
    Certificate cert;
    cert.claim = "edge_disjoint_pieces";
    cert.param("n", n).param("pieces", decompose_S().size());
    cert.note("piece_edge_sum", sum);
    cert.note("G_edges", g.edge_count());
    cert.note("overlapping_pairs", overlap / 2);
    cert.note("union_equals_G", std::string(rows == g.storage() ? "yes" : "no"));
    cert.pass = overlap == 0 && sum == g.edge_count() && rows == g.storage();
    return cert;
}

// G_i coincides with the n^2-blowup of G~_i under to_full, pair by pair.
inline Certificate verify_blowup_exact(std::size_t n, const Subcube& part, std::size_t vertex_limit = kDefaultVertexLimit) {
    const Graph gi = build_G_i(n, part, vertex_limit);
    const ReducedGraph red = reduced_graph(n, part, vertex_limit);
    const Graph lifted = blowup(red.graph, red.copies);
    Certificate cert;
    cert.claim = "blowup_exact";
    cert.param("n", n).param("part", part.pattern_str());
    std::vector<bool> hit(gi.order(), false);
    bool bijective = red.to_full.size() == gi.order();
    for (std::size_t v : red.to_full) {
        if (v >= hit.size() || hit[v]) bijective = false;
        else hit[v] = true;
    }
    std::size_t mismatches = 0;
    if (bijective)
        for (std::size_t a = 0; a < lifted.order(); ++a)
            for (std::size_t b = a + 1; b < lifted.order(); ++b)
                if (lifted.adjacent(a, b) != gi.adjacent(red.to_full[a], red.to_full[b])) ++mismatches;
    cert.note("bijective", std::string(bijective ? "yes" : "no"));
    cert.note("mismatched_pairs", mismatches);
    cert.pass = bijective && mismatches == 0;
    return cert;
}

// On an independent set I of G(n): either p_1234(I) is a single value (then
// p_567 values pairwise differ everywhere), or any two distinct p_1234 values
// differ in all four coordinates and every fibre has at most 3 members.
inline Certificate projection_dichotomy(std::size_t n, const VertexSet& independent) {
    Certificate cert;
    cert.claim = "projection_dichotomy";
    cert.param("n", n).param("set_size", independent.size());

    std::vector<GridPoint> pts;
    for (Vertex v : independent) pts.push_back(grid_point(v, n, 7));
    const std::set<std::size_t> head{1, 2, 3, 4}, tail{5, 6, 7};

    std::map<GridPoint, std::vector<GridPoint>> fibres;
    for (const auto& p : pts) fibres[project(p, head)].push_back(project(p, tail));
    cert.note("distinct_heads", fibres.size());

    auto differ_everywhere = [](const GridPoint& a, const GridPoint& b) {
        for (std::size_t i = 1; i <= a.arity(); ++i)
            if (a[i] == b[i]) return false;
        return true;
    };

    cert.pass = true;
    if (fibres.size() == 1) {
        const auto& tails = fibres.begin()->second;
        for (std::size_t i = 0; i < tails.size() && cert.pass; ++i)
            for (std::size_t j = i + 1; j < tails.size() && cert.pass; ++j)
                if (!differ_everywhere(tails[i], tails[j])) {
                    cert.pass = false;
                    cert.note("violation", std::string("tails_share_coordinate"));
                }
    } else {
        for (auto a = fibres.begin(); a != fibres.end() && cert.pass; ++a) {
            if (a->second.size() > 3) {
                cert.pass = false;
                cert.note("violation", std::string("fibre_larger_than_3"));
            }
            for (auto b = std::next(a); b != fibres.end() && cert.pass; ++b)
                if (!differ_everywhere(a->first, b->first)) {
                    cert.pass = false;
                    cert.note("violation", std::string("heads_share_coordinate"));
                }
        }
    }
    return cert;
}

} // namespace bpgap
