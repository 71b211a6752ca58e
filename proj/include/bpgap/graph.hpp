#pragma once

// Dense simple graphs, bicliques and biclique systems (partitions and t-covers).
//
// Vertices are dense indices [0, N). Canonical index maps used by constructions:
//   blowup(G, m):      copy a of vertex v      -> v * m + a
//   or_product(G, H):  pair (g, h)             -> g * |H| + h
// Serialized forms (DIMACS, system files, certificates) name vertices 1-based.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bpgap/bits.hpp"
#include "bpgap/certificate.hpp"
#include "bpgap/error.hpp"

namespace bpgap {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>; // sorted, duplicate-free

class Graph {
public:
    struct Unchecked {};

    Graph() = default;
    explicit Graph(std::size_t order) : order_(order), stride_(words_for(order)), adj_(order * stride_, 0) {}

    // Adopts prebuilt adjacency rows; the caller guarantees symmetry and an empty diagonal.
    Graph(std::size_t order, std::vector<Word> rows, Unchecked)
        : order_(order), stride_(words_for(order)), adj_(std::move(rows)) {
        if (adj_.size() != order_ * stride_) throw InvalidInput("Graph: row storage has wrong size");
    }

    std::size_t order() const { return order_; }
    std::size_t stride() const { return stride_; }

    bool adjacent(std::size_t u, std::size_t v) const { return test_bit(row(u), v); }

    void add_edge(std::size_t u, std::size_t v) {
        check_pair(u, v);
        set_bit(row_mut(u), v);
        set_bit(row_mut(v), u);
    }
    void remove_edge(std::size_t u, std::size_t v) {
        check_pair(u, v);
        clear_bit(row_mut(u), v);
        clear_bit(row_mut(v), u);
    }

    std::span<const Word> row(std::size_t u) const { return {adj_.data() + u * stride_, stride_}; }

    std::size_t degree(std::size_t u) const { return popcount(row(u)); }

    std::size_t edge_count() const { return popcount(adj_) / 2; }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (std::size_t u = 0; u < order_; ++u)
            for_each_bit(row(u), [&](std::size_t v) {
                if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            });
        return out;
    }

    VertexSet neighbors(std::size_t u) const {
        VertexSet out;
        for_each_bit(row(u), [&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
        return out;
    }

    Graph complement() const {
        Graph c(order_);
        for (std::size_t u = 0; u < order_; ++u) {
            auto dst = c.row_mut(u);
            auto src = row(u);
            for (std::size_t k = 0; k < stride_; ++k) dst[k] = ~src[k];
            if (order_ % kWordBits) dst[stride_ - 1] &= (Word{1} << (order_ % kWordBits)) - 1;
            clear_bit(dst, u);
        }
        return c;
    }

    Graph induced(const VertexSet& keep) const {
        Graph h(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
        return h;
    }

    bool is_independent(const VertexSet& s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (adjacent(s[i], s[j])) return false;
        return true;
    }
    bool is_clique(const VertexSet& s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j] || !adjacent(s[i], s[j])) return false;
        return true;
    }

    const std::vector<Word>& storage() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::span<Word> row_mut(std::size_t u) { return {adj_.data() + u * stride_, stride_}; }

    void check_pair(std::size_t u, std::size_t v) const {
        if (u >= order_ || v >= order_) throw InvalidInput("Graph: vertex index out of range");
        if (u == v) throw InvalidInput("Graph: loops are not allowed");
    }

    std::size_t order_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> adj_;
};

inline std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

// B(U, W): all pairs across two disjoint nonempty vertex sets.
class Biclique {
public:
    Biclique(VertexSet left, VertexSet right) : left_(normalize(std::move(left))), right_(normalize(std::move(right))) {
        if (left_.empty() || right_.empty()) throw InvalidInput("Biclique: both sides must be nonempty");
        std::size_t i = 0, j = 0;
        while (i < left_.size() && j < right_.size()) {
            if (left_[i] == right_[j]) throw InvalidInput("Biclique: sides must be disjoint");
            left_[i] < right_[j] ? ++i : ++j;
        }
    }

    const VertexSet& left() const { return left_; }
    const VertexSet& right() const { return right_; }
    std::size_t edge_count() const { return left_.size() * right_.size(); }

    bool covers(Vertex a, Vertex b) const {
        auto in = [](const VertexSet& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); };
        return (in(left_, a) && in(right_, b)) || (in(left_, b) && in(right_, a));
    }

    Vertex max_vertex() const { return std::max(left_.back(), right_.back()); }

    std::string str() const { return "B(" + format_vertex_set(left_) + "," + format_vertex_set(right_) + ")"; }

    friend bool operator==(const Biclique&, const Biclique&) = default;
    friend auto operator<=>(const Biclique&, const Biclique&) = default;

private:
    static VertexSet normalize(VertexSet s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    VertexSet left_;
    VertexSet right_;
};

// A list of bicliques over [0, host_order) with multiplicity bound t (t = 1: partition).
struct BicliqueSystem {
    std::size_t host_order = 0;
    std::vector<Biclique> parts;
    std::size_t multiplicity_bound = 1;

    std::size_t size() const { return parts.size(); }

    void validate() const {
        if (multiplicity_bound == 0) throw InvalidInput("BicliqueSystem: multiplicity bound must be positive");
        for (const auto& b : parts)
            if (b.max_vertex() >= host_order) throw InvalidInput("BicliqueSystem: vertex outside host graph");
    }

    friend bool operator==(const BicliqueSystem&, const BicliqueSystem&) = default;
};

// Per-pair cover counts for a stream of bicliques, bit-sliced over planes and
// saturating at 2^planes - 1 (at least t + 1, so "more than t" stays visible).
class MultiplicityCounter {
public:
    MultiplicityCounter(std::size_t order, std::size_t bound)
        : order_(order), stride_(words_for(order)),
          planes_(static_cast<std::size_t>(std::bit_width(bound + 1))),
          counts_(planes_, std::vector<Word>(order * stride_, 0)), scratch_(stride_) {}

    std::size_t order() const { return order_; }
    std::size_t planes() const { return planes_; }
    std::size_t saturation() const { return (std::size_t{1} << planes_) - 1; }

    void add(const Biclique& b) {
        if (b.max_vertex() >= order_) throw InvalidInput("MultiplicityCounter: vertex outside host graph");
        add_side(b.left(), b.right());
        add_side(b.right(), b.left());
    }

    // Saturated count of the unordered pair {u, v}.
    std::size_t count(std::size_t u, std::size_t v) const {
        std::size_t c = 0;
        for (std::size_t p = 0; p < planes_; ++p)
            if (test_bit(plane_row(p, u), v)) c |= std::size_t{1} << p;
        return c;
    }

    // Bits of row u where the count exceeds `threshold`.
    void greater_than(std::size_t u, std::size_t threshold, std::span<Word> out) const {
        for (std::size_t k = 0; k < stride_; ++k) {
            Word gt = 0, eq = ~Word{0};
            for (std::size_t p = planes_; p-- > 0;) {
                const Word w = plane_row(p, u)[k];
                if ((threshold >> p) & 1u) {
                    eq &= w;
                } else {
                    gt |= eq & w;
                    eq &= ~w;
                }
            }
            out[k] = gt;
        }
    }

    std::span<const Word> plane_row(std::size_t p, std::size_t u) const {
        return {counts_[p].data() + u * stride_, stride_};
    }

private:
    void add_side(const VertexSet& rows, const VertexSet& cols) {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        for (Vertex c : cols) set_bit(scratch_, c);
        for (Vertex r : rows) {
            for (std::size_t k = 0; k < stride_; ++k) {
                Word carry = scratch_[k];
                if (!carry) continue;
                for (std::size_t p = 0; p < planes_ && carry; ++p) {
                    Word& w = counts_[p][r * stride_ + k];
                    const Word next = w & carry;
                    w ^= carry;
                    carry = next;
                }
                if (carry)
                    for (std::size_t p = 0; p < planes_; ++p) counts_[p][r * stride_ + k] |= carry;
            }
        }
    }

    std::size_t order_;
    std::size_t stride_;
    std::size_t planes_;
    std::vector<std::vector<Word>> counts_;
    std::vector<Word> scratch_;
};

namespace detail {
inline std::size_t exact_multiplicity(const std::vector<Biclique>& parts, Vertex u, Vertex v) {
    std::size_t c = 0;
    for (const auto& b : parts) c += b.covers(u, v) ? 1 : 0;
    return c;
}
} // namespace detail

// Compares the counts accumulated in `counter` against G with bound t. `parts`
// is used only to recount the witness pair exactly.
inline Certificate finish_multiplicity_check(const Graph& g, const MultiplicityCounter& counter, std::size_t bound,
                                             std::size_t part_count, const std::vector<Biclique>* parts) {
    Certificate cert;
    cert.claim = "biclique_system";
    cert.param("host_order", g.order()).param("parts", part_count).param("t", bound);

    const std::size_t stride = g.stride();
    std::vector<Word> over(stride), covered(stride);
    auto fail = [&](const char* kind, std::size_t u, std::size_t v) {
        cert.pass = false;
        cert.note("violation", std::string(kind));
        cert.note("pair", std::to_string(u + 1) + " " + std::to_string(v + 1));
        const std::size_t mult = parts ? detail::exact_multiplicity(*parts, static_cast<Vertex>(u), static_cast<Vertex>(v))
                                       : counter.count(u, v);
        cert.note("multiplicity", mult);
        return cert;
    };

    std::size_t max_mult = 0;
    for (std::size_t u = 0; u < g.order(); ++u) {
        auto adj = g.row(u);
        counter.greater_than(u, 0, covered);
        counter.greater_than(u, bound, over);
        for (std::size_t k = 0; k < stride; ++k) {
            // Only pairs v > u are reported, so the witness is the lexicographically first.
            const std::size_t base = k * kWordBits;
            Word upper = ~Word{0};
            if (base + kWordBits <= u + 1) upper = 0;
            else if (base <= u) upper = ~Word{0} << (u + 1 - base);
            const Word bad_nonedge = covered[k] & ~adj[k] & upper;
            const Word bad_missing = adj[k] & ~covered[k] & upper;
            const Word bad_over = over[k] & upper;
            const Word bad = bad_nonedge | bad_missing | bad_over;
            if (bad) {
                const std::size_t v = base + static_cast<std::size_t>(std::countr_zero(bad));
                const Word bit = Word{1} << (v - base);
                if (bad_nonedge & bit) return fail("non_edge_covered", u, v);
                if (bad_missing & bit) return fail("edge_uncovered", u, v);
                return fail("over_covered", u, v);
            }
        }
    }
    for (std::size_t level = counter.saturation(); level >= 1 && max_mult == 0; --level) {
        for (std::size_t u = 0; u < g.order() && max_mult == 0; ++u) {
            counter.greater_than(u, level - 1, over);
            if (any(over)) max_mult = level;
        }
    }
    cert.pass = true;
    cert.note("edges", g.edge_count());
    cert.note("max_multiplicity", max_mult);
    return cert;
}

// Pass iff every biclique lies inside E(G) and every edge is covered between 1
// and t times.
inline Certificate verify_biclique_system(const Graph& g, const BicliqueSystem& sys) {
    if (sys.host_order != g.order()) throw InvalidInput("verify_biclique_system: host order mismatch");
    sys.validate();
    MultiplicityCounter counter(g.order(), sys.multiplicity_bound);
    for (const auto& b : sys.parts) counter.add(b);
    return finish_multiplicity_check(g, counter, sys.multiplicity_bound, sys.parts.size(), &sys.parts);
}

// B({v}, later neighbours of v) for each v in increasing order, when nonempty.
inline BicliqueSystem star_partition(const Graph& g) {
    BicliqueSystem sys{g.order(), {}, 1};
    for (std::size_t v = 0; v < g.order(); ++v) {
        VertexSet later;
        for_each_bit(g.row(v), [&](std::size_t u) {
            if (u > v) later.push_back(static_cast<Vertex>(u));
        });
        if (!later.empty()) sys.parts.emplace_back(VertexSet{static_cast<Vertex>(v)}, std::move(later));
    }
    return sys;
}

inline Graph blowup(const Graph& g, std::size_t m) {
    if (m == 0) throw InvalidInput("blowup: copy count must be positive");
    Graph b(g.order() * m);
    for (const auto& [u, v] : g.edges())
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t c = 0; c < m; ++c) b.add_edge(u * m + a, v * m + c);
    return b;
}

inline Biclique blowup_biclique(const Biclique& b, std::size_t m) {
    auto lift = [m](const VertexSet& s) {
        VertexSet out;
        out.reserve(s.size() * m);
        for (Vertex v : s)
            for (std::size_t a = 0; a < m; ++a) out.push_back(static_cast<Vertex>(v * m + a));
        return out;
    };
    return Biclique(lift(b.left()), lift(b.right()));
}

inline BicliqueSystem blowup_system(const BicliqueSystem& sys, std::size_t m) {
    BicliqueSystem out{sys.host_order * m, {}, sys.multiplicity_bound};
    out.parts.reserve(sys.parts.size());
    for (const auto& b : sys.parts) out.parts.push_back(blowup_biclique(b, m));
    return out;
}

namespace detail {
// dst[offset .. offset + nbits) |= src[0 .. nbits)
inline void or_bits_at(std::span<Word> dst, std::size_t offset, std::span<const Word> src, std::size_t nbits) {
    for (std::size_t k = 0; k * kWordBits < nbits; ++k) {
        Word w = src[k];
        const std::size_t rem = nbits - k * kWordBits;
        if (rem < kWordBits) w &= (Word{1} << rem) - 1;
        if (!w) continue;
        const std::size_t pos = offset + k * kWordBits;
        const std::size_t shift = pos % kWordBits;
        dst[pos / kWordBits] |= w << shift;
        if (shift && pos / kWordBits + 1 < dst.size()) dst[pos / kWordBits + 1] |= w >> (kWordBits - shift);
    }
}
} // namespace detail

// (g, h) ~ (g', h') iff g ~ g' or h ~ h'.
inline Graph or_product(const Graph& g, const Graph& h) {
    const std::size_t hn = h.order();
    const std::size_t order = g.order() * hn;
    const std::size_t stride = words_for(order);
    std::vector<Word> rows(order * stride, 0);
    std::vector<Word> ones(words_for(hn), ~Word{0});
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < hn; ++b) {
            std::span<Word> dst(rows.data() + (a * hn + b) * stride, stride);
            for (std::size_t c = 0; c < g.order(); ++c)
                detail::or_bits_at(dst, c * hn, g.adjacent(a, c) ? std::span<const Word>(ones) : h.row(b), hn);
        }
    return Graph(order, std::move(rows), Graph::Unchecked{});
}

} // namespace bpgap
