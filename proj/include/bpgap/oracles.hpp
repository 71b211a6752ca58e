#pragma once

// Exact solvers used as ground truth. Every answer comes with a witness; when a
// size or search budget is exceeded the solver throws ResourceLimit instead of
// returning an unproven value. Among several optima the first one reached in the
// (deterministic) search order is returned.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "bpgap/bits.hpp"
#include "bpgap/graph.hpp"

namespace bpgap {

struct SearchLimits {
    std::size_t max_order;
    std::size_t node_budget = 0; // 0: unlimited
};

namespace detail {

inline void charge(std::size_t& nodes, std::size_t budget, const char* who) {
    if (budget && ++nodes > budget) throw ResourceLimit(std::string(who) + ": search budget exhausted");
}

// Branch and bound maximum clique with greedy colouring bounds over bitsets.
class MaxClique {
public:
    MaxClique(const Graph& g, std::size_t budget) : n_(g.order()), budget_(budget) {
        // Search in non-increasing degree order; ties by index.
        order_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) order_[v] = static_cast<Vertex>(v);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<std::size_t> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
        adj_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for_each_bit(g.row(order_[i]), [&](std::size_t u) { adj_[i].set(pos[u]); });
    }

    VertexSet run() {
        Bitset all(n_);
        for (std::size_t i = 0; i < n_; ++i) all.set(i);
        std::vector<std::size_t> current;
        if (n_) expand(current, all);
        VertexSet out;
        for (std::size_t i : best_) out.push_back(order_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void expand(std::vector<std::size_t>& current, Bitset p) {
        charge(nodes_, budget_, "max clique");
        std::vector<std::size_t> verts, colour;
        verts.reserve(p.count());
        colour.reserve(p.count());
        Bitset uncoloured = p;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            while (!q.none()) {
                const std::size_t v = q.first();
                uncoloured.reset(v);
                q.reset(v);
                q.subtract(adj_[v]);
                verts.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + colour[i] <= best_.size()) return;
            const std::size_t v = verts[i];
            current.push_back(v);
            Bitset next = p;
            next &= adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p.reset(v);
        }
    }

    std::size_t n_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<Bitset> adj_;
    std::vector<std::size_t> best_;
};

} // namespace detail

struct IndependenceResult {
    std::size_t value = 0;
    VertexSet witness;
};

inline VertexSet max_clique(const Graph& g, std::size_t node_budget = 0) {
    return detail::MaxClique(g, node_budget).run();
}

inline IndependenceResult independence_number(const Graph& g, SearchLimits limits = {256}) {
    if (g.order() > limits.max_order)
        throw ResourceLimit("independence_number: order " + std::to_string(g.order()) + " exceeds limit " +
                            std::to_string(limits.max_order));
    IndependenceResult r;
    r.witness = detail::MaxClique(g.complement(), limits.node_budget).run();
    r.value = r.witness.size();
    return r;
}

struct ChromaticResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<std::size_t> coloring; // achieves `upper`
    bool exact() const { return lower == upper; }
};

namespace detail {

class ExactColoring {
public:
    ExactColoring(const Graph& g, std::size_t budget) : g_(g), n_(g.order()), budget_(budget) {}

    ChromaticResult run() {
        ChromaticResult r;
        if (n_ == 0) return r;
        const VertexSet clique = max_clique(g_);
        r.lower = clique.size();
        best_ = dsatur_greedy();
        best_count_ = 1 + *std::max_element(best_.begin(), best_.end());

        colour_.assign(n_, kNone);
        seen_.assign(n_, std::vector<std::uint32_t>(n_ + 1, 0));
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
        lower_ = r.lower;
        try {
            if (best_count_ > lower_) search(clique.size(), clique.size());
            r.upper = best_count_;
        } catch (const ResourceLimit&) {
            r.upper = best_count_;
            r.coloring = best_;
            interrupted_ = true;
            return r;
        }
        r.coloring = best_;
        r.upper = best_count_;
        r.lower = best_count_;
        return r;
    }

    bool interrupted() const { return interrupted_; }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> dsatur_greedy() const {
        std::vector<std::size_t> col(n_, kNone);
        std::vector<std::vector<bool>> seen(n_, std::vector<bool>(n_ + 1, false));
        std::vector<std::size_t> sat(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t pick = kNone;
            for (std::size_t v = 0; v < n_; ++v) {
                if (col[v] != kNone) continue;
                if (pick == kNone || sat[v] > sat[pick] || (sat[v] == sat[pick] && g_.degree(v) > g_.degree(pick)))
                    pick = v;
            }
            std::size_t c = 0;
            while (seen[pick][c]) ++c;
            col[pick] = c;
            for_each_bit(g_.row(pick), [&](std::size_t u) {
                if (!seen[u][c]) {
                    seen[u][c] = true;
                    ++sat[u];
                }
            });
        }
        return col;
    }

    void assign(std::size_t v, std::size_t c) {
        colour_[v] = c;
        for_each_bit(g_.row(v), [&](std::size_t u) { ++seen_[u][c]; });
    }
    void unassign(std::size_t v) {
        const std::size_t c = colour_[v];
        colour_[v] = kNone;
        for_each_bit(g_.row(v), [&](std::size_t u) { --seen_[u][c]; });
    }

    std::size_t saturation(std::size_t v, std::size_t used) const {
        std::size_t s = 0;
        for (std::size_t c = 0; c < used; ++c) s += seen_[v][c] ? 1 : 0;
        return s;
    }

    void search(std::size_t coloured, std::size_t used) {
        charge(nodes_, budget_, "chromatic number");
        if (coloured == n_) {
            if (used < best_count_) {
                best_count_ = used;
                best_ = colour_;
            }
            return;
        }
        std::size_t pick = kNone, pick_sat = 0, pick_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] != kNone) continue;
            const std::size_t s = saturation(v, used);
            std::size_t d = 0;
            for_each_bit(g_.row(v), [&](std::size_t u) { d += colour_[u] == kNone ? 1 : 0; });
            if (pick == kNone || s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        for (std::size_t c = 0; c < used && used < best_count_; ++c) {
            if (seen_[pick][c]) continue;
            assign(pick, c);
            search(coloured + 1, used);
            unassign(pick);
            if (best_count_ == lower_) return;
        }
        if (used + 1 < best_count_) {
            assign(pick, used);
            search(coloured + 1, used + 1);
            unassign(pick);
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::size_t lower_ = 0;
    bool interrupted_ = false;
    std::vector<std::size_t> colour_;
    std::vector<std::vector<std::uint32_t>> seen_;
    std::vector<std::size_t> best_;
    std::size_t best_count_ = 0;
};

} // namespace detail

// Bounded search: returns the proven interval [lower, upper] reached within the
// node budget (exact when lower == upper).
inline ChromaticResult chromatic_interval(const Graph& g, std::size_t node_budget) {
    return detail::ExactColoring(g, node_budget).run();
}

inline ChromaticResult chromatic_number(const Graph& g, SearchLimits limits = {64}) {
    if (g.order() > limits.max_order)
        throw ResourceLimit("chromatic_number: order " + std::to_string(g.order()) + " exceeds limit " +
                            std::to_string(limits.max_order));
    detail::ExactColoring solver(g, limits.node_budget);
    ChromaticResult r = solver.run();
    if (solver.interrupted()) throw ResourceLimit("chromatic_number: search budget exhausted");
    return r;
}

struct BicliqueCoverResult {
    std::size_t value = 0;
    BicliqueSystem witness;
};

namespace detail {

class MinBicliqueCover {
public:
    MinBicliqueCover(const Graph& g, std::size_t t, std::size_t budget) : g_(g), t_(t), budget_(budget) {
        for (const auto& [u, v] : g.edges()) {
            edge_id_[u * g.order() + v] = edges_.size();
            edge_id_[v * g.order() + u] = edges_.size();
            edges_.emplace_back(u, v);
        }
        enumerate_bicliques();
        by_edge_.resize(edges_.size());
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            for (std::size_t e = 0; e < edges_.size(); ++e)
                if ((masks_[i] >> e) & 1u) by_edge_[e].push_back(i);
    }

    BicliqueCoverResult run() {
        BicliqueCoverResult r;
        r.value = solve(0);
        r.witness = BicliqueSystem{g_.order(), {}, t_};
        std::uint64_t state = 0;
        while (true) {
            const auto it = memo_.find(state);
            if (it == memo_.end() || it->second.value == 0) break;
            const std::size_t c = it->second.choice;
            r.witness.parts.push_back(candidates_[c]);
            state += spread(masks_[c]);
        }
        return r;
    }

private:
    struct Entry {
        std::uint8_t value;
        std::uint16_t choice;
    };
    static constexpr std::uint8_t kInfinite = 255;

    // Two bits per edge; adding spread(mask) increments every edge in mask.
    static std::uint64_t spread(std::uint64_t mask) {
        std::uint64_t s = 0;
        for (std::size_t e = 0; mask; ++e, mask >>= 1)
            if (mask & 1u) s |= std::uint64_t{1} << (2 * e);
        return s;
    }

    void enumerate_bicliques() {
        const std::size_t n = g_.order();
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            VertexSet left, right;
            std::size_t c = code;
            for (std::size_t v = 0; v < n; ++v, c /= 3) {
                if (c % 3 == 1) left.push_back(static_cast<Vertex>(v));
                if (c % 3 == 2) right.push_back(static_cast<Vertex>(v));
            }
            if (left.empty() || right.empty() || left.front() > right.front()) continue;
            std::uint64_t mask = 0;
            bool inside = true;
            for (Vertex a : left) {
                for (Vertex b : right) {
                    if (!g_.adjacent(a, b)) {
                        inside = false;
                        break;
                    }
                    mask |= std::uint64_t{1} << edge_id_.at(a * n + b);
                }
                if (!inside) break;
            }
            if (!inside) continue;
            candidates_.emplace_back(std::move(left), std::move(right));
            masks_.push_back(mask);
        }
    }

    std::size_t count(std::uint64_t state, std::size_t e) const { return (state >> (2 * e)) & 3u; }

    std::uint8_t solve(std::uint64_t state) {
        std::size_t first = edges_.size();
        std::uint64_t saturated = 0;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const std::size_t c = count(state, e);
            if (c == 0 && first == edges_.size()) first = e;
            if (c >= t_) saturated |= std::uint64_t{1} << e;
        }
        if (first == edges_.size()) return 0;
        if (const auto it = memo_.find(state); it != memo_.end()) return it->second.value;
        charge(nodes_, budget_, "min biclique partition");

        Entry best{kInfinite, 0};
        for (std::size_t c : by_edge_[first]) {
            if (masks_[c] & saturated) continue;
            const std::uint8_t sub = solve(state + spread(masks_[c]));
            if (sub != kInfinite && sub + 1 < best.value) best = Entry{static_cast<std::uint8_t>(sub + 1), static_cast<std::uint16_t>(c)};
        }
        memo_.emplace(state, best);
        return best.value;
    }

    const Graph& g_;
    std::size_t t_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::unordered_map<std::size_t, std::size_t> edge_id_;
    std::vector<Biclique> candidates_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

} // namespace detail

// Exact bp_t(G): fewest bicliques covering every edge between 1 and t times.
// Searches over per-edge cover counts, always branching on the bicliques that
// contain the first uncovered edge.
inline BicliqueCoverResult min_biclique_partition(const Graph& g, std::size_t t = 1,
                                                  SearchLimits limits = {8, 50'000'000}) {
    if (t == 0) throw InvalidInput("min_biclique_partition: t must be positive");
    if (t > 3) throw ResourceLimit("min_biclique_partition: exact search supports t <= 3");
    if (g.order() > limits.max_order)
        throw ResourceLimit("min_biclique_partition: order " + std::to_string(g.order()) + " exceeds limit " +
                            std::to_string(limits.max_order));
    if (g.edge_count() > 31) throw ResourceLimit("min_biclique_partition: more than 31 edges");
    return detail::MinBicliqueCover(g, t, limits.node_budget).run();
}

class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, std::uint8_t v) {
        if (v > 1) throw InvalidInput("BoolMatrix: entries must be 0 or 1");
        data_.at(r * cols_ + c) = v;
    }

    BoolMatrix transpose() const {
        BoolMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
        return t;
    }

    static BoolMatrix identity(std::size_t k) {
        BoolMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m.set(i, i, 1);
        return m;
    }
    static BoolMatrix filled(std::size_t rows, std::size_t cols, std::uint8_t v) {
        BoolMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v);
        return m;
    }

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

// Row set × column set, both sorted (0-based).
struct Rectangle {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
    friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

inline bool is_monochromatic(const BoolMatrix& m, const Rectangle& r, std::uint8_t value) {
    for (auto row : r.rows)
        for (auto col : r.cols)
            if (m.at(row, col) != value) return false;
    return !r.rows.empty() && !r.cols.empty();
}

struct RectangleCoverResult {
    std::size_t value = 0;
    std::vector<Rectangle> witness;
};

// All inclusion-maximal rectangles whose entries all equal `value`, sorted.
inline std::vector<Rectangle> maximal_rectangles(const BoolMatrix& m, std::uint8_t value, std::size_t max_side = 22) {
    const bool by_cols = m.cols() <= m.rows();
    const BoolMatrix& base = m;
    const std::size_t k = by_cols ? m.cols() : m.rows();
    const std::size_t other = by_cols ? m.rows() : m.cols();
    if (k > max_side) throw ResourceLimit("maximal_rectangles: both matrix sides exceed " + std::to_string(max_side));
    auto entry = [&](std::size_t a, std::size_t b) { return by_cols ? base.at(b, a) : base.at(a, b); };

    std::vector<Rectangle> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        std::vector<std::size_t> side, span;
        for (std::size_t a = 0; a < k; ++a)
            if ((s >> a) & 1u) side.push_back(a);
        for (std::size_t b = 0; b < other; ++b) {
            bool ok = true;
            for (auto a : side)
                if (entry(a, b) != value) {
                    ok = false;
                    break;
                }
            if (ok) span.push_back(b);
        }
        if (span.empty()) continue;
        // Closed iff no further index on this side is compatible with span.
        bool closed = true;
        for (std::size_t a = 0; a < k && closed; ++a) {
            if ((s >> a) & 1u) continue;
            bool ok = true;
            for (auto b : span)
                if (entry(a, b) != value) {
                    ok = false;
                    break;
                }
            if (ok) closed = false;
        }
        if (!closed) continue;
        out.push_back(by_cols ? Rectangle{span, side} : Rectangle{side, span});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

class ExactSetCover {
public:
    ExactSetCover(std::size_t universe, std::vector<Bitset> sets, std::size_t budget)
        : universe_(universe), sets_(std::move(sets)), budget_(budget), containing_(universe), reach_(universe, Bitset(universe)) {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (auto e : sets_[s].indices()) containing_[e].push_back(s);
        for (std::size_t e = 0; e < universe_; ++e) {
            if (containing_[e].empty()) throw InvalidInput("set cover: element not coverable");
            for (auto s : containing_[e]) reach_[e] |= sets_[s];
        }
    }

    std::vector<std::size_t> run() {
        Bitset all(universe_);
        for (std::size_t e = 0; e < universe_; ++e) all.set(e);
        best_ = greedy(all);
        std::vector<std::size_t> chosen;
        dfs(all, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::vector<std::size_t> greedy(Bitset uncovered) const {
        std::vector<std::size_t> out;
        while (!uncovered.none()) {
            std::size_t pick = 0, gain = 0;
            for (std::size_t s = 0; s < sets_.size(); ++s) {
                Bitset x = sets_[s];
                x &= uncovered;
                if (x.count() > gain) {
                    gain = x.count();
                    pick = s;
                }
            }
            out.push_back(pick);
            uncovered.subtract(sets_[pick]);
        }
        return out;
    }

    std::size_t lower_bound(const Bitset& uncovered) const {
        // Elements no single set can cover together each need their own set.
        std::size_t packing = 0;
        Bitset blocked(universe_);
        for (auto e : uncovered.indices()) {
            if (blocked.test(e)) continue;
            ++packing;
            blocked |= reach_[e];
        }
        return packing;
    }

    void dfs(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
        charge(nodes_, budget_, "rectangle cover");
        if (uncovered.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + lower_bound(uncovered) >= best_.size()) return;

        std::size_t pivot = universe_;
        for (auto e : uncovered.indices())
            if (pivot == universe_ || containing_[e].size() < containing_[pivot].size()) pivot = e;

        std::vector<std::pair<std::size_t, std::size_t>> options;
        for (auto s : containing_[pivot]) {
            Bitset x = sets_[s];
            x &= uncovered;
            options.emplace_back(x.count(), s);
        }
        std::stable_sort(options.begin(), options.end(), [](auto a, auto b) { return a.first > b.first; });
        for (auto [gain, s] : options) {
            Bitset rest = uncovered;
            rest.subtract(sets_[s]);
            chosen.push_back(s);
            dfs(rest, chosen);
            chosen.pop_back();
            if (chosen.size() + 1 >= best_.size()) return;
        }
    }

    std::size_t universe_;
    std::vector<Bitset> sets_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<Bitset> reach_;
    std::vector<std::size_t> best_;
};

} // namespace detail

// Exact C^value(M): fewest monochromatic rectangles covering every entry equal
// to `value`, solved as set cover over the maximal rectangles.
inline RectangleCoverResult min_rectangle_cover(const BoolMatrix& m, std::uint8_t value, std::size_t node_budget = 20'000'000) {
    if (value > 1) throw InvalidInput("min_rectangle_cover: value must be 0 or 1");
    std::vector<std::size_t> entry_id(m.rows() * m.cols(), 0);
    std::size_t universe = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) == value) entry_id[r * m.cols() + c] = universe++;
    RectangleCoverResult result;
    if (universe == 0) return result;

    const auto rects = maximal_rectangles(m, value);
    std::vector<Bitset> sets;
    for (const auto& rect : rects) {
        Bitset s(universe);
        for (auto r : rect.rows)
            for (auto c : rect.cols) s.set(entry_id[r * m.cols() + c]);
        sets.push_back(std::move(s));
    }
    for (auto idx : detail::ExactSetCover(universe, std::move(sets), node_budget).run()) result.witness.push_back(rects[idx]);
    result.value = result.witness.size();
    return result;
}

// ceil(log2 c), the nondeterministic complexity N^b from the cover number C^b.
inline std::size_t ceil_log2(std::size_t c) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < c) ++k;
    return k;
}

} // namespace bpgap
