#pragma once

// Reductions between biclique partitions and the clique-vs-independent-set
// problem CL-IS on a public graph Γ (Alice holds a clique C, Bob an independent
// set I, they output |C ∩ I| ∈ {0, 1}).
//
// Forward: a partition {B(U_i, W_i)} of G on [n] gives characteristic vectors
// v_i ∈ {0, 1, *}^n, the graph Γ on the parts, cliques C_j = {q : v_qj = 1} and
// independent sets I_j = {q : v_qj = 0}, and the submatrix M' whose zero-cover
// number bounds χ(G) from above.
//
// Reverse: H on disjoint pairs (C, I) with the 2-cover {B(U_i, W_i)}, U_i the
// pairs with v_i ∈ C and W_i those with v_i ∈ I.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bpgap/graph.hpp"
#include "bpgap/oracles.hpp"

namespace bpgap {

// Two parts share a 1 and a 0 coordinate, so some edge lies in both.
class WellDefinednessViolation : public InvalidInput {
public:
    WellDefinednessViolation(std::size_t i, std::size_t i2, std::size_t j, std::size_t j2)
        : InvalidInput("characteristic vectors " + std::to_string(i + 1) + " and " + std::to_string(i2 + 1) +
                       " share 1 at coordinate " + std::to_string(j + 1) + " and 0 at coordinate " +
                       std::to_string(j2 + 1) + ": edge covered twice"),
          i_(i), i2_(i2), j_(j), j2_(j2) {}

    std::size_t first_part() const { return i_; }
    std::size_t second_part() const { return i2_; }
    std::size_t shared_one() const { return j_; }
    std::size_t shared_zero() const { return j2_; }

private:
    std::size_t i_, i2_, j_, j2_;
};

// Entry j is '0' if j ∈ U_i, '1' if j ∈ W_i, '*' otherwise.
struct CharVector {
    std::string entries;

    std::size_t size() const { return entries.size(); }
    char operator[](std::size_t j) const { return entries[j]; }
    friend bool operator==(const CharVector&, const CharVector&) = default;
};

// The graph formed by the union of a system's bicliques.
inline Graph union_graph(const BicliqueSystem& sys) {
    Graph g(sys.host_order);
    for (const auto& b : sys.parts)
        for (Vertex x : b.left())
            for (Vertex y : b.right()) g.add_edge(x, y);
    return g;
}

namespace detail {
inline void require_partition(const BicliqueSystem& sys) {
    if (sys.multiplicity_bound != 1) throw InvalidInput("expected a partition (multiplicity bound 1)");
    if (!verify_biclique_system(union_graph(sys), sys).pass) throw InvalidInput("bicliques are not edge-disjoint");
}
} // namespace detail

inline std::vector<CharVector> characteristic_vectors(const BicliqueSystem& partition) {
    detail::require_partition(partition);
    std::vector<CharVector> out;
    for (const auto& b : partition.parts) {
        CharVector v{std::string(partition.host_order, '*')};
        for (Vertex x : b.left()) v.entries[x] = '0';
        for (Vertex y : b.right()) v.entries[y] = '1';
        out.push_back(std::move(v));
    }
    return out;
}

struct GammaOptions {
    bool ambiguous_edge = false; // resolution of pairs with neither a shared 1 nor a shared 0
};

// Γ on the parts: i ~ i' if v_i, v_i' share a 1; non-adjacent if they share a 0.
inline Graph gamma_from_vectors(const std::vector<CharVector>& vecs, GammaOptions opts = {}) {
    Graph gamma(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t i2 = i + 1; i2 < vecs.size(); ++i2) {
            const std::size_t n = std::min(vecs[i].size(), vecs[i2].size());
            std::size_t one = n, zero = n;
            for (std::size_t j = 0; j < n; ++j) {
                if (one == n && vecs[i][j] == '1' && vecs[i2][j] == '1') one = j;
                if (zero == n && vecs[i][j] == '0' && vecs[i2][j] == '0') zero = j;
            }
            if (one != n && zero != n) throw WellDefinednessViolation(i, i2, one, zero);
            if (one != n || (zero == n && opts.ambiguous_edge)) gamma.add_edge(i, i2);
        }
    return gamma;
}

// Builds Γ directly from the bicliques without pre-validating them, so a
// non-partition surfaces as a WellDefinednessViolation.
inline Graph gamma_from_partition(const BicliqueSystem& partition, GammaOptions opts = {}) {
    std::vector<CharVector> vecs;
    for (const auto& b : partition.parts) {
        CharVector v{std::string(partition.host_order, '*')};
        for (Vertex x : b.left()) v.entries[x] = '0';
        for (Vertex y : b.right()) v.entries[y] = '1';
        vecs.push_back(std::move(v));
    }
    return gamma_from_vectors(vecs, opts);
}

struct CLISInstance {
    Graph gamma;
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> independents;
    BoolMatrix matrix; // |C_p ∩ I_q|

    friend bool operator==(const CLISInstance&, const CLISInstance&) = default;
};

inline std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++c;
            ++i;
            ++j;
        } else {
            a[i] < b[j] ? ++i : ++j;
        }
    }
    return c;
}

inline BoolMatrix intersection_matrix(const std::vector<VertexSet>& cliques, const std::vector<VertexSet>& independents) {
    BoolMatrix m(cliques.size(), independents.size());
    for (std::size_t p = 0; p < cliques.size(); ++p)
        for (std::size_t q = 0; q < independents.size(); ++q) {
            const std::size_t s = intersection_size(cliques[p], independents[q]);
            if (s > 1) throw InvalidInput("a clique meets an independent set in more than one vertex");
            m.set(p, q, static_cast<std::uint8_t>(s));
        }
    return m;
}

// Checks that the families are cliques / independent sets of Γ and that the
// matrix holds their intersection sizes.
inline Certificate check_instance(const CLISInstance& inst) {
    Certificate cert;
    cert.claim = "clis_instance";
    cert.param("gamma_order", inst.gamma.order())
        .param("cliques", inst.cliques.size())
        .param("independents", inst.independents.size());
    cert.pass = true;
    auto fail = [&](const std::string& what) {
        if (cert.pass) cert.note("violation", what);
        cert.pass = false;
    };
    for (std::size_t p = 0; p < inst.cliques.size(); ++p)
        if (!inst.gamma.is_clique(inst.cliques[p])) fail("row " + std::to_string(p + 1) + " is not a clique");
    for (std::size_t q = 0; q < inst.independents.size(); ++q)
        if (!inst.gamma.is_independent(inst.independents[q]))
            fail("column " + std::to_string(q + 1) + " is not an independent set");
    if (inst.matrix.rows() != inst.cliques.size() || inst.matrix.cols() != inst.independents.size()) {
        fail("matrix shape");
        return cert;
    }
    for (std::size_t p = 0; p < inst.cliques.size(); ++p)
        for (std::size_t q = 0; q < inst.independents.size(); ++q)
            if (inst.matrix.at(p, q) != intersection_size(inst.cliques[p], inst.independents[q]))
                fail("entry " + std::to_string(p + 1) + " " + std::to_string(q + 1));
    return cert;
}

// Γ with C_j, I_j for j = 1..n and the n × n submatrix M'.
inline CLISInstance canonical_instance(const BicliqueSystem& partition, GammaOptions opts = {}) {
    CLISInstance inst;
    inst.gamma = gamma_from_partition(partition, opts);
    const std::size_t n = partition.host_order;
    inst.cliques.assign(n, {});
    inst.independents.assign(n, {});
    for (std::size_t q = 0; q < partition.parts.size(); ++q) {
        for (Vertex j : partition.parts[q].right()) inst.cliques[j].push_back(static_cast<Vertex>(q));
        for (Vertex j : partition.parts[q].left()) inst.independents[j].push_back(static_cast<Vertex>(q));
    }
    inst.matrix = intersection_matrix(inst.cliques, inst.independents);
    const Certificate c = check_instance(inst);
    if (!c.pass) throw InvalidInput("canonical_instance: " + *c.find_witness("violation"));
    for (std::size_t j = 0; j < n; ++j)
        if (inst.matrix.at(j, j) != 0) throw InvalidInput("canonical_instance: nonzero diagonal entry");
    return inst;
}

// All cliques (or independent sets) of g as sorted vertex lists, including ∅,
// in lexicographic order. With maximal_only, only inclusion-maximal ones.
inline std::vector<VertexSet> all_cliques(const Graph& g, bool maximal_only = false, std::size_t limit = 1u << 20) {
    std::vector<VertexSet> out;
    VertexSet current;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (out.size() >= limit) throw ResourceLimit("all_cliques: family exceeds limit " + std::to_string(limit));
        bool maximal = true;
        for (std::size_t v = 0; v < g.order() && maximal; ++v) {
            if (std::binary_search(current.begin(), current.end(), static_cast<Vertex>(v))) continue;
            bool joins = true;
            for (Vertex c : current) joins = joins && g.adjacent(c, v);
            if (joins) maximal = false;
        }
        if (!maximal_only || maximal) out.push_back(current);
        for (std::size_t v = from; v < g.order(); ++v) {
            bool joins = true;
            for (Vertex c : current) joins = joins && g.adjacent(c, v);
            if (!joins) continue;
            current.push_back(static_cast<Vertex>(v));
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> all_independent_sets(const Graph& g, bool maximal_only = false, std::size_t limit = 1u << 20) {
    return all_cliques(g.complement(), maximal_only, limit);
}

// CL-IS over every clique and every independent set of Γ.
inline CLISInstance full_instance(const Graph& gamma, bool maximal_only = false) {
    CLISInstance inst;
    inst.gamma = gamma;
    inst.cliques = all_cliques(gamma, maximal_only);
    inst.independents = all_independent_sets(gamma, maximal_only);
    inst.matrix = intersection_matrix(inst.cliques, inst.independents);
    return inst;
}

// Exact C^0(M') >= χ(G), with the diagonal-covering rectangles of the optimal
// zero-cover mapped to independent sets covering V(G).
inline Certificate chi_lower_bound_check(const Graph& g, const BicliqueSystem& partition, std::size_t max_order = 8) {
    if (g.order() > max_order)
        throw ResourceLimit("chi_lower_bound_check: order " + std::to_string(g.order()) + " exceeds limit " +
                            std::to_string(max_order));
    if (partition.host_order != g.order()) throw InvalidInput("chi_lower_bound_check: host order mismatch");
    if (partition.multiplicity_bound != 1 || !verify_biclique_system(g, partition).pass)
        throw InvalidInput("chi_lower_bound_check: not a biclique partition of G");

    const CLISInstance inst = canonical_instance(partition);
    const RectangleCoverResult zero_cover = min_rectangle_cover(inst.matrix, 0);
    const ChromaticResult chi = chromatic_number(g);

    Certificate cert;
    cert.claim = "chi_lower_bound";
    cert.param("order", g.order()).param("partition_size", partition.size());

    std::size_t diagonal_rects = 0;
    bool independent = true;
    Bitset covered(g.order());
    for (const auto& r : zero_cover.witness) {
        VertexSet cls;
        std::set_intersection(r.rows.begin(), r.rows.end(), r.cols.begin(), r.cols.end(), std::back_inserter(cls));
        if (cls.empty()) continue;
        ++diagonal_rects;
        independent = independent && g.is_independent(cls);
        for (auto v : cls) covered.set(v);
    }
    const bool covers_all = covered.count() == g.order();

    cert.note("gamma_order", inst.gamma.order());
    cert.note("C0", zero_cover.value);
    cert.note("N0", ceil_log2(zero_cover.value));
    cert.note("chi", chi.upper);
    cert.note("diagonal_rectangles", diagonal_rects);
    cert.note("classes_independent", std::string(independent ? "yes" : "no"));
    cert.note("classes_cover_vertices", std::string(covers_all ? "yes" : "no"));
    cert.pass = zero_cover.value >= chi.upper && diagonal_rects >= chi.upper && independent && covers_all;
    return cert;
}

enum class Speaker { alice, bob };

struct Message {
    Speaker speaker;
    std::string bits; // "0" for pass, "1" + fixed-width vertex name otherwise

    friend bool operator==(const Message&, const Message&) = default;
};

struct Transcript {
    std::vector<Message> rounds;
    std::size_t answer = 0;
    std::size_t total_bits = 0;
};

// Deterministic protocol on the live vertex set V' (initially all of Γ):
//  - Alice names the first v ∈ C ∩ V' with 2 deg_V'(v) <= |V'| and V' becomes
//    N(v) ∩ V'; otherwise she passes.
//  - Bob names the first u ∈ I ∩ V' with 2 deg_V'(u) >= |V'| and V' becomes
//    V' \ N[u]; otherwise he passes.
//  - A named vertex lying in the receiver's set ends the run with answer 1: the
//    receiver echoes it. Two passes in a row, or V' = ∅, end it with answer 0.
// Each message costs 1 flag bit plus ceil(log2 m) bits per vertex name.
inline Transcript yannakakis_protocol(const CLISInstance& inst, std::size_t clique, std::size_t independent) {
    if (clique >= inst.cliques.size() || independent >= inst.independents.size())
        throw InvalidInput("yannakakis_protocol: invalid clique or independent-set index");
    const Graph& g = inst.gamma;
    const std::size_t m = g.order();
    const std::size_t width = ceil_log2(m);

    Bitset sets[2] = {Bitset(m), Bitset(m)};
    for (Vertex v : inst.cliques[clique]) sets[0].set(v);
    for (Vertex v : inst.independents[independent]) sets[1].set(v);

    Transcript tr;
    auto send = [&](Speaker who, const std::size_t* vertex) {
        Message msg{who, vertex ? "1" : "0"};
        if (vertex)
            for (std::size_t b = width; b-- > 0;) msg.bits.push_back(((*vertex >> b) & 1u) ? '1' : '0');
        tr.total_bits += msg.bits.size();
        tr.rounds.push_back(std::move(msg));
    };

    Bitset live(m);
    for (std::size_t v = 0; v < m; ++v) live.set(v);
    Speaker who = Speaker::alice;
    std::size_t passes = 0;
    while (!live.none()) {
        const std::size_t s = live.count();
        const Bitset& mine = sets[who == Speaker::alice ? 0 : 1];
        const Bitset& theirs = sets[who == Speaker::alice ? 1 : 0];
        std::size_t pick = m;
        for (auto v : live.indices()) {
            if (!mine.test(v)) continue;
            Bitset nb(m);
            std::copy(g.row(v).begin(), g.row(v).end(), nb.words().begin());
            nb &= live;
            const std::size_t twice_deg = 2 * nb.count();
            if (who == Speaker::alice ? twice_deg <= s : twice_deg >= s) {
                pick = v;
                break;
            }
        }
        const Speaker next = who == Speaker::alice ? Speaker::bob : Speaker::alice;
        if (pick == m) {
            send(who, nullptr);
            if (++passes == 2) break;
            who = next;
            continue;
        }
        passes = 0;
        send(who, &pick);
        if (theirs.test(pick)) {
            send(next, &pick);
            tr.answer = 1;
            return tr;
        }
        Bitset nb(m);
        std::copy(g.row(pick).begin(), g.row(pick).end(), nb.words().begin());
        if (who == Speaker::alice) {
            live &= nb;
        } else {
            live.subtract(nb);
            live.reset(pick);
        }
        who = next;
    }
    tr.answer = 0;
    return tr;
}

// (2 + 2 ceil(log2 m)) (floor(log2 m) + 1)
inline std::size_t protocol_bit_budget(std::size_t m) {
    const std::size_t floor_log = m ? static_cast<std::size_t>(std::bit_width(m)) - 1 : 0;
    return (2 + 2 * ceil_log2(m)) * (floor_log + 1);
}

struct HConstruction {
    Graph h;
    std::vector<std::pair<VertexSet, VertexSet>> pairs; // vertex i of H is pairs[i] = (C, I)
    BicliqueSystem system;                               // bound 2, at most |V(Γ)| parts
    Certificate certificate;
};

inline constexpr std::size_t kDefaultPairLimit = 5000;

// H on the disjoint (clique, independent set) pairs of Γ, lexicographic in
// (C, I); (C, I) ~ (C', I') iff C ∩ I' ≠ ∅ or C' ∩ I ≠ ∅.
inline HConstruction build_H(const Graph& gamma, std::size_t pair_limit = kDefaultPairLimit, bool maximal_only = false) {
    if (gamma.order() > 64) throw ResourceLimit("build_H: Γ is limited to 64 vertices");
    const auto cliques = all_cliques(gamma, maximal_only);
    const auto indeps = all_independent_sets(gamma, maximal_only);
    auto mask_of = [](const VertexSet& s) {
        std::uint64_t m = 0;
        for (Vertex v : s) m |= std::uint64_t{1} << v;
        return m;
    };

    HConstruction out;
    std::vector<std::uint64_t> cmask, imask;
    for (const auto& c : cliques)
        for (const auto& i : indeps) {
            if (mask_of(c) & mask_of(i)) continue;
            if (out.pairs.size() >= pair_limit)
                throw ResourceLimit("build_H: more than " + std::to_string(pair_limit) + " (clique, independent set) pairs");
            out.pairs.emplace_back(c, i);
            cmask.push_back(mask_of(c));
            imask.push_back(mask_of(i));
        }

    const std::size_t order = out.pairs.size();
    out.h = Graph(order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = a + 1; b < order; ++b)
            if ((cmask[a] & imask[b]) || (cmask[b] & imask[a])) out.h.add_edge(a, b);

    Certificate& cert = out.certificate;
    cert.claim = "reverse_construction";
    cert.param("gamma_order", gamma.order()).param("H_order", order);

    out.system = BicliqueSystem{order, {}, 2};
    bool disjoint = true, complete = true;
    for (std::size_t v = 0; v < gamma.order(); ++v) {
        VertexSet left, right;
        for (std::size_t a = 0; a < order; ++a) {
            if ((cmask[a] >> v) & 1u) left.push_back(static_cast<Vertex>(a));
            if ((imask[a] >> v) & 1u) right.push_back(static_cast<Vertex>(a));
        }
        if (intersection_size(left, right) != 0) {
            disjoint = false;
            continue;
        }
        for (Vertex x : left)
            for (Vertex y : right) complete = complete && out.h.adjacent(x, y);
        if (!left.empty() && !right.empty()) out.system.parts.emplace_back(std::move(left), std::move(right));
    }
    const Certificate cover = verify_biclique_system(out.h, out.system);

    cert.note("parts", out.system.size());
    cert.note("sides_disjoint", std::string(disjoint ? "yes" : "no"));
    cert.note("sides_complete", std::string(complete ? "yes" : "no"));
    cert.note("cover_t2", std::string(cover.pass ? "pass" : "fail"));
    if (const auto* mm = cover.find_witness("max_multiplicity")) cert.note("max_multiplicity", *mm);
    if (!cover.pass)
        for (const auto& w : cover.witness) cert.note("cover_" + w.first, w.second);
    cert.pass = disjoint && complete && cover.pass && out.system.size() <= gamma.order();
    return out;
}

// Exact C^0(M) <= χ(H), with each colour class of the optimal colouring checked
// to index an all-zero submatrix of M.
inline Certificate reverse_reduction_check(const Graph& gamma, std::size_t pair_limit = kDefaultPairLimit,
                                           std::size_t chi_max_order = 128) {
    const HConstruction hc = build_H(gamma, pair_limit);
    const CLISInstance inst = full_instance(gamma);
    const RectangleCoverResult zero_cover = min_rectangle_cover(inst.matrix, 0);
    const ChromaticResult chi = chromatic_number(hc.h, {chi_max_order});

    bool classes_zero = true;
    for (std::size_t colour = 0; colour < chi.upper; ++colour)
        for (std::size_t a = 0; a < hc.pairs.size(); ++a) {
            if (chi.coloring[a] != colour) continue;
            for (std::size_t b = 0; b < hc.pairs.size(); ++b)
                if (chi.coloring[b] == colour && intersection_size(hc.pairs[a].first, hc.pairs[b].second) != 0)
                    classes_zero = false;
        }

    Certificate cert;
    cert.claim = "reverse_reduction";
    cert.param("gamma_order", gamma.order()).param("H_order", hc.h.order());
    cert.note("construction", std::string(hc.certificate.pass ? "pass" : "fail"));
    cert.note("bp2_witness_size", hc.system.size());
    cert.note("C0", zero_cover.value);
    cert.note("chi_H", chi.upper);
    cert.note("colour_classes_all_zero", std::string(classes_zero ? "yes" : "no"));
    cert.pass = hc.certificate.pass && zero_cover.value <= chi.upper && classes_zero;
    return cert;
}

} // namespace bpgap
