#include <gtest/gtest.h>

#include <random>

#include "bpgap/clis.hpp"
#include "bpgap/generators.hpp"

using namespace bpgap;

namespace {

std::vector<VertexSet> brute_families(const Graph& g, bool cliques) {
    std::vector<VertexSet> out;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
        VertexSet set;
        for (Vertex v = 0; v < g.order(); ++v)
            if ((s >> v) & 1u) set.push_back(v);
        if (cliques ? g.is_clique(set) : g.is_independent(set)) out.push_back(set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const BicliqueSystem kK3Stars{3, {Biclique({0}, {1, 2}), Biclique({1}, {2})}, 1};

} // namespace

TEST(CharacteristicVectors, StarsOfK3) {
    const auto v = characteristic_vectors(kK3Stars);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].entries, "011");
    EXPECT_EQ(v[1].entries, "*01");
    EXPECT_THROW(characteristic_vectors(BicliqueSystem{3, {Biclique({0}, {1}), Biclique({0}, {1, 2})}, 1}), InvalidInput);
    EXPECT_THROW(characteristic_vectors(BicliqueSystem{3, {}, 2}), InvalidInput);
}

TEST(Gamma, StarsOfK3) {
    const Graph gamma = gamma_from_partition(kK3Stars);
    EXPECT_EQ(gamma, gen::complete(2));
}

TEST(Gamma, OverlapRaisesViolation) {
    const BicliqueSystem bad{3, {Biclique({0}, {1}), Biclique({0}, {1, 2})}, 1};
    try {
        gamma_from_partition(bad);
        FAIL() << "expected a violation";
    } catch (const WellDefinednessViolation& e) {
        EXPECT_EQ(e.first_part(), 0u);
        EXPECT_EQ(e.second_part(), 1u);
        EXPECT_EQ(e.shared_one(), 1u);
        EXPECT_EQ(e.shared_zero(), 0u);
    }
}

TEST(Gamma, AmbiguousPairsFollowTheFlag) {
    const BicliqueSystem path = star_partition(gen::path(3));
    EXPECT_EQ(gamma_from_partition(path).edge_count(), 0u);
    EXPECT_EQ(gamma_from_partition(path, GammaOptions{true}).edge_count(), 1u);
}

TEST(CanonicalInstance, StarsOfK3) {
    const CLISInstance inst = canonical_instance(kK3Stars);
    EXPECT_EQ(inst.cliques, (std::vector<VertexSet>{{}, {0}, {0, 1}}));
    EXPECT_EQ(inst.independents, (std::vector<VertexSet>{{0}, {1}, {}}));
    BoolMatrix expected(3, 3);
    expected.set(1, 0, 1);
    expected.set(2, 0, 1);
    expected.set(2, 1, 1);
    EXPECT_EQ(inst.matrix, expected);
    EXPECT_TRUE(check_instance(inst).pass);
}

TEST(CanonicalInstance, InvariantsOnAllSmallGraphs) {
    for (const auto& g : gen::graphs_up_to(6)) {
        const CLISInstance inst = canonical_instance(star_partition(g));
        EXPECT_TRUE(check_instance(inst).pass);
        for (std::size_t j = 0; j < g.order(); ++j) EXPECT_EQ(inst.matrix.at(j, j), 0);
        for (std::size_t p = 0; p < g.order(); ++p)
            for (std::size_t q = p + 1; q < g.order(); ++q)
                EXPECT_EQ(inst.matrix.at(q, p) + inst.matrix.at(p, q), g.adjacent(p, q) ? 1 : 0);
    }
}

TEST(CheckInstance, DetectsBadFamilies) {
    CLISInstance inst = full_instance(gen::path(3));
    EXPECT_TRUE(check_instance(inst).pass);
    inst.cliques.push_back({0, 2});
    inst.matrix = BoolMatrix(inst.cliques.size(), inst.independents.size());
    EXPECT_FALSE(check_instance(inst).pass);
}

TEST(Families, MatchEnumeration) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = gen::random_graph(trial % 9, 0.5, rng);
        EXPECT_EQ(all_cliques(g), brute_families(g, true));
        EXPECT_EQ(all_independent_sets(g), brute_families(g, false));
        for (const auto& c : all_cliques(g, true)) {
            for (Vertex v = 0; v < g.order(); ++v) {
                if (std::binary_search(c.begin(), c.end(), v)) continue;
                VertexSet bigger = c;
                bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
                EXPECT_FALSE(g.is_clique(bigger));
            }
        }
    }
    EXPECT_EQ(all_cliques(Graph(0)), (std::vector<VertexSet>{{}}));
}

TEST(ChiLowerBound, Examples) {
    const Certificate k3 = chi_lower_bound_check(gen::complete(3), kK3Stars);
    EXPECT_TRUE(k3.pass);
    EXPECT_EQ(*k3.find_witness("C0"), "3");
    EXPECT_EQ(*k3.find_witness("chi"), "3");

    const Certificate empty = chi_lower_bound_check(gen::edgeless(3), BicliqueSystem{3, {}, 1});
    EXPECT_TRUE(empty.pass);
    EXPECT_EQ(*empty.find_witness("C0"), "1");
    EXPECT_EQ(*empty.find_witness("chi"), "1");

    EXPECT_THROW(chi_lower_bound_check(gen::complete(9), star_partition(gen::complete(9))), ResourceLimit);
    EXPECT_THROW(chi_lower_bound_check(gen::complete(3), BicliqueSystem{3, {Biclique({0}, {1, 2})}, 1}), InvalidInput);
}

TEST(Protocol, HandTrace) {
    CLISInstance inst;
    inst.gamma = gen::complete(2);
    inst.cliques = {{0, 1}};
    inst.independents = {{1}};
    inst.matrix = intersection_matrix(inst.cliques, inst.independents);
    const Transcript tr = yannakakis_protocol(inst, 0, 0);
    EXPECT_EQ(tr.answer, 1u);
    ASSERT_EQ(tr.rounds.size(), 4u);
    EXPECT_EQ(tr.rounds[0], (Message{Speaker::alice, "10"}));
    EXPECT_EQ(tr.rounds[1], (Message{Speaker::bob, "0"}));
    EXPECT_EQ(tr.rounds[2], (Message{Speaker::alice, "11"}));
    EXPECT_EQ(tr.rounds[3], (Message{Speaker::bob, "11"}));
    EXPECT_EQ(tr.total_bits, 7u);
    EXPECT_LE(tr.total_bits, protocol_bit_budget(2));
}

TEST(Protocol, CorrectAndWithinBudgetOnRandomGraphs) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = gen::random_graph(1 + trial % 10, 0.2 + 0.6 * (trial % 3) / 2.0, rng);
        const CLISInstance inst = full_instance(g);
        for (std::size_t p = 0; p < inst.cliques.size(); ++p)
            for (std::size_t q = 0; q < inst.independents.size(); ++q) {
                const Transcript tr = yannakakis_protocol(inst, p, q);
                EXPECT_EQ(tr.answer, intersection_size(inst.cliques[p], inst.independents[q]));
                EXPECT_LE(tr.total_bits, protocol_bit_budget(g.order()));
                std::size_t bits = 0;
                for (const auto& m : tr.rounds) bits += m.bits.size();
                EXPECT_EQ(bits, tr.total_bits);
            }
    }
}

TEST(Protocol, BitBudgetFormula) {
    EXPECT_EQ(protocol_bit_budget(1), 2u);
    EXPECT_EQ(protocol_bit_budget(2), 8u);
    EXPECT_EQ(protocol_bit_budget(12), 40u);
    EXPECT_THROW(yannakakis_protocol(full_instance(gen::complete(2)), 9, 0), InvalidInput);
}

TEST(BuildH, SmallCases) {
    const HConstruction one = build_H(gen::complete(1));
    EXPECT_EQ(one.h.order(), 3u);
    EXPECT_EQ(one.h.edge_count(), 1u);
    EXPECT_EQ(one.system.size(), 1u);
    EXPECT_TRUE(one.certificate.pass);

    const HConstruction k4 = build_H(gen::complete(4));
    EXPECT_EQ(k4.h.order(), 48u);
    EXPECT_TRUE(k4.certificate.pass);

    EXPECT_EQ(build_H(gen::cycle(5)).h.order(), 76u);
    EXPECT_THROW(build_H(gen::complete(4), 47), ResourceLimit);
}

TEST(BuildH, VertexOrderIsLexicographic) {
    const HConstruction hc = build_H(gen::path(3));
    for (std::size_t i = 1; i < hc.pairs.size(); ++i) EXPECT_LT(hc.pairs[i - 1], hc.pairs[i]);
    for (const auto& [c, i] : hc.pairs) EXPECT_EQ(intersection_size(c, i), 0u);
}

TEST(BuildH, ValidOnAllGraphsUpTo5) {
    for (const auto& gamma : gen::graphs_up_to(5)) {
        const HConstruction hc = build_H(gamma);
        EXPECT_TRUE(hc.certificate.pass);
        EXPECT_LE(hc.system.size(), gamma.order());
        EXPECT_TRUE(verify_biclique_system(hc.h, hc.system).pass);
    }
}

TEST(ReverseReduction, GraphsUpTo3) {
    for (const auto& gamma : gen::graphs_up_to(3)) EXPECT_TRUE(reverse_reduction_check(gamma).pass);
}

TEST(CharacteristicVectors, TrivialCases) {
    const auto edge = characteristic_vectors(BicliqueSystem{2, {Biclique({0}, {1})}, 1});
    ASSERT_EQ(edge.size(), 1u);
    EXPECT_EQ(edge[0].entries, "01");
    EXPECT_TRUE(characteristic_vectors(star_partition(gen::edgeless(4))).empty());
}

TEST(Gamma, TrivialCases) {
    EXPECT_EQ(gamma_from_partition(BicliqueSystem{4, {Biclique({0, 1}, {2, 3})}, 1}), gen::complete(1));
    const BicliqueSystem matching{4, {Biclique({0}, {1}), Biclique({2}, {3})}, 1};
    const auto v = characteristic_vectors(matching);
    EXPECT_EQ(v[0].entries, "01**");
    EXPECT_EQ(v[1].entries, "**01");
    EXPECT_EQ(gamma_from_partition(matching), gen::edgeless(2));
}

TEST(CanonicalInstance, EdgelessGraph) {
    const CLISInstance inst = canonical_instance(star_partition(gen::edgeless(3)));
    EXPECT_EQ(inst.gamma.order(), 0u);
    for (const auto& c : inst.cliques) EXPECT_TRUE(c.empty());
    for (const auto& i : inst.independents) EXPECT_TRUE(i.empty());
}

TEST(CanonicalInstance, OptimalPartitionsNeverViolate) {
    for (const auto& g : gen::graphs_up_to(6)) {
        const BicliqueSystem p = min_biclique_partition(g).witness;
        EXPECT_NO_THROW(gamma_from_partition(p));
        const CLISInstance inst = canonical_instance(p);
        EXPECT_TRUE(check_instance(inst).pass);
    }
}

TEST(ChiLowerBound, SingleEdge) {
    const Certificate c = chi_lower_bound_check(gen::complete(2), star_partition(gen::complete(2)));
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(*c.find_witness("chi"), "2");
}

TEST(Protocol, EdgelessSharedVertex) {
    CLISInstance inst;
    inst.gamma = gen::edgeless(5);
    inst.cliques = {{3}};
    inst.independents = {{3}};
    inst.matrix = intersection_matrix(inst.cliques, inst.independents);
    EXPECT_EQ(yannakakis_protocol(inst, 0, 0).answer, 1u);
}

TEST(Protocol, SixteenVertices) {
    std::mt19937_64 rng(15);
    const Graph g = gen::random_graph(16, 0.5, rng);
    const CLISInstance inst = full_instance(g);
    for (std::size_t p = 0; p < inst.cliques.size(); ++p)
        for (std::size_t q = 0; q < inst.independents.size(); ++q) {
            const Transcript tr = yannakakis_protocol(inst, p, q);
            ASSERT_EQ(tr.answer, inst.matrix.at(p, q));
            ASSERT_LE(tr.total_bits, protocol_bit_budget(16));
        }
}

TEST(BuildH, K2AndC5) {
    const HConstruction k2 = build_H(gen::complete(2));
    EXPECT_TRUE(k2.certificate.pass);
    EXPECT_LE(k2.system.size(), 2u);
    EXPECT_TRUE(reverse_reduction_check(gen::cycle(5)).pass);
}
