#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "bpgap/counterexample.hpp"
#include "bpgap/oracles.hpp"

using namespace bpgap;

namespace {

bool in_S_oracle(unsigned code) {
    const unsigned head = code >> 3, tail = code & 7u;
    if (head == 0xF && tail != 0 && tail != 7) return false;
    return code != 0 && code != 7;
}

std::vector<unsigned> digits(std::size_t index, std::size_t n, std::size_t d) {
    std::vector<unsigned> x(d);
    for (std::size_t i = d; i-- > 0; index /= n) x[i] = static_cast<unsigned>(index % n);
    return x;
}

unsigned rho_code(const std::vector<unsigned>& x, const std::vector<unsigned>& y) {
    unsigned c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) c = (c << 1) | (x[i] != y[i] ? 1u : 0u);
    return c;
}

// G(n) straight from the definition.
Graph brute_G(std::size_t n) {
    std::size_t order = 1;
    for (int i = 0; i < 7; ++i) order *= n;
    Graph g(order);
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = u + 1; v < order; ++v)
            if (in_S_oracle(rho_code(digits(u, n, 7), digits(v, n, 7)))) g.add_edge(u, v);
    return g;
}

} // namespace

TEST(Project, Examples) {
    const GridPoint x({3, 1, 4, 1, 5, 9, 2});
    EXPECT_EQ(project(x, {1, 2, 3, 4}), GridPoint({3, 1, 4, 1}));
    EXPECT_EQ(project(x, {5, 6, 7}), GridPoint({5, 9, 2}));
    EXPECT_EQ(project(x, {1, 2, 3, 4, 5, 6, 7}), x);
    EXPECT_THROW(project(x, {0}), InvalidInput);
    EXPECT_THROW(project(x, {8}), InvalidInput);
}

TEST(GridIndex, MixedRadixFirstCoordinateMostSignificant) {
    EXPECT_EQ(grid_index(GridPoint({1, 1, 2}), 3), 1u);
    EXPECT_EQ(grid_index(GridPoint({2, 1, 1}), 3), 9u);
    for (std::size_t i = 0; i < 243; ++i) EXPECT_EQ(grid_index(grid_point(i, 3, 5), 3), i);
}

TEST(BuildG, SmallCases) {
    const Graph g1 = build_G(1);
    EXPECT_EQ(g1.order(), 1u);
    EXPECT_EQ(g1.edge_count(), 0u);

    const Graph g2 = build_G(2);
    EXPECT_EQ(g2.order(), 128u);
    EXPECT_EQ(g2.edge_count(), 7680u);
    for (std::size_t v = 0; v < 128; ++v) EXPECT_EQ(g2.degree(v), 120u);
    EXPECT_TRUE(g2.adjacent(0, 127));
    EXPECT_EQ(g2, brute_G(2));
}

TEST(BuildG, ThreeMatchesDefinition) {
    const Graph g3 = build_G(3);
    EXPECT_EQ(g3.order(), 2187u);
    EXPECT_EQ(g3, brute_G(3));
    EXPECT_EQ(g3.complement().degree(0), 296u);
}

TEST(BuildG, VertexLimit) {
    try {
        build_G(4);
        FAIL() << "expected a resource limit";
    } catch (const ResourceLimit& e) {
        EXPECT_NE(std::string(e.what()).find("10000"), std::string::npos);
    }
    EXPECT_NO_THROW(build_G(2, 128));
    EXPECT_THROW(build_G(2, 127), ResourceLimit);
    EXPECT_THROW(build_G(0), InvalidInput);
}

TEST(BuildGi, PiecesOfG2) {
    const Graph g = build_G(2);
    std::size_t total = 0;
    for (const auto& part : decompose_S()) {
        const Graph gi = build_G_i(2, part);
        EXPECT_EQ(gi.edge_count(), 256u);
        for (const auto& [u, v] : gi.edges()) EXPECT_TRUE(g.adjacent(u, v));
        total += gi.edge_count();
        EXPECT_EQ(build_G_i(1, part).edge_count(), 0u);
    }
    EXPECT_EQ(total, g.edge_count());
}

TEST(BuildGi, EdgeDisjointUnion) {
    for (std::size_t n = 2; n <= 3; ++n) {
        const Certificate c = verify_edge_disjoint_pieces(n);
        EXPECT_TRUE(c.pass) << n;
        EXPECT_EQ(*c.find_witness("overlapping_pairs"), "0");
    }
}

TEST(ReducedGraph, PerfectMatchingForN2) {
    for (const auto& part : decompose_S()) {
        const ReducedGraph r = reduced_graph(2, part);
        EXPECT_EQ(r.graph.order(), 32u);
        EXPECT_EQ(r.copies, 4u);
        for (std::size_t v = 0; v < 32; ++v) EXPECT_EQ(r.graph.degree(v), 1u);
    }
    const ReducedGraph one = reduced_graph(1, decompose_S()[0]);
    EXPECT_EQ(one.graph.order(), 1u);
    EXPECT_EQ(one.graph.edge_count(), 0u);
    EXPECT_THROW(reduced_graph(2, Subcube::pattern("1*0*00*")), InvalidInput);
}

TEST(ReducedGraph, BlowupIsIndexExact) {
    for (const auto& part : decompose_S()) {
        EXPECT_TRUE(verify_blowup_exact(2, part).pass) << part.pattern_str();
        const ReducedGraph r = reduced_graph(2, part);
        const Graph lifted = blowup(r.graph, r.copies);
        const Graph gi = build_G_i(2, part);
        for (std::size_t a = 0; a < lifted.order(); a += 7)
            for (std::size_t b = 0; b < lifted.order(); ++b)
                EXPECT_EQ(lifted.adjacent(a, b), gi.adjacent(r.to_full[a], r.to_full[b]));
    }
}

TEST(PartitionG, ValidForNUpTo3) {
    EXPECT_EQ(partition_G(1).size(), 0u);
    for (std::size_t n = 1; n <= 3; ++n) {
        const Graph g = build_G(n);
        const BicliqueSystem p = partition_G(n);
        EXPECT_LE(p.size(), partition_size_bound(n));
        EXPECT_TRUE(verify_biclique_system(g, p).pass) << n;
        EXPECT_TRUE(verify_partition_G(g, n).pass) << n;
    }
    EXPECT_EQ(partition_size_bound(2), 930u);
    EXPECT_EQ(partition_size_bound(3), 7260u);
}

TEST(CoverPower, SingleFactorIsThePartition) {
    const PowerCover pc = cover_G_power(2, 1);
    EXPECT_EQ(pc.graph, build_G(2));
    EXPECT_EQ(pc.cover.parts, partition_G(2).parts);
    EXPECT_EQ(pc.cover.multiplicity_bound, 1u);
}

TEST(CoverPower, SquareOfG2) {
    const PowerCover pc = cover_G_power(2, 2);
    EXPECT_EQ(pc.graph.order(), 16384u);
    EXPECT_EQ(pc.cover.size(), 2 * pc.base_partition_size);
    const Certificate c = verify_biclique_system(pc.graph, pc.cover);
    EXPECT_TRUE(c.pass);
    EXPECT_EQ(*c.find_witness("max_multiplicity"), "2");
    // (0, 0) ~ (127, 127) through both factors.
    EXPECT_EQ(detail::exact_multiplicity(pc.cover.parts, 0, 127 * 128 + 127), 2u);
    EXPECT_THROW(cover_G_power(2, 3), ResourceLimit);
}

TEST(Independence, BoundsAndDichotomy) {
    for (std::size_t n = 2; n <= 3; ++n) {
        const Graph g = build_G(n);
        const IndependenceResult r = independence_number(g, {10000});
        EXPECT_TRUE(g.is_independent(r.witness));
        EXPECT_LE(r.value, 3 * n);
        EXPECT_TRUE(projection_dichotomy(n, r.witness).pass);
    }
    EXPECT_EQ(independence_number(build_G(2), {10000}).value, 4u);
    EXPECT_EQ(independence_number(build_G(3), {10000}).value, 9u);
}

TEST(Independence, DichotomyRejectsBadSets) {
    // Two points sharing the head but with tails agreeing somewhere.
    const VertexSet bad{static_cast<Vertex>(grid_index(GridPoint({1, 1, 1, 1, 1, 1, 1}), 2)),
                        static_cast<Vertex>(grid_index(GridPoint({1, 1, 1, 1, 2, 1, 1}), 2))};
    EXPECT_FALSE(projection_dichotomy(2, bad).pass);
}
