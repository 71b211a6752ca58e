// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bpgap/suites.hpp"

using namespace bpgap;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail = "failed: " + what;
            pass = false;
        }
    }
};

std::size_t witness_number(const Certificate& c, const std::string& key) {
    const std::string* v = c.find_witness(key);
    return v ? std::stoull(*v) : 0;
}

Outcome subcube_decomposition() {
    Outcome o;
    const auto parts = decompose_S();
    o.require(parts.size() == 30, "30 parts");
    o.require(subcube_decomposition_check().pass, "disjoint squares covering S");
    std::size_t one_star_prefix = 0, middle_free = 0, tail_free = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto free = parts[i].free_coords();
        const bool f1 = free[0] <= 4 && free[1] >= 5;
        const bool f2 = free == std::vector<std::size_t>{2, 3};
        const bool f3 = free == std::vector<std::size_t>{6, 7};
        if (i < 12) one_star_prefix += f1 ? 1 : 0;
        else if (i < 16) middle_free += f2 ? 1 : 0;
        else tail_free += f3 ? 1 : 0;
    }
    o.require(one_star_prefix == 12 && middle_free == 4 && tail_free == 14, "family sizes 12/4/14");
    o.detail = o.pass ? "30 squares (12 + 4 + 14), disjoint, union = S (120 points)" : o.detail;
    return o;
}

Outcome edge_disjointness() {
    Outcome o;
    const Graph g2 = build_G(2);
    bool regular = true;
    for (std::size_t v = 0; v < g2.order(); ++v) regular = regular && g2.degree(v) == 120;
    o.require(regular, "G(2) 120-regular");
    o.require(g2.edge_count() == 7680, "G(2) has 7680 edges");
    std::ostringstream d;
    for (std::size_t n = 2; n <= 3; ++n) {
        const Certificate c = verify_edge_disjoint_pieces(n);
        o.require(c.pass, "pieces of G(" + std::to_string(n) + ") edge-disjoint with union E(G)");
        d << "n=" << n << ": sum " << *c.find_witness("piece_edge_sum") << " = |E| " << *c.find_witness("G_edges")
          << "; ";
    }
    if (o.pass) o.detail = d.str() + "G(2) 120-regular, 7680 edges";
    return o;
}

Outcome explicit_partition() {
    Outcome o;
    std::ostringstream d;
    for (std::size_t n = 1; n <= 3; ++n) {
        const Certificate c = verify_partition_G(build_G(n), n);
        o.require(c.pass, "partition_G(" + std::to_string(n) + ") exact-once");
        const std::size_t size = partition_G(n).size();
        o.require(size <= partition_size_bound(n), "size bound for n=" + std::to_string(n));
        d << "n=" << n << ": " << size << " <= " << partition_size_bound(n) << "; ";
    }
    std::size_t exact = 0;
    for (const auto& part : decompose_S()) exact += verify_blowup_exact(2, part).pass ? 1 : 0;
    o.require(exact == 30, "index-exact blowups for n=2");
    if (o.pass) o.detail = d.str() + "30/30 blowups index-exact";
    return o;
}

Outcome independence_structure() {
    Outcome o;
    std::ostringstream d;
    for (std::size_t n = 2; n <= 3; ++n) {
        const Graph g = build_G(n);
        const IndependenceResult r = independence_number(g, {g.order()});
        o.require(g.is_independent(r.witness), "witness independent");
        o.require(r.value <= 3 * n, "alpha(G(" + std::to_string(n) + ")) <= " + std::to_string(3 * n));
        o.require(projection_dichotomy(n, r.witness).pass, "projection dichotomy");
        d << "exact alpha(G(" << n << ")) = " << r.value << " <= " << 3 * n << "; ";
    }
    if (o.pass) o.detail = d.str() + "dichotomy holds (exact search, no cutoff)";
    return o;
}

Outcome graham_pollak() {
    Outcome o;
    for (std::size_t k = 2; k <= 6; ++k) {
        const Graph g = gen::complete(k);
        const BicliqueCoverResult r = min_biclique_partition(g);
        o.require(r.value == k - 1 && star_partition(g).size() == k - 1, "bp(K_" + std::to_string(k) + ") = k-1");
        o.require(verify_biclique_system(g, r.witness).pass, "witness valid");
    }
    if (o.pass) o.detail = "bp(K_k) = k-1 = |star partition| for k = 2..6";
    return o;
}

std::string peck_transcript() {
    std::ostringstream out;
    for (const auto& c : peck_suite(50).certificates) io::write_certificate(out, c);
    return out.str();
}

Outcome peck_machinery() {
    Outcome o;
    const SuiteResult r = peck_suite(50);
    o.require(r.certificates.size() == 200, "four checks per cover");
    o.require(r.pass(), std::to_string(r.failures()) + " failing checks");
    o.require(peck_transcript() == peck_transcript(), "bit-stable rerun");
    if (o.pass) o.detail = "50 covers: identity with (-1)^(s+1), (-1)^s rejected, rank certificates, k <= bound; reruns identical";
    return o;
}

Outcome bp2_floor() {
    Outcome o;
    const std::size_t k4 = min_biclique_partition(gen::complete(4), 2).value;
    const BicliqueCoverResult k5 = min_biclique_partition(gen::complete(5), 2);
    o.require(k4 == 2, "bp_2(K_4) = 2");
    o.require(peck_bound(2, 2) == 5 && 4 <= peck_bound(2, 2), "4 <= peck_bound(2,2) = 5");
    o.require(verify_biclique_system(gen::complete(5), k5.witness).pass, "K_5 witness valid");
    o.require(5 <= peck_bound(k5.value, 2), "K_5 consistent with the bound");
    if (o.pass)
        o.detail = "bp_2(K_4) = 2, 4 <= 5; bp_2(K_5) = " + std::to_string(k5.value) + ", 5 <= peck_bound(" +
                   std::to_string(k5.value) + ",2) = " + std::to_string(peck_bound(k5.value, 2));
    return o;
}

Outcome or_products() {
    Outcome o;
    const auto small = gen::graphs_up_to(5);
    std::vector<std::size_t> alpha;
    for (const auto& g : small) alpha.push_back(independence_number(g).value);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j, ++pairs)
            o.require(independence_number(or_product(small[i], small[j])).value <= alpha[i] * alpha[j], "exhaustive pair");
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 100; ++i, ++pairs) {
        const Graph g = gen::random_graph(order(rng), density(rng), rng);
        const Graph h = gen::random_graph(order(rng), density(rng), rng);
        o.require(independence_number(or_product(g, h)).value <= independence_number(g).value * independence_number(h).value,
                  "random pair");
    }
    const PowerCover pc = cover_G_power(2, 2);
    const Certificate c = verify_biclique_system(pc.graph, pc.cover);
    o.require(c.pass, "G^2 2-cover valid");
    o.require(witness_number(c, "max_multiplicity") == 2, "max multiplicity exactly 2");
    if (o.pass)
        o.detail = std::to_string(pairs) + " pairs; G(2)^2 on " + std::to_string(pc.graph.order()) + " vertices, " +
                   std::to_string(pc.cover.size()) + " bicliques, max multiplicity 2";
    return o;
}

Outcome forward_reduction() {
    Outcome o;
    std::size_t graphs = 0;
    for (const auto& g : gen::graphs_up_to(6)) {
        ++graphs;
        o.require(forward_reduction_check(g).pass, "graph #" + std::to_string(graphs));
    }
    if (o.pass) o.detail = std::to_string(graphs) + " graphs on <= 6 vertices: C0(M') >= chi(G), classes valid";
    return o;
}

Outcome protocol() {
    Outcome o;
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_int_distribution<std::size_t> order(1, 12);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::size_t runs = 0, worst = 0;
    for (int i = 0; i < 50; ++i) {
        const Certificate c = protocol_check(gen::random_graph(order(rng), density(rng), rng));
        o.require(c.pass, "graph " + std::to_string(i));
        runs += witness_number(c, "runs");
        worst = std::max(worst, witness_number(c, "max_bits"));
    }
    if (o.pass)
        o.detail = std::to_string(runs) + " runs on 50 graphs, all answers correct, max " + std::to_string(worst) +
                   " bits, all within budget";
    return o;
}

Outcome reverse_reduction() {
    Outcome o;
    std::size_t built = 0, compared = 0;
    for (const auto& gamma : gen::graphs_up_to(5)) {
        const HConstruction hc = build_H(gamma);
        o.require(hc.certificate.pass && hc.system.size() <= gamma.order(), "build_H on a graph of order " + std::to_string(gamma.order()));
        ++built;
        if (gamma.order() <= 4) {
            o.require(reverse_reduction_check(gamma).pass, "C0(M) <= chi(H)");
            ++compared;
        }
    }
    if (o.pass)
        o.detail = std::to_string(built) + " graphs: 2-covers valid; " + std::to_string(compared) + " graphs: C0(M) <= chi(H)";
    return o;
}

Outcome end_to_end() {
    Outcome o;
    const DemoReport d2 = demo(2), d3 = demo(3);
    o.require(d2.pass() && d3.pass(), "demo verdicts");
    o.require(d2.vertices == 128 && d2.edges == 7680 && d2.piece_edge_sum == 7680, "demo(2) graph numbers");
    o.require(d2.alpha <= 6 && d2.partition_size <= 930, "demo(2) alpha and partition");
    o.require(d3.vertices == 2187 && d3.piece_edge_sum == d3.edges && d3.alpha <= 9 && d3.partition_size <= 7260,
              "demo(3) numbers");
    o.require(d2.text == demo(2).text && d3.text == demo(3).text, "byte-identical reruns");
    if (o.pass)
        o.detail = "n=2: alpha " + std::to_string(d2.alpha) + ", chi >= " + std::to_string(d2.chi_lower_bound) +
                   ", partition " + std::to_string(d2.partition_size) + "; n=3: alpha " + std::to_string(d3.alpha) +
                   ", chi >= " + std::to_string(d3.chi_lower_bound) + ", partition " + std::to_string(d3.partition_size);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"subcube decomposition", subcube_decomposition},
        {"edge-disjoint pieces", edge_disjointness},
        {"explicit partition", explicit_partition},
        {"independence structure", independence_structure},
        {"Graham-Pollak floor", graham_pollak},
        {"cover identity and rank", peck_machinery},
        {"bp_2 floor", bp2_floor},
        {"OR products", or_products},
        {"forward reduction", forward_reduction},
        {"protocol", protocol},
        {"reverse reduction", reverse_reduction},
        {"end to end", end_to_end},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                    o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
