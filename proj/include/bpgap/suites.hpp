#pragma once

// Composite checks, the end-to-end demo report, and the named suites driven by
// the command line tool. Everything here is deterministic: random instances come
// from fixed seeds.

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bpgap/algebra.hpp"
#include "bpgap/clis.hpp"
#include "bpgap/counterexample.hpp"
#include "bpgap/cube.hpp"
#include "bpgap/generators.hpp"
#include "bpgap/io.hpp"
#include "bpgap/oracles.hpp"

namespace bpgap {

struct SuiteResult {
    std::vector<Certificate> certificates;

    bool pass() const {
        for (const auto& c : certificates)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : certificates) f += c.pass ? 0 : 1;
        return f;
    }
};

inline constexpr std::uint64_t kSuiteSeed = 20240607;

// Counts of the three families of the decomposition of S.
inline Certificate subcube_decomposition_check() {
    const auto parts = decompose_S();
    Certificate cert = verify_subcube_partition(build_S(), parts);
    cert.claim = "decomposition_of_S";
    std::size_t two_dim = 0, disjoint_pairs = 0;
    for (const auto& p : parts) two_dim += p.free_dim() == 2 ? 1 : 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            bool meet = false;
            for (const auto& x : parts[i].members()) meet = meet || parts[j].contains(x);
            disjoint_pairs += meet ? 0 : 1;
        }
    cert.note("parts", parts.size());
    cert.note("two_dimensional", two_dim);
    cert.note("disjoint_pairs", disjoint_pairs);
    cert.note("S_size", build_S().size());
    cert.note("family_sizes", std::string("12 4 14"));
    const bool families = parts.size() == 30;
    cert.pass = cert.pass && families && two_dim == 30 && disjoint_pairs == 30 * 29 / 2 && build_S().size() == 120;
    return cert;
}

// Star partition of g, then the forward reduction: cliques, independent sets,
// zero diagonal and the exact C^0 >= χ check.
inline Certificate forward_reduction_check(const Graph& g) {
    const BicliqueSystem stars = star_partition(g);
    const CLISInstance inst = canonical_instance(stars);
    Certificate cert = chi_lower_bound_check(g, stars);
    cert.claim = "forward_reduction";
    bool zero_diag = true;
    for (std::size_t j = 0; j < inst.matrix.rows(); ++j) zero_diag = zero_diag && inst.matrix.at(j, j) == 0;
    const bool families = check_instance(inst).pass;
    cert.note("families_valid", std::string(families ? "yes" : "no"));
    cert.note("zero_diagonal", std::string(zero_diag ? "yes" : "no"));
    cert.pass = cert.pass && families && zero_diag;
    return cert;
}

// The protocol over every (clique, independent set) pair of Γ.
inline Certificate protocol_check(const Graph& gamma) {
    const CLISInstance inst = full_instance(gamma);
    const std::size_t budget = protocol_bit_budget(gamma.order());
    std::size_t runs = 0, wrong = 0, over = 0, max_bits = 0;
    Certificate cert;
    cert.claim = "protocol";
    cert.param("m", gamma.order()).param("edges", gamma.edge_count());
    for (std::size_t p = 0; p < inst.cliques.size(); ++p)
        for (std::size_t q = 0; q < inst.independents.size(); ++q) {
            const Transcript tr = yannakakis_protocol(inst, p, q);
            ++runs;
            max_bits = std::max(max_bits, tr.total_bits);
            if (tr.answer != inst.matrix.at(p, q)) {
                if (!wrong) cert.note("wrong_answer", format_vertex_set(inst.cliques[p]) + " " + format_vertex_set(inst.independents[q]));
                ++wrong;
            }
            if (tr.total_bits > budget) ++over;
        }
    cert.note("runs", runs);
    cert.note("wrong_answers", wrong);
    cert.note("max_bits", max_bits);
    cert.note("bit_budget", budget);
    cert.note("over_budget", over);
    cert.pass = wrong == 0 && over == 0;
    return cert;
}

inline SuiteResult cube_suite() {
    SuiteResult r;
    r.certificates.push_back(subcube_decomposition_check());
    return r;
}

inline SuiteResult partition_suite(std::size_t max_n = 3) {
    SuiteResult r;
    for (std::size_t n = 1; n <= max_n; ++n) r.certificates.push_back(verify_partition_G(build_G(n), n));
    for (std::size_t n = 2; n <= max_n; ++n) r.certificates.push_back(verify_edge_disjoint_pieces(n));
    if (max_n >= 2)
        for (const auto& part : decompose_S()) r.certificates.push_back(verify_blowup_exact(2, part));
    return r;
}

// Random t-covers of K_k with both sign conventions, the rank certificate and
// the counting bound. The (-1)^s convention is expected to fail.
inline SuiteResult peck_suite(std::size_t covers = 50, std::uint64_t seed = kSuiteSeed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_k(2, 8), pick_t(1, 3);
    for (std::size_t i = 0; i < covers; ++i) {
        const std::size_t k = pick_k(rng), t = pick_t(rng);
        const BicliqueSystem cover = random_t_cover(k, t, rng);
        r.certificates.push_back(verify_cover_identity(cover, SignConvention::alternating_plus));
        Certificate minus = verify_cover_identity(cover, SignConvention::alternating_minus);
        Certificate rejected;
        rejected.claim = "sign_rejected";
        rejected.parameters = minus.parameters;
        rejected.pass = !minus.pass;
        rejected.note("identity_verdict", std::string(minus.pass ? "pass" : "fail"));
        r.certificates.push_back(rejected);
        r.certificates.push_back(rank_certificate(cover));
        Certificate bound;
        bound.claim = "counting_bound";
        bound.param("k", k).param("d", cover.size()).param("t", t);
        bound.note("peck_bound", peck_bound(cover.size(), t));
        bound.pass = k <= peck_bound(cover.size(), t);
        r.certificates.push_back(bound);
    }
    return r;
}

inline SuiteResult clis_suite(std::uint64_t seed = kSuiteSeed) {
    SuiteResult r;
    for (const auto& g : gen::graphs_up_to(5)) r.certificates.push_back(forward_reduction_check(g));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_k(1, 10);
    for (int i = 0; i < 10; ++i) {
        const std::size_t k = pick_k(rng);
        r.certificates.push_back(protocol_check(gen::random_graph(k, 0.5, rng)));
    }
    for (const auto& gamma : gen::graphs_up_to(3)) r.certificates.push_back(reverse_reduction_check(gamma));
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cube", "partition", "peck", "clis"};
    return names;
}

inline SuiteResult run_suite(const std::string& name) {
    if (name == "cube") return cube_suite();
    if (name == "partition") return partition_suite();
    if (name == "peck") return peck_suite();
    if (name == "clis") return clis_suite();
    throw InvalidInput("unknown suite '" + name + "'");
}

struct DemoReport {
    std::size_t n = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t piece_edge_sum = 0;
    std::size_t alpha = 0;
    std::size_t chi_lower_bound = 0;
    std::size_t partition_size = 0;
    std::size_t partition_bound = 0;
    std::vector<Certificate> certificates;
    std::string text;

    bool pass() const {
        for (const auto& c : certificates)
            if (!c.pass) return false;
        return true;
    }
};

// The finite bookkeeping for G(n): size, edges, piece disjointness, explicit
// partition, exact α with the projection dichotomy, and the χ lower bound.
inline DemoReport demo(std::size_t n, std::size_t vertex_limit = kDefaultVertexLimit) {
    DemoReport rep;
    rep.n = n;
    const Graph g = build_G(n, vertex_limit);
    rep.vertices = g.order();
    rep.edges = g.edge_count();

    Certificate pieces = verify_edge_disjoint_pieces(n, vertex_limit);
    rep.piece_edge_sum = std::stoull(*pieces.find_witness("piece_edge_sum"));

    Certificate part = verify_partition_G(g, n, vertex_limit);
    rep.partition_size = partition_G(n, vertex_limit).size();
    rep.partition_bound = partition_size_bound(n);
    part.note("size", rep.partition_size);

    const IndependenceResult alpha = independence_number(g, {vertex_limit});
    rep.alpha = alpha.value;
    rep.chi_lower_bound = alpha.value ? (rep.vertices + alpha.value - 1) / alpha.value : 0;
    Certificate indep;
    indep.claim = "independence_number";
    indep.param("n", n);
    indep.note("alpha", alpha.value);
    indep.note("witness", format_vertex_set(alpha.witness));
    indep.note("bound_3n", 3 * n);
    indep.pass = g.is_independent(alpha.witness) && alpha.value <= 3 * n;
    Certificate dichotomy = projection_dichotomy(n, alpha.witness);

    rep.certificates = {pieces, part, indep, dichotomy};

    std::ostringstream out;
    out << "demo n " << n << '\n';
    out << "vertices " << rep.vertices << '\n';
    out << "edges " << rep.edges << '\n';
    out << "piece_edge_sum " << rep.piece_edge_sum << '\n';
    out << "partition_size " << rep.partition_size << '\n';
    out << "partition_bound " << rep.partition_bound << '\n';
    out << "alpha " << rep.alpha << '\n';
    out << "chi_lower_bound " << rep.chi_lower_bound << '\n';
    out << "ratio ";
    if (rep.partition_size == 0) {
        out << "undefined\n";
    } else {
        out << rep.chi_lower_bound << '/' << rep.partition_size << " = " << std::fixed << std::setprecision(6)
            << static_cast<double>(rep.chi_lower_bound) / static_cast<double>(rep.partition_size) << '\n';
    }
    for (const auto& c : rep.certificates) io::write_certificate(out, c);
    out << "result " << (rep.pass() ? "pass" : "fail") << '\n';
    rep.text = out.str();
    return rep;
}

} // namespace bpgap
