// bpgap: construct, verify and query the biclique-partition objects.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error, 3 resource limit.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bpgap/suites.hpp"

namespace {

using namespace bpgap;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kLimit = 3 };

struct RunConfig {
    std::size_t n = 2;
    std::size_t t = 1;
    bool t_given = false;
    std::string graph;
    std::string partition;
    std::string out;
    std::size_t vertex_limit = kDefaultVertexLimit;
    std::size_t pair_limit = kDefaultPairLimit;
    std::string ambiguous_edge = "nonedge";
    std::string suite;
};

void emit(const std::string& text, const RunConfig& cfg) {
    if (cfg.out.empty()) std::cout << text;
    else io::save(cfg.out, text);
}

int verdict(const Certificate& c) {
    io::write_certificate(std::cout, c);
    return c.pass ? kPass : kFail;
}

Graph load_graph(const RunConfig& cfg) {
    if (cfg.graph.empty()) throw InvalidInput("--graph is required");
    return io::load(cfg.graph, io::read_graph);
}

BicliqueSystem load_system(const RunConfig& cfg) {
    if (cfg.partition.empty()) throw InvalidInput("--partition is required");
    return io::load(cfg.partition, io::read_system);
}

int cmd_demo(const RunConfig& cfg) {
    const DemoReport rep = demo(cfg.n, cfg.vertex_limit);
    emit(rep.text, cfg);
    return rep.pass() ? kPass : kFail;
}

int cmd_suite(const RunConfig& cfg) {
    const SuiteResult r = run_suite(cfg.suite);
    std::ostringstream out;
    for (const auto& c : r.certificates) io::write_certificate(out, c);
    out << "suite " << cfg.suite << ' ' << r.certificates.size() << " checks " << r.failures() << " failures\n";
    emit(out.str(), cfg);
    return r.pass() ? kPass : kFail;
}

int cmd_build_g(const RunConfig& cfg) {
    emit(io::to_text(build_G(cfg.n, cfg.vertex_limit), io::write_graph), cfg);
    return kPass;
}

int cmd_partition(const RunConfig& cfg) {
    const BicliqueSystem sys = partition_G(cfg.n, cfg.vertex_limit);
    emit(io::to_text(sys, io::write_system), cfg);
    if (cfg.out.empty()) return kPass;
    return verdict(verify_partition_G(build_G(cfg.n, cfg.vertex_limit), cfg.n, cfg.vertex_limit));
}

int cmd_verify(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    BicliqueSystem sys = load_system(cfg);
    if (cfg.t_given) sys.multiplicity_bound = cfg.t;
    if (sys.host_order != g.order()) throw InvalidInput("system and graph have different orders");
    return verdict(verify_biclique_system(g, sys));
}

int cmd_alpha(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const IndependenceResult r = independence_number(g, {cfg.vertex_limit});
    Certificate c;
    c.claim = "independence_number";
    c.param("order", g.order());
    c.note("alpha", r.value);
    c.note("witness", format_vertex_set(r.witness));
    c.pass = g.is_independent(r.witness);
    return verdict(c);
}

int cmd_chi(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const ChromaticResult r = chromatic_number(g, {cfg.vertex_limit});
    Certificate c;
    c.claim = "chromatic_number";
    c.param("order", g.order());
    c.note("chi", r.upper);
    std::string colours;
    for (std::size_t v = 0; v < r.coloring.size(); ++v) colours += (v ? " " : "") + std::to_string(r.coloring[v] + 1);
    c.note("coloring", colours);
    c.pass = true;
    for (const auto& [u, v] : g.edges()) c.pass = c.pass && r.coloring[u] != r.coloring[v];
    return verdict(c);
}

int cmd_bp(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const BicliqueCoverResult r = min_biclique_partition(g, cfg.t);
    if (!cfg.out.empty()) io::save(cfg.out, io::to_text(r.witness, io::write_system));
    Certificate c = verify_biclique_system(g, r.witness);
    c.claim = "min_biclique_cover";
    c.note("value", r.value);
    return verdict(c);
}

int cmd_cover_power(const RunConfig& cfg) {
    const PowerCover pc = cover_G_power(cfg.n, cfg.t, std::max(cfg.vertex_limit, kDefaultPowerVertexLimit));
    if (!cfg.out.empty()) io::save(cfg.out, io::to_text(pc.cover, io::write_system));
    Certificate c = verify_biclique_system(pc.graph, pc.cover);
    c.claim = "cover_G_power";
    c.param("n", cfg.n);
    c.note("base_partition_size", pc.base_partition_size);
    return verdict(c);
}

int cmd_clis(const RunConfig& cfg) {
    const BicliqueSystem sys = load_system(cfg);
    const CLISInstance inst = canonical_instance(sys, GammaOptions{cfg.ambiguous_edge == "edge"});
    emit(io::to_text(inst, io::write_instance), cfg);
    if (cfg.graph.empty()) return kPass;
    const Graph g = load_graph(cfg);
    return verdict(chi_lower_bound_check(g, sys));
}

int cmd_build_h(const RunConfig& cfg) {
    const Graph gamma = load_graph(cfg);
    const HConstruction hc = build_H(gamma, cfg.pair_limit);
    emit(io::to_text(hc.h, io::write_graph), cfg);
    if (!cfg.partition.empty()) io::save(cfg.partition, io::to_text(hc.system, io::write_system));
    if (cfg.out.empty()) return hc.certificate.pass ? kPass : kFail;
    return verdict(hc.certificate);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biclique partitions, chromatic number and the clique vs independent set problem"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto positive = CLI::PositiveNumber;
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "grid side n")->check(positive); };
    auto add_t = [&](CLI::App* sub) {
        sub->add_option_function<std::size_t>("--t", [&](std::size_t t) { cfg.t = t; cfg.t_given = true; },
                                              "multiplicity bound t")
            ->check(positive);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "output path"); };
    auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", cfg.graph, "DIMACS graph path"); };
    auto add_limit = [&](CLI::App* sub) {
        sub->add_option("--vertex-limit", cfg.vertex_limit, "largest graph to build")->check(positive);
    };

    std::string which;
    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&which, name] { which = name; });
        return s;
    };

    auto* demo_cmd = sub("demo", "end-to-end report for G(n)");
    add_n(demo_cmd);
    add_out(demo_cmd);
    add_limit(demo_cmd);

    auto* suite_cmd = sub("suite", "run a named check suite");
    suite_cmd->add_option("--suite", cfg.suite, "cube, partition, peck or clis")->required();
    add_out(suite_cmd);

    auto* build_g_cmd = sub("build-g", "write G(n) in DIMACS format");
    add_n(build_g_cmd);
    add_out(build_g_cmd);
    add_limit(build_g_cmd);

    auto* partition_cmd = sub("partition", "write the explicit biclique partition of G(n)");
    add_n(partition_cmd);
    add_out(partition_cmd);
    add_limit(partition_cmd);

    auto* verify_cmd = sub("verify", "check a biclique system against a graph");
    add_graph(verify_cmd);
    verify_cmd->add_option("--partition", cfg.partition, "biclique system path");
    add_t(verify_cmd);

    auto* alpha_cmd = sub("alpha", "exact independence number");
    add_graph(alpha_cmd);
    add_limit(alpha_cmd);

    auto* chi_cmd = sub("chi", "exact chromatic number");
    add_graph(chi_cmd);
    add_limit(chi_cmd);

    auto* bp_cmd = sub("bp", "exact minimum t-biclique cover (small graphs)");
    add_graph(bp_cmd);
    add_t(bp_cmd);
    add_out(bp_cmd);

    auto* power_cmd = sub("cover-power", "t-cover of the OR power G(n)^t");
    add_n(power_cmd);
    add_t(power_cmd);
    add_out(power_cmd);
    add_limit(power_cmd);

    auto* clis_cmd = sub("clis", "CL-IS instance from a biclique partition");
    clis_cmd->add_option("--partition", cfg.partition, "biclique partition path");
    add_graph(clis_cmd);
    clis_cmd->add_option("--ambiguous-edge", cfg.ambiguous_edge, "resolution of ambiguous pairs")
        ->check(CLI::IsMember({"edge", "nonedge"}));
    add_out(clis_cmd);

    auto* build_h_cmd = sub("build-h", "graph H and its 2-cover from a graph Gamma");
    add_graph(build_h_cmd);
    build_h_cmd->add_option("--pair-limit", cfg.pair_limit, "largest H to build")->check(positive);
    build_h_cmd->add_option("--partition", cfg.partition, "where to write the 2-cover");
    add_out(build_h_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (which == "demo") return cmd_demo(cfg);
        if (which == "suite") return cmd_suite(cfg);
        if (which == "build-g") return cmd_build_g(cfg);
        if (which == "partition") return cmd_partition(cfg);
        if (which == "verify") return cmd_verify(cfg);
        if (which == "alpha") return cmd_alpha(cfg);
        if (which == "chi") return cmd_chi(cfg);
        if (which == "bp") return cmd_bp(cfg);
        if (which == "cover-power") return cmd_cover_power(cfg);
        if (which == "clis") return cmd_clis(cfg);
        if (which == "build-h") return cmd_build_h(cfg);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kLimit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
