#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bpgap/generators.hpp"
#include "bpgap/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(BPGAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("bpgap_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }

    fs::path dir;
};

} // namespace

TEST_F(Cli, DemoSmall) {
    const CliRun one = run("demo --n 1");
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("vertices 1\n"), std::string::npos);
    const CliRun two = run("demo --n 2");
    EXPECT_EQ(two.code, 0);
    EXPECT_NE(two.out.find("edges 7680\n"), std::string::npos);
    EXPECT_EQ(run("demo --n 2").out, two.out);
}

TEST_F(Cli, DemoOutFile) {
    EXPECT_EQ(run("demo --n 2 --out " + path("r.txt")).code, 0);
    EXPECT_NE(slurp(path("r.txt")).find("result pass"), std::string::npos);
}

TEST_F(Cli, Suites) {
    EXPECT_EQ(run("suite --suite cube").code, 0);
    EXPECT_EQ(run("suite --suite peck").code, 0);
    EXPECT_EQ(run("suite --suite bogus").code, 2);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("demo --n 0").code, 2);
    EXPECT_EQ(run("clis --partition x --ambiguous-edge maybe").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ResourceLimit) {
    EXPECT_EQ(run("build-g --n 4").code, 3);
    EXPECT_EQ(run("demo --n 2 --vertex-limit 100").code, 3);
}

TEST_F(Cli, BuildVerifyRoundTrip) {
    ASSERT_EQ(run("build-g --n 2 --out " + path("g.txt")).code, 0);
    ASSERT_EQ(run("partition --n 2 --out " + path("p.txt")).code, 0);
    const CliRun ok = run("verify --graph " + path("g.txt") + " --partition " + path("p.txt"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("verdict pass"), std::string::npos);

    write("k3.txt", bpgap::io::to_text(bpgap::gen::complete(3), bpgap::io::write_graph));
    write("bad.txt", "p bicliques 3 1 1\nb 1 : 2 3\n");
    const CliRun bad = run("verify --graph " + path("k3.txt") + " --partition " + path("bad.txt"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("witness pair 2 3"), std::string::npos);
}

TEST_F(Cli, ParseErrorExitCode) {
    write("trunc.txt", "p edge 4 3\ne 1 2\n");
    EXPECT_EQ(run("alpha --graph " + path("trunc.txt")).code, 2);
    EXPECT_EQ(run("alpha --graph " + path("missing.txt")).code, 2);
}

TEST_F(Cli, Oracles) {
    write("c5.txt", bpgap::io::to_text(bpgap::gen::cycle(5), bpgap::io::write_graph));
    const CliRun a = run("alpha --graph " + path("c5.txt"));
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("witness alpha 2"), std::string::npos);
    const CliRun c = run("chi --graph " + path("c5.txt"));
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("witness chi 3"), std::string::npos);
    write("k4.txt", bpgap::io::to_text(bpgap::gen::complete(4), bpgap::io::write_graph));
    const CliRun b = run("bp --graph " + path("k4.txt") + " --t 2");
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("witness value 2"), std::string::npos);
}

TEST_F(Cli, ClisAndBuildH) {
    write("k3.txt", bpgap::io::to_text(bpgap::gen::complete(3), bpgap::io::write_graph));
    write("stars.txt", "p bicliques 3 1 2\nb 1 : 2 3\nb 2 : 3\n");
    const CliRun inst = run("clis --partition " + path("stars.txt") + " --graph " + path("k3.txt") + " --out " + path("i.txt"));
    EXPECT_EQ(inst.code, 0);
    EXPECT_NE(inst.out.find("witness C0 3"), std::string::npos);
    EXPECT_EQ(slurp(path("i.txt")), "p clis 2 1 3 3\ne 1 2\nclique\nclique 1\nclique 1 2\nindep 1\nindep 2\nindep\nrow 000\nrow 100\nrow 110\n");

    write("k1.txt", "p edge 1 0\n");
    const CliRun h = run("build-h --graph " + path("k1.txt") + " --out " + path("h.txt") + " --partition " + path("hp.txt"));
    EXPECT_EQ(h.code, 0);
    EXPECT_EQ(slurp(path("h.txt")), "p edge 3 1\ne 2 3\n");
    EXPECT_EQ(run("verify --graph " + path("h.txt") + " --partition " + path("hp.txt")).code, 0);
    EXPECT_EQ(run("build-h --graph " + path("k3.txt") + " --pair-limit 2").code, 3);
}

TEST_F(Cli, CoverPower) {
    const CliRun r = run("cover-power --n 2 --t 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("witness max_multiplicity 1"), std::string::npos);
}
