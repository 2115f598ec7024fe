#include "instances.hpp"

#include <uivd/harness.hpp>
#include <uivd/oracle.hpp>
#include <uivd/serialize.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace uivd;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("uivd-harness-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string write(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(Generator, Deterministic)
{
    GeneratorParams p{.n = 60, .noise = 3, .seed = 11};
    EXPECT_EQ(generate_instance_text(p), generate_instance_text(p));
    GeneratorParams q = p;
    q.seed = 12;
    EXPECT_NE(generate_instance_text(p), generate_instance_text(q));
}

TEST(Generator, NoNoiseIsUnitInterval)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        for (std::size_t n : {1u, 2u, 7u, 40u, 200u})
            EXPECT_TRUE(is_unit_interval(recognize(generate_instance({.n = n, .noise = 0, .seed = seed}))));
}

TEST(Generator, OneNoiseVertexCostsAtMostOne)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = generate_instance({.n = 10, .noise = 1, .seed = seed});
        EXPECT_EQ(g.capacity(), 11u);
        EXPECT_GT(g.degree(vertex(10)), 0u);
        EXPECT_LE(oracle_opt(g), 1u);
    }
}

TEST(Generator, DefaultSpanGivesSeveralBlocks)
{
    Graph g = generate_instance({.n = 400, .noise = 0, .seed = 1});
    auto r = recognize(g);
    const auto& cert = std::get<UnitIntervalCertificate>(r);
    auto p = greedy_clique_partition(g, cert.model);
    EXPECT_GE(p.size(), 20u);
    EXPECT_GT(g.edge_count(), 400u);
}

TEST(Kernelize, UnitIntervalInputKeepsTheAnswer)
{
    Graph g = generate_instance({.n = 120, .noise = 0, .seed = 5});
    KernelizeResult r = kernelize(Instance(g, 1));
    ASSERT_TRUE(r.kernel);
    EXPECT_EQ(r.stats.modulator_size, 0u);
    EXPECT_TRUE(is_unit_interval(recognize(r.kernel->instance.graph)));
    EXPECT_LE(r.stats.kernel_n, r.stats.input_n);
}

TEST(Kernelize, SevenClawsIsNo)
{
    Graph g = fixtures::claw();
    for (int i = 1; i < 7; ++i)
        g = fixtures::disjoint(g, fixtures::claw());
    KernelizeResult r = kernelize(Instance(g, 1));
    EXPECT_FALSE(r.kernel);
    EXPECT_TRUE(r.stats.no_instance);
    EXPECT_EQ(r.stats.modulator_size, 28u);
}

TEST(Kernelize, GeneratedInstanceShrinks)
{
    Graph g = generate_instance({.n = 300, .noise = 2, .seed = 7});
    KernelizeResult r = kernelize(Instance(g, 2));
    ASSERT_TRUE(r.kernel);
    EXPECT_LT(r.stats.kernel_n, r.stats.input_n);
    EXPECT_EQ(r.stats.rule_counts[0] + r.stats.rule_counts[1] + r.stats.rule_counts[2], r.trace.steps.size());
    EXPECT_LE(r.stats.blocks_after, r.stats.blocks_before);
    auto j = nlohmann::json::parse(to_json(r.stats));
    EXPECT_EQ(j["schema"], "uivd-stats/1");
    EXPECT_EQ(j["kernel"]["n"], r.stats.kernel_n);
}

TEST(Verify, Examples)
{
    VerifyOutcome ui = verify_instance(Instance(fixtures::path(12), 0), false);
    EXPECT_EQ(ui.code, exit_ok);
    EXPECT_TRUE(ui.original_yes && ui.kernel_yes);

    Graph c4s = fixtures::disjoint(fixtures::cycle(4), fixtures::cycle(4));
    Graph noisy(c4s.capacity() + 1);
    for (VertexId u : c4s.vertices())
        for (VertexId w : c4s.neighbors(u))
            if (u < w)
                noisy.add_edge(u, w);
    noisy.add_edge(vertex(8), vertex(0));
    VerifyOutcome no = verify_instance(Instance(noisy, 1), false);
    EXPECT_EQ(no.code, exit_ok);
    EXPECT_FALSE(no.original_yes);
    EXPECT_FALSE(no.kernel_yes);

    Graph big = generate_instance({.n = 300, .noise = 4, .seed = 3});
    EXPECT_EQ(verify_instance(Instance(big, 3), false).code, exit_guard);
}

TEST(Commands, RecognizeExitCodes)
{
    TempDir dir;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_recognize(write(dir.file("k4.txt"), serialize_graph(fixtures::clique(4)).text), out, err), 0);
    out.str("");
    EXPECT_EQ(cmd_recognize(write(dir.file("claw.txt"), serialize_graph(fixtures::claw()).text), out, err), 1);
    EXPECT_EQ(nlohmann::json::parse(out.str())["kind"], "claw");
    EXPECT_EQ(cmd_recognize(write(dir.file("bad.txt"), "3 1\n0 7\n"), out, err), 2);
    EXPECT_EQ(cmd_recognize(dir.file("missing.txt"), out, err), 2);
}

TEST(Commands, KernelizeWritesEveryFile)
{
    TempDir dir;
    std::string path = write(dir.file("g.txt"), generate_instance_text({.n = 80, .noise = 2, .seed = 4}));
    std::ostringstream out, err;
    ASSERT_EQ(cmd_kernelize(path, 2, dir.file("out"), "", out, err), 0) << err.str();
    for (const char* ext : {".graph", ".map", ".trace.jsonl", ".stats.json", ".picks.json", ".modulator.json"})
        EXPECT_TRUE(fs::exists(dir.file(std::string("out") + ext))) << ext;
    Graph k = load_graph_file(dir.file("out.graph"));
    std::istringstream map(slurp(dir.file("out.map")));
    std::size_t lines = 0, a = 0, b = 0;
    while (map >> a >> b)
        EXPECT_EQ(a, lines++);
    EXPECT_EQ(lines, k.vertex_count());

    Graph claws = fixtures::claw();
    for (int i = 1; i < 7; ++i)
        claws = fixtures::disjoint(claws, fixtures::claw());
    std::string cpath = write(dir.file("claws.txt"), serialize_graph(claws).text);
    EXPECT_EQ(cmd_kernelize(cpath, 1, "", dir.file("s.json"), out, err), 3);
    EXPECT_TRUE(fs::exists(dir.file("s.json")));
    EXPECT_EQ(nlohmann::json::parse(slurp(dir.file("s.json")))["answer"], "no");
    EXPECT_EQ(cmd_kernelize(cpath, -1, "", "", out, err), 2);
}

TEST(Commands, SolveAndGen)
{
    TempDir dir;
    std::ostringstream out, err;
    std::string claw = write(dir.file("claw.txt"), serialize_graph(fixtures::claw()).text);
    EXPECT_EQ(cmd_solve(claw, 1, out, err), 0);
    EXPECT_EQ(nlohmann::json::parse(out.str())["deleted"].size(), 1u);
    out.str("");
    EXPECT_EQ(cmd_solve(claw, 0, out, err), 3);

    GeneratorParams p{.n = 30, .noise = 1, .seed = 8};
    ASSERT_EQ(cmd_gen(p, dir.file("a.txt"), out, err), 0);
    ASSERT_EQ(cmd_gen(p, dir.file("b.txt"), out, err), 0);
    EXPECT_EQ(slurp(dir.file("a.txt")), slurp(dir.file("b.txt")));
    std::ostringstream direct;
    EXPECT_EQ(cmd_gen(p, "-", direct, err), 0);
    EXPECT_EQ(direct.str(), slurp(dir.file("a.txt")));
    EXPECT_EQ(cmd_gen({.n = 0}, "-", direct, err), 2);
}

TEST(Commands, VerifyOutcomes)
{
    TempDir dir;
    std::ostringstream out, err;
    std::string small = write(dir.file("s.txt"), generate_instance_text({.n = 14, .noise = 2, .seed = 1, .span_ratio = 0.5}));
    EXPECT_EQ(cmd_verify(small, 2, false, "", out, err), 0);
    EXPECT_NE(out.str().find("agree"), std::string::npos);
    std::string big = write(dir.file("b.txt"), generate_instance_text({.n = 300, .noise = 4, .seed = 3}));
    EXPECT_EQ(cmd_verify(big, 3, false, "", out, err), 5);
    EXPECT_EQ(cmd_verify(small, -1, false, "", out, err), 2);
}
