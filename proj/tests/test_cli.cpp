#include "instances.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path& scratch()
{
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("uivd-cli-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string file(const std::string& name)
{
    return (scratch() / name).string();
}

/// Runs the CLI with `args`, returning its exit status; stdout goes to `out`.
int run(const std::string& args, const std::string& out = "/dev/null")
{
    std::string cmd = std::string(UIVD_BINARY) + " " + args + " > " + out + " 2> " + file("stderr.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void put(const std::string& path, const uivd::Graph& g)
{
    std::ofstream(path) << uivd::serialize_graph(g).text;
}

class Cli : public ::testing::Test {
protected:
    static void TearDownTestSuite() { fs::remove_all(scratch()); }
};

} // namespace

TEST_F(Cli, RecognizeExitCodes)
{
    put(file("k5.txt"), fixtures::clique(5));
    put(file("claw.txt"), fixtures::claw());
    std::ofstream(file("bad.txt")) << "2 1\n0\n";
    EXPECT_EQ(run("recognize " + file("k5.txt"), file("o.txt")), 0);
    EXPECT_NE(slurp(file("o.txt")).find("\"unit_interval\""), std::string::npos);
    EXPECT_EQ(run("recognize " + file("claw.txt"), file("o.txt")), 1);
    EXPECT_NE(slurp(file("o.txt")).find("\"claw\""), std::string::npos);
    EXPECT_EQ(run("recognize " + file("bad.txt")), 2);
    EXPECT_NE(slurp(file("stderr.txt")).find("line"), std::string::npos);
}

TEST_F(Cli, KernelizeAndNo)
{
    uivd::Graph claws = fixtures::claw();
    for (int i = 1; i < 7; ++i)
        claws = fixtures::disjoint(claws, fixtures::claw());
    put(file("claws.txt"), claws);
    EXPECT_EQ(run("kernelize " + file("claws.txt") + " --k 1", file("o.txt")), 3);
    EXPECT_NE(slurp(file("o.txt")).find("NO"), std::string::npos);
    EXPECT_TRUE(fs::exists(file("claws.txt.kernel.stats.json")));

    ASSERT_EQ(run("gen --n 300 --noise 2 --seed 7 --out " + file("g300.txt")), 0);
    EXPECT_EQ(run("kernelize " + file("g300.txt") + " --k 2 --out " + file("k300") + " --stats " + file("st.json"),
                  file("o.txt")),
              0);
    EXPECT_TRUE(fs::exists(file("k300.graph")));
    EXPECT_TRUE(fs::exists(file("st.json")));
    EXPECT_EQ(slurp(file("o.txt")).rfind("kernel n=", 0), 0u);
}

TEST_F(Cli, SolveGenVerify)
{
    put(file("c4x2.txt"), fixtures::disjoint(fixtures::cycle(4), fixtures::cycle(4)));
    EXPECT_EQ(run("solve " + file("c4x2.txt") + " --k 1"), 3);
    EXPECT_EQ(run("solve " + file("c4x2.txt") + " --k 2", file("o.txt")), 0);
    EXPECT_NE(slurp(file("o.txt")).find("deleted"), std::string::npos);

    ASSERT_EQ(run("gen --n 12 --noise 1 --seed 5", file("a.txt")), 0);
    ASSERT_EQ(run("gen --n 12 --noise 1 --seed 5 --out " + file("b.txt")), 0);
    EXPECT_EQ(slurp(file("a.txt")), slurp(file("b.txt")));
    EXPECT_EQ(run("verify " + file("a.txt") + " --k 1", file("o.txt")), 0);
    EXPECT_NE(slurp(file("o.txt")).find("agree"), std::string::npos);

    ASSERT_EQ(run("gen --n 300 --noise 4 --seed 3 --out " + file("big.txt")), 0);
    EXPECT_EQ(run("verify " + file("big.txt") + " --k 3"), 5);
}

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("solve " + file("nowhere.txt") + " --k 1"), 2);
    EXPECT_EQ(run("kernelize --k 1"), 2);
    EXPECT_EQ(run("--help"), 0);
}
