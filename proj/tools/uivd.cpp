#include <uivd/harness.hpp>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

namespace {

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("uivd");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* level = std::getenv("UIVD_LOG");
    spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"unit interval vertex deletion: recognition, kernelization, exact solving"};
    app.require_subcommand(1);

    std::string path, out, stats;
    int k = 0;
    bool force = false;
    uivd::GeneratorParams gen;

    auto* recognize = app.add_subcommand("recognize", "certify a graph as unit interval, or show an obstruction");
    recognize->add_option("graph", path, "graph file")->required();

    auto* kernelize = app.add_subcommand("kernelize", "reduce an instance and write the kernel");
    kernelize->add_option("graph", path, "graph file")->required();
    kernelize->add_option("--k", k, "deletion budget")->required();
    kernelize->add_option("--out", out, "output prefix (default: <graph>.kernel)");
    kernelize->add_option("--stats", stats, "stats JSON path (default: <prefix>.stats.json)");

    auto* solve = app.add_subcommand("solve", "exact solution with at most k deletions");
    solve->add_option("graph", path, "graph file")->required();
    solve->add_option("--k", k, "deletion budget")->required();

    auto* generate = app.add_subcommand("gen", "random unit interval graph with noise vertices");
    generate->add_option("--n", gen.n, "number of intervals")->required();
    generate->add_option("--noise", gen.noise, "number of noise vertices");
    generate->add_option("--seed", gen.seed, "PRNG seed");
    generate->add_option("--span", gen.span_ratio, "endpoint range as a fraction of n")->check(CLI::PositiveNumber);
    generate->add_option("--out", out, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "kernelize and compare exact answers on input and kernel");
    verify->add_option("graph", path, "graph file")->required();
    verify->add_option("--k", k, "deletion budget")->required();
    verify->add_flag("--force", force, "run the oracle on kernels above the size guard");
    verify->add_option("--stats", stats, "stats JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : uivd::exit_parse;
    }

    if (recognize->parsed())
        return uivd::cmd_recognize(path, std::cout, std::cerr);
    if (kernelize->parsed())
        return uivd::cmd_kernelize(path, k, out, stats, std::cout, std::cerr);
    if (solve->parsed())
        return uivd::cmd_solve(path, k, std::cout, std::cerr);
    if (generate->parsed())
        return uivd::cmd_gen(gen, out, std::cout, std::cerr);
    return uivd::cmd_verify(path, k, force, stats, std::cout, std::cerr);
}
