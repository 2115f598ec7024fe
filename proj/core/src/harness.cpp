#include <uivd/error.hpp>
#include <uivd/harness.hpp>
#include <uivd/oracle.hpp>
#include <uivd/serialize.hpp>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace uivd {

namespace
{
    constexpr std::int64_t unit = 1024;

    using Clock = std::chrono::steady_clock;

    double ms_since(Clock::time_point t0)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }

    void write_file(const std::string& path, const std::string& text)
    {
        std::ofstream f(path, std::ios::binary);
        if (! f || ! (f << text) || ! f.flush())
            throw ParseError(0, "cannot write " + path);
    }
}

Graph generate_instance(const GeneratorParams& p)
{
    if (p.n == 0)
        throw DomainError("generator: n must be positive");
    const std::size_t total = p.n + p.noise;
    std::mt19937_64 rng(p.seed);

    // left endpoints are integers scaled by `unit`, so every interval has
    // length `unit`; tiny spans are widened so distinct endpoints always exist
    const double span = static_cast<double>(p.n) * p.span_ratio;
    const auto top = std::max<std::int64_t>(static_cast<std::int64_t>((span - 1.0) * unit),
                                            8 * static_cast<std::int64_t>(p.n));
    std::uniform_int_distribution<std::int64_t> pick_left(0, top);
    std::set<std::int64_t> used;
    std::vector<std::int64_t> left;
    while (left.size() < p.n) {
        std::int64_t a = pick_left(rng);
        if (used.count(a) || used.count(a + unit))
            continue;
        used.insert(a);
        used.insert(a + unit);
        left.push_back(a);
    }

    Graph g(total);
    std::vector<std::size_t> by_left(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
        by_left[i] = i;
    std::sort(by_left.begin(), by_left.end(), [&](std::size_t a, std::size_t b) { return left[a] < left[b]; });
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = i + 1; j < p.n && left[by_left[j]] - left[by_left[i]] < unit; ++j)
            g.add_edge(vertex(by_left[i]), vertex(by_left[j]));

    std::uniform_int_distribution<std::size_t> pick_width(2, 10);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t z = 0; z < p.noise; ++z) {
        VertexId noise = vertex(p.n + z);
        std::size_t w = std::min(pick_width(rng), p.n);
        std::size_t start = std::uniform_int_distribution<std::size_t>(0, p.n - w)(rng);
        bool any = false;
        for (std::size_t j = start; j < start + w; ++j)
            if (coin(rng)) {
                g.add_edge(noise, vertex(by_left[j]));
                any = true;
            }
        if (! any)
            g.add_edge(noise, vertex(by_left[start + std::uniform_int_distribution<std::size_t>(0, w - 1)(rng)]));
    }
    return g;
}

std::string generate_instance_text(const GeneratorParams& p)
{
    std::ostringstream head;
    head << "# uivd gen n=" << p.n << " noise=" << p.noise << " seed=" << p.seed << " span=" << p.span_ratio << '\n';
    return head.str() + serialize_graph(generate_instance(p)).text;
}

std::string to_json(const RunStats& s)
{
    nlohmann::ordered_json j{
        {"schema", "uivd-stats/1"},
        {"input", {{"n", s.input_n}, {"m", s.input_m}, {"k", s.k}}},
        {"modulator_size", s.modulator_size},
        {"rules", {{"1", s.rule_counts[0]}, {"2", s.rule_counts[1]}, {"3", s.rule_counts[2]}}},
        {"blocks", {{"before", s.blocks_before}, {"after", s.blocks_after}}},
        {"answer", s.no_instance ? "no" : "kernel"},
        {"kernel", {{"n", s.kernel_n}, {"m", s.kernel_m}}},
        {"ms", {{"approximate", s.ms_approximate}, {"reduce", s.ms_reduce}, {"pick", s.ms_pick}, {"total", s.ms_total}}},
    };
    return j.dump(2) + "\n";
}

KernelizeResult kernelize(const Instance& inst)
{
    KernelizeResult res;
    RunStats& st = res.stats;
    st.input_n = inst.graph.vertex_count();
    st.input_m = inst.graph.edge_count();
    st.k = inst.budget;
    const auto t_start = Clock::now();

    auto t0 = Clock::now();
    Modulator m = approximate(inst.graph);
    st.ms_approximate = ms_since(t0);
    st.modulator_size = m.size();
    spdlog::debug("modulator: {} vertices ({} obstructions, {} from hole hitting)", m.size(), m.obstructions().size(),
                  m.phase2().size());

    t0 = Clock::now();
    ReductionState initial = ReductionState::build(inst, std::move(m));
    st.blocks_before = initial.partition.size();
    ReductionResult r = reduce_from(std::move(initial));
    st.ms_reduce = ms_since(t0);

    if (auto* no = std::get_if<NoInstance>(&r)) {
        res.trace = std::move(no->trace);
        res.no_reason = no->reason;
        st.no_instance = true;
    } else {
        auto& done = std::get<Reduced>(r);
        res.trace = std::move(done.trace);
        t0 = Clock::now();
        res.picks = pick(done.state);
        res.kernel = assemble_kernel(done.state, *res.picks);
        st.ms_pick = ms_since(t0);
        st.blocks_after = done.state.partition.size();
        st.kernel_n = res.kernel->instance.graph.vertex_count();
        st.kernel_m = res.kernel->instance.graph.edge_count();
        res.reduced = std::move(done.state);
    }
    for (int rule = 1; rule <= 3; ++rule)
        st.rule_counts[rule - 1] = res.trace.count(rule);
    st.ms_total = ms_since(t_start);
    spdlog::debug("reduction: {} steps, {} -> {} blocks", res.trace.steps.size(), st.blocks_before, st.blocks_after);
    if (st.no_instance)
        spdlog::info("answer NO: {}", res.no_reason);
    else
        spdlog::info("kernel: n={} m={} k={}", st.kernel_n, st.kernel_m, st.k);
    return res;
}

VerifyOutcome verify_instance(const Instance& inst, bool force)
{
    VerifyOutcome v;
    v.run = kernelize(inst);
    if (v.run.kernel && v.run.kernel->instance.graph.vertex_count() > verify_limit && ! force) {
        v.code = exit_guard;
        return v;
    }
    v.original_yes = oracle_solve(inst).has_value();
    v.kernel_yes = v.run.kernel && oracle_solve(v.run.kernel->instance).has_value();
    v.code = v.original_yes == v.kernel_yes ? exit_ok : exit_mismatch;
    if (v.run.reduced && replay_trace(inst, v.run.trace).graph != v.run.reduced->instance.graph)
        v.code = exit_mismatch;
    return v;
}

int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err)
{
    Graph g;
    try {
        g = load_graph_file(path);
    } catch (const ParseError& e) {
        err << "uivd: " << e.what() << '\n';
        return exit_parse;
    }
    Recognition r = recognize(g);
    if (auto* cert = std::get_if<UnitIntervalCertificate>(&r)) {
        out << to_json(*cert) << '\n';
        return exit_ok;
    }
    out << to_json(std::get<ForbiddenSubgraph>(r)) << '\n';
    return exit_not_unit_interval;
}

int cmd_kernelize(const std::string& path, int k, const std::string& out_prefix, const std::string& stats_path,
                  std::ostream& out, std::ostream& err)
{
    if (k < 0) {
        err << "uivd: --k must be non-negative\n";
        return exit_parse;
    }
    try {
        Instance inst(load_graph_file(path), k);
        KernelizeResult res = kernelize(inst);
        const std::string prefix = out_prefix.empty() ? path + ".kernel" : out_prefix;
        write_file(prefix + ".trace.jsonl", to_jsonl(res.trace));
        write_file(stats_path.empty() ? prefix + ".stats.json" : stats_path, to_json(res.stats));
        if (! res.kernel) {
            out << "NO (" << res.no_reason << ")\n";
            return exit_kernel_no;
        }
        SerializedGraph sg = serialize_graph(res.kernel->instance.graph);
        write_file(prefix + ".graph", sg.text);
        write_file(prefix + ".map", serialize_compaction_map(res.kernel->original_ids));
        write_file(prefix + ".picks.json", to_json(*res.picks) + "\n");
        write_file(prefix + ".modulator.json", to_json(res.reduced->modulator) + "\n");
        out << "kernel n=" << res.stats.kernel_n << " m=" << res.stats.kernel_m << " k=" << k << '\n';
        return exit_ok;
    } catch (const ParseError& e) {
        err << "uivd: " << e.what() << '\n';
        return exit_parse;
    }
}

int cmd_solve(const std::string& path, int k, std::ostream& out, std::ostream& err)
{
    if (k < 0) {
        err << "uivd: --k must be non-negative\n";
        return exit_parse;
    }
    Graph g;
    try {
        g = load_graph_file(path);
    } catch (const ParseError& e) {
        err << "uivd: " << e.what() << '\n';
        return exit_parse;
    }
    auto sol = oracle_solve(Instance(std::move(g), k));
    if (! sol) {
        out << "{\"deleted\":null}\n";
        return exit_kernel_no;
    }
    out << to_json(*sol) << '\n';
    return exit_ok;
}

int cmd_gen(const GeneratorParams& p, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    if (p.n == 0) {
        err << "uivd: --n must be positive\n";
        return exit_parse;
    }
    std::string text = generate_instance_text(p);
    if (out_path.empty() || out_path == "-") {
        out << text;
        return exit_ok;
    }
    try {
        write_file(out_path, text);
    } catch (const ParseError& e) {
        err << "uivd: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_ok;
}

int cmd_verify(const std::string& path, int k, bool force, const std::string& stats_path, std::ostream& out,
               std::ostream& err)
{
    if (k < 0) {
        err << "uivd: --k must be non-negative\n";
        return exit_parse;
    }
    try {
        Instance inst(load_graph_file(path), k);
        VerifyOutcome v = verify_instance(inst, force);
        if (! stats_path.empty())
            write_file(stats_path, to_json(v.run.stats));
        if (v.code == exit_guard) {
            err << "uivd: kernel has " << v.run.stats.kernel_n << " vertices (limit " << verify_limit
                << "); pass --force to run the oracle anyway\n";
            return exit_guard;
        }
        out << "original=" << (v.original_yes ? "yes" : "no") << " kernel=" << (v.kernel_yes ? "yes" : "no")
            << (v.code == exit_ok ? " agree" : " MISMATCH") << '\n';
        return v.code;
    } catch (const ParseError& e) {
        err << "uivd: " << e.what() << '\n';
        return exit_parse;
    }
}

} // namespace uivd
