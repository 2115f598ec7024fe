#pragma once

#include <uivd/graph.hpp>
#include <uivd/picker.hpp>
#include <uivd/reduction.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace uivd {

enum ExitCode : int {
    exit_ok = 0,
    exit_not_unit_interval = 1,
    exit_parse = 2,
    exit_kernel_no = 3,
    exit_mismatch = 4,
    exit_guard = 5,
};

struct GeneratorParams {
    std::size_t n = 0;
    std::size_t noise = 0;
    std::uint64_t seed = 0;
    /// Left/right endpoints land in [0, n * span_ratio].
    double span_ratio = 0.25;
};

/// Intersection graph of n random unit intervals with distinct endpoints,
/// plus `noise` extra vertices, each joined to a random subset of a short run
/// of consecutive intervals. Interval vertices get ids in sampling order,
/// noise vertices come last. Deterministic per parameters.
Graph generate_instance(const GeneratorParams& p);

/// The generator's output as file text, headed by a comment line.
std::string generate_instance_text(const GeneratorParams& p);

struct RunStats {
    std::size_t input_n = 0, input_m = 0;
    int k = 0;
    std::size_t modulator_size = 0;
    std::size_t rule_counts[3] = {0, 0, 0};
    std::size_t blocks_before = 0, blocks_after = 0;
    std::size_t kernel_n = 0, kernel_m = 0;
    bool no_instance = false;
    double ms_approximate = 0, ms_reduce = 0, ms_pick = 0, ms_total = 0;
};

std::string to_json(const RunStats& s);

struct KernelizeResult {
    /// Empty on a NO answer.
    std::optional<Kernel> kernel;
    std::optional<ReductionState> reduced;
    std::optional<PickReport> picks;
    ReductionTrace trace;
    std::string no_reason;
    RunStats stats;
};

KernelizeResult kernelize(const Instance& inst);

/// Largest kernel the verifier hands to the oracle without --force.
inline constexpr std::size_t verify_limit = 18;

struct VerifyOutcome {
    ExitCode code = exit_ok;
    bool original_yes = false;
    bool kernel_yes = false;
    KernelizeResult run;
};

/// Kernelizes and compares oracle answers on both sides.
VerifyOutcome verify_instance(const Instance& inst, bool force);

// Command entry points. Normal output goes to `out`, diagnostics to `err`.
int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_kernelize(const std::string& path, int k, const std::string& out_prefix, const std::string& stats_path,
                  std::ostream& out, std::ostream& err);
int cmd_solve(const std::string& path, int k, std::ostream& out, std::ostream& err);
int cmd_gen(const GeneratorParams& p, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, int k, bool force, const std::string& stats_path, std::ostream& out,
               std::ostream& err);

} // namespace uivd
