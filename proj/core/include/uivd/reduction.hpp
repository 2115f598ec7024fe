#pragma once

#include <uivd/graph.hpp>
#include <uivd/modulator.hpp>
#include <uivd/recognition.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace uivd {

/// An instance with a modulator M and a fixed ordering, unit model and clique
/// partition of G - M.
struct ReductionState {
    Instance instance;
    Modulator modulator;
    ProperIntervalOrdering ordering;
    UnitIntervalModel model;
    CliquePartition partition;

    /// Recognizes G - M and derives the ordering, model and partition from
    /// the certificate. Throws InternalError if G - M is not unit interval.
    static ReductionState build(Instance inst, Modulator m);
    /// Same, with a caller-chosen ordering of G - M. Throws CertificateError
    /// if the ordering lacks the umbrella property.
    static ReductionState build_with_ordering(Instance inst, Modulator m, ProperIntervalOrdering o);

    /// The same state read right to left: reversed ordering, reversed blocks,
    /// each block reversed.
    ReductionState mirrored() const;

    Graph residual() const;
};

/// Ordering, model and partition are consistent with G - M.
bool validate_state(const ReductionState& s);

struct AdjacencyProfile {
    /// Indexed like modulator.members().
    std::vector<std::size_t> adjacent_blocks;
    std::vector<std::size_t> heavy_blocks; ///< blocks holding at least k+1 neighbors
    /// Indexed by block.
    std::vector<bool> block_touches_modulator;
};

AdjacencyProfile profile(const ReductionState& s);

struct TraceStep {
    int rule = 0;
    /// The deleted vertex (rules 1, 2) or the contracted block (rule 3).
    VertexList vertices;
    int k_after = 0;
    /// Rule 3 only: the two sides that were joined.
    VertexList left_side;
    VertexList right_side;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;

    std::size_t count(int rule) const;
};

struct RuleOutcome {
    TraceStep step;
    /// Empty when the budget dropped below zero: a NO-instance.
    std::optional<ReductionState> next;
};

/// Some v in M adjacent to at least k+5 blocks (smallest id): delete v.
std::optional<RuleOutcome> rule1(const ReductionState& s);
/// Some v in M with at least five blocks each holding k+1 or more of its
/// neighbors (smallest id): delete v.
std::optional<RuleOutcome> rule2(const ReductionState& s);
/// Seven consecutive blocks untouched by M (smallest middle index i): contract
/// the first of K_{i-1}, K_i, K_{i+1} missed by a minimum separator between
/// the last vertex of K_{i-2} and the first vertex of K_{i+2}.
std::optional<RuleOutcome> rule3(const ReductionState& s);

/// Minimum u-v vertex separator of `g` from unit-capacity vertex-split max
/// flow; augmenting paths are found by BFS in increasing id order. Requires
/// u, v distinct and nonadjacent. Empty when they are disconnected.
VertexList min_vertex_separator(const Graph& g, VertexId u, VertexId v);

struct NoInstance {
    ReductionTrace trace;
    std::string reason;
};

struct Reduced {
    ReductionState state;
    ReductionTrace trace;
};

using ReductionResult = std::variant<NoInstance, Reduced>;

/// Approximates M, then applies rules 1, 2, 3 in that priority until none
/// applies. NO as soon as k < 0 or |M| > 6k.
ReductionResult reduce_to_fixpoint(const Instance& inst);
/// The rule loop alone, starting from an already built state.
ReductionResult reduce_from(ReductionState state);

/// Re-applies the deletions and contractions of `trace` to `original`.
Instance replay_trace(const Instance& original, const ReductionTrace& trace);

} // namespace uivd
