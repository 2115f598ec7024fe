#pragma once

#include <uivd/graph.hpp>
#include <uivd/reduction.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

namespace uivd {

/// Adjacency to an ordered pair (x, y) of modulator vertices.
enum class PairPattern { Both, OnlyFirst, OnlySecond, Neither };

/// Vertices picked from a reduced state, by category. Every set is listed in
/// ordering order. Block indices are 0-based.
struct PickReport {
    /// Per block: first/last k+1 of the block, of its M-nonadjacent
    /// vertices, and of the neighbors of each x in M.
    std::vector<VertexList> k0;
    /// (block, x, y, pattern) for x < y in M.
    std::map<std::tuple<std::size_t, VertexId, VertexId, PairPattern>, VertexList> k1;
    /// (block, x): first/last k+1 of the union over y != x of the
    /// (x, y) and (x, not y) classes.
    std::map<std::tuple<std::size_t, VertexId>, VertexList> k1x;
    /// (block, x, y) with y from a neighboring block.
    std::map<std::tuple<std::size_t, VertexId, VertexId>, VertexList> k2;
    std::map<std::tuple<std::size_t, VertexId, VertexId>, VertexList> k3;
    std::map<std::tuple<std::size_t, VertexId, VertexId>, VertexList> k4;
    VertexList v0;

    /// Sorted union of everything above.
    VertexList all;
};

std::vector<VertexList> pick_k0(const ReductionState& s);
void pick_k1(const ReductionState& s, PickReport& r);
void pick_k2(const ReductionState& s, PickReport& r);
void pick_k3(const ReductionState& s, PickReport& r);
void pick_k4(const ReductionState& s, PickReport& r);
VertexList pick_v0(const ReductionState& s);

/// Runs every category and fills `all`.
PickReport pick(const ReductionState& s);

/// Picked vertices of block `i` over the per-block categories (V0 excluded).
VertexList block_picks(const PickReport& r, std::size_t i);

/// The upper bound on picks from one block implied by the category sizes:
/// 10 (|M|^2 + |M| k + 1)(k + 1).
std::size_t block_pick_bound(std::size_t modulator_size, int k);

struct Kernel {
    Instance instance;
    /// Kernel vertex id (compacted) -> id in the reduced graph.
    VertexList original_ids;
};

/// Induced subgraph on the picks together with M, ids compacted in increasing
/// order; same budget.
Kernel assemble_kernel(const ReductionState& s, const PickReport& r);

} // namespace uivd
