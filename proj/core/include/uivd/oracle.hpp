#pragma once

#include <uivd/graph.hpp>

#include <cstddef>
#include <optional>

namespace uivd {

struct Solution {
    VertexList deleted;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Exact solver: some set of at most k vertices whose deletion leaves a unit
/// interval graph, or nullopt if none exists. Branches on the vertices of a
/// small obstruction when there is one, otherwise on a shortest hole, in the
/// certificate's vertex order. Exponential; meant for small graphs.
std::optional<Solution> oracle_solve(const Instance& inst);

/// Minimum deletion count.
std::size_t oracle_opt(const Graph& g);

} // namespace uivd
