#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace uivd {

/// Stable vertex identity. Ids are handed out densely at load time and are
/// never renumbered or reused, so traces and kernels can refer back to the
/// original input.
enum class VertexId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr VertexId vertex(std::size_t i) noexcept { return static_cast<VertexId>(i); }

using VertexList = std::vector<VertexId>;
using VertexBits = boost::dynamic_bitset<std::uint64_t>;

std::ostream& operator<<(std::ostream& os, VertexId v);

/// Simple undirected graph over a fixed id space [0, capacity).
///
/// Adjacency is kept twice: as sorted neighbor lists (deterministic iteration)
/// and as bit rows (constant-time adjacency tests and fast set algebra).
/// Deleting a vertex kills its id; ids of other vertices are untouched.
class Graph {
public:
    Graph() = default;

    /// `n` live isolated vertices with ids 0..n-1.
    explicit Graph(std::size_t n);

    std::size_t capacity() const noexcept { return adj_.size(); }
    std::size_t vertex_count() const noexcept { return live_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool contains(VertexId v) const noexcept
    {
        return index(v) < capacity() && live_.test(index(v));
    }

    /// Live vertices in increasing id order.
    VertexList vertices() const;
    const VertexBits& live() const noexcept { return live_; }

    const VertexList& neighbors(VertexId v) const;
    const VertexBits& neighbor_bits(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    bool adjacent(VertexId u, VertexId v) const noexcept
    {
        return index(u) < capacity() && index(v) < capacity() && rows_[index(u)].test(index(v));
    }

    /// Inserts uv. Returns false if the edge was already present.
    /// Throws DomainError on a self-loop or a dead endpoint.
    bool add_edge(VertexId u, VertexId v);

    /// Kills `v` together with its incident edges.
    void remove_vertex(VertexId v);

    /// Walks every adjacency entry and throws InternalError on asymmetry,
    /// self-loops, dangling references or stale counters.
    void check_invariants() const;

    /// Empty bit set sized to this graph's id space.
    VertexBits make_bits() const { return VertexBits(capacity()); }
    VertexBits make_bits(std::span<const VertexId> vs) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void require_live(VertexId v, const char* what) const;

    std::vector<VertexList> adj_;
    std::vector<VertexBits> rows_;
    VertexBits live_;
    std::size_t live_count_ = 0;
    std::size_t edge_count_ = 0;
};

/// A graph together with a deletion budget.
struct Instance {
    Graph graph;
    int budget = 0;

    Instance() = default;
    Instance(Graph g, int k);
};

/// Parses the text graph format: a header line "n m", then m lines "u v" with
/// 0 <= u < v < n. Lines starting with '#' and blank lines are ignored.
/// Duplicate edges collapse. Throws ParseError naming the offending line.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

struct SerializedGraph {
    std::string text;
    /// new index -> original id (live vertices in increasing id order)
    VertexList original_ids;
};

/// Emits the live part of `g` in the text format, compacting ids in increasing
/// order. Edges are listed lexicographically.
SerializedGraph serialize_graph(const Graph& g);

/// The compaction map as "new-index original-id" lines.
std::string serialize_compaction_map(const VertexList& original_ids);

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Graph induced_subgraph(const Graph& g, const VertexBits& keep);
Graph delete_vertices(const Graph& g, std::span<const VertexId> drop);

/// BFS hop count; nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, VertexId u, VertexId v);

/// BFS hop counts from `source` to every id; unreachable or dead ids get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexList> connected_components(const Graph& g);

/// Vertices within `radius` hops of any seed.
VertexBits ball(const Graph& g, std::span<const VertexId> seeds, std::size_t radius);

VertexList to_list(const VertexBits& bits);

} // namespace uivd
