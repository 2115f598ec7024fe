#pragma once

#include <uivd/fis.hpp>
#include <uivd/graph.hpp>
#include <uivd/rational.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace uivd {

/// Vertex ordering with the umbrella property: whenever v_i v_j is an edge
/// with i < j, all of v_i..v_j are pairwise adjacent.
struct ProperIntervalOrdering {
    VertexList order;

    friend bool operator==(const ProperIntervalOrdering&, const ProperIntervalOrdering&) = default;
};

struct Interval {
    Rational left;
    Rational right;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed unit-length intervals, one per vertex, with all endpoints distinct.
/// Entries are kept sorted by left endpoint.
class UnitIntervalModel {
public:
    struct Entry {
        VertexId vertex;
        Interval interval;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    UnitIntervalModel() = default;
    /// Sorts `entries` by left endpoint. Does not check the unit/distinctness
    /// conditions; use validate_model for that.
    explicit UnitIntervalModel(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Throws DomainError if `v` has no interval.
    const Interval& at(VertexId v) const;

    /// Vertices by increasing left endpoint.
    ProperIntervalOrdering ordering() const;

    friend bool operator==(const UnitIntervalModel&, const UnitIntervalModel&) = default;

private:
    std::vector<Entry> entries_;
    std::vector<std::size_t> slot_;
};

/// Ordered blocks K_0..K_{t-1}; each block is a clique listed in ordering
/// order, and blocks are consecutive runs of the ordering.
///
/// Indices are 0-based throughout the API.
class CliquePartition {
public:
    CliquePartition() = default;
    CliquePartition(std::vector<VertexList> blocks, std::size_t capacity);

    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<VertexList>& blocks() const noexcept { return blocks_; }
    const VertexList& block(std::size_t i) const { return blocks_.at(i); }

    std::optional<std::size_t> block_of(VertexId v) const noexcept;
    bool contains(VertexId v) const noexcept { return block_of(v).has_value(); }

    friend bool operator==(const CliquePartition& a, const CliquePartition& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<VertexList> blocks_;
    std::vector<std::ptrdiff_t> owner_;
};

struct UnitIntervalCertificate {
    ProperIntervalOrdering ordering;
    UnitIntervalModel model;
};

using Recognition = std::variant<UnitIntervalCertificate, ForbiddenSubgraph>;

/// Certifying recognition: either an ordering plus a unit interval model, or
/// an induced claw, net, tent or hole.
Recognition recognize(const Graph& g);

inline bool is_unit_interval(const Recognition& r) { return std::holds_alternative<UnitIntervalCertificate>(r); }

/// Triple (a, b, c) in ordering positions a < b < c with ac an edge while b
/// misses a or c; nullopt when the umbrella property holds. Throws DomainError
/// if `o` is not a permutation of the live vertices.
std::optional<std::array<VertexId, 3>> find_umbrella_violation(const Graph& g, const ProperIntervalOrdering& o);

inline bool has_umbrella_property(const Graph& g, const ProperIntervalOrdering& o)
{
    return ! find_umbrella_violation(g, o).has_value();
}

/// Exact unit model whose left-endpoint order is `o`. Endpoints share the
/// common denominator chosen by the construction. Throws CertificateError
/// naming the offending triple if `o` lacks the umbrella property.
UnitIntervalModel ordering_to_unit_model(const Graph& g, const ProperIntervalOrdering& o);

/// Unit lengths, pairwise distinct endpoints, one interval per live vertex,
/// and intersection graph equal to `g`.
bool validate_model(const Graph& g, const UnitIntervalModel& m);

/// Greedy sweep: the leftmost unassigned interval opens a block that takes
/// every unassigned interval containing its right endpoint.
CliquePartition greedy_clique_partition(const Graph& g, const UnitIntervalModel& m);

/// Each block is a clique, the blocks cover the live vertices exactly, and
/// neighbors of block i lie in blocks i-1, i, i+1 only.
bool validate_partition(const Graph& g, const CliquePartition& p);

struct Contraction {
    Graph graph;
    CliquePartition partition;
    VertexList removed;
    VertexList left_side;  ///< N(K_i) within K_{i-1}
    VertexList right_side; ///< N(K_i) within K_{i+1}
};

/// Deletes block i and joins its neighbors in blocks i-1 and i+1 completely.
/// Requires 0 < i < t-1; throws DomainError otherwise.
Contraction contract_clique(const Graph& g, const CliquePartition& p, std::size_t i);

/// Redoes a contraction with its recorded sides (no partition needed).
Graph apply_contraction(const Graph& g, const VertexList& removed, const VertexList& left_side,
                        const VertexList& right_side);

/// |block(u) - block(v)|, a lower bound on their distance in the graph.
/// Throws DomainError if either vertex is outside the partition.
std::size_t clique_distance_lower_bound(const CliquePartition& p, VertexId u, VertexId v);

} // namespace uivd
