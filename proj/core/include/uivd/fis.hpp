#pragma once

#include <uivd/graph.hpp>

#include <optional>
#include <span>
#include <string_view>

namespace uivd {

enum class FisKind { Claw, Net, Tent, Hole };

std::string_view to_string(FisKind kind);

/// Induced obstruction to being a unit interval graph.
///
/// Vertex order is canonical per kind:
///   Claw  [center, leaf1 < leaf2 < leaf3]
///   Net   [a < b < c (the triangle), pendant(a), pendant(b), pendant(c)]
///   Tent  [a < b < c (inner triangle), outer opposite a, opposite b, opposite c]
///   Hole  cyclic order, starting at the smallest id, second entry is the
///         smaller of its two cycle neighbors
struct ForbiddenSubgraph {
    FisKind kind = FisKind::Claw;
    VertexList vertices;

    friend bool operator==(const ForbiddenSubgraph&, const ForbiddenSubgraph&) = default;
};

/// Requested kinds for find_small_fis. C4 and C5 are reported as Hole.
struct SmallFisKinds {
    bool claw = true;
    bool net = true;
    bool tent = true;
    bool c4 = true;
    bool c5 = true;

    static constexpr SmallFisKinds all() { return {}; }
    static constexpr SmallFisKinds none() { return {false, false, false, false, false}; }
};

/// First induced claw, net, tent, C4 or C5 among the requested kinds.
/// Kinds are tried in the order claw, net, tent, C4, C5; within a kind the
/// lexicographically first canonical tuple wins.
std::optional<ForbiddenSubgraph> find_small_fis(const Graph& g, SmallFisKinds kinds = SmallFisKinds::all());

/// As find_small_fis, restricted to occurrences that contain at least one of
/// `anchors`.
std::optional<ForbiddenSubgraph> find_small_fis_touching(const Graph& g, std::span<const VertexId> anchors,
                                                         SmallFisKinds kinds = SmallFisKinds::all());

/// True iff `g` has no hole.
bool is_chordal(const Graph& g);

/// A shortest hole, or nullopt when `g` is chordal.
std::optional<ForbiddenSubgraph> find_hole(const Graph& g);

/// Some claw, net, tent or hole; nullopt exactly when `g` is a unit interval graph.
std::optional<ForbiddenSubgraph> find_any_fis(const Graph& g);

/// True iff `f` names live, distinct vertices whose induced subgraph is the
/// claimed pattern with the vertices in the roles their positions assign.
bool validate_certificate(const Graph& g, const ForbiddenSubgraph& f);

/// Rotates/reflects a cycle listing into the canonical hole order.
VertexList canonical_cycle(VertexList cycle);

} // namespace uivd
