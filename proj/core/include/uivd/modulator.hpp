#pragma once

#include <uivd/fis.hpp>
#include <uivd/graph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace uivd {

/// Deletion set whose removal leaves a unit interval graph, built in two
/// phases: phase 1 swallows vertex-disjoint claws, nets, tents, C4s and C5s
/// whole; phase 2 is a minimum hole hitting set of what remains.
class Modulator {
public:
    struct Origin {
        /// Index into obstructions() for phase-1 members; nullopt for phase 2.
        std::optional<std::size_t> obstruction;

        bool phase1() const noexcept { return obstruction.has_value(); }
        friend bool operator==(const Origin&, const Origin&) = default;
    };

    Modulator() = default;
    Modulator(std::vector<ForbiddenSubgraph> obstructions, VertexList phase2);

    /// All members in increasing id order.
    const VertexList& members() const noexcept { return members_; }
    const std::vector<ForbiddenSubgraph>& obstructions() const noexcept { return obstructions_; }
    const VertexList& phase2() const noexcept { return phase2_; }
    VertexList phase1_members() const;

    std::size_t size() const noexcept { return members_.size(); }
    bool contains(VertexId v) const;
    /// Throws DomainError if `v` is not a member.
    Origin origin(VertexId v) const;

    friend bool operator==(const Modulator&, const Modulator&) = default;

private:
    std::vector<ForbiddenSubgraph> obstructions_;
    VertexList phase2_;
    VertexList members_;
};

/// Two-phase approximation; at most six times the optimum.
Modulator approximate(const Graph& g);

/// Minimum set S with g - S chordal. Requires `g` to contain no claw, net,
/// tent, C4 or C5 (then chordal means unit interval); throws DomainError
/// naming the small obstruction otherwise.
VertexList phase2_exact_hole_hitting(const Graph& g);

/// Rebuilds the modulator after member `v` was deleted; `g_after` is the
/// graph without `v`. Phase-2 members are simply recomputed. If `v` came
/// from a phase-1 obstruction X, X is dropped and phase 1 resumes on the small
/// obstructions through X \ {v} before phase 2 is recomputed.
Modulator repair_after_vertex_deletion(const Graph& g_after, const Modulator& m, VertexId v);

/// Rebuilds phase 2 after a contraction that did not touch any member.
///
/// `touched` lists the endpoints of added edges. Phase-1 obstructions are kept;
/// should a small obstruction appear near `touched`, it is absorbed into
/// phase 1 before phase 2 is recomputed.
Modulator repair_after_contraction(const Graph& g_after, const Modulator& m, const VertexList& touched = {});

/// Checks the phase-1 structure: obstructions are valid induced small
/// obstructions of `g`, pairwise disjoint, and the members are exactly their
/// union plus phase 2.
bool validate_modulator_structure(const Graph& g, const Modulator& m);

} // namespace uivd
