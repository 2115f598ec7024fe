#include <uivd/error.hpp>
#include <uivd/modulator.hpp>

#include <algorithm>
#include <string>

namespace uivd {

Modulator::Modulator(std::vector<ForbiddenSubgraph> obstructions, VertexList phase2) :
    obstructions_(std::move(obstructions)),
    phase2_(std::move(phase2))
{
    std::sort(phase2_.begin(), phase2_.end());
    for (const auto& f : obstructions_)
        members_.insert(members_.end(), f.vertices.begin(), f.vertices.end());
    members_.insert(members_.end(), phase2_.begin(), phase2_.end());
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw InternalError("modulator: overlapping obstructions or phase-2 members");
}

VertexList Modulator::phase1_members() const
{
    VertexList out;
    for (const auto& f : obstructions_)
        out.insert(out.end(), f.vertices.begin(), f.vertices.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Modulator::contains(VertexId v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Modulator::Origin Modulator::origin(VertexId v) const
{
    for (std::size_t i = 0; i < obstructions_.size(); ++i) {
        const auto& vs = obstructions_[i].vertices;
        if (std::find(vs.begin(), vs.end(), v) != vs.end())
            return Origin{i};
    }
    if (std::binary_search(phase2_.begin(), phase2_.end(), v))
        return Origin{};
    throw DomainError("modulator: vertex " + std::to_string(index(v)) + " is not a member");
}

namespace
{
    /// Strips vertices that are simplicial in the remaining graph until none
    /// is left. A hole vertex always has two nonadjacent neighbors on the
    /// hole, so every hole survives and the hitting problem is unchanged.
    Graph hole_core(const Graph& g)
    {
        Graph h = g;
        VertexList queue = h.vertices();
        VertexBits queued = h.live();
        auto simplicial = [&](VertexId v) {
            const auto& nv = h.neighbor_bits(v);
            for (VertexId w : h.neighbors(v)) {
                VertexBits rest = nv;
                rest.reset(index(w));
                if (! rest.is_subset_of(h.neighbor_bits(w)))
                    return false;
            }
            return true;
        };
        while (! queue.empty()) {
            VertexId v = queue.back();
            queue.pop_back();
            queued.reset(index(v));
            if (! h.contains(v) || ! simplicial(v))
                continue;
            VertexList around = h.neighbors(v);
            h.remove_vertex(v);
            for (VertexId w : around)
                if (! queued.test(index(w))) {
                    queued.set(index(w));
                    queue.push_back(w);
                }
        }
        return h;
    }

    bool hit_within(const Graph& g, std::size_t budget, VertexList& chosen)
    {
        auto hole = find_hole(g);
        if (! hole)
            return true;
        if (budget == 0)
            return false;
        for (VertexId v : hole->vertices) {
            Graph h = g;
            h.remove_vertex(v);
            chosen.push_back(v);
            if (hit_within(h, budget - 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    /// Minimum hole hitting set of a graph known to be free of small obstructions.
    VertexList hit_holes(const Graph& g)
    {
        VertexList out;
        if (is_chordal(g))
            return out;
        Graph core = hole_core(g);
        for (const auto& comp : connected_components(core)) {
            Graph part = induced_subgraph(core, comp);
            if (is_chordal(part))
                continue;
            for (std::size_t budget = 1;; ++budget) {
                VertexList chosen;
                if (hit_within(part, budget, chosen)) {
                    out.insert(out.end(), chosen.begin(), chosen.end());
                    break;
                }
                if (budget > part.vertex_count())
                    throw InternalError("hole hitting exceeded the vertex count");
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Graph without(const Graph& g, const VertexList& drop)
    {
        Graph h = g;
        for (VertexId v : drop)
            if (h.contains(v))
                h.remove_vertex(v);
        return h;
    }

    void absorb(Graph& residual, std::vector<ForbiddenSubgraph>& obstructions, ForbiddenSubgraph f)
    {
        for (VertexId v : f.vertices)
            residual.remove_vertex(v);
        obstructions.push_back(std::move(f));
    }
}

Modulator approximate(const Graph& g)
{
    Graph residual = g;
    std::vector<ForbiddenSubgraph> obstructions;
    while (auto f = find_small_fis(residual))
        absorb(residual, obstructions, std::move(*f));
    return Modulator(std::move(obstructions), hit_holes(residual));
}

VertexList phase2_exact_hole_hitting(const Graph& g)
{
    if (auto f = find_small_fis(g)) {
        std::string names;
        for (VertexId v : f->vertices)
            names += (names.empty() ? "" : " ") + std::to_string(index(v));
        throw DomainError("phase2_exact_hole_hitting: graph contains a " +
                          std::string(f->kind == FisKind::Hole ? "C" + std::to_string(f->vertices.size())
                                                               : std::string(to_string(f->kind))) +
                          " on {" + names + "}");
    }
    return hit_holes(g);
}

Modulator repair_after_vertex_deletion(const Graph& g_after, const Modulator& m, VertexId v)
{
    Modulator::Origin from = m.origin(v);
    if (g_after.contains(v))
        throw DomainError("repair_after_vertex_deletion: vertex " + std::to_string(index(v)) + " is still live");

    std::vector<ForbiddenSubgraph> kept;
    VertexList anchors;
    for (std::size_t i = 0; i < m.obstructions().size(); ++i) {
        if (from.obstruction == i) {
            for (VertexId w : m.obstructions()[i].vertices)
                if (w != v)
                    anchors.push_back(w);
        } else {
            kept.push_back(m.obstructions()[i]);
        }
    }
    Graph residual = g_after;
    for (const auto& f : kept)
        for (VertexId w : f.vertices)
            residual.remove_vertex(w);

    // every small obstruction left in the residual runs through X \ {v}, and
    // they are disjoint, so at most |X| - 1 <= 5 more can be found
    for (std::size_t round = 0; ! anchors.empty(); ++round) {
        auto f = find_small_fis_touching(residual, anchors);
        if (! f)
            break;
        if (round == 6)
            throw InternalError("repair_after_vertex_deletion: more than six new obstructions");
        absorb(residual, kept, std::move(*f));
        std::erase_if(anchors, [&](VertexId w) { return ! residual.contains(w); });
    }
    return Modulator(std::move(kept), hit_holes(residual));
}

Modulator repair_after_contraction(const Graph& g_after, const Modulator& m, const VertexList& touched)
{
    for (VertexId v : m.members())
        if (! g_after.contains(v))
            throw DomainError("repair_after_contraction: member " + std::to_string(index(v)) + " was removed");
    std::vector<ForbiddenSubgraph> kept = m.obstructions();
    Graph residual = without(g_after, m.phase1_members());
    VertexList anchors = touched;
    std::erase_if(anchors, [&](VertexId w) { return ! residual.contains(w); });
    while (! anchors.empty()) {
        auto f = find_small_fis_touching(residual, anchors);
        if (! f)
            break;
        absorb(residual, kept, std::move(*f));
        std::erase_if(anchors, [&](VertexId w) { return ! residual.contains(w); });
    }
    return Modulator(std::move(kept), hit_holes(residual));
}

bool validate_modulator_structure(const Graph& g, const Modulator& m)
{
    VertexBits used = g.make_bits();
    for (const auto& f : m.obstructions()) {
        bool small = f.kind != FisKind::Hole || f.vertices.size() <= 5;
        if (! small || ! validate_certificate(g, f))
            return false;
        for (VertexId v : f.vertices) {
            if (used.test(index(v)))
                return false;
            used.set(index(v));
        }
    }
    for (VertexId v : m.phase2()) {
        if (! g.contains(v) || used.test(index(v)))
            return false;
        used.set(index(v));
    }
    return used.count() == m.size();
}

} // namespace uivd
