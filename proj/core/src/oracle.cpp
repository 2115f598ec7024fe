#include <uivd/fis.hpp>
#include <uivd/oracle.hpp>

#include <algorithm>

namespace uivd {

namespace
{
    std::optional<ForbiddenSubgraph> obstruction(const Graph& g)
    {
        if (auto f = find_small_fis(g))
            return f;
        return find_hole(g);
    }

    bool branch(const Graph& g, int budget, VertexList& chosen)
    {
        auto f = obstruction(g);
        if (! f)
            return true;
        if (budget == 0)
            return false;
        for (VertexId v : f->vertices) {
            Graph h = g;
            h.remove_vertex(v);
            chosen.push_back(v);
            if (branch(h, budget - 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
}

std::optional<Solution> oracle_solve(const Instance& inst)
{
    VertexList chosen;
    if (! branch(inst.graph, inst.budget, chosen))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return Solution{std::move(chosen)};
}

std::size_t oracle_opt(const Graph& g)
{
    for (int d = 0;; ++d)
        if (oracle_solve(Instance(g, d)))
            return static_cast<std::size_t>(d);
}

} // namespace uivd
