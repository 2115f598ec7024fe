#include "brute.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace brute {

using uivd::Graph;
using uivd::VertexId;

Small from_graph(const Graph& g)
{
    Small s;
    s.ids = g.vertices();
    s.n = static_cast<int>(s.ids.size());
    s.adj.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && g.adjacent(s.ids[i], s.ids[j]))
                s.adj[i] |= std::uint64_t{1} << j;
    return s;
}

Graph from_pattern(int n, std::uint64_t pattern)
{
    Graph g(static_cast<std::size_t>(n));
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (pattern >> bit & 1)
                g.add_edge(uivd::vertex(i), uivd::vertex(j));
    return g;
}

namespace
{
    using Edges = std::vector<std::pair<int, int>>;

    const Edges claw_edges{{0, 1}, {0, 2}, {0, 3}};
    const Edges net_edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
    // inner triangle 0 1 2; outer 3 opposite 0 (so adjacent to 1, 2), etc.
    const Edges tent_edges{{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1}};

    bool same_as(const Small& s, const std::vector<int>& vs, const Edges& pattern)
    {
        const int p = static_cast<int>(vs.size());
        std::vector<int> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        std::array<std::array<bool, 8>, 8> want{};
        for (auto [a, b] : pattern)
            want[a][b] = want[b][a] = true;
        do {
            bool ok = true;
            for (int a = 0; a < p && ok; ++a)
                for (int b = a + 1; b < p && ok; ++b)
                    ok = static_cast<bool>(s.adj[vs[perm[a]]] >> vs[perm[b]] & 1) == want[a][b];
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    template <class F>
    bool any_subset_of_size(int n, int size, F f)
    {
        if (size > n)
            return false;
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            if (f(pick))
                return true;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i)
                --i;
            if (i < 0)
                return false;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    std::vector<int> degrees_within(const Small& s, const std::vector<int>& vs)
    {
        std::uint64_t mask = 0;
        for (int v : vs)
            mask |= std::uint64_t{1} << v;
        std::vector<int> d;
        for (int v : vs)
            d.push_back(std::popcount(s.adj[v] & mask));
        std::sort(d.begin(), d.end());
        return d;
    }

    bool has_pattern(const Small& s, const Edges& pattern, int size)
    {
        Small shape;
        shape.n = size;
        shape.adj.assign(size, 0);
        for (auto [a, b] : pattern) {
            shape.adj[a] |= std::uint64_t{1} << b;
            shape.adj[b] |= std::uint64_t{1} << a;
        }
        std::vector<int> all(size);
        std::iota(all.begin(), all.end(), 0);
        const auto want = degrees_within(shape, all);
        return any_subset_of_size(s.n, size, [&](const std::vector<int>& vs) {
            return degrees_within(s, vs) == want && same_as(s, vs, pattern);
        });
    }

    bool is_hole_mask(const Small& s, std::uint64_t mask)
    {
        if (std::popcount(mask) < 4)
            return false;
        for (std::uint64_t m = mask; m; m &= m - 1)
            if (std::popcount(s.adj[std::countr_zero(m)] & mask) != 2)
                return false;
        // 2-regular: a hole iff connected
        std::uint64_t seen = mask & (~mask + 1), frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= s.adj[std::countr_zero(m)] & mask;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == mask;
    }

    Small restrict_to(const Small& s, std::uint64_t keep)
    {
        Small r;
        std::vector<int> map(s.n, -1);
        for (int v = 0; v < s.n; ++v)
            if (keep >> v & 1) {
                map[v] = r.n++;
                r.ids.push_back(s.ids.empty() ? uivd::vertex(v) : s.ids[v]);
            }
        r.adj.assign(r.n, 0);
        for (int v = 0; v < s.n; ++v)
            if (map[v] >= 0)
                for (int w = 0; w < s.n; ++w)
                    if (map[w] >= 0 && (s.adj[v] >> w & 1))
                        r.adj[map[v]] |= std::uint64_t{1} << map[w];
        return r;
    }
}

bool has_claw(const Small& s)
{
    return has_pattern(s, claw_edges, 4);
}

bool has_net(const Small& s)
{
    return has_pattern(s, net_edges, 6);
}

bool has_tent(const Small& s)
{
    return has_pattern(s, tent_edges, 6);
}

bool has_hole(const Small& s)
{
    const std::uint64_t full = s.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n) - 1;
    for (std::uint64_t mask = 0;; ++mask) {
        if (is_hole_mask(s, mask))
            return true;
        if (mask == full)
            return false;
    }
}

bool is_unit_interval(const Small& s)
{
    return ! has_claw(s) && ! has_net(s) && ! has_tent(s) && ! has_hole(s);
}

std::optional<int> opt(const Small& s, int max_d)
{
    for (int d = 0; d <= std::min(max_d, s.n); ++d) {
        bool found = any_subset_of_size(s.n, d, [&](const std::vector<int>& drop) {
            std::uint64_t keep = s.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n) - 1;
            for (int v : drop)
                keep &= ~(std::uint64_t{1} << v);
            return is_unit_interval(restrict_to(s, keep));
        });
        if (found)
            return d;
    }
    return std::nullopt;
}

bool induces(const Graph& g, uivd::FisKind kind, const uivd::VertexList& vs)
{
    for (VertexId v : vs)
        if (! g.contains(v))
            return false;
    uivd::VertexList sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    Small s = from_graph(uivd::induced_subgraph(g, vs));
    std::vector<int> all(s.n);
    std::iota(all.begin(), all.end(), 0);
    switch (kind) {
    case uivd::FisKind::Claw: return s.n == 4 && same_as(s, all, claw_edges);
    case uivd::FisKind::Net: return s.n == 6 && same_as(s, all, net_edges);
    case uivd::FisKind::Tent: return s.n == 6 && same_as(s, all, tent_edges);
    case uivd::FisKind::Hole: return s.n >= 4 && is_hole_mask(s, (std::uint64_t{1} << s.n) - 1);
    }
    return false;
}

int hop_distance(const Small& s, int a, int b)
{
    std::uint64_t seen = std::uint64_t{1} << a, frontier = seen;
    for (int d = 0; frontier; ++d) {
        if (seen >> b & 1)
            return d;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= s.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return -1;
}

} // namespace brute
