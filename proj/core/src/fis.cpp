#include <uivd/error.hpp>
#include <uivd/fis.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <utility>

namespace uivd {

std::string_view to_string(FisKind kind)
{
    switch (kind) {
    case FisKind::Claw: return "claw";
    case FisKind::Net: return "net";
    case FisKind::Tent: return "tent";
    case FisKind::Hole: return "hole";
    }
    return "?";
}

namespace
{
    using Accept = std::function<bool(const ForbiddenSubgraph&)>;

    template <typename Fn>
    bool for_each_bit(const VertexBits& bits, Fn&& fn)
    {
        for (auto i = bits.find_first(); i != VertexBits::npos; i = bits.find_next(i))
            if (fn(vertex(i)))
                return true;
        return false;
    }

    /// Visits the set bits strictly above `after`.
    template <typename Fn>
    bool for_each_bit_above(const VertexBits& bits, VertexId after, Fn&& fn)
    {
        for (auto i = bits.find_next(index(after)); i != VertexBits::npos; i = bits.find_next(i))
            if (fn(vertex(i)))
                return true;
        return false;
    }

    std::optional<ForbiddenSubgraph> scan_claws(const Graph& g, const Accept& accept)
    {
        std::optional<ForbiddenSubgraph> found;
        for (VertexId c : g.vertices()) {
            const auto& around = g.neighbor_bits(c);
            if (g.degree(c) < 3)
                continue;
            bool done = for_each_bit(around, [&](VertexId l1) {
                VertexBits second = around - g.neighbor_bits(l1);
                return for_each_bit_above(second, l1, [&](VertexId l2) {
                    VertexBits third = second - g.neighbor_bits(l2);
                    return for_each_bit_above(third, l2, [&](VertexId l3) {
                        ForbiddenSubgraph f{FisKind::Claw, {c, l1, l2, l3}};
                        if (! accept(f))
                            return false;
                        found = std::move(f);
                        return true;
                    });
                });
            });
            if (done)
                break;
        }
        return found;
    }

    /// Enumerates triangles a < b < c and an ordered triple of "attachment"
    /// candidate sets per triangle; picks one pairwise nonadjacent vertex from
    /// each set. Shared by the net and tent scans.
    template <typename CandidateFn>
    std::optional<ForbiddenSubgraph> scan_triangle_patterns(const Graph& g, FisKind kind, CandidateFn&& candidates,
                                                            const Accept& accept)
    {
        std::optional<ForbiddenSubgraph> found;
        for (VertexId a : g.vertices()) {
            bool done = false;
            for (VertexId b : g.neighbors(a)) {
                if (b < a)
                    continue;
                VertexBits thirds = g.neighbor_bits(a) & g.neighbor_bits(b);
                done = for_each_bit_above(thirds, b, [&](VertexId c) {
                    std::array<VertexBits, 3> sets = candidates(a, b, c);
                    if (sets[0].none() || sets[1].none() || sets[2].none())
                        return false;
                    return for_each_bit(sets[0], [&](VertexId p) {
                        VertexBits qs = sets[1] - g.neighbor_bits(p);
                        qs.reset(index(p));
                        return for_each_bit(qs, [&](VertexId q) {
                            VertexBits rs = sets[2] - g.neighbor_bits(p) - g.neighbor_bits(q);
                            rs.reset(index(p));
                            rs.reset(index(q));
                            return for_each_bit(rs, [&](VertexId r) {
                                ForbiddenSubgraph f{kind, {a, b, c, p, q, r}};
                                if (! accept(f))
                                    return false;
                                found = std::move(f);
                                return true;
                            });
                        });
                    });
                });
                if (done)
                    break;
            }
            if (done)
                break;
        }
        return found;
    }

    std::optional<ForbiddenSubgraph> scan_nets(const Graph& g, const Accept& accept)
    {
        return scan_triangle_patterns(
            g, FisKind::Net,
            [&](VertexId a, VertexId b, VertexId c) {
                const auto &na = g.neighbor_bits(a), &nb = g.neighbor_bits(b), &nc = g.neighbor_bits(c);
                return std::array<VertexBits, 3>{na - nb - nc, nb - na - nc, nc - na - nb};
            },
            accept);
    }

    std::optional<ForbiddenSubgraph> scan_tents(const Graph& g, const Accept& accept)
    {
        return scan_triangle_patterns(
            g, FisKind::Tent,
            [&](VertexId a, VertexId b, VertexId c) {
                const auto &na = g.neighbor_bits(a), &nb = g.neighbor_bits(b), &nc = g.neighbor_bits(c);
                std::array<VertexBits, 3> sets{(nb & nc) - na, (na & nc) - nb, (na & nb) - nc};
                sets[0].reset(index(a));
                sets[1].reset(index(b));
                sets[2].reset(index(c));
                return sets;
            },
            accept);
    }

    std::optional<ForbiddenSubgraph> scan_c4(const Graph& g, const Accept& accept)
    {
        std::optional<ForbiddenSubgraph> found;
        for (VertexId a : g.vertices()) {
            const auto& na = g.neighbor_bits(a);
            bool done = false;
            for (VertexId b : g.neighbors(a)) {
                if (b < a)
                    continue;
                VertexBits opposite = g.neighbor_bits(b) - na;
                done = for_each_bit_above(opposite, a, [&](VertexId c) {
                    VertexBits lasts = (na & g.neighbor_bits(c)) - g.neighbor_bits(b);
                    return for_each_bit_above(lasts, b, [&](VertexId d) {
                        ForbiddenSubgraph f{FisKind::Hole, {a, b, c, d}};
                        if (! accept(f))
                            return false;
                        found = std::move(f);
                        return true;
                    });
                });
                if (done)
                    break;
            }
            if (done)
                break;
        }
        return found;
    }

    std::optional<ForbiddenSubgraph> scan_c5(const Graph& g, const Accept& accept)
    {
        std::optional<ForbiddenSubgraph> found;
        for (VertexId a : g.vertices()) {
            const auto& na = g.neighbor_bits(a);
            bool done = false;
            for (VertexId b : g.neighbors(a)) {
                if (b < a)
                    continue;
                const auto& nb = g.neighbor_bits(b);
                VertexBits thirds = nb - na;
                thirds.reset(index(a));
                done = for_each_bit_above(thirds, a, [&](VertexId c) {
                    const auto& nc = g.neighbor_bits(c);
                    VertexBits fourths = nc - na - nb;
                    fourths.reset(index(a));
                    fourths.reset(index(b));
                    return for_each_bit_above(fourths, a, [&](VertexId d) {
                        VertexBits fifths = (g.neighbor_bits(d) & na) - nb - nc;
                        return for_each_bit_above(fifths, b, [&](VertexId e) {
                            ForbiddenSubgraph f{FisKind::Hole, {a, b, c, d, e}};
                            if (! accept(f))
                                return false;
                            found = std::move(f);
                            return true;
                        });
                    });
                });
                if (done)
                    break;
            }
            if (done)
                break;
        }
        return found;
    }

    std::optional<ForbiddenSubgraph> scan_small(const Graph& g, SmallFisKinds kinds, const Accept& accept)
    {
        if (kinds.claw)
            if (auto f = scan_claws(g, accept))
                return f;
        if (kinds.net)
            if (auto f = scan_nets(g, accept))
                return f;
        if (kinds.tent)
            if (auto f = scan_tents(g, accept))
                return f;
        if (kinds.c4)
            if (auto f = scan_c4(g, accept))
                return f;
        if (kinds.c5)
            if (auto f = scan_c5(g, accept))
                return f;
        return std::nullopt;
    }

    VertexList elimination_candidates(const Graph& g)
    {
        // maximum cardinality search; ties go to the smallest id
        VertexList order;
        order.reserve(g.vertex_count());
        std::vector<std::size_t> weight(g.capacity(), 0);
        VertexBits pending = g.live();
        while (pending.any()) {
            std::size_t best = pending.find_first();
            for (auto i = pending.find_next(best); i != VertexBits::npos; i = pending.find_next(i))
                if (weight[i] > weight[best])
                    best = i;
            pending.reset(best);
            order.push_back(vertex(best));
            for (VertexId w : g.neighbors(vertex(best)))
                if (pending.test(index(w)))
                    ++weight[index(w)];
        }
        return order;
    }
}

std::optional<ForbiddenSubgraph> find_small_fis(const Graph& g, SmallFisKinds kinds)
{
    return scan_small(g, kinds, [](const ForbiddenSubgraph&) { return true; });
}

std::optional<ForbiddenSubgraph> find_small_fis_touching(const Graph& g, std::span<const VertexId> anchors,
                                                         SmallFisKinds kinds)
{
    // every small obstruction has diameter at most three
    Graph local = induced_subgraph(g, ball(g, anchors, 3));
    VertexBits marked = g.make_bits();
    for (VertexId a : anchors)
        if (g.contains(a))
            marked.set(index(a));
    return scan_small(local, kinds, [&](const ForbiddenSubgraph& f) {
        return std::any_of(f.vertices.begin(), f.vertices.end(), [&](VertexId v) { return marked.test(index(v)); });
    });
}

bool is_chordal(const Graph& g)
{
    VertexList order = elimination_candidates(g);
    std::vector<std::size_t> position(g.capacity(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[index(order[i])] = i;
    VertexBits earlier = g.make_bits();
    for (VertexId v : order) {
        // neighbors numbered before v must form a clique; checking them
        // against the latest of them suffices for an MCS order
        VertexBits before = g.neighbor_bits(v) & earlier;
        if (before.count() > 1) {
            std::size_t latest = before.find_first();
            for (auto i = before.find_next(latest); i != VertexBits::npos; i = before.find_next(i))
                if (position[i] > position[latest])
                    latest = i;
            before.reset(latest);
            if (! before.is_subset_of(g.neighbor_bits(vertex(latest))))
                return false;
        }
        earlier.set(index(v));
    }
    return true;
}

std::optional<ForbiddenSubgraph> find_hole(const Graph& g)
{
    if (is_chordal(g))
        return std::nullopt;

    constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.capacity());
    std::vector<VertexId> parent(g.capacity());

    // BFS from `a` avoiding N[b] \ {a}
    auto search = [&](VertexId b, VertexId a) {
        std::fill(dist.begin(), dist.end(), unreached);
        const auto& nb = g.neighbor_bits(b);
        VertexList queue{a};
        dist[index(a)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                if (w == b || nb.test(index(w)) || dist[index(w)] != unreached)
                    continue;
                dist[index(w)] = dist[index(u)] + 1;
                parent[index(w)] = u;
                queue.push_back(w);
            }
        }
    };

    std::size_t best_len = unreached;
    VertexId best_b{}, best_a{}, best_c{}, best_w{};
    for (VertexId b : g.vertices()) {
        const auto& nb = g.neighbor_bits(b);
        for (VertexId a : g.neighbors(b)) {
            search(b, a);
            for (VertexId c : g.neighbors(b)) {
                if (c == a || g.adjacent(a, c))
                    continue;
                for (VertexId w : g.neighbors(c)) {
                    if (w == b || nb.test(index(w)) || dist[index(w)] == unreached)
                        continue;
                    std::size_t len = dist[index(w)] + 3;
                    if (len < best_len) {
                        best_len = len;
                        best_b = b, best_a = a, best_c = c, best_w = w;
                    }
                }
            }
            if (best_len == 4)
                break;
        }
        if (best_len == 4)
            break;
    }
    if (best_len == unreached)
        throw InternalError("find_hole: chordality test failed but no hole was found");

    search(best_b, best_a);
    VertexList tail;
    for (VertexId u = best_w; u != best_a; u = parent[index(u)])
        tail.push_back(u);
    VertexList cycle{best_b, best_a};
    cycle.insert(cycle.end(), tail.rbegin(), tail.rend());
    cycle.push_back(best_c);
    return ForbiddenSubgraph{FisKind::Hole, canonical_cycle(std::move(cycle))};
}

std::optional<ForbiddenSubgraph> find_any_fis(const Graph& g)
{
    if (auto f = find_small_fis(g, {true, true, true, false, false}))
        return f;
    return find_hole(g);
}

VertexList canonical_cycle(VertexList cycle)
{
    if (cycle.size() < 3)
        return cycle;
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

namespace
{
    using Pattern = std::vector<std::pair<std::size_t, std::size_t>>;

    Pattern pattern_edges(FisKind kind, std::size_t size)
    {
        switch (kind) {
        case FisKind::Claw: return {{0, 1}, {0, 2}, {0, 3}};
        case FisKind::Net: return {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
        case FisKind::Tent: return {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1}};
        case FisKind::Hole: {
            Pattern p;
            for (std::size_t i = 0; i < size; ++i)
                p.emplace_back(i, (i + 1) % size);
            return p;
        }
        }
        return {};
    }

    std::size_t pattern_size(FisKind kind)
    {
        switch (kind) {
        case FisKind::Claw: return 4;
        case FisKind::Net:
        case FisKind::Tent: return 6;
        case FisKind::Hole: return 0;
        }
        return 0;
    }
}

bool validate_certificate(const Graph& g, const ForbiddenSubgraph& f)
{
    const auto& vs = f.vertices;
    std::size_t n = vs.size();
    if (f.kind == FisKind::Hole ? n < 4 : n != pattern_size(f.kind))
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (! g.contains(vs[i]))
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (vs[i] == vs[j])
                return false;
    }
    std::vector<std::vector<bool>> expected(n, std::vector<bool>(n, false));
    for (auto [i, j] : pattern_edges(f.kind, n))
        expected[i][j] = expected[j][i] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(vs[i], vs[j]) != expected[i][j])
                return false;
    return true;
}

} // namespace uivd
