#include <uivd/error.hpp>
#include <uivd/picker.hpp>

#include <algorithm>
#include <functional>

namespace uivd {

namespace
{
    using Filter = std::function<bool(VertexId)>;

    VertexList select(const VertexList& block, const Filter& keep)
    {
        VertexList out;
        for (VertexId v : block)
            if (keep(v))
                out.push_back(v);
        return out;
    }

    VertexList first(const VertexList& vs, std::size_t c)
    {
        return VertexList(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(std::min(c, vs.size())));
    }

    VertexList last(const VertexList& vs, std::size_t c)
    {
        return VertexList(vs.end() - static_cast<std::ptrdiff_t>(std::min(c, vs.size())), vs.end());
    }

    VertexList first_and_last(const VertexList& vs, std::size_t c)
    {
        if (vs.size() <= 2 * c)
            return vs;
        VertexList out = first(vs, c);
        VertexList tail = last(vs, c);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }

    std::size_t quota(const ReductionState& s)
    {
        return static_cast<std::size_t>(s.instance.budget) + 1;
    }

    /// Merges `more` into the ordering-ordered list `into`.
    void merge_in_order(VertexList& into, const VertexList& more, const std::vector<std::size_t>& pos)
    {
        into.insert(into.end(), more.begin(), more.end());
        auto by_pos = [&](VertexId a, VertexId b) { return pos[index(a)] < pos[index(b)]; };
        std::sort(into.begin(), into.end(), by_pos);
        into.erase(std::unique(into.begin(), into.end()), into.end());
    }

    std::vector<std::size_t> positions(const ReductionState& s)
    {
        std::vector<std::size_t> pos(s.instance.graph.capacity(), 0);
        for (std::size_t j = 0; j < s.ordering.order.size(); ++j)
            pos[index(s.ordering.order[j])] = j;
        return pos;
    }
}

std::vector<VertexList> pick_k0(const ReductionState& s)
{
    const Graph& g = s.instance.graph;
    const std::size_t c = quota(s);
    const auto pos = positions(s);
    const auto& members = s.modulator.members();
    std::vector<VertexList> out;
    for (const VertexList& block : s.partition.blocks()) {
        VertexList picked = first_and_last(block, c);
        VertexList free = select(block, [&](VertexId v) {
            return std::none_of(members.begin(), members.end(), [&](VertexId x) { return g.adjacent(v, x); });
        });
        merge_in_order(picked, first_and_last(free, c), pos);
        for (VertexId x : members)
            merge_in_order(picked, first_and_last(select(block, [&](VertexId v) { return g.adjacent(v, x); }), c), pos);
        out.push_back(std::move(picked));
    }
    return out;
}

void pick_k1(const ReductionState& s, PickReport& r)
{
    const Graph& g = s.instance.graph;
    const std::size_t c = quota(s);
    const auto pos = positions(s);
    const auto& members = s.modulator.members();
    for (std::size_t i = 0; i < s.partition.size(); ++i) {
        const VertexList& block = s.partition.block(i);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                VertexId x = members[a], y = members[b];
                auto pattern_set = [&](bool want_x, bool want_y) {
                    return first_and_last(select(block,
                                                 [&](VertexId v) {
                                                     return g.adjacent(v, x) == want_x && g.adjacent(v, y) == want_y;
                                                 }),
                                          c);
                };
                r.k1[{i, x, y, PairPattern::Both}] = pattern_set(true, true);
                r.k1[{i, x, y, PairPattern::OnlyFirst}] = pattern_set(true, false);
                r.k1[{i, x, y, PairPattern::OnlySecond}] = pattern_set(false, true);
                r.k1[{i, x, y, PairPattern::Neither}] = pattern_set(false, false);
            }
        if (members.size() < 2)
            continue;
        for (VertexId x : members) {
            VertexList pool;
            for (VertexId y : members) {
                if (y == x)
                    continue;
                VertexId lo = std::min(x, y), hi = std::max(x, y);
                // K(x, y) and K(x, not y) in the stored (lo, hi) orientation
                PairPattern only_x = x == lo ? PairPattern::OnlyFirst : PairPattern::OnlySecond;
                merge_in_order(pool, r.k1.at({i, lo, hi, PairPattern::Both}), pos);
                merge_in_order(pool, r.k1.at({i, lo, hi, only_x}), pos);
            }
            r.k1x[{i, x}] = first_and_last(pool, c);
        }
    }
}

namespace
{
    /// Shared driver for the three one-sided categories. For each x, block i
    /// and neighbor block j = i -+ 1, `probes` picks the y's from K_j and
    /// `take` picks from the class of K_i that `member` describes.
    template <class Probes, class Member>
    void one_sided(const ReductionState& s,
                   std::map<std::tuple<std::size_t, VertexId, VertexId>, VertexList>& into,
                   Probes probes, Member member, bool left_takes_last)
    {
        const Graph& g = s.instance.graph;
        const std::size_t c = quota(s);
        const std::size_t t = s.partition.size();
        for (VertexId x : s.modulator.members())
            for (std::size_t i = 0; i < t; ++i) {
                const VertexList& block = s.partition.block(i);
                for (int side : {-1, +1}) {
                    if ((side < 0 && i == 0) || (side > 0 && i + 1 == t))
                        continue;
                    const VertexList& other = s.partition.block(side < 0 ? i - 1 : i + 1);
                    for (VertexId y : probes(g, x, other, side, c)) {
                        VertexList cls = select(block, [&](VertexId v) { return member(g, x, y, v); });
                        bool take_last = side < 0 ? left_takes_last : ! left_takes_last;
                        into[{i, x, y}] = take_last ? last(cls, c) : first(cls, c);
                    }
                }
            }
    }
}

void pick_k2(const ReductionState& s, PickReport& r)
{
    // y: last k+1 non-neighbors of x on the left, first k+1 on the right;
    // picks: common neighbors of x and y
    one_sided(
        s, r.k2,
        [](const Graph& g, VertexId x, const VertexList& other, int side, std::size_t c) {
            VertexList non = select(other, [&](VertexId w) { return ! g.adjacent(w, x); });
            return side < 0 ? last(non, c) : first(non, c);
        },
        [](const Graph& g, VertexId x, VertexId y, VertexId v) { return g.adjacent(v, x) && g.adjacent(v, y); },
        true);
}

void pick_k3(const ReductionState& s, PickReport& r)
{
    // y: first k+1 neighbors of x on the left, last k+1 on the right;
    // picks: neighbors of x but not of y
    one_sided(
        s, r.k3,
        [](const Graph& g, VertexId x, const VertexList& other, int side, std::size_t c) {
            VertexList nb = select(other, [&](VertexId w) { return g.adjacent(w, x); });
            return side < 0 ? first(nb, c) : last(nb, c);
        },
        [](const Graph& g, VertexId x, VertexId y, VertexId v) { return g.adjacent(v, x) && ! g.adjacent(v, y); },
        false);
}

void pick_k4(const ReductionState& s, PickReport& r)
{
    // y: last k+1 neighbors of x on the left, first k+1 on the right;
    // picks: neighbors of y but not of x
    one_sided(
        s, r.k4,
        [](const Graph& g, VertexId x, const VertexList& other, int side, std::size_t c) {
            VertexList nb = select(other, [&](VertexId w) { return g.adjacent(w, x); });
            return side < 0 ? last(nb, c) : first(nb, c);
        },
        [](const Graph& g, VertexId x, VertexId y, VertexId v) { return g.adjacent(v, y) && ! g.adjacent(v, x); },
        true);
}

VertexList pick_v0(const ReductionState& s)
{
    const Graph& g = s.instance.graph;
    const std::size_t c = quota(s);
    const auto& members = s.modulator.members();
    VertexList rest = s.ordering.order;
    std::sort(rest.begin(), rest.end());

    VertexList out;
    auto take = [&](const Filter& keep) {
        std::size_t got = 0;
        for (VertexId v : rest) {
            if (got == c)
                break;
            if (keep(v)) {
                out.push_back(v);
                ++got;
            }
        }
    };
    const std::size_t m = members.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t d = b + 1; d < m; ++d) {
                std::array<VertexId, 3> tri{members[a], members[b], members[d]};
                int edges = g.adjacent(tri[0], tri[1]) + g.adjacent(tri[0], tri[2]) + g.adjacent(tri[1], tri[2]);
                if (edges == 0) {
                    take([&](VertexId v) {
                        return g.adjacent(v, tri[0]) && g.adjacent(v, tri[1]) && g.adjacent(v, tri[2]);
                    });
                } else if (edges == 2) {
                    std::size_t center = 0;
                    for (std::size_t q = 0; q < 3; ++q)
                        if (g.adjacent(tri[q], tri[(q + 1) % 3]) && g.adjacent(tri[q], tri[(q + 2) % 3]))
                            center = q;
                    take([&](VertexId v) {
                        return g.adjacent(v, tri[center]) && ! g.adjacent(v, tri[(center + 1) % 3]) &&
                               ! g.adjacent(v, tri[(center + 2) % 3]);
                    });
                }
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PickReport pick(const ReductionState& s)
{
    PickReport r;
    r.k0 = pick_k0(s);
    pick_k1(s, r);
    pick_k2(s, r);
    pick_k3(s, r);
    pick_k4(s, r);
    r.v0 = pick_v0(s);

    VertexBits seen = s.instance.graph.make_bits();
    auto add = [&](const VertexList& vs) {
        for (VertexId v : vs)
            seen.set(index(v));
    };
    for (const auto& b : r.k0)
        add(b);
    for (const auto& [key, vs] : r.k1)
        add(vs);
    for (const auto& [key, vs] : r.k1x)
        add(vs);
    for (const auto* cat : {&r.k2, &r.k3, &r.k4})
        for (const auto& [key, vs] : *cat)
            add(vs);
    add(r.v0);
    r.all = to_list(seen);
    return r;
}

VertexList block_picks(const PickReport& r, std::size_t i)
{
    VertexList out = r.k0.at(i);
    auto add = [&](std::size_t block, const VertexList& vs) {
        if (block == i)
            out.insert(out.end(), vs.begin(), vs.end());
    };
    for (const auto& [key, vs] : r.k1)
        add(std::get<0>(key), vs);
    for (const auto& [key, vs] : r.k1x)
        add(std::get<0>(key), vs);
    for (const auto* cat : {&r.k2, &r.k3, &r.k4})
        for (const auto& [key, vs] : *cat)
            add(std::get<0>(key), vs);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t block_pick_bound(std::size_t modulator_size, int k)
{
    const std::size_t m = modulator_size, kk = static_cast<std::size_t>(k);
    return 10 * (m * m + m * kk + 1) * (kk + 1);
}

Kernel assemble_kernel(const ReductionState& s, const PickReport& r)
{
    const Graph& g = s.instance.graph;
    VertexBits keep = g.make_bits(r.all);
    for (VertexId x : s.modulator.members())
        keep.set(index(x));
    for (VertexId v : r.all)
        if (! g.contains(v) || s.modulator.contains(v))
            throw InternalError("assemble_kernel: pick outside V(G) - M");

    Kernel k;
    k.original_ids = to_list(keep);
    std::vector<std::size_t> slot(g.capacity(), 0);
    for (std::size_t j = 0; j < k.original_ids.size(); ++j)
        slot[index(k.original_ids[j])] = j;
    Graph h(k.original_ids.size());
    for (VertexId u : k.original_ids)
        for (VertexId w : g.neighbors(u))
            if (u < w && keep.test(index(w)))
                h.add_edge(vertex(slot[index(u)]), vertex(slot[index(w)]));
    k.instance = Instance(std::move(h), s.instance.budget);
    return k;
}

} // namespace uivd
