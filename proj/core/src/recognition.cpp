#include <uivd/error.hpp>
#include <uivd/recognition.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace uivd {

UnitIntervalModel::UnitIntervalModel(std::vector<Entry> entries) :
    entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.interval.left < b.interval.left; });
    std::size_t cap = 0;
    for (const auto& e : entries_)
        cap = std::max(cap, index(e.vertex) + 1);
    slot_.assign(cap, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        slot_[index(entries_[i].vertex)] = i;
}

const Interval& UnitIntervalModel::at(VertexId v) const
{
    if (index(v) >= slot_.size() || slot_[index(v)] == std::numeric_limits<std::size_t>::max())
        throw DomainError("model: no interval for vertex " + std::to_string(index(v)));
    return entries_[slot_[index(v)]].interval;
}

ProperIntervalOrdering UnitIntervalModel::ordering() const
{
    ProperIntervalOrdering o;
    o.order.reserve(entries_.size());
    for (const auto& e : entries_)
        o.order.push_back(e.vertex);
    return o;
}

CliquePartition::CliquePartition(std::vector<VertexList> blocks, std::size_t capacity) :
    blocks_(std::move(blocks)),
    owner_(capacity, -1)
{
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (VertexId v : blocks_[i]) {
            if (index(v) >= capacity || owner_[index(v)] != -1)
                throw DomainError("partition: vertex " + std::to_string(index(v)) + " out of range or repeated");
            owner_[index(v)] = static_cast<std::ptrdiff_t>(i);
        }
}

std::optional<std::size_t> CliquePartition::block_of(VertexId v) const noexcept
{
    if (index(v) >= owner_.size() || owner_[index(v)] < 0)
        return std::nullopt;
    return static_cast<std::size_t>(owner_[index(v)]);
}

namespace
{
    /// One lexicographic breadth-first sweep by partition refinement. With
    /// `previous`, ties inside the leading class go to the vertex appearing
    /// last in `previous`.
    ///
    /// Classes are linked lists of vertices kept in initial order; refining
    /// moves the pivot's neighbors (in initial order) into a new class placed
    /// just before their old one, so every split is stable.
    VertexList lex_bfs(const Graph& g, const VertexList* previous)
    {
        constexpr std::size_t nil = std::numeric_limits<std::size_t>::max();
        VertexList seq;
        if (previous)
            seq.assign(previous->rbegin(), previous->rend());
        else
            seq = g.vertices();
        const std::size_t cap = g.capacity();

        struct Class {
            std::size_t prev = nil, next = nil, head = nil, tail = nil, size = 0, stamp = nil, split = nil;
        };
        std::vector<Class> classes;
        classes.reserve(seq.size() + 1);
        std::vector<std::size_t> vprev(cap, nil), vnext(cap, nil), owner(cap, nil), rank(cap, nil);
        std::size_t first = nil;
        if (! seq.empty()) {
            classes.push_back({});
            first = 0;
        }
        for (std::size_t i = 0; i < seq.size(); ++i) {
            std::size_t v = index(seq[i]);
            rank[v] = i;
            owner[v] = 0;
            vprev[v] = i ? index(seq[i - 1]) : nil;
            vnext[v] = i + 1 < seq.size() ? index(seq[i + 1]) : nil;
        }
        if (first != nil) {
            classes[0].head = index(seq.front());
            classes[0].tail = index(seq.back());
            classes[0].size = seq.size();
        }

        auto unlink_vertex = [&](std::size_t v) {
            Class& c = classes[owner[v]];
            (vprev[v] == nil ? c.head : vnext[vprev[v]]) = vnext[v];
            (vnext[v] == nil ? c.tail : vprev[vnext[v]]) = vprev[v];
            --c.size;
            owner[v] = nil;
        };
        auto drop_if_empty = [&](std::size_t id) {
            Class& c = classes[id];
            if (c.size)
                return;
            (c.prev == nil ? first : classes[c.prev].next) = c.next;
            if (c.next != nil)
                classes[c.next].prev = c.prev;
        };

        VertexList out;
        out.reserve(seq.size());
        std::vector<std::size_t> touched;
        for (std::size_t step = 0; first != nil; ++step) {
            std::size_t lead = first;
            std::size_t v = classes[lead].head;
            unlink_vertex(v);
            drop_if_empty(lead);
            out.push_back(vertex(v));

            touched.clear();
            for (VertexId w : g.neighbors(vertex(v)))
                if (owner[index(w)] != nil)
                    touched.push_back(index(w));
            std::sort(touched.begin(), touched.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
            for (std::size_t w : touched) {
                std::size_t from = owner[w];
                if (classes[from].stamp != step) {
                    classes[from].stamp = step;
                    std::size_t id = classes.size();
                    Class fresh;
                    fresh.prev = classes[from].prev;
                    fresh.next = from;
                    classes.push_back(fresh);
                    (fresh.prev == nil ? first : classes[fresh.prev].next) = id;
                    classes[from].prev = id;
                    classes[from].split = id;
                }
                std::size_t to = classes[from].split;
                unlink_vertex(w);
                Class& c = classes[to];
                vprev[w] = c.tail;
                vnext[w] = nil;
                (c.tail == nil ? c.head : vnext[c.tail]) = w;
                c.tail = w;
                ++c.size;
                owner[w] = to;
                drop_if_empty(from);
            }
        }
        return out;
    }

    std::vector<std::size_t> positions(const Graph& g, const ProperIntervalOrdering& o)
    {
        constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> pos(g.capacity(), none);
        if (o.order.size() != g.vertex_count())
            throw DomainError("ordering does not list every live vertex exactly once");
        for (std::size_t i = 0; i < o.order.size(); ++i) {
            VertexId v = o.order[i];
            if (! g.contains(v) || pos[index(v)] != none)
                throw DomainError("ordering does not list every live vertex exactly once");
            pos[index(v)] = i;
        }
        return pos;
    }
}

std::optional<std::array<VertexId, 3>> find_umbrella_violation(const Graph& g, const ProperIntervalOrdering& o)
{
    auto pos = positions(g, o);
    for (std::size_t p = 0; p < o.order.size(); ++p) {
        VertexId v = o.order[p];
        std::size_t lo = p, hi = p;
        for (VertexId w : g.neighbors(v)) {
            lo = std::min(lo, pos[index(w)]);
            hi = std::max(hi, pos[index(w)]);
        }
        if (hi - lo == g.degree(v))
            continue;
        // closed neighborhood is not a contiguous run; locate the gap
        for (std::size_t b = lo + 1; b < hi; ++b) {
            if (b == p || g.adjacent(v, o.order[b]))
                continue;
            if (b < p)
                return std::array<VertexId, 3>{o.order[lo], o.order[b], v};
            return std::array<VertexId, 3>{v, o.order[b], o.order[hi]};
        }
    }
    return std::nullopt;
}

Recognition recognize(const Graph& g)
{
    VertexList first = lex_bfs(g, nullptr);
    VertexList second = lex_bfs(g, &first);
    ProperIntervalOrdering third{lex_bfs(g, &second)};
    if (has_umbrella_property(g, third))
        return UnitIntervalCertificate{third, ordering_to_unit_model(g, third)};
    if (auto f = find_any_fis(g))
        return *f;
    throw InternalError("recognize: sweep ordering rejected but no forbidden subgraph exists");
}

UnitIntervalModel ordering_to_unit_model(const Graph& g, const ProperIntervalOrdering& o)
{
    if (auto bad = find_umbrella_violation(g, o))
        throw CertificateError("umbrella property violated by (" + std::to_string(index((*bad)[0])) + ", " +
                               std::to_string(index((*bad)[1])) + ", " + std::to_string(index((*bad)[2])) +
                               "): outer pair adjacent, middle vertex misses one of them");
    auto pos = positions(g, o);
    const std::size_t n = o.order.size();
    if (n == 0)
        return UnitIntervalModel{};

    // reach[i]: position of the rightmost neighbor of v_i (or i itself)
    std::vector<std::size_t> reach(n);
    for (std::size_t i = 0; i < n; ++i) {
        reach[i] = i;
        for (VertexId w : g.neighbors(o.order[i]))
            reach[i] = std::max(reach[i], pos[index(w)]);
    }

    // Integer left endpoints x_i for intervals of integer length L:
    //   x_{i+1} >= x_i + 1
    //   x_{reach(i)} <= x_i + L - 1        (last neighbor still overlaps)
    //   x_{reach(i)+1} >= x_i + L + 1      (first non-neighbor clears it)
    // Longest-path relaxation; grow L until the system is feasible.
    for (std::int64_t length = static_cast<std::int64_t>(n) + 1;; length *= 2) {
        if (length > (std::int64_t{1} << 40))
            throw InternalError("ordering_to_unit_model: no integral model found");
        std::vector<std::int64_t> x(n, 0);
        bool stable = false;
        for (std::size_t pass = 0; pass <= n + 1 && ! stable; ++pass) {
            stable = true;
            auto raise = [&](std::size_t j, std::int64_t value) {
                if (x[j] < value) {
                    x[j] = value;
                    stable = false;
                }
            };
            for (std::size_t i = 0; i < n; ++i) {
                if (reach[i] > i)
                    raise(i, x[reach[i]] - (length - 1));
                if (i + 1 < n)
                    raise(i + 1, x[i] + 1);
                if (reach[i] + 1 < n)
                    raise(reach[i] + 1, x[i] + length + 1);
            }
        }
        if (! stable)
            continue;
        std::int64_t shift = *std::min_element(x.begin(), x.end());
        std::vector<UnitIntervalModel::Entry> entries;
        entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational left(x[i] - shift, length);
            entries.push_back({o.order[i], {left, Rational(x[i] - shift + length, length)}});
        }
        return UnitIntervalModel(std::move(entries));
    }
}

bool validate_model(const Graph& g, const UnitIntervalModel& m)
{
    const auto& es = m.entries();
    if (es.size() != g.vertex_count())
        return false;
    VertexBits seen = g.make_bits();
    std::vector<Rational> endpoints;
    endpoints.reserve(2 * es.size());
    for (const auto& e : es) {
        if (! g.contains(e.vertex) || seen.test(index(e.vertex)))
            return false;
        seen.set(index(e.vertex));
        if (e.interval.right - e.interval.left != Rational(1))
            return false;
        endpoints.push_back(e.interval.left);
        endpoints.push_back(e.interval.right);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        return false;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            bool meet = es[j].interval.left < es[i].interval.right;
            if (meet != g.adjacent(es[i].vertex, es[j].vertex))
                return false;
        }
    return true;
}

CliquePartition greedy_clique_partition(const Graph& g, const UnitIntervalModel& m)
{
    const auto& es = m.entries();
    if (es.size() != g.vertex_count())
        throw DomainError("greedy_clique_partition: model does not cover the graph");
    std::vector<VertexList> blocks;
    for (std::size_t i = 0; i < es.size();) {
        VertexList block{es[i].vertex};
        const Rational& sweep = es[i].interval.right;
        std::size_t j = i + 1;
        while (j < es.size() && es[j].interval.left < sweep)
            block.push_back(es[j++].vertex);
        blocks.push_back(std::move(block));
        i = j;
    }
    return CliquePartition(std::move(blocks), g.capacity());
}

bool validate_partition(const Graph& g, const CliquePartition& p)
{
    std::size_t covered = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& block = p.block(i);
        if (block.empty())
            return false;
        covered += block.size();
        for (std::size_t a = 0; a < block.size(); ++a) {
            if (! g.contains(block[a]))
                return false;
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (! g.adjacent(block[a], block[b]))
                    return false;
            for (VertexId w : g.neighbors(block[a])) {
                auto j = p.block_of(w);
                if (! j || (*j + 1 < i) || (*j > i + 1))
                    return false;
            }
        }
    }
    return covered == g.vertex_count();
}

Graph apply_contraction(const Graph& g, const VertexList& removed, const VertexList& left_side,
                        const VertexList& right_side)
{
    Graph h = delete_vertices(g, removed);
    for (VertexId a : left_side)
        for (VertexId b : right_side)
            h.add_edge(a, b);
    return h;
}

Contraction contract_clique(const Graph& g, const CliquePartition& p, std::size_t i)
{
    if (i == 0 || i + 1 >= p.size())
        throw DomainError("contract_clique: block " + std::to_string(i) + " is not interior (t = " +
                          std::to_string(p.size()) + ")");
    Contraction c;
    c.removed = p.block(i);
    VertexBits touched = g.make_bits();
    for (VertexId v : c.removed)
        touched |= g.neighbor_bits(v);
    for (VertexId v : p.block(i - 1))
        if (touched.test(index(v)))
            c.left_side.push_back(v);
    for (VertexId v : p.block(i + 1))
        if (touched.test(index(v)))
            c.right_side.push_back(v);
    std::sort(c.left_side.begin(), c.left_side.end());
    std::sort(c.right_side.begin(), c.right_side.end());
    c.graph = apply_contraction(g, c.removed, c.left_side, c.right_side);

    std::vector<VertexList> blocks = p.blocks();
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
    c.partition = CliquePartition(std::move(blocks), g.capacity());
    return c;
}

std::size_t clique_distance_lower_bound(const CliquePartition& p, VertexId u, VertexId v)
{
    auto bu = p.block_of(u), bv = p.block_of(v);
    if (! bu || ! bv)
        throw DomainError("clique_distance_lower_bound: vertex outside the partition");
    return *bu > *bv ? *bu - *bv : *bv - *bu;
}

} // namespace uivd
