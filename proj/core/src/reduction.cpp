#include <uivd/error.hpp>
#include <uivd/reduction.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace uivd {

namespace
{
    Graph without_members(const Graph& g, const Modulator& m)
    {
        return delete_vertices(g, m.members());
    }

    CliquePartition partition_of(const Graph& residual, const UnitIntervalModel& model)
    {
        return greedy_clique_partition(residual, model);
    }
}

ReductionState ReductionState::build(Instance inst, Modulator m)
{
    Graph residual = without_members(inst.graph, m);
    Recognition r = recognize(residual);
    auto* cert = std::get_if<UnitIntervalCertificate>(&r);
    if (! cert)
        throw InternalError("reduction state: G - M is not a unit interval graph");
    ReductionState s;
    s.partition = partition_of(residual, cert->model);
    s.ordering = std::move(cert->ordering);
    s.model = std::move(cert->model);
    s.instance = std::move(inst);
    s.modulator = std::move(m);
    return s;
}

ReductionState ReductionState::build_with_ordering(Instance inst, Modulator m, ProperIntervalOrdering o)
{
    Graph residual = without_members(inst.graph, m);
    ReductionState s;
    s.model = ordering_to_unit_model(residual, o);
    s.partition = partition_of(residual, s.model);
    s.ordering = std::move(o);
    s.instance = std::move(inst);
    s.modulator = std::move(m);
    return s;
}

ReductionState ReductionState::mirrored() const
{
    ReductionState s;
    s.instance = instance;
    s.modulator = modulator;
    s.ordering.order.assign(ordering.order.rbegin(), ordering.order.rend());
    s.model = ordering_to_unit_model(residual(), s.ordering);
    std::vector<VertexList> blocks(partition.blocks().rbegin(), partition.blocks().rend());
    for (auto& b : blocks)
        std::reverse(b.begin(), b.end());
    s.partition = CliquePartition(std::move(blocks), instance.graph.capacity());
    return s;
}

Graph ReductionState::residual() const
{
    return without_members(instance.graph, modulator);
}

bool validate_state(const ReductionState& s)
{
    Graph residual = s.residual();
    if (! has_umbrella_property(residual, s.ordering) || ! validate_model(residual, s.model) ||
        ! validate_partition(residual, s.partition))
        return false;
    if (s.model.ordering() != s.ordering)
        return false;
    // blocks are consecutive runs of the ordering
    std::size_t pos = 0;
    for (const auto& b : s.partition.blocks())
        for (VertexId v : b)
            if (pos >= s.ordering.order.size() || s.ordering.order[pos++] != v)
                return false;
    return pos == s.ordering.order.size();
}

AdjacencyProfile profile(const ReductionState& s)
{
    const Graph& g = s.instance.graph;
    const auto& members = s.modulator.members();
    const std::size_t t = s.partition.size();
    const std::size_t heavy = static_cast<std::size_t>(s.instance.budget) + 1;

    AdjacencyProfile p;
    p.adjacent_blocks.assign(members.size(), 0);
    p.heavy_blocks.assign(members.size(), 0);
    p.block_touches_modulator.assign(t, false);

    std::vector<std::size_t> hits(t, 0);
    std::vector<std::size_t> seen;
    for (std::size_t j = 0; j < members.size(); ++j) {
        seen.clear();
        for (VertexId w : g.neighbors(members[j])) {
            auto b = s.partition.block_of(w);
            if (! b)
                continue;
            if (hits[*b]++ == 0)
                seen.push_back(*b);
        }
        for (std::size_t b : seen) {
            p.block_touches_modulator[b] = true;
            ++p.adjacent_blocks[j];
            if (hits[b] >= heavy)
                ++p.heavy_blocks[j];
            hits[b] = 0;
        }
    }
    return p;
}

std::size_t ReductionTrace::count(int rule) const
{
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [rule](const TraceStep& st) { return st.rule == rule; }));
}

namespace
{
    RuleOutcome delete_member(const ReductionState& s, int rule, VertexId v)
    {
        RuleOutcome out;
        out.step.rule = rule;
        out.step.vertices = {v};
        out.step.k_after = s.instance.budget - 1;
        if (out.step.k_after < 0)
            return out;
        Graph g = s.instance.graph;
        g.remove_vertex(v);
        Modulator m = repair_after_vertex_deletion(g, s.modulator, v);
        out.next = ReductionState::build(Instance(std::move(g), out.step.k_after), std::move(m));
        return out;
    }
}

std::optional<RuleOutcome> rule1(const ReductionState& s)
{
    AdjacencyProfile p = profile(s);
    const std::size_t need = static_cast<std::size_t>(s.instance.budget) + 5;
    for (std::size_t j = 0; j < p.adjacent_blocks.size(); ++j)
        if (p.adjacent_blocks[j] >= need)
            return delete_member(s, 1, s.modulator.members()[j]);
    return std::nullopt;
}

std::optional<RuleOutcome> rule2(const ReductionState& s)
{
    AdjacencyProfile p = profile(s);
    for (std::size_t j = 0; j < p.heavy_blocks.size(); ++j)
        if (p.heavy_blocks[j] >= 5)
            return delete_member(s, 2, s.modulator.members()[j]);
    return std::nullopt;
}

VertexList min_vertex_separator(const Graph& g, VertexId u, VertexId v)
{
    if (! g.contains(u) || ! g.contains(v) || u == v)
        throw DomainError("min_vertex_separator: endpoints must be distinct live vertices");
    if (g.adjacent(u, v))
        throw DomainError("min_vertex_separator: endpoints are adjacent");

    // node 2w is w_in, 2w+1 is w_out; the split arc w_in -> w_out has
    // capacity 1 except at the terminals
    const std::size_t nodes = 2 * g.capacity();
    struct Arc {
        std::size_t to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<std::size_t>> out(nodes);
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    auto link = [&](std::size_t a, std::size_t b, int cap) {
        out[a].push_back(arcs.size());
        arcs.push_back({b, cap});
        out[b].push_back(arcs.size());
        arcs.push_back({a, 0});
    };
    for (VertexId w : g.vertices()) {
        std::size_t wi = index(w);
        link(2 * wi, 2 * wi + 1, (w == u || w == v) ? inf : 1);
        for (VertexId x : g.neighbors(w))
            link(2 * wi + 1, 2 * index(x), inf);
    }

    const std::size_t source = 2 * index(u) + 1, sink = 2 * index(v);
    std::vector<std::ptrdiff_t> via(nodes);
    auto search = [&] {
        std::fill(via.begin(), via.end(), -1);
        std::deque<std::size_t> queue{source};
        via[source] = std::numeric_limits<std::ptrdiff_t>::max();
        while (! queue.empty()) {
            std::size_t a = queue.front();
            queue.pop_front();
            for (std::size_t e : out[a]) {
                const Arc& arc = arcs[e];
                if (arc.cap > 0 && via[arc.to] < 0) {
                    via[arc.to] = static_cast<std::ptrdiff_t>(e);
                    queue.push_back(arc.to);
                }
            }
        }
        return via[sink] >= 0;
    };
    while (search()) {
        for (std::size_t a = sink; a != source;) {
            std::size_t e = static_cast<std::size_t>(via[a]);
            arcs[e].cap -= 1;
            arcs[e ^ 1].cap += 1;
            a = arcs[e ^ 1].to;
        }
    }
    // after the last failed search, `via` marks the source side of a min cut
    VertexList sep;
    for (VertexId w : g.vertices()) {
        std::size_t wi = index(w);
        if (via[2 * wi] >= 0 && via[2 * wi + 1] < 0)
            sep.push_back(w);
    }
    return sep;
}

std::optional<RuleOutcome> rule3(const ReductionState& s)
{
    AdjacencyProfile p = profile(s);
    const std::size_t t = s.partition.size();
    std::size_t run = 0;
    std::optional<std::size_t> mid;
    for (std::size_t b = 0; b < t; ++b) {
        run = p.block_touches_modulator[b] ? 0 : run + 1;
        if (run >= 7) {
            mid = b - 3;
            break;
        }
    }
    if (! mid)
        return std::nullopt;
    const std::size_t i = *mid;
    VertexId u = s.partition.block(i - 2).back();
    VertexId v = s.partition.block(i + 2).front();
    Graph residual = s.residual();
    VertexList sep = min_vertex_separator(residual, u, v);

    std::optional<std::size_t> chosen;
    for (std::size_t l = i - 1; l <= i + 1 && ! chosen; ++l) {
        const auto& block = s.partition.block(l);
        bool hit = std::any_of(block.begin(), block.end(), [&](VertexId w) {
            return std::binary_search(sep.begin(), sep.end(), w);
        });
        if (! hit)
            chosen = l;
    }
    if (! chosen)
        throw InternalError("rule 3: the separator meets all three middle blocks");

    Contraction c = contract_clique(s.instance.graph, s.partition, *chosen);
    RuleOutcome outcome;
    outcome.step.rule = 3;
    outcome.step.vertices = c.removed;
    std::sort(outcome.step.vertices.begin(), outcome.step.vertices.end());
    outcome.step.k_after = s.instance.budget;
    outcome.step.left_side = c.left_side;
    outcome.step.right_side = c.right_side;

    VertexList touched = c.left_side;
    touched.insert(touched.end(), c.right_side.begin(), c.right_side.end());
    Modulator m = repair_after_contraction(c.graph, s.modulator, touched);
    outcome.next = ReductionState::build(Instance(std::move(c.graph), s.instance.budget), std::move(m));
    return outcome;
}

ReductionResult reduce_from(ReductionState state)
{
    ReductionTrace trace;
    auto too_large = [](const ReductionState& s) {
        return s.modulator.size() > 6 * static_cast<std::size_t>(s.instance.budget);
    };
    if (too_large(state))
        return NoInstance{std::move(trace), "modulator larger than 6k"};
    for (;;) {
        std::optional<RuleOutcome> r = rule1(state);
        if (! r)
            r = rule2(state);
        if (! r)
            r = rule3(state);
        if (! r)
            return Reduced{std::move(state), std::move(trace)};
        trace.steps.push_back(r->step);
        if (! r->next)
            return NoInstance{std::move(trace), "budget exhausted"};
        state = std::move(*r->next);
        if (too_large(state))
            return NoInstance{std::move(trace), "modulator larger than 6k"};
    }
}

ReductionResult reduce_to_fixpoint(const Instance& inst)
{
    return reduce_from(ReductionState::build(inst, approximate(inst.graph)));
}

Instance replay_trace(const Instance& original, const ReductionTrace& trace)
{
    Graph g = original.graph;
    int k = original.budget;
    for (const TraceStep& st : trace.steps) {
        if (st.rule == 3) {
            g = apply_contraction(g, st.vertices, st.left_side, st.right_side);
        } else {
            for (VertexId v : st.vertices)
                g.remove_vertex(v);
            k -= 1;
        }
        if (st.k_after != k)
            throw DomainError("replay_trace: budget mismatch at a rule " + std::to_string(st.rule) + " step");
    }
    if (k < 0)
        throw DomainError("replay_trace: trace ends in a NO-instance");
    return Instance(std::move(g), k);
}

} // namespace uivd
