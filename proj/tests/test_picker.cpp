#include "instances.hpp"

#include <uivd/error.hpp>
#include <uivd/harness.hpp>
#include <uivd/oracle.hpp>
#include <uivd/picker.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace uivd;
using fixtures::PickingExample;
using fixtures::V;

namespace {

VertexList vs(std::initializer_list<int> one_based)
{
    VertexList out;
    for (int i : one_based)
        out.push_back(PickingExample::v(i));
    return out;
}

VertexList sorted(VertexList v)
{
    std::sort(v.begin(), v.end());
    return v;
}

ReductionState example_state()
{
    auto ex = fixtures::picking_example();
    return ReductionState::build_with_ordering(Instance(ex.graph, 2), Modulator({}, {ex.x1, ex.x2}), ex.ordering);
}

ProperIntervalOrdering identity_order(std::size_t n)
{
    ProperIntervalOrdering o;
    for (std::size_t i = 0; i < n; ++i)
        o.order.push_back(V(i));
    return o;
}

} // namespace

TEST(Example, HasTwoBlocks)
{
    ReductionState s = example_state();
    ASSERT_EQ(s.partition.size(), 2u);
    EXPECT_EQ(s.partition.block(0), vs({1, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(s.partition.block(1).front(), PickingExample::v(10));
    EXPECT_EQ(s.partition.block(1).back(), PickingExample::v(25));
}

TEST(Example, PairPatternClasses)
{
    ReductionState s = example_state();
    PickReport r;
    pick_k1(s, r);
    PickingExample ex;
    EXPECT_EQ(r.k1.at({1, ex.x1, ex.x2, PairPattern::Both}), vs({10, 12, 13, 18, 21, 24}));
    EXPECT_EQ(r.k1.at({1, ex.x1, ex.x2, PairPattern::OnlyFirst}), VertexList{});
    EXPECT_EQ(r.k1.at({1, ex.x1, ex.x2, PairPattern::OnlySecond}), vs({14, 23}));
    EXPECT_EQ(r.k1.at({1, ex.x1, ex.x2, PairPattern::Neither}), vs({11, 15, 16, 20, 22, 25}));
}

TEST(Example, CommonNeighborCategory)
{
    ReductionState s = example_state();
    PickReport r;
    pick_k2(s, r);
    PickingExample ex;
    EXPECT_EQ(r.k2.at({1, ex.x2, PickingExample::v(6)}), vs({12, 13, 14}));
    EXPECT_EQ(r.k2.at({0, ex.x2, PickingExample::v(15)}), vs({7}));
}

TEST(Example, XButNotYCategory)
{
    ReductionState s = example_state();
    PickReport r;
    pick_k3(s, r);
    PickingExample ex;
    EXPECT_EQ(r.k3.at({1, ex.x1, PickingExample::v(4)}), vs({13, 18, 21}));
    EXPECT_EQ(r.k3.at({0, ex.x1, PickingExample::v(18)}), vs({4, 6}));
}

TEST(Example, YButNotXCategory)
{
    ReductionState s = example_state();
    PickReport r;
    pick_k4(s, r);
    PickingExample ex;
    EXPECT_EQ(r.k4.at({1, ex.x1, PickingExample::v(6)}), vs({15, 16, 17}));
    EXPECT_EQ(r.k4.at({1, ex.x1, PickingExample::v(8)}), vs({19, 20, 22}));
}

TEST(Example, KernelKeepsEveryListedVertex)
{
    ReductionState s = example_state();
    PickReport r = pick(s);
    Kernel k = assemble_kernel(s, r);
    PickingExample ex;
    VertexList listed = vs({10, 12, 13, 18, 21, 24, 14, 23, 11, 15, 16, 20, 22, 25, 7, 4, 6, 17, 19});
    listed.push_back(ex.x1);
    listed.push_back(ex.x2);
    for (VertexId v : listed)
        EXPECT_TRUE(std::binary_search(k.original_ids.begin(), k.original_ids.end(), v)) << v;
    EXPECT_EQ(k.instance.budget, 2);
    EXPECT_EQ(k.instance.graph.vertex_count(), k.original_ids.size());
}

TEST(K0, SmallBlockIsTakenWhole)
{
    Graph g = fixtures::clique(3);
    ReductionState s = ReductionState::build(Instance(g, 1), Modulator());
    auto k0 = pick_k0(s);
    ASSERT_EQ(k0.size(), 1u);
    EXPECT_EQ(sorted(k0[0]), (VertexList{V(0), V(1), V(2)}));
}

TEST(K0, LargeBlockGivesFirstAndLast)
{
    Graph g = fixtures::clique(10);
    ReductionState s = ReductionState::build_with_ordering(Instance(g, 1), Modulator(), identity_order(10));
    auto k0 = pick_k0(s);
    EXPECT_EQ(k0[0], (VertexList{V(0), V(1), V(8), V(9)}));
}

TEST(K0, NonadjacentAndNeighborClasses)
{
    // block 0..9, x = 10 sees 3..7
    Graph g(11);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            g.add_edge(V(i), V(j));
    for (int i = 3; i <= 7; ++i)
        g.add_edge(V(10), V(i));
    ReductionState s = ReductionState::build_with_ordering(Instance(g, 0), Modulator({}, {V(10)}), identity_order(10));
    auto k0 = pick_k0(s);
    // ends {0, 9}; free {0, 9}; neighbors {3, 7}
    EXPECT_EQ(k0[0], (VertexList{V(0), V(3), V(7), V(9)}));
}

TEST(V0, NeedsThreeMembers)
{
    ReductionState s = example_state();
    EXPECT_TRUE(pick_v0(s).empty());
}

TEST(V0, IndependentTripleAndPathTriple)
{
    // members 0, 1, 2 independent; common neighbors 3, 4; far vertex 5
    Graph g(6);
    for (int x : {0, 1, 2})
        for (int v : {3, 4})
            g.add_edge(V(x), V(v));
    g.add_edge(V(3), V(4));
    g.add_edge(V(4), V(5));
    Modulator m({}, {V(0), V(1), V(2)});
    ReductionState s = ReductionState::build(Instance(g, 2), m);
    EXPECT_EQ(pick_v0(s), (VertexList{V(3), V(4)}));

    // triangle in M contributes nothing
    Graph t = g;
    t.add_edge(V(0), V(1));
    t.add_edge(V(0), V(2));
    t.add_edge(V(1), V(2));
    EXPECT_TRUE(pick_v0(ReductionState::build(Instance(t, 2), m)).empty());

    // induced path 1 - 0 - 2: vertices seeing 0 only
    Graph p(7);
    p.add_edge(V(0), V(1));
    p.add_edge(V(0), V(2));
    for (int v : {3, 4, 5})
        p.add_edge(V(0), V(v));
    p.add_edge(V(1), V(6));
    p.add_edge(V(3), V(4));
    p.add_edge(V(4), V(5));
    EXPECT_EQ(pick_v0(ReductionState::build(Instance(p, 1), m)), (VertexList{V(3), V(4)}));
}

TEST(OneSided, NoProbesWithoutCandidates)
{
    // x adjacent to everything of block 0: no non-neighbor to probe with
    ReductionState s = example_state();
    PickReport r;
    pick_k2(s, r);
    for (const auto& [key, picked] : r.k2) {
        auto [i, x, y] = key;
        auto yb = s.partition.block_of(y);
        ASSERT_TRUE(yb);
        EXPECT_EQ(*yb + 1 == i || i + 1 == *yb, true);
        EXPECT_FALSE(s.instance.graph.adjacent(x, y));
        EXPECT_LE(picked.size(), 3u);
    }
}

TEST(Bound, HoldsPerBlockOnGeneratedInstances)
{
    int seen = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = generate_instance({.n = 150, .noise = 1 + seed % 3, .seed = seed, .span_ratio = 0.2});
        for (int k : {1, 2, 3}) {
            auto r = reduce_to_fixpoint(Instance(g, k));
            auto* done = std::get_if<Reduced>(&r);
            if (! done)
                continue;
            PickReport rep = pick(done->state);
            for (std::size_t i = 0; i < done->state.partition.size(); ++i)
                EXPECT_LE(block_picks(rep, i).size(), block_pick_bound(done->state.modulator.size(), k));
            for (VertexId v : rep.all) {
                EXPECT_TRUE(done->state.instance.graph.contains(v));
                EXPECT_FALSE(done->state.modulator.contains(v));
            }
            ++seen;
        }
    }
    EXPECT_GT(seen, 20);
}

TEST(Mirror, KernelSizeIsSymmetric)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = generate_instance({.n = 80, .noise = 2, .seed = seed, .span_ratio = 0.3});
        auto r = reduce_to_fixpoint(Instance(g, 2));
        auto* done = std::get_if<Reduced>(&r);
        if (! done)
            continue;
        Kernel a = assemble_kernel(done->state, pick(done->state));
        ReductionState m = done->state.mirrored();
        Kernel b = assemble_kernel(m, pick(m));
        EXPECT_EQ(a.instance.graph.vertex_count(), b.instance.graph.vertex_count()) << seed;
        EXPECT_EQ(a.original_ids, b.original_ids) << seed;
    }
}

TEST(Kernel, InducedSubgraphContainingM)
{
    Graph g = generate_instance({.n = 100, .noise = 2, .seed = 9, .span_ratio = 0.25});
    auto r = reduce_to_fixpoint(Instance(g, 2));
    ASSERT_TRUE(std::holds_alternative<Reduced>(r));
    const auto& s = std::get<Reduced>(r).state;
    PickReport rep = pick(s);
    Kernel k = assemble_kernel(s, rep);
    for (VertexId x : s.modulator.members())
        EXPECT_TRUE(std::binary_search(k.original_ids.begin(), k.original_ids.end(), x));
    for (std::size_t a = 0; a < k.original_ids.size(); ++a)
        for (std::size_t b = a + 1; b < k.original_ids.size(); ++b)
            EXPECT_EQ(k.instance.graph.adjacent(V(a), V(b)),
                      s.instance.graph.adjacent(k.original_ids[a], k.original_ids[b]));
    EXPECT_LE(k.instance.graph.vertex_count(), s.instance.graph.vertex_count());

    PickReport bad = rep;
    bad.all.push_back(s.modulator.members().front());
    std::sort(bad.all.begin(), bad.all.end());
    EXPECT_THROW(assemble_kernel(s, bad), InternalError);
}

TEST(Kernel, EquivalentToTheInputOnSmallInstances)
{
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = generate_instance({.n = 10 + seed % 7, .noise = 1 + seed % 2, .seed = seed, .span_ratio = 0.6});
        Instance inst(g, static_cast<int>(seed % 3) + 1);
        KernelizeResult run = kernelize(inst);
        bool yes = oracle_solve(inst).has_value();
        bool kyes = run.kernel && oracle_solve(run.kernel->instance).has_value();
        EXPECT_EQ(yes, kyes) << seed;
        ++checked;
    }
    EXPECT_EQ(checked, 150);
}
