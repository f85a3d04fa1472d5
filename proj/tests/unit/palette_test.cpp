#include <acolor/error.hpp>
#include <acolor/palette.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace acolor;

namespace {

auto triangle_path() -> Graph
{
    // 0-1-2-3 plus chord 0-2.
    return build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
}

}

TEST(ColorSet, SetAlgebra)
{
    ColorSet a{3, 1, 2, 2};
    ColorSet b{2, 5};
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.united(b), (ColorSet{1, 2, 3, 5}));
    EXPECT_EQ(a.intersected(b), (ColorSet{2}));
    EXPECT_EQ(a.minus(b), (ColorSet{1, 3}));
    EXPECT_EQ(a.complement(5), (ColorSet{4, 5}));
}

TEST(ColorMultiset, JoinAddsMultiplicities)
{
    ColorMultiset s;
    s.add_all(ColorSet{1, 2});
    ColorMultiset t;
    t.add_all(ColorSet{2, 3});
    auto j = s.join(t);
    EXPECT_EQ(j.multiplicity(2), 2);
    EXPECT_EQ(j.cardinality(), 4);
    EXPECT_EQ(j.support(), (ColorSet{1, 2, 3}));
}

TEST(ColorMultiset, DifferenceDropsAllCopies)
{
    ColorMultiset s;
    s.add(1, 3);
    s.add(2, 1);
    auto d = multiset_diff(s, ColorSet{1});
    EXPECT_EQ(d.multiplicity(1), 0);
    EXPECT_EQ(d.cardinality(), 1);
}

TEST(PartialColoring, SeenFromIsAsymmetric)
{
    auto g = triangle_path();
    PartialColoring c(g, 5);
    c.assign(Edge::of(0, 1), 1);
    c.assign(Edge::of(1, 2), 2);
    c.assign(Edge::of(2, 3), 3);
    EXPECT_EQ(colors_at(c, 2), (ColorSet{2, 3}));
    EXPECT_EQ(seen_from(c, 1, 2), (ColorSet{3}));
    EXPECT_EQ(seen_from(c, 2, 1), (ColorSet{1}));
    // Uncolored edge: nothing to remove.
    EXPECT_EQ(seen_from(c, 0, 2), (ColorSet{2, 3}));
}

TEST(PartialColoring, AssignRejectsConflicts)
{
    auto g = triangle_path();
    PartialColoring c(g, 3);
    c.assign(Edge::of(0, 1), 1);
    try {
        c.assign(Edge::of(1, 2), 1);
        FAIL() << "expected ImproperAssignment";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImproperAssignment);
    }
    try {
        c.assign(Edge::of(1, 2), 4);
        FAIL() << "expected ColorOutOfRange";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::ColorOutOfRange);
    }
    try {
        (void) c.color(1, 3);
        FAIL() << "expected EdgeAbsent";
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::EdgeAbsent);
    }
}

TEST(PartialColoring, RecolorAndUnassign)
{
    auto g = triangle_path();
    PartialColoring c(g, 4);
    c.assign(Edge::of(0, 1), 1);
    c.assign(Edge::of(0, 1), 2);
    EXPECT_EQ(c.assigned_count(), 1u);
    EXPECT_EQ(c.color(1, 0), 2);
    c.unassign(Edge::of(1, 0));
    EXPECT_EQ(c.assigned_count(), 0u);
    EXPECT_FALSE(c.is_assigned(Edge::of(0, 1)));
}

TEST(PartialColoring, RehostingKeepsColors)
{
    auto g = triangle_path();
    PartialColoring c(g.without_edge(Edge::of(0, 2)), 4);
    c.assign(Edge::of(0, 1), 1);
    c.assign(Edge::of(2, 3), 1);
    auto moved = c.with_host(std::make_shared<const Graph>(g));
    EXPECT_EQ(moved.color(2, 3), 1);
    EXPECT_FALSE(moved.is_assigned(Edge::of(0, 2)));
    EXPECT_EQ(moved.distinct_colors(), 1);
}

TEST(PaletteProperty, MultisetCardinalityIsSumOfSeenSets)
{
    fixtures::Rng rng(21);
    for (int round = 0; round < 500; ++round) {
        auto g = fixtures::random_graph(3 + static_cast<int>(rng() % 10), 0.45, rng);
        auto c = fixtures::random_proper_coloring(g, 6, 0.8, rng);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto s = neighbor_multiset(c, v, {});
            std::size_t expected = 0;
            ColorSet support;
            for (Vertex w : g.neighbors(v)) {
                auto seen = seen_from(c, v, w);
                expected += seen.size();
                support = support.united(seen);
            }
            ASSERT_EQ(static_cast<std::size_t>(s.cardinality()), expected);
            ASSERT_EQ(s.support(), support);
        }
    }
}
