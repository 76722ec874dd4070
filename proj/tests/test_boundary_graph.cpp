#include "clustype/boundary_graph.hpp"
#include "clustype/figures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace clustype;

namespace {

void expect_kind(ErrorKind kind, auto&& fn)
{
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

bool all_zero(const BoundaryGraph& g)
{
    for (const auto& [id, r] : validate_cy(g)) {
        if (r != rat(0)) return false;
    }
    return true;
}

BoundaryGraph nodal_cubic()
{
    BoundaryGraph g(1);
    g.add_curve("B", rat(9), rat(1), 1);
    return g;
}

BoundaryGraph triangle()
{
    BoundaryGraph g(1);
    g.add_curve("L1", rat(1)).add_curve("L2", rat(1)).add_curve("L3", rat(1));
    g.add_edge("L1", "L2").add_edge("L2", "L3").add_edge("L3", "L1");
    return g;
}

BoundaryGraph product_pair()
{
    // F in |O(0,1)|, D_i in |O(2,1)| on P1 x P1: (a,b).(c,d) = ad + bc.
    BoundaryGraph g(2);
    g.add_curve("F", rat(0)).add_curve("D1", rat(4), rat(1, 2)).add_curve("D2", rat(4), rat(1, 2));
    g.add_edge("F", "D1", 2).add_edge("F", "D2", 2).add_edge("D1", "D2", 4);
    g.add_marked_point({"F", "D1", "D2"});
    return g;
}

} // namespace

TEST(NaturalOrder, NumericRuns)
{
    NaturalLess less;
    EXPECT_TRUE(less("E2", "E10"));
    EXPECT_FALSE(less("E10", "E2"));
    EXPECT_TRUE(less("C", "E1"));
    EXPECT_FALSE(less("E1", "E1"));
    EXPECT_TRUE(less("E01", "E1") != less("E1", "E01"));
}

TEST(Graph, ConstructionErrors)
{
    BoundaryGraph g(1);
    g.add_curve("A", rat(1));
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_curve("A", rat(0)); });
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_curve("X", rat(0), rat(3, 2)); });
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_edge("A", "A"); });
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_edge("A", "missing"); });
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_marked_point({"A", "A"}); });
    expect_kind(ErrorKind::InvalidGraph, [] { BoundaryGraph bad(0); });
}

TEST(Graph, MarkedPointsMustFitTheIntersections)
{
    BoundaryGraph g(1);
    g.add_curve("A", rat(1)).add_curve("B", rat(1)).add_curve("C", rat(1));
    g.add_edge("A", "B");
    expect_kind(ErrorKind::InvalidGraph, [&] { g.add_marked_point({"A", "B", "C"}); });
}

TEST(ValidateCy, Examples)
{
    for (const auto& [id, r] : validate_cy(nodal_cubic())) EXPECT_EQ(r, rat(0)) << id;
    EXPECT_EQ(validate_cy(triangle()).size(), 3u);
    EXPECT_TRUE(all_zero(triangle()));
    EXPECT_TRUE(all_zero(product_pair()));
    BoundaryGraph off(1);
    off.add_curve("B", rat(9), rat(1));
    // A smooth cubic has genus one; as a rational vertex its residual is -2.
    EXPECT_EQ(validate_cy(off).front().second, rat(-2));
}

TEST(BlowupCorner, NodeOfQuinticCurve)
{
    BoundaryGraph g(5);
    g.add_curve("B", rat(5), rat(1), 1);
    const auto h = blowup_corner(g, Corner{"B", "B"}, "E");
    EXPECT_EQ(h.vertex("B").self_int, rat(1));
    EXPECT_EQ(h.vertex("B").nodes, 0);
    EXPECT_EQ(h.vertex("E").self_int, rat(-1));
    EXPECT_EQ(h.vertex("E").coeff, rat(1));
    EXPECT_EQ(h.multiplicity("B", "E"), 2);
    EXPECT_EQ(h.picard_rank(), 6);
}

TEST(BlowupCorner, ReducedCornerKeepsComplexity)
{
    const auto g = triangle();
    const auto h = blowup_corner(g, Corner{"L1", "L2"});
    EXPECT_EQ(h.vertex("X1").coeff, rat(1));
    EXPECT_EQ(complexity(h), complexity(g));
    EXPECT_EQ(h.multiplicity("L1", "L2"), 0);
    EXPECT_EQ(h.vertex("L1").self_int, rat(0));
    EXPECT_TRUE(all_zero(h));
}

TEST(BlowupCorner, HalfCoefficientNode)
{
    BoundaryGraph g(1);
    g.add_curve("B", rat(9), rat(1, 2), 1);
    EXPECT_EQ(blowup_corner(g, Corner{"B", "B"}, "E").vertex("E").coeff, rat(0));
}

TEST(BlowupCorner, Errors)
{
    expect_kind(ErrorKind::NoSuchIntersection, [] { blowup_corner(triangle(), Corner{"L1", "L1"}); });
    auto g = triangle();
    g = blowup_corner(g, Corner{"L1", "L2"});
    expect_kind(ErrorKind::NoSuchIntersection, [&] { blowup_corner(g, Corner{"L1", "L2"}); });
    expect_kind(ErrorKind::NoSuchVertex, [&] { blowup_corner(g, Corner{"L1", "Q"}); });
    // Only one of the two points of F n D1 lies on the marked point.
    const auto p = product_pair();
    EXPECT_NO_THROW(blowup_corner(p, Corner{"F", "D1"}));
    const auto q = blowup_corner(p, Corner{"F", "D1"});
    expect_kind(ErrorKind::NoSuchIntersection, [&] { blowup_corner(q, Corner{"F", "D1"}); });
}

TEST(BlowupInterior, Examples)
{
    const auto g = nodal_cubic();
    const auto h = blowup_interior(g, "B", "E");
    EXPECT_EQ(h.vertex("E").coeff, rat(0));
    EXPECT_EQ(complexity(h), complexity(g) + rat(1));
    EXPECT_TRUE(all_zero(h));
    BoundaryGraph z(1);
    z.add_curve("Q", rat(4), rat(1)).add_curve("Z", rat(1), rat(0));
    z.add_edge("Q", "Z", 2);
    EXPECT_EQ(blowup_interior(z, "Z", "E").vertex("E").coeff, rat(-1));
    expect_kind(ErrorKind::NoSuchVertex, [] { blowup_interior(triangle(), "Q"); });
}

TEST(Blowdown, ExampleFibreContraction)
{
    BoundaryGraph g(7);
    g.add_curve("C1", rat(0)).add_curve("C2", rat(-1)).add_edge("C1", "C2", 2);
    const auto h = blowdown(g, "C2");
    EXPECT_EQ(h.vertex("C1").self_int, rat(4));
    EXPECT_EQ(h.vertex("C1").nodes, 1);
    EXPECT_EQ(h.picard_rank(), 6);
    EXPECT_TRUE(all_zero(h));
}

TEST(Blowdown, TwoNeighbours)
{
    BoundaryGraph g(2);
    g.add_curve("C", rat(0)).add_curve("D", rat(0)).add_curve("E", rat(-1));
    g.add_edge("E", "C").add_edge("E", "D");
    const auto h = blowdown(g, "E");
    EXPECT_EQ(h.multiplicity("C", "D"), 1);
    EXPECT_EQ(h.vertex("C").self_int, rat(1));
    EXPECT_EQ(h.vertex("D").self_int, rat(1));
    EXPECT_TRUE(h.marked_points().empty());
}

TEST(Blowdown, ThreeBranchesLeaveAMarkedPoint)
{
    BoundaryGraph g(2);
    g.add_curve("A", rat(0), rat(1, 2)).add_curve("B", rat(0), rat(1, 2)).add_curve("C", rat(0), rat(1, 2));
    g.add_curve("E", rat(-1), rat(1, 2));
    g.add_edge("E", "A").add_edge("E", "B").add_edge("E", "C");
    const auto h = blowdown(g, "E");
    ASSERT_EQ(h.marked_points().size(), 1u);
    EXPECT_EQ(h.marked_points()[0].branches, (std::vector<VertexId>{"A", "B", "C"}));
    EXPECT_EQ(blowup_marked(h, 0, "E"), g);
}

TEST(Blowdown, Errors)
{
    expect_kind(ErrorKind::NotMinusOneCurve, [] { blowdown(triangle(), "L1"); });
    BoundaryGraph g(2);
    g.add_curve("E", rat(-1), rat(1), 1);
    expect_kind(ErrorKind::VertexHasNodes, [&] { blowdown(g, "E"); });
    BoundaryGraph one(1);
    one.add_curve("E", rat(-1));
    expect_kind(ErrorKind::PreconditionFailed, [&] { blowdown(one, "E"); });
    BoundaryGraph m(3);
    m.add_curve("A", rat(0)).add_curve("B", rat(0)).add_curve("E", rat(-1));
    m.add_edge("A", "B").add_edge("A", "E").add_edge("B", "E");
    m.add_marked_point({"A", "B", "E"});
    expect_kind(ErrorKind::VertexOnMarkedPoint, [&] { blowdown(m, "E"); });
}

TEST(Blowdown, InvertsEveryBlowup)
{
    const auto g = triangle();
    EXPECT_EQ(blowdown(blowup_corner(g, Corner{"L2", "L3"}, "E"), "E"), g);
    EXPECT_EQ(blowdown(blowup_interior(g, "L1", "E"), "E"), g);
    const auto c = nodal_cubic();
    EXPECT_EQ(blowdown(blowup_corner(c, Corner{"B", "B"}, "E"), "E"), c);
    const auto p = product_pair();
    EXPECT_EQ(blowdown(blowup_marked(p, 0, "E"), "E"), p);
}

TEST(CrepantBlowdown, Predicate)
{
    const auto h = blowup_corner(triangle(), Corner{"L1", "L2"}, "E");
    EXPECT_TRUE(is_crepant_blowdown(h, "E"));
    auto off = h;
    off.vertex_mut("E").coeff = rat(1, 2);
    EXPECT_FALSE(is_crepant_blowdown(off, "E"));
}

TEST(Complexity, Examples)
{
    EXPECT_EQ(complexity(nodal_cubic()), rat(2));
    EXPECT_EQ(complexity(triangle()), rat(0));
    EXPECT_EQ(complexity(product_pair()), rat(2));
}

TEST(Coregularity, Examples)
{
    EXPECT_EQ(coregularity(nodal_cubic()), 0);
    EXPECT_EQ(coregularity(triangle()), 0);
    EXPECT_EQ(coregularity(product_pair()), 0);
    BoundaryGraph klt(1);
    klt.add_curve("A", rat(1), rat(1, 2)).add_curve("B", rat(4), rat(1, 2));
    klt.add_edge("A", "B", 2);
    EXPECT_EQ(coregularity(klt), 2);
    BoundaryGraph one(1);
    one.add_curve("Q", rat(4)).add_curve("L", rat(1), rat(1, 2));
    one.add_edge("Q", "L", 2);
    EXPECT_EQ(coregularity(one), 1);
}

TEST(Coregularity, LcPointNeedsAReducedBranch)
{
    // Four lines of coefficient 1/2 through one point: the exceptional curve
    // has coefficient one but meets only coefficient-1/2 curves.
    BoundaryGraph g(1);
    for (int i = 1; i <= 4; ++i) g.add_curve("L" + std::to_string(i), rat(1), rat(1, 2));
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) g.add_edge("L" + std::to_string(i), "L" + std::to_string(j));
    }
    g.add_marked_point({"L1", "L2", "L3", "L4"});
    EXPECT_EQ(coregularity(g), 1);
    const auto h = blowup_marked(g, 0, "E");
    EXPECT_EQ(h.vertex("E").coeff, rat(1));
    EXPECT_EQ(coregularity(h), 1);
}

TEST(Coregularity, Errors)
{
    BoundaryGraph g(1);
    g.add_curve("A", rat(1), rat(3, 4)).add_curve("B", rat(1), rat(3, 4)).add_curve("C", rat(1), rat(3, 4));
    g.add_edge("A", "B").add_edge("B", "C").add_edge("C", "A");
    g.add_marked_point({"A", "B", "C"});
    expect_kind(ErrorKind::MarkedPointNotLC, [&] { coregularity(g); });
    BoundaryGraph neg(1);
    neg.add_curve("A", rat(1), rat(-1));
    expect_kind(ErrorKind::CoefficientOutOfRange, [&] { coregularity(neg); });
}

TEST(IndexIntegral, Examples)
{
    EXPECT_TRUE(index_integral(triangle()));
    EXPECT_TRUE(index_integral(figures::y_a7()));
    EXPECT_FALSE(index_integral(product_pair()));
}

TEST(ResolveAn, ExamplesAndBalance)
{
    const auto g = resolve_An_at_node(rat(3), 1);
    EXPECT_EQ(g.vertex("B").self_int, rat(1));
    EXPECT_EQ(g.vertex("E1").self_int, rat(-2));
    EXPECT_EQ(g.multiplicity("B", "E1"), 2);
    EXPECT_EQ(g.picard_rank(), 2);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_TRUE(all_zero(resolve_An_at_node(rat(n), n))) << n;
    }
}

TEST(ResolveAn, IteratedBlowdownOfTheChain)
{
    auto g = resolve_An_at_node(rat(1), 5);
    for (const char* id : {"B", "E1", "E2", "E3", "E4"}) {
        ASSERT_EQ(g.vertex(id).self_int, rat(-1)) << id;
        g = blowdown(g, id);
    }
    EXPECT_EQ(g.vertex("E5").self_int, rat(6));
    EXPECT_EQ(g.picard_rank(), 1);
}

TEST(ContractChains, SingularSelfIntersections)
{
    // Contracting the chain undoes the resolution: B^2 returns to its value
    // on the singular surface.
    for (int n = 1; n <= 6; ++n) {
        const auto g = resolve_An_at_node(rat(3), n);
        const auto m = contract_minus2_chains(g);
        ASSERT_EQ(m.ranks(), std::vector<int>{n});
        EXPECT_EQ(m.self_int("B"), rat(3)) << n;
        EXPECT_EQ(m.picard_rank, 1);
    }
}

TEST(ContractChains, HalfIntegralIntersection)
{
    // A curve C through one end of an A1 chain: C^2 gains 1/2.
    BoundaryGraph g(2);
    g.add_curve("C", rat(0)).add_curve("E", rat(-2));
    g.add_edge("C", "E");
    const auto m = contract_minus2_chains(g);
    EXPECT_EQ(m.self_int("C"), rat(1, 2));
    ASSERT_EQ(m.marks.size(), 1u);
    EXPECT_EQ(m.marks[0].incident, std::vector<VertexId>{"C"});
}

TEST(ContractChains, FigureNineMarks)
{
    const auto m = contract_minus2_chains(figures::y_a1_a2_a5());
    EXPECT_EQ(m.ranks(), (std::vector<int>{1, 2, 5}));
    EXPECT_EQ(m.picard_rank, 1);
}

TEST(ContractChains, Errors)
{
    BoundaryGraph g(3);
    g.add_curve("A", rat(-2)).add_curve("B", rat(-1)).add_curve("C", rat(-2));
    g.add_edge("A", "B").add_edge("B", "C");
    expect_kind(ErrorKind::NotMinusTwoChain, [&] { contract_minus2_chains(g, {{"A", "B"}}); });
    expect_kind(ErrorKind::NotMinusTwoChain, [&] { contract_minus2_chains(g, {{"A", "C"}}); });
    expect_kind(ErrorKind::NotMinusTwoChain, [&] { contract_minus2_chains(g, {{}}); });
}

TEST(WeightedIsomorphism, DetectsDifferences)
{
    EXPECT_TRUE(weighted_isomorphic(figures::y_a7(), figures::y_a7()));
    EXPECT_FALSE(weighted_isomorphic(figures::y_a7(), figures::y_a1_a5()));
    auto renamed = BoundaryGraph(1);
    renamed.add_curve("M1", rat(1)).add_curve("M2", rat(1)).add_curve("M3", rat(1));
    renamed.add_edge("M3", "M1").add_edge("M1", "M2").add_edge("M2", "M3");
    EXPECT_TRUE(weighted_isomorphic(triangle(), renamed));
}

TEST(Invariants, BlowupsPreserveBalanceAndRoundtrip)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = testing_support::random_balanced_graph(rng);
        ASSERT_TRUE(all_zero(g));
        for (const auto& e : g.edges()) {
            const auto h = blowup_corner(g, Corner{e.a, e.b}, "N");
            EXPECT_TRUE(all_zero(h));
            EXPECT_EQ(blowdown(h, "N"), g);
            if (h.vertex("N").coeff >= rat(0)) {
                EXPECT_LE(coregularity(h), coregularity(g));
            }
            if (g.vertex(e.a).coeff == rat(1) && g.vertex(e.b).coeff == rat(1)) {
                EXPECT_EQ(complexity(h), complexity(g));
            }
        }
        for (const auto& [id, v] : g.vertices()) {
            const auto h = blowup_interior(g, id, "N");
            EXPECT_TRUE(all_zero(h));
            EXPECT_EQ(blowdown(h, "N"), g);
            if (v.coeff == rat(1)) {
                EXPECT_EQ(complexity(h), complexity(g) + rat(1));
            }
            if (v.nodes > 0) {
                const auto n = blowup_corner(g, Corner{id, id}, "N");
                EXPECT_TRUE(all_zero(n));
                EXPECT_EQ(blowdown(n, "N"), g);
            }
        }
    }
}

TEST(Invariants, BoundarySquareDrops)
{
    // Strict transforms lose m^2, the full reduced boundary (-K) loses 1.
    auto g = nodal_cubic();
    EXPECT_EQ(boundary_square(g, reduced_part(g)), rat(9));
    const auto h = blowup_corner(g, Corner{"B", "B"}, "E");
    EXPECT_EQ(boundary_square(h, {"B"}), rat(5));
    EXPECT_EQ(boundary_square(h, reduced_part(h)), rat(8));
    const auto t = triangle();
    const auto u = blowup_corner(t, Corner{"L1", "L2"}, "E");
    EXPECT_EQ(boundary_square(u, {"L1", "L2", "L3"}), boundary_square(t, reduced_part(t)) - rat(4));
    EXPECT_EQ(boundary_square(u, reduced_part(u)), rat(8));
    BoundaryGraph q(1);
    q.add_curve("B", rat(5), rat(1), 1);
    EXPECT_EQ(blowup_corner(q, Corner{"B", "B"}, "E").vertex("B").self_int, rat(1));
}
