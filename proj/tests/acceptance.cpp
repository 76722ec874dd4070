// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "clustype/boundary_graph.hpp"
#include "clustype/fiber_criteria.hpp"
#include "clustype/fixtures.hpp"
#include "clustype/gdp_atlas.hpp"
#include "clustype/lattice_fan.hpp"
#include "pair_matrix.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace clustype;
namespace ts = clustype::testing_support;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

int failures = 0;

void run(int number, const char* title, double budget_ms, const std::function<void(Check&)>& body)
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (budget_ms > 0 && ms > budget_ms) {
        c.require(false, "took " + std::to_string(ms) + " ms, budget " + std::to_string(budget_ms) + " ms");
    }
    std::printf("[%s] %d %s (%.2f ms)%s%s\n", c.ok ? "PASS" : "FAIL", number, title, ms, c.ok ? "" : ": ",
        c.ok ? "" : c.why.str().c_str());
    if (!c.ok) ++failures;
}

bool balanced(const BoundaryGraph& g)
{
    for (const auto& [id, r] : validate_cy(g)) {
        if (r != rat(0)) return false;
    }
    return true;
}

bool in_unit_interval(const Rational& q) { return q >= rat(0) && q <= rat(1); }

// One random crepant move on g, checking that it is undone by its inverse.
bool random_step(std::mt19937& rng, BoundaryGraph& g, std::string& why)
{
    struct Move {
        int kind; // 0 corner, 1 interior, 2 marked, 3 blowdown
        Corner corner;
        VertexId id;
        std::size_t index = 0;
    };
    std::vector<Move> moves;
    const bool room = g.vertex_count() < 8;
    if (room) {
        for (const auto& e : g.edges()) {
            if (e.multiplicity - g.marked_edge_occupancy(e.a, e.b) > 0
                && in_unit_interval(g.vertex(e.a).coeff + g.vertex(e.b).coeff - rat(1))) {
                moves.push_back({0, Corner{e.a, e.b}, {}, 0});
            }
        }
        for (const auto& [id, v] : g.vertices()) {
            if (v.nodes - g.marked_node_occupancy(id) > 0 && in_unit_interval(rat(2) * v.coeff - rat(1))) {
                moves.push_back({0, Corner{id, id}, {}, 0});
            }
            if (v.coeff == rat(1)) moves.push_back({1, {}, id, 0});
        }
        for (std::size_t i = 0; i < g.marked_points().size(); ++i) {
            Rational sum = rat(-1);
            for (const auto& b : g.marked_points()[i].branches) sum += g.vertex(b).coeff;
            if (in_unit_interval(sum)) moves.push_back({2, {}, {}, i});
        }
    }
    for (const auto& [id, v] : g.vertices()) {
        if (v.self_int != rat(-1) || v.nodes != 0 || g.picard_rank() < 2 || g.neighbors(id).empty()) continue;
        bool on_marked = false;
        for (const auto& mp : g.marked_points()) {
            if (BoundaryGraph::count_in(mp, id) > 0) on_marked = true;
        }
        if (!on_marked) moves.push_back({3, {}, id, 0});
    }
    if (moves.empty()) return true;
    const auto& m = moves[static_cast<std::size_t>(ts::uniform(rng, 0, static_cast<int>(moves.size()) - 1))];
    const BoundaryGraph before = g;
    if (m.kind == 3) {
        g = blowdown(before, m.id);
        // Rebuild the curve with the move that inverts this blow-down.
        const auto nbrs = before.neighbors(m.id);
        int total = 0;
        for (const auto& [c, k] : nbrs) total += k;
        BoundaryGraph back;
        if (total >= 3) {
            const auto& mps = g.marked_points();
            std::size_t idx = mps.size();
            for (std::size_t i = 0; i < mps.size(); ++i) {
                if (std::find(before.marked_points().begin(), before.marked_points().end(), mps[i])
                    == before.marked_points().end()) {
                    idx = i;
                }
            }
            back = blowup_marked(g, idx, m.id);
        } else if (total == 2 && nbrs.size() == 2) {
            back = blowup_corner(g, Corner{nbrs[0].first, nbrs[1].first}, m.id);
        } else if (total == 2) {
            back = blowup_corner(g, Corner{nbrs[0].first, nbrs[0].first}, m.id);
        } else {
            back = blowup_interior(g, nbrs[0].first, m.id);
        }
        if (!(back == before)) {
            why = "blow-up after blow-down of " + m.id + " is not the identity";
            return false;
        }
    } else {
        const VertexId fresh = before.fresh_id("N");
        if (m.kind == 0) g = blowup_corner(before, m.corner, fresh);
        else if (m.kind == 1) g = blowup_interior(before, m.id, fresh);
        else g = blowup_marked(before, m.index, fresh);
        if (!(blowdown(g, fresh) == before)) {
            why = "blow-down after blow-up is not the identity";
            return false;
        }
    }
    for (const auto& [id, v] : g.vertices()) {
        if (!in_unit_interval(v.coeff) || !is_integral(v.coeff * rat(4))) {
            why = "coefficient of " + id + " left the quarter grid";
            return false;
        }
    }
    if (!balanced(g)) {
        why = "nonzero residual after a crepant move";
        return false;
    }
    return true;
}

} // namespace

int main()
{
    run(1, "catalog has 16 families, 14 of cluster type, negatives 4A2 and 2A1+2A3", 1.0, [](Check& c) {
        const auto rows = catalog();
        std::set<std::string> negatives;
        int positives = 0;
        for (const auto& f : rows) {
            c.require(all_a_type(f.singularities), "non-A family in the catalog");
            if (f.cluster_type) ++positives;
            else negatives.insert(to_string(f.singularities));
        }
        c.require(rows.size() == 16, "catalog size " + std::to_string(rows.size()));
        c.require(positives == 14, "positives " + std::to_string(positives));
        c.require(negatives == std::set<std::string>{"4A2", "2A1+2A3"}, "wrong negative families");
    });

    run(2, "decide_pair reproduces the 40-row decision matrix", 0, [](Check& c) {
        const auto rows = ts::pair_matrix();
        c.require(rows.size() == 40, "matrix has " + std::to_string(rows.size()) + " rows");
        std::set<int> cases;
        for (const auto& row : rows) {
            const auto v = decide_pair(row.spec());
            const int got = v.case_number.value_or(0);
            cases.insert(got);
            c.require(got == row.expected_case && v.cluster_type == row.expected_cluster && v.volume == row.expected_volume,
                std::string("row ") + row.singularities + " gave case " + std::to_string(got));
        }
        c.require(cases == std::set<int>{0, 1, 2, 3, 4, 5}, "matrix does not cover every case");
    });

    run(3, "figure contractions match the right panels", 0, [](Check& c) {
        for (const auto& fig : figures::contraction_figures()) {
            const auto start = std::chrono::steady_clock::now();
            const auto r = apply_contraction_script(fig.tag);
            const bool iso = weighted_isomorphic(r.after, fig.expected_after, true);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            c.require(iso, fig.tag + " is not isomorphic to its right panel");
            c.require(r.before.vertex_count() <= 12, fig.tag + " has more than 12 vertices");
            c.require(ms < 10.0, fig.tag + " took " + std::to_string(ms) + " ms");
        }
        const auto a7 = apply_contraction_script("A7->A1A5");
        c.require(a7.before.vertex("E2").self_int == rat(-2) && a7.after.vertex("E2").self_int == rat(-1),
            "E2 is not a (-1)-curve after contracting F1 in Y(A7)");
    });

    run(4, "1000 random crepant sequences keep residuals zero and invert", 1000.0, [](Check& c) {
        std::mt19937 rng(20240601);
        for (int seq = 0; seq < 1000 && c.ok; ++seq) {
            auto g = ts::random_balanced_graph(rng);
            c.require(balanced(g) && g.vertex_count() <= 8, "random start graph is not balanced");
            const int steps = ts::uniform(rng, 1, 8);
            for (int s = 0; s < steps && c.ok; ++s) {
                std::string why;
                c.require(random_step(rng, g, why), "sequence " + std::to_string(seq) + ": " + why);
            }
        }
    });

    run(5, "obstruction value <= -(a m1 - b m2)^2/(ab) <= 0 on the full grid", 1000.0, [](Check& c) {
        long cases = 0;
        for (std::int64_t a = 1; a <= 9; ++a) {
            for (std::int64_t b = 1; b <= 9; ++b) {
                for (int c1 = -5; c1 <= 0; ++c1) {
                    for (int c2 = -5; c2 <= 0; ++c2) {
                        const auto d = weighted_corner_numbers(rat(c1), rat(c2), a, b);
                        for (std::int64_t m1 = 1; m1 <= 9; ++m1) {
                            for (std::int64_t m2 = 1; m2 <= 9; ++m2) {
                                ++cases;
                                const auto value = obstruction_value(m1, m2, d);
                                const auto bound = obstruction_bound(a, b, m1, m2);
                                // Integer oracle after scaling by ab.
                                const std::int64_t v = m1 * m1 * (c1 * a * b - a * a) + 2 * m1 * m2 * a * b
                                    + m2 * m2 * (c2 * a * b - b * b);
                                const std::int64_t w = -(a * m1 - b * m2) * (a * m1 - b * m2);
                                c.require(value * rat(a * b) == rat(v) && bound * rat(a * b) == rat(w),
                                    "library disagrees with the integer oracle");
                                c.require(value <= bound && bound <= rat(0), "bound violated");
                                c.require((value == bound) == (c1 == 0 && c2 == 0), "equality case is wrong");
                            }
                        }
                    }
                }
            }
        }
        c.require(cases == 9L * 9 * 6 * 6 * 9 * 9, "wrong case count");
    });

    run(6, "rank-1 verdicts agree with rank-2 verdicts after the node blow-up", 0, [](Check& c) {
        for (int vol = 1; vol <= 12; ++vol) {
            for (bool node : {true, false}) {
                for (bool irreducible : {true, false}) {
                    FiberSpec f;
                    f.rel_picard_rank = 1;
                    f.components = {FiberComponent{rat(vol), irreducible}};
                    f.has_node = node;
                    f.volume = rat(vol);
                    const bool direct = check_pic1(f).cluster_type;
                    bool reduced = false;
                    if (node) {
                        const auto r = node_blowup_reduce(f);
                        reduced = check_pic2(r).cluster_type;
                        c.require(r.components.front().self_int == rat(vol - 4), "strict transform is not vol - 4");
                    } else {
                        bool threw = false;
                        try {
                            node_blowup_reduce(f);
                        } catch (const Error& e) {
                            threw = e.kind() == ErrorKind::PreconditionFailed;
                        }
                        c.require(threw, "reduction without a node did not fail");
                    }
                    c.require(direct == reduced, "routes disagree at volume " + std::to_string(vol));
                    c.require(direct == (node && irreducible && vol >= 5), "wrong verdict at volume " + std::to_string(vol));
                }
            }
        }
        FiberSpec five;
        five.rel_picard_rank = 1;
        five.components = {FiberComponent{rat(5), true}};
        five.has_node = true;
        five.volume = rat(5);
        c.require(node_blowup_reduce(five).components.front().self_int == rat(1), "volume 5 does not give self-intersection 1");
    });

    run(7, "worked examples: two fibre routes, resolved node, P(1,2,3) sextic", 0, [](Check& c) {
        using fixtures::evaluate;
        using fixtures::load_fixture;
        c.require(evaluate(load_fixture("ex62.pic2"))["cluster_type"] == false, "ex62 rank-2 route");
        c.require(evaluate(load_fixture("ex62.pic1"))["cluster_type"] == false, "ex62 rank-1 route");
        const auto g62 = std::get<BoundaryGraph>(load_fixture("ex62.graph"));
        const auto c62 = blowdown(g62, "C2");
        c.require(c62.vertex("C1").self_int == rat(4) && c62.vertex("C1").nodes == 1, "ex62 contraction is not a volume-4 nodal curve");
        c.require(evaluate(load_fixture("ex63.pic2"))["cluster_type"] == true, "ex63 rank-2 route");
        const auto g63 = std::get<BoundaryGraph>(load_fixture("ex63.graph"));
        c.require(g63.vertex("B").self_int == rat(1), "ex63 resolved component is not a 1-curve");
        const auto p = decide_pair(std::get<PairSpec>(load_fixture("p123.sextic")));
        c.require(p.cluster_type && p.case_number == 2 && p.volume == 6, "P(1,2,3) sextic verdict");
        c.require(evaluate(load_fixture("p123.pic1"))["cluster_type"] == true, "volume-6 fibre verdict");
    });

    run(8, "total pair has coregularity 0 while its general fibre has 1", 0, [](Check& c) {
        const auto total = std::get<BoundaryGraph>(fixtures::load_fixture("ex64.total"));
        const auto fiber = std::get<CurvePair>(fixtures::load_fixture("ex64.fiber"));
        c.require(is_calabi_yau(total) && is_calabi_yau(fiber), "pairs are not Calabi-Yau");
        c.require(coregularity(total) == 0, "total coregularity " + std::to_string(coregularity(total)));
        c.require(coregularity(fiber) == 1, "fibre coregularity " + std::to_string(coregularity(fiber)));
        bool sum_two = false;
        for (const auto& mp : total.marked_points()) {
            Rational s = rat(0);
            for (const auto& b : mp.branches) s += total.vertex(b).coeff;
            sum_two = sum_two || s == rat(2);
        }
        c.require(sum_two, "no marked point with coefficient sum 2");
    });

    run(9, "toric engine on random smooth fans and P(1,2,3)", 100.0, [](Check& c) {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            const auto fan = ts::random_smooth_fan(rng);
            c.require(toric_pair_complexity(fan) == rat(0), "nonzero toric complexity");
            const auto s = self_intersections(fan);
            const auto n = static_cast<std::int64_t>(fan.size());
            c.require(std::accumulate(s.begin(), s.end(), std::int64_t{0}) == 12 - 3 * n, "Noether sum fails");
            // Subdivide one cone: the new ray is -1, its neighbours drop by one.
            const auto i = static_cast<std::size_t>(ts::uniform(rng, 0, static_cast<int>(n) - 1));
            const auto u = fan.ray(i);
            const auto w = fan.next(i);
            const auto up = star_subdivide(fan, u + w);
            const auto t = self_intersections(up);
            for (std::size_t k = 0; k < up.size(); ++k) {
                const auto r = up.ray(k);
                std::int64_t expected = 0;
                if (r == u + w) expected = -1;
                else {
                    expected = s[*fan.index_of(r)];
                    if (r == u || r == w) --expected;
                }
                c.require(t[k] == expected, "subdivision update disagrees with recomputation");
                c.require(t[k] == -det(up.prev(k), up.next(k)), "self-intersection disagrees with determinant oracle");
            }
        }
        const auto p123 = make_fan({{1, 0}, {0, 1}, {-2, -3}});
        const auto r = resolve(p123);
        c.require(r.size() == 6, "resolution has " + std::to_string(r.size()) + " rays");
        c.require(p123.picard_rank() == 1 && r.picard_rank() == 1 + 3, "rank bookkeeping");
        c.require(is_smooth(r), "resolution is not smooth");
    });

    run(10, "two-component feasibility inequality", 0, [](Check& c) {
        for (int n = 1; n <= 3; ++n) {
            for (int m = 1; m <= 3; ++m) {
                // Oracle: vol (n+1)(m+1) > 2 (n + m + 2).
                const bool oracle = (n + 1) * (m + 1) > 2 * (n + m + 2);
                c.require(!oracle && !two_component_feasibility(1, n, m),
                    "(1," + std::to_string(n) + "," + std::to_string(m) + ") feasible");
            }
        }
        c.require(two_component_feasibility(3, 1, 5) && 3 * 2 * 6 > 2 * (1 + 5 + 2), "(3,1,5) infeasible");
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
