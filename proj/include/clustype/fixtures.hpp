#ifndef CLUSTYPE_FIXTURES_HPP
#define CLUSTYPE_FIXTURES_HPP

// Named corpus of graphs, fibre specs, fans and pair specs, with a table of
// expected verdicts used by the CLI and the tests.

#include "clustype/boundary_graph.hpp"
#include "clustype/fiber_criteria.hpp"
#include "clustype/figures.hpp"
#include "clustype/gdp_atlas.hpp"
#include "clustype/json_io.hpp"
#include "clustype/lattice_fan.hpp"

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace clustype::fixtures {

using Fixture = std::variant<BoundaryGraph, FiberSpec, Fan2, PairSpec, CurvePair>;

namespace detail {

inline BoundaryGraph ex62_graph()
{
    // General fibre: smooth cubic surface, boundary C1 + C2 meeting twice.
    BoundaryGraph g(7);
    g.add_curve("C1", rat(0)).add_curve("C2", rat(-1)).add_edge("C1", "C2", 2);
    return g;
}

inline BoundaryGraph ex64_total()
{
    // P1 x P1 with F in |O(0,1)| and D1, D2 in |O(2,1)|, all through p.
    BoundaryGraph g(2);
    g.add_curve("F", rat(0)).add_curve("D1", rat(4), rat(1, 2)).add_curve("D2", rat(4), rat(1, 2));
    g.add_edge("F", "D1", 2).add_edge("F", "D2", 2).add_edge("D1", "D2", 4);
    g.add_marked_point({"F", "D1", "D2"});
    return g;
}

inline BoundaryGraph case1_fiber()
{
    // Sections D1, D2 and fibre components C1~, C2~ of the contracted model;
    // R1..R3 on D1 and R4..R7 on D2 are the non-boundary (-1)-curves.
    BoundaryGraph g(9);
    g.add_curve("D1", rat(-3)).add_curve("C1", rat(0)).add_curve("D2", rat(-4)).add_curve("C2", rat(0));
    g.add_edge("D1", "C1").add_edge("C1", "D2").add_edge("D2", "C2").add_edge("C2", "D1");
    for (int i = 1; i <= 7; ++i) {
        const auto id = "R" + std::to_string(i);
        g.add_curve(id, rat(-1), rat(0));
        g.add_edge(id, i <= 3 ? "D1" : "D2");
    }
    return g;
}

inline BoundaryGraph ex65_x2()
{
    auto g = figures::y_a1_a2_a5();
    g = blowdown(g, "F3");
    return blowdown(g, "E8");
}

inline FiberSpec rank2(std::vector<FiberComponent> comps, Rational volume)
{
    return FiberSpec{std::move(comps), true, std::nullopt, volume, 2, true};
}

inline FiberSpec rank1(Rational volume)
{
    return FiberSpec{{FiberComponent{volume, true}}, true, std::nullopt, volume, 1, true};
}

inline PairSpec nodal(const char* sings)
{
    return PairSpec{parse_singularities(sings), BoundaryKind::NodalSmoothLocus, 2, std::nullopt, 0};
}

} // namespace detail

struct Entry {
    std::string name;
    std::string description;
    std::function<Fixture()> make;
};

inline const std::vector<Entry>& corpus()
{
    using namespace detail;
    static const std::vector<Entry> entries = {
        {"fig5.A7.before", "Y(A7), before contracting F1", [] { return Fixture{figures::y_a7()}; }},
        {"fig5.A7.after", "Y(A1+A5), right panel", [] { return Fixture{figures::y_a1_a5()}; }},
        {"fig6.A8.before", "Y(A8), before contracting F1", [] { return Fixture{figures::y_a8()}; }},
        {"fig6.A8.after", "Y(A2+A5), right panel", [] { return Fixture{figures::y_a2_a5()}; }},
        {"fig7.A1A7.before", "Y(A1+A7), before contracting F1", [] { return Fixture{figures::y_a1_a7()}; }},
        {"fig7.A1A7.after", "Y(A1+2A3), right panel", [] { return Fixture{figures::y_a1_2a3()}; }},
        {"fig8.2A4.before", "Y(2A4), before contracting F3, E8, E7, E6", [] { return Fixture{figures::y_2a4()}; }},
        {"fig8.2A4.after", "Y(A4), right panel", [] { return Fixture{figures::y_a4()}; }},
        {"fig9.A1A2A5", "Y(A1+A2+A5), minimal resolution", [] { return Fixture{figures::y_a1_a2_a5()}; }},
        {"ex62.graph", "cubic surface fibre with C1^2 = 0, C2^2 = -1", [] { return Fixture{ex62_graph()}; }},
        {"ex62.pic2", "rank-2 fibre, components 0 and -1",
            [] { return Fixture{rank2({{rat(0), true}, {rat(-1), true}}, rat(3))}; }},
        {"ex62.pic1", "rank-1 fibre after contracting C2, volume 4", [] { return Fixture{rank1(rat(4))}; }},
        {"ex63.graph", "resolved fibre: A1 at the node of a volume-3 boundary",
            [] { return Fixture{resolve_An_at_node(rat(3), 1, 6)}; }},
        {"ex63.pic2", "rank-2 resolved fibre, components 1 and -2",
            [] { return Fixture{rank2({{rat(1), true}, {rat(-2), true}}, rat(3))}; }},
        {"ex63.pic1", "rank-1 fibre with the node at an A1 point",
            [] {
                auto f = rank1(rat(3));
                f.node_at_an = 1;
                f.boundary_in_smooth_locus = false;
                return Fixture{f};
            }},
        {"ex64.total", "P1 x P1 with F + D1/2 + D2/2 through one point", [] { return Fixture{ex64_total()}; }},
        {"ex64.fiber", "general fibre: P1 with four points of coefficient 1/2",
            [] { return Fixture{CurvePair{{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}}}; }},
        {"ex65.X2", "Y(A1+A2+A5) after contracting F3 and E8", [] { return Fixture{ex65_x2()}; }},
        {"ex65.pair", "X(A1+A5) with nodal boundary in the smooth locus", [] { return Fixture{nodal("A1+A5")}; }},
        {"p123.fan", "fan of P(1,2,3)", [] { return Fixture{make_fan({{1, 0}, {0, 1}, {-2, -3}})}; }},
        {"p123.sextic", "P(1,2,3) with a nodal sextic", [] { return Fixture{nodal("A1+A2")}; }},
        {"p123.pic1", "rank-1 fibre of volume 6", [] { return Fixture{rank1(rat(6))}; }},
        {"x2a4.nodal", "X(2A4) with nodal boundary, node at an A4 point",
            [] { return Fixture{PairSpec{parse_singularities("2A4"), BoundaryKind::NodalAtA, 2, std::nullopt, 4}}; }},
        {"x4a2.two", "X(4A2) with two boundary components through two A2 points",
            [] {
                return Fixture{PairSpec{parse_singularities("4A2"), BoundaryKind::MultiComponent, 2, std::pair{2, 2}, 0}};
            }},
        {"p2.fan", "fan of the projective plane", [] { return Fixture{make_fan({{1, 0}, {0, 1}, {-1, -1}})}; }},
        {"p2.cubic", "projective plane with a nodal cubic",
            [] {
                BoundaryGraph g(1);
                g.add_curve("B", rat(9), rat(1), 1);
                return Fixture{g};
            }},
        {"p2.triangle", "projective plane with a triangle of lines",
            [] {
                BoundaryGraph g(1);
                g.add_curve("L1", rat(1)).add_curve("L2", rat(1)).add_curve("L3", rat(1));
                g.add_edge("L1", "L2").add_edge("L2", "L3").add_edge("L3", "L1");
                return Fixture{g};
            }},
        {"case1.fiber", "sections with opposite rays: contracted model", [] { return Fixture{case1_fiber()}; }},
        {"case2.fan", "projective plane refined along the kernel of L = (1,1)",
            [] { return Fixture{subdivide_along_kernel(make_fan({{1, 0}, {0, 1}, {-1, -1}}), Covector{1, 1})}; }},
    };
    return entries;
}

inline std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& e : corpus()) out.push_back(e.name);
    return out;
}

inline Fixture load_fixture(std::string_view name)
{
    for (const auto& e : corpus()) {
        if (e.name == name) return e.make();
    }
    throw Error(ErrorKind::UnknownFixture, "no fixture '" + std::string(name) + "'");
}

/// Verdict JSON for a fixture. Graphs report their invariants, fibres and
/// pairs their cluster-type verdicts; errors become {"error": kind}.
inline io::json evaluate(const Fixture& fx)
{
    using io::json;
    try {
        return std::visit(
            [](const auto& x) -> json {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, BoundaryGraph>) {
                    json j;
                    j["kind"] = "graph";
                    j["calabi_yau"] = is_calabi_yau(x);
                    j["complexity"] = io::rational_to_json(complexity(x));
                    j["coregularity"] = coregularity(x);
                    j["index_integral"] = index_integral(x);
                    j["picard_rank"] = x.picard_rank();
                    return j;
                } else if constexpr (std::is_same_v<T, FiberSpec>) {
                    json j = io::to_json(check_fiber(x));
                    j["kind"] = "fiber";
                    return j;
                } else if constexpr (std::is_same_v<T, Fan2>) {
                    json j;
                    j["kind"] = "fan";
                    j["rays"] = x.size();
                    j["smooth"] = is_smooth(x);
                    j["complexity"] = io::rational_to_json(toric_pair_complexity(x));
                    if (is_smooth(x)) j["self_intersections"] = self_intersections(x);
                    return j;
                } else if constexpr (std::is_same_v<T, PairSpec>) {
                    json j = io::to_json(decide_pair(x));
                    j["kind"] = "pair";
                    return j;
                } else {
                    return json{{"kind", "curve"}, {"calabi_yau", is_calabi_yau(x)}, {"coregularity", coregularity(x)}};
                }
            },
            fx);
    } catch (const Error& e) {
        return json{{"error", std::string(to_string(e.kind()))}};
    }
}

inline io::json to_json(const Fixture& fx)
{
    return std::visit([](const auto& x) { return io::to_json(x); }, fx);
}

/// Expected keys of evaluate() for each fixture.
inline const std::vector<std::pair<std::string, io::json>>& expected_verdicts()
{
    using io::json;
    auto graph = [](int coreg, const char* complexity, bool cy = true) {
        return json{{"calabi_yau", cy}, {"coregularity", coreg}, {"complexity", complexity}};
    };
    auto fiber = [](bool ct, std::vector<int> failed) { return json{{"cluster_type", ct}, {"failed_conditions", failed}}; };
    auto pair = [](bool ct, json c, int vol) { return json{{"cluster_type", ct}, {"case", c}, {"volume", vol}}; };
    static const std::vector<std::pair<std::string, json>> table = {
        {"fig5.A7.before", graph(0, "2")},
        {"fig5.A7.after", graph(0, "1")},
        {"fig6.A8.before", graph(0, "2")},
        {"fig6.A8.after", graph(0, "1")},
        {"fig7.A1A7.before", graph(0, "3")},
        {"fig7.A1A7.after", graph(0, "2")},
        {"fig8.2A4.before", graph(0, "6")},
        {"fig8.2A4.after", graph(0, "6")},
        {"fig9.A1A2A5", graph(0, "8")},
        {"ex62.graph", graph(0, "7")},
        {"ex62.pic2", fiber(false, {3})},
        {"ex62.pic1", fiber(false, {3})},
        {"ex63.graph", graph(0, "7")},
        {"ex63.pic2", fiber(true, {})},
        {"ex63.pic1", json{{"error", "BoundaryMeetsSingularities"}}},
        {"ex64.total", json{{"calabi_yau", true}, {"coregularity", 0}, {"complexity", "2"}, {"index_integral", false}}},
        {"ex64.fiber", json{{"calabi_yau", true}, {"coregularity", 1}}},
        {"ex65.X2", graph(0, "8")},
        {"ex65.pair", pair(false, 2, 3)},
        {"p123.fan", json{{"rays", 3}, {"smooth", false}, {"complexity", "0"}}},
        {"p123.sextic", pair(true, 2, 6)},
        {"p123.pic1", fiber(true, {})},
        {"x2a4.nodal", pair(true, 5, 1)},
        {"x4a2.two", pair(false, "infeasible", 1)},
        {"p2.fan", json{{"rays", 3}, {"smooth", true}, {"complexity", "0"}, {"self_intersections", {1, 1, 1}}}},
        {"p2.cubic", graph(0, "2")},
        {"p2.triangle", graph(0, "0")},
        {"case1.fiber", graph(0, "7")},
        {"case2.fan", json{{"rays", 5}, {"smooth", false}, {"complexity", "0"}}},
    };
    return table;
}

/// Keys of `expected` whose values differ in `actual`.
inline std::vector<std::string> mismatches(const io::json& actual, const io::json& expected)
{
    std::vector<std::string> out;
    for (const auto& [key, value] : expected.items()) {
        if (!actual.contains(key) || actual.at(key) != value) out.push_back(key);
    }
    return out;
}

} // namespace clustype::fixtures

#endif // CLUSTYPE_FIXTURES_HPP
