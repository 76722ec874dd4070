#ifndef CLUSTYPE_JSON_IO_HPP
#define CLUSTYPE_JSON_IO_HPP

// JSON encodings of graphs, fibre specs, fans, pair specs and verdicts.
// Rationals are written as "p/q" strings; integers are accepted on input.

#include "clustype/boundary_graph.hpp"
#include "clustype/error.hpp"
#include "clustype/fiber_criteria.hpp"
#include "clustype/gdp_atlas.hpp"
#include "clustype/lattice_fan.hpp"
#include "clustype/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace clustype::io {

using json = nlohmann::ordered_json;

namespace detail {

inline Error bad(const std::string& what)
{
    return Error(ErrorKind::ParseError, what);
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

inline std::int64_t get_int(const json& j, const char* what)
{
    if (!j.is_number_integer()) {
        throw bad(std::string("'") + what + "' must be an integer");
    }
    return j.get<std::int64_t>();
}

inline bool get_bool(const json& j, const char* what)
{
    if (!j.is_boolean()) {
        throw bad(std::string("'") + what + "' must be a boolean");
    }
    return j.get<bool>();
}

inline std::string get_string(const json& j, const char* what)
{
    if (!j.is_string()) {
        throw bad(std::string("'") + what + "' must be a string");
    }
    return j.get<std::string>();
}

} // namespace detail

inline json rational_to_json(const Rational& q)
{
    return to_string(q);
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return rat(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw detail::bad("rational must be an integer or a \"p/q\" string");
}

inline json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw detail::bad(std::string("invalid JSON: ") + e.what());
    }
}

// -- BoundaryGraph ----------------------------------------------------------

inline json to_json(const BoundaryGraph& g)
{
    json j;
    j["rho"] = g.picard_rank();
    j["vertices"] = json::array();
    for (const auto& [id, v] : g.vertices()) {
        j["vertices"].push_back(
            {{"id", id}, {"sq", rational_to_json(v.self_int)}, {"coeff", rational_to_json(v.coeff)}, {"nodes", v.nodes}});
    }
    j["edges"] = json::array();
    for (const auto& e : g.edges()) {
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"m", e.multiplicity}});
    }
    j["marked_points"] = json::array();
    for (const auto& mp : g.marked_points()) {
        j["marked_points"].push_back({{"branches", mp.branches}});
    }
    return j;
}

inline BoundaryGraph graph_from_json(const json& j)
{
    using namespace detail;
    BoundaryGraph g(static_cast<int>(get_int(field(j, "rho"), "rho")));
    const auto& vs = field(j, "vertices");
    if (!vs.is_array()) throw bad("'vertices' must be an array");
    for (const auto& v : vs) {
        CurveVertex cv;
        cv.id = get_string(field(v, "id"), "id");
        cv.self_int = rational_from_json(field(v, "sq"));
        cv.coeff = v.contains("coeff") ? rational_from_json(v.at("coeff")) : rat(1);
        cv.nodes = v.contains("nodes") ? static_cast<int>(get_int(v.at("nodes"), "nodes")) : 0;
        g.add_vertex(std::move(cv));
    }
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            const int m = e.contains("m") ? static_cast<int>(get_int(e.at("m"), "m")) : 1;
            g.add_edge(get_string(field(e, "a"), "a"), get_string(field(e, "b"), "b"), m);
        }
    }
    if (j.contains("marked_points")) {
        for (const auto& mp : j.at("marked_points")) {
            std::vector<VertexId> branches;
            for (const auto& b : field(mp, "branches")) branches.push_back(get_string(b, "branch"));
            g.add_marked_point(std::move(branches));
        }
    }
    return g;
}

// -- FiberSpec ----------------------------------------------------------------

inline json to_json(const FiberSpec& f)
{
    json j;
    j["rank"] = f.rel_picard_rank;
    j["components"] = json::array();
    for (const auto& c : f.components) {
        j["components"].push_back({{"sq", rational_to_json(c.self_int)}, {"irreducible", c.irreducible_over_base}});
    }
    j["node"] = {{"present", f.has_node}, {"at", f.node_at_an ? "A" + std::to_string(*f.node_at_an) : "smooth"}};
    j["volume"] = rational_to_json(f.volume);
    j["smooth_locus"] = f.boundary_in_smooth_locus;
    return j;
}

inline FiberSpec fiber_from_json(const json& j)
{
    using namespace detail;
    FiberSpec f;
    f.rel_picard_rank = static_cast<int>(get_int(field(j, "rank"), "rank"));
    for (const auto& c : field(j, "components")) {
        f.components.push_back(FiberComponent{
            rational_from_json(field(c, "sq")),
            c.contains("irreducible") ? get_bool(c.at("irreducible"), "irreducible") : true});
    }
    const auto& node = field(j, "node");
    f.has_node = get_bool(field(node, "present"), "present");
    if (node.contains("at")) {
        const auto at = get_string(node.at("at"), "at");
        if (at != "smooth") {
            const auto sings = parse_singularities(at);
            if (sings.size() != 1 || sings.front().family != 'A') {
                throw Error(ErrorKind::InvalidSpec, "node location must be \"smooth\" or \"A<n>\"");
            }
            f.node_at_an = sings.front().rank;
        }
    }
    f.volume = rational_from_json(field(j, "volume"));
    f.boundary_in_smooth_locus = j.contains("smooth_locus") ? get_bool(j.at("smooth_locus"), "smooth_locus") : true;
    validate(f);
    return f;
}

inline json to_json(const FiberVerdict& v)
{
    return {{"cluster_type", v.cluster_type}, {"failed_conditions", v.failed_conditions}};
}

// -- Fan2 -------------------------------------------------------------------

inline json to_json(const Fan2& fan)
{
    json j = json::array();
    for (const auto& r : fan.rays()) j.push_back({r.x, r.y});
    return j;
}

inline Fan2 fan_from_json(const json& j)
{
    if (!j.is_array()) throw detail::bad("a fan is an array of [x, y] rays");
    std::vector<RayVector> rays;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != 2) throw detail::bad("a ray is a two-element integer array");
        rays.push_back(RayVector{detail::get_int(r[0], "x"), detail::get_int(r[1], "y")});
    }
    return make_fan(rays);
}

inline json to_json(const FibrationData& d)
{
    auto list = [](const std::vector<ClassifiedRay>& rays) {
        json out = json::array();
        for (const auto& r : rays) out.push_back({{"ray", {r.ray.x, r.ray.y}}, {"multiplicity", r.multiplicity}});
        return out;
    };
    json vertical = json::array();
    for (const auto& r : d.vertical) vertical.push_back({r.ray.x, r.ray.y});
    return {{"vertical", vertical}, {"fiber_over_zero", list(d.fiber_over_zero)}, {"fiber_over_infinity", list(d.fiber_over_infinity)}};
}

// -- Pairs and surfaces -------------------------------------------------------

inline json to_json(const PairSpec& p)
{
    json b;
    switch (p.kind) {
    case BoundaryKind::MultiComponent:
        b["kind"] = "multi";
        b["components"] = p.components;
        if (p.corner_ranks) b["corners"] = {p.corner_ranks->first, p.corner_ranks->second};
        break;
    case BoundaryKind::NodalSmoothLocus:
        b["kind"] = "nodal";
        break;
    case BoundaryKind::NodalAtA:
        b["kind"] = "nodal_at";
        b["n"] = p.node_rank;
        break;
    }
    return {{"singularities", to_string(p.family)}, {"boundary", b}};
}

inline PairSpec pair_from_json(const json& j)
{
    using namespace detail;
    PairSpec p;
    p.family = parse_singularities(get_string(field(j, "singularities"), "singularities"));
    const auto& b = field(j, "boundary");
    const auto kind = get_string(field(b, "kind"), "kind");
    if (kind == "multi") {
        p.kind = BoundaryKind::MultiComponent;
        p.components = static_cast<int>(get_int(field(b, "components"), "components"));
        if (b.contains("corners")) {
            const auto& c = b.at("corners");
            if (!c.is_array() || c.size() != 2) throw bad("'corners' is a pair of A_n ranks");
            p.corner_ranks = std::pair<int, int>{static_cast<int>(get_int(c[0], "n")), static_cast<int>(get_int(c[1], "m"))};
        }
    } else if (kind == "nodal") {
        p.kind = BoundaryKind::NodalSmoothLocus;
    } else if (kind == "nodal_at") {
        p.kind = BoundaryKind::NodalAtA;
        p.node_rank = static_cast<int>(get_int(field(b, "n"), "n"));
    } else {
        throw Error(ErrorKind::InvalidSpec, "boundary kind must be multi, nodal or nodal_at");
    }
    return p;
}

inline json to_json(const PairVerdict& v)
{
    json j;
    j["cluster_type"] = v.cluster_type;
    if (v.case_number) {
        j["case"] = *v.case_number;
    } else {
        j["case"] = "infeasible";
    }
    j["volume"] = v.volume;
    j["reason"] = v.reason;
    return j;
}

inline json to_json(const SurfaceVerdict& v)
{
    return {{"cluster_type", v.cluster_type}, {"volume", v.volume}, {"reason", v.reason}};
}

inline json to_json(const GdpFamily& f)
{
    json j;
    j["singularities"] = to_string(f.singularities);
    j["volume"] = f.volume;
    j["toric"] = f.toric;
    j["cluster_type"] = f.cluster_type;
    if (f.source_figure) j["figure"] = *f.source_figure;
    if (f.resolution_graph) j["resolution_graph"] = to_json(*f.resolution_graph);
    return j;
}

inline json to_json(const CurvePair& c)
{
    json pts = json::array();
    for (const auto& b : c.point_coeffs) pts.push_back(rational_to_json(b));
    return {{"curve", "P1"}, {"points", pts}};
}

inline CurvePair curve_pair_from_json(const json& j)
{
    CurvePair c;
    for (const auto& b : detail::field(j, "points")) c.point_coeffs.push_back(rational_from_json(b));
    return c;
}

inline json to_json(const SingularModel& m)
{
    json j;
    j["rho"] = m.picard_rank;
    j["singularities"] = json::array();
    for (const auto& mark : m.marks) {
        j["singularities"].push_back({{"type", "A" + std::to_string(mark.rank)}, {"chain", mark.chain}, {"incident", mark.incident}});
    }
    j["curves"] = m.curves;
    j["intersection"] = json::array();
    for (const auto& row : m.intersection) {
        json r = json::array();
        for (const auto& q : row) r.push_back(rational_to_json(q));
        j["intersection"].push_back(r);
    }
    return j;
}

inline json to_json(const Witness& w)
{
    json script = json::array();
    for (const auto& c : w.script) {
        script.push_back(c.is_node() ? json{{"node", c.a}} : json{{"edge", {c.a, c.b}}});
    }
    json divisor = json::object();
    for (const auto& [id, m] : w.divisor) divisor[id] = m;
    json point;
    if (w.point.marked) {
        point = {{"marked_point", *w.point.marked}};
    } else if (w.point.a == w.point.b) {
        point = {{"node", w.point.a}};
    } else {
        point = {{"edge", {w.point.a, w.point.b}}};
    }
    return {{"script", script}, {"divisor", divisor}, {"divisor_square", rational_to_json(w.divisor_square)}, {"point", point}};
}

} // namespace clustype::io

#endif // CLUSTYPE_JSON_IO_HPP
