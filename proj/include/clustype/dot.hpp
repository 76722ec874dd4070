#ifndef CLUSTYPE_DOT_HPP
#define CLUSTYPE_DOT_HPP

#include "clustype/boundary_graph.hpp"

#include <sstream>
#include <string>

namespace clustype {

/// Graphviz rendering of a dual graph. Vertex styles: dashed for (-1)-curves,
/// solid for boundary (-2)-curves, bold for other boundary curves, dotted
/// for curves with coefficient below one. Nodes of a curve are drawn as
/// self-loops and marked points as point-shaped vertices. Output depends only
/// on the graph value.
inline std::string emit_dot(const BoundaryGraph& g, const std::string& name = "G")
{
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "graph " << quote(name) << " {\n";
    for (const auto& [id, v] : g.vertices()) {
        const char* style = "dotted";
        if (v.self_int == rat(-1)) {
            style = "dashed";
        } else if (v.coeff == rat(1)) {
            style = v.self_int == rat(-2) ? "solid" : "bold";
        }
        os << "  " << quote(id) << " [label=" << quote(id + " (" + to_string(v.self_int) + ")") << ", style=" << style
           << "];\n";
    }
    for (const auto& [id, v] : g.vertices()) {
        for (int k = 0; k < v.nodes; ++k) {
            os << "  " << quote(id) << " -- " << quote(id) << ";\n";
        }
    }
    for (const auto& e : g.edges()) {
        os << "  " << quote(e.a) << " -- " << quote(e.b) << " [label=\"" << e.multiplicity << "\"];\n";
    }
    for (std::size_t i = 0; i < g.marked_points().size(); ++i) {
        const auto p = quote("@p" + std::to_string(i + 1));
        os << "  " << p << " [shape=point];\n";
        for (const auto& b : g.marked_points()[i].branches) {
            os << "  " << p << " -- " << quote(b) << " [style=dotted];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace clustype

#endif // CLUSTYPE_DOT_HPP
