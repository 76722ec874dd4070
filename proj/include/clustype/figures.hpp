#ifndef CLUSTYPE_FIGURES_HPP
#define CLUSTYPE_FIGURES_HPP

// Dual graphs of minimal resolutions Y(S) of rank-one Gorenstein del Pezzo
// surfaces, with the contraction panels that relate them. Legend: E_i are
// (-2)-curves of the singular chains, F_i are (-1)-curves, C is a 0-curve.
// Boundary curves have coefficient 1, the rest coefficient 0.

#include "clustype/boundary_graph.hpp"

#include <string>
#include <vector>

namespace clustype::figures {

namespace detail {

inline void chain(BoundaryGraph& g, int first, int last, const Rational& coeff)
{
    for (int i = first; i <= last; ++i) {
        g.add_curve("E" + std::to_string(i), rat(-2), coeff);
    }
    for (int i = first; i < last; ++i) {
        g.add_edge("E" + std::to_string(i), "E" + std::to_string(i + 1));
    }
}

} // namespace detail

/// Y(A7): boundary cycle C, E1..E7; F1 on E2 and F2 on E6.
inline BoundaryGraph y_a7()
{
    BoundaryGraph g(8);
    g.add_curve("C", rat(0));
    detail::chain(g, 1, 7, rat(1));
    g.add_edge("C", "E1");
    g.add_edge("E7", "C");
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F2", rat(-1), rat(0));
    g.add_edge("F1", "E2");
    g.add_edge("F2", "E6");
    return g;
}

/// Right panel after contracting F1 in Y(A7): E2 is now a (-1)-curve,
/// leaving the chains E1 and E3..E7.
inline BoundaryGraph y_a1_a5()
{
    BoundaryGraph g(7);
    g.add_curve("C", rat(0));
    g.add_curve("E1", rat(-2));
    g.add_curve("E2", rat(-1));
    detail::chain(g, 3, 7, rat(1));
    g.add_edge("C", "E1");
    g.add_edge("E1", "E2");
    g.add_edge("E2", "E3");
    g.add_edge("E7", "C");
    g.add_curve("F2", rat(-1), rat(0));
    g.add_edge("F2", "E6");
    return g;
}

/// Y(A8): boundary cycle E1..E8, F2; F1 on E6 and F3 on E3.
inline BoundaryGraph y_a8()
{
    BoundaryGraph g(9);
    detail::chain(g, 1, 8, rat(1));
    g.add_curve("F2", rat(-1));
    g.add_edge("E8", "F2");
    g.add_edge("F2", "E1");
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F3", rat(-1), rat(0));
    g.add_edge("F1", "E6");
    g.add_edge("F3", "E3");
    return g;
}

/// After contracting F1 in Y(A8): E6 becomes (-1); chains E1..E5 and E7, E8.
inline BoundaryGraph y_a2_a5()
{
    BoundaryGraph g(8);
    detail::chain(g, 1, 5, rat(1));
    g.add_curve("E6", rat(-1));
    detail::chain(g, 7, 8, rat(1));
    g.add_edge("E5", "E6");
    g.add_edge("E6", "E7");
    g.add_curve("F2", rat(-1));
    g.add_edge("E8", "F2");
    g.add_edge("F2", "E1");
    g.add_curve("F3", rat(-1), rat(0));
    g.add_edge("F3", "E3");
    return g;
}

/// Y(A1+A7): boundary cycle E1..E7, F4; E8 is the A1 curve off the boundary.
/// F1 on E4; F2 on E2 and E8; F3 on E6 and E8.
inline BoundaryGraph y_a1_a7()
{
    BoundaryGraph g(9);
    detail::chain(g, 1, 7, rat(1));
    g.add_curve("F4", rat(-1));
    g.add_edge("E7", "F4");
    g.add_edge("F4", "E1");
    g.add_curve("E8", rat(-2), rat(0));
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F2", rat(-1), rat(0));
    g.add_curve("F3", rat(-1), rat(0));
    g.add_edge("F1", "E4");
    g.add_edge("F2", "E2");
    g.add_edge("F2", "E8");
    g.add_edge("F3", "E6");
    g.add_edge("F3", "E8");
    return g;
}

/// After contracting F1 in Y(A1+A7): E4 becomes (-1); chains E1..E3,
/// E5..E7 and E8.
inline BoundaryGraph y_a1_2a3()
{
    BoundaryGraph g(8);
    detail::chain(g, 1, 3, rat(1));
    g.add_curve("E4", rat(-1));
    detail::chain(g, 5, 7, rat(1));
    g.add_edge("E3", "E4");
    g.add_edge("E4", "E5");
    g.add_curve("F4", rat(-1));
    g.add_edge("E7", "F4");
    g.add_edge("F4", "E1");
    g.add_curve("E8", rat(-2), rat(0));
    g.add_curve("F2", rat(-1), rat(0));
    g.add_curve("F3", rat(-1), rat(0));
    g.add_edge("F2", "E2");
    g.add_edge("F2", "E8");
    g.add_edge("F3", "E6");
    g.add_edge("F3", "E8");
    return g;
}

/// Y(2A4): chain E1..E4 off the boundary; boundary cycle E5..E8, F3.
/// F1 on E2 and E5; F2 on E4 and E6.
inline BoundaryGraph y_2a4()
{
    BoundaryGraph g(9);
    detail::chain(g, 1, 4, rat(0));
    detail::chain(g, 5, 8, rat(1));
    g.add_curve("F3", rat(-1));
    g.add_edge("E8", "F3");
    g.add_edge("F3", "E5");
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F2", rat(-1), rat(0));
    g.add_edge("F1", "E2");
    g.add_edge("F1", "E5");
    g.add_edge("F2", "E4");
    g.add_edge("F2", "E6");
    return g;
}

/// After contracting F3, E8, E7, E6 in Y(2A4): E5 is a nodal curve of
/// self-intersection 5; F2 is a 0-curve meeting E5 twice, once through its
/// node, so the three branches E5, E5, F2 share a point.
inline BoundaryGraph y_a4()
{
    BoundaryGraph g(5);
    detail::chain(g, 1, 4, rat(0));
    g.add_curve("E5", rat(5), rat(1), 1);
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F2", rat(0), rat(0));
    g.add_edge("F1", "E2");
    g.add_edge("F1", "E5");
    g.add_edge("F2", "E4");
    g.add_edge("F2", "E5", 2);
    g.add_marked_point({"E5", "E5", "F2"});
    return g;
}

/// Y(A1+A2+A5): chain E1..E5 and E6 off the boundary; boundary triangle
/// E7, E8, F3. F1 on E2 and E7; F2 on E4 and E8; F4 on E5, E6 and E7.
inline BoundaryGraph y_a1_a2_a5()
{
    BoundaryGraph g(9);
    detail::chain(g, 1, 5, rat(0));
    g.add_curve("E6", rat(-2), rat(0));
    detail::chain(g, 7, 8, rat(1));
    g.add_curve("F3", rat(-1));
    g.add_edge("E8", "F3");
    g.add_edge("F3", "E7");
    g.add_curve("F1", rat(-1), rat(0));
    g.add_curve("F2", rat(-1), rat(0));
    g.add_curve("F4", rat(-1), rat(0));
    g.add_edge("F1", "E2");
    g.add_edge("F1", "E7");
    g.add_edge("F2", "E4");
    g.add_edge("F2", "E8");
    g.add_edge("F4", "E5");
    g.add_edge("F4", "E6");
    g.add_edge("F4", "E7");
    return g;
}

struct ContractionFigure {
    std::string tag;
    std::string caption;
    BoundaryGraph before;
    std::vector<VertexId> script;
    BoundaryGraph expected_after;
};

inline std::vector<ContractionFigure> contraction_figures()
{
    return {
        {"A7->A1A5", "Contraction from Y(A7) to Y(A1+A5)", y_a7(), {"F1"}, y_a1_a5()},
        {"A8->A2A5", "Contraction from Y(A8) to Y(A2+A5)", y_a8(), {"F1"}, y_a2_a5()},
        {"A1A7->A12A3", "Contraction from Y(A1+A7) to Y(A1+2A3)", y_a1_a7(), {"F1"}, y_a1_2a3()},
        {"2A4->A4", "Contraction from Y(2A4) to Y(A4)", y_2a4(), {"F3", "E8", "E7", "E6"}, y_a4()},
    };
}

} // namespace clustype::figures

#endif // CLUSTYPE_FIGURES_HPP
