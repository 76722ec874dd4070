#ifndef CLUSTYPE_TESTS_SUPPORT_HPP
#define CLUSTYPE_TESTS_SUPPORT_HPP

#include "clustype/boundary_graph.hpp"
#include "clustype/lattice_fan.hpp"

#include <random>
#include <string>
#include <vector>

namespace clustype::testing_support {

inline int uniform(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// k lines in general position on the plane with coefficients in quarters
/// summing to 3, so K + B is trivial.
inline BoundaryGraph random_line_arrangement(std::mt19937& rng, int k)
{
    std::vector<int> quarters;
    do {
        quarters.clear();
        int sum = 0;
        for (int i = 0; i < k; ++i) {
            quarters.push_back(uniform(rng, 1, 4));
            sum += quarters.back();
        }
        if (sum == 12) break;
    } while (true);
    BoundaryGraph g(1);
    for (int i = 0; i < k; ++i) {
        g.add_curve("L" + std::to_string(i + 1), rat(1), rat(quarters[static_cast<std::size_t>(i)], 4));
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            g.add_edge("L" + std::to_string(i + 1), "L" + std::to_string(j + 1));
        }
    }
    return g;
}

/// Balanced starting graphs on the plane: line arrangements, a nodal cubic,
/// or a conic with two lines.
inline BoundaryGraph random_base(std::mt19937& rng)
{
    switch (uniform(rng, 0, 5)) {
    case 0: {
        BoundaryGraph g(1);
        g.add_curve("B", rat(9), rat(1), 1);
        return g;
    }
    case 1: {
        // Conic Q with coefficient 1/2 and two lines with coefficient 1.
        BoundaryGraph g(1);
        g.add_curve("Q", rat(4), rat(1, 2)).add_curve("L1", rat(1)).add_curve("L2", rat(1));
        g.add_edge("Q", "L1", 2).add_edge("Q", "L2", 2).add_edge("L1", "L2");
        return g;
    }
    case 2: {
        // Conic Q with coefficient 1 and two lines with coefficient 1/2 each.
        BoundaryGraph g(1);
        g.add_curve("Q", rat(4)).add_curve("L1", rat(1), rat(1, 2)).add_curve("L2", rat(1), rat(1, 2));
        g.add_edge("Q", "L1", 2).add_edge("Q", "L2", 2).add_edge("L1", "L2");
        return g;
    }
    default:
        return random_line_arrangement(rng, uniform(rng, 3, 6));
    }
}

/// A balanced graph with at most max_vertices vertices: a base followed by
/// random crepant blow-ups whose exceptional coefficients stay in [0, 1].
inline BoundaryGraph random_balanced_graph(std::mt19937& rng, std::size_t max_vertices = 8)
{
    BoundaryGraph g = random_base(rng);
    const int extra = uniform(rng, 0, 3);
    for (int step = 0; step < extra && g.vertex_count() < max_vertices; ++step) {
        std::vector<Corner> options;
        for (const auto& e : g.edges()) {
            if (g.vertex(e.a).coeff + g.vertex(e.b).coeff >= rat(1)) options.push_back(Corner{e.a, e.b});
        }
        for (const auto& [id, v] : g.vertices()) {
            if (v.nodes > 0 && v.coeff * rat(2) >= rat(1)) options.push_back(Corner{id, id});
        }
        if (options.empty()) break;
        g = blowup_corner(g, options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))]);
    }
    return g;
}

/// Complete smooth fans: the plane or a Hirzebruch surface, refined by
/// random smooth star subdivisions.
inline Fan2 random_smooth_fan(std::mt19937& rng, int max_subdivisions = 6)
{
    Fan2 fan = uniform(rng, 0, 1) == 0 ? make_fan({{1, 0}, {0, 1}, {-1, -1}})
                                        : make_fan({{1, 0}, {0, 1}, {-1, uniform(rng, 0, 3)}, {0, -1}});
    const int k = uniform(rng, 0, max_subdivisions);
    for (int i = 0; i < k; ++i) {
        const auto c = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fan.size()) - 1));
        fan = star_subdivide(fan, fan.ray(c) + fan.next(c));
    }
    return fan;
}

} // namespace clustype::testing_support

#endif // CLUSTYPE_TESTS_SUPPORT_HPP
