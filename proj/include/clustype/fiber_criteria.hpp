#ifndef CLUSTYPE_FIBER_CRITERIA_HPP
#define CLUSTYPE_FIBER_CRITERIA_HPP

// Cluster-type criteria for standard models over toric bases, read off the
// log general fibre (F, B_F), plus the weighted corner blow-up arithmetic
// and a bounded search for toric blow-up witnesses on a fibre graph.

#include "clustype/boundary_graph.hpp"
#include "clustype/error.hpp"
#include "clustype/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clustype {

struct FiberComponent {
    Rational self_int;
    bool irreducible_over_base = true;

    friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

struct FiberSpec {
    std::vector<FiberComponent> components;
    bool has_node = false;
    std::optional<int> node_at_an; // empty: node at a smooth point
    Rational volume = rat(1);
    int rel_picard_rank = 2;
    bool boundary_in_smooth_locus = true;

    friend bool operator==(const FiberSpec&, const FiberSpec&) = default;
};

struct FiberVerdict {
    bool cluster_type = false;
    std::vector<int> failed_conditions;
};

inline void validate(const FiberSpec& f)
{
    if (f.rel_picard_rank != 1 && f.rel_picard_rank != 2) {
        throw Error(ErrorKind::InvalidSpec, "relative Picard rank must be 1 or 2");
    }
    if (f.rel_picard_rank == 1 && f.components.size() != 1) {
        throw Error(ErrorKind::InvalidSpec, "a rank-1 fibre has exactly one boundary component");
    }
    if (f.components.empty()) {
        throw Error(ErrorKind::InvalidSpec, "fibre boundary has no components");
    }
    if (f.volume <= rat(0)) {
        throw Error(ErrorKind::InvalidSpec, "fibre volume must be positive");
    }
    if (f.node_at_an && *f.node_at_an < 1) {
        throw Error(ErrorKind::InvalidSpec, "node location A_n needs n >= 1");
    }
}

namespace detail {

inline void require_fiber(const FiberSpec& f, int rank)
{
    validate(f);
    if (f.rel_picard_rank != rank) {
        throw Error(ErrorKind::WrongRank,
            "expected relative Picard rank " + std::to_string(rank) + ", got " + std::to_string(f.rel_picard_rank));
    }
    if (!f.boundary_in_smooth_locus || (f.has_node && f.node_at_an)) {
        throw Error(ErrorKind::BoundaryMeetsSingularities, "fibre boundary is not contained in the smooth locus");
    }
}

} // namespace detail

/// Relative Picard rank two. Conditions: (1) B_F has a node, (2) every
/// component restricts irreducibly to the general fibre, (3) some component
/// has positive self-intersection.
inline FiberVerdict check_pic2(const FiberSpec& f)
{
    detail::require_fiber(f, 2);
    FiberVerdict v;
    if (!f.has_node) {
        v.failed_conditions.push_back(1);
    }
    const bool irreducible = std::all_of(f.components.begin(), f.components.end(),
        [](const FiberComponent& c) { return c.irreducible_over_base; });
    if (!irreducible) {
        v.failed_conditions.push_back(2);
    }
    const bool positive = std::any_of(f.components.begin(), f.components.end(),
        [](const FiberComponent& c) { return c.self_int > rat(0); });
    if (!positive) {
        v.failed_conditions.push_back(3);
    }
    v.cluster_type = v.failed_conditions.empty();
    return v;
}

/// Relative Picard rank one. Conditions: (1) node, (2) irreducible over the
/// base, (3) vol(F) >= 5.
inline FiberVerdict check_pic1(const FiberSpec& f)
{
    detail::require_fiber(f, 1);
    FiberVerdict v;
    if (!f.has_node) {
        v.failed_conditions.push_back(1);
    }
    if (!f.components.front().irreducible_over_base) {
        v.failed_conditions.push_back(2);
    }
    if (f.volume < rat(5)) {
        v.failed_conditions.push_back(3);
    }
    v.cluster_type = v.failed_conditions.empty();
    return v;
}

inline FiberVerdict check_fiber(const FiberSpec& f)
{
    validate(f);
    return f.rel_picard_rank == 1 ? check_pic1(f) : check_pic2(f);
}

/// Blows up the node of the general fibre of a rank-1 model: the boundary
/// becomes the strict transform (self-intersection vol - 4) plus the
/// exceptional (-1)-curve.
inline FiberSpec node_blowup_reduce(const FiberSpec& f)
{
    validate(f);
    if (f.rel_picard_rank != 1) {
        throw Error(ErrorKind::PreconditionFailed, "node reduction starts from relative Picard rank 1");
    }
    if (!f.has_node) {
        throw Error(ErrorKind::PreconditionFailed, "fibre boundary has no node to blow up");
    }
    if (f.node_at_an) {
        throw Error(ErrorKind::PreconditionFailed, "node sits at a singular point");
    }
    FiberSpec out = f;
    out.rel_picard_rank = 2;
    out.components = {
        FiberComponent{f.volume - rat(4), f.components.front().irreducible_over_base},
        FiberComponent{rat(-1), true},
    };
    out.has_node = true;
    return out;
}

// ---------------------------------------------------------------------------
// Weighted corner blow-up

struct WeightedCornerData {
    Rational c1_tilde_sq;
    Rational c2_tilde_sq;
    Rational c1_dot_e;
    Rational c2_dot_e;
    Rational c1_dot_c2 = rat(1);

    friend bool operator==(const WeightedCornerData&, const WeightedCornerData&) = default;
};

/// Blow-up of the ideal (x^alpha, y^beta) at the node C1 n C2.
inline WeightedCornerData weighted_corner_numbers(
    const Rational& c1_sq, const Rational& c2_sq, std::int64_t alpha, std::int64_t beta)
{
    if (alpha < 1 || beta < 1) {
        throw Error(ErrorKind::InvalidSpec, "weights must be positive");
    }
    return WeightedCornerData{
        c1_sq - rat(alpha, beta),
        c2_sq - rat(beta, alpha),
        rat(1, beta),
        rat(1, alpha),
        rat(1),
    };
}

/// (m1 C1~ + m2 C2~)^2.
inline Rational obstruction_value(std::int64_t m1, std::int64_t m2, const WeightedCornerData& d)
{
    const Rational a = rat(m1);
    const Rational b = rat(m2);
    return a * a * d.c1_tilde_sq + rat(2) * a * b * d.c1_dot_c2 + b * b * d.c2_tilde_sq;
}

/// -(alpha m1 - beta m2)^2 / (alpha beta).
inline Rational obstruction_bound(std::int64_t alpha, std::int64_t beta, std::int64_t m1, std::int64_t m2)
{
    const std::int64_t diff = alpha * m1 - beta * m2;
    return -rat(diff * diff, alpha * beta);
}

// ---------------------------------------------------------------------------
// Witness search

/// An intersection point of the boundary: an edge point (a != b), a node of
/// a (a == b), or a marked point (index set).
struct BoundaryPoint {
    VertexId a;
    VertexId b;
    std::optional<std::size_t> marked;

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

struct Witness {
    std::vector<Corner> script;
    BoundaryGraph blown_up;
    std::map<VertexId, int, NaturalLess> divisor;
    Rational divisor_square;
    BoundaryPoint point;
};

struct WitnessSearchOptions {
    int max_blowups = 3;
    int coefficient_cap = 6;
};

namespace detail {

inline std::vector<BoundaryPoint> boundary_points(const BoundaryGraph& g)
{
    std::vector<BoundaryPoint> out;
    for (const auto& e : g.edges()) {
        if (e.multiplicity - g.marked_edge_occupancy(e.a, e.b) > 0) {
            out.push_back(BoundaryPoint{e.a, e.b, std::nullopt});
        }
    }
    for (const auto& [id, v] : g.vertices()) {
        if (v.nodes - g.marked_node_occupancy(id) > 0) {
            out.push_back(BoundaryPoint{id, id, std::nullopt});
        }
    }
    for (std::size_t i = 0; i < g.marked_points().size(); ++i) {
        const auto& br = g.marked_points()[i].branches;
        out.push_back(BoundaryPoint{br.front(), br.back(), i});
    }
    return out;
}

inline bool point_avoids(const BoundaryGraph& g, const BoundaryPoint& p, const std::vector<VertexId>& support)
{
    auto in = [&](const VertexId& id) { return std::find(support.begin(), support.end(), id) != support.end(); };
    if (p.marked) {
        const auto& br = g.marked_points()[*p.marked].branches;
        return std::none_of(br.begin(), br.end(), in);
    }
    return !in(p.a) && !in(p.b);
}

inline std::vector<Corner> corners(const BoundaryGraph& g)
{
    std::vector<Corner> out;
    for (const auto& p : boundary_points(g)) {
        if (!p.marked) {
            out.push_back(Corner{p.a, p.b});
        }
    }
    return out;
}

// Coefficient vectors in [1, cap]^k ordered by total, then lexicographically.
template <class Visit>
bool for_each_positive_vector(std::size_t k, int cap, Visit&& visit)
{
    std::vector<int> m(k, 1);
    const int max_total = static_cast<int>(k) * cap;
    for (int total = static_cast<int>(k); total <= max_total; ++total) {
        // Enumerate compositions of total into k parts in [1, cap], lexicographically.
        auto rec = [&](auto&& self, std::size_t i, int remaining) -> bool {
            if (i + 1 == k) {
                if (remaining < 1 || remaining > cap) {
                    return false;
                }
                m[i] = remaining;
                return visit(m);
            }
            const int rest = static_cast<int>(k - i - 1);
            for (int v = 1; v <= cap; ++v) {
                const int left = remaining - v;
                if (left < rest || left > rest * cap) {
                    continue;
                }
                m[i] = v;
                if (self(self, i + 1, left)) {
                    return true;
                }
            }
            return false;
        };
        if (rec(rec, 0, total)) {
            return true;
        }
    }
    return false;
}

inline std::optional<Witness> witness_at(const BoundaryGraph& h, const std::vector<VertexId>& originals, int cap)
{
    const auto points = boundary_points(h);
    const auto n = originals.size();
    // Supports ordered by size, then by the order of the original components.
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<VertexId> support;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) support.push_back(originals[i]);
            }
            const BoundaryPoint* free_point = nullptr;
            for (const auto& p : points) {
                if (point_avoids(h, p, support)) {
                    free_point = &p;
                    break;
                }
            }
            if (free_point == nullptr) {
                continue;
            }
            std::optional<Witness> found;
            for_each_positive_vector(size, cap, [&](const std::vector<int>& m) {
                Rational sq = rat(0);
                for (std::size_t i = 0; i < size; ++i) {
                    for (std::size_t j = 0; j < size; ++j) {
                        sq += rat(m[i] * m[j]) * h.intersection(support[i], support[j]);
                    }
                }
                if (sq < rat(0)) {
                    return false;
                }
                Witness w{{}, h, {}, sq, *free_point};
                for (std::size_t i = 0; i < size; ++i) {
                    w.divisor[support[i]] = m[i];
                }
                found = std::move(w);
                return true;
            });
            if (found) {
                return found;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

} // namespace detail

/// Breadth-first search over scripts of corner blow-ups (edges and nodes of
/// the boundary) for a nonzero effective E supported on strict transforms
/// of the original coefficient-one components with E^2 >= 0, together with
/// an intersection point of the boundary away from supp E. Scripts are
/// explored by length, then in the order of boundary_points. Meaningful on
/// index-one fibres (all coefficients 1).
inline std::optional<Witness> prop51_witness_search(const BoundaryGraph& fiber, WitnessSearchOptions opts = {})
{
    if (opts.max_blowups < 0 || opts.coefficient_cap < 1) {
        throw Error(ErrorKind::InvalidSpec, "search bounds must be nonnegative with a positive coefficient cap");
    }
    const auto originals = reduced_part(fiber);
    if (originals.empty()) {
        return std::nullopt;
    }
    struct State {
        BoundaryGraph graph;
        std::vector<Corner> script;
    };
    std::vector<State> level{State{fiber, {}}};
    for (int depth = 0; depth <= opts.max_blowups; ++depth) {
        for (const auto& s : level) {
            if (auto w = detail::witness_at(s.graph, originals, opts.coefficient_cap)) {
                w->script = s.script;
                return w;
            }
        }
        if (depth == opts.max_blowups) {
            break;
        }
        std::vector<State> next;
        for (const auto& s : level) {
            for (const auto& c : detail::corners(s.graph)) {
                auto script = s.script;
                script.push_back(c);
                next.push_back(State{blowup_corner(s.graph, c, s.graph.fresh_id("X")), std::move(script)});
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

} // namespace clustype

#endif // CLUSTYPE_FIBER_CRITERIA_HPP
