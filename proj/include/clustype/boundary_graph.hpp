#ifndef CLUSTYPE_BOUNDARY_GRAPH_HPP
#define CLUSTYPE_BOUNDARY_GRAPH_HPP

// Weighted dual graphs of surface pairs (X, B) and the crepant surgery
// calculus on them: blow-ups at boundary points, blow-downs of (-1)-curves,
// the Calabi-Yau balance, complexity, coregularity and contraction of
// (-2)-chains to A_n points.

#include "clustype/error.hpp"
#include "clustype/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clustype {

using VertexId = std::string;

/// Orders "E2" before "E10": digit runs compare numerically. Ties fall back
/// to plain string order so distinct ids never compare equal.
struct NaturalLess {
    bool operator()(std::string_view a, std::string_view b) const
    {
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() && j < b.size()) {
            const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
            const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
            if (da && db) {
                std::size_t ie = i;
                std::size_t je = j;
                while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
                while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
                auto na = a.substr(i, ie - i);
                auto nb = b.substr(j, je - j);
                while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
                while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
                if (na.size() != nb.size()) {
                    return na.size() < nb.size();
                }
                if (na != nb) {
                    return na < nb;
                }
                i = ie;
                j = je;
                continue;
            }
            if (a[i] != b[j]) {
                return a[i] < b[j];
            }
            ++i;
            ++j;
        }
        if ((a.size() - i) != (b.size() - j)) {
            return (a.size() - i) < (b.size() - j);
        }
        return a < b;
    }
};

struct CurveVertex {
    VertexId id;
    Rational self_int;
    Rational coeff = rat(1);
    int nodes = 0;
    bool rational = true;

    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

struct Edge {
    VertexId a;
    VertexId b;
    int multiplicity = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A point where three or more boundary branches meet. A curve may appear
/// more than once when one of its nodes sits at the point.
struct MarkedPoint {
    std::vector<VertexId> branches;

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// An intersection point addressed by the curves through it: an edge point
/// when a != b, a node of a when a == b.
struct Corner {
    VertexId a;
    VertexId b;

    bool is_node() const noexcept { return a == b; }
    friend bool operator==(const Corner&, const Corner&) = default;
};

class BoundaryGraph {
public:
    using VertexMap = std::map<VertexId, CurveVertex, NaturalLess>;

    explicit BoundaryGraph(int picard_rank = 1)
        : picard_rank_(picard_rank)
    {
        if (picard_rank < 1) {
            throw Error(ErrorKind::InvalidGraph, "Picard rank must be positive");
        }
    }

    BoundaryGraph& add_vertex(CurveVertex v)
    {
        if (v.id.empty()) {
            throw Error(ErrorKind::InvalidGraph, "empty vertex id");
        }
        if (vertices_.count(v.id) != 0) {
            throw Error(ErrorKind::InvalidGraph, "duplicate vertex id '" + v.id + "'");
        }
        if (v.coeff > rat(1)) {
            throw Error(ErrorKind::InvalidGraph, "coefficient of '" + v.id + "' exceeds 1");
        }
        if (v.nodes < 0) {
            throw Error(ErrorKind::InvalidGraph, "negative node count on '" + v.id + "'");
        }
        auto id = v.id;
        vertices_.emplace(std::move(id), std::move(v));
        return *this;
    }

    BoundaryGraph& add_curve(VertexId id, Rational self_int, Rational coeff = rat(1), int nodes = 0)
    {
        return add_vertex(CurveVertex{std::move(id), self_int, coeff, nodes, true});
    }

    /// Adds m transverse intersection points between two distinct curves.
    BoundaryGraph& add_edge(const VertexId& a, const VertexId& b, int m = 1)
    {
        if (a == b) {
            throw Error(ErrorKind::InvalidGraph, "edge endpoints must differ ('" + a + "'); use the node count");
        }
        require_vertex(a, ErrorKind::InvalidGraph);
        require_vertex(b, ErrorKind::InvalidGraph);
        if (m < 1) {
            throw Error(ErrorKind::InvalidGraph, "edge multiplicity must be positive");
        }
        edges_[key(a, b)] += m;
        return *this;
    }

    BoundaryGraph& add_marked_point(std::vector<VertexId> branches)
    {
        if (branches.size() < 3) {
            throw Error(ErrorKind::InvalidGraph, "a marked point needs at least 3 branches");
        }
        for (const auto& id : branches) {
            require_vertex(id, ErrorKind::InvalidGraph);
        }
        std::sort(branches.begin(), branches.end(), NaturalLess{});
        marked_.push_back(MarkedPoint{std::move(branches)});
        check_marked_capacity(marked_.back());
        std::sort(marked_.begin(), marked_.end(), [](const MarkedPoint& x, const MarkedPoint& y) {
            return std::lexicographical_compare(x.branches.begin(), x.branches.end(), y.branches.begin(),
                y.branches.end(), NaturalLess{});
        });
        return *this;
    }

    void set_picard_rank(int rho)
    {
        if (rho < 1) {
            throw Error(ErrorKind::PreconditionFailed, "Picard rank would drop below 1");
        }
        picard_rank_ = rho;
    }

    int picard_rank() const noexcept { return picard_rank_; }
    static constexpr int dim() noexcept { return 2; }

    const VertexMap& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    bool has_vertex(const VertexId& id) const { return vertices_.count(id) != 0; }

    const CurveVertex& vertex(const VertexId& id) const
    {
        auto it = vertices_.find(id);
        if (it == vertices_.end()) {
            throw Error(ErrorKind::NoSuchVertex, "no vertex '" + id + "'");
        }
        return it->second;
    }

    CurveVertex& vertex_mut(const VertexId& id)
    {
        auto it = vertices_.find(id);
        if (it == vertices_.end()) {
            throw Error(ErrorKind::NoSuchVertex, "no vertex '" + id + "'");
        }
        return it->second;
    }

    /// Edges sorted by endpoints, each with a < b in natural order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edges_.size());
        for (const auto& [k, m] : edges_) {
            out.push_back(Edge{k.first, k.second, m});
        }
        return out;
    }

    int multiplicity(const VertexId& a, const VertexId& b) const
    {
        if (a == b) {
            return 0;
        }
        auto it = edges_.find(key(a, b));
        return it == edges_.end() ? 0 : it->second;
    }

    void set_multiplicity(const VertexId& a, const VertexId& b, int m)
    {
        if (m <= 0) {
            edges_.erase(key(a, b));
        } else {
            edges_[key(a, b)] = m;
        }
    }

    /// C_a . C_b, with the self-intersection on the diagonal.
    Rational intersection(const VertexId& a, const VertexId& b) const
    {
        if (a == b) {
            return vertex(a).self_int;
        }
        return rat(multiplicity(a, b));
    }

    std::vector<std::pair<VertexId, int>> neighbors(const VertexId& id) const
    {
        std::vector<std::pair<VertexId, int>> out;
        for (const auto& [k, m] : edges_) {
            if (k.first == id) {
                out.emplace_back(k.second, m);
            } else if (k.second == id) {
                out.emplace_back(k.first, m);
            }
        }
        std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return NaturalLess{}(x.first, y.first); });
        return out;
    }

    const std::vector<MarkedPoint>& marked_points() const noexcept { return marked_; }

    void remove_marked_point(std::size_t index) { marked_.erase(marked_.begin() + static_cast<std::ptrdiff_t>(index)); }

    void remove_vertex(const VertexId& id)
    {
        for (auto it = edges_.begin(); it != edges_.end();) {
            if (it->first.first == id || it->first.second == id) {
                it = edges_.erase(it);
            } else {
                ++it;
            }
        }
        vertices_.erase(id);
    }

    /// prefix followed by the smallest positive integer not yet used.
    VertexId fresh_id(std::string_view prefix = "X") const
    {
        for (int n = 1;; ++n) {
            VertexId candidate = std::string(prefix) + std::to_string(n);
            if (!has_vertex(candidate)) {
                return candidate;
            }
        }
    }

    /// Intersection points of the pair (a, b) already accounted for by marked points.
    int marked_edge_occupancy(const VertexId& a, const VertexId& b) const
    {
        int total = 0;
        for (const auto& mp : marked_) {
            total += count_in(mp, a) * count_in(mp, b);
        }
        return total;
    }

    /// Nodes of a that sit at marked points.
    int marked_node_occupancy(const VertexId& a) const
    {
        int total = 0;
        for (const auto& mp : marked_) {
            const int c = count_in(mp, a);
            total += c * (c - 1) / 2;
        }
        return total;
    }

    static int count_in(const MarkedPoint& mp, const VertexId& id)
    {
        return static_cast<int>(std::count(mp.branches.begin(), mp.branches.end(), id));
    }

    friend bool operator==(const BoundaryGraph&, const BoundaryGraph&) = default;

private:
    using Key = std::pair<VertexId, VertexId>;

    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const
        {
            NaturalLess less;
            if (less(x.first, y.first)) return true;
            if (less(y.first, x.first)) return false;
            return less(x.second, y.second);
        }
    };

    static Key key(const VertexId& a, const VertexId& b)
    {
        return NaturalLess{}(a, b) ? Key{a, b} : Key{b, a};
    }

    void require_vertex(const VertexId& id, ErrorKind kind) const
    {
        if (!has_vertex(id)) {
            throw Error(kind, "no vertex '" + id + "'");
        }
    }

    void check_marked_capacity(const MarkedPoint& mp) const
    {
        for (std::size_t i = 0; i < mp.branches.size(); ++i) {
            const auto& a = mp.branches[i];
            if (i > 0 && mp.branches[i - 1] == a) {
                continue;
            }
            if (marked_node_occupancy(a) > vertex(a).nodes) {
                throw Error(ErrorKind::InvalidGraph, "marked points use more nodes of '" + a + "' than it has");
            }
            for (std::size_t j = i + 1; j < mp.branches.size(); ++j) {
                const auto& b = mp.branches[j];
                if (b != a && marked_edge_occupancy(a, b) > multiplicity(a, b)) {
                    throw Error(ErrorKind::InvalidGraph,
                        "marked points use more intersections of '" + a + "' and '" + b + "' than the edge has");
                }
            }
        }
    }

    VertexMap vertices_;
    std::map<Key, int, KeyLess> edges_;
    std::vector<MarkedPoint> marked_;
    int picard_rank_ = 1;
};

// ---------------------------------------------------------------------------
// Balance, complexity, coregularity

/// Adjunction residual (K + B) . C for every vertex, in vertex order. For a
/// rational curve with d nodes, K . C = 2d - 2 - C^2. The pair is
/// Calabi-Yau exactly when every residual vanishes.
inline std::vector<std::pair<VertexId, Rational>> validate_cy(const BoundaryGraph& g)
{
    std::vector<std::pair<VertexId, Rational>> out;
    for (const auto& [id, v] : g.vertices()) {
        if (!v.rational) {
            throw Error(ErrorKind::PreconditionFailed, "vertex '" + id + "' is not rational");
        }
        Rational r = rat(2 * v.nodes - 2) - v.self_int + v.coeff * v.self_int;
        for (const auto& [other, m] : g.neighbors(id)) {
            r += g.vertex(other).coeff * rat(m);
        }
        out.emplace_back(id, r);
    }
    return out;
}

inline bool is_calabi_yau(const BoundaryGraph& g)
{
    const auto residuals = validate_cy(g);
    return std::all_of(residuals.begin(), residuals.end(), [](const auto& p) { return p.second == rat(0); });
}

/// dim + rho - sum of coefficients.
inline Rational complexity(const BoundaryGraph& g)
{
    Rational total = rat(BoundaryGraph::dim() + g.picard_rank());
    for (const auto& [id, v] : g.vertices()) {
        total -= v.coeff;
    }
    return total;
}

inline bool index_integral(const BoundaryGraph& g)
{
    return std::all_of(g.vertices().begin(), g.vertices().end(),
        [](const auto& kv) { return is_integral(kv.second.coeff); });
}

/// Coregularity of an SNC surface pair whose only non-SNC points are the
/// declared marked points.
///
/// 0 when two coefficient-one branches meet (an edge or a node of a
/// coefficient-one curve), or when a marked point has branch sum exactly 2
/// and one of its branches has coefficient one: the exceptional curve of
/// that point then has coefficient one and meets that branch. 1 when some
/// coefficient-one curve exists (including the exceptional curve of a
/// marked point with branch sum 2). 2 otherwise.
inline int coregularity(const BoundaryGraph& g)
{
    const Rational one = rat(1);
    for (const auto& [id, v] : g.vertices()) {
        if (v.coeff < rat(0) || v.coeff > one) {
            throw Error(ErrorKind::CoefficientOutOfRange,
                "coefficient of '" + id + "' is " + to_string(v.coeff) + ", outside [0,1]");
        }
    }
    bool has_lc_curve = false;
    bool has_lc_point = false;
    for (const auto& mp : g.marked_points()) {
        Rational sum = rat(0);
        bool reduced_branch = false;
        for (const auto& id : mp.branches) {
            sum += g.vertex(id).coeff;
            reduced_branch = reduced_branch || g.vertex(id).coeff == one;
        }
        if (sum > rat(2)) {
            throw Error(ErrorKind::MarkedPointNotLC, "branch coefficients at a marked point sum to " + to_string(sum));
        }
        if (sum == rat(2)) {
            has_lc_curve = true;
            has_lc_point = has_lc_point || reduced_branch;
        }
    }
    for (const auto& [id, v] : g.vertices()) {
        if (v.coeff != one) {
            continue;
        }
        has_lc_curve = true;
        if (v.nodes > 0) {
            has_lc_point = true;
        }
        for (const auto& [other, m] : g.neighbors(id)) {
            if (g.vertex(other).coeff == one) {
                has_lc_point = true;
            }
        }
    }
    if (has_lc_point) {
        return 0;
    }
    return has_lc_curve ? 1 : 2;
}

/// (sum_{i in ids} b_i C_i)^2.
inline Rational boundary_square(const BoundaryGraph& g, const std::vector<VertexId>& ids)
{
    Rational total = rat(0);
    for (const auto& a : ids) {
        for (const auto& b : ids) {
            total += g.vertex(a).coeff * g.vertex(b).coeff * g.intersection(a, b);
        }
    }
    return total;
}

/// Ids of the coefficient-one vertices.
inline std::vector<VertexId> reduced_part(const BoundaryGraph& g)
{
    std::vector<VertexId> out;
    for (const auto& [id, v] : g.vertices()) {
        if (v.coeff == rat(1)) {
            out.push_back(id);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Blow-ups and blow-downs

/// Blows up one intersection point: a point of C_a n C_b, or a node of C_a
/// when a == b. The exceptional curve gets the crepant coefficient
/// b_a + b_b - 1 (resp. 2 b_a - 1).
inline BoundaryGraph blowup_corner(const BoundaryGraph& g, const Corner& at, std::optional<VertexId> new_id = {})
{
    BoundaryGraph out = g;
    const auto e = new_id ? *new_id : g.fresh_id();
    if (at.is_node()) {
        const auto& c = g.vertex(at.a);
        if (c.nodes - g.marked_node_occupancy(at.a) < 1) {
            throw Error(ErrorKind::NoSuchIntersection, "'" + at.a + "' has no free node");
        }
        out.add_curve(e, rat(-1), rat(2) * c.coeff - rat(1));
        auto& cm = out.vertex_mut(at.a);
        cm.self_int -= rat(4);
        cm.nodes -= 1;
        out.add_edge(e, at.a, 2);
    } else {
        const auto& ca = g.vertex(at.a);
        const auto& cb = g.vertex(at.b);
        const int free = g.multiplicity(at.a, at.b) - g.marked_edge_occupancy(at.a, at.b);
        if (free < 1) {
            throw Error(ErrorKind::NoSuchIntersection, "'" + at.a + "' and '" + at.b + "' have no free intersection point");
        }
        out.add_curve(e, rat(-1), ca.coeff + cb.coeff - rat(1));
        out.vertex_mut(at.a).self_int -= rat(1);
        out.vertex_mut(at.b).self_int -= rat(1);
        out.set_multiplicity(at.a, at.b, g.multiplicity(at.a, at.b) - 1);
        out.add_edge(e, at.a, 1);
        out.add_edge(e, at.b, 1);
    }
    out.set_picard_rank(g.picard_rank() + 1);
    return out;
}

/// Blows up a general point of a single curve; the exceptional curve gets
/// coefficient b_C - 1.
inline BoundaryGraph blowup_interior(const BoundaryGraph& g, const VertexId& curve, std::optional<VertexId> new_id = {})
{
    const auto& c = g.vertex(curve);
    BoundaryGraph out = g;
    const auto e = new_id ? *new_id : g.fresh_id();
    out.add_curve(e, rat(-1), c.coeff - rat(1));
    out.vertex_mut(curve).self_int -= rat(1);
    out.add_edge(e, curve, 1);
    out.set_picard_rank(g.picard_rank() + 1);
    return out;
}

/// Blows up a marked point. A branch through it k times loses k^2 from its
/// self-intersection and meets the exceptional curve k times.
inline BoundaryGraph blowup_marked(const BoundaryGraph& g, std::size_t index, std::optional<VertexId> new_id = {})
{
    if (index >= g.marked_points().size()) {
        throw Error(ErrorKind::NoSuchIntersection, "no marked point #" + std::to_string(index));
    }
    const auto mp = g.marked_points()[index];
    std::vector<std::pair<VertexId, int>> counts;
    for (const auto& id : mp.branches) {
        if (counts.empty() || counts.back().first != id) {
            counts.emplace_back(id, 0);
        }
        counts.back().second += 1;
    }
    Rational coeff = rat(-1);
    for (const auto& [id, k] : counts) {
        coeff += rat(k) * g.vertex(id).coeff;
    }
    BoundaryGraph out = g;
    out.remove_marked_point(index);
    const auto e = new_id ? *new_id : g.fresh_id();
    out.add_curve(e, rat(-1), coeff);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto& [id, k] = counts[i];
        auto& v = out.vertex_mut(id);
        v.self_int -= rat(k * k);
        v.nodes -= k * (k - 1) / 2;
        for (std::size_t j = i + 1; j < counts.size(); ++j) {
            const auto& [other, l] = counts[j];
            out.set_multiplicity(id, other, out.multiplicity(id, other) - k * l);
        }
        out.add_edge(e, id, k);
    }
    out.set_picard_rank(g.picard_rank() + 1);
    return out;
}

/// Contracts a (-1)-curve E. Each neighbour C meeting E m times gains m^2
/// in self-intersection and m(m-1)/2 nodes; neighbours C, C' gain
/// m_C m_C' intersection points. When three or more branches pass through
/// the image point it is recorded as a marked point. The coefficient of E
/// is discarded.
inline BoundaryGraph blowdown(const BoundaryGraph& g, const VertexId& id)
{
    const auto& e = g.vertex(id);
    if (e.self_int != rat(-1)) {
        throw Error(ErrorKind::NotMinusOneCurve, "'" + id + "' has self-intersection " + to_string(e.self_int));
    }
    if (e.nodes != 0) {
        throw Error(ErrorKind::VertexHasNodes, "'" + id + "' has " + std::to_string(e.nodes) + " node(s)");
    }
    for (const auto& mp : g.marked_points()) {
        if (BoundaryGraph::count_in(mp, id) > 0) {
            throw Error(ErrorKind::VertexOnMarkedPoint, "'" + id + "' passes through a marked point");
        }
    }
    if (g.picard_rank() < 2) {
        throw Error(ErrorKind::PreconditionFailed, "cannot contract a curve on a surface of Picard rank 1");
    }
    const auto nbrs = g.neighbors(id);
    BoundaryGraph out = g;
    out.remove_vertex(id);
    int branches = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const auto& [c, m] = nbrs[i];
        branches += m;
        auto& v = out.vertex_mut(c);
        v.self_int += rat(m * m);
        v.nodes += m * (m - 1) / 2;
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            const auto& [d, l] = nbrs[j];
            out.add_edge(c, d, m * l);
        }
    }
    out.set_picard_rank(g.picard_rank() - 1);
    if (branches >= 3) {
        std::vector<VertexId> point;
        for (const auto& [c, m] : nbrs) {
            point.insert(point.end(), static_cast<std::size_t>(m), c);
        }
        out.add_marked_point(std::move(point));
    }
    return out;
}

/// True when the coefficient of E is the one a blow-up of its image point
/// would assign: sum over neighbours of m_C b_C, minus one.
inline bool is_crepant_blowdown(const BoundaryGraph& g, const VertexId& id)
{
    Rational expected = rat(-1);
    for (const auto& [c, m] : g.neighbors(id)) {
        expected += rat(m) * g.vertex(c).coeff;
    }
    return g.vertex(id).coeff == expected;
}

// ---------------------------------------------------------------------------
// A_n points

/// Minimal resolution of an A_n point at the node of an irreducible nodal
/// boundary curve with B^2 = b_sq: strict transform "B" and the chain
/// "E1".."En" of (-2)-curves, all with coefficient one, closing a cycle.
inline BoundaryGraph resolve_An_at_node(const Rational& b_sq, int n, int singular_picard_rank = 1)
{
    if (n < 1) {
        throw Error(ErrorKind::PreconditionFailed, "A_n needs n >= 1");
    }
    BoundaryGraph g(singular_picard_rank + n);
    g.add_curve("B", b_sq - rat(2));
    for (int i = 1; i <= n; ++i) {
        g.add_curve("E" + std::to_string(i), rat(-2));
    }
    for (int i = 1; i < n; ++i) {
        g.add_edge("E" + std::to_string(i), "E" + std::to_string(i + 1));
    }
    g.add_edge("B", "E1");
    g.add_edge("B", "E" + std::to_string(n));
    return g;
}

struct SingularMark {
    int rank = 0; // A_rank
    std::vector<VertexId> chain;
    std::vector<VertexId> incident;

    friend bool operator==(const SingularMark&, const SingularMark&) = default;
};

/// The surface obtained by contracting (-2)-chains to A_n points. The
/// resolved graph stays the source of truth; the intersection numbers of
/// the surviving curves on the singular surface are rational.
struct SingularModel {
    BoundaryGraph resolved;
    std::vector<SingularMark> marks;
    std::vector<VertexId> curves;
    std::vector<std::vector<Rational>> intersection;
    int picard_rank = 1;

    Rational intersect(const VertexId& a, const VertexId& b) const
    {
        return intersection.at(position(a)).at(position(b));
    }

    Rational self_int(const VertexId& a) const { return intersect(a, a); }

    std::vector<int> ranks() const
    {
        std::vector<int> out;
        for (const auto& m : marks) {
            out.push_back(m.rank);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::size_t position(const VertexId& id) const
    {
        auto it = std::find(curves.begin(), curves.end(), id);
        if (it == curves.end()) {
            throw Error(ErrorKind::NoSuchVertex, "'" + id + "' is not a curve of the singular model");
        }
        return static_cast<std::size_t>(it - curves.begin());
    }
};

namespace detail {

// Solves A x = rhs over the rationals. A is negative definite here, so
// pivots never vanish; a zero pivot still gets a row swap.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs)
{
    const auto n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == rat(0)) {
            ++pivot;
        }
        if (pivot == n) {
            throw Error(ErrorKind::PreconditionFailed, "singular intersection matrix");
        }
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == rat(0)) {
                continue;
            }
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= f * a[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] /= a[i][i];
    }
    return rhs;
}

inline void check_chain(const BoundaryGraph& g, const std::vector<VertexId>& chain)
{
    if (chain.empty()) {
        throw Error(ErrorKind::NotMinusTwoChain, "empty chain");
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& v = g.vertex(chain[i]);
        if (v.self_int != rat(-2) || v.nodes != 0) {
            throw Error(ErrorKind::NotMinusTwoChain, "'" + v.id + "' is not a smooth (-2)-curve");
        }
        if (v.coeff != g.vertex(chain.front()).coeff) {
            throw Error(ErrorKind::NotMinusTwoChain, "chain coefficients differ at '" + v.id + "'");
        }
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            if (chain[i] == chain[j]) {
                throw Error(ErrorKind::NotMinusTwoChain, "'" + v.id + "' repeated in chain");
            }
            const int want = (j == i + 1) ? 1 : 0;
            if (g.multiplicity(chain[i], chain[j]) != want) {
                throw Error(ErrorKind::NotMinusTwoChain,
                    "'" + chain[i] + "' and '" + chain[j] + "' do not form a simple path");
            }
        }
    }
}

} // namespace detail

/// Connected components of the smooth (-2)-curves, each returned as a path
/// from one end. Components that are not simple paths are returned as
/// found and rejected later by contract_minus2_chains.
inline std::vector<std::vector<VertexId>> find_minus2_chains(const BoundaryGraph& g)
{
    auto is_m2 = [&](const VertexId& id) {
        const auto& v = g.vertex(id);
        return v.self_int == rat(-2) && v.nodes == 0;
    };
    std::vector<std::vector<VertexId>> out;
    std::map<VertexId, bool, NaturalLess> seen;
    for (const auto& [id, v] : g.vertices()) {
        if (!is_m2(id) || seen[id]) {
            continue;
        }
        // Collect the component, then walk it from an end.
        std::vector<VertexId> comp{id};
        seen[id] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const auto& [n, m] : g.neighbors(comp[i])) {
                if (is_m2(n) && !seen[n]) {
                    seen[n] = true;
                    comp.push_back(n);
                }
            }
        }
        auto degree = [&](const VertexId& x) {
            int d = 0;
            for (const auto& [n, m] : g.neighbors(x)) {
                if (is_m2(n)) d += m;
            }
            return d;
        };
        std::sort(comp.begin(), comp.end(), NaturalLess{});
        VertexId start = comp.front();
        for (const auto& x : comp) {
            if (degree(x) <= 1) {
                start = x;
                break;
            }
        }
        std::vector<VertexId> path{start};
        std::map<VertexId, bool, NaturalLess> used{{start, true}};
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& [n, m] : g.neighbors(path.back())) {
                if (is_m2(n) && !used[n]) {
                    used[n] = true;
                    path.push_back(n);
                    grew = true;
                    break;
                }
            }
        }
        for (const auto& x : comp) {
            if (!used[x]) {
                path.push_back(x); // branching component; check_chain rejects it
            }
        }
        out.push_back(std::move(path));
    }
    return out;
}

/// Contracts the given (-2)-chains, recording one A_k mark per chain and
/// the intersection numbers of the remaining curves on the singular surface.
inline SingularModel contract_minus2_chains(const BoundaryGraph& g, const std::vector<std::vector<VertexId>>& chains)
{
    std::map<VertexId, int, NaturalLess> owner;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        detail::check_chain(g, chains[c]);
        for (const auto& id : chains[c]) {
            if (!owner.emplace(id, static_cast<int>(c)).second) {
                throw Error(ErrorKind::NotMinusTwoChain, "'" + id + "' is in two chains");
            }
        }
    }
    for (std::size_t c = 0; c < chains.size(); ++c) {
        for (const auto& id : chains[c]) {
            for (const auto& [n, m] : g.neighbors(id)) {
                auto it = owner.find(n);
                if (it != owner.end() && it->second != static_cast<int>(c)) {
                    throw Error(ErrorKind::NotMinusTwoChain, "chains through '" + id + "' and '" + n + "' touch");
                }
            }
        }
    }

    SingularModel model{g, {}, {}, {}, g.picard_rank()};
    for (const auto& [id, v] : g.vertices()) {
        if (owner.count(id) == 0) {
            model.curves.push_back(id);
        }
    }

    // pullback[c][k] = coefficient of the k-th curve of chain c in pi^* of each surviving curve.
    const auto n = model.curves.size();
    model.intersection.assign(n, std::vector<Rational>(n, rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            model.intersection[i][j] = g.intersection(model.curves[i], model.curves[j]);
        }
    }
    for (const auto& chain : chains) {
        const auto k = chain.size();
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k, rat(0)));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                m[a][b] = g.intersection(chain[a], chain[b]);
            }
        }
        std::vector<std::vector<Rational>> pull(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> rhs(k);
            for (std::size_t a = 0; a < k; ++a) {
                rhs[a] = -g.intersection(model.curves[i], chain[a]);
            }
            pull[i] = detail::solve_linear(m, rhs);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t a = 0; a < k; ++a) {
                    model.intersection[i][j] += pull[j][a] * g.intersection(model.curves[i], chain[a]);
                }
            }
        }
        SingularMark mark{static_cast<int>(k), chain, {}};
        for (const auto& id : model.curves) {
            for (const auto& e : chain) {
                if (g.multiplicity(id, e) > 0) {
                    mark.incident.push_back(id);
                    break;
                }
            }
        }
        model.marks.push_back(std::move(mark));
        model.picard_rank -= static_cast<int>(k);
    }
    return model;
}

inline SingularModel contract_minus2_chains(const BoundaryGraph& g)
{
    return contract_minus2_chains(g, find_minus2_chains(g));
}

// ---------------------------------------------------------------------------
// Comparison

/// Isomorphism of weighted dual graphs up to renaming vertices. Compares
/// self-intersections, node counts, edge multiplicities and marked points;
/// coefficients only when asked. The Picard rank is ignored.
inline bool weighted_isomorphic(const BoundaryGraph& x, const BoundaryGraph& y, bool compare_coefficients = false)
{
    if (x.vertex_count() != y.vertex_count() || x.edges().size() != y.edges().size()
        || x.marked_points().size() != y.marked_points().size()) {
        return false;
    }
    std::vector<VertexId> xs;
    std::vector<VertexId> ys;
    for (const auto& [id, v] : x.vertices()) xs.push_back(id);
    for (const auto& [id, v] : y.vertices()) ys.push_back(id);

    auto signature = [&](const BoundaryGraph& g, const VertexId& id) {
        const auto& v = g.vertex(id);
        std::vector<int> degs;
        for (const auto& [n, m] : g.neighbors(id)) degs.push_back(m);
        std::sort(degs.begin(), degs.end());
        return std::make_tuple(numerator_of(v.self_int), denominator_of(v.self_int), v.nodes, degs,
            compare_coefficients ? to_string(v.coeff) : std::string());
    };

    std::vector<int> map(xs.size(), -1);
    std::vector<bool> taken(ys.size(), false);

    auto marked_match = [&]() {
        std::map<VertexId, VertexId> f;
        for (std::size_t i = 0; i < xs.size(); ++i) f[xs[i]] = ys[static_cast<std::size_t>(map[i])];
        std::vector<std::vector<VertexId>> img;
        for (const auto& mp : x.marked_points()) {
            std::vector<VertexId> b;
            for (const auto& id : mp.branches) b.push_back(f[id]);
            std::sort(b.begin(), b.end());
            img.push_back(std::move(b));
        }
        std::vector<std::vector<VertexId>> tgt;
        for (const auto& mp : y.marked_points()) {
            auto b = mp.branches;
            std::sort(b.begin(), b.end());
            tgt.push_back(std::move(b));
        }
        std::sort(img.begin(), img.end());
        std::sort(tgt.begin(), tgt.end());
        return img == tgt;
    };

    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == xs.size()) {
            return marked_match();
        }
        const auto sig = signature(x, xs[i]);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (taken[j] || signature(y, ys[j]) != sig) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) {
                ok = x.multiplicity(xs[i], xs[k]) == y.multiplicity(ys[j], ys[static_cast<std::size_t>(map[k])]);
            }
            if (!ok) {
                continue;
            }
            map[i] = static_cast<int>(j);
            taken[j] = true;
            if (self(self, i + 1)) {
                return true;
            }
            taken[j] = false;
            map[i] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

// ---------------------------------------------------------------------------
// One-dimensional pairs

/// (P^1, sum b_i p_i): the log fibre of a surface pair over a curve.
struct CurvePair {
    std::vector<Rational> point_coeffs;
};

/// 0 when some point has coefficient one, else 1.
inline int coregularity(const CurvePair& pair)
{
    for (const auto& b : pair.point_coeffs) {
        if (b < rat(0) || b > rat(1)) {
            throw Error(ErrorKind::CoefficientOutOfRange, "point coefficient " + to_string(b) + " outside [0,1]");
        }
    }
    const bool lc_point = std::any_of(pair.point_coeffs.begin(), pair.point_coeffs.end(),
        [](const Rational& b) { return b == rat(1); });
    return lc_point ? 0 : 1;
}

inline bool is_calabi_yau(const CurvePair& pair)
{
    Rational total = rat(0);
    for (const auto& b : pair.point_coeffs) total += b;
    return total == rat(2);
}

} // namespace clustype

#endif // CLUSTYPE_BOUNDARY_GRAPH_HPP
