#ifndef CLUSTYPE_LATTICE_FAN_HPP
#define CLUSTYPE_LATTICE_FAN_HPP

// Complete two-dimensional fans: smoothness, self-intersections of the
// invariant curves, star subdivisions, minimal resolution and toric
// morphisms to the projective line.

#include "clustype/error.hpp"
#include "clustype/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clustype {

struct RayVector {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const RayVector&, const RayVector&) = default;

    RayVector operator+(const RayVector& o) const { return {x + o.x, y + o.y}; }
    RayVector operator-() const { return {-x, -y}; }
};

inline std::string to_string(const RayVector& v)
{
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

constexpr std::int64_t det(const RayVector& a, const RayVector& b) noexcept
{
    return a.x * b.y - a.y * b.x;
}

inline bool is_primitive(const RayVector& v) noexcept
{
    return std::gcd(v.x, v.y) == 1;
}

/// Linear form L(x, y) = a x + b y on the lattice.
struct Covector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr std::int64_t operator()(const RayVector& v) const noexcept { return a * v.x + b * v.y; }
};

class Fan2;
Fan2 make_fan(std::span<const RayVector> rays);

/// A complete fan in the plane, stored as its rays in counterclockwise
/// order. Cones are spanned by cyclic neighbours. The first ray is the
/// lexicographically smallest one, so equal fans compare equal.
class Fan2 {
public:
    const std::vector<RayVector>& rays() const noexcept { return rays_; }
    std::size_t size() const noexcept { return rays_.size(); }
    const RayVector& ray(std::size_t i) const { return rays_.at(i); }
    const RayVector& next(std::size_t i) const { return rays_[(i + 1) % rays_.size()]; }
    const RayVector& prev(std::size_t i) const { return rays_[(i + rays_.size() - 1) % rays_.size()]; }

    std::optional<std::size_t> index_of(const RayVector& v) const
    {
        auto it = std::find(rays_.begin(), rays_.end(), v);
        if (it == rays_.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - rays_.begin());
    }

    bool contains(const RayVector& v) const { return index_of(v).has_value(); }

    /// Rank of the class group of the toric surface.
    std::int64_t picard_rank() const noexcept { return static_cast<std::int64_t>(rays_.size()) - 2; }

    friend bool operator==(const Fan2&, const Fan2&) = default;

private:
    explicit Fan2(std::vector<RayVector> rays)
        : rays_(std::move(rays))
    {
    }

    std::vector<RayVector> rays_;

    friend Fan2 make_fan(std::span<const RayVector> rays);
};

namespace detail {

// 0 for the half-plane of angles [0, pi), 1 for [pi, 2 pi).
inline int half_plane(const RayVector& v) noexcept
{
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

inline bool angle_less(const RayVector& a, const RayVector& b) noexcept
{
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) {
        return ha < hb;
    }
    return det(a, b) > 0;
}

} // namespace detail

/// Validates and canonicalizes a ray list. Rays must be primitive, given
/// counterclockwise (any starting point), and consecutive rays must be less
/// than a half-turn apart.
inline Fan2 make_fan(std::span<const RayVector> rays)
{
    for (const auto& r : rays) {
        if (!is_primitive(r)) {
            throw Error(ErrorKind::NonPrimitiveRay, "ray " + to_string(r) + " is not primitive");
        }
    }
    if (rays.size() < 3) {
        throw Error(ErrorKind::NotComplete, "a complete fan needs at least 3 rays, got " + std::to_string(rays.size()));
    }

    std::vector<RayVector> sorted(rays.begin(), rays.end());
    std::sort(sorted.begin(), sorted.end(), detail::angle_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::NotCyclicallyOrdered, "repeated ray");
    }
    std::vector<RayVector> given(rays.begin(), rays.end());
    auto first = std::find(given.begin(), given.end(), sorted.front());
    std::rotate(given.begin(), first, given.end());
    if (given != sorted) {
        throw Error(ErrorKind::NotCyclicallyOrdered, "rays are not in counterclockwise cyclic order");
    }

    const auto n = sorted.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = sorted[i];
        const auto& w = sorted[(i + 1) % n];
        if (det(u, w) <= 0) {
            throw Error(ErrorKind::NotComplete,
                "gap of at least a half-turn between " + to_string(u) + " and " + to_string(w));
        }
    }

    auto smallest = std::min_element(sorted.begin(), sorted.end());
    std::rotate(sorted.begin(), smallest, sorted.end());
    return Fan2(std::move(sorted));
}

inline Fan2 make_fan(std::initializer_list<RayVector> rays)
{
    return make_fan(std::span<const RayVector>(rays.begin(), rays.size()));
}

inline Fan2 make_fan(const std::vector<RayVector>& rays)
{
    return make_fan(std::span<const RayVector>(rays));
}

/// Determinant of the cone spanned by ray i and its successor.
inline std::int64_t cone_determinant(const Fan2& fan, std::size_t i)
{
    return det(fan.ray(i), fan.next(i));
}

inline bool is_smooth(const Fan2& fan)
{
    for (std::size_t i = 0; i < fan.size(); ++i) {
        if (cone_determinant(fan, i) != 1) {
            return false;
        }
    }
    return true;
}

/// Self-intersection of each invariant curve D_i, in ray order, from the
/// relation u_{i-1} + u_{i+1} = -(D_i^2) u_i.
inline std::vector<std::int64_t> self_intersections(const Fan2& fan)
{
    if (!is_smooth(fan)) {
        throw Error(ErrorKind::NotSmooth, "self-intersections need a smooth fan; resolve it first");
    }
    std::vector<std::int64_t> out;
    out.reserve(fan.size());
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const auto& u = fan.ray(i);
        const auto s = fan.prev(i) + fan.next(i);
        out.push_back(u.x != 0 ? -(s.x / u.x) : -(s.y / u.y));
    }
    return out;
}

/// Toric blow-up: inserts the primitive ray v into the cone containing it.
inline Fan2 star_subdivide(const Fan2& fan, const RayVector& v)
{
    if (v.x == 0 && v.y == 0) {
        throw Error(ErrorKind::NotInteriorToCone, "zero vector lies in no open cone");
    }
    if (!is_primitive(v)) {
        throw Error(ErrorKind::NonPrimitiveRay, "ray " + to_string(v) + " is not primitive");
    }
    if (fan.contains(v)) {
        throw Error(ErrorKind::RayAlreadyPresent, "ray " + to_string(v) + " is already in the fan");
    }
    for (std::size_t i = 0; i < fan.size(); ++i) {
        if (det(fan.ray(i), v) > 0 && det(v, fan.next(i)) > 0) {
            std::vector<RayVector> rays = fan.rays();
            rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, v);
            return make_fan(rays);
        }
    }
    throw Error(ErrorKind::NotInteriorToCone, "ray " + to_string(v) + " is not interior to a cone");
}

/// Inverse of star_subdivide: drops a ray, provided the rest is still complete.
inline Fan2 remove_ray(const Fan2& fan, const RayVector& v)
{
    auto idx = fan.index_of(v);
    if (!idx) {
        throw Error(ErrorKind::PreconditionFailed, "ray " + to_string(v) + " is not in the fan");
    }
    std::vector<RayVector> rays = fan.rays();
    rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(*idx));
    return make_fan(rays);
}

/// dim + rank Cl - |B_T| for the toric boundary; identically zero.
inline Rational toric_pair_complexity(const Fan2& fan)
{
    const auto n = static_cast<std::int64_t>(fan.size());
    return rat(2 + (n - 2) - n);
}

/// Rays inserted by the minimal resolution of the cone spanned by u and w
/// (counterclockwise), ordered from u towards w.
inline std::vector<RayVector> hirzebruch_jung_rays(RayVector u, const RayVector& w)
{
    std::vector<RayVector> out;
    for (std::int64_t d = det(u, w); d > 1; d = det(u, w)) {
        // The ray next to u is (w + a u) / d for the unique a in [1, d) that
        // makes it integral; det(u, v) = 1 and det(v, w) = a.
        std::int64_t a = 1;
        for (; a < d; ++a) {
            const auto px = w.x + a * u.x;
            const auto py = w.y + a * u.y;
            if (px % d == 0 && py % d == 0) {
                break;
            }
        }
        RayVector v{(w.x + a * u.x) / d, (w.y + a * u.y) / d};
        out.push_back(v);
        u = v;
    }
    return out;
}

/// Minimal resolution by Hirzebruch-Jung subdivision of every singular cone.
inline Fan2 resolve(const Fan2& fan)
{
    std::vector<RayVector> rays;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        rays.push_back(fan.ray(i));
        auto extra = hirzebruch_jung_rays(fan.ray(i), fan.next(i));
        rays.insert(rays.end(), extra.begin(), extra.end());
    }
    return make_fan(rays);
}

struct ClassifiedRay {
    std::size_t index = 0;
    RayVector ray;
    std::int64_t multiplicity = 0;

    friend bool operator==(const ClassifiedRay&, const ClassifiedRay&) = default;
};

/// Rays of a fan sorted by the toric morphism to P^1 induced by a linear
/// form: L = 0 (vertical), L > 0 (fiber over 0), L < 0 (fiber over infinity).
struct FibrationData {
    std::vector<ClassifiedRay> vertical;
    std::vector<ClassifiedRay> fiber_over_zero;
    std::vector<ClassifiedRay> fiber_over_infinity;
};

inline FibrationData p1_projection(const Fan2& fan, const Covector& form)
{
    if (form.a == 0 && form.b == 0) {
        throw Error(ErrorKind::InvalidSpec, "linear form must be nonzero");
    }
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const auto l0 = form(fan.ray(i));
        const auto l1 = form(fan.next(i));
        if ((l0 > 0 && l1 < 0) || (l0 < 0 && l1 > 0)) {
            throw Error(ErrorKind::NoToricMorphism,
                "cone " + to_string(fan.ray(i)) + "," + to_string(fan.next(i)) + " straddles the kernel of the form");
        }
    }
    FibrationData out;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const auto value = form(fan.ray(i));
        ClassifiedRay entry{i, fan.ray(i), value > 0 ? value : -value};
        if (value == 0) {
            out.vertical.push_back(entry);
        } else if (value > 0) {
            out.fiber_over_zero.push_back(entry);
        } else {
            out.fiber_over_infinity.push_back(entry);
        }
    }
    return out;
}

/// Star-subdivides along both primitive generators of ker L that are not
/// rays yet, so that p1_projection(result, L) succeeds.
inline Fan2 subdivide_along_kernel(const Fan2& fan, const Covector& form)
{
    if (form.a == 0 && form.b == 0) {
        throw Error(ErrorKind::InvalidSpec, "linear form must be nonzero");
    }
    const auto g = std::gcd(form.a, form.b);
    const RayVector k{-form.b / g, form.a / g};
    Fan2 out = fan;
    for (const auto& dir : {k, -k}) {
        if (!out.contains(dir)) {
            out = star_subdivide(out, dir);
        }
    }
    return out;
}

} // namespace clustype

#endif // CLUSTYPE_LATTICE_FAN_HPP
