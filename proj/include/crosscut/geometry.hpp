#pragma once

// 2D primitives shared by every other module: vectors, canonical lines,
// clockwise convex polygons, half-plane clipping, hulls.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input violates the genericity assumptions (three
// concurrent lines, duplicated lengths, ambiguous greedy step, ...).
struct NonGenericError : Error {
    using Error::Error;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Tolerances are relative; these are the dimensionless factors.
inline constexpr double kParallelTol = 1e-12;      // |cross| below this => parallel
inline constexpr double kRelGeomTol = 1e-9;        // * diameter => coordinate tolerance
inline constexpr double kRelAreaTol = 1e-9;        // * bounding-box area => area tolerance

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    if (n == 0.0) throw Error("cannot normalize zero vector");
    return a / n;
}

inline Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Line a1*x + a2*y + a3 = 0, stored canonically: a1^2 + a2^2 = 1 and the
/// first nonzero of (a1, a2) positive, so equal lines compare equal.
struct Line2 {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;

    static Line2 from_coeffs(double a1, double a2, double a3) {
        const double n = std::hypot(a1, a2);
        if (!(n > 0.0) || !std::isfinite(n)) throw Error("degenerate line coefficients");
        double s = 1.0 / n;
        if (a1 < 0.0 || (a1 == 0.0 && a2 < 0.0)) s = -s;
        return Line2{a1 * s, a2 * s, a3 * s};
    }

    static Line2 through(Vec2 p, Vec2 q) {
        const Vec2 d = q - p;
        return from_coeffs(-d.y, d.x, d.y * p.x - d.x * p.y);
    }

    // Signed distance of p from the line (coefficients are unit-normalized).
    double eval(Vec2 p) const { return a1 * p.x + a2 * p.y + a3; }

    Vec2 direction() const { return {-a2, a1}; }
    Vec2 normal() const { return {a1, a2}; }

    bool operator==(const Line2&) const = default;
};

/// Intersection point of two canonical lines, or nothing when near-parallel.
inline std::optional<Vec2> intersect_lines(const Line2& l1, const Line2& l2) {
    const double det = l1.a1 * l2.a2 - l1.a2 * l2.a1;
    if (std::abs(det) <= kParallelTol) return std::nullopt;
    return Vec2{(l1.a2 * l2.a3 - l2.a2 * l1.a3) / det,
                (l2.a1 * l1.a3 - l1.a1 * l2.a3) / det};
}

namespace detail {

inline double shoelace(const std::vector<Vec2>& v) {
    double s = 0.0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

} // namespace detail

struct BoundingBox {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    void expand(Vec2 p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return std::max(0.0, width()) * std::max(0.0, height()); }
    double diagonal() const { return std::hypot(width(), height()); }
};

/// Convex polygon with vertices stored clockwise (y-up convention, so the
/// shoelace sum is negative). Construction normalizes orientation and
/// rejects degenerate or non-convex input.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    explicit ConvexPolygon(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
        normalize_and_check();
    }

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Vec2& operator[](std::size_t i) const { return verts_[i]; }

    Vec2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
    Vec2 edge_start(std::size_t i) const { return verts_[i % verts_.size()]; }
    Vec2 edge_end(std::size_t i) const { return verts_[(i + 1) % verts_.size()]; }
    Vec2 edge_vec(std::size_t i) const { return edge_end(i) - edge_start(i); }
    double edge_length(std::size_t i) const { return norm(edge_vec(i)); }

    double signed_area() const { return detail::shoelace(verts_); }
    double area() const { return -signed_area(); }

    /// Area centroid (uniform density), not the vertex mean.
    Vec2 centroid() const {
        double a = 0.0;
        Vec2 c{0.0, 0.0};
        for (std::size_t i = 0, n = verts_.size(); i < n; ++i) {
            const Vec2& p = verts_[i];
            const Vec2& q = verts_[(i + 1) % n];
            const double w = p.x * q.y - q.x * p.y;
            a += w;
            c += (p + q) * w;
        }
        return c / (3.0 * a);
    }

    Vec2 vertex_mean() const {
        Vec2 m{0.0, 0.0};
        for (const Vec2& v : verts_) m += v;
        return m / static_cast<double>(verts_.size());
    }

    /// Second moment of area about the centroid (for rigid-body inertia).
    double second_moment() const {
        const Vec2 c = centroid();
        double acc = 0.0;
        for (std::size_t i = 0, n = verts_.size(); i < n; ++i) {
            const Vec2 p = verts_[i] - c;
            const Vec2 q = verts_[(i + 1) % n] - c;
            const double w = cross(p, q);
            acc += w * (dot(p, p) + dot(p, q) + dot(q, q));
        }
        // Clockwise order makes each w negative; flip to positive.
        return -acc / 12.0;
    }

    BoundingBox bounds() const {
        BoundingBox b;
        for (const Vec2& v : verts_) b.expand(v);
        return b;
    }

    /// Interior angle at vertex i, in (0, pi) for a strictly convex polygon.
    double interior_angle(std::size_t i) const {
        const std::size_t n = verts_.size();
        const Vec2 prev = verts_[(i + n - 1) % n] - verts_[i];
        const Vec2 next = verts_[(i + 1) % n] - verts_[i];
        return std::atan2(std::abs(cross(prev, next)), dot(prev, next));
    }

    /// True when p lies inside or on the border within `tol`.
    bool contains(Vec2 p, double tol) const {
        for (std::size_t i = 0, n = verts_.size(); i < n; ++i) {
            const Vec2 d = verts_[(i + 1) % n] - verts_[i];
            // Interior of a clockwise polygon is to the right of its edges.
            if (cross(d, p - verts_[i]) > tol * norm(d)) return false;
        }
        return true;
    }

    ConvexPolygon transformed(double angle, Vec2 t) const {
        std::vector<Vec2> out;
        out.reserve(verts_.size());
        for (const Vec2& v : verts_) out.push_back(rotate(v, angle) + t);
        ConvexPolygon p;
        p.verts_ = std::move(out);  // rigid motion preserves validity
        return p;
    }

private:
    void normalize_and_check() {
        if (verts_.size() < 3) throw Error("polygon needs at least 3 vertices");
        for (const Vec2& v : verts_)
            if (!finite(v)) throw Error("polygon vertex is not finite");
        if (detail::shoelace(verts_) > 0.0) std::reverse(verts_.begin(), verts_.end());

        BoundingBox b;
        for (const Vec2& v : verts_) b.expand(v);
        const double scale = std::max(b.diagonal(), 1e-300);
        const double area_tol = kRelAreaTol * std::max(b.area(), scale * scale * 1e-12);
        if (area() < area_tol) throw Error("degenerate polygon (area below tolerance)");

        const double geom_tol = kRelGeomTol * scale;
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = verts_[i];
            const Vec2 bb = verts_[(i + 1) % n];
            const Vec2 c = verts_[(i + 2) % n];
            if (distance(a, bb) <= geom_tol) throw Error("duplicate polygon vertices");
            // Clockwise turns only; tiny positive cross = collinear within tolerance.
            if (cross(bb - a, c - bb) > geom_tol * scale)
                throw Error("polygon is not convex/clockwise");
        }
    }

    std::vector<Vec2> verts_;
};

/// Strictly positive polygon area; degenerate input throws at construction.
inline double polygon_area(const ConvexPolygon& p) { return p.area(); }

/// Intersection of two convex polygons via iterative half-plane clipping.
/// Returns nothing when the intersection is empty or degenerate.
inline std::optional<ConvexPolygon> clip_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<Vec2> poly(p.vertices());
    std::vector<Vec2> next;
    const double scale = std::max(p.bounds().diagonal(), q.bounds().diagonal());
    const double tol = kRelGeomTol * scale;

    for (std::size_t i = 0, n = q.size(); i < n && !poly.empty(); ++i) {
        const Vec2 a = q.edge_start(i);
        const Vec2 d = q.edge_vec(i);
        const double dn = norm(d);
        next.clear();
        auto side = [&](Vec2 v) { return cross(d, v - a) / dn; };  // <= 0 is inside (CW)
        for (std::size_t j = 0, m = poly.size(); j < m; ++j) {
            const Vec2 cur = poly[j];
            const Vec2 nxt = poly[(j + 1) % m];
            const double sc = side(cur), sn = side(nxt);
            if (sc <= tol) next.push_back(cur);
            if ((sc < -tol && sn > tol) || (sc > tol && sn < -tol)) {
                const double t = sc / (sc - sn);
                next.push_back(cur + (nxt - cur) * t);
            }
        }
        poly.swap(next);
    }
    if (poly.size() < 3) return std::nullopt;

    // Drop near-duplicate and collinear vertices introduced by clipping.
    std::vector<Vec2> clean;
    for (const Vec2& v : poly) {
        if (clean.empty() || distance(clean.back(), v) > tol) clean.push_back(v);
    }
    while (clean.size() >= 2 && distance(clean.front(), clean.back()) <= tol) clean.pop_back();
    if (clean.size() < 3) return std::nullopt;
    std::vector<Vec2> final_verts;
    for (std::size_t i = 0, n = clean.size(); i < n; ++i) {
        const Vec2 prev = clean[(i + n - 1) % n];
        const Vec2 cur = clean[i];
        const Vec2 nxt = clean[(i + 1) % n];
        if (std::abs(cross(cur - prev, nxt - cur)) > tol * tol) final_verts.push_back(cur);
    }
    if (final_verts.size() < 3) return std::nullopt;
    if (std::abs(detail::shoelace(final_verts)) < kRelAreaTol * scale * scale) return std::nullopt;
    try {
        return ConvexPolygon(std::move(final_verts));
    } catch (const Error&) {
        return std::nullopt;  // sliver below construction tolerances
    }
}

/// Area of p ∩ q, zero when disjoint.
inline double intersection_area(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto r = clip_convex(p, q);
    return r ? r->area() : 0.0;
}

/// Convex hull (Andrew monotone chain), clockwise. Rejects collinear input.
inline ConvexPolygon convex_hull(std::vector<Vec2> points) {
    if (points.size() < 3) throw Error("convex hull needs at least 3 points");
    std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::size_t n = points.size();
    if (n < 3) throw Error("convex hull needs at least 3 distinct points");
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 1]) <= 0) --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 1]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // counterclockwise, last point repeats the first
    if (hull.size() < 3) throw Error("all points are collinear");
    std::reverse(hull.begin(), hull.end());
    return ConvexPolygon(std::move(hull));
}

/// Maximum pairwise distance. Uses the hull for large sets.
inline double diameter(const std::vector<Vec2>& points) {
    if (points.size() < 2) throw Error("diameter needs at least 2 points");
    const std::vector<Vec2>* pts = &points;
    std::vector<Vec2> hull_pts;
    if (points.size() > 64) {
        try {
            hull_pts = convex_hull(points).vertices();
            pts = &hull_pts;
        } catch (const Error&) {
            // collinear: fall back to the raw points
        }
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pts->size(); ++i)
        for (std::size_t j = i + 1; j < pts->size(); ++j)
            best = std::max(best, norm2((*pts)[i] - (*pts)[j]));
    return std::sqrt(best);
}

inline double diameter(const ConvexPolygon& p) { return diameter(p.vertices()); }

} // namespace crosscut
