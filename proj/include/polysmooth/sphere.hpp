#pragma once

// Spherical-geometry kernel: great-circle arcs, spherical polygons, signed
// areas, winding numbers, self-intersection tests, hemisphere poles, and
// star-shapedness kernels. All polygons join consecutive vertices by the
// shorter great-circle arc.

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "polysmooth/errors.hpp"
#include "polysmooth/planar.hpp"
#include "polysmooth/vec.hpp"

namespace polysmooth {

// Tolerance on longitude parameters for arc incidence tests.
inline constexpr double kArcParamTol = 1e-12;

struct GreatArc {
    Vec3 a, b;  // unit endpoints, a != +-b

    GreatArc(const Vec3& a_, const Vec3& b_) : a(a_), b(b_) {
        if (norm(cross(a, b)) < 1e-14 && dot(a, b) < 0)
            throw GeometryError("antipodal arc endpoints");
        if (norm(a - b) < 1e-14) throw GeometryError("equal arc endpoints");
    }
};

struct SphericalPolygon {
    std::vector<Vec3> vertices;  // unit, cyclic; consecutive non-antipodal

    size_t size() const { return vertices.size(); }
    const Vec3& operator[](size_t i) const { return vertices[i % vertices.size()]; }
};

/// Unit tangent at x pointing along the geodesic toward y.
inline Vec3 geodesic_tangent(const Vec3& x, const Vec3& y) {
    const Vec3 t = y - x * dot(x, y);
    const double n = norm(t);
    if (n < 1e-15) throw GeometryError("degenerate geodesic tangent (coincident or antipodal points)");
    return t / n;
}

/// Arc length (central angle) between unit vectors, in [0, pi].
inline double arc_length(const Vec3& a, const Vec3& b) { return angle_between(a, b); }

/// Longitude parameter of p along the great circle through a->b, measured
/// from a; p is assumed to lie on that circle. Range (-pi, pi].
inline double arc_parameter(const Vec3& a, const Vec3& b, const Vec3& p) {
    const double theta = arc_length(a, b);
    const Vec3 w = geodesic_tangent(a, b);
    (void)theta;
    return std::atan2(dot(p, w), dot(p, a));
}

/// Is p on the shorter arc a->b (within the longitude tolerance)?
inline bool point_on_arc(const Vec3& a, const Vec3& b, const Vec3& p, double tol = kArcParamTol) {
    const Vec3 c = cross(a, b);
    const double cn = norm(c);
    if (cn < 1e-15) return false;
    if (std::abs(dot(p, c / cn)) > 1e-9) return false;  // not on the great circle
    const double theta = arc_length(a, b);
    const double t = arc_parameter(a, b, p);
    return t >= -tol && t <= theta + tol;
}

struct ArcCrossing {
    bool crosses{false};
    bool degenerate{false};  // touch within tolerance of an endpoint / tangency
};

/// Proper-crossing test for two shorter arcs. Closed form via the cross
/// product of the two great-circle normals; candidate points are tested for
/// strict containment in both arcs with tolerance kArcParamTol on the
/// longitude parameters.
inline ArcCrossing arcs_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    ArcCrossing res;
    const Vec3 c1 = cross(a, b);
    const Vec3 c2 = cross(c, d);
    const double th1 = arc_length(a, b);
    const double th2 = arc_length(c, d);
    const Vec3 q0 = cross(c1, c2);
    const double qn = norm(q0);
    if (qn < 1e-14 * norm(c1) * norm(c2)) {
        // Same (or opposite) great circle: overlap iff some endpoint of one
        // arc lies strictly inside the other.
        auto inside = [&](const Vec3& u, const Vec3& v, double th, const Vec3& p) {
            if (std::abs(dot(p, normalized(cross(u, v)))) > 1e-9) return 0;
            const double t = arc_parameter(u, v, p);
            if (t > kArcParamTol && t < th - kArcParamTol) return 2;  // strictly inside
            if (t > -kArcParamTol && t < th + kArcParamTol) return 1; // at an endpoint
            return 0;
        };
        int strict = 0, touch = 0;
        for (const Vec3& p : {c, d}) {
            const int r = inside(a, b, th1, p);
            strict += (r == 2);
            touch += (r == 1);
        }
        for (const Vec3& p : {a, b}) {
            const int r = inside(c, d, th2, p);
            strict += (r == 2);
            touch += (r == 1);
        }
        if (strict > 0) {
            res.crosses = true;
            res.degenerate = true;  // collinear overlap is inherently degenerate
        } else if (touch > 0) {
            res.degenerate = true;
        }
        return res;
    }
    const Vec3 q = q0 / qn;
    for (const Vec3& p : {q, -q}) {
        const double t1 = arc_parameter(a, b, p);
        const double t2 = arc_parameter(c, d, p);
        const bool in1 = t1 > kArcParamTol && t1 < th1 - kArcParamTol;
        const bool in2 = t2 > kArcParamTol && t2 < th2 - kArcParamTol;
        const bool near1 = t1 > -kArcParamTol && t1 < th1 + kArcParamTol;
        const bool near2 = t2 > -kArcParamTol && t2 < th2 + kArcParamTol;
        if (in1 && in2) {
            res.crosses = true;
        } else if (near1 && near2 && !(in1 && in2)) {
            res.degenerate = true;  // endpoint touch within tolerance: treated as non-crossing
        }
    }
    return res;
}

struct SimplicityResult {
    bool simple{true};
    bool degenerate{false};
    int arc_a{-1}, arc_b{-1};  // first crossing pair, when not simple
};

/// O(n^2) pairwise arc test. Adjacent arcs may meet only at the shared
/// vertex; for non-collinear circles that is automatic, so adjacency only
/// needs the collinear-overlap check.
inline SimplicityResult is_simple(const SphericalPolygon& poly) {
    SimplicityResult res;
    const size_t n = poly.size();
    if (n < 2) return res;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Vec3 &a = poly[i], &b = poly[i + 1];
            const Vec3 &c = poly[j], &d = poly[j + 1];
            if (adjacent) {
                // Shared endpoint excluded; only a doubling-back overlap on a
                // common great circle can violate simplicity.
                const Vec3 n1 = cross(a, b);
                const Vec3 n2 = cross(c, d);
                if (norm(cross(n1, n2)) < 1e-14 * norm(n1) * norm(n2)) {
                    const ArcCrossing x = arcs_cross(a, b, c, d);
                    if (x.crosses) {
                        res.simple = false;
                        if (res.arc_a < 0) { res.arc_a = int(i); res.arc_b = int(j); }
                    }
                    res.degenerate = res.degenerate || x.degenerate;
                }
                continue;
            }
            {
                // non-adjacent arcs on a common great circle: the border case
                // where crossings begin to occur (edges along asymptotic
                // lines); flagged degenerate even without a touch
                const Vec3 n1 = cross(a, b);
                const Vec3 n2 = cross(c, d);
                if (norm(cross(n1, n2)) < 1e-12 * norm(n1) * norm(n2)) res.degenerate = true;
            }
            const ArcCrossing x = arcs_cross(a, b, c, d);
            if (x.crosses) {
                res.simple = false;
                if (res.arc_a < 0) { res.arc_a = int(i); res.arc_b = int(j); }
            }
            res.degenerate = res.degenerate || x.degenerate;
        }
    }
    return res;
}

/// Angle on the left side of the traversal prev -> at -> next, in (0, 2pi).
/// For a polygon traversed counterclockwise around its interior this is the
/// interior angle; for a clockwise traversal it is 2pi minus it.
inline double left_side_angle(const Vec3& prev, const Vec3& at, const Vec3& next) {
    const Vec3 ta = geodesic_tangent(at, prev);
    const Vec3 tb = geodesic_tangent(at, next);
    double ang = std::atan2(dot(cross(tb, ta), at), dot(tb, ta));
    if (ang <= 0) ang += kTwoPi;
    return ang;
}

/// Signed enclosed area in steradians: orientation_sign * (sum of interior
/// angles - (n-2) pi), with interior angles measured on the side indicated by
/// orientation_sign (+1: polygon traversed counterclockwise around its
/// interior, -1: clockwise).
inline double signed_area(const SphericalPolygon& poly, int orientation_sign) {
    const size_t n = poly.size();
    if (n < 3) throw GeometryError("spherical polygon area needs >= 3 vertices");
    const SimplicityResult simp = is_simple(poly);
    if (!simp.simple) throw NotSimpleError("polygon self-intersects (arcs " + std::to_string(simp.arc_a) +
                                           ", " + std::to_string(simp.arc_b) + ")");
    std::vector<double> angles;
    angles.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec3& prev = poly[(i + n - 1) % n];
        const Vec3& at = poly[i];
        const Vec3& next = poly[(i + 1) % n];
        const double a = orientation_sign >= 0 ? left_side_angle(prev, at, next)
                                               : left_side_angle(next, at, prev);
        if (a < 1e-12 || a > kTwoPi - 1e-12)
            throw DegenerateAngleError("vertex angle numerically 0 or 2pi at vertex " + std::to_string(i));
        angles.push_back(a);
    }
    // summed in sorted order so a polygon and its reversal negate exactly
    std::sort(angles.begin(), angles.end());
    double sum = 0;
    for (double a : angles) sum += a;
    const double area = sum - double(n - 2) * kPi;
    return orientation_sign >= 0 ? area : -area;
}

/// Membership of x in the region enclosed by a simple spherical polygon
/// (interior on the left of the traversal for orientation_sign = +1, on the
/// right for -1). Crossing parity of the arc from a seed point just inside
/// the region; robust for regions that contain antipodal pairs, where a
/// winding count around the axis cannot see containment.
inline bool region_contains(const SphericalPolygon& poly, int orientation_sign, const Vec3& x) {
    const size_t n = poly.size();
    if (n < 3) return false;
    // seed just inside, off the midpoint of the longest arc
    size_t best = 0;
    double best_len = -1;
    for (size_t i = 0; i < n; ++i) {
        const double L = arc_length(poly[i], poly[i + 1]);
        if (L > best_len) { best_len = L; best = i; }
    }
    const Vec3& a = poly[best];
    const Vec3& b = poly[best + 1];
    const double theta = arc_length(a, b);
    const Vec3 w = geodesic_tangent(a, b);
    const Vec3 mid = a * std::cos(theta / 2) + w * std::sin(theta / 2);
    const Vec3 tangent = w * std::cos(theta / 2) - a * std::sin(theta / 2);
    const Vec3 left = cross(mid, tangent);
    const double delta = 1e-5;
    const Vec3 seed = normalized(mid + left * (orientation_sign >= 0 ? delta : -delta));
    if (norm(cross(seed, x)) < 1e-12) return true;  // x is the seed direction itself
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const ArcCrossing c = arcs_cross(seed, x, poly[i], poly[i + 1]);
        if (c.crosses) ++crossings;
    }
    return crossings % 2 == 0;
}

/// Algebraic multiplicity of xi in the region a polygon encloses: the region
/// is the face of smaller area (the enclosed area is defined modulo 4 pi; the
/// smaller face is the one Banchoff's index counts), the sign follows the
/// traversal orientation around it. Points of the other face count zero — in
/// particular a region containing an antipodal pair counts both points. For
/// a self-intersecting polygon this degenerates to the azimuthal degree
/// around the axis of xi.
inline int winding_number(const SphericalPolygon& poly, const Vec3& xi) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        if (point_on_arc(poly[i], poly[i + 1], xi) || point_on_arc(poly[i], poly[i + 1], -xi))
            throw PointOnBoundaryError("winding number undefined: point or antipode on polygon arc " +
                                       std::to_string(i));
    }
    if (n >= 3 && is_simple(poly).simple) {
        double left_sum = 0;
        bool angles_ok = true;
        for (size_t i = 0; i < n; ++i) {
            try {
                left_sum += left_side_angle(poly[(i + n - 1) % n], poly[i], poly[i + 1]);
            } catch (const GeometryError&) {
                angles_ok = false;
                break;
            }
        }
        if (angles_ok) {
            const double area_left = left_sum - double(n - 2) * kPi;
            const bool left_smaller = area_left < kTwoPi;
            if (!region_contains(poly, left_smaller ? 1 : -1, xi)) return 0;
            return left_smaller ? 1 : -1;
        }
    }
    // fallback: azimuthal degree about xi, sampled along the arcs
    const Vec3 e1 = any_orthogonal(xi);
    const Vec3 e2 = cross(xi, e1);
    double total = 0;
    constexpr int kSteps = 64;
    for (size_t i = 0; i < n; ++i) {
        const Vec3& p = poly[i];
        const Vec3& q = poly[i + 1];
        const double theta = arc_length(p, q);
        const Vec3 w = geodesic_tangent(p, q);
        double prev = std::atan2(dot(p, e2), dot(p, e1));
        for (int s = 1; s <= kSteps; ++s) {
            const double t = theta * double(s) / kSteps;
            const Vec3 x = p * std::cos(t) + w * std::sin(t);
            const double az = std::atan2(dot(x, e2), dot(x, e1));
            total += std::remainder(az - prev, kTwoPi);
            prev = az;
        }
    }
    const double wind = total / kTwoPi;
    const long r = std::lround(wind);
    if (std::abs(wind - double(r)) > 0.25)
        throw PointOnBoundaryError("non-integral winding number (degenerate configuration)");
    return int(r);
}

/// Pole of an open hemisphere strictly containing all the given unit points,
/// if one exists. Solved as max-min feasibility: the optimal pole is the
/// direction of the nearest point of conv{p_i} to the origin; candidates are
/// enumerated over vertices, pairs, and triples (the valences here are tiny).
/// Accepts iff the margin min_i <pole, p_i> exceeds 1e-10.
inline std::optional<Vec3> hemisphere_pole(const std::vector<Vec3>& points, double* margin_out = nullptr) {
    if (points.empty()) return std::nullopt;
    const size_t n = points.size();
    auto eval = [&](const Vec3& c) {
        double t = 1e300;
        for (const Vec3& p : points) t = std::min(t, dot(c, p));
        return t;
    };
    Vec3 best_c{0, 0, 0};
    double best_t = -1e300;
    auto consider = [&](const Vec3& cand) {
        const double cn = norm(cand);
        if (cn < 1e-14) return;
        const Vec3 c = cand / cn;
        const double t = eval(c);
        if (t > best_t) { best_t = t; best_c = c; }
    };
    for (size_t i = 0; i < n; ++i) consider(points[i]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) consider(points[i] + points[j]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                const Vec3 c = cross(points[i] - points[j], points[i] - points[k]);
                consider(c);
                consider(-c);
            }
    if (margin_out) *margin_out = best_t;
    if (best_t > 1e-10) return best_c;
    return std::nullopt;
}

/// Gnomonic chart at a pole: maps the open hemisphere around the pole to the
/// tangent plane at the pole; great circles correspond to straight lines.
struct GnomonicChart {
    Vec3 pole, e1, e2;

    explicit GnomonicChart(const Vec3& pole_) : pole(normalized(pole_)) {
        e1 = any_orthogonal(pole);
        e2 = cross(pole, e1);
    }

    Vec2 to_plane(const Vec3& p) const {
        const double s = dot(p, pole);
        if (s <= 1e-12) throw NotHemisphericalError("point not in the chart hemisphere");
        const Vec3 q = p / s;
        return {dot(q, e1), dot(q, e2)};
    }

    Vec3 to_sphere(const Vec2& v) const { return normalized(pole + e1 * v.x + e2 * v.y); }
};

/// Kernel of a star-shaped spherical polygon: the set of interior points that
/// see every polygon vertex along an interior arc. Convex; may be empty.
struct SphericalRegionKernel {
    std::vector<Vec3> boundary;       // convex spherical polygon (counterclockwise in chart)
    std::vector<Vec2> boundary_2d;    // same, in the chart used to compute it
    Vec3 pole{0, 0, 1};               // hemisphere pole / chart center
    double area_2d{0};                // chart area; > 0 iff the kernel has interior

    bool has_interior() const { return area_2d > 1e-14; }
    bool empty() const { return boundary.empty(); }
};

/// Kernel via gnomonic projection: project from the hemisphere pole, compute
/// the planar polygon kernel by half-plane intersection, and map back.
inline SphericalRegionKernel star_shape_kernel(const SphericalPolygon& poly) {
    const SimplicityResult simp = is_simple(poly);
    if (!simp.simple) throw NotSimpleError("kernel of a self-intersecting polygon");
    const std::optional<Vec3> pole = hemisphere_pole(poly.vertices);
    if (!pole) throw NotHemisphericalError("polygon not contained in an open hemisphere");
    GnomonicChart chart(*pole);
    std::vector<Vec2> flat;
    flat.reserve(poly.size());
    for (const Vec3& v : poly.vertices) flat.push_back(chart.to_plane(v));
    std::vector<Vec2> ker = polygon_kernel_2d(flat);
    SphericalRegionKernel out;
    out.pole = *pole;
    if (ker.size() >= 3) {
        out.area_2d = std::abs(polygon_signed_area(ker));
        if (polygon_signed_area(ker) < 0) std::reverse(ker.begin(), ker.end());
        out.boundary_2d = ker;
        for (const Vec2& q : ker) out.boundary.push_back(chart.to_sphere(q));
    }
    return out;
}

/// Deterministic interior point of a nonempty kernel: normalized vertex mean,
/// verified to lie in the kernel, else the chart Chebyshev center.
inline std::optional<Vec3> kernel_representative(const SphericalRegionKernel& ker) {
    if (!ker.has_interior()) return std::nullopt;
    GnomonicChart chart(ker.pole);
    Vec3 mean{0, 0, 0};
    for (const Vec3& v : ker.boundary) mean += v;
    const Vec3 cand = normalized(mean);
    const Vec2 q = chart.to_plane(cand);
    double scale = 0;
    for (const Vec2& p : ker.boundary_2d) scale = std::max(scale, norm(p - q));
    if (point_in_convex_ccw(ker.boundary_2d, q, 1e-12 * (1.0 + scale))) return cand;
    const std::optional<InscribedCircle> c = chebyshev_center(ker.boundary_2d);
    if (!c) return std::nullopt;
    return chart.to_sphere(c->center);
}

/// Is x strictly inside the kernel?
inline bool kernel_contains(const SphericalRegionKernel& ker, const Vec3& x) {
    if (!ker.has_interior()) return false;
    GnomonicChart chart(ker.pole);
    if (dot(x, ker.pole) <= 1e-12) return false;
    return point_in_convex_ccw(ker.boundary_2d, chart.to_plane(x));
}

}  // namespace polysmooth
