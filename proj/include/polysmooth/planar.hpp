#pragma once

// 2D polygon helpers shared by the spherical kernel (gnomonic charts), face
// analysis, and plane sections.

#include <algorithm>
#include <optional>
#include <vector>

#include "polysmooth/vec.hpp"

namespace polysmooth {

inline double polygon_signed_area(const std::vector<Vec2>& p) {
    double a = 0;
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& u = p[i];
        const Vec2& v = p[(i + 1) % n];
        a += u.x * v.y - v.x * u.y;
    }
    return 0.5 * a;
}

inline Vec2 polygon_centroid(const std::vector<Vec2>& p) {
    // Area centroid; falls back to the vertex mean for degenerate polygons.
    double a = 0, cx = 0, cy = 0;
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& u = p[i];
        const Vec2& v = p[(i + 1) % n];
        const double w = u.x * v.y - v.x * u.y;
        a += w;
        cx += (u.x + v.x) * w;
        cy += (u.y + v.y) * w;
    }
    if (std::abs(a) < 1e-300) {
        Vec2 m{0, 0};
        for (const Vec2& q : p) m = m + q;
        return m / double(n);
    }
    return Vec2{cx, cy} / (3.0 * a);
}

/// Clip a convex polygon by the half-plane {x : cross2(b-a, x-a) >= 0}.
inline std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
    std::vector<Vec2> out;
    const size_t n = poly.size();
    if (n == 0) return out;
    const Vec2 d = b - a;
    auto side = [&](const Vec2& p) { return cross2(d, p - a); };
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        const double sp = side(p), sq = side(q);
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            const double t = sp / (sp - sq);
            out.push_back(p + (q - p) * t);
        }
    }
    return out;
}

/// Kernel of a simple polygon: intersection of the half-planes along its
/// edges (interior side determined by the polygon orientation). Returns a
/// convex polygon, possibly empty.
inline std::vector<Vec2> polygon_kernel_2d(const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    if (n < 3) return {};
    const double orient = polygon_signed_area(poly) >= 0 ? 1.0 : -1.0;
    double bound = 1.0;
    for (const Vec2& p : poly) bound = std::max(bound, std::max(std::abs(p.x), std::abs(p.y)));
    bound = 4.0 * bound + 4.0;
    std::vector<Vec2> ker = {{-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};
    for (size_t i = 0; i < n && !ker.empty(); ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        if (orient < 0) std::swap(a, b);
        ker = clip_half_plane(ker, a, b);
    }
    return ker;
}

/// Strict interior test against a convex CCW polygon, with margin.
inline bool point_in_convex_ccw(const std::vector<Vec2>& poly, const Vec2& p, double margin = 0.0) {
    const size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        if (cross2(b - a, p - a) <= margin) return false;
    }
    return true;
}

/// Crossing-number point-in-polygon test (simple polygons, any orientation).
inline bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
    bool in = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) in = !in;
        }
    }
    return in;
}

/// Does the segment [a,b] stay inside the simple polygon (closed containment)?
/// Checked by midpoint sampling; adequate for the small polygons handled here.
inline bool segment_in_polygon(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b, int samples = 64) {
    for (int i = 0; i <= samples; ++i) {
        const double t = double(i) / samples;
        const Vec2 p = a + (b - a) * t;
        bool onboundary = false;
        const size_t n = poly.size();
        for (size_t j = 0; j < n && !onboundary; ++j) {
            const Vec2& u = poly[j];
            const Vec2& v = poly[(j + 1) % n];
            const Vec2 d = v - u;
            const double len2 = dot(d, d);
            if (len2 == 0) continue;
            const double t2 = std::clamp(dot(p - u, d) / len2, 0.0, 1.0);
            const Vec2 q = u + d * t2;
            if (norm(p - q) < 1e-12 * (1.0 + norm(q))) onboundary = true;
        }
        if (!onboundary && !point_in_polygon(poly, p)) return false;
    }
    return true;
}

/// Monotone-chain convex hull, CCW, no duplicate endpoints.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Vec2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

/// Exact separating-axis disjointness test for two convex CCW polygons.
inline bool convex_polygons_disjoint(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    auto separated_by_edges = [](const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
        const size_t n = p.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2 e = p[(i + 1) % n] - p[i];
            const Vec2 axis{-e.y, e.x};
            double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
            for (const Vec2& v : p) { const double s = dot(axis, v); pmin = std::min(pmin, s); pmax = std::max(pmax, s); }
            for (const Vec2& v : q) { const double s = dot(axis, v); qmin = std::min(qmin, s); qmax = std::max(qmax, s); }
            if (pmax < qmin || qmax < pmin) return true;
        }
        return false;
    };
    if (a.empty() || b.empty()) return true;
    return separated_by_edges(a, b) || separated_by_edges(b, a);
}

struct InscribedCircle {
    Vec2 center;
    double radius{0};
};

/// Largest inscribed circle of a convex CCW polygon ("Chebyshev center"),
/// via exhaustive enumeration of active-constraint triples. The polygon is
/// tiny (a gnomonic kernel), so O(m^3) is fine.
inline std::optional<InscribedCircle> chebyshev_center(const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    if (n < 3) return std::nullopt;
    // Edge i: inward unit normal m_i, offset d_i; feasibility m_i.x >= d_i + r.
    std::vector<Vec2> nrm(n);
    std::vector<double> off(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec2 e = poly[(i + 1) % n] - poly[i];
        const Vec2 m = normalized(Vec2{-e.y, e.x});
        nrm[i] = m;
        off[i] = dot(m, poly[i]);
    }
    auto margin = [&](const Vec2& c) {
        double r = 1e300;
        for (size_t i = 0; i < n; ++i) r = std::min(r, dot(nrm[i], c) - off[i]);
        return r;
    };
    std::optional<InscribedCircle> best;
    auto consider = [&](const Vec2& c) {
        const double r = margin(c);
        if (!best || r > best->radius) best = InscribedCircle{c, r};
    };
    consider(polygon_centroid(poly));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                // Solve m_i.c - r = d_i for the three edges.
                const double A[3][3] = {{nrm[i].x, nrm[i].y, -1},
                                        {nrm[j].x, nrm[j].y, -1},
                                        {nrm[k].x, nrm[k].y, -1}};
                const double rhs[3] = {off[i], off[j], off[k]};
                const double det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                                   A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                                   A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
                if (std::abs(det) < 1e-14) continue;
                auto solve = [&](int col) {
                    double B[3][3];
                    for (int r = 0; r < 3; ++r)
                        for (int c = 0; c < 3; ++c) B[r][c] = (c == col) ? rhs[r] : A[r][c];
                    return (B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) -
                            B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
                            B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0])) /
                           det;
                };
                consider(Vec2{solve(0), solve(1)});
            }
    if (!best || best->radius <= 0) return std::nullopt;
    return best;
}

}  // namespace polysmooth
