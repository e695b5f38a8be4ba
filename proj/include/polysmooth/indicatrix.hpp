#pragma once

// Discrete Dupin indicatrices by plane sections of the infinite vertex star,
// and discrete asymptotic directions and cones at negatively curved vertices.

#include <algorithm>
#include <optional>
#include <vector>

#include "polysmooth/curvature.hpp"
#include "polysmooth/errors.hpp"
#include "polysmooth/mesh.hpp"

namespace polysmooth {

inline constexpr double kCollinearSinTol = 1e-9;

struct Wedge {
    Vec3 begin, end;     // unit boundary rays; wedge swept ccw about normal from begin to end, angle < pi
    Vec3 normal;         // unit face-plane normal
    int face{-1};
    int ring_index{-1};
    int part{0};         // 0, or 0/1 for the two halves of a reflex face
    bool from_reflex{false};
};

/// Unbounded wedge model of a vertex star: one wedge per convex-angle face,
/// two per reflex-angle face (split along the interior angle bisector).
struct InfiniteStar {
    Vec3 apex;
    std::vector<Wedge> wedges;
    const VertexStar* star{nullptr};
};

inline InfiniteStar infinite_star(const VertexStar& star) {
    InfiniteStar V;
    V.apex = star.center_pos;
    V.star = &star;
    const Mesh& mesh = *star.mesh;
    for (size_t i = 0; i < star.valence(); ++i) {
        const StarFace& sf = star.ring[i];
        const Vec3 n = mesh.face_normal(sf.face);
        if (sf.alpha < kPi) {
            V.wedges.push_back({sf.sector_start, sf.sector_end, n, sf.face, int(i), 0, false});
        } else {
            const Vec3 mid = normalized(rotate_about(sf.sector_start, n, sf.alpha / 2));
            V.wedges.push_back({sf.sector_start, mid, n, sf.face, int(i), 0, true});
            V.wedges.push_back({mid, sf.sector_end, n, sf.face, int(i), 1, true});
        }
    }
    return V;
}

struct SectionPolyline {
    bool closed{false};
    std::vector<Vec3> points;            // chain vertices on wedge boundary rays
    std::optional<Vec3> ray_in;          // unbounded direction before points.front()
    std::optional<Vec3> ray_out;         // unbounded direction after points.back()
    std::vector<int> piece_faces;        // face id per polyline piece

    bool open() const { return !closed; }
    size_t piece_count() const { return piece_faces.size(); }
};

enum class SectionClass {
    Empty,
    DiscreteEllipse,
    DiscreteHyperbola,
    ThreeComponents,
    SingleSegmentBranch,
    NestedConvex,
    Other,
};

inline const char* to_string(SectionClass c) {
    switch (c) {
        case SectionClass::Empty: return "Empty";
        case SectionClass::DiscreteEllipse: return "DiscreteEllipse";
        case SectionClass::DiscreteHyperbola: return "DiscreteHyperbola";
        case SectionClass::ThreeComponents: return "ThreeComponents";
        case SectionClass::SingleSegmentBranch: return "SingleSegmentBranch";
        case SectionClass::NestedConvex: return "NestedConvex";
        case SectionClass::Other: return "Other";
    }
    return "?";
}

/// A single-segment branch is still a discrete hyperbola; one of its branches
/// happens to be a straight line.
inline bool section_is_hyperbola(SectionClass c) {
    return c == SectionClass::DiscreteHyperbola || c == SectionClass::SingleSegmentBranch;
}

struct InflectionEdge {
    Vec3 a, b;
};

struct SectionResult {
    SectionClass classification{SectionClass::Empty};
    std::vector<SectionPolyline> polylines;
    std::vector<InflectionEdge> inflection_edges;
    bool degenerate{false};
};

namespace detail {

struct WedgePiece {
    // kind: 0 empty; 1 segment (enters on begin ray, exits on end ray);
    // 2 ray anchored on the begin boundary (exits to infinity);
    // 3 ray anchored on the end boundary (enters from infinity)
    int kind{0};
    Vec3 p_begin, p_end;
    Vec3 ray_dir;

    bool has_entry() const { return kind == 1 || kind == 2; }
    bool has_exit() const { return kind == 1 || kind == 3; }
};

}  // namespace detail

/// Intersect the infinite star with a plane, chain the per-wedge pieces into
/// maximal polylines, and classify. The two pieces inside a split reflex face
/// always merge (the split is artificial; the pieces are collinear).
inline SectionResult plane_section(const InfiniteStar& V, const Vec3& plane_point, const Vec3& plane_normal) {
    SectionResult res;
    const Vec3 nn = normalized(plane_normal);
    const double scale = std::max(V.star->mesh->bbox_diagonal(), 1e-300);
    const double hv = dot(nn, V.apex - plane_point);
    if (std::abs(hv) <= 1e-12 * scale) throw PlaneThroughApexError("section plane passes through the vertex");

    const size_t nw = V.wedges.size();
    std::vector<detail::WedgePiece> pieces(nw);
    for (size_t k = 0; k < nw; ++k) {
        const Wedge& w = V.wedges[k];
        const double h0 = dot(nn, w.begin);
        const double h1 = dot(nn, w.end);
        if (std::abs(h0) < 1e-12 || std::abs(h1) < 1e-12) res.degenerate = true;
        const bool hit0 = h0 * hv < 0 && std::abs(h0) >= 1e-12;
        const bool hit1 = h1 * hv < 0 && std::abs(h1) >= 1e-12;
        detail::WedgePiece& pc = pieces[k];
        if (hit0) pc.p_begin = V.apex + w.begin * (-hv / h0);
        if (hit1) pc.p_end = V.apex + w.end * (-hv / h1);
        if (hit0 && hit1) {
            pc.kind = 1;
        } else if (hit0 || hit1) {
            pc.kind = hit0 ? 2 : 3;
            // in-plane direction inside the wedge: sign chosen so both cone
            // coefficients are nonnegative
            Vec3 u = w.begin * h1 - w.end * h0;
            const double c = dot(w.begin, w.end);
            const double den = std::max(1.0 - c * c, 1e-18);
            const double a = dot(u, w.begin), b = dot(u, w.end);
            if ((a - c * b) / den < 0 || (b - c * a) / den < 0) u = -u;
            pc.ray_dir = normalized(u);
        }
    }

    // Hand-over across the shared boundary ray between consecutive wedges.
    std::vector<bool> conn(nw, false);
    std::vector<bool> merge_next(nw, false);
    for (size_t k = 0; k < nw; ++k) {
        const size_t k2 = (k + 1) % nw;
        conn[k] = pieces[k].has_exit() && pieces[k2].has_entry();
        merge_next[k] = conn[k] && V.wedges[k].from_reflex && V.wedges[k2].from_reflex &&
                        V.wedges[k].face == V.wedges[k2].face && V.wedges[k].part == 0;
    }

    bool any_nonempty = false, all_loop = true;
    for (size_t k = 0; k < nw; ++k) {
        any_nonempty = any_nonempty || pieces[k].kind != 0;
        all_loop = all_loop && pieces[k].kind == 1 && conn[k];
    }

    std::vector<bool> used(nw, false);
    auto emit_chain = [&](size_t start, bool closed) {
        SectionPolyline pl;
        pl.closed = closed;
        size_t k = start;
        bool first = true;
        while (true) {
            used[k] = true;
            const detail::WedgePiece& pc = pieces[k];
            if (first) {
                if (pc.kind == 3) pl.ray_in = pc.ray_dir;
                else if (pc.has_entry() && !closed) pl.points.push_back(pc.p_begin);
            }
            pl.piece_faces.push_back(V.wedges[k].face);
            first = false;
            if (pc.kind == 2) {
                pl.ray_out = pc.ray_dir;
                break;
            }
            const size_t k2 = (k + 1) % nw;
            const bool wraps = closed && k2 == start;
            const bool continue_chain = conn[k] && !wraps && !used[k2];
            // the exit point is dropped when the next piece merges (split
            // halves of the same reflex face): the split must stay invisible
            if (pc.has_exit()) {
                if (merge_next[k] && continue_chain) pl.piece_faces.pop_back();
                else pl.points.push_back(pc.p_end);
            }
            if (!continue_chain) break;
            k = k2;
        }
        res.polylines.push_back(std::move(pl));
    };

    if (any_nonempty) {
        if (all_loop) {
            // start outside any reflex merge pair so the wrap point is a real vertex
            size_t start = 0;
            for (size_t k = 0; k < nw; ++k)
                if (!merge_next[(k + nw - 1) % nw]) { start = k; break; }
            emit_chain(start, true);
        } else {
            for (size_t k = 0; k < nw; ++k) {
                if (used[k] || pieces[k].kind == 0) continue;
                const size_t kprev = (k + nw - 1) % nw;
                if (!conn[kprev]) emit_chain(k, false);
            }
        }
    }

    // classification in the plane's own 2D chart
    const Vec3 e1 = any_orthogonal(nn);
    const Vec3 e2 = cross(nn, e1);
    const Vec3 origin = V.apex - nn * hv;  // apex projected onto the plane
    auto flat = [&](const Vec3& p) { return Vec2{dot(p - origin, e1), dot(p - origin, e2)}; };
    auto flat_dir = [&](const Vec3& d) { return Vec2{dot(d, e1), dot(d, e2)}; };
    auto unflat = [&](const Vec2& q) { return origin + e1 * q.x + e2 * q.y; };

    double local_scale = 1e-12;
    for (const SectionPolyline& pl : res.polylines)
        for (const Vec3& p : pl.points) local_scale = std::max(local_scale, norm(p - origin));
    const double ray_cut = 1e4 * local_scale;

    struct ChainShape {
        std::vector<Vec2> pts;  // with ray pseudo-endpoints appended for open chains
        bool convex{true};
        bool straight{true};
        bool closed{false};
    };
    std::vector<ChainShape> shapes;
    for (const SectionPolyline& pl : res.polylines) {
        ChainShape sh;
        sh.closed = pl.closed;
        for (const Vec3& p : pl.points) sh.pts.push_back(flat(p));
        if (!pl.closed) {
            if (pl.ray_in && !sh.pts.empty())
                sh.pts.insert(sh.pts.begin(), sh.pts.front() + flat_dir(*pl.ray_in) * ray_cut);
            if (pl.ray_out && !sh.pts.empty())
                sh.pts.push_back(sh.pts.back() + flat_dir(*pl.ray_out) * ray_cut);
        }
        const std::vector<Vec2>& q = sh.pts;
        const size_t m = q.size();
        std::vector<double> turn(m, 0.0);
        const size_t lo = sh.closed ? 0 : 1;
        const size_t hi = sh.closed ? m : (m >= 1 ? m - 1 : 0);
        int sign_seen = 0;
        for (size_t i = lo; i < hi; ++i) {
            const Vec2& a = q[(i + m - 1) % m];
            const Vec2& b = q[i];
            const Vec2& c = q[(i + 1) % m];
            turn[i] = cross2(b - a, c - b);
            const double t = turn[i] / (norm(b - a) * norm(c - b) + 1e-300);
            if (std::abs(t) > 1e-12) {
                sh.straight = false;
                const int s = t > 0 ? 1 : -1;
                if (sign_seen == 0) sign_seen = s;
                else if (sign_seen != s) sh.convex = false;
            }
        }
        for (size_t i = lo; i < hi; ++i) {
            const size_t j = (i + 1) % m;
            if (!sh.closed && j >= hi) continue;
            const double ta = turn[i], tb = turn[j];
            if ((ta > 0 && tb < 0) || (ta < 0 && tb > 0))
                res.inflection_edges.push_back({unflat(q[i]), unflat(q[j])});
        }
        shapes.push_back(std::move(sh));
    }

    const size_t C = res.polylines.size();
    if (C == 0) {
        res.classification = SectionClass::Empty;
    } else if (C == 1 && shapes[0].closed) {
        res.classification = (shapes[0].convex && res.inflection_edges.empty())
                                 ? SectionClass::DiscreteEllipse
                                 : SectionClass::Other;
    } else if (C == 2 && !shapes[0].closed && !shapes[1].closed) {
        if (!res.inflection_edges.empty() || !shapes[0].convex || !shapes[1].convex) {
            res.classification = SectionClass::Other;
        } else {
            const std::vector<Vec2> h0 = convex_hull(shapes[0].pts);
            const std::vector<Vec2> h1 = convex_hull(shapes[1].pts);
            if (convex_polygons_disjoint(h0, h1)) {
                const bool single = shapes[0].straight || shapes[1].straight;
                res.classification = single ? SectionClass::SingleSegmentBranch
                                            : SectionClass::DiscreteHyperbola;
            } else {
                auto all_inside = [&](const std::vector<Vec2>& pts, const std::vector<Vec2>& hull) {
                    if (hull.size() < 3) return false;
                    for (const Vec2& p : pts)
                        if (!point_in_convex_ccw(hull, p)) return false;
                    return true;
                };
                const bool nested = all_inside(shapes[0].pts, h1) || all_inside(shapes[1].pts, h0);
                res.classification = nested ? SectionClass::NestedConvex : SectionClass::Other;
            }
        }
    } else if (C == 3) {
        res.classification = SectionClass::ThreeComponents;
    } else {
        res.classification = SectionClass::Other;
    }
    return res;
}

struct AsymptoticDirection {
    Vec3 dir;           // unit, in the tangent plane
    int face{-1};
    int ring_index{-1};
    bool degenerate{false};  // direction numerically on a wedge boundary ray
};

struct VertexAsymptotics {
    std::vector<AsymptoticDirection> directions;
    std::vector<std::pair<int, int>> collinear_pairs;  // indices into directions
};

/// The discrete asymptotic directions at a negatively curved smooth vertex:
/// ray directions of the intersection of the tangent plane (through the
/// vertex, orthogonal to frame.tangent_normal) with the infinite star.
inline VertexAsymptotics asymptotic_directions_vertex(const VertexStar& star, const TangentFrame& frame) {
    if (gaussian_curvature(star) >= 0)
        throw WrongCurvatureSignError("asymptotic directions require negative curvature");
    const Vec3 n = normalized(frame.tangent_normal);
    VertexAsymptotics out;
    const InfiniteStar V = infinite_star(star);
    for (const Wedge& w : V.wedges) {
        const double h0 = dot(n, w.begin);
        const double h1 = dot(n, w.end);
        const bool deg = std::abs(h0) < 1e-12 || std::abs(h1) < 1e-12;
        if (h0 * h1 >= 0) {
            if (deg) {
                // tangent plane grazes a boundary ray (meshes aligned with
                // asymptotic lines); emit the edge direction, flagged
                out.directions.push_back({std::abs(h0) < std::abs(h1) ? w.begin : w.end,
                                          w.face, w.ring_index, true});
            }
            continue;
        }
        Vec3 u = w.begin * h1 - w.end * h0;
        if (h1 < 0) u = -u;
        out.directions.push_back({normalized(u), w.face, w.ring_index, deg});
    }
    for (size_t i = 0; i < out.directions.size(); ++i)
        for (size_t j = i + 1; j < out.directions.size(); ++j) {
            const double s = norm(cross(out.directions[i].dir, out.directions[j].dir));
            if (s < kCollinearSinTol) out.collinear_pairs.push_back({int(i), int(j)});
        }
    return out;
}

struct AsymptoticCone {
    int face{-1};
    int ring_index{-1};
    double alpha0{0};     // opening angle of the admissible cone
    double gap_start{0};  // angle between the cone and the sector_start edge
    double gap_end{0};    // angle between the cone and the sector_end edge
    bool double_cone{false};  // reflex non-inflection face: cone plus its opposite
    Vec3 cone_start;      // unit; cone swept ccw about the face normal from here by alpha0
    Vec3 normal;

    bool contains(const Vec3& d, double tol = 1e-12) const {
        if (std::abs(dot(d, normal)) > 1e-7) return false;
        const Vec3 x = d - normal * dot(d, normal);
        double az = std::atan2(dot(cross(cone_start, x), normal), dot(cone_start, x));
        if (az < 0) az += kTwoPi;
        if (az > tol && az < alpha0 - tol) return true;
        if (double_cone) {
            az -= kPi;
            if (az < 0) az += kTwoPi;
            return az > tol && az < alpha0 - tol;
        }
        return false;
    }
};

/// Admissible asymptotic cones per inflection face (and per reflex
/// non-inflection face, as a double cone), from the tangent digon of the
/// kernel at the face normal. Requires a kernel with interior.
inline std::vector<AsymptoticCone> asymptotic_cones(const VertexStar& star) {
    if (gaussian_curvature(star) >= 0)
        throw WrongCurvatureSignError("asymptotic cones require negative curvature");
    const VertexSmoothness sm = vertex_smoothness(star);
    if (!sm.kernel_nonempty || !sm.frame)
        throw EmptyKernelError("asymptotic cones require a kernel with interior");
    const GaussImage img = gauss_image(star);
    const SphericalRegionKernel& ker = sm.kernel;
    GnomonicChart chart(ker.pole);
    const Vec3 n_interior = sm.frame->tangent_normal;

    std::vector<AsymptoticCone> cones;
    const size_t n = star.valence();
    for (size_t i = 0; i < n; ++i) {
        const bool infl = is_inflection_face(star, i);
        const bool reflex = star.ring[i].alpha > kPi;
        if (!infl && !reflex) continue;
        const Vec3& nf = img.polygon[i];
        const Vec3& nprev = img.polygon[(i + n - 1) % n];
        const Vec3& nnext = img.polygon[i + 1];

        // support vertices of the kernel as seen from nf, in the chart; nf
        // itself may be a kernel corner (then the digon sides are the kernel
        // edges at it), so coincident vertices are skipped
        const Vec2 q = chart.to_plane(nf);
        const std::vector<Vec2>& K2 = ker.boundary_2d;
        Vec2 ref{0, 0};
        double qscale = 1.0;
        for (const Vec2& p : K2) {
            ref = ref + p;
            qscale = std::max(qscale, norm(p - q));
        }
        ref = ref / double(K2.size()) - q;
        size_t jmin = K2.size(), jmax = K2.size();
        double amin = 1e300, amax = -1e300;
        for (size_t j = 0; j < K2.size(); ++j) {
            const Vec2 d = K2[j] - q;
            if (norm(d) < 1e-12 * qscale) continue;
            const double az = std::atan2(cross2(ref, d), dot(ref, d));
            if (az < amin) { amin = az; jmin = j; }
            if (az > amax) { amax = az; jmax = j; }
        }
        if (jmin >= K2.size() || jmax >= K2.size()) continue;  // kernel degenerate at nf
        const Vec3 tL = geodesic_tangent(nf, ker.boundary[jmax]);
        const Vec3 tR = geodesic_tangent(nf, ker.boundary[jmin]);
        const Vec3 tprev = geodesic_tangent(nf, nprev);
        const Vec3 tnext = geodesic_tangent(nf, nnext);
        const Vec3 tin = geodesic_tangent(nf, n_interior);

        // azimuths at nf measured from tnext, oriented so the span from
        // tnext to tprev contains the kernel direction
        const Vec3 b1 = tnext;
        const Vec3 b2 = cross(nf, b1);
        auto azim = [&](const Vec3& t) {
            double a = std::atan2(dot(t, b2), dot(t, b1));
            if (a < 0) a += kTwoPi;
            return a;
        };
        double span = azim(tprev);
        double a_in = azim(tin);
        double aL = azim(tL), aR = azim(tR);
        if (a_in > span) {
            span = kTwoPi - span;
            aL = std::fmod(kTwoPi - aL, kTwoPi);
            aR = std::fmod(kTwoPi - aR, kTwoPi);
        }
        // digon tangents live in [0, span]; resolve the circular wrap toward
        // the nearer end before clamping
        auto unwrap = [&](double a) {
            if (a > span && a - span > kTwoPi - a) a -= kTwoPi;
            return std::clamp(a, 0.0, span);
        };
        const double x_lo = std::min(unwrap(aL), unwrap(aR));
        const double x_hi = std::max(unwrap(aL), unwrap(aR));
        AsymptoticCone cone;
        cone.face = star.ring[i].face;
        cone.ring_index = int(i);
        cone.double_cone = reflex && !infl;
        cone.gap_end = x_lo;           // adjacent to the arc toward nnext (edge shared with next face)
        cone.gap_start = span - x_hi;  // adjacent to the arc toward nprev (edge shared with prev face)
        cone.alpha0 = x_hi - x_lo;
        cone.normal = star.mesh->face_normal(star.ring[i].face);
        cone.cone_start = normalized(rotate_about(star.ring[i].sector_start, cone.normal, cone.gap_start));
        cones.push_back(cone);
    }
    return cones;
}

}  // namespace polysmooth
