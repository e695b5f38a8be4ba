#pragma once

// Per-face theory: curvature-sign patterns around a face, angle sums at the
// face normal, the c1..c4 counting, face shape classification, points of
// contact, face asymptotic directions, parabolic segments, and mixed-face
// decomposition into building blocks.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polysmooth/curvature.hpp"
#include "polysmooth/errors.hpp"
#include "polysmooth/mesh.hpp"

namespace polysmooth {

enum class FaceShapeClass {
    ConvexPositive,
    PseudoQuadNegative,
    PseudoTriangleNegative4,
    PseudoTriangleNegative2,
    MixedBlockOK,
    MonkeySaddle,
    Violating,
};

inline const char* to_string(FaceShapeClass c) {
    switch (c) {
        case FaceShapeClass::ConvexPositive: return "ConvexPositive";
        case FaceShapeClass::PseudoQuadNegative: return "PseudoQuadNegative";
        case FaceShapeClass::PseudoTriangleNegative4: return "PseudoTriangleNegative4";
        case FaceShapeClass::PseudoTriangleNegative2: return "PseudoTriangleNegative2";
        case FaceShapeClass::MixedBlockOK: return "MixedBlockOK";
        case FaceShapeClass::MonkeySaddle: return "MonkeySaddle";
        case FaceShapeClass::Violating: return "Violating";
    }
    return "?";
}

/// Per-vertex data of a face, in boundary-cycle order.
struct FaceVertexInfo {
    int vertex{-1};
    double curvature{0};
    double alpha{0};          // interior angle of the face at this vertex
    bool inflection{false};   // is this face an inflection face at the vertex?
    bool star_simple{false};
    int line_type{0};         // 1..4 per the negative-curvature angle list; 0 for K>0
    double oriented_angle{0}; // Gauss-image angle at the face normal, oriented
                              // positive for K<0 and negative for K>0
    double geometric_angle{0};// same, measured on the sphere
};

struct FaceSegment {
    Vec3 a, b;
    int to_vertex{-1};
    bool counts_twice{false};
    bool inside_face{true};
};

struct FaceReport {
    int face{-1};
    bool skipped{false};           // touches the boundary; not analyzed
    FaceShapeClass shape{FaceShapeClass::Violating};
    std::vector<std::string> violations;
    std::vector<FaceVertexInfo> ring;
    int sign_changes{0};
    int n_positive{0}, n_negative{0};
    int c1{0}, c2{0}, c3{0}, c4{0};
    double oriented_angle_sum{0};     // combinatorial, from the angle list
    double geometric_angle_sum{0};    // from measured spherical angles
    int branching_order{0};           // k when the uniform sum is 2*k*pi (monkey saddles)
    double positive_partial_sum{0};   // mixed faces
    double negative_partial_sum{0};
    std::optional<Vec3> point_of_contact;
    std::optional<std::pair<Vec3, Vec3>> parabolic_segment;
    bool parabolic_caveat{false};         // no interior segment found
    bool parabolic_definition_met{false}; // all conditions of the definition held
    std::vector<FaceSegment> asymptotic_segments;
    bool degenerate{false};
};

inline constexpr double kAngleSumTol = 1e-9;

namespace detail {

inline size_t ring_index_of_face(const VertexStar& star, int face) {
    for (size_t i = 0; i < star.valence(); ++i)
        if (star.ring[i].face == face) return i;
    throw TopologyError("face not in vertex star");
}

}  // namespace detail

/// Gather per-vertex context for a face: curvature, corner angle, inflection
/// status, and the Gauss-image angle at the face normal (combinatorial and
/// geometric). Throws BoundaryFaceError when a vertex is on the boundary.
inline std::vector<FaceVertexInfo> face_vertex_context(const Mesh& mesh, int f) {
    std::vector<FaceVertexInfo> out;
    for (int v : mesh.face(f)) {
        if (mesh.vertex_is_boundary(v))
            throw BoundaryFaceError("face " + std::to_string(f) + " touches the boundary");
        const VertexStar star = vertex_star(mesh, v);
        FaceVertexInfo info;
        info.vertex = v;
        info.curvature = gaussian_curvature(star);
        const size_t ri = detail::ring_index_of_face(star, f);
        info.alpha = star.ring[ri].alpha;
        info.inflection = is_inflection_face(star, ri);
        const GaussImage img = gauss_image(star);
        info.star_simple = is_simple(img.polygon).simple;
        const size_t n = star.valence();
        const double mu = left_side_angle(img.polygon[(ri + n - 1) % n], img.polygon[ri],
                                          img.polygon[ri + 1]);
        if (info.curvature > 0) {
            info.line_type = 0;
            info.oriented_angle = info.alpha - kPi;  // = -(pi - alpha)
            info.geometric_angle = -mu;
        } else {
            if (info.alpha < kPi) info.line_type = info.inflection ? 2 : 1;
            else info.line_type = info.inflection ? 4 : 3;
            switch (info.line_type) {
                case 1: info.oriented_angle = info.alpha + kPi; break;
                case 2: info.oriented_angle = info.alpha; break;
                case 3: info.oriented_angle = info.alpha - kPi; break;
                case 4: info.oriented_angle = info.alpha; break;
            }
            info.geometric_angle = kTwoPi - mu;
        }
        out.push_back(info);
    }
    return out;
}

/// Point of contact: any interior point for a convex positive face (the area
/// centroid), the kernel centroid for a star-shaped negative face, nothing
/// when the kernel is empty.
inline std::optional<Vec3> point_of_contact(const Mesh& mesh, int f, bool negative_sign) {
    auto [plane, poly] = mesh.face_polygon(f);
    const Vec3 e1 = any_orthogonal(plane.normal);
    const Vec3 e2 = cross(plane.normal, e1);
    auto lift = [&](const Vec2& q) { return plane.point + e1 * q.x + e2 * q.y; };
    if (!negative_sign) return lift(polygon_centroid(poly));
    const std::vector<Vec2> ker = polygon_kernel_2d(poly);
    if (ker.size() < 3 || std::abs(polygon_signed_area(ker)) < 1e-14) return std::nullopt;
    return lift(polygon_centroid(ker));
}

/// Segments from the point of contact to the vertices where the face is an
/// inflection face; for the two-inflection pseudo-triangle, the segment to
/// the remaining corner counts as two asymptotic directions.
inline std::vector<FaceSegment> face_asymptotic_directions(const Mesh& mesh, int f, const Vec3& A,
                                                           const std::vector<FaceVertexInfo>& ring) {
    for (const FaceVertexInfo& info : ring)
        if (info.curvature >= 0) throw WrongSignError("face asymptotic directions need negative curvature");
    auto [plane, poly] = mesh.face_polygon(f);
    const Vec3 e1 = any_orthogonal(plane.normal);
    const Vec3 e2 = cross(plane.normal, e1);
    auto flat = [&](const Vec3& p) {
        const Vec3 d = p - plane.point;
        return Vec2{dot(d, e1), dot(d, e2)};
    };
    std::vector<FaceSegment> segs;
    int c1_count = 0, c2_count = 0;
    for (const FaceVertexInfo& info : ring) {
        if (info.line_type == 1) ++c1_count;
        if (info.line_type == 2) ++c2_count;
    }
    const bool degenerate_case = (c1_count == 1 && c2_count == 2);
    for (const FaceVertexInfo& info : ring) {
        const bool double_dir = degenerate_case && info.line_type == 1;
        if (!info.inflection && !double_dir) continue;
        FaceSegment s;
        s.a = A;
        s.b = mesh.vertex(info.vertex);
        s.to_vertex = info.vertex;
        s.counts_twice = double_dir;
        s.inside_face = segment_in_polygon(poly, flat(A), flat(s.b));
        segs.push_back(s);
    }
    return segs;
}

/// Classify a face whose vertices all carry the same curvature sign.
inline void classify_face_uniform(const Mesh& mesh, FaceReport& rep) {
    const std::vector<FaceVertexInfo>& ring = rep.ring;
    const bool positive = ring.front().curvature > 0;
    const size_t n = ring.size();

    for (const FaceVertexInfo& info : ring)
        if (!info.star_simple) {
            rep.violations.push_back("SelfIntersectingStar");
            rep.shape = FaceShapeClass::Violating;
        }

    double comb = 0, geom = 0;
    for (const FaceVertexInfo& info : ring) {
        comb += positive ? -info.oriented_angle : info.oriented_angle;
        geom += positive ? -info.geometric_angle : info.geometric_angle;
        if (!positive) {
            if (info.line_type == 1) ++rep.c1;
            if (info.line_type == 2) ++rep.c2;
            if (info.line_type == 3) ++rep.c3;
            if (info.line_type == 4) ++rep.c4;
        }
    }
    rep.oriented_angle_sum = comb;
    rep.geometric_angle_sum = geom;
    if (!rep.violations.empty()) return;

    if (positive) {
        // convexity, no inflections, angle sum exactly 2 pi
        auto [plane, poly] = mesh.face_polygon(rep.face);
        (void)plane;
        bool convex = true;
        const size_t m = poly.size();
        const double orient = polygon_signed_area(poly) >= 0 ? 1.0 : -1.0;
        for (size_t i = 0; i < m; ++i) {
            const Vec2& a = poly[(i + m - 1) % m];
            const Vec2& b = poly[i];
            const Vec2& c = poly[(i + 1) % m];
            if (orient * cross2(b - a, c - b) < 0) convex = false;
        }
        if (!convex) rep.violations.push_back("NotConvex");
        for (const FaceVertexInfo& info : ring)
            if (info.inflection) rep.violations.push_back("InflectionAtPositiveVertex");
        if (std::abs(comb - kTwoPi) > kAngleSumTol || std::abs(geom - kTwoPi) > kAngleSumTol)
            rep.violations.push_back("AngleSumNot2Pi");
        rep.shape = rep.violations.empty() ? FaceShapeClass::ConvexPositive : FaceShapeClass::Violating;
        return;
    }

    // negative sign: combinatorial sum is an exact multiple of pi
    const double k = comb / kTwoPi;
    const long kr = std::lround(k);
    if (std::abs(geom - comb) > kAngleSumTol) rep.violations.push_back("GeometricAngleMismatch");
    if (kr >= 2 && std::abs(comb - double(kr) * kTwoPi) < kAngleSumTol) {
        rep.branching_order = int(kr);
        rep.shape = FaceShapeClass::MonkeySaddle;
        return;
    }
    if (kr != 1 || std::abs(comb - kTwoPi) > kAngleSumTol) {
        rep.violations.push_back("AngleSumNot2Pi");
        rep.shape = FaceShapeClass::Violating;
        return;
    }
    // integer identities: c1 - c3 = 4 - n and 2c1 + c2 + c4 = 4
    if (rep.c1 - rep.c3 != 4 - int(n) || 2 * rep.c1 + rep.c2 + rep.c4 != 4) {
        rep.violations.push_back("CountingIdentityViolated");
        rep.shape = FaceShapeClass::Violating;
        return;
    }
    if (rep.c1 == 0 && rep.c2 == 4 && rep.c4 == 0) rep.shape = FaceShapeClass::PseudoQuadNegative;
    else if (rep.c1 == 0 && rep.c2 == 3 && rep.c4 == 1) rep.shape = FaceShapeClass::PseudoTriangleNegative4;
    else if (rep.c1 == 1 && rep.c2 == 2 && rep.c4 == 0) rep.shape = FaceShapeClass::PseudoTriangleNegative2;
    else {
        rep.violations.push_back("UnexpectedCountingPattern");
        rep.shape = FaceShapeClass::Violating;
    }
}

/// Classify a face with both curvature signs among its vertices.
inline void classify_face_mixed(const Mesh& mesh, FaceReport& rep) {
    const std::vector<FaceVertexInfo>& ring = rep.ring;
    const size_t n = ring.size();

    for (const FaceVertexInfo& info : ring)
        if (!info.star_simple) rep.violations.push_back("SelfIntersectingStar");

    for (size_t i = 0; i < n; ++i) {
        const bool a = ring[i].curvature > 0;
        const bool b = ring[(i + 1) % n].curvature > 0;
        if (a != b) ++rep.sign_changes;
    }
    if (rep.sign_changes != 2) rep.violations.push_back("TooManySignChanges");

    double comb = 0, geom = 0, pos_sum = 0, neg_sum = 0;
    for (const FaceVertexInfo& info : ring) {
        comb += info.oriented_angle;
        geom += info.geometric_angle;
        if (info.curvature > 0) pos_sum += kPi - info.alpha;
        else {
            neg_sum += info.oriented_angle;
            if (info.line_type == 1) ++rep.c1;
            if (info.line_type == 2) ++rep.c2;
            if (info.line_type == 3) ++rep.c3;
            if (info.line_type == 4) ++rep.c4;
        }
    }
    rep.oriented_angle_sum = comb;
    rep.geometric_angle_sum = geom;
    rep.positive_partial_sum = pos_sum;
    rep.negative_partial_sum = neg_sum;
    if (std::abs(comb) > kAngleSumTol || std::abs(geom) > kAngleSumTol)
        rep.violations.push_back("UnbalancedAngleSum");
    if (pos_sum >= kTwoPi - kAngleSumTol || neg_sum >= kTwoPi - kAngleSumTol)
        rep.violations.push_back("PartialSumTooLarge");
    if (rep.n_negative - 2 != rep.c3 - rep.c1 || rep.c1 > 1)
        rep.violations.push_back("CountingIdentityViolated");

    // convex hull of positive vertices must not contain a negative vertex
    auto [plane, poly] = mesh.face_polygon(rep.face);
    (void)plane;
    std::vector<Vec2> pos;
    for (size_t i = 0; i < n; ++i)
        if (ring[i].curvature > 0) pos.push_back(poly[i]);
    const std::vector<Vec2> hull = convex_hull(pos);
    if (hull.size() >= 3) {
        double scale = 1e-12;
        for (const Vec2& p : poly) scale = std::max(scale, norm(p));
        for (size_t i = 0; i < n; ++i) {
            if (ring[i].curvature > 0) continue;
            bool inside = true, near = false;
            const size_t hn = hull.size();
            for (size_t j = 0; j < hn; ++j) {
                const double s = cross2(hull[(j + 1) % hn] - hull[j], poly[i] - hull[j]);
                if (s <= -1e-12 * scale) inside = false;
                else if (s < 1e-12 * scale) near = true;
            }
            if (inside) {
                rep.violations.push_back("HullViolation");
                rep.degenerate = rep.degenerate || near;
                break;
            }
        }
    }
    rep.shape = rep.violations.empty() ? FaceShapeClass::MixedBlockOK : FaceShapeClass::Violating;
}

/// Discrete parabolic segment: joins interior points of the two sign-change
/// edges (midpoints first, then quarter points), kept only if inside the face.
inline void compute_parabolic_segment(const Mesh& mesh, FaceReport& rep) {
    const std::vector<FaceVertexInfo>& ring = rep.ring;
    const size_t n = ring.size();
    std::vector<size_t> change_edges;
    for (size_t i = 0; i < n; ++i) {
        const bool a = ring[i].curvature > 0;
        const bool b = ring[(i + 1) % n].curvature > 0;
        if (a != b) change_edges.push_back(i);
    }
    if (change_edges.size() != 2) return;
    auto [plane, poly] = mesh.face_polygon(rep.face);
    const Vec3 e1 = any_orthogonal(plane.normal);
    const Vec3 e2 = cross(plane.normal, e1);
    auto lift = [&](const Vec2& q) { return plane.point + e1 * q.x + e2 * q.y; };
    auto edge_point = [&](size_t e, double t) {
        const Vec2& a = poly[e];
        const Vec2& b = poly[(e + 1) % n];
        return a + (b - a) * t;
    };
    const double params[5][2] = {{0.5, 0.5}, {0.25, 0.25}, {0.75, 0.75}, {0.25, 0.75}, {0.75, 0.25}};
    for (const double* t : params) {
        const Vec2 p = edge_point(change_edges[0], t[0]);
        const Vec2 q = edge_point(change_edges[1], t[1]);
        if (segment_in_polygon(poly, p, q)) {
            rep.parabolic_segment = {lift(p), lift(q)};
            return;
        }
    }
    rep.parabolic_caveat = true;
}

/// Full per-face analysis. Faces touching the boundary are reported skipped.
inline FaceReport classify_face(const Mesh& mesh, int f) {
    FaceReport rep;
    rep.face = f;
    if (mesh.face_touches_boundary(f)) {
        rep.skipped = true;
        return rep;
    }
    try {
        rep.ring = face_vertex_context(mesh, f);
    } catch (const ZeroCurvatureError&) {
        rep.violations.push_back("ZeroCurvatureVertex");
        rep.shape = FaceShapeClass::Violating;
        return rep;
    } catch (const GeometryError& e) {
        rep.violations.push_back(std::string("GeometryError: ") + e.what());
        rep.shape = FaceShapeClass::Violating;
        return rep;
    }
    for (const FaceVertexInfo& info : rep.ring) {
        if (std::abs(info.curvature) < kZeroCurvatureTol) {
            rep.violations.push_back("ZeroCurvatureVertex");
            rep.shape = FaceShapeClass::Violating;
            return rep;
        }
        if (info.curvature > 0) ++rep.n_positive;
        else ++rep.n_negative;
    }
    if (rep.n_positive > 0 && rep.n_negative > 0) {
        classify_face_mixed(mesh, rep);
        // the segment is defined by the two sign-change edges; it is computed
        // whenever those exist and the hull condition holds, and the report
        // records separately whether the star-simplicity part of the
        // definition held as well
        const bool hull_ok = std::find(rep.violations.begin(), rep.violations.end(),
                                       "HullViolation") == rep.violations.end();
        if (rep.sign_changes == 2 && hull_ok) compute_parabolic_segment(mesh, rep);
        rep.parabolic_definition_met = rep.shape == FaceShapeClass::MixedBlockOK;
    } else {
        classify_face_uniform(mesh, rep);
        const bool negative = rep.n_negative > 0;
        if (rep.shape != FaceShapeClass::Violating && rep.shape != FaceShapeClass::MonkeySaddle) {
            rep.point_of_contact = point_of_contact(mesh, f, negative);
            if (negative && !rep.point_of_contact)
                rep.violations.push_back("FaceNotStarShaped");
            if (negative && rep.point_of_contact)
                rep.asymptotic_segments =
                    face_asymptotic_directions(mesh, f, *rep.point_of_contact, rep.ring);
        }
    }
    return rep;
}

// -- mixed-face decomposition -------------------------------------------------

struct MixedBlock {
    std::vector<Vec3> points;
    std::vector<double> curvature;   // 0 for synthetic split vertices
    std::vector<bool> inflection;
    std::vector<bool> synthetic;
};

namespace detail {

struct BlockCheck {
    bool ok{true};
    std::string reason;
};

inline BlockCheck check_block(const MixedBlock& blk, const Vec3& normal) {
    BlockCheck out;
    const size_t n = blk.points.size();
    if (n < 3) return {false, "degenerate block"};
    std::vector<bool> reflex(n, false);
    for (size_t i = 0; i < n; ++i) {
        const Vec3 d1 = blk.points[i] - blk.points[(i + n - 1) % n];
        const Vec3 d2 = blk.points[(i + 1) % n] - blk.points[i];
        const double turn = std::atan2(dot(cross(d1, d2), normal), dot(d1, d2));
        reflex[i] = turn < 0;
    }
    // at most one maximal reflex chain (the non-trivial pseudo-edge)
    int chains = 0;
    size_t chain_start = n, chain_end = n;
    for (size_t i = 0; i < n; ++i) {
        if (reflex[i] && !reflex[(i + n - 1) % n]) {
            ++chains;
            chain_start = i;
        }
        if (reflex[i] && !reflex[(i + 1) % n]) chain_end = i;
    }
    if (chains > 1) return {false, "more than one pseudo-edge"};
    for (size_t i = 0; i < n; ++i)
        if (reflex[i] && blk.curvature[i] > 0) return {false, "positive vertex with reflex angle"};
    // inflections: none, or exactly at the two corners bounding the pseudo-edge
    std::vector<size_t> infl;
    for (size_t i = 0; i < n; ++i)
        if (blk.inflection[i]) infl.push_back(i);
    if (!infl.empty()) {
        if (infl.size() != 2) return {false, "inflection count not 0 or 2"};
        for (size_t i : infl)
            if (reflex[i]) return {false, "inflection on a reflex vertex"};
        if (chains == 1) {
            const size_t a = (chain_start + n - 1) % n;
            const size_t b = (chain_end + 1) % n;
            const bool match = (infl[0] == a && infl[1] == b) || (infl[0] == b && infl[1] == a) ||
                               (infl[1] == a && infl[0] == b);
            if (!(infl[0] == std::min(a, b) && infl[1] == std::max(a, b)) && !match)
                return {false, "inflections not at the pseudo-edge corners"};
        } else {
            // trivial pseudo-edge: the two inflection corners are adjacent
            const bool adjacent = (infl[1] - infl[0] == 1) || (infl[0] == 0 && infl[1] == n - 1);
            if (!adjacent) return {false, "inflection corners not adjacent"};
        }
    }
    return out;
}

}  // namespace detail

namespace detail {

inline bool decompose_rec(const MixedBlock& blk, const Vec3& normal, double scale, int depth,
                          std::vector<MixedBlock>& out, std::string& why);

inline bool split_and_recurse(const MixedBlock& blk, const Vec3& normal, double scale, int depth,
                              size_t cut, bool inherit_to_earlier, std::vector<MixedBlock>& out,
                              std::string& why) {
    const size_t n = blk.points.size();
    const Vec3 from = blk.points[cut];
    // 2D chart of the block plane for visibility tests
    const Vec3 e1 = any_orthogonal(normal);
    const Vec3 e2 = cross(normal, e1);
    auto flat = [&](const Vec3& p) { return Vec2{dot(p, e1), dot(p, e2)}; };
    std::vector<Vec2> poly2;
    poly2.reserve(n);
    for (const Vec3& p : blk.points) poly2.push_back(flat(p));
    // cut toward a visible point of the positive chain: first edge (in cycle
    // order after the cut) whose endpoints are both non-negative and whose
    // midpoint the cut vertex sees inside the block
    Vec3 target{0, 0, 0};
    bool have_target = false;
    for (size_t step = 1; step < n && !have_target; ++step) {
        const size_t e = (cut + step) % n;
        if (e == cut || (e + 1) % n == cut) continue;
        if (blk.curvature[e] < 0 || blk.curvature[(e + 1) % n] < 0) continue;
        const Vec3 mid = (blk.points[e] + blk.points[(e + 1) % n]) * 0.5;
        if (segment_in_polygon(poly2, flat(from), flat(mid))) {
            target = mid;
            have_target = true;
        }
    }
    if (!have_target) {
        int pos_count = 0;
        for (size_t i = 0; i < n; ++i)
            if (blk.curvature[i] > 0) { target += blk.points[i]; ++pos_count; }
        if (pos_count == 0) { why = "no positive vertices to cut toward"; return false; }
        target = target / double(pos_count);
    }
    const Vec3 dir = target - from;

    // first crossing of the ray with a non-incident boundary edge
    size_t hit_edge = n;
    double hit_t = 1e300;
    Vec3 hit_point;
    for (size_t e = 0; e < n; ++e) {
        if (e == cut || (e + 1) % n == cut) continue;
        const Vec3& a = blk.points[e];
        const Vec3& b = blk.points[(e + 1) % n];
        const Vec3 eb = b - a;
        const Vec3 w0 = a - from;
        const double denom = dot(cross(dir, eb), normal);
        if (std::abs(denom) < 1e-15) continue;
        const double s = dot(cross(w0, eb), normal) / denom;
        const double t = dot(cross(w0, dir), normal) / denom;
        if (s <= 1e-9 || t < -1e-9 || t > 1 + 1e-9) continue;
        if (s < hit_t) {
            hit_t = s;
            hit_edge = e;
            hit_point = from + dir * s;
        }
    }
    if (hit_edge == n) { why = "cut ray does not reach the boundary"; return false; }

    auto near_point = [&](const Vec3& p, size_t i) { return norm(p - blk.points[i]) < 1e-9 * scale; };
    int hit_vertex = -1;
    if (near_point(hit_point, hit_edge)) hit_vertex = int(hit_edge);
    else if (near_point(hit_point, (hit_edge + 1) % n)) hit_vertex = int((hit_edge + 1) % n);

    auto slice = [&](size_t from_idx, size_t to_idx, bool keep_inflection_at_cut) {
        MixedBlock part;
        size_t i = from_idx;
        while (true) {
            part.points.push_back(blk.points[i]);
            part.curvature.push_back(blk.curvature[i]);
            part.inflection.push_back(blk.inflection[i] && (i != cut || keep_inflection_at_cut));
            part.synthetic.push_back(blk.synthetic[i]);
            if (i == to_idx) break;
            i = (i + 1) % n;
        }
        return part;
    };
    // part2 runs ..., cut-1, cut and thus contains the face's earlier
    // boundary position relative to the cut vertex
    MixedBlock part1, part2;
    if (hit_vertex >= 0) {
        part1 = slice(cut, size_t(hit_vertex), !inherit_to_earlier);
        part2 = slice(size_t(hit_vertex), cut, inherit_to_earlier);
    } else {
        part1 = slice(cut, hit_edge, !inherit_to_earlier);
        part1.points.push_back(hit_point);
        part1.curvature.push_back(0);
        part1.inflection.push_back(false);
        part1.synthetic.push_back(true);
        part2 = slice((hit_edge + 1) % n, cut, inherit_to_earlier);
        part2.points.insert(part2.points.begin(), hit_point);
        part2.curvature.insert(part2.curvature.begin(), 0);
        part2.inflection.insert(part2.inflection.begin(), false);
        part2.synthetic.insert(part2.synthetic.begin(), true);
    }
    std::vector<MixedBlock> acc2, acc1;
    if (!decompose_rec(part2, normal, scale, depth + 1, acc2, why)) return false;
    if (!decompose_rec(part1, normal, scale, depth + 1, acc1, why)) return false;
    out.insert(out.end(), acc2.begin(), acc2.end());
    out.insert(out.end(), acc1.begin(), acc1.end());
    return true;
}

inline bool decompose_rec(const MixedBlock& blk, const Vec3& normal, double scale, int depth,
                          std::vector<MixedBlock>& out, std::string& why) {
    if (depth > 8) { why = "decomposition did not terminate"; return false; }
    const size_t n = blk.points.size();
    auto is_reflex = [&](size_t i) {
        const Vec3 d1 = blk.points[i] - blk.points[(i + n - 1) % n];
        const Vec3 d2 = blk.points[(i + 1) % n] - blk.points[i];
        return std::atan2(dot(cross(d1, d2), normal), dot(d1, d2)) < 0;
    };
    // designated cut vertices: negative corners both of whose neighbors are
    // still negative (synthetic zero-curvature vertices resolve adjacency),
    // and reflex inflection vertices (always)
    size_t cut = n;
    for (size_t i = 0; i < n; ++i) {
        if (blk.curvature[i] >= 0) continue;
        const bool reflex = is_reflex(i);
        if (reflex && blk.inflection[i]) { cut = i; break; }
        if (!reflex) {
            const bool both_neg =
                blk.curvature[(i + n - 1) % n] < 0 && blk.curvature[(i + 1) % n] < 0;
            if (both_neg) { cut = i; break; }
        }
    }
    if (cut == n) {
        const BlockCheck chk = check_block(blk, normal);
        if (!chk.ok) { why = "invalid building block: " + chk.reason; return false; }
        out.push_back(blk);
        return true;
    }
    // the inflection property at the cut vertex prefers the part containing
    // the earlier boundary position; the opposite assignment is the fallback
    // when parity forces it
    {
        std::vector<MixedBlock> acc;
        if (split_and_recurse(blk, normal, scale, depth, cut, true, acc, why)) {
            out.insert(out.end(), acc.begin(), acc.end());
            return true;
        }
    }
    std::vector<MixedBlock> acc;
    if (!split_and_recurse(blk, normal, scale, depth, cut, false, acc, why)) return false;
    out.insert(out.end(), acc.begin(), acc.end());
    return true;
}

}  // namespace detail

/// Split a mixed face along its designated negative corners (and reflex
/// inflection vertices) into building blocks, inserting synthetic
/// zero-curvature vertices on edges where a cut lands.
inline std::vector<MixedBlock> decompose_mixed_face(const Mesh& mesh, int f) {
    const std::vector<FaceVertexInfo> ring = face_vertex_context(mesh, f);
    const Vec3 normal = mesh.face_normal(f);
    MixedBlock whole;
    for (const FaceVertexInfo& info : ring) {
        whole.points.push_back(mesh.vertex(info.vertex));
        whole.curvature.push_back(info.curvature);
        whole.inflection.push_back(info.inflection);
        whole.synthetic.push_back(false);
    }
    std::vector<MixedBlock> blocks;
    std::string why;
    if (!detail::decompose_rec(whole, normal, std::max(mesh.bbox_diagonal(), 1.0), 0, blocks, why))
        throw NotDecomposableError(why);
    return blocks;
}

/// Decomposition entry point on raw block data (plane normal given); used
/// directly for hand-specified shapes.
inline std::vector<MixedBlock> decompose_block_data(const MixedBlock& whole, const Vec3& normal) {
    double scale = 1.0;
    for (const Vec3& p : whole.points) scale = std::max(scale, norm(p));
    std::vector<MixedBlock> blocks;
    std::string why;
    if (!detail::decompose_rec(whole, normal, scale, 0, blocks, why)) throw NotDecomposableError(why);
    return blocks;
}

}  // namespace polysmooth
