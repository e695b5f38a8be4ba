#pragma once

// Per-vertex theory: discrete Gaussian curvature, inflection faces, Gauss
// images, angle comparison between a vertex star and its Gauss image,
// Banchoff indices, shape classification, and discrete normals / tangent
// planes.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polysmooth/errors.hpp"
#include "polysmooth/mesh.hpp"
#include "polysmooth/sphere.hpp"

namespace polysmooth {

inline constexpr double kZeroCurvatureTol = 1e-10;
inline constexpr double kStraightAngleTol = 1e-9;

/// Angle defect 2pi - sum of corner angles.
inline double gaussian_curvature(const VertexStar& star) {
    double s = 0;
    for (const StarFace& f : star.ring) s += f.alpha;
    return kTwoPi - s;
}

/// A ring face is an inflection face when its two ring neighbors leave its
/// plane to opposite sides. The side of a neighbor is read off along the
/// shared open edge: the neighbor's interior there lies on the side of its
/// inward edge normal, sign(<n_f, n_g x d_e>), with d_e the shared edge as
/// directed in the neighbor's cycle. This is well defined for any simple
/// planar neighbor (a non-convex one may cross the extended plane away from
/// the edge) and reduces to the opposite-vertex sign on triangles.
inline bool is_inflection_face(const VertexStar& star, size_t ring_index) {
    const Mesh& mesh = *star.mesh;
    const size_t n = star.valence();
    const StarFace& sf = star.ring[ring_index % n];
    const Vec3 nf = mesh.face_normal(sf.face);

    auto side_of = [&](const StarFace& nb, int shared_ring_vertex) {
        const std::vector<int>& cyc = mesh.face(nb.face);
        const size_t m = cyc.size();
        Vec3 d_e{0, 0, 0};
        for (size_t i = 0; i < m; ++i) {
            const int a = cyc[i];
            const int b = cyc[(i + 1) % m];
            if ((a == star.center && b == shared_ring_vertex) ||
                (a == shared_ring_vertex && b == star.center)) {
                d_e = mesh.vertex(b) - mesh.vertex(a);
                break;
            }
        }
        if (norm(d_e) == 0.0)
            throw TopologyError("shared edge not found in neighbor face " + std::to_string(nb.face));
        const Vec3 inward = cross(mesh.face_normal(nb.face), d_e);
        const double off = dot(inward, nf);
        if (std::abs(off) <= 1e-12 * norm(d_e))
            throw GeometryError("neighbor face " + std::to_string(nb.face) +
                                " is tangent to the plane of face " + std::to_string(sf.face));
        return off > 0 ? 1 : -1;
    };

    const StarFace& prev = star.ring[(ring_index + n - 1) % n];
    const StarFace& next = star.ring[(ring_index + 1) % n];
    const int s_prev = side_of(prev, sf.vertex_start);
    const int s_next = side_of(next, sf.vertex_end);
    return s_prev != s_next;
}

/// Predicted spherical angle of the Gauss image at the face normal, from the
/// face's corner angle and inflection status. Measured as the angle on the
/// left of the image traversal; the geometric interior angle is this for
/// positive curvature and 2pi minus it for negative curvature.
inline double lemma_angle(double alpha, bool inflection) {
    if (std::abs(alpha - kPi) < kStraightAngleTol)
        throw StraightAngleError("corner angle equals pi");
    if (alpha < kPi) return inflection ? kTwoPi - alpha : kPi - alpha;
    return inflection ? kTwoPi - alpha : 3.0 * kPi - alpha;
}

struct GaussImage {
    SphericalPolygon polygon;       // i-th vertex is the normal of ring face i
    std::vector<int> face_ids;      // back-reference to mesh faces

    size_t size() const { return polygon.size(); }
};

inline GaussImage gauss_image(const VertexStar& star) {
    GaussImage img;
    const Mesh& mesh = *star.mesh;
    for (const StarFace& sf : star.ring) {
        img.polygon.vertices.push_back(mesh.face_normal(sf.face));
        img.face_ids.push_back(sf.face);
    }
    const size_t n = img.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec3& a = img.polygon[i];
        const Vec3& b = img.polygon[i + 1];
        if (norm(a + b) < 1e-12)
            throw AntipodalNormalsError("consecutive face normals are antipodal (ring faces " +
                                        std::to_string(i) + ", " + std::to_string((i + 1) % n) + ")");
    }
    return img;
}

/// Banchoff index i(v, xi) = 1 - (number of incident triangles where v is
/// middle for xi) / 2. Faces are fan-triangulated from their lowest vertex id.
inline int banchoff_index(const VertexStar& star, const Vec3& xi) {
    const Mesh& mesh = *star.mesh;
    const double hv = dot(star.center_pos, xi);
    const double tol = 1e-12 * std::max(mesh.bbox_diagonal(), 1e-300);

    std::set<int> others;
    for (const StarFace& sf : star.ring)
        for (int w : mesh.face(sf.face))
            if (w != star.center) others.insert(w);
    for (int w : others)
        if (std::abs(dot(mesh.vertex(w), xi) - hv) <= tol)
            throw NonGenericDirectionError("direction not generic at vertex " + std::to_string(w));

    int middle = 0;
    for (const StarFace& sf : star.ring) {
        const std::vector<int>& cyc = mesh.face(sf.face);
        const size_t m = cyc.size();
        size_t anchor = 0;
        for (size_t i = 1; i < m; ++i)
            if (cyc[i] < cyc[anchor]) anchor = i;
        for (size_t t = 1; t + 1 < m; ++t) {
            const int a = cyc[anchor];
            const int b = cyc[(anchor + t) % m];
            const int c = cyc[(anchor + t + 1) % m];
            int w1, w2;
            if (a == star.center) { w1 = b; w2 = c; }
            else if (b == star.center) { w1 = a; w2 = c; }
            else if (c == star.center) { w1 = a; w2 = b; }
            else continue;
            const double h1 = dot(mesh.vertex(w1), xi) - hv;
            const double h2 = dot(mesh.vertex(w2), xi) - hv;
            if ((h1 > 0 && h2 < 0) || (h1 < 0 && h2 > 0)) ++middle;
        }
    }
    if (middle % 2 != 0)
        throw NonGenericDirectionError("odd middle count; direction effectively non-generic");
    return 1 - middle / 2;
}

enum class VertexShapeClass {
    ConvexCorner,
    PseudoQuadrilateral,
    PseudoTriangleA,  // reflex face inflects; three corner inflections
    PseudoTriangleB,  // reflex face does not inflect; two inflections
    PseudoDigon,
    SelfIntersecting,
};

inline const char* to_string(VertexShapeClass c) {
    switch (c) {
        case VertexShapeClass::ConvexCorner: return "ConvexCorner";
        case VertexShapeClass::PseudoQuadrilateral: return "PseudoQuadrilateral";
        case VertexShapeClass::PseudoTriangleA: return "PseudoTriangle_A";
        case VertexShapeClass::PseudoTriangleB: return "PseudoTriangle_B";
        case VertexShapeClass::PseudoDigon: return "PseudoDigon";
        case VertexShapeClass::SelfIntersecting: return "SelfIntersecting";
    }
    return "?";
}

struct VertexClassification {
    VertexShapeClass shape{VertexShapeClass::SelfIntersecting};
    double curvature{0};
    GaussImage image;
    SimplicityResult simplicity;
    std::vector<int> inflection_ring;   // ring indices of inflection faces
    std::vector<int> reflex_ring;       // ring indices with alpha > pi
    std::vector<int> corner_ring;       // ring indices whose image angle is a corner
    bool degenerate{false};

    std::vector<int> ring_to_faces(const std::vector<int>& ring_idx) const {
        std::vector<int> out;
        for (int i : ring_idx) out.push_back(image.face_ids[size_t(i)]);
        return out;
    }
};

/// Interior angle of the Gauss image at ring vertex i, oriented by the sign
/// of the discrete Gaussian curvature (the image is traversed clockwise when
/// K < 0).
inline double gauss_image_interior_angle(const GaussImage& img, size_t i, double curvature) {
    const size_t n = img.size();
    const double mu = left_side_angle(img.polygon[(i + n - 1) % n], img.polygon[i], img.polygon[i + 1]);
    return curvature > 0 ? mu : kTwoPi - mu;
}

inline VertexClassification classify_vertex(const VertexStar& star) {
    VertexClassification out;
    out.curvature = gaussian_curvature(star);
    if (std::abs(out.curvature) < kZeroCurvatureTol)
        throw ZeroCurvatureError("vertex " + std::to_string(star.center) + " has zero angle defect");
    out.image = gauss_image(star);
    out.simplicity = is_simple(out.image.polygon);
    out.degenerate = out.simplicity.degenerate;

    const size_t n = star.valence();
    for (size_t i = 0; i < n; ++i) {
        if (star.ring[i].alpha > kPi) out.reflex_ring.push_back(int(i));
        if (is_inflection_face(star, i)) out.inflection_ring.push_back(int(i));
    }
    if (!out.simplicity.simple) {
        out.shape = VertexShapeClass::SelfIntersecting;
        return out;
    }

    for (size_t i = 0; i < n; ++i) {
        const double interior = gauss_image_interior_angle(out.image, i, out.curvature);
        if (interior < kPi) out.corner_ring.push_back(int(i));
    }

    const auto& infl = out.inflection_ring;
    const auto& reflex = out.reflex_ring;
    std::vector<int> predicted_corners;
    if (out.curvature > 0) {
        if (!infl.empty() || !reflex.empty())
            throw ClassificationMismatchError("positive vertex with inflection or reflex faces");
        out.shape = VertexShapeClass::ConvexCorner;
        for (size_t i = 0; i < n; ++i) predicted_corners.push_back(int(i));
    } else if (reflex.empty()) {
        out.shape = VertexShapeClass::PseudoQuadrilateral;
        if (infl.size() != 4)
            throw ClassificationMismatchError("negative convex-angle vertex with " +
                                              std::to_string(infl.size()) + " inflection faces");
        predicted_corners = infl;
    } else if (reflex.size() == 1) {
        const int r = reflex[0];
        const bool r_inflects = std::find(infl.begin(), infl.end(), r) != infl.end();
        if (r_inflects) {
            out.shape = VertexShapeClass::PseudoTriangleA;
            if (infl.size() != 4)
                throw ClassificationMismatchError("pseudo-triangle (reflex inflection) needs 4 inflection faces");
            for (int i : infl)
                if (i != r) predicted_corners.push_back(i);
        } else {
            out.shape = VertexShapeClass::PseudoTriangleB;
            if (infl.size() != 2)
                throw ClassificationMismatchError("pseudo-triangle (reflex non-inflection) needs 2 inflection faces");
            predicted_corners = infl;
            predicted_corners.push_back(r);
            std::sort(predicted_corners.begin(), predicted_corners.end());
        }
    } else {
        out.shape = VertexShapeClass::PseudoDigon;
        if (reflex.size() != 2)
            throw ClassificationMismatchError("more than two reflex faces in a simple Gauss image");
        for (int r : reflex)
            if (std::find(infl.begin(), infl.end(), r) == infl.end())
                throw ClassificationMismatchError("reflex face of a pseudo-digon must inflect");
        if (infl.size() != 4)
            throw ClassificationMismatchError("pseudo-digon needs 4 inflection faces");
        for (int i : infl)
            if (std::find(reflex.begin(), reflex.end(), i) == reflex.end()) predicted_corners.push_back(i);
    }
    if (predicted_corners != out.corner_ring)
        throw ClassificationMismatchError("geometric corners of the Gauss image disagree with the "
                                          "predicted corner set at vertex " + std::to_string(star.center));
    return out;
}

struct TangentFrame {
    Vec3 tangent_normal;   // kernel point n; tangent plane through v orthogonal to it
    Vec3 discrete_normal;  // hemisphere pole n' inside the Gauss image
};

struct VertexSmoothness {
    double curvature{0};
    bool zero_curvature{false};
    bool simple{false};
    bool hemispherical{false};
    bool kernel_nonempty{false};
    bool normal_inside_image{false};
    bool degenerate{false};
    bool smooth{false};
    std::optional<TangentFrame> frame;
    SphericalRegionKernel kernel;
};

/// Definition-level smoothness of a vertex star: simple Gauss image contained
/// in an open hemisphere and star-shaped with respect to an interior point.
/// Returns a canonical tangent normal (kernel representative) and discrete
/// normal (hemisphere pole, preferring one inside the image).
inline VertexSmoothness vertex_smoothness(const VertexStar& star) {
    VertexSmoothness out;
    out.curvature = gaussian_curvature(star);
    out.zero_curvature = std::abs(out.curvature) < kZeroCurvatureTol;

    const GaussImage img = gauss_image(star);
    const SimplicityResult simp = is_simple(img.polygon);
    out.simple = simp.simple;
    out.degenerate = simp.degenerate;
    if (!out.simple) return out;

    const std::optional<Vec3> pole = hemisphere_pole(img.polygon.vertices);
    out.hemispherical = pole.has_value();
    if (!out.hemispherical) return out;

    out.kernel = star_shape_kernel(img.polygon);
    out.kernel_nonempty = out.kernel.has_interior();
    out.smooth = !out.zero_curvature && out.kernel_nonempty;
    if (!out.kernel_nonempty) return out;

    const std::optional<Vec3> n = kernel_representative(out.kernel);
    if (!n) { out.kernel_nonempty = out.smooth = false; return out; }

    auto inside_image = [&](const Vec3& c) {
        try {
            return winding_number(img.polygon, c) != 0;
        } catch (const PointOnBoundaryError&) {
            return false;
        }
    };
    auto valid_pole = [&](const Vec3& c) {
        for (const Vec3& p : img.polygon.vertices)
            if (dot(c, p) <= 1e-10) return false;
        return true;
    };
    Vec3 n_prime = *pole;
    out.normal_inside_image = inside_image(n_prime);
    if (!out.normal_inside_image) {
        for (const Vec3& cand : {*n, normalized(*n + *pole)}) {
            if (valid_pole(cand) && inside_image(cand)) {
                n_prime = cand;
                out.normal_inside_image = true;
                break;
            }
        }
    }
    out.frame = TangentFrame{*n, n_prime};
    return out;
}

}  // namespace polysmooth
