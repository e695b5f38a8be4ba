#pragma once

// Projective transformations of meshes, polarity duals, and the verification
// harness for the duality statements.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polysmooth/curvature.hpp"
#include "polysmooth/errors.hpp"
#include "polysmooth/mesh.hpp"

namespace polysmooth {

/// Nondegenerate 4x4 homogeneous transform acting on points.
struct ProjectiveMap {
    Mat4 matrix;

    static ProjectiveMap identity() { return {Mat4::identity()}; }

    static ProjectiveMap from_rows(const std::array<double, 16>& rows) {
        ProjectiveMap m;
        m.matrix.m = rows;
        if (std::abs(m.matrix.det()) <= 1e-12) throw GeometryError("degenerate projective map");
        return m;
    }

    double det() const { return matrix.det(); }
    ProjectiveMap inverse() const { return {matrix.inverse()}; }
    ProjectiveMap operator*(const ProjectiveMap& b) const { return {matrix * b.matrix}; }

    /// Homogeneous weight of a point (the denominator after mapping).
    double weight(const Vec3& p) const {
        return matrix.at(3, 0) * p.x + matrix.at(3, 1) * p.y + matrix.at(3, 2) * p.z + matrix.at(3, 3);
    }

    Vec3 apply(const Vec3& p) const {
        const double w = weight(p);
        if (std::abs(w) < 1e-14) throw PointAtInfinityError("point maps to the plane at infinity");
        const double x = matrix.at(0, 0) * p.x + matrix.at(0, 1) * p.y + matrix.at(0, 2) * p.z + matrix.at(0, 3);
        const double y = matrix.at(1, 0) * p.x + matrix.at(1, 1) * p.y + matrix.at(1, 2) * p.z + matrix.at(1, 3);
        const double z = matrix.at(2, 0) * p.x + matrix.at(2, 1) * p.y + matrix.at(2, 2) * p.z + matrix.at(2, 3);
        return {x / w, y / w, z / w};
    }

    /// Image of the plane {x : <n,x> = <n,q>} through q with normal n, as a
    /// (normal, point-on-plane) pair. Planes transform by the inverse
    /// transpose in homogeneous coordinates.
    std::pair<Vec3, Vec3> apply_to_plane(const Vec3& n, const Vec3& q) const {
        const Mat4 it = matrix.inverse().transposed();
        const double h[4] = {n.x, n.y, n.z, -dot(n, q)};
        double img[4];
        for (int r = 0; r < 4; ++r) {
            img[r] = 0;
            for (int c = 0; c < 4; ++c) img[r] += it.at(r, c) * h[c];
        }
        const Vec3 nn{img[0], img[1], img[2]};
        if (norm(nn) < 1e-14) throw GeometryError("plane maps to the plane at infinity");
        return {normalized(nn), apply(q)};
    }
};

/// Transform a mesh by a collineation. All vertices must stay strictly on one
/// side of the plane mapped to infinity; the orientation is flipped when the
/// map reverses it (the sign of the local differential's determinant is the
/// sign of det M everywhere on that side).
inline Mesh apply_projective(const Mesh& mesh, const ProjectiveMap& M, MeshOptions opts = {}) {
    const double scale = std::max(mesh.bbox_diagonal(), 1.0);
    int sign = 0;
    for (const Vec3& p : mesh.vertices()) {
        const double w = M.weight(p);
        if (std::abs(w) <= 1e-10 * scale)
            throw PointAtInfinityError("vertex maps to the plane at infinity");
        const int s = w > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign)
            throw PointAtInfinityError("mesh straddles the plane mapped to infinity");
    }
    std::vector<Vec3> verts;
    verts.reserve(mesh.vertices().size());
    for (const Vec3& p : mesh.vertices()) verts.push_back(M.apply(p));
    std::vector<std::vector<int>> faces = mesh.faces();
    if (M.det() < 0)
        for (std::vector<int>& f : faces) std::reverse(f.begin(), f.end());
    try {
        return Mesh(std::move(verts), std::move(faces), opts);
    } catch (const GeometryError& e) {
        throw DegenerateImageError(std::string("projective image degenerate: ") + e.what());
    }
}

/// A center for the polarity: a point off every plane that is orthogonal to a
/// point of some vertex Gauss image and passes through that vertex. Found on
/// the ray opposite the hemisphere pole by distance doubling; candidate
/// tangent planes are over-approximated by all (vertex, incident normal)
/// pairs plus 16 samples per Gauss-image arc.
inline Vec3 find_admissible_center(const Mesh& mesh, int max_doublings = 60) {
    std::vector<Vec3> normals;
    normals.reserve(size_t(mesh.face_count()));
    for (int f = 0; f < mesh.face_count(); ++f) normals.push_back(mesh.face_normal(f));
    const std::optional<Vec3> pole = hemisphere_pole(normals);
    if (!pole) throw NoHemisphereError("mesh Gauss image not contained in an open hemisphere");

    struct Candidate {
        Vec3 vertex;
        Vec3 direction;
    };
    std::vector<Candidate> cands;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        if (mesh.vertex_is_boundary(v)) continue;
        const VertexStar star = vertex_star(mesh, v);
        const GaussImage img = gauss_image(star);
        const size_t n = img.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec3& a = img.polygon[i];
            const Vec3& b = img.polygon[i + 1];
            const double theta = arc_length(a, b);
            const Vec3 w = geodesic_tangent(a, b);
            for (int s = 0; s < 16; ++s) {
                const double t = theta * double(s) / 16.0;
                cands.push_back({star.center_pos, a * std::cos(t) + w * std::sin(t)});
            }
        }
    }
    // boundary vertices still contribute their incident normals
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        if (!mesh.vertex_is_boundary(v)) continue;
        for (int f = 0; f < mesh.face_count(); ++f)
            for (int u : mesh.face(f))
                if (u == v) cands.push_back({mesh.vertex(v), mesh.face_normal(f)});
    }

    const Vec3 base = mesh.face_centroid(0);
    double d = std::max(mesh.bbox_diagonal(), 1.0);
    for (int it = 0; it < max_doublings; ++it, d *= 2) {
        const Vec3 O = base - *pole * d;
        int sign = 0;
        bool ok = true;
        for (const Candidate& c : cands) {
            const double off = dot(c.vertex - O, c.direction);
            if (std::abs(off) <= 1e-6) { ok = false; break; }
            const int s = off > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (s != sign) { ok = false; break; }
        }
        if (ok) return O;
    }
    throw GeometryError("no admissible polarity center found by doubling search");
}

struct PolarDual {
    Mesh mesh;                               // the dual surface
    std::vector<int> face_to_dual_vertex;    // primal face id -> dual vertex id
    std::map<int, int> vertex_to_dual_face;  // interior primal vertex -> dual face id
    std::vector<int> dual_face_to_vertex;    // dual face id -> primal vertex id
    Vec3 center;
    int curvature_sign{0};
};

/// Polarity with respect to the unit sphere about O: the plane of face f maps
/// to the dual vertex, interior vertex stars map to dual faces (ring order
/// reversed for negative curvature so dual faces stay consistently wound).
/// Boundary vertices produce no dual face.
inline PolarDual polar_dual(const Mesh& mesh, const Vec3& O, MeshOptions opts = {}) {
    const double scale = std::max(mesh.bbox_diagonal(), 1.0);
    std::vector<Vec3> dual_vertices(size_t(mesh.face_count()));
    for (int f = 0; f < mesh.face_count(); ++f) {
        const Vec3 n = mesh.face_normal(f);
        const double c = dot(n, mesh.face_centroid(f) - O);
        if (std::abs(c) <= 1e-12 * scale)
            throw CenterOnFacePlaneError("polarity center lies on the plane of face " + std::to_string(f));
        dual_vertices[size_t(f)] = n / c;
    }
    const std::vector<int> interior = interior_vertices(mesh);
    if (interior.empty()) throw EmptyInteriorError("mesh has no interior vertices");

    int sign = 0;
    for (int v : interior) {
        const double K = gaussian_curvature(vertex_star(mesh, v));
        const int s = K > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign)
            throw GeometryError("polar dual requires a uniform curvature sign");
    }

    PolarDual out;
    out.center = O;
    out.curvature_sign = sign;
    out.face_to_dual_vertex.resize(size_t(mesh.face_count()));
    for (int f = 0; f < mesh.face_count(); ++f) out.face_to_dual_vertex[size_t(f)] = f;

    std::vector<std::vector<int>> dual_faces;
    for (int v : interior) {
        const VertexStar star = vertex_star(mesh, v);
        std::vector<int> cyc;
        for (const StarFace& sf : star.ring) cyc.push_back(sf.face);
        if (sign < 0) std::reverse(cyc.begin(), cyc.end());
        out.vertex_to_dual_face[v] = int(dual_faces.size());
        out.dual_face_to_vertex.push_back(v);
        dual_faces.push_back(std::move(cyc));
    }
    std::vector<Vec3> shifted(dual_vertices.size());
    for (size_t i = 0; i < dual_vertices.size(); ++i) shifted[i] = dual_vertices[i] + O;
    out.mesh = Mesh(std::move(shifted), std::move(dual_faces), opts);
    return out;
}

struct DualityReport {
    bool curvature_signs_match{true};
    bool inflection_duality{true};          // f inflects at v <=> dual face of v inflects at dual vertex of f
    int inflection_pairs_checked{0};
    int inflection_pairs_failed{0};
    double max_gauss_projection_deviation{0};  // dual face normal vs central projection of the primal vertex
    double double_dual_max_deviation{-1};      // fill via polar_dual of the dual
    bool smooth_match{true};
};

/// Verify the duality statements pair by pair: inflection correspondence,
/// curvature-sign preservation, and the Gauss image of the dual being the
/// central projection of the primal from the center.
inline DualityReport check_duality(const Mesh& primal, const PolarDual& dual) {
    DualityReport rep;
    const Mesh& dmesh = dual.mesh;

    for (const auto& [v, df] : dual.vertex_to_dual_face) {
        // dual face normal vs central projection of v
        const Vec3 proj = normalized(primal.vertex(v) - dual.center);
        const Vec3 n = dmesh.face_normal(df);
        const double dev = std::min(norm(n - proj), norm(n + proj));
        rep.max_gauss_projection_deviation = std::max(rep.max_gauss_projection_deviation, dev);
    }

    for (const auto& [v, df] : dual.vertex_to_dual_face) {
        const VertexStar star = vertex_star(primal, v);
        const double K = gaussian_curvature(star);
        for (size_t i = 0; i < star.valence(); ++i) {
            const int f = star.ring[i].face;
            const int dv = dual.face_to_dual_vertex[size_t(f)];
            if (dmesh.vertex_is_boundary(dv)) continue;
            const VertexStar dstar = vertex_star(dmesh, dv);
            const double dK = gaussian_curvature(dstar);
            if ((K > 0) != (dK > 0)) rep.curvature_signs_match = false;
            // locate the dual face of v in the ring of the dual vertex of f
            size_t rj = dstar.valence();
            for (size_t j = 0; j < dstar.valence(); ++j)
                if (dstar.ring[j].face == df) { rj = j; break; }
            if (rj == dstar.valence()) continue;
            ++rep.inflection_pairs_checked;
            const bool a = is_inflection_face(star, i);
            const bool b = is_inflection_face(dstar, rj);
            if (a != b) {
                ++rep.inflection_pairs_failed;
                rep.inflection_duality = false;
            }
        }
    }
    return rep;
}

}  // namespace polysmooth
