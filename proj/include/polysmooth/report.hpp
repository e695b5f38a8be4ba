#pragma once

// Global smoothness verdict and serialization: runs the per-vertex and
// per-face pipelines, aggregates the four conditions of the smoothness
// definition, and exports machine-readable reports plus visual files.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polysmooth/curvature.hpp"
#include "polysmooth/faces.hpp"
#include "polysmooth/fixtures.hpp"
#include "polysmooth/indicatrix.hpp"
#include "polysmooth/mesh.hpp"

namespace polysmooth {

struct VertexReport {
    int vertex{-1};
    bool skipped{false};  // boundary vertex
    double curvature{0};
    std::optional<VertexShapeClass> shape;
    std::vector<int> inflection_faces;
    std::vector<int> reflex_faces;
    bool smooth{false};
    bool simple{false};
    bool hemispherical{false};
    bool kernel_nonempty{false};
    bool zero_curvature{false};
    bool degenerate{false};
    std::optional<TangentFrame> frame;
    std::vector<Vec3> asymptotic_directions;
    std::vector<std::pair<int, int>> collinear_pairs;
    std::string error;  // analysis error, when one occurred

    std::vector<std::string> failed_conditions;  // codes of the smoothness conditions
};

struct Violation {
    std::string code;
    char kind{'v'};  // 'v' vertex, 'f' face
    int id{-1};
    std::string detail;
};

struct SmoothnessReport {
    int vertex_count{0}, face_count{0}, edge_count{0};
    int interior_vertex_count{0}, interior_face_count{0};
    std::vector<VertexReport> vertices;
    std::vector<FaceReport> faces;
    std::vector<Violation> violations;
    bool smooth{false};
    bool degenerate{false};
};

/// Run the whole pipeline. Analysis errors become violations, never aborts.
inline SmoothnessReport analyze(const Mesh& mesh) {
    SmoothnessReport rep;
    rep.vertex_count = mesh.vertex_count();
    rep.face_count = mesh.face_count();
    rep.edge_count = mesh.edge_count();

    for (int v = 0; v < mesh.vertex_count(); ++v) {
        VertexReport vr;
        vr.vertex = v;
        if (mesh.vertex_is_boundary(v)) {
            vr.skipped = true;
            rep.vertices.push_back(std::move(vr));
            continue;
        }
        ++rep.interior_vertex_count;
        try {
            const VertexStar star = vertex_star(mesh, v);
            vr.curvature = gaussian_curvature(star);
            const VertexSmoothness sm = vertex_smoothness(star);
            vr.smooth = sm.smooth;
            vr.simple = sm.simple;
            vr.hemispherical = sm.hemispherical;
            vr.kernel_nonempty = sm.kernel_nonempty;
            vr.zero_curvature = sm.zero_curvature;
            vr.degenerate = sm.degenerate;
            vr.frame = sm.frame;
            if (vr.zero_curvature) vr.failed_conditions.push_back("condition1_zero_curvature");
            if (!sm.simple) vr.failed_conditions.push_back("condition2_self_intersecting");
            else {
                if (!sm.hemispherical) vr.failed_conditions.push_back("condition2_not_hemispherical");
                if (!sm.kernel_nonempty) vr.failed_conditions.push_back("condition2_not_star_shaped");
            }
            try {
                const VertexClassification cls = classify_vertex(star);
                vr.shape = cls.shape;
                vr.inflection_faces = cls.ring_to_faces(cls.inflection_ring);
                vr.reflex_faces = cls.ring_to_faces(cls.reflex_ring);
                vr.degenerate = vr.degenerate || cls.degenerate;
            } catch (const ZeroCurvatureError&) {
                // condition 1 already recorded
            }
            if (vr.smooth && vr.curvature < 0 && vr.frame) {
                const VertexAsymptotics as = asymptotic_directions_vertex(star, *vr.frame);
                for (const AsymptoticDirection& d : as.directions) {
                    vr.asymptotic_directions.push_back(d.dir);
                    vr.degenerate = vr.degenerate || d.degenerate;
                }
                vr.collinear_pairs = as.collinear_pairs;
            }
        } catch (const Error& e) {
            vr.error = e.what();
            vr.failed_conditions.push_back("analysis_error");
        }
        for (const std::string& c : vr.failed_conditions)
            rep.violations.push_back({c, 'v', v, ""});
        rep.degenerate = rep.degenerate || vr.degenerate;
        rep.vertices.push_back(std::move(vr));
    }

    for (int f = 0; f < mesh.face_count(); ++f) {
        FaceReport fr = classify_face(mesh, f);
        if (!fr.skipped) {
            ++rep.interior_face_count;
            const bool uniform = fr.n_positive == 0 || fr.n_negative == 0;
            if (fr.sign_changes != 0 && fr.sign_changes != 2)
                rep.violations.push_back({"condition3_sign_changes", 'f', f,
                                          std::to_string(fr.sign_changes) + " sign-change edges"});
            const double target = uniform ? kTwoPi : 0.0;
            if (std::abs(fr.geometric_angle_sum - target) > kAngleSumTol ||
                std::abs(fr.oriented_angle_sum - target) > kAngleSumTol)
                rep.violations.push_back({"condition4_angle_sum", 'f', f,
                                          "oriented angle sum " + format_g17(fr.geometric_angle_sum)});
            if (uniform && fr.shape != FaceShapeClass::MonkeySaddle && !fr.point_of_contact)
                rep.violations.push_back({"condition4_face_not_star_shaped", 'f', f, ""});
            for (const std::string& vi : fr.violations) {
                if (vi == "HullViolation")
                    rep.violations.push_back({"condition4_hull", 'f', f, ""});
                else if (vi == "PartialSumTooLarge")
                    rep.violations.push_back({"condition4_partial_sum", 'f', f, ""});
            }
            rep.degenerate = rep.degenerate || fr.degenerate;
        }
        rep.faces.push_back(std::move(fr));
    }

    // deterministic ordering: vertex violations by id, then face violations
    std::stable_sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.kind != b.kind) return a.kind == 'v';
        if (a.id != b.id) return a.id < b.id;
        return a.code < b.code;
    });
    rep.smooth = rep.violations.empty();
    return rep;
}

// -- JSON --------------------------------------------------------------------

using json = nlohmann::ordered_json;

namespace detail {

inline json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace detail

inline json report_to_json(const SmoothnessReport& rep) {
    json j;
    j["schema"] = 1;
    j["mesh"] = {{"vertices", rep.vertex_count},
                 {"faces", rep.face_count},
                 {"edges", rep.edge_count},
                 {"interior_vertices", rep.interior_vertex_count},
                 {"interior_faces", rep.interior_face_count}};
    j["smooth"] = rep.smooth;
    j["degenerate"] = rep.degenerate;
    json jverts = json::array();
    for (const VertexReport& vr : rep.vertices) {
        json v;
        v["id"] = vr.vertex;
        if (vr.skipped) {
            v["skipped"] = true;
            jverts.push_back(std::move(v));
            continue;
        }
        v["K"] = vr.curvature;
        if (vr.shape) v["class"] = to_string(*vr.shape);
        v["smooth"] = vr.smooth;
        v["simple"] = vr.simple;
        v["hemispherical"] = vr.hemispherical;
        v["star_shaped"] = vr.kernel_nonempty;
        if (vr.degenerate) v["degenerate"] = true;
        v["inflection_faces"] = vr.inflection_faces;
        if (!vr.reflex_faces.empty()) v["reflex_faces"] = vr.reflex_faces;
        if (vr.frame) {
            v["tangent_normal"] = detail::vec_json(vr.frame->tangent_normal);
            v["discrete_normal"] = detail::vec_json(vr.frame->discrete_normal);
        }
        if (!vr.asymptotic_directions.empty()) {
            json dirs = json::array();
            for (const Vec3& d : vr.asymptotic_directions) dirs.push_back(detail::vec_json(d));
            v["asymptotic_directions"] = std::move(dirs);
        }
        if (!vr.failed_conditions.empty()) v["failed_conditions"] = vr.failed_conditions;
        if (!vr.error.empty()) v["error"] = vr.error;
        jverts.push_back(std::move(v));
    }
    j["vertices"] = std::move(jverts);
    json jfaces = json::array();
    for (const FaceReport& fr : rep.faces) {
        json f;
        f["id"] = fr.face;
        if (fr.skipped) {
            f["skipped"] = true;
            jfaces.push_back(std::move(f));
            continue;
        }
        f["class"] = to_string(fr.shape);
        f["n_positive"] = fr.n_positive;
        f["n_negative"] = fr.n_negative;
        f["sign_changes"] = fr.sign_changes;
        f["oriented_angle_sum"] = fr.oriented_angle_sum;
        f["geometric_angle_sum"] = fr.geometric_angle_sum;
        if (fr.n_negative > 0 && fr.n_positive == 0)
            f["c_counts"] = json::array({fr.c1, fr.c2, fr.c3, fr.c4});
        if (fr.shape == FaceShapeClass::MonkeySaddle) f["branching_order"] = fr.branching_order;
        if (fr.point_of_contact) f["point_of_contact"] = detail::vec_json(*fr.point_of_contact);
        if (fr.parabolic_segment) {
            f["parabolic_segment"] = json::array({detail::vec_json(fr.parabolic_segment->first),
                                                  detail::vec_json(fr.parabolic_segment->second)});
            f["parabolic_definition_met"] = fr.parabolic_definition_met;
        }
        if (fr.parabolic_caveat) f["parabolic_caveat"] = true;
        if (!fr.asymptotic_segments.empty()) {
            json segs = json::array();
            for (const FaceSegment& s : fr.asymptotic_segments) {
                json seg;
                seg["to_vertex"] = s.to_vertex;
                seg["a"] = detail::vec_json(s.a);
                seg["b"] = detail::vec_json(s.b);
                if (s.counts_twice) seg["counts_twice"] = true;
                segs.push_back(std::move(seg));
            }
            f["asymptotic_segments"] = std::move(segs);
        }
        if (!fr.violations.empty()) f["violations"] = fr.violations;
        jfaces.push_back(std::move(f));
    }
    j["faces"] = std::move(jfaces);
    json jviol = json::array();
    for (const Violation& v : rep.violations) {
        json e;
        e["code"] = v.code;
        e["kind"] = v.kind == 'v' ? "vertex" : "face";
        e["id"] = v.id;
        if (!v.detail.empty()) e["detail"] = v.detail;
        jviol.push_back(std::move(e));
    }
    j["violations"] = std::move(jviol);
    return j;
}

inline std::string export_report(const SmoothnessReport& rep) { return report_to_json(rep).dump(2) + "\n"; }

// -- colored OBJ ---------------------------------------------------------------

namespace detail {

inline const char* face_color(const FaceReport& fr) {
    if (fr.skipped) return "0.6 0.6 0.6";
    switch (fr.shape) {
        case FaceShapeClass::ConvexPositive: return "0.20 0.55 0.95";
        case FaceShapeClass::PseudoQuadNegative: return "0.95 0.45 0.15";
        case FaceShapeClass::PseudoTriangleNegative4: return "0.90 0.30 0.30";
        case FaceShapeClass::PseudoTriangleNegative2: return "0.80 0.20 0.50";
        case FaceShapeClass::MixedBlockOK: return "0.30 0.80 0.35";
        case FaceShapeClass::MonkeySaddle: return "0.95 0.85 0.10";
        case FaceShapeClass::Violating: return "0.15 0.15 0.15";
    }
    return "1 1 1";
}

}  // namespace detail

/// OBJ with one comment line per face recording curvature sign pattern, class
/// and a display color.
inline std::string export_colored_mesh(const Mesh& mesh, const SmoothnessReport& rep) {
    std::ostringstream os;
    os << "# polysmooth colored mesh; per-face: # fc <id> <class> <n+> <n-> <r> <g> <b>\n";
    for (const Vec3& v : mesh.vertices())
        os << "v " << format_g17(v.x) << " " << format_g17(v.y) << " " << format_g17(v.z) << "\n";
    for (int f = 0; f < mesh.face_count(); ++f) {
        const FaceReport& fr = rep.faces[size_t(f)];
        os << "# fc " << f << " " << (fr.skipped ? "skipped" : to_string(fr.shape)) << " "
           << fr.n_positive << " " << fr.n_negative << " " << detail::face_color(fr) << "\n";
        os << "f";
        for (int v : mesh.face(f)) os << " " << (v + 1);
        os << "\n";
    }
    return os.str();
}

// -- SVG Gauss images ----------------------------------------------------------

/// Draw the Gauss images of the requested vertices, orthographically
/// projected from the hemisphere pole (falling back to the mean normal).
/// Arcs are sampled at 32 points; corners are marked, and a small arrowhead
/// shows the traversal direction.
inline std::string export_gauss_svg(const Mesh& mesh, const std::vector<int>& vertex_ids,
                                    int size_px = 480) {
    std::ostringstream os;
    const double Rpx = size_px * 0.46;
    const double cx = size_px / 2.0, cy = size_px / 2.0;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size_px << "' height='" << size_px
       << "' viewBox='0 0 " << size_px << " " << size_px << "'>\n";
    os << "<circle cx='" << cx << "' cy='" << cy << "' r='" << Rpx
       << "' fill='none' stroke='#888' stroke-width='1'/>\n";
    const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"};
    int color_idx = 0;
    for (int v : vertex_ids) {
        const VertexStar star = vertex_star(mesh, v);
        const GaussImage img = gauss_image(star);
        const std::optional<Vec3> pole_opt = hemisphere_pole(img.polygon.vertices);
        Vec3 pole;
        if (pole_opt) pole = *pole_opt;
        else {
            Vec3 m{0, 0, 0};
            for (const Vec3& p : img.polygon.vertices) m += p;
            pole = norm(m) > 1e-12 ? normalized(m) : Vec3{0, 0, 1};
        }
        const Vec3 e1 = any_orthogonal(pole);
        const Vec3 e2 = cross(pole, e1);
        auto px = [&](const Vec3& p) {
            return std::pair<double, double>{cx + Rpx * dot(p, e1), cy - Rpx * dot(p, e2)};
        };
        const char* color = palette[color_idx++ % 6];
        os << "<path fill='none' stroke='" << color << "' stroke-width='1.5' d='";
        const size_t n = img.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec3& a = img.polygon[i];
            const Vec3& b = img.polygon[i + 1];
            const double theta = arc_length(a, b);
            const Vec3 w = geodesic_tangent(a, b);
            for (int s = 0; s < 32; ++s) {
                const double t = theta * s / 32.0;
                const Vec3 p = a * std::cos(t) + w * std::sin(t);
                auto [X, Y] = px(p);
                os << (i == 0 && s == 0 ? "M" : "L") << X << " " << Y << " ";
            }
        }
        os << "Z'/>\n";
        // corners (interior angle below pi for the traversal oriented by K)
        const double K = gaussian_curvature(star);
        for (size_t i = 0; i < n; ++i) {
            const double interior = gauss_image_interior_angle(img, i, K);
            auto [X, Y] = px(img.polygon[i]);
            os << "<circle cx='" << X << "' cy='" << Y << "' r='" << (interior < kPi ? 4.0 : 2.0)
               << "' fill='" << (interior < kPi ? color : "#555") << "'/>\n";
        }
        // traversal arrowhead at the midpoint of the first arc
        {
            const Vec3& a = img.polygon[0];
            const Vec3& b = img.polygon[1];
            const double theta = arc_length(a, b);
            const Vec3 w = geodesic_tangent(a, b);
            const Vec3 m = a * std::cos(theta / 2) + w * std::sin(theta / 2);
            const Vec3 t3 = w * std::cos(theta / 2) - a * std::sin(theta / 2);
            auto [X, Y] = px(m);
            const double tx = dot(t3, e1), ty = -dot(t3, e2);
            const double L = std::hypot(tx, ty) + 1e-300;
            const double ux = tx / L, uy = ty / L;
            os << "<path fill='" << color << "' d='M" << X + 8 * ux << " " << Y + 8 * uy << " L"
               << X - 4 * uy << " " << Y + 4 * ux << " L" << X + 4 * uy << " " << Y - 4 * ux
               << " Z'/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace polysmooth
