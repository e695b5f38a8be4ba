// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polysmooth/polysmooth.hpp"

using namespace polysmooth;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

struct Check {
    bool ok{true};
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct StarFixture {
    std::unique_ptr<Mesh> mesh;
    VertexStar star;
};

// keeps the mesh alive at a stable address for the star's back-pointer
StarFixture star_of(Mesh m, int v = 0) {
    StarFixture f;
    f.mesh = std::make_unique<Mesh>(std::move(m));
    f.star = vertex_star(*f.mesh, v);
    return f;
}


std::vector<Mesh> star_corpus(int count, std::uint64_t seed0) {
    std::vector<Mesh> out;
    std::uint64_t seed = seed0;
    while (int(out.size()) < count) {
        ++seed;
        try {
            Mesh m = fixtures::random_star(seed);
            VertexStar s = vertex_star(m, 0);
            if (std::abs(gaussian_curvature(s)) < 1e-6) continue;
            bool straight = false;
            for (const StarFace& f : s.ring)
                if (std::abs(f.alpha - kPi) < 1e-6) straight = true;
            if (straight) continue;
            if (!is_simple(gauss_image(s).polygon).simple) continue;
            out.push_back(std::move(m));
        } catch (const Error&) {
        }
    }
    return out;
}

// -- criteria -----------------------------------------------------------------

void criterion_1_curvature() {
    Check c;
    c.require(std::abs(gaussian_curvature(star_of(fixtures::cube_corner()).star) - kPi / 2) < 1e-12,
              "cube corner K != pi/2");
    c.require(std::abs(gaussian_curvature(star_of(fixtures::tetra_apex()).star) - kPi) < 1e-12,
              "tetra apex K != pi");
    c.require(std::abs(gaussian_curvature(star_of(fixtures::saddle_star(1.0)).star) + 2 * kPi / 3) < 1e-12,
              "saddle K != -2pi/3");
    report(1, "curvature identities on cube corner, tetrahedron apex, saddle star", c.ok, c.detail);
}

void criterion_2_area(const std::vector<Mesh>& corpus) {
    Check c;
    int n = 0;
    for (const Mesh& m : corpus) {
        VertexStar s = vertex_star(m, 0);
        const double K = gaussian_curvature(s);
        const double area = signed_area(gauss_image(s).polygon, K > 0 ? 1 : -1);
        if (std::abs(area - K) >= 1e-9) {
            c.require(false, "area mismatch " + format_g17(std::abs(area - K)) + " at star " +
                                 std::to_string(n));
            break;
        }
        ++n;
    }
    report(2, "signed Gauss-image area equals the angle defect on 500 random stars", c.ok, c.detail);
}

void criterion_3_angles(const std::vector<Mesh>& corpus) {
    Check c;
    for (const Mesh& m : corpus) {
        VertexStar s = vertex_star(m, 0);
        const double K = gaussian_curvature(s);
        GaussImage g = gauss_image(s);
        const size_t n = s.valence();
        double sum_int = 0, sum_a = 0;
        for (size_t i = 0; i < n; ++i) {
            const double mu =
                left_side_angle(g.polygon[(i + n - 1) % n], g.polygon[i], g.polygon[i + 1]);
            const double pred = lemma_angle(s.ring[i].alpha, is_inflection_face(s, i));
            c.require(std::abs(mu - pred) < 1e-9, "angle formula off by " + format_g17(mu - pred));
            sum_int += K > 0 ? mu : kTwoPi - mu;
            sum_a += s.ring[i].alpha;
        }
        const double expect = K > 0 ? double(n) * kPi - sum_a : double(n) * kPi + sum_a - 4 * kPi;
        c.require(std::abs(sum_int - expect) < 1e-9, "angle sum identity off");
        if (!c.ok) break;
    }
    report(3, "per-face image angles match the case formula; both angle-sum identities hold", c.ok,
           c.detail);
}

void criterion_4_index() {
    Check c;
    const Vec3 xi = normalized(Vec3{0.0021, 0.0017, 1.0});
    c.require(banchoff_index(star_of(fixtures::cube_corner()).star, normalized(Vec3{1, 1, 1.003})) == 1,
              "cube corner index != 1");
    c.require(banchoff_index(star_of(fixtures::saddle_star(1.0)).star, xi) == -1, "saddle index != -1");

    // Monte-Carlo integration: 2 pi E[i] estimates K within 4 standard errors
    std::mt19937_64 rng(20260809);
    std::normal_distribution<double> N;
    auto s_fx = star_of(fixtures::saddle_star(1.0));
        VertexStar& s = s_fx.star;
    const double K = gaussian_curvature(s);
    const int samples = 1000000;
    double sum = 0, sum2 = 0;
    int used = 0;
    while (used < samples) {
        const Vec3 d = normalized(Vec3{N(rng), N(rng), N(rng)});
        try {
            const double y = kTwoPi * banchoff_index(s, d);
            sum += y;
            sum2 += y * y;
            ++used;
        } catch (const NonGenericDirectionError&) {
        }
    }
    const double mean = sum / used;
    const double var = (sum2 / used - mean * mean) / used;
    const double se = std::sqrt(var);
    c.require(std::abs(mean - K) <= 4 * se, "Monte-Carlo estimate " + format_g17(mean) + " vs K " +
                                                format_g17(K) + " (se " + format_g17(se) + ")");
    report(4, "Banchoff indices and the Monte-Carlo curvature estimate", c.ok, c.detail);
}

void criterion_5_classes() {
    Check c;
    c.require(classify_vertex(star_of(fixtures::cube_corner()).star).shape == VertexShapeClass::ConvexCorner,
              "cube corner class");
    {
        VertexClassification k = classify_vertex(star_of(fixtures::hex_saddle()).star);
        c.require(k.shape == VertexShapeClass::PseudoQuadrilateral, "hex saddle class");
        c.require(k.inflection_ring.size() == 4, "hex saddle inflection count");
    }
    {
        VertexClassification k = classify_vertex(star_of(fixtures::pseudo_tri_b_star()).star);
        c.require(k.shape == VertexShapeClass::PseudoTriangleB, "degenerate pseudo-triangle class");
        c.require(k.inflection_ring.size() == 2, "degenerate pseudo-triangle inflection count");
    }
    {
        VertexClassification k = classify_vertex(star_of(fixtures::pseudo_digon_star()).star);
        c.require(k.shape == VertexShapeClass::PseudoDigon, "pseudo-digon class");
        VertexSmoothness sm = vertex_smoothness(star_of(fixtures::pseudo_digon_star()).star);
        c.require(!sm.hemispherical, "pseudo-digon image fit in a hemisphere");
    }
    report(5, "shape classification hits every class; the digon fails the hemisphere test", c.ok,
           c.detail);
}

void criterion_6_sections() {
    Check c;
    {
        auto s_fx = star_of(fixtures::saddle_star(1.0));
        VertexStar& s = s_fx.star;
        InfiniteStar V = infinite_star(s);
        for (double off : {0.1, -0.1}) {
            const SectionResult r = plane_section(V, {0, 0, off}, {0, 0, 1});
            c.require(r.classification == SectionClass::DiscreteHyperbola,
                      std::string("saddle section ") + to_string(r.classification));
        }
    }
    {
        auto s_fx = star_of(fixtures::cube_corner());
        VertexStar& s = s_fx.star;
        InfiniteStar V = infinite_star(s);
        const Vec3 n = normalized(Vec3{1, 1, 1});
        c.require(plane_section(V, n * 0.05, n).classification == SectionClass::DiscreteEllipse,
                  "cube corner inner section");
        c.require(plane_section(V, n * -0.05, n).classification == SectionClass::Empty,
                  "cube corner outer section");
    }
    {
        auto s_fx = star_of(fixtures::antipodal_star());
        VertexStar& s = s_fx.star;
        InfiniteStar V = infinite_star(s);
        for (double off : {0.04, -0.04}) {
            const SectionResult r = plane_section(V, {0, 0, off}, {0, 0, 1});
            c.require(r.classification == SectionClass::ThreeComponents,
                      std::string("antipodal section ") + to_string(r.classification));
        }
    }
    {
        // converse direction: a non-star-shaped pseudo-quadrilateral produces
        // an inflection edge instead of a discrete hyperbola
        auto s_fx = star_of(fixtures::nonstar_quad_star());
        VertexStar& s = s_fx.star;
        InfiniteStar V = infinite_star(s);
        const Vec3 n{0, 0, 1};
        const SectionResult r1 = plane_section(V, n * 0.02, n);
        const SectionResult r2 = plane_section(V, n * -0.02, n);
        c.require(!r1.inflection_edges.empty() || !r2.inflection_edges.empty(),
                  "no inflection edge on either side");
        c.require(!section_is_hyperbola(r1.classification) || !section_is_hyperbola(r2.classification),
                  "both sections classified as hyperbolas");
    }
    report(6, "discrete Dupin indicatrices: hyperbola, ellipse/empty, three components, converse",
           c.ok, c.detail);
}

void criterion_7_asymptotics() {
    Check c;
    {
        auto s_fx = star_of(fixtures::saddle_star(1.0));
        VertexStar& s = s_fx.star;
        VertexSmoothness sm = vertex_smoothness(s);
        c.require(sm.frame.has_value(), "saddle has no tangent frame");
        VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
        c.require(as.directions.size() == 4, "saddle direction count");
        const double r2 = 1.0 / std::sqrt(2.0);
        for (const Vec3& e : {Vec3{r2, r2, 0}, Vec3{-r2, r2, 0}, Vec3{-r2, -r2, 0}, Vec3{r2, -r2, 0}}) {
            double best = 1e300;
            for (const AsymptoticDirection& d : as.directions) best = std::min(best, norm(d.dir - e));
            c.require(best < 1e-10, "diagonal direction missing");
        }
        std::vector<AsymptoticCone> cones = asymptotic_cones(s);
        for (const AsymptoticDirection& d : as.directions) {
            bool inside = false;
            for (const AsymptoticCone& k : cones)
                if (k.face == d.face && k.contains(d.dir, 1e-9)) inside = true;
            c.require(inside, "direction outside its admissible cone");
        }
    }
    {
        auto s_fx = star_of(fixtures::pseudo_tri_b_star());
        VertexStar& s = s_fx.star;
        VertexSmoothness sm = vertex_smoothness(s);
        c.require(sm.frame.has_value(), "degenerate star has no frame");
        VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
        c.require(as.directions.size() == 4, "degenerate star direction count");
        c.require(as.collinear_pairs.size() == 1, "collinear pair count " +
                                                      std::to_string(as.collinear_pairs.size()));
        std::vector<AsymptoticCone> cones = asymptotic_cones(s);
        for (const AsymptoticDirection& d : as.directions) {
            bool inside = false;
            for (const AsymptoticCone& k : cones)
                if (k.face == d.face && k.contains(d.dir, 1e-9)) inside = true;
            c.require(inside, "direction outside its cone (degenerate star)");
        }
    }
    report(7, "asymptotic directions: saddle diagonals, cones contain them, one collinear pair",
           c.ok, c.detail);
}

void criterion_8_faces() {
    Check c;
    {
        Mesh cube = fixtures::cube();
        FaceReport r = classify_face(cube, 0);
        c.require(r.shape == FaceShapeClass::ConvexPositive, "cube face class");
        c.require(std::abs(r.oriented_angle_sum - kTwoPi) < 1e-12, "cube face angle sum");
    }
    {
        Mesh hex = fixtures::hex_graph_mesh(4, 1.0);
        int analyzed = 0;
        for (int f = 0; f < hex.face_count(); ++f) {
            FaceReport r = classify_face(hex, f);
            if (r.skipped) continue;
            ++analyzed;
            c.require(r.shape == FaceShapeClass::PseudoQuadNegative, "hex-mesh face class");
            c.require(r.c1 - r.c3 == 4 - int(hex.face(f).size()), "c1 - c3 identity");
            c.require(2 * r.c1 + r.c2 + r.c4 == 4, "2c1 + c2 + c4 identity");
        }
        c.require(analyzed > 0, "no interior hex faces");
    }
    {
        Mesh saddle = fixtures::graph_mesh(fixtures::Tiling::C, 5, 1.0);
        int checked = 0;
        for (int f = 0; f < saddle.face_count() && checked < 40; ++f) {
            FaceReport r = classify_face(saddle, f);
            if (r.skipped) continue;
            ++checked;
            c.require(r.shape == FaceShapeClass::PseudoTriangleNegative2,
                      std::string("triangulated saddle face ") + to_string(r.shape));
        }
        c.require(checked > 0, "no interior saddle faces");
    }
    {
        FaceReport r = classify_face(fixtures::monkey_star(), 0);
        c.require(r.shape == FaceShapeClass::MonkeySaddle, "monkey saddle class");
        c.require(std::abs(r.oriented_angle_sum - 4 * kPi) < 1e-9, "monkey angle sum");
        c.require(std::abs(r.geometric_angle_sum - 4 * kPi) < 1e-9, "monkey geometric sum");
    }
    {
        Mesh t = fixtures::torus();
        int mixed = 0;
        for (int f = 0; f < t.face_count(); ++f) {
            FaceReport r = classify_face(t, f);
            if (r.skipped || r.n_positive == 0 || r.n_negative == 0) continue;
            ++mixed;
            c.require(r.sign_changes == 2, "mixed face sign changes");
            c.require(std::abs(r.oriented_angle_sum) < 1e-9, "mixed face oriented sum");
            c.require(std::abs(r.geometric_angle_sum) < 1e-9, "mixed face geometric sum");
            if (!r.parabolic_segment) {
                c.require(false, "mixed face without parabolic segment");
                continue;
            }
            auto [plane, poly] = t.face_polygon(f);
            const Vec3 e1 = any_orthogonal(plane.normal);
            const Vec3 e2 = cross(plane.normal, e1);
            auto flat = [&](const Vec3& p) {
                const Vec3 d = p - plane.point;
                return Vec2{dot(d, e1), dot(d, e2)};
            };
            c.require(segment_in_polygon(poly, flat(r.parabolic_segment->first),
                                         flat(r.parabolic_segment->second)),
                      "parabolic segment leaves the face");
        }
        c.require(mixed > 0, "torus has no mixed faces");
    }
    report(8, "face analysis: convex, pseudo-quad/-triangle identities, monkey saddle, torus mixed",
           c.ok, c.detail);
}

void criterion_9_tilings() {
    Check c;
    {
        Mesh mc = fixtures::graph_mesh(fixtures::Tiling::C, 8, 1.0);
        for (int v : interior_vertices(mc))
            if (!is_simple(gauss_image(vertex_star(mc, v)).polygon).simple)
                c.require(false, "tiling (c) vertex " + std::to_string(v) + " self-intersects");
    }
    {
        Mesh mb = fixtures::graph_mesh(fixtures::Tiling::B, 8, 1.0);
        int selfx = 0;
        for (int v : interior_vertices(mb))
            if (!is_simple(gauss_image(vertex_star(mb, v)).polygon).simple) ++selfx;
        c.require(selfx >= 1, "tiling (b) has no self-intersecting Gauss image");
    }
    {
        Mesh ma = fixtures::graph_mesh(fixtures::Tiling::A, 8, 1.0);
        int degenerate = 0;
        for (int v : interior_vertices(ma)) {
            VertexStar s = vertex_star(ma, v);
            if (is_simple(gauss_image(s).polygon).degenerate || vertex_smoothness(s).degenerate)
                ++degenerate;
        }
        c.require(degenerate >= 1, "tiling (a) produced no degenerate flags");
    }
    report(9, "tilings: (c) all interior images simple, (b) self-intersections, (a) degenerate",
           c.ok, c.detail);
}

void criterion_10_projective() {
    Check c;
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const std::vector<std::string> fixture_names = {"graph_mesh", "hex_graph_mesh", "cube"};
    for (const std::string& name : fixture_names) {
        fixtures::FixtureSpec spec;
        spec.name = name;
        if (name == "graph_mesh") spec.params["n"] = 4;
        if (name == "hex_graph_mesh") spec.params["n"] = 3;
        Mesh m = fixtures::generate(spec);
        SmoothnessReport base = analyze(m);
        if (!base.smooth) {
            c.require(false, name + " fixture is not smooth");
            continue;
        }
        int done = 0;
        while (done < 50) {
            std::array<double, 16> rows{};
            const Mat4 I = Mat4::identity();
            for (int i = 0; i < 16; ++i) rows[size_t(i)] = I.m[size_t(i)] + 0.02 * U(rng);
            Mesh img;
            try {
                img = apply_projective(m, ProjectiveMap::from_rows(rows));
            } catch (const GeometryError&) {
                continue;
            }
            SmoothnessReport rep = analyze(img);
            c.require(rep.smooth == base.smooth, name + ": verdict changed");
            for (size_t v = 0; v < base.vertices.size(); ++v) {
                if (base.vertices[v].skipped) continue;
                const bool same_class =
                    base.vertices[v].shape.has_value() == rep.vertices[v].shape.has_value() &&
                    (!base.vertices[v].shape || *base.vertices[v].shape == *rep.vertices[v].shape);
                c.require(same_class, name + ": class changed at vertex " + std::to_string(v));
                c.require(base.vertices[v].inflection_faces == rep.vertices[v].inflection_faces,
                          name + ": inflection set changed at vertex " + std::to_string(v));
            }
            ++done;
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    // asymptotic line correspondence on the saddle star
    {
        Mesh m = fixtures::saddle_star(1.0);
        VertexStar s0 = vertex_star(m, 0);
        VertexSmoothness sm0 = vertex_smoothness(s0);
        VertexAsymptotics as0 = asymptotic_directions_vertex(s0, *sm0.frame);
        int done = 0;
        while (done < 50) {
            std::array<double, 16> rows{};
            const Mat4 I = Mat4::identity();
            for (int i = 0; i < 16; ++i) rows[size_t(i)] = I.m[size_t(i)] + 0.05 * U(rng);
            ProjectiveMap M = ProjectiveMap::from_rows(rows);
            Mesh img;
            try {
                img = apply_projective(m, M);
            } catch (const GeometryError&) {
                continue;
            }
            VertexStar s1 = vertex_star(img, 0);
            Vec3 n1;
            try {
                n1 = M.apply_to_plane(sm0.frame->tangent_normal, s0.center_pos).first;
            } catch (const GeometryError&) {
                continue;
            }
            VertexSmoothness sm1 = vertex_smoothness(s1);
            if (!sm1.kernel_nonempty) {
                c.require(false, "image star lost its kernel");
                break;
            }
            if (!kernel_contains(sm1.kernel, n1) && kernel_contains(sm1.kernel, -n1)) n1 = -n1;
            c.require(kernel_contains(sm1.kernel, n1), "image tangent normal left the kernel");
            VertexAsymptotics as1 = asymptotic_directions_vertex(s1, TangentFrame{n1, n1});
            for (const AsymptoticDirection& d : as0.directions) {
                const Vec3 dir_img =
                    normalized(M.apply(s0.center_pos + d.dir * 1e-3) - M.apply(s0.center_pos));
                double best = 1e300;
                for (const AsymptoticDirection& d1 : as1.directions)
                    best = std::min(best, std::min(norm(d1.dir - dir_img), norm(d1.dir + dir_img)));
                c.require(best < 1e-8, "asymptotic line correspondence off by " + format_g17(best));
            }
            ++done;
            if (!c.ok) break;
        }
    }
    report(10, "projective invariance over 50 random finite-keeping collineations per fixture",
           c.ok, c.detail);
}

void criterion_11_duality() {
    Check c;
    for (const char* name : {"saddle_patch", "convex_cap"}) {
        Mesh m = std::string(name) == "convex_cap" ? fixtures::convex_cap(4)
                                                   : fixtures::graph_mesh(fixtures::Tiling::C, 4, 1.0);
        Vec3 O;
        try {
            O = find_admissible_center(m);
        } catch (const Error& e) {
            c.require(false, std::string(name) + ": no admissible center (" + e.what() + ")");
            continue;
        }
        PolarDual dual = polar_dual(m, O);
        DualityReport rep = check_duality(m, dual);
        c.require(rep.curvature_signs_match, std::string(name) + ": curvature signs differ");
        c.require(rep.inflection_duality, std::string(name) + ": inflection duality failed");
        c.require(rep.max_gauss_projection_deviation < 1e-9,
                  std::string(name) + ": central projection deviation " +
                      format_g17(rep.max_gauss_projection_deviation));
        PolarDual dd = polar_dual(dual.mesh, O);
        double worst = 0;
        for (int i = 0; i < dd.mesh.vertex_count(); ++i) {
            const int primal_vertex = dual.dual_face_to_vertex[size_t(i)];
            worst = std::max(worst, norm(dd.mesh.vertex(i) - m.vertex(primal_vertex)));
        }
        c.require(worst < 1e-9, std::string(name) + ": involution deviation " + format_g17(worst));
    }
    report(11, "polar duality: involution, curvature signs, inflections, central projection", c.ok,
           c.detail);
}

void criterion_12_determinism() {
    Check c;
    for (const std::string& name : fixtures::fixture_names()) {
        fixtures::FixtureSpec spec;
        spec.name = name;
        spec.seed = 11;
        Mesh a = fixtures::generate(spec);
        Mesh b = fixtures::generate(spec);
        if (a.to_obj() != b.to_obj()) {
            c.require(false, name + ": generation not deterministic");
            continue;
        }
        const std::string ra = export_report(analyze(a));
        const std::string rb = export_report(analyze(b));
        c.require(ra == rb, name + ": reports differ between runs");
    }
    report(12, "analyze twice on every fixture produces byte-identical JSON", c.ok, c.detail);
}

}  // namespace

int main() {
    std::printf("polysmooth acceptance suite\n");
    criterion_1_curvature();
    const std::vector<Mesh> corpus = star_corpus(500, 900000);
    criterion_2_area(corpus);
    criterion_3_angles(corpus);
    criterion_4_index();
    criterion_5_classes();
    criterion_6_sections();
    criterion_7_asymptotics();
    criterion_8_faces();
    criterion_9_tilings();
    criterion_10_projective();
    criterion_11_duality();
    criterion_12_determinism();
    if (g_failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
