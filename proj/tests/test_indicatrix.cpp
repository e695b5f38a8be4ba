#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>

#include "polysmooth/fixtures.hpp"
#include "polysmooth/indicatrix.hpp"

using namespace polysmooth;

namespace {

VertexStar star_of(const Mesh& m, int v = 0) { return vertex_star(m, v); }


}  // namespace

TEST_CASE("wedge counts: one per convex face, two per reflex face") {
    {
        Mesh m = fixtures::saddle_star(1.0);
        VertexStar s = star_of(m);
        CHECK(infinite_star(s).wedges.size() == 4);
    }
    {
        Mesh m = fixtures::cube_corner();
        VertexStar s = star_of(m);
        CHECK(infinite_star(s).wedges.size() == 3);
    }
    {
        Mesh m = fixtures::pseudo_tri_b_star();  // 6 faces, one reflex
        VertexStar s = star_of(m);
        CHECK(infinite_star(s).wedges.size() == 7);
    }
}

TEST_CASE("cube corner sections: empty on one side, discrete ellipse on the other") {
    Mesh m = fixtures::cube_corner();
    VertexStar s = star_of(m);
    InfiniteStar V = infinite_star(s);
    const Vec3 n = normalized(Vec3{1, 1, 1});
    // the corner cone opens toward +diag
    SectionResult inside = plane_section(V, Vec3{0, 0, 0} + n * 0.05, n);
    SectionResult outside = plane_section(V, Vec3{0, 0, 0} - n * 0.05, n);
    CHECK(inside.classification == SectionClass::DiscreteEllipse);
    CHECK(outside.classification == SectionClass::Empty);
    REQUIRE(inside.polylines.size() == 1);
    CHECK(inside.polylines[0].closed);
    CHECK(inside.polylines[0].points.size() == 3);
}

TEST_CASE("saddle star sections are discrete hyperbolas on both sides") {
    Mesh m = fixtures::saddle_star(1.0);
    VertexStar s = star_of(m);
    InfiniteStar V = infinite_star(s);
    for (double off : {0.1, -0.1}) {
        SectionResult r = plane_section(V, {0, 0, off}, {0, 0, 1});
        CHECK(r.classification == SectionClass::DiscreteHyperbola);
        REQUIRE(r.polylines.size() == 2);
        for (const SectionPolyline& pl : r.polylines) {
            CHECK(pl.open());
            CHECK(pl.piece_count() == 2);  // two segments per polyline
            CHECK(pl.ray_in.has_value());
            CHECK(pl.ray_out.has_value());
        }
        CHECK(r.inflection_edges.empty());
    }
}

TEST_CASE("plane through the apex is rejected") {
    Mesh m = fixtures::saddle_star(1.0);
    InfiniteStar V = infinite_star(star_of(m));
    CHECK_THROWS_AS(plane_section(V, {0, 0, 0}, {0, 0, 1}), PlaneThroughApexError);
}

TEST_CASE("antipodal-pair star sections have three components") {
    Mesh m = fixtures::antipodal_star();
    VertexStar s = star_of(m);
    GaussImage g = gauss_image(s);
    REQUIRE(is_simple(g.polygon).simple);
    REQUIRE(region_contains(g.polygon, -1, {0, 0, 1}));
    REQUIRE(region_contains(g.polygon, -1, {0, 0, -1}));
    CHECK(banchoff_index(s, normalized(Vec3{0.013, 0.007, 1.0})) == -2);
    InfiniteStar V = infinite_star(s);
    for (double off : {0.04, -0.04}) {
        SectionResult r = plane_section(V, {0, 0, off}, {0, 0, 1});
        CHECK(r.classification == SectionClass::ThreeComponents);
    }
}

TEST_CASE("non-star-shaped pseudo-quad: inflection edge instead of a hyperbola") {
    Mesh m = fixtures::nonstar_quad_star();
    VertexStar s = star_of(m);
    GaussImage g = gauss_image(s);
    const Vec3 n{0, 0, 1};
    REQUIRE(region_contains(g.polygon, -1, n));
    REQUIRE_FALSE(region_contains(g.polygon, -1, -n));
    InfiniteStar V = infinite_star(s);
    SectionResult above = plane_section(V, n * 0.02, n);
    SectionResult below = plane_section(V, n * -0.02, n);
    const bool some_inflection = !above.inflection_edges.empty() || !below.inflection_edges.empty();
    const bool some_not_hyperbola =
        !section_is_hyperbola(above.classification) || !section_is_hyperbola(below.classification);
    CHECK(some_inflection);
    CHECK(some_not_hyperbola);
}

TEST_CASE("degenerate-case star has a straight branch on one side") {
    Mesh m = fixtures::pseudo_tri_b_star();
    VertexStar s = star_of(m);
    VertexSmoothness sm = vertex_smoothness(s);
    REQUIRE(sm.smooth);
    const Vec3 n = sm.frame->tangent_normal;
    InfiniteStar V = infinite_star(s);
    SectionResult r1 = plane_section(V, n * 0.02, n);
    SectionResult r2 = plane_section(V, n * -0.02, n);
    CHECK(section_is_hyperbola(r1.classification));
    CHECK(section_is_hyperbola(r2.classification));
    const bool straight = r1.classification == SectionClass::SingleSegmentBranch ||
                          r2.classification == SectionClass::SingleSegmentBranch;
    CHECK(straight);
}

TEST_CASE("saddle asymptotic directions are the diagonals") {
    Mesh m = fixtures::saddle_star(1.0);
    VertexStar s = star_of(m);
    VertexSmoothness sm = vertex_smoothness(s);
    REQUIRE(sm.frame.has_value());
    VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
    REQUIRE(as.directions.size() == 4);
    const double r2 = 1.0 / std::sqrt(2.0);
    std::vector<Vec3> expected = {{r2, r2, 0}, {-r2, r2, 0}, {-r2, -r2, 0}, {r2, -r2, 0}};
    for (const Vec3& e : expected) {
        double best = 1e300;
        for (const AsymptoticDirection& d : as.directions) best = std::min(best, norm(d.dir - e));
        CHECK(best < 1e-10);
    }
    // one direction per (inflection) face
    std::set<int> faces;
    for (const AsymptoticDirection& d : as.directions) faces.insert(d.face);
    CHECK(faces.size() == 4);
}

TEST_CASE("degenerate-case star yields exactly one collinear pair") {
    Mesh m = fixtures::pseudo_tri_b_star();
    VertexStar s = star_of(m);
    VertexSmoothness sm = vertex_smoothness(s);
    REQUIRE(sm.frame.has_value());
    VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
    REQUIRE(as.directions.size() == 4);
    CHECK(as.collinear_pairs.size() == 1);
    // the collinear pair lies in the reflex face
    const auto [i, j] = as.collinear_pairs[0];
    CHECK(as.directions[size_t(i)].face == as.directions[size_t(j)].face);
}

TEST_CASE("positive curvature has no asymptotic directions") {
    Mesh m = fixtures::cube_corner();
    VertexStar s = star_of(m);
    TangentFrame frame{{0, 0, 1}, {0, 0, 1}};
    CHECK_THROWS_AS(asymptotic_directions_vertex(s, frame), WrongCurvatureSignError);
    CHECK_THROWS_AS(asymptotic_cones(s), WrongCurvatureSignError);
}

TEST_CASE("saddle cones equal the full face wedges") {
    Mesh m = fixtures::saddle_star(1.0);
    VertexStar s = star_of(m);
    std::vector<AsymptoticCone> cones = asymptotic_cones(s);
    REQUIRE(cones.size() == 4);
    for (const AsymptoticCone& c : cones) {
        CHECK(c.alpha0 == Catch::Approx(2 * kPi / 3).margin(1e-9));
        CHECK(c.gap_start == Catch::Approx(0.0).margin(1e-9));
        CHECK(c.gap_end == Catch::Approx(0.0).margin(1e-9));
        CHECK_FALSE(c.double_cone);
    }
}

TEST_CASE("asymptotic directions lie inside their face cones") {
    for (const Mesh& m : {fixtures::saddle_star(1.0), fixtures::pseudo_tri_b_star()}) {
        VertexStar s = star_of(m);
        VertexSmoothness sm = vertex_smoothness(s);
        REQUIRE(sm.frame.has_value());
        VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
        std::vector<AsymptoticCone> cones = asymptotic_cones(s);
        // the angle identity: gaps + opening = face angle (minus pi when reflex)
        for (const AsymptoticCone& c : cones) {
            const StarFace& sf = s.ring[size_t(c.ring_index)];
            const double expect = sf.alpha > kPi && c.double_cone ? sf.alpha - kPi : sf.alpha;
            CHECK(c.gap_start + c.alpha0 + c.gap_end == Catch::Approx(expect).margin(1e-6));
        }
        for (const AsymptoticDirection& d : as.directions) {
            bool inside = false;
            for (const AsymptoticCone& c : cones)
                if (c.face == d.face && c.contains(d.dir, 1e-9)) inside = true;
            CHECK(inside);
        }
    }
}

TEST_CASE("six-valent saddle: cones are strictly narrower than the face wedges") {
    // a 6-valent negative star has non-inflection faces, so its image has
    // reflex vertices and the kernel is a proper subset: some cone gap is
    // strictly positive
    Mesh m = fixtures::hex_saddle();
    VertexStar s = star_of(m);
    REQUIRE(classify_vertex(s).shape == VertexShapeClass::PseudoQuadrilateral);
    std::vector<AsymptoticCone> cones = asymptotic_cones(s);
    REQUIRE(cones.size() == 4);  // one per inflection face
    double total_gap = 0;
    for (const AsymptoticCone& c : cones) {
        const StarFace& sf = s.ring[size_t(c.ring_index)];
        CHECK(c.alpha0 <= sf.alpha + 1e-9);
        total_gap += c.gap_start + c.gap_end;
    }
    CHECK(total_gap > 1e-6);
    // directions still land inside the cones
    VertexSmoothness sm = vertex_smoothness(s);
    VertexAsymptotics as = asymptotic_directions_vertex(s, *sm.frame);
    for (const AsymptoticDirection& d : as.directions) {
        bool inside = false;
        for (const AsymptoticCone& c : cones)
            if (c.face == d.face && c.contains(d.dir, 1e-9)) inside = true;
        CHECK(inside);
    }
}

TEST_CASE("section classification invariant under offset scale and rigid motions") {
    std::mt19937_64 rng(55);
    std::normal_distribution<double> N;
    Mesh m = fixtures::saddle_star(1.0);
    VertexStar s = star_of(m);
    InfiniteStar V = infinite_star(s);
    const SectionClass base = plane_section(V, {0, 0, 0.05}, {0, 0, 1}).classification;
    for (double off : {0.01, 0.02, 0.08, 0.15}) {
        CHECK(plane_section(V, {0, 0, off}, {0, 0, 1}).classification == base);
    }
    for (int t = 0; t < 10; ++t) {
        const Vec3 axis = normalized(Vec3{N(rng), N(rng), N(rng)});
        const double ang = 2.0 * std::uniform_real_distribution<double>()(rng);
        std::vector<Vec3> verts;
        for (const Vec3& v : m.vertices()) verts.push_back(rotate_about(v, axis, ang));
        Mesh m2(verts, m.faces());
        VertexStar s2 = star_of(m2);
        InfiniteStar V2 = infinite_star(s2);
        const Vec3 n2 = rotate_about({0, 0, 1}, axis, ang);
        CHECK(plane_section(V2, n2 * 0.05, n2).classification == base);
    }
}
