#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polysmooth/sphere.hpp"

using namespace polysmooth;

namespace {

SphericalPolygon octant() {
    return {{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
}

SphericalPolygon saddle_image() {
    // Gauss image of the standard saddle star, clockwise
    const double s = 1.0 / std::sqrt(3.0);
    return {{Vec3{-s, s, s}, Vec3{s, s, s}, Vec3{s, -s, s}, Vec3{-s, -s, s}}};
}

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> N;
    return normalized({N(rng), N(rng), N(rng)});
}

Vec3 random_rotation_of(const Vec3& v, const Vec3& axis, double angle) {
    return rotate_about(v, axis, angle);
}

// random star-shaped spherical polygon around a pole, possibly non-convex
SphericalPolygon random_hemispherical_polygon(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const Vec3 pole = random_unit(rng);
    const Vec3 e1 = any_orthogonal(pole);
    const Vec3 e2 = cross(pole, e1);
    SphericalPolygon p;
    for (int i = 0; i < n; ++i) {
        const double az = kTwoPi * (i + 0.8 * U(rng)) / n;
        const double colat = 0.15 + 1.1 * U(rng);  // stays well inside the hemisphere
        const Vec3 dir = e1 * std::cos(az) + e2 * std::sin(az);
        p.vertices.push_back(normalized(pole * std::cos(colat) + dir * std::sin(colat)));
    }
    return p;
}

// independent oracle: winding difference by signed crossings of a test arc
// from a point far outside the polygon's hemisphere neighborhood
int winding_oracle(const SphericalPolygon& poly, const Vec3& xi, const Vec3& outside) {
    // signed crossing count of the arc outside -> xi over the polygon arcs
    int w = 0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec3& a = poly[i];
        const Vec3& b = poly[i + 1];
        const ArcCrossing c = arcs_cross(outside, xi, a, b);
        if (!c.crosses) continue;
        // crossing sign: does the polygon arc cross the test arc left-to-right?
        const Vec3 q0 = cross(cross(outside, xi), cross(a, b));
        Vec3 q = normalized(q0);
        if (!point_on_arc(a, b, q) || !point_on_arc(outside, xi, q)) q = -q;
        // the test arc heads toward xi: a polygon arc passing from its left
        // to its right winds once counterclockwise around xi
        const Vec3 t_poly = geodesic_tangent(q, b);
        const Vec3 t_test = geodesic_tangent(q, xi);
        w += dot(cross(t_test, t_poly), q) > 0 ? -1 : 1;
    }
    return w;
}

}  // namespace

TEST_CASE("signed area of the octant triangle") {
    CHECK(signed_area(octant(), 1) == Catch::Approx(kPi / 2).margin(1e-12));
}

TEST_CASE("signed area of the clockwise saddle image") {
    CHECK(signed_area(saddle_image(), -1) == Catch::Approx(-2 * kPi / 3).margin(1e-12));
}

TEST_CASE("reversal negates the signed area exactly") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        SphericalPolygon p = random_hemispherical_polygon(rng, 3 + int(rng() % 6));
        if (!is_simple(p).simple) continue;
        SphericalPolygon r = p;
        std::reverse(r.vertices.begin(), r.vertices.end());
        CHECK(signed_area(r, -1) == -signed_area(p, 1));
    }
}

TEST_CASE("signed area is rotation invariant and negates under reflection") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 25; ++t) {
        SphericalPolygon p = random_hemispherical_polygon(rng, 4 + int(rng() % 4));
        if (!is_simple(p).simple) continue;
        const double a0 = signed_area(p, 1);
        const Vec3 axis = random_unit(rng);
        const double ang = kTwoPi * std::uniform_real_distribution<double>()(rng);
        SphericalPolygon q, m;
        for (const Vec3& v : p.vertices) {
            q.vertices.push_back(random_rotation_of(v, axis, ang));
            m.vertices.push_back({v.x, v.y, -v.z});  // reflection
        }
        CHECK(signed_area(q, 1) == Catch::Approx(a0).margin(1e-10));
        CHECK(signed_area(m, -1) == Catch::Approx(-a0).margin(1e-12));
    }
}

TEST_CASE("simplicity: convex quad, figure eight, shared endpoints") {
    SphericalPolygon quad = saddle_image();
    CHECK(is_simple(quad).simple);

    // figure eight: two interleaved lobes crossing between vertices
    SphericalPolygon eight;
    const double c = 0.25;
    eight.vertices = {normalized({1, 0, 1}),  normalized({-1, c, 1}), normalized({1, 2 * c, 1}),
                      normalized({-1, 3 * c, 1})};
    const SimplicityResult r = is_simple(eight);
    CHECK_FALSE(r.simple);
    CHECK(r.arc_a >= 0);
    CHECK(r.arc_b > r.arc_a);

    // consecutive arcs sharing an endpoint are fine
    CHECK(is_simple(octant()).simple);
}

TEST_CASE("winding numbers at interior, exterior, antipode") {
    const Vec3 c = normalized({1, 1, 1});
    CHECK(winding_number(octant(), c) == 1);
    CHECK(winding_number(octant(), -c) == 0);
    CHECK(winding_number(saddle_image(), {0, 0, 1}) == -1);
}

TEST_CASE("winding against the crossing-count oracle") {
    std::mt19937_64 rng(99);
    int tested = 0;
    while (tested < 1000) {
        SphericalPolygon p = random_hemispherical_polygon(rng, 3 + int(rng() % 6));
        if (!is_simple(p).simple) continue;
        const Vec3 xi = random_unit(rng);
        Vec3 pole{0, 0, 0};
        for (const Vec3& v : p.vertices) pole += v;
        pole = normalized(pole);
        const Vec3 outside = -pole;  // antipode of the mean is far outside
        int w;
        try {
            w = winding_number(p, xi);
        } catch (const PointOnBoundaryError&) {
            continue;
        }
        int o;
        try {
            o = winding_oracle(p, xi, outside);
        } catch (const GeometryError&) {
            continue;
        }
        CHECK(w == o);
        CHECK((w == 0 || w == 1 || w == -1));
        ++tested;
    }
}

TEST_CASE("hemisphere pole feasibility") {
    const std::optional<Vec3> p1 = hemisphere_pole({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
    REQUIRE(p1.has_value());
    CHECK(dot(*p1, {1, 0, 0}) > 0);
    CHECK(dot(*p1, {0, 1, 0}) > 0);
    CHECK(dot(*p1, {0, 0, 1}) > 0);

    CHECK_FALSE(hemisphere_pole({Vec3{1, 0, 0}, Vec3{-1, 0, 0}, Vec3{0, 1, 0}}).has_value());

    const double s = 1.0 / std::sqrt(3.0);
    const std::optional<Vec3> p3 =
        hemisphere_pole({Vec3{s, s, s}, Vec3{-s, s, s}, Vec3{s, -s, s}, Vec3{-s, -s, s}});
    REQUIRE(p3.has_value());
    CHECK(norm(*p3 - Vec3{0, 0, 1}) < 1e-9);
}

TEST_CASE("gnomonic chart round trip") {
    std::mt19937_64 rng(5);
    const Vec3 pole = random_unit(rng);
    GnomonicChart chart(pole);
    for (int t = 0; t < 200; ++t) {
        Vec3 p = random_unit(rng);
        if (dot(p, pole) <= 0.1) continue;
        CHECK(norm(chart.to_sphere(chart.to_plane(p)) - p) < 1e-12);
    }
}

TEST_CASE("kernel of a convex polygon is its interior") {
    SphericalPolygon p = octant();
    const SphericalRegionKernel ker = star_shape_kernel(p);
    REQUIRE(ker.has_interior());
    // kernel representative sees all vertices and equals an interior point
    const std::optional<Vec3> rep = kernel_representative(ker);
    REQUIRE(rep.has_value());
    CHECK(winding_number(p, *rep) == 1);
    // every original vertex is on the kernel boundary (the polygon is its own kernel)
    for (const Vec3& v : p.vertices) {
        double best = 1e300;
        for (const Vec3& k : ker.boundary) best = std::min(best, norm(k - v));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("kernel point visibility on random polygons") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int tested = 0;
    while (tested < 200) {
        SphericalPolygon p = random_hemispherical_polygon(rng, 4 + int(rng() % 5));
        if (!is_simple(p).simple) continue;
        SphericalRegionKernel ker;
        try {
            ker = star_shape_kernel(p);
        } catch (const GeometryError&) {
            continue;
        }
        ++tested;
        if (!ker.has_interior()) continue;
        const std::optional<Vec3> k = kernel_representative(ker);
        REQUIRE(k.has_value());
        // the kernel point sees every vertex: sampled points of each connecting
        // arc stay inside the polygon
        const int orientation = signed_area(p, 1) <= kTwoPi ? 1 : -1;
        for (const Vec3& v : p.vertices) {
            const double theta = arc_length(*k, v);
            const Vec3 w = geodesic_tangent(*k, v);
            for (int s = 1; s < 24; ++s) {
                const double t = theta * s / 24.0 * 0.98;
                const Vec3 x = *k * std::cos(t) + w * std::sin(t);
                CHECK(region_contains(p, orientation, x));
            }
        }
        // a non-kernel interior point fails for at least one vertex
        GnomonicChart chart(ker.pole);
        for (int probe = 0; probe < 40; ++probe) {
            const Vec3 x = random_unit(rng);
            if (dot(x, ker.pole) < 0.2) continue;
            bool inside_poly;
            try {
                inside_poly = winding_number(p, x) != 0;
            } catch (const PointOnBoundaryError&) {
                continue;
            }
            if (!inside_poly || kernel_contains(ker, x)) continue;
            bool sees_all = true;
            for (const Vec3& v : p.vertices) {
                const double theta = arc_length(x, v);
                if (theta < 1e-9) continue;
                const Vec3 w = geodesic_tangent(x, v);
                for (int s = 1; s < 48 && sees_all; ++s) {
                    const double t = theta * s / 48.0 * 0.98;
                    const Vec3 y = x * std::cos(t) + w * std::sin(t);
                    if (!region_contains(p, orientation, y)) sees_all = false;
                }
                if (!sees_all) break;
            }
            CHECK_FALSE(sees_all);
            break;
        }
    }
}

TEST_CASE("region membership handles antipodal pairs") {
    // a polygon enclosing a near-hemisphere plus both polar caps
    SphericalPolygon p;
    auto sphp = [](double az, double el) {
        const double a = az * kPi / 180, e = el * kPi / 180;
        return Vec3{std::cos(e) * std::cos(a), std::cos(e) * std::sin(a), std::sin(e)};
    };
    p.vertices = {sphp(0, 70), sphp(90, 84), sphp(180, 70), sphp(180, -70), sphp(90, -84), sphp(0, -70)};
    REQUIRE(is_simple(p).simple);
    const bool plus = region_contains(p, 1, {0, 0, 1});
    const bool minus = region_contains(p, 1, {0, 0, -1});
    CHECK(plus == minus);  // the poles are on the same side of this curve
}
