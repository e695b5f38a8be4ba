#pragma once

// Deterministic generators for the analytic test surfaces used by the test
// suites and the CLI.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "polysmooth/errors.hpp"
#include "polysmooth/mesh.hpp"

namespace polysmooth {
namespace fixtures {

/// Closed unit cube, outward orientation.
inline Mesh cube() {
    std::vector<Vec3> V = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                           {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    std::vector<std::vector<int>> F = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                       {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
    return Mesh(std::move(V), std::move(F));
}

/// Corner of a cube: three unit squares around one interior vertex.
inline Mesh cube_corner() {
    std::vector<Vec3> V = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                           {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    std::vector<std::vector<int>> F = {{0, 2, 4, 1}, {0, 3, 5, 2}, {0, 1, 6, 3}};
    return Mesh(std::move(V), std::move(F));
}

/// Apex of a regular tetrahedron: three equilateral triangles.
inline Mesh tetra_apex() {
    const double s = 1.0;
    std::vector<Vec3> base = {{s, s, -s}, {-s, -s, -s}, {s, -s, s}, {-s, s, s}};
    // apex = base[0]; faces of the tetrahedron incident to it, outward
    std::vector<Vec3> V = {base[0], base[1], base[2], base[3]};
    std::vector<std::vector<int>> F = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}};
    return Mesh(std::move(V), std::move(F));
}

/// The 4-valent saddle star with neighbors (1,0,h),(0,1,-h),(-1,0,h),(0,-1,-h).
inline Mesh saddle_star(double h = 1.0) {
    std::vector<Vec3> V = {{0, 0, 0}, {1, 0, h}, {0, 1, -h}, {-1, 0, h}, {0, -1, -h}};
    std::vector<std::vector<int>> F = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}};
    return Mesh(std::move(V), std::move(F));
}

/// 6-valent star sampled on z = h(x^2 - y^2).
inline Mesh hex_saddle(double h = 1.0) {
    std::vector<Vec3> V = {{0, 0, 0}};
    std::vector<std::vector<int>> F;
    for (int j = 0; j < 6; ++j) {
        const double th = kPi / 3.0 * j;
        const double x = std::cos(th), y = std::sin(th);
        V.push_back({x, y, h * (x * x - y * y)});
    }
    for (int j = 0; j < 6; ++j) F.push_back({0, 1 + j, 1 + (j + 1) % 6});
    return Mesh(std::move(V), std::move(F));
}

/// Monkey-saddle patch: a central planar triangle on the zero set of
/// z = Re((x+iy)^3), surrounded by one ring sampled on that cubic. The
/// central face's Gauss-image angle sum is 4*pi.
inline Mesh monkey_star(double r0 = 0.55, double r1 = 1.45, double height = 0.8) {
    std::vector<Vec3> V;
    std::vector<std::vector<int>> F;
    // inner triangle on directions where cos(3 theta) = 0
    for (int i = 0; i < 3; ++i) {
        const double th = kPi / 6.0 + 2.0 * kPi / 3.0 * i;
        V.push_back({r0 * std::cos(th), r0 * std::sin(th), 0.0});
    }
    // outer hexagon on the peaks and valleys
    for (int j = 0; j < 6; ++j) {
        const double th = kPi / 3.0 * j;
        const double z = height * r1 * r1 * r1 * std::cos(3.0 * th);
        V.push_back({r1 * std::cos(th), r1 * std::sin(th), z});
    }
    F.push_back({0, 1, 2});
    for (int i = 0; i < 3; ++i) {
        const int o0 = 3 + 2 * i;  // outer neighbors at 60 deg steps around inner i
        const int o1 = 3 + (2 * i + 1) % 6;
        const int o2 = 3 + (2 * i + 2) % 6;
        const int vi = i;
        const int vn = (i + 1) % 3;
        F.push_back({vi, o0, o1});
        F.push_back({vi, o1, o2});
        F.push_back({vi, o2, vn});
    }
    return Mesh(std::move(V), std::move(F));
}

/// Triangulated graph of z = h(x^2 - y^2) over a two-parameter lattice:
/// basis u1 = R(rot) (spacing, 0) and u2 = R(rot) (shear, aspect) spacing,
/// so the triangle shape and its alignment with the surface rulings x = +-y
/// can be controlled independently.
inline Mesh graph_lattice(double rot, int n, double h, double spacing = 1.0, double aspect = 1.0,
                          double shear = 0.5) {
    if (n < 2) throw BadParametersError("lattice needs n >= 2");
    const double c = std::cos(rot), s = std::sin(rot);
    std::vector<Vec3> V;
    std::vector<std::vector<int>> F;
    std::map<std::pair<int, int>, int> id;
    const double row_h = std::sqrt(3.0) / 2.0 * aspect * spacing;
    for (int j = -n; j <= n; ++j) {
        for (int i = -n; i <= n; ++i) {
            const double ux = (i + shear * j) * spacing;
            const double uy = j * row_h;
            const double x = c * ux - s * uy;
            const double y = s * ux + c * uy;
            id[{i, j}] = int(V.size());
            V.push_back({x, y, h * (x * x - y * y)});
        }
    }
    for (int j = -n; j < n; ++j) {
        for (int i = -n; i < n; ++i) {
            const int a = id[{i, j}], b = id[{i + 1, j}];
            const int cidx = id[{i, j + 1}], d = id[{i + 1, j + 1}];
            F.push_back({a, b, cidx});
            F.push_back({b, d, cidx});
        }
    }
    return Mesh(std::move(V), std::move(F));
}

enum class Tiling { A, B, C };

/// The three tilings of the plane lifted to z = h(x^2 - y^2): (a) one edge
/// family exactly along the ruling x = y (border case; the cross lattice
/// direction is sheared off the other ruling so adjacent faces stay
/// non-coplanar), (b) a lattice squashed across the rulings so the interior
/// Gauss images self-intersect, (c) the equilateral lattice aligned with the
/// axes, whose Gauss images stay simple.
inline Mesh graph_mesh(Tiling t, int n, double h = 1.0) {
    switch (t) {
        case Tiling::A: return graph_lattice(kPi / 4.0, n, h, 1.0, 0.95, 0.35);
        case Tiling::B: return graph_lattice(kPi / 2.0, n, h, 1.0, 1.0, 0.5);
        case Tiling::C: return graph_lattice(0.0, n, h, 1.0, 1.0, 0.5);
    }
    throw BadParametersError("unknown tiling");
}

/// Valence-3 mesh with planar faces tangent to z = h(x^2 - y^2): faces are
/// pieces of the tangent planes at the lattice samples, vertices are the
/// intersections of three adjacent tangent planes (hexagonal combinatorics).
inline Mesh hex_graph_mesh(int n, double h = 1.0, double spacing = 1.0) {
    if (n < 2) throw BadParametersError("lattice needs n >= 2");
    // tangent plane at sample (x0,y0): z = h(2 x0 x - 2 y0 y - x0^2 + y0^2)
    auto plane = [&](double x0, double y0) {
        return std::array<double, 3>{2.0 * h * x0, -2.0 * h * y0, -h * (x0 * x0 - y0 * y0)};
    };
    auto intersect3 = [&](std::array<double, 3> p, std::array<double, 3> q, std::array<double, 3> r) {
        // z = a x + b y + c for each; solve the two differences for (x, y)
        const double a1 = p[0] - q[0], b1 = p[1] - q[1], c1 = q[2] - p[2];
        const double a2 = p[0] - r[0], b2 = p[1] - r[1], c2 = r[2] - p[2];
        const double det = a1 * b2 - a2 * b1;
        if (std::abs(det) < 1e-14) throw BadParametersError("parallel tangent planes");
        const double x = (c1 * b2 - c2 * b1) / det;
        const double y = (a1 * c2 - a2 * c1) / det;
        return Vec3{x, y, p[0] * x + p[1] * y + p[2]};
    };
    const double row_h = std::sqrt(3.0) / 2.0 * spacing;
    auto sample = [&](int i, int j) {
        return std::pair<double, double>{(i + 0.5 * j) * spacing, j * row_h};
    };
    // lattice triangles: up-triangles (i,j),(i+1,j),(i,j+1); down (i+1,j),(i+1,j+1),(i,j+1)
    std::map<std::array<int, 3>, int> tri_id;  // (i, j, up?) -> mesh vertex
    std::vector<Vec3> V;
    auto vertex_of = [&](int i, int j, int up) {
        const std::array<int, 3> key{i, j, up};
        auto it = tri_id.find(key);
        if (it != tri_id.end()) return it->second;
        auto [x0, y0] = sample(i, j);
        auto [x1, y1] = sample(i + 1, j);
        auto [x2, y2] = sample(i, j + 1);
        auto [x3, y3] = sample(i + 1, j + 1);
        Vec3 p = up ? intersect3(plane(x0, y0), plane(x1, y1), plane(x2, y2))
                    : intersect3(plane(x1, y1), plane(x3, y3), plane(x2, y2));
        const int idx = int(V.size());
        V.push_back(p);
        tri_id[key] = idx;
        return idx;
    };
    std::vector<std::vector<int>> F;
    // one hexagonal face per interior lattice sample: the six incident
    // lattice triangles in ccw order
    for (int j = -n + 1; j < n; ++j) {
        for (int i = -n + 1; i < n; ++i) {
            if (std::abs(i) + std::abs(j) > 2 * n - 2) continue;
            std::vector<int> cyc = {
                vertex_of(i, j, 1),          // up (i,j)
                vertex_of(i - 1, j, 0),      // down (i-1,j)
                vertex_of(i - 1, j, 1),      // up (i-1,j)
                vertex_of(i - 1, j - 1, 0),  // down (i-1,j-1)
                vertex_of(i, j - 1, 1),      // up (i,j-1)
                vertex_of(i, j - 1, 0),      // down (i,j-1)
            };
            F.push_back(cyc);
        }
    }
    return Mesh(std::move(V), std::move(F));
}

/// Closed triangulated torus, outward orientation. Rows are staggered by half
/// a step (the straight grid yields exactly planar quads, hence coplanar
/// triangle pairs); nu must be even so the stagger closes up.
inline Mesh torus(double R = 2.0, double r = 1.0, int nu = 12, int nv = 12) {
    if (nu < 4 || nv < 3 || nu % 2 != 0) throw BadParametersError("torus needs even nu >= 4, nv >= 3");
    std::vector<Vec3> V;
    std::vector<std::vector<int>> F;
    for (int j = 0; j < nv; ++j) {
        // quarter-step poloidal shift keeps vertices off the parabolic
        // circles and breaks the point symmetry that would make the triangle
        // pairs across the equators coplanar
        const double ph = kTwoPi * (j + 0.25) / nv;
        for (int i = 0; i < nu; ++i) {
            const double th = kTwoPi * (i + 0.5 * j) / nu;
            V.push_back({(R + r * std::cos(ph)) * std::cos(th),
                         (R + r * std::cos(ph)) * std::sin(th), r * std::sin(ph)});
        }
    }
    auto vid = [&](int i, int j) {
        int jw = j % nv;
        if (jw < 0) jw += nv;
        const int wraps = (j - jw) / nv;
        int iw = (i + wraps * (nu / 2)) % nu;
        if (iw < 0) iw += nu;
        return jw * nu + iw;
    };
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            // row j+1 vertex i sits angularly between row-j vertices i and i+1
            F.push_back({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
            F.push_back({vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    return Mesh(std::move(V), std::move(F));
}

/// Convex cap: a paraboloid z = -c(x^2+y^2) on a polar grid (m spokes,
/// `rings` rings, staggered half a step per ring); all interior vertices are
/// convex corners. Orientation has normals pointing up (+z side outward).
inline Mesh convex_cap(int rings = 3, double c = 0.5, int m = 8) {
    if (rings < 1 || m < 3) throw BadParametersError("cap needs >= 1 ring and >= 3 spokes");
    std::vector<Vec3> V = {{0, 0, 0}};
    std::vector<std::vector<int>> F;
    auto vid = [&](int k, int s) { return 1 + (k - 1) * m + ((s % m + m) % m); };
    for (int k = 1; k <= rings; ++k)
        for (int s = 0; s < m; ++s) {
            const double th = kTwoPi * s / m + (k % 2 == 0 ? kPi / m : 0.0);
            const double rad = double(k);
            V.push_back({rad * std::cos(th), rad * std::sin(th), -c * rad * rad});
        }
    for (int s = 0; s < m; ++s) F.push_back({0, vid(1, s), vid(1, s + 1)});
    for (int k = 1; k < rings; ++k)
        for (int s = 0; s < m; ++s) {
            if (k % 2 == 1) {
                // outer ring staggered: outer s sits between inner s and s+1
                F.push_back({vid(k, s), vid(k + 1, s), vid(k, s + 1)});
                F.push_back({vid(k, s + 1), vid(k + 1, s), vid(k + 1, s + 1)});
            } else {
                // inner ring staggered: outer s+1 sits between inner s and s+1
                F.push_back({vid(k, s), vid(k + 1, s + 1), vid(k, s + 1)});
                F.push_back({vid(k, s), vid(k + 1, s), vid(k + 1, s + 1)});
            }
        }
    return Mesh(std::move(V), std::move(F));
}

namespace detail {

inline Vec3 sph(double az_deg, double el_deg, double len = 1.0) {
    const double az = az_deg * kPi / 180.0, el = el_deg * kPi / 180.0;
    return Vec3{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)} * len;
}

/// Tip of a reflex dart face spanning the long way between two edge rays.
inline Vec3 dart_tip(const Vec3& a, const Vec3& b, double len) {
    return normalized(-(normalized(a) + normalized(b))) * len;
}

}  // namespace detail

/// 5-valent star whose Gauss image is a spherical pseudo-digon: two reflex
/// dart faces interleaved with triangles. Its image is simple but not
/// contained in any open hemisphere.
inline Mesh pseudo_digon_star() {
    const double az[5] = {0, 161.3, 197.0, 361.5, 386.2};
    const double el[5] = {32.9, -15.0, -0.4, 2.1, 34.4};
    const double rad[5] = {1.02, 0.81, 0.97, 0.99, 1.33};
    std::vector<Vec3> V = {{0, 0, 0}};
    for (int k = 0; k < 5; ++k) V.push_back(detail::sph(az[k], el[k], rad[k]));
    V.push_back(detail::dart_tip(V[1], V[2], 1.39));
    V.push_back(detail::dart_tip(V[3], V[4], 1.10));
    std::vector<std::vector<int>> F = {{0, 1, 6, 2}, {0, 2, 3}, {0, 3, 7, 4}, {0, 4, 5}, {0, 5, 1}};
    return Mesh(std::move(V), std::move(F));
}

/// 6-valent star with one reflex non-inflection face (a planar dart spanning
/// 200 degrees) and two inflection faces: a smooth pseudo-triangle vertex of
/// the degenerate kind, whose tangent sections have a straight branch and
/// whose asymptotic directions contain exactly one collinear pair.
inline Mesh pseudo_tri_b_star() {
    const double span = 200.0, dart = 1.2, r1 = 1.0, r2 = 1.0, h1 = 15.0, h2 = 30.0;
    const double mid = (span + 360.0) / 2;
    const double off = (360.0 - span) / 5.0;
    std::vector<Vec3> V = {
        {0, 0, 0},
        detail::sph(0, 0, 1.0),
        detail::sph(span / 2, 0, dart),
        detail::sph(span, 0, 1.0),
        detail::sph(span + off, h1, r1),
        detail::sph(mid - 0.5 * off, h2, r2),
        detail::sph(mid + 0.5 * off, h2, r2),
        detail::sph(360.0 - off, h1, r1),
    };
    std::vector<std::vector<int>> F = {{0, 1, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                       {0, 5, 6},    {0, 6, 7}, {0, 7, 1}};
    return Mesh(std::move(V), std::move(F));
}

/// 6-valent star (one reflex dart) whose simple Gauss image encloses an
/// antipodal pair: planes orthogonal to e_z near the vertex cut the infinite
/// star in three components, and the Banchoff index at e_z is -2.
inline Mesh antipodal_star() {
    std::vector<Vec3> V = {
        {0, 0, 0},
        {0.10407941655032397, 1.0534117694452954, -0.063105761982506087},
        {-0.51426795906506939, -0.89442981811021727, -0.11915107232122145},
        {-0.49397244959600639, 1.1206621709521547, 0.12984045755020426},
        {0.043537484310098483, 1.0634457979614216, -0.067089780809971536},
        {-0.11131546981436731, -0.873085144533848, 0.020407341159876274},
        {-0.0078741814141409863, -1.02850312236671, 0.02397617642114588},
        {0.90046471322688293, -0.29983648725542744, 0.39518286108198869},
    };
    std::vector<std::vector<int>> F = {{0, 1, 7, 2}, {0, 2, 3}, {0, 3, 4},
                                       {0, 4, 5},    {0, 5, 6}, {0, 6, 1}};
    return Mesh(std::move(V), std::move(F));
}

/// 6-valent pseudo-quadrilateral star whose simple, hemisphere-contained
/// Gauss image is not star-shaped (empty kernel). Sections orthogonal to e_z
/// (inside the image, antipode outside) contain an inflection edge on one
/// side instead of forming a discrete hyperbola.
inline Mesh nonstar_quad_star() {
    std::vector<Vec3> V = {
        {0, 0, 0},
        {1.3690456522340007, 0.11876768337166534, -0.6561600070577146},
        {0.30705937577381032, 0.40320552738582416, -1.007421709023735},
        {-0.85053443816231611, 0.7340623560102425, -0.74629734103357992},
        {-1.1234161279879162, -0.029538152571374064, 0.28745024337995462},
        {-0.24966231836693067, -1.2958803165398458, -1.2619140019955837},
        {0.22038737769760564, -0.84415784663008353, 1.2389990811102827},
    };
    std::vector<std::vector<int>> F;
    for (int k = 0; k < 6; ++k) F.push_back({0, 1 + k, 1 + (k + 1) % 6});
    return Mesh(std::move(V), std::move(F));
}

/// A random triangulated star of the given valence: sorted jittered azimuths,
/// jittered radii and heights. Used by the property-test corpora.
inline Mesh random_star(std::uint64_t seed, int valence_min = 3, int valence_max = 9) {
    std::mt19937_64 rng(seed);
    auto U = [&](double a, double b) { return a + (b - a) * std::uniform_real_distribution<double>()(rng); };
    const int n = valence_min + int(rng() % std::uint64_t(valence_max - valence_min + 1));
    const double height = U(0.1, 1.2);
    std::vector<Vec3> V = {{0, 0, 0}};
    for (int k = 0; k < n; ++k) {
        const double az = 360.0 * k / n + U(-0.35, 0.35) * 360.0 / n;
        const double r = U(0.5, 1.5);
        V.push_back({r * std::cos(az * kPi / 180.0), r * std::sin(az * kPi / 180.0), U(-height, height)});
    }
    std::vector<std::vector<int>> F;
    for (int k = 0; k < n; ++k) F.push_back({0, 1 + k, 1 + (k + 1) % n});
    return Mesh(std::move(V), std::move(F));
}

// -- named dispatch ------------------------------------------------------------

struct FixtureSpec {
    std::string name;
    std::map<std::string, double> params;
    std::uint64_t seed{0};

    double get(const std::string& key, double dflt) const {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    }
};

/// Deterministic dispatch: the same spec always produces the same mesh.
inline Mesh generate(const FixtureSpec& spec) {
    const std::string& n = spec.name;
    if (n == "cube") return cube();
    if (n == "cube_corner") return cube_corner();
    if (n == "tetra_apex") return tetra_apex();
    if (n == "saddle_star") return saddle_star(spec.get("h", 1.0));
    if (n == "hex_saddle") return hex_saddle(spec.get("h", 1.0));
    if (n == "monkey_star")
        return monkey_star(spec.get("r0", 0.55), spec.get("r1", 1.45), spec.get("height", 0.8));
    if (n == "graph_mesh") {
        const int t = int(spec.get("tiling", 2));
        const Tiling til = t == 0 ? Tiling::A : (t == 1 ? Tiling::B : Tiling::C);
        return graph_mesh(til, int(spec.get("n", 8)), spec.get("h", 1.0));
    }
    if (n == "hex_graph_mesh") return hex_graph_mesh(int(spec.get("n", 4)), spec.get("h", 1.0));
    if (n == "torus")
        return torus(spec.get("R", 2.0), spec.get("r", 1.0), int(spec.get("nu", 12)),
                     int(spec.get("nv", 12)));
    if (n == "convex_cap")
        return convex_cap(int(spec.get("rings", 3)), spec.get("c", 0.5), int(spec.get("m", 8)));
    if (n == "pseudo_digon_star") return pseudo_digon_star();
    if (n == "pseudo_tri_b_star") return pseudo_tri_b_star();
    if (n == "antipodal_star") return antipodal_star();
    if (n == "nonstar_quad_star") return nonstar_quad_star();
    if (n == "random_star") return random_star(spec.seed);
    throw BadParametersError("unknown fixture: " + n);
}

inline std::vector<std::string> fixture_names() {
    return {"cube",        "cube_corner",     "tetra_apex",        "saddle_star",
            "hex_saddle",  "monkey_star",     "graph_mesh",        "hex_graph_mesh",
            "torus",       "convex_cap",      "pseudo_digon_star", "pseudo_tri_b_star",
            "antipodal_star", "nonstar_quad_star", "random_star"};
}

}  // namespace fixtures
}  // namespace polysmooth
