#pragma once

// Polygonal-mesh core: storage, halfedge connectivity, OBJ/OFF parsing and
// export, validation, oriented vertex stars, and face geometry. The mesh is
// immutable after construction; all queries are read-only.

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polysmooth/errors.hpp"
#include "polysmooth/planar.hpp"
#include "polysmooth/sphere.hpp"
#include "polysmooth/vec.hpp"

namespace polysmooth {

enum class MeshFormat { OBJ, OFF };

struct Halfedge {
    int origin{-1};
    int face{-1};
    int next{-1};
    int prev{-1};
    int twin{-1};
};

struct FacePlane {
    Vec3 point;    // centroid
    Vec3 normal;   // unit, consistent with the face winding
    double residual{0};  // max vertex offset from the plane
};

struct MeshOptions {
    // Relative planarity tolerance: eps_planar = 1e-8 * bounding-box diagonal.
    double planarity_rel{1e-8};
    // Adjacent faces must differ in normal direction by more than this (rad).
    double coplanar_tol{1e-9};
    // Interior face angles must stay this far from pi (rad).
    double straight_angle_tol{1e-9};
    bool validate{true};
};

class Mesh {
public:
    Mesh() = default;

    Mesh(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces, MeshOptions opts = {})
        : vertices_(std::move(vertices)), faces_(std::move(faces)), opts_(opts) {
        build();
    }

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const Vec3& vertex(int v) const { return vertices_[size_t(v)]; }
    const std::vector<int>& face(int f) const { return faces_[size_t(f)]; }
    int vertex_count() const { return int(vertices_.size()); }
    int face_count() const { return int(faces_.size()); }
    int edge_count() const { return edge_count_; }

    bool vertex_is_boundary(int v) const { return vertex_boundary_[size_t(v)]; }
    bool face_touches_boundary(int f) const {
        for (int v : faces_[size_t(f)])
            if (vertex_boundary_[size_t(v)]) return true;
        return false;
    }

    const std::vector<Halfedge>& halfedges() const { return halfedges_; }
    double bbox_diagonal() const { return bbox_diag_; }

    /// Unit normal from Newell's method, consistent with the face winding.
    Vec3 face_normal(int f) const {
        const std::vector<int>& cyc = faces_[size_t(f)];
        Vec3 n{0, 0, 0};
        const size_t m = cyc.size();
        for (size_t i = 0; i < m; ++i) {
            const Vec3& p = vertices_[size_t(cyc[i])];
            const Vec3& q = vertices_[size_t(cyc[(i + 1) % m])];
            n.x += (p.y - q.y) * (p.z + q.z);
            n.y += (p.z - q.z) * (p.x + q.x);
            n.z += (p.x - q.x) * (p.y + q.y);
        }
        return normalized(n);
    }

    Vec3 face_centroid(int f) const {
        Vec3 c{0, 0, 0};
        for (int v : faces_[size_t(f)]) c += vertices_[size_t(v)];
        return c / double(faces_[size_t(f)].size());
    }

    /// Least-squares best-fit plane of the face, normal aligned with the
    /// winding, plus the max vertex offset as residual.
    FacePlane face_plane(int f) const {
        const std::vector<int>& cyc = faces_[size_t(f)];
        const Vec3 c = face_centroid(f);
        double cov[3][3] = {};
        for (int vi : cyc) {
            const Vec3 d = vertices_[size_t(vi)] - c;
            const double dv[3] = {d.x, d.y, d.z};
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s) cov[r][s] += dv[r] * dv[s];
        }
        Vec3 n = smallest_eigenvector(cov);
        const Vec3 newell = face_normal(f);
        if (dot(n, newell) < 0) n = -n;
        double res = 0;
        for (int vi : cyc) res = std::max(res, std::abs(dot(vertices_[size_t(vi)] - c, n)));
        return {c, n, res};
    }

    /// Interior angle of face f at vertex v, in (0, 2pi); reflex angles come
    /// out above pi. Measured in the face plane with the winding orientation.
    double corner_angle(int f, int v) const {
        const std::vector<int>& cyc = faces_[size_t(f)];
        const size_t m = cyc.size();
        size_t idx = m;
        for (size_t i = 0; i < m; ++i)
            if (cyc[i] == v) { idx = i; break; }
        if (idx == m) throw TopologyError("vertex not incident to face");
        const Vec3& a = vertices_[size_t(cyc[(idx + m - 1) % m])];
        const Vec3& p = vertices_[size_t(cyc[idx])];
        const Vec3& b = vertices_[size_t(cyc[(idx + 1) % m])];
        const Vec3 n = face_normal(f);
        const Vec3 d1 = p - a;
        const Vec3 d2 = b - p;
        const double turn = std::atan2(dot(cross(d1, d2), n), dot(d1, d2));
        return kPi - turn;
    }

    /// Best-fit plane plus the CCW 2D projection of the face cycle onto it.
    std::pair<FacePlane, std::vector<Vec2>> face_polygon(int f) const {
        const FacePlane pl = face_plane(f);
        if (opts_.validate && pl.residual > planarity_eps())
            throw GeometryError("face " + std::to_string(f) + " not planar within tolerance");
        const Vec3 e1 = any_orthogonal(pl.normal);
        const Vec3 e2 = cross(pl.normal, e1);
        std::vector<Vec2> poly;
        poly.reserve(faces_[size_t(f)].size());
        for (int v : faces_[size_t(f)]) {
            const Vec3 d = vertices_[size_t(v)] - pl.point;
            poly.push_back({dot(d, e1), dot(d, e2)});
        }
        return {pl, poly};
    }

    double planarity_eps() const { return opts_.planarity_rel * std::max(bbox_diag_, 1e-300); }

    /// One outgoing halfedge per vertex (-1 if isolated).
    int vertex_halfedge(int v) const { return vertex_he_[size_t(v)]; }

    int halfedge_of(int f, size_t corner) const { return face_he_start_[size_t(f)] + int(corner); }

    std::string to_obj() const {
        std::ostringstream os;
        for (const Vec3& v : vertices_)
            os << "v " << format_g17(v.x) << " " << format_g17(v.y) << " " << format_g17(v.z) << "\n";
        for (const std::vector<int>& f : faces_) {
            os << "f";
            for (int v : f) os << " " << (v + 1);
            os << "\n";
        }
        return os.str();
    }

    std::string to_off() const {
        std::ostringstream os;
        os << "OFF\n" << vertices_.size() << " " << faces_.size() << " " << edge_count_ << "\n";
        for (const Vec3& v : vertices_)
            os << format_g17(v.x) << " " << format_g17(v.y) << " " << format_g17(v.z) << "\n";
        for (const std::vector<int>& f : faces_) {
            os << f.size();
            for (int v : f) os << " " << v;
            os << "\n";
        }
        return os.str();
    }

private:
    static Vec3 smallest_eigenvector(double a[3][3]) {
        // Cyclic Jacobi on the symmetric 3x3 covariance matrix.
        double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int sweep = 0; sweep < 32; ++sweep) {
            double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
            if (off < 1e-300) break;
            for (int p = 0; p < 2; ++p)
                for (int q = p + 1; q < 3; ++q) {
                    if (std::abs(a[p][q]) < 1e-300) continue;
                    const double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
                    const double c = std::cos(theta), s = std::sin(theta);
                    for (int k = 0; k < 3; ++k) {
                        const double akp = a[k][p], akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for (int k = 0; k < 3; ++k) {
                        const double apk = a[p][k], aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                        const double vkp = v[k][p], vkq = v[k][q];
                        v[k][p] = c * vkp - s * vkq;
                        v[k][q] = s * vkp + c * vkq;
                    }
                }
        }
        int imin = 0;
        for (int i = 1; i < 3; ++i)
            if (a[i][i] < a[imin][imin]) imin = i;
        return normalized(Vec3{v[0][imin], v[1][imin], v[2][imin]});
    }

    void build() {
        const size_t nf = faces_.size();
        for (const std::vector<int>& f : faces_) {
            if (f.size() < 3) throw TopologyError("face with fewer than 3 vertices");
            for (int v : f)
                if (v < 0 || v >= int(vertices_.size()))
                    throw ParseError("face vertex index out of range: " + std::to_string(v));
            std::vector<int> s(f);
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw TopologyError("face repeats a vertex");
        }
        Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
        for (const Vec3& p : vertices_) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
        bbox_diag_ = vertices_.empty() ? 0.0 : norm(hi - lo);

        halfedges_.clear();
        face_he_start_.assign(nf, 0);
        int idx = 0;
        for (size_t f = 0; f < nf; ++f) {
            face_he_start_[f] = idx;
            idx += int(faces_[f].size());
        }
        halfedges_.resize(size_t(idx));
        std::map<std::pair<int, int>, int> directed;
        for (size_t f = 0; f < nf; ++f) {
            const std::vector<int>& cyc = faces_[f];
            const size_t m = cyc.size();
            for (size_t i = 0; i < m; ++i) {
                const int he = face_he_start_[f] + int(i);
                Halfedge& h = halfedges_[size_t(he)];
                h.origin = cyc[i];
                h.face = int(f);
                h.next = face_he_start_[f] + int((i + 1) % m);
                h.prev = face_he_start_[f] + int((i + m - 1) % m);
                const std::pair<int, int> key{cyc[i], cyc[(i + 1) % m]};
                if (!directed.emplace(key, he).second)
                    throw TopologyError("non-manifold or inconsistently wound edge (" +
                                        std::to_string(key.first) + "," + std::to_string(key.second) + ")");
            }
        }
        edge_count_ = 0;
        for (auto& [key, he] : directed) {
            auto it = directed.find({key.second, key.first});
            halfedges_[size_t(he)].twin = (it == directed.end()) ? -1 : it->second;
            if (key.first < key.second || it == directed.end()) ++edge_count_;
        }

        vertex_he_.assign(vertices_.size(), -1);
        vertex_boundary_.assign(vertices_.size(), false);
        std::vector<int> out_degree(vertices_.size(), 0);
        for (size_t h = 0; h < halfedges_.size(); ++h) {
            const Halfedge& he = halfedges_[h];
            ++out_degree[size_t(he.origin)];
            if (vertex_he_[size_t(he.origin)] < 0) vertex_he_[size_t(he.origin)] = int(h);
            if (he.twin < 0) {
                vertex_boundary_[size_t(he.origin)] = true;
                vertex_boundary_[size_t(halfedges_[size_t(he.next)].origin)] = true;
            }
        }
        // A closed interior vertex whose outgoing halfedges do not form a
        // single rotation cycle is a non-manifold (bowtie) vertex.
        for (size_t v = 0; v < vertices_.size(); ++v) {
            if (vertex_boundary_[v] || vertex_he_[v] < 0) continue;
            int count = 0;
            const int start = vertex_he_[v];
            int h = start;
            do {
                ++count;
                if (count > int(halfedges_.size())) throw TopologyError("corrupt connectivity");
                h = halfedges_[size_t(halfedges_[size_t(h)].prev)].twin;
            } while (h >= 0 && h != start);
            if (h < 0 || count != out_degree[v])
                throw TopologyError("non-manifold vertex " + std::to_string(v));
        }

        if (!opts_.validate) return;

        for (size_t f = 0; f < nf; ++f) {
            const FacePlane pl = face_plane(int(f));
            if (pl.residual > planarity_eps())
                throw GeometryError("face " + std::to_string(f) + " not planar: residual " +
                                    format_g17(pl.residual));
            const std::vector<int>& cyc = faces_[f];
            for (int v : cyc) {
                const double a = corner_angle(int(f), v);
                if (std::abs(a - kPi) < opts_.straight_angle_tol)
                    throw GeometryError("interior angle equals pi at vertex " + std::to_string(v) +
                                        " of face " + std::to_string(f));
            }
            // simple 2D cycle
            auto [plane, poly] = face_polygon(int(f));
            (void)plane;
            const size_t m = poly.size();
            for (size_t i = 0; i < m; ++i)
                for (size_t j = i + 1; j < m; ++j) {
                    if (j == i + 1 || (i == 0 && j == m - 1)) continue;
                    if (segments_properly_cross(poly[i], poly[(i + 1) % m], poly[j], poly[(j + 1) % m]))
                        throw GeometryError("face " + std::to_string(f) + " is not a simple polygon");
                }
        }
        for (const Halfedge& he : halfedges_) {
            if (he.twin < 0) continue;
            const int f1 = he.face;
            const int f2 = halfedges_[size_t(he.twin)].face;
            if (f1 < f2) {
                const Vec3 n1 = face_normal(f1);
                const Vec3 n2 = face_normal(f2);
                if (angle_between(n1, n2) < opts_.coplanar_tol)
                    throw GeometryError("adjacent faces " + std::to_string(f1) + " and " +
                                        std::to_string(f2) + " are coplanar");
            }
        }
    }

    static bool segments_properly_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
        const double d1 = cross2(b - a, c - a);
        const double d2 = cross2(b - a, d - a);
        const double d3 = cross2(d - c, a - c);
        const double d4 = cross2(d - c, b - c);
        return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
    }

    std::vector<Vec3> vertices_;
    std::vector<std::vector<int>> faces_;
    MeshOptions opts_;
    std::vector<Halfedge> halfedges_;
    std::vector<int> face_he_start_;
    std::vector<int> vertex_he_;
    std::vector<bool> vertex_boundary_;
    int edge_count_{0};
    double bbox_diag_{0};
};

// -- parsing -----------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline double parse_real(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + s + "'");
    }
}

inline long parse_int(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + s + "'");
    }
}

}  // namespace detail

inline Mesh load_obj(std::istream& in, MeshOptions opts = {}) {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::vector<std::string> tok = detail::split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "v") {
            if (tok.size() < 4) throw ParseError("line " + std::to_string(lineno) + ": malformed vertex");
            vertices.push_back({detail::parse_real(tok[1], lineno), detail::parse_real(tok[2], lineno),
                                detail::parse_real(tok[3], lineno)});
        } else if (tok[0] == "f") {
            if (tok.size() < 4) throw ParseError("line " + std::to_string(lineno) + ": face needs >= 3 vertices");
            std::vector<int> f;
            for (size_t i = 1; i < tok.size(); ++i) {
                std::string head = tok[i].substr(0, tok[i].find('/'));
                long v = detail::parse_int(head, lineno);
                if (v < 0) v = long(vertices.size()) + 1 + v;  // OBJ relative indexing
                if (v < 1 || v > long(vertices.size()))
                    throw ParseError("line " + std::to_string(lineno) + ": vertex index out of range");
                f.push_back(int(v - 1));
            }
            faces.push_back(std::move(f));
        }
        // other keywords (vn, vt, usemtl, ...) carry no geometry we analyze
    }
    return Mesh(std::move(vertices), std::move(faces), opts);
}

inline Mesh load_off(std::istream& in, MeshOptions opts = {}) {
    auto next_tokens = [&](int want) {
        std::string line;
        std::vector<std::string> toks;
        while (toks.size() < size_t(want)) {
            if (!std::getline(in, line)) throw ParseError("unexpected end of OFF data");
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            for (std::string& t : detail::split_ws(line)) toks.push_back(std::move(t));
        }
        return toks;
    };
    std::vector<std::string> head = next_tokens(1);
    size_t consumed = 0;
    if (head[0] == "OFF") {
        consumed = 1;
    } else if (head[0].rfind("OFF", 0) != 0) {
        throw ParseError("missing OFF header");
    }
    std::vector<std::string> counts;
    for (size_t i = consumed; i < head.size(); ++i) counts.push_back(head[i]);
    while (counts.size() < 3) {
        for (std::string& t : next_tokens(1)) counts.push_back(std::move(t));
    }
    const long nv = detail::parse_int(counts[0], 0);
    const long nf = detail::parse_int(counts[1], 0);
    if (nv < 0 || nf < 0) throw ParseError("negative counts in OFF header");
    std::vector<Vec3> vertices;
    vertices.reserve(size_t(nv));
    for (long i = 0; i < nv; ++i) {
        const std::vector<std::string> t = next_tokens(3);
        vertices.push_back({detail::parse_real(t[0], 0), detail::parse_real(t[1], 0),
                            detail::parse_real(t[2], 0)});
    }
    std::vector<std::vector<int>> faces;
    faces.reserve(size_t(nf));
    for (long i = 0; i < nf; ++i) {
        const std::vector<std::string> t0 = next_tokens(1);
        const long k = detail::parse_int(t0[0], 0);
        if (k < 3) throw ParseError("OFF face with fewer than 3 vertices");
        std::vector<std::string> rest;
        for (size_t j = 1; j < t0.size(); ++j) rest.push_back(t0[j]);
        while (rest.size() < size_t(k)) {
            for (std::string& t : next_tokens(1)) rest.push_back(std::move(t));
        }
        std::vector<int> f;
        for (long j = 0; j < k; ++j) {
            const long v = detail::parse_int(rest[size_t(j)], 0);
            if (v < 0 || v >= nv) throw ParseError("OFF face index out of range");
            f.push_back(int(v));
        }
        faces.push_back(std::move(f));
    }
    return Mesh(std::move(vertices), std::move(faces), opts);
}

inline Mesh load_mesh(std::istream& in, MeshFormat fmt, MeshOptions opts = {}) {
    return fmt == MeshFormat::OBJ ? load_obj(in, opts) : load_off(in, opts);
}

inline Mesh load_mesh_string(const std::string& data, MeshFormat fmt, MeshOptions opts = {}) {
    std::istringstream is(data);
    return load_mesh(is, fmt, opts);
}

// -- vertex stars ----------------------------------------------------------

struct StarFace {
    int face{-1};
    double alpha{0};    // interior angle of the face at the center, in (0,2pi)\{pi}
    // The face occupies the sector swept counterclockwise (about the face
    // normal) from sector_start to sector_end, through angle alpha. The start
    // ray is the edge shared with the previous ring face, the end ray the one
    // shared with the next ring face.
    Vec3 sector_start;
    Vec3 sector_end;
    int vertex_start{-1};  // ring vertex on the start ray
    int vertex_end{-1};    // ring vertex on the end ray
};

/// Star of an interior vertex: incident faces in counterclockwise cyclic
/// order with corner angles.
struct VertexStar {
    const Mesh* mesh{nullptr};
    int center{-1};
    Vec3 center_pos;
    std::vector<StarFace> ring;

    size_t valence() const { return ring.size(); }
    const StarFace& at(size_t i) const { return ring[i % ring.size()]; }
};

namespace detail {

// Does the angular sector of a star face intersect another non-adjacent one
// near the center? Sectors are compared after splitting reflex ones.
struct Sector {
    Vec3 r0, r1;  // unit boundary rays, sector swept ccw about n from r0 to r1, angle < pi
    Vec3 n;       // unit face-plane normal
    size_t face_idx;
};

inline bool sector_contains_direction(const Sector& s, const Vec3& d, double tol = 1e-9) {
    // d must lie in the sector plane and decompose with nonnegative ray weights.
    if (std::abs(dot(d, s.n)) > 1e-7) return false;
    const double c = dot(s.r0, s.r1);
    const double den = 1.0 - c * c;
    if (den < 1e-18) return false;
    const double a = dot(d, s.r0), b = dot(d, s.r1);
    const double u = (a - c * b) / den;
    const double v = (b - c * a) / den;
    return u > tol && v > tol;
}

inline bool sectors_intersect(const Sector& s, const Sector& t) {
    const Vec3 x = cross(s.n, t.n);
    const double xn = norm(x);
    if (xn < 1e-12) {
        // Coplanar sectors: they overlap iff one boundary ray is interior to
        // the other sector.
        for (const Vec3& d : {s.r0, s.r1})
            if (sector_contains_direction(t, d)) return true;
        for (const Vec3& d : {t.r0, t.r1})
            if (sector_contains_direction(s, d)) return true;
        return false;
    }
    const Vec3 d = x / xn;
    return (sector_contains_direction(s, d) && sector_contains_direction(t, d)) ||
           (sector_contains_direction(s, -d) && sector_contains_direction(t, -d));
}

}  // namespace detail

/// Extract the oriented star of an interior vertex. Boundary vertices are
/// rejected; stars whose faces intersect near the center are rejected as
/// non-embedded.
inline VertexStar vertex_star(const Mesh& mesh, int v) {
    if (v < 0 || v >= mesh.vertex_count()) throw TopologyError("vertex id out of range");
    if (mesh.vertex_is_boundary(v))
        throw BoundaryVertexError("vertex " + std::to_string(v) + " lies on the boundary");
    const int start = mesh.vertex_halfedge(v);
    if (start < 0) throw NonManifoldStarError("isolated vertex " + std::to_string(v));

    VertexStar star;
    star.mesh = &mesh;
    star.center = v;
    star.center_pos = mesh.vertex(v);

    const std::vector<Halfedge>& hes = mesh.halfedges();
    int h = start;
    do {
        const Halfedge& he = hes[size_t(h)];
        StarFace sf;
        sf.face = he.face;
        sf.alpha = mesh.corner_angle(he.face, v);
        // h leaves v toward the face's cycle-next vertex; that edge is shared
        // with the previous ring face. The edge toward the cycle-previous
        // vertex (prev(h)) is shared with the next ring face.
        const int vstart = hes[size_t(he.next)].origin;
        const int vend = hes[size_t(he.prev)].origin;
        sf.vertex_start = vstart;
        sf.vertex_end = vend;
        sf.sector_start = normalized(mesh.vertex(vstart) - star.center_pos);
        sf.sector_end = normalized(mesh.vertex(vend) - star.center_pos);
        star.ring.push_back(sf);
        const int hp = hes[size_t(h)].prev;
        h = hes[size_t(hp)].twin;
        if (h < 0) throw NonManifoldStarError("open fan at interior vertex " + std::to_string(v));
    } while (h != start);

    // Local embeddability: split each face sector at its angle bisector when
    // reflex, then test all non-adjacent sector pairs for intersection.
    std::vector<detail::Sector> sectors;
    for (size_t i = 0; i < star.ring.size(); ++i) {
        const StarFace& sf = star.ring[i];
        const Vec3 n = mesh.face_normal(sf.face);
        if (sf.alpha < kPi) {
            sectors.push_back({sf.sector_start, sf.sector_end, n, i});
        } else {
            const Vec3 mid = normalized(rotate_about(sf.sector_start, n, sf.alpha / 2));
            sectors.push_back({sf.sector_start, mid, n, i});
            sectors.push_back({mid, sf.sector_end, n, i});
        }
    }
    const size_t m = star.ring.size();
    for (size_t i = 0; i < sectors.size(); ++i)
        for (size_t j = i + 1; j < sectors.size(); ++j) {
            const size_t fi = sectors[i].face_idx, fj = sectors[j].face_idx;
            if (fi == fj) continue;
            const bool ring_adjacent = (fj == (fi + 1) % m) || (fi == (fj + 1) % m);
            if (ring_adjacent) continue;
            if (detail::sectors_intersect(sectors[i], sectors[j]))
                throw GeometryError("star of vertex " + std::to_string(v) +
                                    " is not embedded near the vertex (faces " +
                                    std::to_string(star.ring[fi].face) + ", " +
                                    std::to_string(star.ring[fj].face) + ")");
        }
    return star;
}

/// All interior vertex ids, ascending.
inline std::vector<int> interior_vertices(const Mesh& mesh) {
    std::vector<int> out;
    for (int v = 0; v < mesh.vertex_count(); ++v)
        if (!mesh.vertex_is_boundary(v)) out.push_back(v);
    return out;
}

}  // namespace polysmooth
