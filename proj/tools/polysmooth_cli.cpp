// polysmooth command line: analyze meshes for smoothness, classify vertices
// and faces, render Gauss images, build polar duals, apply projective maps,
// and generate the analytic fixtures.
//
// Exit codes: 0 = smooth, 1 = violations found, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysmooth/polysmooth.hpp"

namespace ps = polysmooth;

namespace {

ps::MeshFormat format_of(const std::string& path) {
    const size_t dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (char& c : ext) c = char(std::tolower(c));
    if (ext == "off") return ps::MeshFormat::OFF;
    return ps::MeshFormat::OBJ;
}

ps::Mesh load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ps::IOError("cannot open " + path);
    return ps::load_mesh(in, format_of(path));
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ps::IOError("cannot write " + path);
    out << data;
}

void write_mesh(const std::string& path, const ps::Mesh& mesh) {
    write_file(path, format_of(path) == ps::MeshFormat::OFF ? mesh.to_off() : mesh.to_obj());
}

ps::ProjectiveMap load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ps::IOError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    if (!j.is_array() || j.size() != 16)
        throw ps::ParseError("matrix file must hold 16 row-major reals");
    std::array<double, 16> rows{};
    for (size_t i = 0; i < 16; ++i) rows[i] = j[i].get<double>();
    return ps::ProjectiveMap::from_rows(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smoothness analysis of polyhedral surfaces"};
    app.require_subcommand(1);

    std::string mesh_path, json_out, obj_out, svg_out, out_path, matrix_path, center_str;
    int vertex_id = -1, face_id = -1;

    auto* analyze = app.add_subcommand("analyze", "full smoothness report");
    analyze->add_option("mesh", mesh_path, "input mesh (.obj/.off)")->required();
    analyze->add_option("--json", json_out, "write the JSON report here");
    analyze->add_option("--colored-obj", obj_out, "write an OBJ with per-face class colors");

    auto* classify = app.add_subcommand("classify", "classify one vertex or face");
    classify->add_option("mesh", mesh_path)->required();
    classify->add_option("--vertex", vertex_id, "vertex id");
    classify->add_option("--face", face_id, "face id");

    auto* gaussimage = app.add_subcommand("gaussimage", "render a Gauss image to SVG");
    gaussimage->add_option("mesh", mesh_path)->required();
    gaussimage->add_option("--vertex", vertex_id)->required();
    gaussimage->add_option("--svg", svg_out, "output SVG path")->required();

    auto* dual = app.add_subcommand("dual", "polar dual about an admissible center");
    dual->add_option("mesh", mesh_path)->required();
    dual->add_option("--center", center_str, "x,y,z (found automatically when omitted)");
    dual->add_option("-o,--output", out_path, "output mesh")->required();

    auto* transform = app.add_subcommand("transform", "apply a projective map");
    transform->add_option("mesh", mesh_path)->required();
    transform->add_option("--matrix", matrix_path, "JSON file with 16 row-major reals")->required();
    transform->add_option("-o,--output", out_path)->required();

    std::string fixture_name;
    std::vector<std::string> fixture_params;
    std::uint64_t seed = 0;
    auto* generate = app.add_subcommand("generate", "generate an analytic fixture");
    std::ostringstream names;
    for (const std::string& n : ps::fixtures::fixture_names()) names << n << " ";
    generate->add_option("fixture", fixture_name, "one of: " + names.str())->required();
    generate->add_option("--set", fixture_params, "parameter as key=value (repeatable)");
    generate->add_option("--seed", seed, "seed for randomized fixtures");
    generate->add_option("-o,--output", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            ps::Mesh mesh = load(mesh_path);
            ps::SmoothnessReport rep = ps::analyze(mesh);
            if (!json_out.empty()) write_file(json_out, ps::export_report(rep));
            if (!obj_out.empty()) write_file(obj_out, ps::export_colored_mesh(mesh, rep));
            std::cout << (rep.smooth ? "smooth" : "not smooth") << ": " << rep.interior_vertex_count
                      << " interior vertices, " << rep.interior_face_count << " interior faces, "
                      << rep.violations.size() << " violations\n";
            for (const ps::Violation& v : rep.violations)
                std::cout << "  " << (v.kind == 'v' ? "vertex " : "face ") << v.id << ": " << v.code
                          << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
            return rep.smooth ? 0 : 1;
        }
        if (*classify) {
            ps::Mesh mesh = load(mesh_path);
            if (vertex_id >= 0) {
                ps::VertexStar star = ps::vertex_star(mesh, vertex_id);
                ps::VertexClassification cls = ps::classify_vertex(star);
                ps::VertexSmoothness sm = ps::vertex_smoothness(star);
                std::cout << "vertex " << vertex_id << ": " << ps::to_string(cls.shape)
                          << "\n  K = " << ps::format_g17(cls.curvature)
                          << "\n  inflection faces:";
                for (int f : cls.ring_to_faces(cls.inflection_ring)) std::cout << " " << f;
                std::cout << "\n  smooth = " << (sm.smooth ? "yes" : "no") << " (simple "
                          << sm.simple << ", hemispherical " << sm.hemispherical
                          << ", star-shaped " << sm.kernel_nonempty << ")\n";
                if (sm.frame) {
                    const ps::Vec3& n = sm.frame->tangent_normal;
                    const ps::Vec3& np = sm.frame->discrete_normal;
                    std::cout << "  tangent normal n  = " << ps::format_g17(n.x) << " "
                              << ps::format_g17(n.y) << " " << ps::format_g17(n.z)
                              << "\n  discrete normal n' = " << ps::format_g17(np.x) << " "
                              << ps::format_g17(np.y) << " " << ps::format_g17(np.z) << "\n";
                }
            } else if (face_id >= 0) {
                ps::FaceReport fr = ps::classify_face(mesh, face_id);
                std::cout << "face " << face_id << ": "
                          << (fr.skipped ? "skipped (boundary)" : ps::to_string(fr.shape)) << "\n";
                if (!fr.skipped) {
                    std::cout << "  n+ = " << fr.n_positive << ", n- = " << fr.n_negative
                              << ", sign changes = " << fr.sign_changes
                              << "\n  oriented angle sum = " << ps::format_g17(fr.oriented_angle_sum)
                              << " (geometric " << ps::format_g17(fr.geometric_angle_sum) << ")\n";
                    if (fr.n_negative > 0 && fr.n_positive == 0)
                        std::cout << "  c counts = (" << fr.c1 << ", " << fr.c2 << ", " << fr.c3
                                  << ", " << fr.c4 << ")\n";
                    for (const std::string& v : fr.violations) std::cout << "  violation: " << v << "\n";
                }
            } else {
                std::cerr << "classify needs --vertex or --face\n";
                return 2;
            }
            return 0;
        }
        if (*gaussimage) {
            ps::Mesh mesh = load(mesh_path);
            write_file(svg_out, ps::export_gauss_svg(mesh, {vertex_id}));
            std::cout << "wrote " << svg_out << "\n";
            return 0;
        }
        if (*dual) {
            ps::Mesh mesh = load(mesh_path);
            ps::Vec3 center;
            if (center_str.empty()) {
                center = ps::find_admissible_center(mesh);
                std::cout << "center " << ps::format_g17(center.x) << "," << ps::format_g17(center.y)
                          << "," << ps::format_g17(center.z) << "\n";
            } else {
                std::istringstream is(center_str);
                char comma;
                if (!(is >> center.x >> comma >> center.y >> comma >> center.z))
                    throw ps::ParseError("--center expects x,y,z");
            }
            ps::PolarDual pd = ps::polar_dual(mesh, center);
            write_mesh(out_path, pd.mesh);
            std::cout << "wrote " << out_path << " (" << pd.mesh.vertex_count() << " vertices, "
                      << pd.mesh.face_count() << " faces)\n";
            return 0;
        }
        if (*transform) {
            ps::Mesh mesh = load(mesh_path);
            ps::ProjectiveMap M = load_matrix(matrix_path);
            ps::Mesh image = ps::apply_projective(mesh, M);
            write_mesh(out_path, image);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (*generate) {
            ps::fixtures::FixtureSpec spec;
            spec.name = fixture_name;
            spec.seed = seed;
            for (const std::string& kv : fixture_params) {
                const size_t eq = kv.find('=');
                if (eq == std::string::npos) throw ps::ParseError("--set expects key=value");
                spec.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            ps::Mesh mesh = ps::fixtures::generate(spec);
            write_mesh(out_path, mesh);
            std::cout << "wrote " << out_path << " (" << mesh.vertex_count() << " vertices, "
                      << mesh.face_count() << " faces)\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
