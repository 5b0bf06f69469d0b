#include "bjorling/export.hpp"

#include <cstdio>
#include <fstream>

namespace bjorling {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // byte-exact line endings
    if (!out) throw IoError("cannot open output file", path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed", path);
}

} // namespace

void export_obj(const Mesh& mesh, const std::string& path) {
    std::ofstream out = open_out(path);
    for (const Vec3& v : mesh.vertices) {
        out << "v " << num(v[0]) << ' ' << num(v[1]) << ' ' << num(v[2])
            << '\n';
    }
    for (const auto& q : mesh.quads) {
        out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' '
            << q[3] + 1 << '\n';
    }
    finish(out, path);
}

void export_ply(const Mesh& mesh, const std::string& path) {
    const bool with_quality = mesh.quality.size() == mesh.vertices.size() &&
                              !mesh.vertices.empty();
    std::ofstream out = open_out(path);
    out << "ply\n";
    out << "format ascii 1.0\n";
    out << "element vertex " << mesh.vertices.size() << '\n';
    out << "property float x\n";
    out << "property float y\n";
    out << "property float z\n";
    if (with_quality) out << "property float quality\n";
    out << "element face " << mesh.quads.size() << '\n';
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3& v = mesh.vertices[i];
        out << num(v[0]) << ' ' << num(v[1]) << ' ' << num(v[2]);
        if (with_quality) out << ' ' << num(mesh.quality[i]);
        out << '\n';
    }
    for (const auto& q : mesh.quads) {
        out << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3]
            << '\n';
    }
    finish(out, path);
}

void export_csv(const CurveSamples& curve, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "t,x,y,z\n";
    for (const CurveSample& s : curve.points) {
        out << num(s.t) << ',' << num(s.p[0]) << ',' << num(s.p[1]) << ','
            << num(s.p[2]) << '\n';
    }
    finish(out, path);
}

} // namespace bjorling
