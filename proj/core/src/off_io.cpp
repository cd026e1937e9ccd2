#include "shrinklab/off_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "shrinklab/errors.hpp"

namespace shrinklab {

namespace {

// next non-comment, non-empty line
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

TriMesh read_off(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw IoError("empty OFF stream");
    {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "OFF") throw IoError("missing OFF header, got '" + tag + "'");
    }
    if (!next_content_line(in, line)) throw IoError("missing OFF counts line");
    long nv = 0, nf = 0, ne = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> nv >> nf)) throw IoError("malformed OFF counts line: " + line);
        ls >> ne;  // edge count present but ignored
    }
    if (nv <= 0 || nf <= 0) throw IoError("OFF mesh must have positive vertex and face counts");

    Eigen::MatrixX3d verts(nv, 3);
    for (long i = 0; i < nv; ++i) {
        if (!next_content_line(in, line)) throw IoError("unexpected end of OFF vertex list");
        std::istringstream ls(line);
        double x, y, z;
        if (!(ls >> x >> y >> z)) throw IoError("malformed OFF vertex line: " + line);
        verts.row(i) << x, y, z;
    }
    Eigen::MatrixX3i tris(nf, 3);
    for (long i = 0; i < nf; ++i) {
        if (!next_content_line(in, line)) throw IoError("unexpected end of OFF face list");
        std::istringstream ls(line);
        int deg, a, b, c;
        if (!(ls >> deg >> a >> b >> c)) throw IoError("malformed OFF face line: " + line);
        if (deg != 3) throw IoError("only triangle faces supported, got degree " + std::to_string(deg));
        tris.row(i) << a, b, c;
    }
    return make_mesh(std::move(verts), std::move(tris));
}

TriMesh read_off_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_off(in);
}

void write_off(std::ostream& out, const TriMesh& mesh) {
    out << "OFF\n" << mesh.vertex_count() << " " << mesh.triangle_count() << " 0\n";
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        out << fmt(mesh.vertices(v, 0)) << " " << fmt(mesh.vertices(v, 1)) << " "
            << fmt(mesh.vertices(v, 2)) << "\n";
    for (Eigen::Index t = 0; t < mesh.triangle_count(); ++t)
        out << "3 " << mesh.triangles(t, 0) << " " << mesh.triangles(t, 1) << " "
            << mesh.triangles(t, 2) << "\n";
}

void write_off_file(const std::string& path, const TriMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_off(out, mesh);
}

void write_vertex_field_csv(std::ostream& out, const TriMesh& mesh, const ScalarField& field,
                            const std::string& value_name) {
    out << "vertex_id,x,y,z," << value_name << "\n";
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v)
        out << v << "," << fmt(mesh.vertices(v, 0)) << "," << fmt(mesh.vertices(v, 1)) << ","
            << fmt(mesh.vertices(v, 2)) << "," << fmt(field(v)) << "\n";
}

void write_vertex_field_csv_file(const std::string& path, const TriMesh& mesh,
                                 const ScalarField& field, const std::string& value_name) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_vertex_field_csv(out, mesh, field, value_name);
}

}  // namespace shrinklab
