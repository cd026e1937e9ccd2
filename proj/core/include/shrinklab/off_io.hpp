#pragma once

#include <iosfwd>
#include <string>

#include "shrinklab/mesh.hpp"

namespace shrinklab {

/// Reads an ASCII OFF mesh ("OFF" header, counts line, coordinates, index
/// triples). '#' comments and blank lines are skipped. Throws IoError on
/// malformed input; the result passes make_mesh validation.
TriMesh read_off(std::istream& in);
TriMesh read_off_file(const std::string& path);

void write_off(std::ostream& out, const TriMesh& mesh);
void write_off_file(const std::string& path, const TriMesh& mesh);

/// Per-vertex field as CSV rows "vertex_id,x,y,z,value".
void write_vertex_field_csv(std::ostream& out, const TriMesh& mesh, const ScalarField& field,
                            const std::string& value_name = "value");
void write_vertex_field_csv_file(const std::string& path, const TriMesh& mesh,
                                 const ScalarField& field,
                                 const std::string& value_name = "value");

}  // namespace shrinklab
