#pragma once

#include <hexorient/mesh_topology.hpp>
#include <hexorient/orientation.hpp>

#include <string>
#include <string_view>

namespace hexorient
{
  /// Which connectivity section a mesh file carries.
  enum class SectionKind
  {
    Cells,
    Tets,
    Tris,
  };

  /// The raw content of a mesh file.
  ///
  ///     meshfmt 1
  ///     dim <2|3>
  ///     vertices <Nv>
  ///     <dim coordinates>        x Nv
  ///     cells|tets|tris <N>
  ///     <4, 8, 4 or 3 indices>   x N
  ///
  /// Lines starting with '#' are comments; blank lines are ignored. Tets
  /// require dim 3 and tris dim 2.
  struct MeshDocument
  {
    int dim = 2;
    Coordinates coordinates;
    SectionKind kind = SectionKind::Cells;
    CellMatrix connectivity;
  };

  /// Throws Error(ParseError) for malformed lines and Error(SchemaError) for
  /// well-formed text with wrong counts or values; both carry a line number.
  MeshDocument parse_mesh_document(std::string_view text);

  /// Canonical text: no comments, single spaces, shortest round-trip
  /// decimal coordinates, LF line endings.
  std::string format_mesh_document(const MeshDocument& document);

  /// Reads a file with a `cells` section and builds its topology.
  MeshTopology read_mesh(std::string_view text);

  /// Writes the mesh in canonical form. Meshes without coordinates get
  /// all-zero coordinates.
  std::string write_mesh(const MeshTopology& mesh);

  MeshDocument to_document(const MeshTopology& mesh);

  /// Orientation file:
  ///
  ///     orientation 1
  ///     edges <Ne>
  ///     <v_from v_to>            x Ne, sorted by (min, max)
  ///
  /// Reading accepts the pairs in any order. Throws UnknownEdge for a pair
  /// that is not an edge of the mesh, DuplicateEdge for a repeated edge, and
  /// SchemaError if the count does not match the mesh.
  EdgeOrientation read_orientation(std::string_view text,
                                   const MeshTopology& mesh);

  std::string write_orientation(const EdgeOrientation& orientation,
                                const MeshTopology& mesh);
} // namespace hexorient
