#pragma once

#include <hexorient/mesh_topology.hpp>
#include <hexorient/orientation.hpp>
#include <hexorient/parallel_classes.hpp>

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace hexorient
{
  enum class VertexOrigin
  {
    EdgeMidpoint,
    FaceMidpoint,
    CellMidpoint,
  };

  /// A vertex created by a transform, identified by the sorted tuple of the
  /// parent vertices it is the center of. Shared parent entities therefore
  /// yield shared vertices.
  struct NewVertex
  {
    Index index;
    VertexOrigin origin;
    std::vector<Index> parents;
  };

  struct RefinementMap
  {
    /// For every parent edge: its child edge keys. One entry (the edge
    /// itself) if it was not bisected, two otherwise.
    std::vector<std::vector<std::array<Index, 2>>> child_edges;
    /// For every parent cell: indices of its children in the new mesh.
    std::vector<std::vector<Index>> child_cells;
    /// Vertices with index >= parent num_vertices, in index order.
    std::vector<NewVertex> new_vertices;
  };

  struct RefinementResult
  {
    MeshTopology mesh;
    RefinementMap map;
    /// Inherited orientation, when one was supplied to uniform_refine().
    std::optional<EdgeOrientation> orientation;
  };

  /// Splits every hexahedron crossed by the sheets of the selected classes,
  /// bisecting the edges of those classes; a cell is cut into 2, 4 or 8
  /// children depending on how many of its local classes are selected.
  /// Children keep the parent's local axes. Throws DimensionMismatch for 2d
  /// input and UnknownClass for ids outside the partition.
  RefinementResult refine_along_sheets(const MeshTopology& mesh,
                                       const ClassPartition& partition,
                                       std::span<const Index> class_ids);

  struct RepairResult
  {
    MeshTopology mesh;
    RefinementMap map;
    OrientationResult orientation;
    /// Classes of the input mesh that were refined (its failing classes).
    std::vector<Index> refined_classes;
  };

  /// Orients a hexahedral mesh; if some classes fail, refines once along
  /// exactly those sheets and orients the result.
  RepairResult repair(const MeshTopology& mesh);

  /// Splits every cell into 4 (2d) or 8 (3d) children. If an orientation is
  /// given it must verify cleanly (else InvalidOrientation); child edges then
  /// inherit the direction of the parent edge they lie on, and interior edges
  /// follow the parent cell's frame.
  RefinementResult uniform_refine(const MeshTopology& mesh,
                                  const EdgeOrientation* orientation = nullptr);

  /// Stacks num_layers copies of a 2d mesh and joins consecutive copies into
  /// hexahedra. Layer k gets z = k * layer_height when coordinates exist.
  MeshTopology extrude(const MeshTopology& mesh2d, int num_layers,
                       double layer_height = 1.0);

  /// Four hexahedra per tetrahedron from corners, edge midpoints, face
  /// midpoints and the centroid. Throws IndexOutOfRange or DegenerateTet.
  MeshTopology tet_to_hex(const CellMatrix& tets, Index num_vertices,
                          const std::optional<Coordinates>& coordinates = {});

  /// Three quadrilaterals per triangle from corners, edge midpoints and the
  /// centroid. Throws IndexOutOfRange or DegenerateTriangle.
  MeshTopology tri_to_quad(const CellMatrix& triangles, Index num_vertices,
                           const std::optional<Coordinates>& coordinates = {});
} // namespace hexorient
