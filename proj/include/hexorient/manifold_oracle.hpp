#pragma once

#include <hexorient/mesh_topology.hpp>

#include <span>
#include <vector>

namespace hexorient
{
  /// Which diagonal splits each quadrilateral into two triangles.
  enum class Diagonal
  {
    /// v0-v3: triangles (v0,v1,v3) and (v0,v3,v2).
    Main,
    /// v1-v2: triangles (v0,v1,v2) and (v1,v3,v2).
    Anti,
  };

  /// Simplicial 2-complex obtained by splitting every quad of a surface mesh.
  struct TriComplex
  {
    /// Two triangles per quad; rows 2k and 2k+1 come from cell k. Both are
    /// listed counterclockwise in the quad's reference frame.
    Eigen::Matrix<Index, Eigen::Dynamic, 3, Eigen::RowMajor> triangles;
    /// Sorted undirected edge keys of the complex.
    EdgeKeys edges;
    /// Triangles adjacent to edge i are
    /// edge_triangles[edge_offsets[i] .. edge_offsets[i+1]).
    std::vector<Index> edge_offsets;
    std::vector<Index> edge_triangles;

    std::span<const Index> triangles_of_edge(Index e) const
    {
      const auto b = static_cast<std::size_t>(edge_offsets[static_cast<std::size_t>(e)]);
      const auto n =
        static_cast<std::size_t>(edge_offsets[static_cast<std::size_t>(e) + 1]) - b;
      return std::span<const Index>(edge_triangles).subspan(b, n);
    }
  };

  /// Throws Error(DimensionMismatch) for 3d meshes and
  /// Error(NonManifoldInput) if some edge of the complex has more than two
  /// triangles.
  TriComplex triangulate(const MeshTopology& mesh,
                         Diagonal diagonal = Diagonal::Main);

  /// Decides whether the surface carrying a 2d quad mesh is orientable by
  /// coherently orienting the triangulated complex: windings propagate
  /// breadth-first across shared edges, which must receive opposite induced
  /// directions. Each connected component is seeded independently.
  bool surface_orientable(const MeshTopology& mesh,
                          Diagonal diagonal = Diagonal::Main);
} // namespace hexorient
