#pragma once

#include <hexorient/reference_cell.hpp>
#include <hexorient/types.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hexorient
{
  /// One incidence of an edge: the cell and the position of the edge within
  /// that cell's local edge numbering.
  struct CellEdgeRef
  {
    Index cell;
    int local_edge;
  };

  /// Quadrilateral or hexahedral mesh connectivity with constant-time
  /// edge-of-cell and cells-of-edge queries.
  ///
  /// Edges are identified by their sorted vertex pair and numbered in
  /// lexicographic order of those pairs, so the same cell list always gives
  /// the same edge numbering. Cell vertex tuples are stored exactly as given.
  /// Instances are immutable once built.
  class MeshTopology
  {
  public:
    MeshTopology() = default;

    int dim() const { return dim_; }
    Index num_vertices() const { return num_vertices_; }
    Index num_cells() const { return cells_.rows(); }
    Index num_edges() const { return edges_.rows(); }

    const ReferenceCell& reference() const { return reference_cell(dim_); }

    const CellMatrix& cells() const { return cells_; }
    Index vertex(Index cell, int local_vertex) const
    {
      return cells_(cell, local_vertex);
    }

    const EdgeKeys& edges() const { return edges_; }
    std::array<Index, 2> edge(Index e) const
    {
      return {edges_(e, 0), edges_(e, 1)};
    }

    /// N_K x (4 or 12) table of global edge indices.
    const CellMatrix& edge_of_cell() const { return edge_of_cell_; }
    Index edge_of_cell(Index cell, int local_edge) const
    {
      return edge_of_cell_(cell, local_edge);
    }

    std::span<const CellEdgeRef> cells_of_edge(Index e) const
    {
      const auto begin = static_cast<std::size_t>(adjacency_offsets_[e]);
      const auto end = static_cast<std::size_t>(adjacency_offsets_[e + 1]);
      return std::span<const CellEdgeRef>(adjacency_).subspan(begin,
                                                              end - begin);
    }

    /// 2d: the edge has a single adjacent cell. 3d: the edge lies on a face
    /// that belongs to a single cell.
    bool is_boundary_edge(Index e) const { return boundary_edge_[e]; }
    Index num_boundary_edges() const { return boundary_edge_.count(); }

    /// Index of the edge joining a and b (either order), if it exists.
    std::optional<Index> find_edge(Index a, Index b) const;

    const std::optional<Coordinates>& coordinates() const
    {
      return coordinates_;
    }

    friend MeshTopology build_topology(int dim, Index num_vertices,
                                       CellMatrix cells,
                                       std::optional<Coordinates> coordinates);

  private:
    int dim_ = 2;
    Index num_vertices_ = 0;
    CellMatrix cells_;
    EdgeKeys edges_;
    CellMatrix edge_of_cell_;
    std::vector<Index> adjacency_offsets_{0};
    std::vector<CellEdgeRef> adjacency_;
    BoolArray boundary_edge_;
    std::optional<Coordinates> coordinates_;
  };

  /// Builds edge tables from a cell list. Cost is dominated by a bucket sort
  /// of the N_K * (4 or 12) edge keys.
  ///
  /// Throws Error with IndexOutOfRange, DegenerateCell, NonManifold2D (an
  /// edge of a 2d mesh with more than two cells), or InvalidArgument (bad
  /// dim, wrong column count, empty cell list, coordinate shape mismatch).
  MeshTopology build_topology(int dim, Index num_vertices, CellMatrix cells,
                              std::optional<Coordinates> coordinates = {});

  /// Local edges of `cell` parallel to `local_edge`, excluding itself.
  std::span<const int> cell_parallel_partners(const MeshTopology& mesh,
                                              Index cell, int local_edge);

  enum class DiagnosticKind
  {
    IndexOutOfRange,
    DegenerateCell,
    NonManifold2D,
    NonManifoldFace,
    IsolatedVertex,
    DuplicateCell,
  };

  struct Diagnostic
  {
    DiagnosticKind kind;
    bool fatal;
    /// Cell index for cell-level kinds, vertex index for IsolatedVertex.
    Index index = -1;
    /// Sorted vertex tuple of the offending edge or face, when applicable.
    std::vector<Index> vertices;

    std::string describe() const;
  };

  /// Checks a raw cell list without building it.
  std::vector<Diagnostic> validate(int dim, Index num_vertices,
                                   const CellMatrix& cells);

  std::vector<Diagnostic> validate(const MeshTopology& mesh);

  bool has_fatal(const std::vector<Diagnostic>& diagnostics);
} // namespace hexorient
