#pragma once

#include <span>

namespace hexorient
{
  /// A local edge of the reference cell. Under the orientation convention
  /// every edge runs from `from` to `to`; `to` always differs from `from` by
  /// exactly the bit `axis_bit` of the lexicographic vertex numbering.
  struct LocalEdge
  {
    int from;
    int to;
    int parallel_class;
  };

  /// Numbering of the unit square (dim = 2) or unit cube (dim = 3).
  ///
  /// Vertices are numbered lexicographically with x fastest, so local vertex
  /// v sits at ((v >> 0) & 1, (v >> 1) & 1, (v >> 2) & 1).
  ///
  /// dim = 2:  e0 = (0,2), e1 = (1,3), e2 = (0,1), e3 = (2,3);
  ///           classes {e0, e1} (along y) and {e2, e3} (along x).
  /// dim = 3:  class X: (0,1) (2,3) (4,5) (6,7)   local edges 0..3
  ///           class Y: (0,2) (1,3) (4,6) (5,7)   local edges 4..7
  ///           class Z: (0,4) (1,5) (2,6) (3,7)   local edges 8..11
  struct ReferenceCell
  {
    int dim;
    int vertices_per_cell;
    int edges_per_cell;
    int classes_per_cell;
    int edges_per_class;

    std::span<const LocalEdge> edges;

    /// Local edges of parallel class c, in increasing local index.
    std::span<const int> class_members(int c) const;

    /// The other members of the parallel class of local edge l.
    std::span<const int> partners(int l) const;

    /// Vertex-numbering bit that the edges of class c run along.
    int axis_bit(int c) const;

    /// Parallel class whose edges run along vertex-numbering bit b.
    int class_of_axis_bit(int b) const;

    /// The local edge joining local vertices a and b, or -1.
    int local_edge(int a, int b) const;
  };

  /// Throws Error(InvalidArgument) for dim outside {2, 3}.
  const ReferenceCell& reference_cell(int dim);
} // namespace hexorient
