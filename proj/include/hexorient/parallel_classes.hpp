#pragma once

#include <hexorient/mesh_topology.hpp>

#include <cstddef>
#include <vector>

namespace hexorient
{
  /// One equivalence class of globally parallel edges: the closure of an
  /// edge under "opposite in some adjacent cell".
  struct EdgeClass
  {
    Index id = 0;
    /// Member edge indices, ascending.
    std::vector<Index> edges;
    /// Some member is a boundary edge (see MeshTopology::is_boundary_edge).
    bool touches_boundary = false;
  };

  struct ClassPartition
  {
    /// Class ids increase with each class's smallest edge index.
    std::vector<EdgeClass> classes;
    std::vector<Index> class_of_edge;
    /// Number of (cell, edge) incidences visited while growing the classes.
    std::size_t cell_visits = 0;

    Index num_classes() const { return static_cast<Index>(classes.size()); }
  };

  /// Grows the class containing `seed_edge` breadth-first. Cost is
  /// proportional to the class size times the edge valence. The returned
  /// class has id 0. If `cell_visits` is given, the number of visited
  /// (cell, edge) incidences is added to it.
  EdgeClass parallel_set(const MeshTopology& mesh, Index seed_edge,
                         std::size_t* cell_visits = nullptr);

  /// Partitions all edges into parallel classes, seeding each new class at
  /// the smallest unclassified edge.
  ClassPartition partition(const MeshTopology& mesh);
} // namespace hexorient
