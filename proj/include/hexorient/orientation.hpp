#pragma once

#include <hexorient/mesh_topology.hpp>
#include <hexorient/parallel_classes.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace hexorient
{
  /// A direction for every edge of one mesh. forward[e] means edge e runs
  /// from the smaller to the larger vertex index of its canonical key.
  struct EdgeOrientation
  {
    BoolArray forward;

    EdgeOrientation() = default;
    explicit EdgeOrientation(Index num_edges, bool value = true)
      : forward(BoolArray::Constant(num_edges, value))
    {}

    Index size() const { return forward.size(); }

    friend bool operator==(const EdgeOrientation& a, const EdgeOrientation& b)
    {
      return a.size() == b.size() && (a.forward == b.forward).all();
    }
  };

  /// Start vertex of edge e under orientation o.
  Index edge_source(const MeshTopology& mesh, const EdgeOrientation& o,
                    Index e);

  /// True if, in `cell`, local edge `local_edge` runs the same way as the
  /// reference convention (from its low local vertex to its high one).
  bool agrees_with_cell(const MeshTopology& mesh, const EdgeOrientation& o,
                        Index cell, int local_edge);

  /// Where orientation propagation within a class first contradicted an
  /// earlier assignment.
  struct NonOrientabilityWitness
  {
    Index edge;
    Index cell;
    Index class_id;
  };

  class OrientationResult
  {
  public:
    OrientationResult(EdgeOrientation orientation, std::size_t cell_visits)
      : value_(std::move(orientation))
      , cell_visits_(cell_visits)
    {}
    OrientationResult(std::vector<NonOrientabilityWitness> witnesses,
                      std::size_t cell_visits)
      : value_(std::move(witnesses))
      , cell_visits_(cell_visits)
    {}

    bool oriented() const
    {
      return std::holds_alternative<EdgeOrientation>(value_);
    }

    /// Throws Error(InconsistentInput) unless oriented().
    const EdgeOrientation& orientation() const;

    /// One witness per failing class, ordered by class id. Empty if
    /// oriented().
    const std::vector<NonOrientabilityWitness>& witnesses() const;

    std::size_t cell_visits() const { return cell_visits_; }

  private:
    std::variant<EdgeOrientation, std::vector<NonOrientabilityWitness>> value_;
    std::size_t cell_visits_;
  };

  /// Propagates a direction through one class, starting with the class's
  /// smallest edge directed forward (or backward if `seed_forward` is
  /// false). Writes the directions of the class members into `orientation`
  /// and marks them in `assigned`. Returns the witness of the first conflict;
  /// on conflict the propagation of this class stops.
  std::optional<NonOrientabilityWitness>
  orient_class(const MeshTopology& mesh, const ClassPartition& partition,
               Index class_id, bool seed_forward, EdgeOrientation& orientation,
               std::vector<char>& assigned, std::size_t* cell_visits = nullptr);

  /// Orients every class independently. The result is oriented iff no class
  /// had a conflict; failing classes are all reported.
  OrientationResult orient(const MeshTopology& mesh,
                           const ClassPartition& partition);

  struct Violation
  {
    Index cell;
    /// Local parallel class of the cell (0..1 in 2d, 0..2 in 3d).
    int local_class;
    /// Global edges of that local class, in local order.
    std::vector<Index> edges;
  };

  /// Every (cell, local class) whose edges do not all point the same way.
  std::vector<Violation> verify(const MeshTopology& mesh,
                                const EdgeOrientation& orientation);

  /// Same predicate as verify() without collecting violations.
  bool is_consistent(const MeshTopology& mesh,
                     const EdgeOrientation& orientation);

  /// Negates the direction of every member of one class.
  EdgeOrientation flip_class(const EdgeOrientation& orientation,
                             const ClassPartition& partition, Index class_id);

  /// Brute-force search over all 2^N_e direction assignments, in increasing
  /// binary order with bit e set meaning forward[e]. Returns the first
  /// consistent one. Throws Error(TooLarge) above max_exhaustive_edges.
  constexpr Index max_exhaustive_edges = 24;
  std::optional<EdgeOrientation> exhaustive_orient(const MeshTopology& mesh);

  /// Number of consistent assignments among all 2^N_e, by enumeration.
  std::size_t count_consistent_orientations(const MeshTopology& mesh);

  /// Coordinate frame of a cell induced by a consistent orientation.
  /// axes[i] is the local vertex at the far end of the i-th axis edge leaving
  /// the origin; only the first dim entries are used. The frame has the
  /// same handedness as the cell's own vertex numbering.
  struct CellFrame
  {
    Index cell;
    int origin;
    std::array<int, 3> axes{-1, -1, -1};
  };

  /// For each cell, the local vertex that all its edges leave from. In 3d
  /// the first axis is the outgoing neighbor with the smallest global index,
  /// followed by the other two in right-handed cyclic order. Throws
  /// Error(InconsistentInput) if some cell has no such vertex.
  std::vector<CellFrame> reorder_cells(const MeshTopology& mesh,
                                       const EdgeOrientation& orientation);

  /// Cell tuples renumbered so that each frame's origin comes first and its
  /// axes become the reference x, y (, z) directions. With these tuples,
  /// every edge runs in its reference convention direction.
  CellMatrix reordered_cells(const MeshTopology& mesh,
                             const std::vector<CellFrame>& frames);
} // namespace hexorient
