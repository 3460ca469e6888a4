#include <hexorient/errors.hpp>
#include <hexorient/orientation.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>

namespace hexorient
{
  namespace
  {
    /// Whether local edge l of cell k points in its convention direction,
    /// given the forward flag of the global edge.
    bool agrees(const MeshTopology& mesh, Index k, int l, bool forward)
    {
      const auto& le = mesh.reference().edges[static_cast<std::size_t>(l)];
      const Index e = mesh.edge_of_cell(k, l);
      const Index source = forward ? mesh.edges()(e, 0) : mesh.edges()(e, 1);
      return source == mesh.vertex(k, le.from);
    }

    /// Forward flag that makes local edge l of cell k agree (or disagree)
    /// with the convention.
    bool forward_for(const MeshTopology& mesh, Index k, int l, bool agree)
    {
      const auto& le = mesh.reference().edges[static_cast<std::size_t>(l)];
      const Index e = mesh.edge_of_cell(k, l);
      const Index source = mesh.vertex(k, agree ? le.from : le.to);
      return source == mesh.edges()(e, 0);
    }

    template <typename Forward>
    bool consistent_with(const MeshTopology& mesh, Forward&& forward)
    {
      const auto& ref = mesh.reference();
      for (Index k = 0; k < mesh.num_cells(); ++k)
        for (int c = 0; c < ref.classes_per_cell; ++c)
          {
            const auto members = ref.class_members(c);
            const bool first =
              agrees(mesh, k, members[0], forward(mesh.edge_of_cell(k, members[0])));
            for (std::size_t i = 1; i < members.size(); ++i)
              if (agrees(mesh, k, members[i],
                         forward(mesh.edge_of_cell(k, members[i]))) != first)
                return false;
          }
      return true;
    }

    void check_size(const MeshTopology& mesh, const EdgeOrientation& o)
    {
      if (o.size() != mesh.num_edges())
        throw Error(ErrorCode::InvalidArgument,
                    "orientation has " + std::to_string(o.size()) +
                      " entries, mesh has " +
                      std::to_string(mesh.num_edges()) + " edges");
    }

    void check_class(const ClassPartition& partition, Index class_id)
    {
      if (class_id < 0 || class_id >= partition.num_classes())
        throw Error(ErrorCode::UnknownClass,
                    "class " + std::to_string(class_id) + " does not exist");
    }
  } // namespace

  Index edge_source(const MeshTopology& mesh, const EdgeOrientation& o, Index e)
  {
    return o.forward[e] ? mesh.edges()(e, 0) : mesh.edges()(e, 1);
  }

  bool agrees_with_cell(const MeshTopology& mesh, const EdgeOrientation& o,
                        Index cell, int local_edge)
  {
    return agrees(mesh, cell, local_edge,
                  o.forward[mesh.edge_of_cell(cell, local_edge)]);
  }

  const EdgeOrientation& OrientationResult::orientation() const
  {
    if (!oriented())
      throw Error(ErrorCode::InconsistentInput,
                  "mesh is not orientable; no orientation available");
    return std::get<EdgeOrientation>(value_);
  }

  const std::vector<NonOrientabilityWitness>&
  OrientationResult::witnesses() const
  {
    static const std::vector<NonOrientabilityWitness> none;
    if (oriented())
      return none;
    return std::get<std::vector<NonOrientabilityWitness>>(value_);
  }

  std::optional<NonOrientabilityWitness>
  orient_class(const MeshTopology& mesh, const ClassPartition& partition,
               Index class_id, bool seed_forward, EdgeOrientation& orientation,
               std::vector<char>& assigned, std::size_t* cell_visits)
  {
    check_class(partition, class_id);
    const auto& ref = mesh.reference();
    const Index seed =
      partition.classes[static_cast<std::size_t>(class_id)].edges.front();

    std::size_t visits = 0;
    std::optional<NonOrientabilityWitness> conflict;

    orientation.forward[seed] = seed_forward;
    assigned[static_cast<std::size_t>(seed)] = 1;
    std::deque<Index> frontier{seed};
    while (!frontier.empty() && !conflict)
      {
        const Index delta = frontier.front();
        frontier.pop_front();
        for (const auto& [cell, local] : mesh.cells_of_edge(delta))
          {
            ++visits;
            const bool agree =
              agrees(mesh, cell, local, orientation.forward[delta]);
            for (const int partner : ref.partners(local))
              {
                const Index e = mesh.edge_of_cell(cell, partner);
                const bool wanted = forward_for(mesh, cell, partner, agree);
                auto& done = assigned[static_cast<std::size_t>(e)];
                if (!done)
                  {
                    orientation.forward[e] = wanted;
                    done = 1;
                    frontier.push_back(e);
                  }
                else if (orientation.forward[e] != wanted)
                  {
                    conflict = NonOrientabilityWitness{e, cell, class_id};
                    break;
                  }
              }
            if (conflict)
              break;
          }
      }

    if (cell_visits != nullptr)
      *cell_visits += visits;
    return conflict;
  }

  OrientationResult orient(const MeshTopology& mesh,
                           const ClassPartition& partition)
  {
    if (static_cast<Index>(partition.class_of_edge.size()) != mesh.num_edges())
      throw Error(ErrorCode::InvalidArgument,
                  "partition was not computed for this mesh");

    EdgeOrientation orientation(mesh.num_edges(), true);
    std::vector<char> assigned(static_cast<std::size_t>(mesh.num_edges()), 0);
    std::vector<NonOrientabilityWitness> witnesses;
    std::size_t visits = 0;
    for (Index c = 0; c < partition.num_classes(); ++c)
      if (auto w =
            orient_class(mesh, partition, c, true, orientation, assigned, &visits))
        witnesses.push_back(*w);

    if (witnesses.empty())
      return OrientationResult(std::move(orientation), visits);
    return OrientationResult(std::move(witnesses), visits);
  }

  std::vector<Violation> verify(const MeshTopology& mesh,
                                const EdgeOrientation& orientation)
  {
    check_size(mesh, orientation);
    const auto& ref = mesh.reference();
    std::vector<Violation> out;
    for (Index k = 0; k < mesh.num_cells(); ++k)
      for (int c = 0; c < ref.classes_per_cell; ++c)
        {
          const auto members = ref.class_members(c);
          const bool first = agrees_with_cell(mesh, orientation, k, members[0]);
          const bool unanimous =
            std::all_of(members.begin() + 1, members.end(), [&](int l) {
              return agrees_with_cell(mesh, orientation, k, l) == first;
            });
          if (!unanimous)
            {
              Violation v{k, c, {}};
              for (const int l : members)
                v.edges.push_back(mesh.edge_of_cell(k, l));
              out.push_back(std::move(v));
            }
        }
    return out;
  }

  bool is_consistent(const MeshTopology& mesh,
                     const EdgeOrientation& orientation)
  {
    check_size(mesh, orientation);
    return consistent_with(mesh,
                           [&](Index e) { return orientation.forward[e]; });
  }

  EdgeOrientation flip_class(const EdgeOrientation& orientation,
                             const ClassPartition& partition, Index class_id)
  {
    check_class(partition, class_id);
    EdgeOrientation out = orientation;
    for (const Index e : partition.classes[static_cast<std::size_t>(class_id)].edges)
      out.forward[e] = !out.forward[e];
    return out;
  }

  namespace
  {
    void check_exhaustive_size(const MeshTopology& mesh)
    {
      if (mesh.num_edges() > max_exhaustive_edges)
        throw Error(ErrorCode::TooLarge,
                    std::to_string(mesh.num_edges()) +
                      " edges exceed the exhaustive search limit of " +
                      std::to_string(max_exhaustive_edges));
    }
  } // namespace

  std::optional<EdgeOrientation> exhaustive_orient(const MeshTopology& mesh)
  {
    check_exhaustive_size(mesh);
    const std::uint32_t total = std::uint32_t{1} << mesh.num_edges();
    for (std::uint32_t mask = 0; mask < total; ++mask)
      {
        const auto forward = [mask](Index e) { return ((mask >> e) & 1U) != 0; };
        if (consistent_with(mesh, forward))
          {
            EdgeOrientation o(mesh.num_edges());
            for (Index e = 0; e < mesh.num_edges(); ++e)
              o.forward[e] = forward(e);
            return o;
          }
      }
    return std::nullopt;
  }

  std::size_t count_consistent_orientations(const MeshTopology& mesh)
  {
    check_exhaustive_size(mesh);
    const std::uint32_t total = std::uint32_t{1} << mesh.num_edges();
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < total; ++mask)
      if (consistent_with(
            mesh, [mask](Index e) { return ((mask >> e) & 1U) != 0; }))
        ++count;
    return count;
  }

  std::vector<CellFrame> reorder_cells(const MeshTopology& mesh,
                                       const EdgeOrientation& orientation)
  {
    check_size(mesh, orientation);
    const auto& ref = mesh.reference();
    std::vector<CellFrame> frames;
    frames.reserve(static_cast<std::size_t>(mesh.num_cells()));
    for (Index k = 0; k < mesh.num_cells(); ++k)
      {
        // a class pointing against the convention moves the origin to the
        // high side of that axis
        int origin = 0;
        for (int c = 0; c < ref.classes_per_cell; ++c)
          {
            const auto members = ref.class_members(c);
            const bool agree = agrees_with_cell(mesh, orientation, k, members[0]);
            for (const int l : members)
              if (agrees_with_cell(mesh, orientation, k, l) != agree)
                throw Error(ErrorCode::InconsistentInput,
                            "cell " + std::to_string(k) +
                              " has no vertex that all its edges leave from");
            if (!agree)
              origin |= 1 << ref.axis_bit(c);
          }

        CellFrame frame{k, origin, {-1, -1, -1}};
        const bool flipped = std::popcount(static_cast<unsigned>(origin)) % 2 == 1;
        if (mesh.dim() == 2)
          {
            frame.axes[0] = origin ^ (flipped ? 2 : 1);
            frame.axes[1] = origin ^ (flipped ? 1 : 2);
          }
        else
          {
            std::array<int, 3> axes{origin ^ 1, origin ^ (flipped ? 4 : 2),
                                    origin ^ (flipped ? 2 : 4)};
            const auto smallest = std::min_element(
              axes.begin(), axes.end(), [&](int a, int b) {
                return mesh.vertex(k, a) < mesh.vertex(k, b);
              });
            std::rotate(axes.begin(), smallest, axes.end());
            frame.axes = axes;
          }
        frames.push_back(frame);
      }
    return frames;
  }

  CellMatrix reordered_cells(const MeshTopology& mesh,
                             const std::vector<CellFrame>& frames)
  {
    const auto& ref = mesh.reference();
    CellMatrix out(mesh.num_cells(), ref.vertices_per_cell);
    for (const auto& frame : frames)
      for (int i = 0; i < ref.vertices_per_cell; ++i)
        {
          int local = frame.origin;
          for (int axis = 0; axis < mesh.dim(); ++axis)
            if ((i >> axis) & 1)
              local ^= frame.origin ^ frame.axes[static_cast<std::size_t>(axis)];
          out(frame.cell, i) = mesh.vertex(frame.cell, local);
        }
    return out;
  }
} // namespace hexorient
