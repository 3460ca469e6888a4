#include <hexorient/errors.hpp>
#include <hexorient/parallel_classes.hpp>

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace hexorient
{
  namespace
  {
    /// Breadth-first closure from `seed`. `claim(e)` marks e as a member and
    /// returns false if it already was one.
    template <typename Claim>
    std::vector<Index> grow(const MeshTopology& mesh, Index seed, Claim&& claim,
                            std::size_t& visits)
    {
      const auto& ref = mesh.reference();
      std::vector<Index> members{seed};
      claim(seed);
      std::deque<Index> frontier{seed};
      while (!frontier.empty())
        {
          const Index delta = frontier.front();
          frontier.pop_front();
          for (const auto& [cell, local] : mesh.cells_of_edge(delta))
            {
              ++visits;
              for (const int partner : ref.partners(local))
                {
                  const Index e = mesh.edge_of_cell(cell, partner);
                  if (claim(e))
                    {
                      members.push_back(e);
                      frontier.push_back(e);
                    }
                }
            }
        }
      return members;
    }

    bool any_boundary(const MeshTopology& mesh, const std::vector<Index>& edges)
    {
      return std::any_of(edges.begin(), edges.end(),
                         [&](Index e) { return mesh.is_boundary_edge(e); });
    }
  } // namespace

  EdgeClass parallel_set(const MeshTopology& mesh, Index seed_edge,
                         std::size_t* cell_visits)
  {
    if (seed_edge < 0 || seed_edge >= mesh.num_edges())
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + std::to_string(seed_edge) + " does not exist");
    std::unordered_set<Index> seen;
    std::size_t visits = 0;
    EdgeClass out;
    out.edges = grow(
      mesh, seed_edge, [&](Index e) { return seen.insert(e).second; }, visits);
    std::sort(out.edges.begin(), out.edges.end());
    out.touches_boundary = any_boundary(mesh, out.edges);
    if (cell_visits != nullptr)
      *cell_visits += visits;
    return out;
  }

  ClassPartition partition(const MeshTopology& mesh)
  {
    ClassPartition out;
    out.class_of_edge.assign(static_cast<std::size_t>(mesh.num_edges()), -1);
    for (Index seed = 0; seed < mesh.num_edges(); ++seed)
      {
        if (out.class_of_edge[static_cast<std::size_t>(seed)] >= 0)
          continue;
        const Index id = out.num_classes();
        EdgeClass c;
        c.id = id;
        grow(
          mesh, seed,
          [&](Index e) {
            auto& slot = out.class_of_edge[static_cast<std::size_t>(e)];
            if (slot >= 0)
              return false;
            slot = id;
            return true;
          },
          out.cell_visits);
        out.classes.push_back(std::move(c));
      }

    // a single ascending sweep keeps member lists sorted without sorting
    for (Index e = 0; e < mesh.num_edges(); ++e)
      {
        auto& c = out.classes[static_cast<std::size_t>(
          out.class_of_edge[static_cast<std::size_t>(e)])];
        c.edges.push_back(e);
        c.touches_boundary = c.touches_boundary || mesh.is_boundary_edge(e);
      }
    return out;
  }
} // namespace hexorient
