#include <hexorient/errors.hpp>
#include <hexorient/transforms.hpp>

#include <algorithm>
#include <map>
#include <string>

namespace hexorient
{
  namespace
  {
    /// Hands out vertex indices for centers of parent vertex tuples. Original
    /// vertices keep their indices; a tuple seen twice gets the same vertex.
    class VertexPool
    {
    public:
      VertexPool(Index num_original, const std::optional<Coordinates>& coordinates)
        : num_original_(num_original)
        , parent_coordinates_(coordinates)
      {}

      Index get(std::vector<Index> parents, VertexOrigin origin)
      {
        std::sort(parents.begin(), parents.end());
        if (parents.size() == 1)
          return parents.front();
        const auto [it, inserted] = index_.try_emplace(parents, next_index());
        if (inserted)
          {
            if (parent_coordinates_)
              {
                Eigen::RowVectorXd mean =
                  Eigen::RowVectorXd::Zero(parent_coordinates_->cols());
                for (const Index p : parents)
                  mean += parent_coordinates_->row(p);
                new_coordinates_.push_back(mean / static_cast<double>(parents.size()));
              }
            new_vertices_.push_back({it->second, origin, std::move(parents)});
          }
        return it->second;
      }

      Index num_vertices() const { return next_index(); }

      std::optional<Coordinates> coordinates(Index dim) const
      {
        if (!parent_coordinates_)
          return std::nullopt;
        Coordinates out(num_vertices(), dim);
        out.setZero();
        const Index cols = std::min<Index>(dim, parent_coordinates_->cols());
        out.topLeftCorner(num_original_, cols) =
          parent_coordinates_->leftCols(cols);
        for (std::size_t i = 0; i < new_coordinates_.size(); ++i)
          out.row(num_original_ + static_cast<Index>(i)).head(cols) =
            new_coordinates_[i].head(cols);
        return out;
      }

      std::vector<NewVertex> take_new_vertices() { return std::move(new_vertices_); }

    private:
      Index next_index() const
      {
        return num_original_ + static_cast<Index>(new_vertices_.size());
      }

      Index num_original_;
      const std::optional<Coordinates>& parent_coordinates_;
      std::map<std::vector<Index>, Index> index_;
      std::vector<NewVertex> new_vertices_;
      std::vector<Eigen::RowVectorXd> new_coordinates_;
    };

    /// Splits cell k of `mesh` along the axes whose bits are set in
    /// split_axes. Points of the parent are addressed by lattice coordinates
    /// in {0, 1, 2} per axis; 1 is only used on split axes. Children are
    /// appended to `cells` in increasing order of their lower-corner offset.
    void split_cell(const MeshTopology& mesh, Index k, int split_axes,
                    VertexPool& pool, std::vector<std::vector<Index>>& cells)
    {
      const int dim = mesh.dim();
      const int corners = 1 << dim;

      auto lattice_vertex = [&](const std::array<int, 3>& p) {
        std::vector<Index> parents;
        for (int v = 0; v < corners; ++v)
          {
            bool inside = true;
            for (int a = 0; a < dim && inside; ++a)
              {
                const int bit = (v >> a) & 1;
                const int pa = p[static_cast<std::size_t>(a)];
                inside = pa == 1 || (pa == 0 && bit == 0) || (pa == 2 && bit == 1);
              }
            if (inside)
              parents.push_back(mesh.vertex(k, v));
          }
        const auto n = static_cast<int>(parents.size());
        const VertexOrigin origin = n == 2       ? VertexOrigin::EdgeMidpoint :
                                    n == corners ? VertexOrigin::CellMidpoint :
                                                   VertexOrigin::FaceMidpoint;
        return pool.get(std::move(parents), origin);
      };

      for (int h = 0; h < corners; ++h)
        {
          if ((h & ~split_axes) != 0)
            continue;
          std::vector<Index> child(static_cast<std::size_t>(corners));
          for (int c = 0; c < corners; ++c)
            {
              std::array<int, 3> p{0, 0, 0};
              for (int a = 0; a < dim; ++a)
                {
                  const int ca = (c >> a) & 1;
                  p[static_cast<std::size_t>(a)] =
                    ((split_axes >> a) & 1) ? ((h >> a) & 1) + ca : 2 * ca;
                }
              child[static_cast<std::size_t>(c)] = lattice_vertex(p);
            }
          cells.push_back(std::move(child));
        }
    }

    CellMatrix to_matrix(const std::vector<std::vector<Index>>& rows, int cols)
    {
      CellMatrix out(static_cast<Index>(rows.size()), cols);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j)
          out(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
      return out;
    }

    /// Refines each cell along the axes in split_axes[k].
    RefinementResult subdivide(const MeshTopology& mesh,
                               const std::vector<int>& split_axes,
                               const EdgeOrientation* orientation)
    {
      const auto& ref = mesh.reference();
      VertexPool pool(mesh.num_vertices(), mesh.coordinates());
      std::vector<std::vector<Index>> cells;
      RefinementResult out;
      out.map.child_cells.resize(static_cast<std::size_t>(mesh.num_cells()));

      std::vector<char> bisected(static_cast<std::size_t>(mesh.num_edges()), 0);
      for (Index k = 0; k < mesh.num_cells(); ++k)
        {
          const int mask = split_axes[static_cast<std::size_t>(k)];
          const auto first = static_cast<Index>(cells.size());
          split_cell(mesh, k, mask, pool, cells);
          for (auto c = first; c < static_cast<Index>(cells.size()); ++c)
            out.map.child_cells[static_cast<std::size_t>(k)].push_back(c);
          for (int l = 0; l < ref.edges_per_cell; ++l)
            {
              const int axis = ref.axis_bit(ref.edges[static_cast<std::size_t>(l)].parallel_class);
              if ((mask >> axis) & 1)
                bisected[static_cast<std::size_t>(mesh.edge_of_cell(k, l))] = 1;
            }
        }

      out.map.child_edges.resize(static_cast<std::size_t>(mesh.num_edges()));
      for (Index e = 0; e < mesh.num_edges(); ++e)
        {
          const auto [a, b] = mesh.edge(e);
          auto& children = out.map.child_edges[static_cast<std::size_t>(e)];
          if (!bisected[static_cast<std::size_t>(e)])
            {
              children.push_back({a, b});
              continue;
            }
          const Index m = pool.get({a, b}, VertexOrigin::EdgeMidpoint);
          children.push_back({std::min(a, m), std::max(a, m)});
          children.push_back({std::min(m, b), std::max(m, b)});
        }

      const Index num_vertices = pool.num_vertices();
      auto coordinates = pool.coordinates(mesh.dim());
      out.map.new_vertices = pool.take_new_vertices();
      out.mesh = build_topology(mesh.dim(), num_vertices,
                                to_matrix(cells, ref.vertices_per_cell),
                                std::move(coordinates));

      if (orientation != nullptr)
        {
          // every child edge runs along one parent axis; give it the
          // direction the parent cell's edges have along that axis
          const MeshTopology& fine = out.mesh;
          EdgeOrientation inherited(fine.num_edges(), true);
          std::vector<char> assigned(static_cast<std::size_t>(fine.num_edges()), 0);
          for (Index k = 0; k < mesh.num_cells(); ++k)
            for (const Index child : out.map.child_cells[static_cast<std::size_t>(k)])
              for (int l = 0; l < ref.edges_per_cell; ++l)
                {
                  const int c = ref.edges[static_cast<std::size_t>(l)].parallel_class;
                  const bool agree =
                    agrees_with_cell(mesh, *orientation, k, ref.class_members(c)[0]);
                  const auto& le = ref.edges[static_cast<std::size_t>(l)];
                  const Index source = fine.vertex(child, agree ? le.from : le.to);
                  const Index e = fine.edge_of_cell(child, l);
                  const bool forward = source == fine.edges()(e, 0);
                  auto& done = assigned[static_cast<std::size_t>(e)];
                  if (done && inherited.forward[e] != forward)
                    throw Error(ErrorCode::InvalidOrientation,
                                "parent cells disagree on a shared child edge");
                  inherited.forward[e] = forward;
                  done = 1;
                }
          out.orientation = std::move(inherited);
        }
      return out;
    }

    RefinementMap identity_map(const MeshTopology& mesh)
    {
      RefinementMap map;
      map.child_edges.resize(static_cast<std::size_t>(mesh.num_edges()));
      for (Index e = 0; e < mesh.num_edges(); ++e)
        map.child_edges[static_cast<std::size_t>(e)].push_back(mesh.edge(e));
      map.child_cells.resize(static_cast<std::size_t>(mesh.num_cells()));
      for (Index k = 0; k < mesh.num_cells(); ++k)
        map.child_cells[static_cast<std::size_t>(k)].push_back(k);
      return map;
    }

    void check_simplices(const CellMatrix& simplices, Index num_vertices,
                         int corners, ErrorCode degenerate)
    {
      if (simplices.rows() == 0)
        throw Error(ErrorCode::InvalidArgument, "no simplices given");
      if (simplices.cols() != corners)
        throw Error(ErrorCode::InvalidArgument,
                    "simplices need " + std::to_string(corners) + " vertices");
      for (Index s = 0; s < simplices.rows(); ++s)
        {
          for (int i = 0; i < corners; ++i)
            if (simplices(s, i) < 0 || simplices(s, i) >= num_vertices)
              throw Error(ErrorCode::IndexOutOfRange,
                          "simplex " + std::to_string(s));
          for (int i = 0; i < corners; ++i)
            for (int j = i + 1; j < corners; ++j)
              if (simplices(s, i) == simplices(s, j))
                throw Error(degenerate, "simplex " + std::to_string(s));
        }
    }
  } // namespace

  RefinementResult refine_along_sheets(const MeshTopology& mesh,
                                       const ClassPartition& partition,
                                       std::span<const Index> class_ids)
  {
    if (mesh.dim() != 3)
      throw Error(ErrorCode::DimensionMismatch,
                  "sheet refinement needs a hexahedral mesh");
    if (class_ids.empty())
      throw Error(ErrorCode::InvalidArgument, "no classes selected");
    std::vector<char> selected(partition.classes.size(), 0);
    for (const Index c : class_ids)
      {
        if (c < 0 || c >= partition.num_classes())
          throw Error(ErrorCode::UnknownClass,
                      "class " + std::to_string(c) + " does not exist");
        selected[static_cast<std::size_t>(c)] = 1;
      }

    const auto& ref = mesh.reference();
    std::vector<int> split_axes(static_cast<std::size_t>(mesh.num_cells()), 0);
    for (Index k = 0; k < mesh.num_cells(); ++k)
      for (int c = 0; c < ref.classes_per_cell; ++c)
        {
          const Index e = mesh.edge_of_cell(k, ref.class_members(c)[0]);
          if (selected[static_cast<std::size_t>(
                partition.class_of_edge[static_cast<std::size_t>(e)])])
            split_axes[static_cast<std::size_t>(k)] |= 1 << ref.axis_bit(c);
        }
    return subdivide(mesh, split_axes, nullptr);
  }

  RepairResult repair(const MeshTopology& mesh)
  {
    if (mesh.dim() != 3)
      throw Error(ErrorCode::DimensionMismatch,
                  "repair needs a hexahedral mesh");
    const ClassPartition classes = partition(mesh);
    OrientationResult result = orient(mesh, classes);
    if (result.oriented())
      return {mesh, identity_map(mesh), std::move(result), {}};

    std::vector<Index> failing;
    for (const auto& w : result.witnesses())
      failing.push_back(w.class_id);
    RefinementResult refined = refine_along_sheets(mesh, classes, failing);
    OrientationResult reoriented = orient(refined.mesh, partition(refined.mesh));
    return {std::move(refined.mesh), std::move(refined.map), std::move(reoriented),
            std::move(failing)};
  }

  RefinementResult uniform_refine(const MeshTopology& mesh,
                                  const EdgeOrientation* orientation)
  {
    if (orientation != nullptr &&
        (orientation->size() != mesh.num_edges() || !is_consistent(mesh, *orientation)))
      throw Error(ErrorCode::InvalidOrientation,
                  "the supplied orientation is not consistent with the mesh");
    const std::vector<int> all(static_cast<std::size_t>(mesh.num_cells()),
                               (1 << mesh.dim()) - 1);
    return subdivide(mesh, all, orientation);
  }

  MeshTopology extrude(const MeshTopology& mesh2d, int num_layers,
                       double layer_height)
  {
    if (mesh2d.dim() != 2)
      throw Error(ErrorCode::DimensionMismatch, "extrusion needs a 2d mesh");
    if (num_layers < 1)
      throw Error(ErrorCode::InvalidArgument, "need at least one layer");

    const Index nv = mesh2d.num_vertices();
    CellMatrix cells(mesh2d.num_cells() * num_layers, 8);
    for (int layer = 0; layer < num_layers; ++layer)
      for (Index k = 0; k < mesh2d.num_cells(); ++k)
        {
          const Index row = layer * mesh2d.num_cells() + k;
          for (int i = 0; i < 4; ++i)
            {
              cells(row, i) = mesh2d.vertex(k, i) + layer * nv;
              cells(row, i + 4) = mesh2d.vertex(k, i) + (layer + 1) * nv;
            }
        }

    std::optional<Coordinates> coordinates;
    if (mesh2d.coordinates())
      {
        coordinates = Coordinates(nv * (num_layers + 1), 3);
        for (int layer = 0; layer <= num_layers; ++layer)
          {
            auto block = coordinates->middleRows(layer * nv, nv);
            block.leftCols(2) = *mesh2d.coordinates();
            block.col(2).setConstant(layer * layer_height);
          }
      }
    return build_topology(3, nv * (num_layers + 1), std::move(cells),
                          std::move(coordinates));
  }

  MeshTopology tet_to_hex(const CellMatrix& tets, Index num_vertices,
                          const std::optional<Coordinates>& coordinates)
  {
    check_simplices(tets, num_vertices, 4, ErrorCode::DegenerateTet);
    VertexPool pool(num_vertices, coordinates);
    std::vector<std::vector<Index>> cells;
    for (Index t = 0; t < tets.rows(); ++t)
      {
        auto v = [&](int i) { return tets(t, i); };
        const Index center =
          pool.get({v(0), v(1), v(2), v(3)}, VertexOrigin::CellMidpoint);
        for (int i = 0; i < 4; ++i)
          {
            std::array<int, 3> o{};
            for (int j = 0, n = 0; j < 4; ++j)
              if (j != i)
                o[static_cast<std::size_t>(n++)] = j;
            auto mid = [&](int a) {
              return pool.get({v(i), v(a)}, VertexOrigin::EdgeMidpoint);
            };
            auto face = [&](int a, int b) {
              return pool.get({v(i), v(a), v(b)}, VertexOrigin::FaceMidpoint);
            };
            cells.push_back({v(i), mid(o[0]), mid(o[1]), face(o[0], o[1]),
                             mid(o[2]), face(o[0], o[2]), face(o[1], o[2]),
                             center});
          }
      }
    const Index n = pool.num_vertices();
    return build_topology(3, n, to_matrix(cells, 8), pool.coordinates(3));
  }

  MeshTopology tri_to_quad(const CellMatrix& triangles, Index num_vertices,
                           const std::optional<Coordinates>& coordinates)
  {
    check_simplices(triangles, num_vertices, 3, ErrorCode::DegenerateTriangle);
    VertexPool pool(num_vertices, coordinates);
    std::vector<std::vector<Index>> cells;
    for (Index t = 0; t < triangles.rows(); ++t)
      {
        auto v = [&](int i) { return triangles(t, i); };
        const Index center = pool.get({v(0), v(1), v(2)}, VertexOrigin::CellMidpoint);
        for (int i = 0; i < 3; ++i)
          {
            const int a = i == 0 ? 1 : 0;
            const int b = i == 2 ? 1 : 2;
            cells.push_back({v(i), pool.get({v(i), v(a)}, VertexOrigin::EdgeMidpoint),
                             pool.get({v(i), v(b)}, VertexOrigin::EdgeMidpoint),
                             center});
          }
      }
    const Index n = pool.num_vertices();
    return build_topology(2, n, to_matrix(cells, 4), pool.coordinates(2));
  }
} // namespace hexorient
