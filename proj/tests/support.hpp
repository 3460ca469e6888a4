#pragma once

// Mesh builders and random corpora shared by the unit and acceptance tests.

#include <hexorient/generators.hpp>
#include <hexorient/mesh_topology.hpp>
#include <hexorient/orientation.hpp>
#include <hexorient/parallel_classes.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace hexorient::testing
{
  inline MeshTopology make_mesh(int dim, std::initializer_list<std::vector<Index>> rows)
  {
    const int width = dim == 2 ? 4 : 8;
    CellMatrix cells(static_cast<Index>(rows.size()), width);
    Index r = 0;
    Index nv = 0;
    for (const auto& row : rows)
      {
        for (int i = 0; i < width; ++i)
          {
            cells(r, i) = row[static_cast<std::size_t>(i)];
            nv = std::max(nv, row[static_cast<std::size_t>(i)] + 1);
          }
        ++r;
      }
    return build_topology(dim, nv, std::move(cells));
  }

  /// Renumbers the vertices used by `cells` to 0..n-1 in order of first use.
  inline MeshTopology compact(int dim, CellMatrix cells)
  {
    std::map<Index, Index> ids;
    for (Index k = 0; k < cells.rows(); ++k)
      for (Index i = 0; i < cells.cols(); ++i)
        {
          const auto [it, inserted] =
            ids.emplace(cells(k, i), static_cast<Index>(ids.size()));
          cells(k, i) = it->second;
        }
    return build_topology(dim, static_cast<Index>(ids.size()), std::move(cells));
  }

  /// The 4 (2d) or 24 (3d) orientation-preserving symmetries of the reference
  /// cell, as maps new local vertex -> old local vertex.
  inline std::vector<std::vector<int>> cell_symmetries(int dim)
  {
    const int nv = dim == 2 ? 4 : 8;
    auto apply = [nv](const std::vector<int>& p, const std::vector<int>& q) {
      std::vector<int> r(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i)
        r[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
      return r;
    };
    std::vector<std::vector<int>> generators;
    if (dim == 2)
      generators = {{1, 3, 0, 2}};
    else
      {
        // quarter turns about z and about x, acting on (x, y, z) bit triples
        std::vector<int> about_z(8), about_x(8);
        for (int v = 0; v < 8; ++v)
          {
            const int x = v & 1, y = (v >> 1) & 1, z = (v >> 2) & 1;
            about_z[static_cast<std::size_t>(v)] = (1 - y) | (x << 1) | (z << 2);
            about_x[static_cast<std::size_t>(v)] = x | ((1 - z) << 1) | (y << 2);
          }
        generators = {about_z, about_x};
      }
    std::vector<int> identity(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i)
      identity[static_cast<std::size_t>(i)] = i;
    std::set<std::vector<int>> group{identity};
    std::deque<std::vector<int>> frontier{identity};
    while (!frontier.empty())
      {
        const auto p = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators)
          if (auto q = apply(p, g); group.insert(q).second)
            frontier.push_back(q);
      }
    return {group.begin(), group.end()};
  }

  /// Rewrites every cell tuple with a random equivalent vertex ordering.
  inline MeshTopology rotate_tuples(const MeshTopology& mesh, std::mt19937& rng)
  {
    const auto symmetries = cell_symmetries(mesh.dim());
    std::uniform_int_distribution<std::size_t> pick(0, symmetries.size() - 1);
    CellMatrix cells = mesh.cells();
    for (Index k = 0; k < cells.rows(); ++k)
      {
        const auto& p = symmetries[pick(rng)];
        for (Index i = 0; i < cells.cols(); ++i)
          cells(k, i) = mesh.vertex(k, p[static_cast<std::size_t>(i)]);
      }
    return build_topology(mesh.dim(), mesh.num_vertices(), std::move(cells),
                          mesh.coordinates());
  }

  /// Cells of a random connected subset of an n x m grid, grown from a random
  /// seed cell; each neighbor is accepted with probability `density`.
  inline CellMatrix random_grid_subset(std::mt19937& rng, Index n, Index m,
                                       double density = 0.6)
  {
    std::uniform_int_distribution<Index> pick_i(0, n - 1), pick_j(0, m - 1);
    std::bernoulli_distribution accept(density);
    std::vector<char> taken(static_cast<std::size_t>(n * m), 0);
    std::vector<std::array<Index, 2>> chosen;
    std::deque<std::array<Index, 2>> frontier{{pick_i(rng), pick_j(rng)}};
    taken[static_cast<std::size_t>(frontier.front()[1] * n + frontier.front()[0])] = 1;
    while (!frontier.empty())
      {
        const auto [i, j] = frontier.front();
        frontier.pop_front();
        chosen.push_back({i, j});
        const std::array<std::array<Index, 2>, 4> next{
          {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}}};
        for (const auto& [a, b] : next)
          {
            if (a < 0 || b < 0 || a >= n || b >= m)
              continue;
            auto& t = taken[static_cast<std::size_t>(b * n + a)];
            if (!t && accept(rng))
              {
                t = 1;
                frontier.push_back({a, b});
              }
          }
      }
    CellMatrix cells(static_cast<Index>(chosen.size()), 4);
    const Index nx = n + 1;
    for (std::size_t r = 0; r < chosen.size(); ++r)
      {
        const auto [i, j] = chosen[r];
        cells.row(static_cast<Index>(r)) << j * nx + i, j * nx + i + 1,
          (j + 1) * nx + i, (j + 1) * nx + i + 1;
      }
    return cells;
  }

  /// A random connected planar quad mesh with compact vertex numbering and
  /// randomly rotated cell tuples.
  inline MeshTopology random_planar_mesh(std::mt19937& rng, Index max_size)
  {
    std::uniform_int_distribution<Index> size(1, max_size);
    const Index n = size(rng), m = size(rng);
    return rotate_tuples(compact(2, random_grid_subset(rng, n, m)), rng);
  }

  /// Triangles from splitting every quad of `quads` along a random diagonal.
  inline CellMatrix random_triangulation(std::mt19937& rng, const MeshTopology& quads)
  {
    std::bernoulli_distribution coin;
    CellMatrix tris(2 * quads.num_cells(), 3);
    for (Index k = 0; k < quads.num_cells(); ++k)
      {
        const auto v = [&](int i) { return quads.vertex(k, i); };
        if (coin(rng))
          {
            tris.row(2 * k) << v(0), v(1), v(3);
            tris.row(2 * k + 1) << v(0), v(3), v(2);
          }
        else
          {
            tris.row(2 * k) << v(0), v(1), v(2);
            tris.row(2 * k + 1) << v(1), v(3), v(2);
          }
      }
    return tris;
  }

  /// Random quads on a handful of vertices glued along arbitrary edges; often
  /// non-planar and sometimes non-orientable. Only meshes that build and have
  /// at most `max_edges` edges are returned.
  inline std::optional<MeshTopology> random_glued_quads(std::mt19937& rng,
                                                        Index num_vertices,
                                                        Index num_cells,
                                                        Index max_edges)
  {
    std::vector<Index> pool(static_cast<std::size_t>(num_vertices));
    for (Index v = 0; v < num_vertices; ++v)
      pool[static_cast<std::size_t>(v)] = v;
    CellMatrix cells(num_cells, 4);
    for (Index k = 0; k < num_cells; ++k)
      {
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int i = 0; i < 4; ++i)
          cells(k, i) = pool[static_cast<std::size_t>(i)];
      }
    try
      {
        auto mesh = compact(2, std::move(cells));
        if (mesh.num_edges() > max_edges)
          return std::nullopt;
        return mesh;
      }
    catch (const std::exception&)
      {
        return std::nullopt;
      }
  }

  /// Number of classes whose orientation failed.
  inline std::size_t failing_classes(const MeshTopology& mesh)
  {
    return orient(mesh, partition(mesh)).witnesses().size();
  }

  inline bool orientable(const MeshTopology& mesh)
  {
    return orient(mesh, partition(mesh)).oriented();
  }

  /// Checks disjointness, coverage, id/lookup agreement and local closure.
  inline bool partition_is_valid(const MeshTopology& mesh, const ClassPartition& p)
  {
    std::vector<int> seen(static_cast<std::size_t>(mesh.num_edges()), 0);
    for (std::size_t c = 0; c < p.classes.size(); ++c)
      {
        const auto& cls = p.classes[c];
        if (cls.id != static_cast<Index>(c) || cls.edges.size() < 2)
          return false;
        for (const Index e : cls.edges)
          {
            if (p.class_of_edge[static_cast<std::size_t>(e)] != cls.id)
              return false;
            ++seen[static_cast<std::size_t>(e)];
            for (const auto& [cell, local] : mesh.cells_of_edge(e))
              for (const int partner : cell_parallel_partners(mesh, cell, local))
                if (p.class_of_edge[static_cast<std::size_t>(
                      mesh.edge_of_cell(cell, partner))] != cls.id)
                  return false;
          }
      }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
  }
} // namespace hexorient::testing
