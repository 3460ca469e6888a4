#include <hexorient/errors.hpp>
#include <hexorient/manifold_oracle.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <tuple>

namespace hexorient
{
  namespace
  {
    /// +1 if the cyclic vertex order of triangle t runs a -> b, else -1.
    int induced_direction(const TriComplex& complex, Index t, Index a, Index b)
    {
      for (int i = 0; i < 3; ++i)
        if (complex.triangles(t, i) == a &&
            complex.triangles(t, (i + 1) % 3) == b)
          return 1;
      return -1;
    }
  } // namespace

  TriComplex triangulate(const MeshTopology& mesh, Diagonal diagonal)
  {
    if (mesh.dim() != 2)
      throw Error(ErrorCode::DimensionMismatch,
                  "the surface oracle needs a 2d quad mesh");

    constexpr std::array<std::array<int, 3>, 2> main_split{{{0, 1, 3}, {0, 3, 2}}};
    constexpr std::array<std::array<int, 3>, 2> anti_split{{{0, 1, 2}, {1, 3, 2}}};
    const auto& split = diagonal == Diagonal::Main ? main_split : anti_split;

    TriComplex out;
    out.triangles.resize(2 * mesh.num_cells(), 3);
    for (Index k = 0; k < mesh.num_cells(); ++k)
      for (int t = 0; t < 2; ++t)
        for (int i = 0; i < 3; ++i)
          out.triangles(2 * k + t, i) =
            mesh.vertex(k, split[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]);

    struct Entry
    {
      Index lo, hi, triangle;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(out.triangles.rows()) * 3);
    for (Index t = 0; t < out.triangles.rows(); ++t)
      for (int i = 0; i < 3; ++i)
        {
          const Index a = out.triangles(t, i);
          const Index b = out.triangles(t, (i + 1) % 3);
          entries.push_back({std::min(a, b), std::max(a, b), t});
        }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      return std::tie(x.lo, x.hi, x.triangle) < std::tie(y.lo, y.hi, y.triangle);
    });

    std::vector<std::array<Index, 2>> keys;
    out.edge_offsets.push_back(0);
    for (std::size_t i = 0; i < entries.size();)
      {
        std::size_t j = i;
        while (j < entries.size() && entries[j].lo == entries[i].lo &&
               entries[j].hi == entries[i].hi)
          out.edge_triangles.push_back(entries[j++].triangle);
        if (j - i > 2)
          throw Error(ErrorCode::NonManifoldInput,
                      "edge (" + std::to_string(entries[i].lo) + "," +
                        std::to_string(entries[i].hi) + ") has " +
                        std::to_string(j - i) + " adjacent triangles");
        keys.push_back({entries[i].lo, entries[i].hi});
        out.edge_offsets.push_back(static_cast<Index>(out.edge_triangles.size()));
        i = j;
      }
    out.edges.resize(static_cast<Index>(keys.size()), 2);
    for (std::size_t i = 0; i < keys.size(); ++i)
      {
        out.edges(static_cast<Index>(i), 0) = keys[i][0];
        out.edges(static_cast<Index>(i), 1) = keys[i][1];
      }
    return out;
  }

  bool surface_orientable(const MeshTopology& mesh, Diagonal diagonal)
  {
    const TriComplex complex = triangulate(mesh, diagonal);
    const Index n = complex.triangles.rows();

    // edges of each triangle, to walk to neighbors in O(1)
    std::vector<std::array<Index, 3>> triangle_edges(static_cast<std::size_t>(n));
    std::vector<int> filled(static_cast<std::size_t>(n), 0);
    for (Index e = 0; e < complex.edges.rows(); ++e)
      for (const Index t : complex.triangles_of_edge(e))
        triangle_edges[static_cast<std::size_t>(t)]
                      [static_cast<std::size_t>(filled[static_cast<std::size_t>(t)]++)] = e;

    // winding: 0 unset, +1 as listed, -1 reversed
    std::vector<int> winding(static_cast<std::size_t>(n), 0);
    for (Index start = 0; start < n; ++start)
      {
        if (winding[static_cast<std::size_t>(start)] != 0)
          continue;
        winding[static_cast<std::size_t>(start)] = 1;
        std::deque<Index> queue{start};
        while (!queue.empty())
          {
            const Index t = queue.front();
            queue.pop_front();
            const int wt = winding[static_cast<std::size_t>(t)];
            for (const Index e : triangle_edges[static_cast<std::size_t>(t)])
              {
                const Index a = complex.edges(e, 0);
                const Index b = complex.edges(e, 1);
                for (const Index u : complex.triangles_of_edge(e))
                  {
                    if (u == t)
                      continue;
                    // the shared edge must be traversed in opposite directions
                    const int wanted = -wt * induced_direction(complex, t, a, b) *
                                       induced_direction(complex, u, a, b);
                    int& wu = winding[static_cast<std::size_t>(u)];
                    if (wu == 0)
                      {
                        wu = wanted;
                        queue.push_back(u);
                      }
                    else if (wu != wanted)
                      return false;
                  }
              }
          }
      }
    return true;
  }
} // namespace hexorient
