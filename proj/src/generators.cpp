#include <hexorient/errors.hpp>
#include <hexorient/generators.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace hexorient
{
  MeshTopology grid(Index n, Index m)
  {
    if (n < 1 || m < 1)
      throw Error(ErrorCode::InvalidArgument, "grid sizes must be >= 1");
    const Index nx = n + 1;
    auto id = [nx](Index i, Index j) { return j * nx + i; };

    CellMatrix cells(n * m, 4);
    for (Index j = 0; j < m; ++j)
      for (Index i = 0; i < n; ++i)
        cells.row(j * n + i) << id(i, j), id(i + 1, j), id(i, j + 1),
          id(i + 1, j + 1);

    Coordinates xy(nx * (m + 1), 2);
    for (Index j = 0; j <= m; ++j)
      for (Index i = 0; i <= n; ++i)
        xy.row(id(i, j)) << static_cast<double>(i), static_cast<double>(j);
    return build_topology(2, nx * (m + 1), std::move(cells), std::move(xy));
  }

  MeshTopology grid3(Index n, Index m, Index l)
  {
    if (n < 1 || m < 1 || l < 1)
      throw Error(ErrorCode::InvalidArgument, "grid sizes must be >= 1");
    const Index nx = n + 1;
    const Index ny = m + 1;
    auto id = [nx, ny](Index i, Index j, Index k) { return (k * ny + j) * nx + i; };

    CellMatrix cells(n * m * l, 8);
    for (Index k = 0; k < l; ++k)
      for (Index j = 0; j < m; ++j)
        for (Index i = 0; i < n; ++i)
          {
            auto row = cells.row((k * m + j) * n + i);
            for (int c = 0; c < 8; ++c)
              row(c) = id(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
          }

    Coordinates xyz(nx * ny * (l + 1), 3);
    for (Index k = 0; k <= l; ++k)
      for (Index j = 0; j <= m; ++j)
        for (Index i = 0; i <= n; ++i)
          xyz.row(id(i, j, k)) << static_cast<double>(i),
            static_cast<double>(j), static_cast<double>(k);
    return build_topology(3, nx * ny * (l + 1), std::move(cells), std::move(xyz));
  }

  MeshTopology twisted_ring(Index n, int quarter_turns)
  {
    if (n < 3)
      throw Error(ErrorCode::InvalidArgument, "a ring needs at least 3 cells");
    if (quarter_turns < 0 || quarter_turns > 3)
      throw Error(ErrorCode::InvalidTwist,
                  "quarter_turns must be in 0..3, got " +
                    std::to_string(quarter_turns));

    // square corners in counterclockwise order in the (radial, axial) plane;
    // corner c sits at (c & 1, c >> 1)
    constexpr int cycle[4] = {0, 1, 3, 2};
    int position[4] = {};
    for (int i = 0; i < 4; ++i)
      position[cycle[i]] = i;
    auto rotated = [&](int c) { return cycle[(position[c] + quarter_turns) % 4]; };

    CellMatrix cells(n, 8);
    for (Index i = 0; i < n; ++i)
      for (int c = 0; c < 4; ++c)
        {
          cells(i, c) = 4 * i + c;
          cells(i, c + 4) = i + 1 < n ? 4 * (i + 1) + c : rotated(c);
        }

    // torus embedding; the square turns gradually so that the seam closes
    constexpr double major = 3.0;
    constexpr double half = 0.5;
    Coordinates xyz(4 * n, 3);
    for (Index i = 0; i < n; ++i)
      {
        const double phi = 2 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(n);
        const double twist = (std::numbers::pi / 2) * quarter_turns *
                             static_cast<double>(i) / static_cast<double>(n);
        for (int c = 0; c < 4; ++c)
          {
            const double r0 = (c & 1) ? half : -half;
            const double z0 = (c >> 1) ? half : -half;
            const double r = std::cos(twist) * r0 - std::sin(twist) * z0;
            const double z = std::sin(twist) * r0 + std::cos(twist) * z0;
            xyz.row(4 * i + c) << (major + r) * std::cos(phi),
              (major + r) * std::sin(phi), z;
          }
      }
    return build_topology(3, 4 * n, std::move(cells), std::move(xyz));
  }

  MeshTopology moebius_strip(Index n, bool twisted)
  {
    if (n < 3)
      throw Error(ErrorCode::InvalidArgument, "a strip needs at least 3 cells");
    CellMatrix cells(n, 4);
    for (Index i = 0; i < n; ++i)
      {
        const bool seam = i + 1 == n;
        const Index next = seam ? 0 : 2 * (i + 1);
        cells(i, 0) = 2 * i;
        cells(i, 1) = 2 * i + 1;
        cells(i, 2) = seam && twisted ? next + 1 : next;
        cells(i, 3) = seam && twisted ? next : next + 1;
      }

    // planar layout as concentric circles, one per rail
    Coordinates xy(2 * n, 2);
    for (Index i = 0; i < n; ++i)
      {
        const double phi = 2 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(n);
        for (int rail = 0; rail < 2; ++rail)
          xy.row(2 * i + rail) << (2.0 + rail) * std::cos(phi),
            (2.0 + rail) * std::sin(phi);
      }
    return build_topology(2, 2 * n, std::move(cells), std::move(xy));
  }

  MeshTopology cube_surface()
  {
    CellMatrix cells(6, 4);
    cells << 0, 2, 4, 6, //
      1, 3, 5, 7,        //
      0, 1, 4, 5,        //
      2, 3, 6, 7,        //
      0, 1, 2, 3,        //
      4, 5, 6, 7;
    // outer square for z = 0, inner square for z = 1
    Coordinates xy(8, 2);
    for (int v = 0; v < 8; ++v)
      {
        const double scale = (v >> 2) ? 1.0 : 3.0;
        xy.row(v) << scale * ((v & 1) ? 1.0 : -1.0),
          scale * (((v >> 1) & 1) ? 1.0 : -1.0);
      }
    return build_topology(2, 8, std::move(cells), std::move(xy));
  }

  CellMatrix cube_tets(int count)
  {
    CellMatrix tets;
    if (count == 5)
      {
        tets.resize(5, 4);
        tets << 0, 1, 2, 4, //
          3, 1, 2, 7,       //
          5, 1, 4, 7,       //
          6, 2, 4, 7,       //
          1, 2, 4, 7;
      }
    else if (count == 6)
      {
        // all six tets share the diagonal 0-7; one per axis ordering
        tets.resize(6, 4);
        tets << 0, 1, 3, 7, //
          0, 1, 5, 7,       //
          0, 2, 3, 7,       //
          0, 2, 6, 7,       //
          0, 4, 5, 7,       //
          0, 4, 6, 7;
      }
    else
      throw Error(ErrorCode::InvalidArgument,
                  "the cube splits into 5 or 6 tetrahedra, not " +
                    std::to_string(count));
    return tets;
  }

  Coordinates cube_corners()
  {
    Coordinates xyz(8, 3);
    for (int v = 0; v < 8; ++v)
      xyz.row(v) << (v & 1), ((v >> 1) & 1), ((v >> 2) & 1);
    return xyz;
  }
} // namespace hexorient
