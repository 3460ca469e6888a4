#pragma once

#include <hexorient/mesh_topology.hpp>

namespace hexorient
{
  /// n x m structured quad grid, vertex (i, j) numbered j * (n + 1) + i.
  MeshTopology grid(Index n, Index m);

  /// n x m x l structured hex grid, x fastest.
  MeshTopology grid3(Index n, Index m, Index l);

  /// Ring of n hexahedra around a torus. Each cross-section is a square of
  /// four vertices (section i owns vertices 4i .. 4i+3); the last cell joins
  /// section n-1 back to section 0 after rotating the square by
  /// quarter_turns * 90 degrees. Throws InvalidTwist for quarter_turns
  /// outside 0..3 and InvalidArgument for n < 3.
  MeshTopology twisted_ring(Index n, int quarter_turns);

  /// Closed strip of n quads with two rails. With `twisted` the rails swap
  /// at the seam (a Moebius strip); without it the strip is an annulus.
  MeshTopology moebius_strip(Index n, bool twisted = true);

  /// The six faces of the unit cube as a closed quad surface.
  MeshTopology cube_surface();

  /// The unit cube cut into 5 or 6 face-conforming tetrahedra, as rows of
  /// four vertex indices into the 8 cube corners (x fastest).
  CellMatrix cube_tets(int count);

  /// Corner coordinates of the unit cube, x fastest.
  Coordinates cube_corners();
} // namespace hexorient
