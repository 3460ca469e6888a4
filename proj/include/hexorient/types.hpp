#pragma once

#include <Eigen/Core>

namespace hexorient
{
  using Index = Eigen::Index;

  /// One row per cell (or simplex), columns are vertex indices in reference
  /// order. Row-major so that a row is one contiguous vertex tuple.
  using CellMatrix =
    Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Canonical edge keys, one (min, max) vertex pair per row.
  using EdgeKeys = Eigen::Matrix<Index, Eigen::Dynamic, 2, Eigen::RowMajor>;

  /// Vertex positions, one row per vertex. Carried along, never read by the
  /// combinatorial algorithms.
  using Coordinates = Eigen::MatrixXd;

  using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;
} // namespace hexorient
