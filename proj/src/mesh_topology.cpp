#include <hexorient/errors.hpp>
#include <hexorient/mesh_topology.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hexorient
{
  namespace
  {
    // Local vertices of the six faces of the reference hexahedron, ordered
    // as (axis, side): x=0, x=1, y=0, y=1, z=0, z=1.
    constexpr int hex_faces[6][4] = {{0, 2, 4, 6},
                                     {1, 3, 5, 7},
                                     {0, 1, 4, 5},
                                     {2, 3, 6, 7},
                                     {0, 1, 2, 3},
                                     {4, 5, 6, 7}};

    bool face_contains(const int (&face)[4], int v)
    {
      return std::find(std::begin(face), std::end(face), v) != std::end(face);
    }

    struct EdgeEntry
    {
      Index high;
      Index cell;
      int local_edge;
    };

    /// Edge entries bucketed by their low vertex; each bucket sorted by high
    /// vertex, ties kept in (cell, local edge) order.
    struct BucketedEdges
    {
      std::vector<Index> offsets;
      std::vector<EdgeEntry> entries;
    };

    BucketedEdges bucket_edges(const ReferenceCell& ref, Index num_vertices,
                               const CellMatrix& cells,
                               const std::vector<bool>* skip = nullptr)
    {
      BucketedEdges out;
      out.offsets.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
      auto usable = [&](Index k) {
        return skip == nullptr || !(*skip)[static_cast<std::size_t>(k)];
      };
      for (Index k = 0; k < cells.rows(); ++k)
        if (usable(k))
          for (const auto& e : ref.edges)
            {
              const Index lo = std::min(cells(k, e.from), cells(k, e.to));
              ++out.offsets[static_cast<std::size_t>(lo) + 1];
            }
      std::partial_sum(out.offsets.begin(), out.offsets.end(),
                       out.offsets.begin());

      out.entries.resize(static_cast<std::size_t>(out.offsets.back()));
      std::vector<Index> cursor(out.offsets.begin(), out.offsets.end() - 1);
      for (Index k = 0; k < cells.rows(); ++k)
        if (usable(k))
          for (int l = 0; l < ref.edges_per_cell; ++l)
            {
              const auto& e = ref.edges[static_cast<std::size_t>(l)];
              const Index a = cells(k, e.from);
              const Index b = cells(k, e.to);
              const auto slot =
                static_cast<std::size_t>(cursor[static_cast<std::size_t>(
                  std::min(a, b))]++);
              out.entries[slot] = {std::max(a, b), k, l};
            }

      for (std::size_t v = 0; v + 1 < out.offsets.size(); ++v)
        std::stable_sort(out.entries.begin() + out.offsets[v],
                         out.entries.begin() + out.offsets[v + 1],
                         [](const EdgeEntry& x, const EdgeEntry& y) {
                           return x.high < y.high;
                         });
      return out;
    }

    using FaceKey = std::array<Index, 4>;

    struct FaceEntry
    {
      FaceKey key;
      Index cell;
      int face;
    };

    /// All hexahedron faces sorted by their sorted vertex quadruple.
    std::vector<FaceEntry> sorted_faces(const CellMatrix& cells,
                                        const std::vector<bool>* skip = nullptr)
    {
      std::vector<FaceEntry> faces;
      faces.reserve(static_cast<std::size_t>(cells.rows()) * 6);
      for (Index k = 0; k < cells.rows(); ++k)
        {
          if (skip != nullptr && (*skip)[static_cast<std::size_t>(k)])
            continue;
          for (int f = 0; f < 6; ++f)
            {
              FaceKey key;
              for (int i = 0; i < 4; ++i)
                key[static_cast<std::size_t>(i)] = cells(k, hex_faces[f][i]);
              std::sort(key.begin(), key.end());
              faces.push_back({key, k, f});
            }
        }
      std::sort(faces.begin(), faces.end(),
                [](const FaceEntry& x, const FaceEntry& y) {
                  return x.key < y.key;
                });
      return faces;
    }

    void check_shape(int dim, Index num_vertices, const CellMatrix& cells)
    {
      const auto& ref = reference_cell(dim);
      if (num_vertices < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
      if (cells.rows() > 0 && cells.cols() != ref.vertices_per_cell)
        throw Error(ErrorCode::InvalidArgument,
                    "cells of a dim=" + std::to_string(dim) + " mesh need " +
                      std::to_string(ref.vertices_per_cell) +
                      " vertices, got " + std::to_string(cells.cols()));
    }

    /// Empty optional if the cell is usable, otherwise the fatal kind.
    std::optional<DiagnosticKind> check_cell(const CellMatrix& cells, Index k,
                                             Index num_vertices)
    {
      for (Index i = 0; i < cells.cols(); ++i)
        if (cells(k, i) < 0 || cells(k, i) >= num_vertices)
          return DiagnosticKind::IndexOutOfRange;
      for (Index i = 0; i < cells.cols(); ++i)
        for (Index j = i + 1; j < cells.cols(); ++j)
          if (cells(k, i) == cells(k, j))
            return DiagnosticKind::DegenerateCell;
      return std::nullopt;
    }
  } // namespace

  std::optional<Index> MeshTopology::find_edge(Index a, Index b) const
  {
    const Index lo = std::min(a, b);
    const Index hi = std::max(a, b);
    Index first = 0;
    Index last = edges_.rows();
    while (first < last)
      {
        const Index mid = first + (last - first) / 2;
        if (edges_(mid, 0) < lo || (edges_(mid, 0) == lo && edges_(mid, 1) < hi))
          first = mid + 1;
        else
          last = mid;
      }
    if (first < edges_.rows() && edges_(first, 0) == lo && edges_(first, 1) == hi)
      return first;
    return std::nullopt;
  }

  MeshTopology build_topology(int dim, Index num_vertices, CellMatrix cells,
                              std::optional<Coordinates> coordinates)
  {
    check_shape(dim, num_vertices, cells);
    if (cells.rows() == 0)
      throw Error(ErrorCode::InvalidArgument, "mesh has no cells");
    if (coordinates &&
        (coordinates->rows() != num_vertices || coordinates->cols() != dim))
      throw Error(ErrorCode::InvalidArgument,
                  "coordinates must be a num_vertices x dim matrix");

    for (Index k = 0; k < cells.rows(); ++k)
      if (const auto bad = check_cell(cells, k, num_vertices))
        throw Error(*bad == DiagnosticKind::IndexOutOfRange ?
                      ErrorCode::IndexOutOfRange :
                      ErrorCode::DegenerateCell,
                    "cell " + std::to_string(k));

    const auto& ref = reference_cell(dim);
    MeshTopology mesh;
    mesh.dim_ = dim;
    mesh.num_vertices_ = num_vertices;

    const BucketedEdges buckets = bucket_edges(ref, num_vertices, cells);

    // number edges in lexicographic key order
    std::vector<Index> edge_of_entry(buckets.entries.size());
    Index num_edges = 0;
    for (std::size_t v = 0; v + 1 < buckets.offsets.size(); ++v)
      for (auto i = buckets.offsets[v]; i < buckets.offsets[v + 1]; ++i)
        {
          const auto idx = static_cast<std::size_t>(i);
          if (i == buckets.offsets[v] ||
              buckets.entries[idx].high != buckets.entries[idx - 1].high)
            ++num_edges;
          edge_of_entry[idx] = num_edges - 1;
        }

    mesh.edges_.resize(num_edges, 2);
    mesh.edge_of_cell_.resize(cells.rows(), ref.edges_per_cell);
    mesh.adjacency_offsets_.assign(static_cast<std::size_t>(num_edges) + 1, 0);
    mesh.adjacency_.resize(buckets.entries.size());
    for (std::size_t v = 0; v + 1 < buckets.offsets.size(); ++v)
      for (auto i = buckets.offsets[v]; i < buckets.offsets[v + 1]; ++i)
        {
          const auto idx = static_cast<std::size_t>(i);
          const auto& entry = buckets.entries[idx];
          const Index e = edge_of_entry[idx];
          mesh.edges_(e, 0) = static_cast<Index>(v);
          mesh.edges_(e, 1) = entry.high;
          mesh.edge_of_cell_(entry.cell, entry.local_edge) = e;
          mesh.adjacency_[idx] = {entry.cell, entry.local_edge};
          ++mesh.adjacency_offsets_[static_cast<std::size_t>(e) + 1];
        }
    std::partial_sum(mesh.adjacency_offsets_.begin(),
                     mesh.adjacency_offsets_.end(),
                     mesh.adjacency_offsets_.begin());

    mesh.boundary_edge_ = BoolArray::Constant(num_edges, false);
    if (dim == 2)
      {
        for (Index e = 0; e < num_edges; ++e)
          {
            const auto n = mesh.cells_of_edge(e).size();
            if (n > 2)
              throw Error(ErrorCode::NonManifold2D,
                          "edge (" + std::to_string(mesh.edges_(e, 0)) + "," +
                            std::to_string(mesh.edges_(e, 1)) + ") has " +
                            std::to_string(n) + " adjacent cells");
            mesh.boundary_edge_[e] = (n == 1);
          }
      }
    else
      {
        const auto faces = sorted_faces(cells);
        for (std::size_t i = 0; i < faces.size();)
          {
            std::size_t j = i + 1;
            while (j < faces.size() && faces[j].key == faces[i].key)
              ++j;
            if (j - i == 1)
              {
                const auto& f = hex_faces[faces[i].face];
                for (int l = 0; l < ref.edges_per_cell; ++l)
                  {
                    const auto& le = ref.edges[static_cast<std::size_t>(l)];
                    if (face_contains(f, le.from) && face_contains(f, le.to))
                      mesh.boundary_edge_[mesh.edge_of_cell_(faces[i].cell, l)] =
                        true;
                  }
              }
            i = j;
          }
      }

    mesh.cells_ = std::move(cells);
    mesh.coordinates_ = std::move(coordinates);
    return mesh;
  }

  std::span<const int> cell_parallel_partners(const MeshTopology& mesh,
                                              Index cell, int local_edge)
  {
    const auto& ref = mesh.reference();
    if (cell < 0 || cell >= mesh.num_cells())
      throw Error(ErrorCode::IndexOutOfRange,
                  "cell " + std::to_string(cell) + " does not exist");
    if (local_edge < 0 || local_edge >= ref.edges_per_cell)
      throw Error(ErrorCode::IndexOutOfRange,
                  "local edge " + std::to_string(local_edge) +
                    " does not exist");
    return ref.partners(local_edge);
  }

  std::string Diagnostic::describe() const
  {
    std::ostringstream out;
    switch (kind)
      {
        case DiagnosticKind::IndexOutOfRange:
          out << "IndexOutOfRange(cell " << index << ")";
          break;
        case DiagnosticKind::DegenerateCell:
          out << "DegenerateCell(cell " << index << ")";
          break;
        case DiagnosticKind::NonManifold2D:
          out << "NonManifold2D(edge " << vertices[0] << "-" << vertices[1]
              << ")";
          break;
        case DiagnosticKind::NonManifoldFace:
          out << "NonManifoldFace(" << vertices[0] << " " << vertices[1] << " "
              << vertices[2] << " " << vertices[3] << ")";
          break;
        case DiagnosticKind::IsolatedVertex:
          out << "IsolatedVertex(" << index << ")";
          break;
        case DiagnosticKind::DuplicateCell:
          out << "DuplicateCell(cell " << index << ")";
          break;
      }
    return out.str();
  }

  std::vector<Diagnostic> validate(int dim, Index num_vertices,
                                   const CellMatrix& cells)
  {
    check_shape(dim, num_vertices, cells);
    const auto& ref = reference_cell(dim);
    std::vector<Diagnostic> out;

    std::vector<bool> skip(static_cast<std::size_t>(cells.rows()), false);
    for (Index k = 0; k < cells.rows(); ++k)
      if (const auto bad = check_cell(cells, k, num_vertices))
        {
          out.push_back({*bad, true, k, {}});
          skip[static_cast<std::size_t>(k)] = true;
        }

    if (dim == 2)
      {
        const auto buckets = bucket_edges(ref, num_vertices, cells, &skip);
        for (std::size_t v = 0; v + 1 < buckets.offsets.size(); ++v)
          for (auto i = buckets.offsets[v]; i < buckets.offsets[v + 1];)
            {
              auto j = i + 1;
              while (j < buckets.offsets[v + 1] &&
                     buckets.entries[static_cast<std::size_t>(j)].high ==
                       buckets.entries[static_cast<std::size_t>(i)].high)
                ++j;
              if (j - i > 2)
                out.push_back({DiagnosticKind::NonManifold2D,
                               true,
                               -1,
                               {static_cast<Index>(v),
                                buckets.entries[static_cast<std::size_t>(i)]
                                  .high}});
              i = j;
            }
      }
    else
      {
        const auto faces = sorted_faces(cells, &skip);
        for (std::size_t i = 0; i < faces.size();)
          {
            std::size_t j = i + 1;
            while (j < faces.size() && faces[j].key == faces[i].key)
              ++j;
            if (j - i > 2)
              out.push_back({DiagnosticKind::NonManifoldFace,
                             false,
                             -1,
                             {faces[i].key.begin(), faces[i].key.end()}});
            i = j;
          }
      }

    std::vector<bool> used(static_cast<std::size_t>(num_vertices), false);
    std::vector<std::pair<std::vector<Index>, Index>> sorted_cells;
    for (Index k = 0; k < cells.rows(); ++k)
      {
        if (skip[static_cast<std::size_t>(k)])
          continue;
        std::vector<Index> tuple(cells.row(k).begin(), cells.row(k).end());
        for (const Index v : tuple)
          used[static_cast<std::size_t>(v)] = true;
        std::sort(tuple.begin(), tuple.end());
        sorted_cells.emplace_back(std::move(tuple), k);
      }
    for (Index v = 0; v < num_vertices; ++v)
      if (!used[static_cast<std::size_t>(v)])
        out.push_back({DiagnosticKind::IsolatedVertex, false, v, {}});

    std::sort(sorted_cells.begin(), sorted_cells.end());
    for (std::size_t i = 1; i < sorted_cells.size(); ++i)
      if (sorted_cells[i].first == sorted_cells[i - 1].first)
        out.push_back(
          {DiagnosticKind::DuplicateCell, false, sorted_cells[i].second, {}});

    return out;
  }

  std::vector<Diagnostic> validate(const MeshTopology& mesh)
  {
    return validate(mesh.dim(), mesh.num_vertices(), mesh.cells());
  }

  bool has_fatal(const std::vector<Diagnostic>& diagnostics)
  {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.fatal; });
  }
} // namespace hexorient
