#include <hexorient/errors.hpp>
#include <hexorient/reference_cell.hpp>

#include <array>
#include <string>

namespace hexorient
{
  namespace
  {
    constexpr std::array<LocalEdge, 4> quad_edges{{
      {0, 2, 0},
      {1, 3, 0},
      {0, 1, 1},
      {2, 3, 1},
    }};
    constexpr std::array<int, 4> quad_class_members{0, 1, 2, 3};
    constexpr std::array<int, 4> quad_partners{1, 0, 3, 2};
    constexpr std::array<int, 2> quad_axis_bits{1, 0};

    constexpr std::array<LocalEdge, 12> hex_edges{{
      {0, 1, 0},
      {2, 3, 0},
      {4, 5, 0},
      {6, 7, 0},
      {0, 2, 1},
      {1, 3, 1},
      {4, 6, 1},
      {5, 7, 1},
      {0, 4, 2},
      {1, 5, 2},
      {2, 6, 2},
      {3, 7, 2},
    }};
    constexpr std::array<int, 12> hex_class_members{
      0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    // three partners per local edge, row l holds the partners of l
    constexpr std::array<int, 36> hex_partners{
      1, 2,  3,  0, 2,  3,  0, 1, 3,  0, 1, 2,  //
      5, 6,  7,  4, 6,  7,  4, 5, 7,  4, 5, 6,  //
      9, 10, 11, 8, 10, 11, 8, 9, 11, 8, 9, 10, //
    };
    constexpr std::array<int, 3> hex_axis_bits{0, 1, 2};

    struct Tables
    {
      std::span<const int> class_members;
      std::span<const int> partners;
      std::span<const int> axis_bits;
    };

    Tables tables(int dim)
    {
      if (dim == 2)
        return {quad_class_members, quad_partners, quad_axis_bits};
      return {hex_class_members, hex_partners, hex_axis_bits};
    }

    const ReferenceCell quad{2, 4, 4, 2, 2, quad_edges};
    const ReferenceCell hex{3, 8, 12, 3, 4, hex_edges};
  } // namespace

  std::span<const int> ReferenceCell::class_members(int c) const
  {
    return tables(dim).class_members.subspan(
      static_cast<std::size_t>(c * edges_per_class),
      static_cast<std::size_t>(edges_per_class));
  }

  std::span<const int> ReferenceCell::partners(int l) const
  {
    const auto n = static_cast<std::size_t>(edges_per_class - 1);
    return tables(dim).partners.subspan(static_cast<std::size_t>(l) * n, n);
  }

  int ReferenceCell::axis_bit(int c) const
  {
    return tables(dim).axis_bits[static_cast<std::size_t>(c)];
  }

  int ReferenceCell::class_of_axis_bit(int b) const
  {
    for (int c = 0; c < classes_per_cell; ++c)
      if (axis_bit(c) == b)
        return c;
    return -1;
  }

  int ReferenceCell::local_edge(int a, int b) const
  {
    for (int l = 0; l < edges_per_cell; ++l)
      {
        const auto& e = edges[static_cast<std::size_t>(l)];
        if ((e.from == a && e.to == b) || (e.from == b && e.to == a))
          return l;
      }
    return -1;
  }

  const ReferenceCell& reference_cell(int dim)
  {
    if (dim == 2)
      return quad;
    if (dim == 3)
      return hex;
    throw Error(ErrorCode::InvalidArgument,
                "dimension must be 2 or 3, got " + std::to_string(dim));
  }
} // namespace hexorient
