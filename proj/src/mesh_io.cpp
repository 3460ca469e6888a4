#include <hexorient/errors.hpp>
#include <hexorient/mesh_io.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace hexorient
{
  namespace
  {
    struct Line
    {
      std::size_t number;
      std::vector<std::string_view> tokens;
    };

    /// Yields significant lines (not blank, not comments) split on blanks.
    class LineReader
    {
    public:
      explicit LineReader(std::string_view text)
        : text_(text)
      {}

      std::optional<Line> next()
      {
        while (pos_ < text_.size())
          {
            const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
            const std::string_view raw = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++number_;

            Line line{number_, {}};
            std::size_t i = 0;
            while (i < raw.size())
              {
                while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                  ++i;
                std::size_t j = i;
                while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t')
                  ++j;
                if (j > i)
                  line.tokens.push_back(raw.substr(i, j - i));
                i = j;
              }
            if (line.tokens.empty() || line.tokens.front().front() == '#')
              continue;
            return line;
          }
        return std::nullopt;
      }

      std::size_t last_line() const { return number_; }

    private:
      std::string_view text_;
      std::size_t pos_ = 0;
      std::size_t number_ = 0;
    };

    [[noreturn]] void parse_error(const std::string& message, std::size_t line)
    {
      throw Error(ErrorCode::ParseError, message, line);
    }

    [[noreturn]] void schema_error(const std::string& message, std::size_t line)
    {
      throw Error(ErrorCode::SchemaError, message, line);
    }

    Index to_integer(std::string_view token, std::size_t line)
    {
      Index value = 0;
      const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        parse_error("expected an integer, got '" + std::string(token) + "'", line);
      return value;
    }

    double to_double(std::string_view token, std::size_t line)
    {
      double value = 0;
      const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() ||
          !std::isfinite(value))
        parse_error("expected a finite decimal number, got '" +
                      std::string(token) + "'",
                    line);
      return value;
    }

    Line expect_line(LineReader& reader, const std::string& what)
    {
      auto line = reader.next();
      if (!line)
        schema_error("unexpected end of input, expected " + what,
                     reader.last_line());
      return *line;
    }

    /// A `<keyword> <count>` header line; returns the count.
    Index header_count(const Line& line, std::string_view keyword)
    {
      if (line.tokens.front() != keyword)
        parse_error("expected '" + std::string(keyword) + "', got '" +
                      std::string(line.tokens.front()) + "'",
                    line.number);
      if (line.tokens.size() != 2)
        parse_error("expected '" + std::string(keyword) + " <count>'", line.number);
      const Index n = to_integer(line.tokens[1], line.number);
      if (n < 0)
        schema_error("negative count", line.number);
      return n;
    }

    void expect_end(LineReader& reader)
    {
      if (const auto extra = reader.next())
        schema_error("unexpected content after the last section", extra->number);
    }

    void append_double(std::string& out, double x)
    {
      char buffer[64];
      const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
      out.append(buffer, result.ptr);
    }

    void append_integer(std::string& out, Index x)
    {
      char buffer[32];
      const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
      out.append(buffer, result.ptr);
    }

    std::string_view section_name(SectionKind kind)
    {
      switch (kind)
        {
          case SectionKind::Cells:
            return "cells";
          case SectionKind::Tets:
            return "tets";
          case SectionKind::Tris:
            return "tris";
        }
      return "cells";
    }

    int section_width(SectionKind kind, int dim)
    {
      switch (kind)
        {
          case SectionKind::Cells:
            return dim == 2 ? 4 : 8;
          case SectionKind::Tets:
            return 4;
          case SectionKind::Tris:
            return 3;
        }
      return 0;
    }
  } // namespace

  MeshDocument parse_mesh_document(std::string_view text)
  {
    LineReader reader(text);
    MeshDocument doc;

    const Line magic = expect_line(reader, "'meshfmt 1'");
    if (magic.tokens.front() != "meshfmt" || magic.tokens.size() != 2)
      parse_error("expected 'meshfmt 1'", magic.number);
    if (magic.tokens[1] != "1")
      schema_error("unsupported format version '" + std::string(magic.tokens[1]) +
                     "'",
                   magic.number);

    const Line dim_line = expect_line(reader, "'dim'");
    const Index dim = header_count(dim_line, "dim");
    if (dim != 2 && dim != 3)
      schema_error("dim must be 2 or 3", dim_line.number);
    doc.dim = static_cast<int>(dim);

    const Line vertex_line = expect_line(reader, "'vertices'");
    const Index num_vertices = header_count(vertex_line, "vertices");
    std::vector<double> coordinates;
    for (Index v = 0; v < num_vertices; ++v)
      {
        const auto line = reader.next();
        if (!line)
          schema_error("vertices section declares " + std::to_string(num_vertices) +
                         " rows, found " + std::to_string(v),
                       vertex_line.number);
        if (static_cast<Index>(line->tokens.size()) != dim)
          schema_error("a vertex needs " + std::to_string(dim) + " coordinates",
                       line->number);
        for (const auto token : line->tokens)
          coordinates.push_back(to_double(token, line->number));
      }
    doc.coordinates = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                                     Eigen::Dynamic, Eigen::RowMajor>>(
      coordinates.data(), num_vertices, dim);

    const Line section = expect_line(reader, "a connectivity section");
    const std::string_view keyword = section.tokens.front();
    if (keyword == "cells")
      doc.kind = SectionKind::Cells;
    else if (keyword == "tets")
      doc.kind = SectionKind::Tets;
    else if (keyword == "tris")
      doc.kind = SectionKind::Tris;
    else
      parse_error("expected 'cells', 'tets' or 'tris', got '" + std::string(keyword) +
                    "'",
                  section.number);
    if (doc.kind == SectionKind::Tets && dim != 3)
      schema_error("tets require dim 3", section.number);
    if (doc.kind == SectionKind::Tris && dim != 2)
      schema_error("tris require dim 2", section.number);

    const Index rows = header_count(section, keyword);
    const int width = section_width(doc.kind, doc.dim);
    std::vector<Index> indices;
    for (Index r = 0; r < rows; ++r)
      {
        const auto line = reader.next();
        if (!line)
          schema_error(std::string(keyword) + " section declares " +
                         std::to_string(rows) + " rows, found " + std::to_string(r),
                       section.number);
        if (static_cast<int>(line->tokens.size()) != width)
          schema_error("a row of '" + std::string(keyword) + "' needs " +
                         std::to_string(width) + " indices",
                       line->number);
        for (const auto token : line->tokens)
          {
            const Index v = to_integer(token, line->number);
            if (v < 0 || v >= num_vertices)
              schema_error("vertex index " + std::to_string(v) + " out of range",
                           line->number);
            indices.push_back(v);
          }
      }
    expect_end(reader);

    doc.connectivity = Eigen::Map<const CellMatrix>(indices.data(), rows, width);
    return doc;
  }

  std::string format_mesh_document(const MeshDocument& document)
  {
    std::string out = "meshfmt 1\ndim ";
    append_integer(out, document.dim);
    out += "\nvertices ";
    append_integer(out, document.coordinates.rows());
    out += '\n';
    for (Index v = 0; v < document.coordinates.rows(); ++v)
      {
        for (Index i = 0; i < document.coordinates.cols(); ++i)
          {
            if (i > 0)
              out += ' ';
            append_double(out, document.coordinates(v, i));
          }
        out += '\n';
      }
    out += section_name(document.kind);
    out += ' ';
    append_integer(out, document.connectivity.rows());
    out += '\n';
    for (Index r = 0; r < document.connectivity.rows(); ++r)
      {
        for (Index i = 0; i < document.connectivity.cols(); ++i)
          {
            if (i > 0)
              out += ' ';
            append_integer(out, document.connectivity(r, i));
          }
        out += '\n';
      }
    return out;
  }

  MeshTopology read_mesh(std::string_view text)
  {
    MeshDocument doc = parse_mesh_document(text);
    if (doc.kind != SectionKind::Cells)
      throw Error(ErrorCode::SchemaError,
                  "expected a 'cells' section, found '" +
                    std::string(section_name(doc.kind)) + "'");
    const Index n = doc.coordinates.rows();
    return build_topology(doc.dim, n, std::move(doc.connectivity),
                          std::move(doc.coordinates));
  }

  MeshDocument to_document(const MeshTopology& mesh)
  {
    MeshDocument doc;
    doc.dim = mesh.dim();
    doc.kind = SectionKind::Cells;
    doc.coordinates = mesh.coordinates() ?
                        *mesh.coordinates() :
                        Coordinates::Zero(mesh.num_vertices(), mesh.dim());
    doc.connectivity = mesh.cells();
    return doc;
  }

  std::string write_mesh(const MeshTopology& mesh)
  {
    return format_mesh_document(to_document(mesh));
  }

  EdgeOrientation read_orientation(std::string_view text, const MeshTopology& mesh)
  {
    LineReader reader(text);
    const Line magic = expect_line(reader, "'orientation 1'");
    if (magic.tokens.front() != "orientation" || magic.tokens.size() != 2)
      parse_error("expected 'orientation 1'", magic.number);
    if (magic.tokens[1] != "1")
      schema_error("unsupported orientation format version", magic.number);

    const Line edges_line = expect_line(reader, "'edges'");
    const Index n = header_count(edges_line, "edges");
    if (n != mesh.num_edges())
      schema_error("edges section declares " + std::to_string(n) +
                     " edges, the mesh has " + std::to_string(mesh.num_edges()),
                   edges_line.number);

    EdgeOrientation out(mesh.num_edges(), true);
    std::vector<char> seen(static_cast<std::size_t>(mesh.num_edges()), 0);
    for (Index i = 0; i < n; ++i)
      {
        const auto line = reader.next();
        if (!line)
          schema_error("edges section declares " + std::to_string(n) +
                         " rows, found " + std::to_string(i),
                       edges_line.number);
        if (line->tokens.size() != 2)
          schema_error("an edge row needs 'v_from v_to'", line->number);
        const Index from = to_integer(line->tokens[0], line->number);
        const Index to = to_integer(line->tokens[1], line->number);
        const auto e = mesh.find_edge(from, to);
        if (!e || from == to)
          throw Error(ErrorCode::UnknownEdge,
                      "(" + std::to_string(from) + "," + std::to_string(to) +
                        ") is not an edge of the mesh",
                      line->number);
        auto& mark = seen[static_cast<std::size_t>(*e)];
        if (mark)
          throw Error(ErrorCode::DuplicateEdge,
                      "edge (" + std::to_string(from) + "," + std::to_string(to) +
                        ") listed twice",
                      line->number);
        mark = 1;
        out.forward[*e] = from < to;
      }
    expect_end(reader);
    return out;
  }

  std::string write_orientation(const EdgeOrientation& orientation,
                                const MeshTopology& mesh)
  {
    if (orientation.size() != mesh.num_edges())
      throw Error(ErrorCode::InvalidArgument,
                  "orientation does not match the mesh");
    std::string out = "orientation 1\nedges ";
    append_integer(out, mesh.num_edges());
    out += '\n';
    for (Index e = 0; e < mesh.num_edges(); ++e)
      {
        const auto [a, b] = mesh.edge(e);
        const bool forward = orientation.forward[e];
        append_integer(out, forward ? a : b);
        out += ' ';
        append_integer(out, forward ? b : a);
        out += '\n';
      }
    return out;
  }
} // namespace hexorient
